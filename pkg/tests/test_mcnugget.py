import json
from importlib import resources

import pytest

from numonoid import (
    BelowFormulaRangeError,
    ExceptionalElementError,
    NotAMemberError,
    ZeroElementError,
    delta_set,
    factorizations,
    length_set,
    max_length,
    min_length,
    omega,
)
from numonoid import mcnugget


class TestMaxLengthFormula:
    @pytest.mark.parametrize("x,expected", [(42, 7), (49, 3), (6, 1), (9, 1),
                                            (20, 1), (29, 2), (40, 2)])
    def test_examples(self, x, expected):
        assert mcnugget.max_length_formula(x) == expected

    def test_nonmember(self):
        with pytest.raises(NotAMemberError):
            mcnugget.max_length_formula(43)

    def test_agrees_with_dp_to_600(self, cmm):
        for x in range(601):
            if x in cmm:
                assert mcnugget.max_length_formula(x) == max_length(cmm, x)


class TestMinLengthFormula:
    @pytest.mark.parametrize("x,expected", [(48, 6), (35, 3), (20, 1), (0, 0),
                                            (63, 7), (57, 7)])
    def test_examples(self, x, expected):
        # 63 and 57 pin the residue-3 and residue-17 cases
        assert mcnugget.min_length_formula(x) == expected

    def test_nonmember(self):
        with pytest.raises(NotAMemberError):
            mcnugget.min_length_formula(22)

    def test_agrees_with_dp_to_600(self, cmm):
        for x in range(601):
            if x in cmm:
                assert mcnugget.min_length_formula(x) == min_length(cmm, x)


class TestDeltaFormula:
    @pytest.mark.parametrize("x,expected", [(211, (1, 2)), (100, (1, 4)),
                                            (92, (1, 3)), (95, (1, 4))])
    def test_examples(self, cmm, x, expected):
        assert mcnugget.delta_formula(x).gaps == expected
        assert delta_set(cmm, x).gaps == expected

    def test_below_range_refused(self):
        # the formula bucket for 91 would wrongly give {1,2}
        with pytest.raises(BelowFormulaRangeError):
            mcnugget.delta_formula(60)
        with pytest.raises(BelowFormulaRangeError):
            mcnugget.delta_formula(91)

    def test_nonmember(self):
        # membership is checked before the range; 43 trips the former
        with pytest.raises(NotAMemberError):
            mcnugget.delta_formula(43)

    def test_agrees_with_dp_to_600(self, cmm):
        for x in range(92, 601):
            if x in cmm:
                assert mcnugget.delta_formula(x) == delta_set(cmm, x)


class TestOmegaFormula:
    @pytest.mark.parametrize("x,expected", [(20, 10), (29, 13), (18, 3),
                                            (9, 3), (15, 4), (40, 10), (49, 13)])
    def test_examples(self, x, expected):
        assert mcnugget.omega_formula(x) == expected

    def test_exceptional_elements_refused(self):
        with pytest.raises(ExceptionalElementError):
            mcnugget.omega_formula(6)
        with pytest.raises(ExceptionalElementError):
            mcnugget.omega_formula(12)

    def test_zero_and_nonmember(self):
        with pytest.raises(ZeroElementError):
            mcnugget.omega_formula(0)
        with pytest.raises(NotAMemberError):
            mcnugget.omega_formula(43)

    def test_dispatch_covers_exceptions(self, cmm):
        assert mcnugget.omega(6) == 3
        assert mcnugget.omega(12) == 3
        for x in (18, 20, 29, 100, 121):
            assert mcnugget.omega(x) == omega(cmm, x)

    def test_agrees_with_bullets_to_150(self, cmm):
        for x in range(1, 151):
            if x in cmm and x not in mcnugget.OMEGA_EXCEPTIONS:
                assert mcnugget.omega_formula(x) == omega(cmm, x)


class TestCannedTables:
    def test_expansion_rows(self):
        table = mcnugget.table_expansions()
        assert table[36].factorizations == ((6, 0, 0), (3, 2, 0), (0, 4, 0))
        assert table[43].factorizations == ()
        assert table[0].factorizations == ((0, 0, 0),)
        assert len(table) == 51
        assert sum(1 for fs in table.values() if not fs) == 22

    def test_length_set_rows(self):
        table = mcnugget.table_length_sets()
        assert table[36].lengths == (4, 5, 6)
        assert (table[36].min, table[36].max) == (4, 6)
        assert table[44].lengths == (4, 5)
        assert table[0].lengths == (0,)
        assert len(table) == 29

    def test_tables_equal_recomputation(self, cmm):
        exp = mcnugget.table_expansions()
        for x in range(51):
            assert factorizations(cmm, x) == exp[x]
        ls = mcnugget.table_length_sets()
        for x, row in ls.items():
            assert length_set(cmm, x) == row

    def test_fixtures_are_versioned(self):
        for name in ("mcnugget_expansions.json", "mcnugget_length_sets.json"):
            raw = resources.files("numonoid").joinpath("_data", name).read_text()
            data = json.loads(raw)
            assert data["version"] == 1
            assert data["generators"] == [6, 9, 20]
