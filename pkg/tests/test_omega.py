import pytest

from numonoid import (
    NotAMemberError,
    NumericalMonoid,
    SingleGeneratorError,
    ZeroElementError,
    bullets,
    omega,
    omega_threshold,
    prime_witness,
)
from oracles import brute_prime_witness, omega_by_definition

OMEGA_KNOWN = {6: 3, 9: 3, 20: 10, 15: 4, 18: 3, 29: 13, 40: 10, 49: 13,
               12: 3}  # 12 pinned by the definitional oracle below


class TestBullets:
    def test_complete_list_for_6(self, cmm):
        got = [b.coords for b in bullets(cmm, 6)]
        assert got == [(0, 0, 3), (0, 2, 0), (1, 0, 0)]

    def test_maximal_bullet_for_6(self, cmm):
        top = bullets(cmm, 6)[0]
        assert top.coords == (0, 0, 3) and top.length == 3

    def test_unit_vector_is_a_bullet_of_first_generator(self, cmm, stamps):
        for m in (cmm, stamps):
            k = len(m.minimal_generators)
            unit = tuple(1 if i == 0 else 0 for i in range(k))
            assert unit in [b.coords for b in bullets(m, m.minimal_generators[0])]

    @pytest.mark.parametrize("x", [6, 9, 20, 26, 35, 44])
    def test_defining_predicates(self, cmm, x):
        gens = cmm.minimal_generators
        for b in bullets(cmm, x):
            value = sum(c * g for c, g in zip(b.coords, gens))
            assert cmm.contains(value - x)
            for i, c in enumerate(b.coords):
                if c > 0:
                    assert not cmm.contains(value - gens[i] - x)

    def test_sorted_by_length_then_coords_descending(self, cmm):
        bl = bullets(cmm, 18)
        keys = [(b.length, b.coords) for b in bl]
        assert keys == sorted(keys, reverse=True)

    def test_errors(self, cmm):
        with pytest.raises(ZeroElementError):
            bullets(cmm, 0)
        with pytest.raises(NotAMemberError):
            bullets(cmm, 43)


class TestOmega:
    def test_known_values(self, cmm):
        for x, expected in OMEGA_KNOWN.items():
            assert omega(cmm, x) == expected

    def test_matches_definition_up_to_60(self, cmm):
        for x in range(1, 61):
            if x in cmm:
                w = omega(cmm, x)
                assert omega_by_definition((6, 9, 20), x, w + 2) == w

    def test_whole_numbers(self):
        # in <1> the only bullet for x is x copies of 1
        m = NumericalMonoid(1)
        assert omega(m, 5) == 5

    def test_quasilinear_window(self, cmm):
        t = omega_threshold(cmm)
        for x in range(t + 1, t + 61):
            if x in cmm:
                assert omega(cmm, x + 6) == omega(cmm, x) + 1

    def test_errors(self, cmm):
        with pytest.raises(ZeroElementError):
            omega(cmm, 0)
        with pytest.raises(NotAMemberError):
            omega(cmm, 25)


class TestPrimeWitness:
    def test_mcnugget_6(self, cmm):
        assert prime_witness(cmm, 6) == (9, 9)

    def test_lexicographically_least(self, cmm):
        got = prime_witness(cmm, 9)
        bound = 9 + cmm.frobenius + 20
        assert got == brute_prime_witness((6, 9, 20), 9, bound) == (6, 12)

    @pytest.mark.parametrize("gens,x", [((6, 9, 20), 6), ((6, 9, 20), 9),
                                        ((6, 9, 20), 20), ((4, 7, 10), 4),
                                        ((4, 7, 10), 7), ((4, 7, 10), 10)])
    def test_witness_predicate(self, gens, x):
        m = NumericalMonoid(*gens)
        y, z = prime_witness(m, x)
        assert y in m and z in m
        assert m.divides(x, y + z)
        assert not m.divides(x, y)
        assert not m.divides(x, z)

    def test_errors(self, cmm):
        with pytest.raises(NotAMemberError):
            prime_witness(cmm, 43)
        with pytest.raises(ZeroElementError):
            prime_witness(cmm, 0)


class TestOmegaThreshold:
    def test_values(self, cmm, stamps):
        assert omega_threshold(cmm) == 104          # (43+9)/(9/6-1)
        assert omega_threshold(NumericalMonoid(2, 3)) == 8
        assert omega_threshold(stamps) == 27        # ceil((13+7)/(3/4))

    def test_single_generator(self):
        with pytest.raises(SingleGeneratorError):
            omega_threshold(NumericalMonoid(1))

    def test_first_generator_is_never_prime(self):
        for gens in ((6, 9, 20), (4, 7, 10), (2, 3), (9, 10, 23)):
            m = NumericalMonoid(*gens)
            assert omega(m, m.minimal_generators[0]) >= 2
