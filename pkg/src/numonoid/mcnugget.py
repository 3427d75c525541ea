"""Closed forms and canned reference data for the Chicken McNugget monoid.

The monoid generated by 6, 9, and 20 (the classic McNugget pack sizes) is
regular enough that its length, delta, and omega invariants reduce to
residue-class formulas.  Everything here is cross-validated against the
generic modules by the test suite; the canned tables ship as JSON fixtures.
"""

import json
from functools import cache
from importlib import resources

from .errors import (
    BelowFormulaRangeError,
    ExceptionalElementError,
    NotAMemberError,
    ZeroElementError,
)
from .factorizations import DeltaSet, FactorizationSet, LengthSet
from .monoid import NumericalMonoid
from .omega import omega as _bullet_omega

MCNUGGET = NumericalMonoid(6, 9, 20)

# offset added to q in L(x) with x = 6q + r
_MAX_LENGTH_OFFSET = {0: 0, 1: -5, 2: -2, 3: 0, 4: -4, 5: -2}

# offset added to q in l(x) with x = 20q + r
_MIN_LENGTH_OFFSET = {
    0: 0,
    6: 1, 9: 1,
    1: 2, 4: 2, 7: 2, 12: 2, 15: 2, 18: 2,
    2: 3, 5: 3, 10: 3, 13: 3, 16: 3,
    3: 4, 8: 4, 11: 4, 14: 4, 19: 4,
    17: 5,
}

# delta set by residue mod 20, valid for members >= 92
_DELTA_BY_RESIDUE = {
    **{r: (1,) for r in (3, 8, 14, 17)},
    **{r: (1, 2) for r in (2, 5, 10, 11, 16, 19)},
    **{r: (1, 3) for r in (1, 4, 7, 12, 13, 18)},
    **{r: (1, 4) for r in (0, 6, 9, 15)},
}

# offset added to q in omega(x) with x = 6q + r, excluding x in {6, 12}
_OMEGA_OFFSET = {0: 0, 1: 5, 2: 7, 3: 2, 4: 4, 5: 9}

OMEGA_EXCEPTIONS = (6, 12)


def _require_member(x):
    if x not in MCNUGGET:
        raise NotAMemberError(f"{x} is not in {MCNUGGET}")


def max_length_formula(x: int) -> int:
    """Longest factorization length of x, by residue mod 6."""
    _require_member(x)
    q, r = divmod(x, 6)
    return q + _MAX_LENGTH_OFFSET[r]


def min_length_formula(x: int) -> int:
    """Shortest factorization length of x, by residue mod 20."""
    _require_member(x)
    q, r = divmod(x, 20)
    return q + _MIN_LENGTH_OFFSET[r]


def delta_formula(x: int) -> DeltaSet:
    """Delta set of x by residue mod 20; only valid from 92 up."""
    _require_member(x)
    if x < 92:
        raise BelowFormulaRangeError(
            f"the residue formula needs x >= 92, got {x}; use delta_set")
    return DeltaSet(_DELTA_BY_RESIDUE[x % 20])


def omega_formula(x: int) -> int:
    """Omega-primality of x by residue mod 6; 6 and 12 are excluded."""
    if x == 0:
        raise ZeroElementError("omega is only defined for nonzero elements")
    _require_member(x)
    if x in OMEGA_EXCEPTIONS:
        raise ExceptionalElementError(
            f"{x} falls outside the residue formula; use the bullet computation")
    q, r = divmod(x, 6)
    return q + _OMEGA_OFFSET[r]


def omega(x: int) -> int:
    """Omega-primality of x: residue formula, bullet enumeration for 6 and 12."""
    if x in OMEGA_EXCEPTIONS:
        return _bullet_omega(MCNUGGET, x)
    return omega_formula(x)


@cache
def _fixture(name: str) -> dict:
    text = resources.files(__package__).joinpath("_data", name).read_text()
    return json.loads(text)


def table_expansions() -> dict:
    """Canned factorization sets for 0..50, from the shipped fixture."""
    data = _fixture("mcnugget_expansions.json")["expansions"]
    return {
        int(x): FactorizationSet(int(x), tuple(tuple(c) for c in rows))
        for x, rows in data.items()
    }


def table_length_sets() -> dict:
    """Canned length sets for the members up to 50, from the shipped fixture."""
    data = _fixture("mcnugget_length_sets.json")["length_sets"]
    return {
        int(x): LengthSet(int(x), tuple(row["lengths"]))
        for x, row in data.items()
    }
