"""Omega-primality via bullet enumeration, plus non-primeness witnesses.

A bullet for x is a factorization-shaped vector z whose value x divides, but
which stops being divisible by x as soon as any single generator is removed.
omega(x) is the maximum bullet length; a prime element would have omega 1,
and no element of a numerical monoid is prime.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import (
    NotAMemberError,
    SingleGeneratorError,
    WitnessNotFoundError,
    ZeroElementError,
)
from .factorizations import _raw_factorizations
from .monoid import NumericalMonoid


@dataclass(frozen=True)
class Bullet:
    """A maximal-support divisibility witness for one element."""

    coords: tuple
    target: int

    @property
    def length(self) -> int:
        return sum(self.coords)


def _require_nonzero_member(m, x):
    if x == 0:
        raise ZeroElementError("omega-style invariants need a nonzero element")
    if x not in m:
        raise NotAMemberError(f"{x} is not in {m}")


def _bullet_coords(m, x):
    # Removing generator g from a bullet must leave a non-member difference,
    # which caps its value at x + frobenius + g; the largest generator caps all.
    gens = m.minimal_generators
    top = x + m.frobenius + gens[-1]
    for y in range(x, top + 1):
        if not m.contains(y - x):
            continue
        # every factorization of y has value y, so the removal test per
        # generator depends on y alone: z is a bullet iff its support avoids
        # every index where removal keeps divisibility
        blocked = [i for i, g in enumerate(gens) if m.contains(y - g - x)]
        if blocked:
            for coords in _raw_factorizations(m, y):
                if all(coords[i] == 0 for i in blocked):
                    yield coords
        else:
            yield from _raw_factorizations(m, y)


def bullets(m: NumericalMonoid, x: int) -> list:
    """All bullets for x, sorted by length then coordinates, both descending."""
    _require_nonzero_member(m, x)
    found = [Bullet(c, x) for c in _bullet_coords(m, x)]
    found.sort(key=lambda b: (b.length, b.coords), reverse=True)
    return found


def omega(m: NumericalMonoid, x: int) -> int:
    """Maximum bullet length of x."""
    _require_nonzero_member(m, x)
    return max(sum(c) for c in _bullet_coords(m, x))


def omega_profile(m: NumericalMonoid, limit: int) -> list:
    """(x, omega(x)) for every nonzero member x <= limit, ascending."""
    return [(v, omega(m, v)) for v in range(1, limit + 1) if v in m]


def prime_witness(m: NumericalMonoid, x: int) -> tuple:
    """Lexicographically least members (y, z) with x | y + z but x | neither."""
    _require_nonzero_member(m, x)
    bound = x + m.frobenius + m.minimal_generators[-1]
    members = [v for v in range(bound + 1) if v in m]
    for y in members:
        if m.contains(y - x):
            continue
        for z in members:
            if m.contains(z - x):
                continue
            if m.contains(y + z - x):
                return (y, z)
    raise WitnessNotFoundError(
        f"no witness for {x} with both parts <= {bound}")


def omega_threshold(m: NumericalMonoid) -> int:
    """Ceiling of the bound above which omega(x + n1) = omega(x) + 1 holds."""
    gens = m.minimal_generators
    if len(gens) < 2:
        raise SingleGeneratorError("the threshold needs at least two generators")
    n1, n2 = gens[0], gens[1]
    return ceil(Fraction(m.frobenius + n2) / (Fraction(n2, n1) - 1))
