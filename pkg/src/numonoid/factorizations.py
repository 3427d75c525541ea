"""Factorization sets, length sets, and the derived invariants.

A factorization of x is a tuple of nonnegative exponents aligned with the
monoid's minimal generators (ascending), so sum(c * g) = x.  Complete
factorization sets come from bounded recursive descent on the largest
generator; length sets come from a boolean DP over reachable (value, length)
pairs, which is what makes the monoid-wide delta scan affordable.

Module caches are keyed by the minimal generator tuple and only ever grow
with deterministic values, so concurrent scans stay consistent.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeElementError, NotAMemberError
from .monoid import NumericalMonoid

_FACTORIZATION_CACHE: dict = {}
_LENGTH_MASK_CACHE: dict = {}
_MASK_LOCK = threading.Lock()  # mask lists are index-addressed; appends must not interleave


def factorization_value(m: NumericalMonoid, coords) -> int:
    return sum(c * g for c, g in zip(coords, m.minimal_generators))


def factorization_length(coords) -> int:
    return sum(coords)


@dataclass(frozen=True)
class FactorizationSet:
    """Every factorization of one element, sorted lexicographically descending."""

    element: int
    factorizations: tuple

    def __iter__(self):
        return iter(self.factorizations)

    def __len__(self):
        return len(self.factorizations)

    def __contains__(self, coords):
        return tuple(coords) in self.factorizations

    def __bool__(self):
        return bool(self.factorizations)

    def lengths(self) -> list:
        return sorted({sum(c) for c in self.factorizations})


@dataclass(frozen=True)
class LengthSet:
    """Strictly increasing factorization lengths of one element."""

    element: int
    lengths: tuple

    @property
    def min(self) -> int:
        return self.lengths[0]

    @property
    def max(self) -> int:
        return self.lengths[-1]

    def elasticity(self) -> Fraction:
        if self.max == 0:
            return Fraction(1)
        return Fraction(self.max, self.min)

    def delta(self) -> "DeltaSet":
        gaps = sorted({b - a for a, b in zip(self.lengths, self.lengths[1:])})
        return DeltaSet(tuple(gaps))

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def __contains__(self, n):
        return n in self.lengths


@dataclass(frozen=True)
class DeltaSet:
    """Sorted set of gaps between consecutive factorization lengths."""

    gaps: tuple

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)

    def __contains__(self, n):
        return n in self.gaps

    def __bool__(self):
        return bool(self.gaps)

    def __str__(self):
        return "{" + ",".join(str(g) for g in self.gaps) + "}"


def _descend(gens: tuple, x: int) -> list:
    # fix the count of the largest generator first, from x // g down to 0
    if len(gens) == 1:
        g = gens[0]
        return [(x // g,)] if x % g == 0 else []
    head, g = gens[:-1], gens[-1]
    out = []
    for c in range(x // g, -1, -1):
        for rest in _descend(head, x - c * g):
            out.append(rest + (c,))
    return out


def _raw_factorizations(m: NumericalMonoid, x: int) -> tuple:
    per = _FACTORIZATION_CACHE.setdefault(m.minimal_generators, {})
    hit = per.get(x)
    if hit is None:
        hit = per[x] = tuple(sorted(_descend(m.minimal_generators, x), reverse=True))
    return hit


def factorizations(m: NumericalMonoid, x: int) -> FactorizationSet:
    """The complete set of factorizations of x; empty iff x is not a member."""
    if x < 0:
        raise NegativeElementError(f"{x} is negative")
    return FactorizationSet(x, _raw_factorizations(m, x))


def _length_masks(m: NumericalMonoid, bound: int) -> list:
    """masks[v] has bit l set iff v has a factorization of length l (0 if v not a member)."""
    gens = m.minimal_generators
    masks = _LENGTH_MASK_CACHE.setdefault(gens, [1])
    if len(masks) <= bound:
        with _MASK_LOCK:
            for v in range(len(masks), bound + 1):
                acc = 0
                for g in gens:
                    if g <= v:
                        acc |= masks[v - g]
                masks.append(acc << 1 if acc else 0)
    return masks


def _member_mask(m: NumericalMonoid, x: int) -> int:
    if x < 0:
        raise NegativeElementError(f"{x} is negative")
    mask = _length_masks(m, x)[x]
    if not mask:
        raise NotAMemberError(f"{x} is not in {m}")
    return mask


def _mask_bits(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _mask_gaps(mask: int) -> tuple:
    # runs of zeros between consecutive set bits; len(run) + 1 is the gap
    runs = bin(mask)[2:].split("1")
    return tuple(sorted({len(z) + 1 for z in runs[1:-1]}))


def length_set(m: NumericalMonoid, x: int) -> LengthSet:
    """All factorization lengths of x, via the (value, length) reachability DP."""
    return LengthSet(x, _mask_bits(_member_mask(m, x)))


def max_length(m: NumericalMonoid, x: int) -> int:
    return _member_mask(m, x).bit_length() - 1


def min_length(m: NumericalMonoid, x: int) -> int:
    mask = _member_mask(m, x)
    return (mask & -mask).bit_length() - 1


def elasticity(m: NumericalMonoid, x: int) -> Fraction:
    """Ratio of the longest to the shortest factorization length; 1 for x = 0."""
    mask = _member_mask(m, x)
    lo = (mask & -mask).bit_length() - 1
    if lo == 0:
        return Fraction(1)
    return Fraction(mask.bit_length() - 1, lo)


def monoid_elasticity(m: NumericalMonoid) -> Fraction:
    """Supremum of element elasticities: largest over smallest minimal generator."""
    gens = m.minimal_generators
    return Fraction(gens[-1], gens[0])


def elasticity_profile(m: NumericalMonoid, limit: int) -> list:
    """(x, elasticity(x)) for every member x <= limit, ascending."""
    masks = _length_masks(m, limit)
    rows = []
    for v in range(limit + 1):
        mask = masks[v]
        if not mask:
            continue
        lo = (mask & -mask).bit_length() - 1
        rho = Fraction(mask.bit_length() - 1, lo) if lo else Fraction(1)
        rows.append((v, rho))
    return rows


def delta_set(m: NumericalMonoid, x: int) -> DeltaSet:
    """Gaps between consecutive lengths of x."""
    return DeltaSet(_mask_gaps(_member_mask(m, x)))


def monoid_delta_set(m: NumericalMonoid) -> DeltaSet:
    """Union of all element delta sets.

    Element delta sets are eventually periodic, so the union over members up
    to 2*k*n2*nk^2 + n1*nk already equals the union over the whole monoid.
    """
    gens = m.minimal_generators
    if len(gens) == 1:
        return DeltaSet(())
    k, n1, n2, nk = len(gens), gens[0], gens[1], gens[-1]
    bound = 2 * k * n2 * nk * nk + n1 * nk
    masks = _length_masks(m, bound)
    found = set()
    for v in range(bound + 1):
        mask = masks[v]
        if mask and mask & (mask - 1):
            runs = bin(mask)[2:].split("1")
            for z in runs[1:-1]:
                found.add(len(z) + 1)
    return DeltaSet(tuple(sorted(found)))


def unique_factorization_elements(m: NumericalMonoid, limit: int) -> list:
    """Nonzero members x <= limit with exactly one factorization."""
    if limit < 0:
        return []
    counts = [0] * (limit + 1)
    counts[0] = 1
    for g in m.minimal_generators:
        for v in range(g, limit + 1):
            counts[v] += counts[v - g]
    return [v for v in range(1, limit + 1) if counts[v] == 1]
