"""Numerical monoids: validated generator sets with O(1) membership.

A numerical monoid is the set of all nonnegative integer combinations of
fixed coprime positive generators.  Construction deduplicates and sorts the
generators, drops any that are combinations of the others, and precomputes
the Apery set with respect to the smallest generator; after that membership
tests, gap enumeration, and the Frobenius number are cheap.
"""

from functools import reduce
from math import gcd

from .errors import (
    EmptyGeneratorsError,
    GcdNotOneError,
    GeneratorTooSmallError,
    NonPositiveGeneratorError,
    NotAMemberError,
    NotCoprimeError,
)


def _reachable(target: int, gens) -> bool:
    """True if target is a nonnegative integer combination of gens."""
    if target == 0:
        return True
    if not gens:
        return False
    hit = bytearray(target + 1)
    hit[0] = 1
    for v in range(min(gens), target + 1):
        for g in gens:
            if g <= v and hit[v - g]:
                hit[v] = 1
                break
    return bool(hit[target])


def _minimalize(gens: tuple) -> tuple:
    """Drop every generator that the remaining ones already produce."""
    keep = []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        if not _reachable(g, others):
            keep.append(g)
    return tuple(keep)


def _apery_set(gens: tuple) -> tuple:
    """Least member of each residue class mod the smallest generator.

    Round-robin relaxation: repeatedly try to improve class (j + g) mod n1
    through class j until nothing changes.  Every class is reachable because
    the generators are coprime.
    """
    n1 = gens[0]
    table = [0] + [None] * (n1 - 1)
    changed = True
    while changed:
        changed = False
        for j in range(n1):
            base = table[j]
            if base is None:
                continue
            for g in gens[1:]:
                t = (j + g) % n1
                cand = base + g
                if table[t] is None or cand < table[t]:
                    table[t] = cand
                    changed = True
    return tuple(table)


class NumericalMonoid:
    """An additive submonoid of the nonnegative integers.

    Instances are immutable after construction and safe to share between
    threads; every operation is a pure function of its arguments.

    >>> m = NumericalMonoid(6, 9, 20)
    >>> 43 in m, 44 in m
    (False, True)
    >>> m.frobenius
    43
    """

    __slots__ = ("_input", "_gens", "_apery")

    def __init__(self, *generators):
        if len(generators) == 1 and not isinstance(generators[0], int):
            generators = tuple(generators[0])
        if not generators:
            raise EmptyGeneratorsError("at least one generator is required")
        for g in generators:
            if not isinstance(g, int) or isinstance(g, bool):
                raise TypeError(f"generators must be integers, got {g!r}")
            if g < 1:
                raise NonPositiveGeneratorError(
                    f"generators must be positive, got {g}")
        self._input = tuple(generators)
        deduped = tuple(sorted(set(generators)))
        if reduce(gcd, deduped) != 1:
            raise GcdNotOneError(
                f"gcd of {list(deduped)} is {reduce(gcd, deduped)}, not 1")
        self._gens = _minimalize(deduped)
        self._apery = _apery_set(self._gens)

    @property
    def input_generators(self) -> tuple:
        """The generators exactly as given to the constructor."""
        return self._input

    @property
    def minimal_generators(self) -> tuple:
        """The unique minimal generating set, strictly increasing."""
        return self._gens

    @property
    def apery_table(self) -> tuple:
        """Entry j is the least member congruent to j mod the smallest generator."""
        return self._apery

    @property
    def multiplicity(self) -> int:
        """The smallest minimal generator."""
        return self._gens[0]

    @property
    def frobenius(self) -> int:
        """Largest integer outside the monoid; -1 when there are no gaps."""
        return max(self._apery) - self._gens[0]

    def contains(self, x: int) -> bool:
        """Membership test; negative inputs are simply not members."""
        if x < 0:
            return False
        return x >= self._apery[x % self._gens[0]]

    __contains__ = contains

    def gaps(self) -> list:
        """All nonnegative integers outside the monoid, ascending."""
        n1 = self._gens[0]
        out = []
        for j, least in enumerate(self._apery):
            out.extend(range(j, least, n1))
        out.sort()
        return out

    def divides(self, x: int, y: int) -> bool:
        """True when y - x is a member, i.e. y = x + z for some member z."""
        if x not in self:
            raise NotAMemberError(f"{x} is not in {self}")
        if y not in self:
            raise NotAMemberError(f"{y} is not in {self}")
        return self.contains(y - x)

    def irreducibles(self) -> list:
        """The elements with no nontrivial splitting: the minimal generators."""
        return list(self._gens)

    def __eq__(self, other):
        if isinstance(other, NumericalMonoid):
            return self._gens == other._gens
        return NotImplemented

    def __hash__(self):
        return hash(self._gens)

    def __repr__(self):
        return f"NumericalMonoid{self._gens}"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self._gens) + ">"


def frobenius_sylvester(a: int, b: int) -> int:
    """Frobenius number of a two-generator monoid: ab - a - b."""
    if a < 2 or b < 2:
        raise GeneratorTooSmallError(
            f"both generators must be >= 2, got {a} and {b}")
    if gcd(a, b) != 1:
        raise NotCoprimeError(f"{a} and {b} share the factor {gcd(a, b)}")
    return a * b - a - b
