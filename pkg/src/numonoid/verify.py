"""Self-contained property checks behind the `verify` CLI command.

Each check exercises one of the toolkit's headline claims at a bound that
keeps the whole run in the ten-second range; the stated full-scale scans
live in the test suite.  Checks report (name, passed, detail) and never
raise on a mere property failure.
"""

import random
from collections import namedtuple
from fractions import Fraction

from . import mcnugget
from .factorizations import (
    delta_set,
    elasticity,
    elasticity_profile,
    factorizations,
    length_set,
    max_length,
    min_length,
    monoid_delta_set,
    monoid_elasticity,
)
from .monoid import NumericalMonoid, frobenius_sylvester
from .omega import omega, omega_threshold, prime_witness

CheckResult = namedtuple("CheckResult", "name passed detail")

CMM_GAPS = [1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19,
            22, 23, 25, 28, 31, 34, 37, 43]


def _members(m, lo, hi):
    return [x for x in range(lo, hi + 1) if x in m]


def check_sylvester():
    rng = random.Random(1729)
    pairs = set()
    while len(pairs) < 50:
        a = rng.randrange(2, 40)
        b = rng.randrange(a + 1, 41)
        from math import gcd
        if gcd(a, b) == 1:
            pairs.add((a, b))
    bad = [(a, b) for a, b in sorted(pairs)
           if frobenius_sylvester(a, b) != NumericalMonoid(a, b).frobenius]
    return not bad, f"50 coprime pairs <= 40, mismatches: {len(bad)}"


def check_frobenius_and_gaps():
    m = mcnugget.MCNUGGET
    s = NumericalMonoid(4, 7, 10)
    ok = (m.frobenius == 43 and m.gaps() == CMM_GAPS
          and s.frobenius == 13 and s.gaps() == [1, 2, 3, 5, 6, 9, 13])
    return ok, "F(<6,9,20>) = 43 with 22 gaps; F(<4,7,10>) = 13"


def check_irreducibles():
    bad = []
    for gens in ((6, 9, 20), (5, 7, 9, 11)):
        m = NumericalMonoid(*gens)
        if tuple(m.irreducibles()) != gens:
            bad.append(gens)
        # definition check: an atom admits no split into two nonzero members
        atoms = [v for v in _members(m, 1, max(gens))
                 if not any(a in m and (v - a) in m for a in range(1, v))]
        if tuple(atoms) != gens:
            bad.append(gens)
    return not bad, "minimal generators = atoms for <6,9,20> and <5,7,9,11>"


def check_trades():
    m = mcnugget.MCNUGGET
    bad = 0
    for x in _members(m, 0, 300):
        zs = factorizations(m, x)
        for a, b, c in zs:
            if b >= 2 and (a + 3, b - 2, c) not in zs:
                bad += 1
            if c >= 3 and (a + 10, b, c - 3) not in zs:
                bad += 1
    return bad == 0, "2x9 <-> 3x6 and 3x20 <-> 10x6 trades, members <= 300"


def check_reference_tables():
    m = mcnugget.MCNUGGET
    exp = mcnugget.table_expansions()
    ls = mcnugget.table_length_sets()
    ok = all(factorizations(m, x) == exp[x] for x in range(51))
    ok = ok and all(length_set(m, x) == ls[x] for x in ls)
    return ok, "canned 0..50 tables equal recomputed values"


def check_max_length_formula():
    m = mcnugget.MCNUGGET
    members = _members(m, 0, 1200)
    bad = [x for x in members if mcnugget.max_length_formula(x) != max_length(m, x)]
    rec = [x for x in members if max_length(m, x + 6) != max_length(m, x) + 1]
    return not bad and not rec, "formula = DP and L(x+6) = L(x)+1, members <= 1200"


def check_min_length_formula():
    m = mcnugget.MCNUGGET
    members = _members(m, 0, 1200)
    bad = [x for x in members if mcnugget.min_length_formula(x) != min_length(m, x)]
    rec = [x for x in members if min_length(m, x + 20) != min_length(m, x) + 1]
    return not bad and not rec, "formula = DP and l(x+20) = l(x)+1, members <= 1200"


def check_length_quasilinearity():
    m = NumericalMonoid(9, 10, 23)
    ok = max_length(m, 50) == 5 and max_length(m, 41) == 3  # fails below 207
    window = [x for x in _members(m, 208, 600)
              if max_length(m, x + 9) != max_length(m, x) + 1]
    return ok and not window, "<9,10,23>: breaks at x = 41, holds for 207 < x <= 600"


def check_elasticity():
    m = mcnugget.MCNUGGET
    rho = monoid_elasticity(m)
    ok = rho == Fraction(10, 3) and elasticity(m, 60) == Fraction(10, 3)
    hits = [x for x, r in elasticity_profile(m, 600) if x and r == rho]
    ok = ok and hits == list(range(60, 601, 60))
    ok = ok and all(r <= rho for _, r in elasticity_profile(m, 600))
    return ok, "rho = 10/3, attained exactly at multiples of 60 (scan to 600)"


def check_delta_formula():
    m = mcnugget.MCNUGGET
    ok = (delta_set(m, 60).gaps == (1, 4)
          and delta_set(m, 91).gaps == (1,)
          and delta_set(m, 211).gaps == (1, 2)
          and delta_set(m, 111) != delta_set(m, 91))
    bad = [x for x in _members(m, 92, 1200)
           if mcnugget.delta_formula(x) != delta_set(m, x)
           or delta_set(m, x + 20) != delta_set(m, x)]
    return ok and not bad, "residue formula and 20-periodicity, members 92..1200"


def check_monoid_delta_set():
    got = monoid_delta_set(mcnugget.MCNUGGET)
    return got.gaps == (1, 2, 3, 4), "union over members <= 21720 is {1,2,3,4}"


def check_omega_formula():
    m = mcnugget.MCNUGGET
    named = {6: 3, 9: 3, 20: 10, 15: 4, 18: 3, 29: 13, 40: 10, 49: 13}
    ok = all(omega(m, x) == w for x, w in named.items())
    members = [x for x in _members(m, 1, 240)]
    bad = [x for x in members if x not in mcnugget.OMEGA_EXCEPTIONS
           and mcnugget.omega_formula(x) != omega(m, x)]
    fails = [x for x in members if omega(m, x + 6) != omega(m, x) + 1]
    return ok and not bad and fails == [6, 12], \
        "formula = bullets and omega(x+6) = omega(x)+1 except {6,12}, members <= 240"


def check_omega_quasilinearity():
    bad = []
    for gens, width in (((6, 9, 20), 60), ((4, 7, 10), 60)):
        m = NumericalMonoid(*gens)
        t = omega_threshold(m)
        n1 = m.minimal_generators[0]
        for x in _members(m, t + 1, t + width):
            if omega(m, x + n1) != omega(m, x) + 1:
                bad.append((gens, x))
    return not bad, "omega(x+n1) = omega(x)+1 above threshold (windows of 60)"


def check_no_primes():
    bad = []
    for gens in ((6, 9, 20), (4, 7, 10)):
        m = NumericalMonoid(*gens)
        for g in m.minimal_generators:
            y, z = prime_witness(m, g)
            if m.divides(g, y) or m.divides(g, z) or not m.divides(g, y + z):
                bad.append((gens, g))
    return not bad, "every minimal generator divides a sum but neither part"


CHECKS = [
    ("sylvester-two-generator-frobenius", check_sylvester),
    ("frobenius-and-gaps", check_frobenius_and_gaps),
    ("irreducibles-are-minimal-generators", check_irreducibles),
    ("factorization-trades", check_trades),
    ("reference-tables", check_reference_tables),
    ("max-length-formula", check_max_length_formula),
    ("min-length-formula", check_min_length_formula),
    ("max-length-quasilinearity", check_length_quasilinearity),
    ("elasticity-formula", check_elasticity),
    ("delta-formula-and-periodicity", check_delta_formula),
    ("delta-set-of-monoid", check_monoid_delta_set),
    ("omega-formula-and-recurrence", check_omega_formula),
    ("omega-quasilinearity", check_omega_quasilinearity),
    ("no-prime-elements", check_no_primes),
]


def run_checks() -> list:
    results = []
    for name, fn in CHECKS:
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"raised {exc!r}"
        results.append(CheckResult(name, passed, detail))
    return results
