"""Self-test harness behind ``fusionring check``.

Each check returns a :class:`CheckResult`; nothing raises on a failed
invariant so that a full report is always produced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .burnside import BurnsideRing
from .fusion import FusionSystem
from .groups import normalizer
from .ideals import (enumerate_primes, generators, included, included_by_generators, membership)
from .stable import (AlphaBasis, check_alpha_properties, compute_alpha_basis, from_alpha,
                     is_f_stable, is_f_stable_by_restriction, localize, to_alpha)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _random_element(ring: BurnsideRing, rng: random.Random, bound: int = 5):
    return ring.element([rng.randint(-bound, bound) for _ in range(ring.n)])


def check_table_of_marks(ring: BurnsideRing) -> CheckResult:
    M, n = ring.marks, ring.n
    for i in range(n):
        for j in range(n):
            if M[i][j] and not ring.table.subconj[j][i]:
                return CheckResult("table of marks", False, f"nonzero mark outside order at {i},{j}")
        Q = ring.table.rep(i)
        if M[i][i] != normalizer(ring.group, Q).order // Q.order:
            return CheckResult("table of marks", False, f"bad diagonal at {i}")
    if any(M[i][j] for i in range(n) for j in range(i + 1, n)):
        return CheckResult("table of marks", False, "not lower triangular")
    return CheckResult("table of marks", True)


def check_ring_homomorphism(ring: BurnsideRing, trials: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(trials):
        x, y = _random_element(ring, rng), _random_element(ring, rng)
        gx, gy, gxy = ring.ghost(x), ring.ghost(y), ring.ghost(ring.product(x, y))
        if any(a * b != c for a, b, c in zip(gx, gy, gxy)):
            return CheckResult("mark homomorphism", False, f"fails on {x.dense()} * {y.dense()}")
    return CheckResult("mark homomorphism", True, f"{trials} random pairs")


def check_products(ring: BurnsideRing) -> CheckResult:
    for i in range(ring.n):
        for j in range(ring.n):
            x, y = ring.basis(i), ring.basis(j)
            pointwise = [a * b for a, b in zip(ring.ghost(x), ring.ghost(y))]
            if ring.product(x, y) != ring.unghost(pointwise):
                return CheckResult("double-coset products", False, f"pair {i},{j}")
    return CheckResult("double-coset products", True, f"{ring.n ** 2} pairs")


def check_stability(F: FusionSystem, ring: BurnsideRing) -> CheckResult:
    if F.ambient is None:
        return CheckResult("stability by restriction", True, "skipped: no ambient group")
    for i in range(ring.n):
        x = ring.basis(i)
        if is_f_stable(F, ring, x) != is_f_stable_by_restriction(F, ring, x):
            return CheckResult("stability by restriction", False, f"disagree on [S/{ring.labels[i]}]")
    return CheckResult("stability by restriction", True, f"{ring.n} transitive sets")


def check_alpha(B: AlphaBasis) -> CheckResult:
    try:
        check_alpha_properties(B)
    except AssertionError as exc:
        return CheckResult("alpha basis properties", False, str(exc))
    for c in range(B.n):
        if to_alpha(B, B.alphas[c]) != B.alpha(c):
            return CheckResult("alpha basis properties", False, f"coordinates of alpha_{c}")
    return CheckResult("alpha basis properties", True)


def check_ideals(F: FusionSystem, B: AlphaBasis, primes=(3,)) -> CheckResult:
    ideals = enumerate_primes(F, primes)
    for I in ideals:
        for g in generators(F, B, I):
            if not membership(F, B, I, g):
                return CheckResult("prime ideals", False, f"generator outside {I}")
    for I in ideals:
        for J in ideals:
            if included(F, I, J) != included_by_generators(F, B, I, J):
                return CheckResult("prime ideals", False, f"inclusion {I} <= {J}")
    return CheckResult("prime ideals", True, f"{len(ideals)} ideals")


def check_localization(F: FusionSystem, B: AlphaBasis, trials: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    integral = enumerate_primes(F)
    local = enumerate_primes(F, localized=True)
    for _ in range(trials):
        y = B.element([rng.randint(-6, 6) for _ in range(B.n)])
        x = to_alpha(B, from_alpha(B, y))
        for I, J in zip(integral, local):
            if membership(F, B, I, x) != membership(F, B, J, localize(x, F.p)):
                return CheckResult("localization", False, f"{I} on {x.dense()}")
    return CheckResult("localization", True, f"{trials} random elements")


def run_all(F: FusionSystem) -> list[CheckResult]:
    ring = BurnsideRing(F.S, F.table, F.names)
    try:
        B = compute_alpha_basis(F, ring)
    except AssertionError as exc:
        return [CheckResult("alpha basis construction", False, str(exc))]
    return [
        check_table_of_marks(ring),
        check_ring_homomorphism(ring),
        check_products(ring),
        check_stability(F, ring),
        check_alpha(B),
        check_ideals(F, B),
        check_localization(F, B),
    ]
