import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionring.burnside import TRANSITIVE, BurnsideElement
from fusionring.errors import DenominatorDivisibleByP, NotFStable, NotIntegral
from fusionring.fusion import fully_normalized_choices, fusion_from_ambient, with_representatives
from fusionring.groups import group_from_permutations
from fusionring.stable import (PLocal, compute_alpha_basis, from_alpha, ghost_alpha,
                               is_f_stable, is_f_stable_by_restriction, localize, product_alpha,
                               to_alpha, transitive_decomposition)

from worked_examples import ALPHA_A6, ALPHA_S4

BOX = 3


def effective_stable_box(F, ring, bound=BOX):
    """All effective F-stable elements with coefficients in [0, bound], as an int array."""
    grid = np.array(list(itertools.product(range(bound + 1), repeat=ring.n)), dtype=np.int64)
    ghosts = grid @ np.array(ring.marks, dtype=np.int64)
    keep = np.ones(len(grid), dtype=bool)
    for cls in F.f_classes:
        for j in cls[1:]:
            keep &= ghosts[:, j] == ghosts[:, cls[0]]
    return grid[keep]


def irreducibles(stable):
    """Nonzero elements with no proper nonzero stable summand.

    Swept by coefficient sum: an element is reducible exactly when it
    dominates an irreducible element of smaller sum.
    """
    stable = stable[stable.any(axis=1)]
    sums = stable.sum(axis=1)
    found = np.zeros((0, stable.shape[1]), dtype=stable.dtype)
    for level in np.unique(sums):
        layer = stable[sums == level]
        if len(found):
            dominated = (layer[:, None, :] >= found[None, :, :]).all(axis=2).any(axis=1)
            layer = layer[~dominated]
        found = np.vstack([found, layer])
    return sorted(map(tuple, found.tolist()))


@pytest.mark.parametrize("key", ["D8", "S4", "A6"])
def test_alpha_equals_irreducible_stable_sets(fusion_systems, bases, key):
    F, B = fusion_systems[key], bases[key]
    stable = effective_stable_box(F, B.ring)
    expected = irreducibles(stable)
    got = sorted(tuple(a.dense()) for a in B.alphas)
    assert got == expected


@pytest.mark.parametrize("key", ["D8", "S4", "A6"])
def test_box_elements_are_nonnegative_alpha_combinations(fusion_systems, bases, key):
    F, B = fusion_systems[key], bases[key]
    A = np.array([a.dense() for a in B.alphas], dtype=np.int64)
    box = effective_stable_box(F, B.ring)
    lam, *_ = np.linalg.lstsq(A.T.astype(float), box.T.astype(float), rcond=None)
    lam = np.rint(lam).astype(np.int64).T
    assert (lam @ A == box).all()
    assert (lam >= 0).all()
    # exact coordinates agree on a sample
    for row in np.random.default_rng(0).choice(len(box), size=min(200, len(box)), replace=False):
        got = to_alpha(B, B.ring.element(list(map(int, box[row]))))
        assert got.dense() == lam[row].tolist()


def test_worked_alpha_vectors(bases):
    for key, expected in (("S4", ALPHA_S4), ("A6", ALPHA_A6)):
        B = bases[key]
        got = dict(zip(B.F.labels(), B.alpha_marks))
        assert got == expected


def test_a6_alpha_z_decomposition(bases):
    B = bases["A6"]
    s = B.F.s_labels()
    assert [(a, s[i]) for a, i in transitive_decomposition(B, 1)] == [(1, "Z"), (2, "<rs>"),
                                                                     (2, "<s>")]


def test_inner_alpha_is_transitive(bases):
    B = bases["D8"]
    for c in range(B.n):
        assert B.alphas[c] == B.ring.basis(B.F.fully_normalized[c])


def test_to_alpha_example(bases):
    B = bases["A6"]
    v = (28, 4, 4, 4, 0, 0, 0, 0)
    x = B.ring.unghost(v)
    assert to_alpha(B, x) == B.alpha(1) + B.alpha(0)
    assert ghost_alpha(B, B.alpha(1) + B.alpha(0)) == v


def test_to_alpha_rejects(bases):
    B = bases["A6"]
    s = B.F.s_labels()
    with pytest.raises(NotFStable):
        to_alpha(B, B.ring.basis(s.index("<s>")))
    half = BurnsideElement.from_coeffs(TRANSITIVE, B.ring.n, {7: Fraction(1, 2)})
    with pytest.raises(NotIntegral):
        to_alpha(B, half)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=6, max_size=6),
       st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_alpha_coordinates_round_trip(bases, a, b):
    B = bases["A6"]
    x, y = B.element(a), B.element(b)
    assert to_alpha(B, from_alpha(B, x)) == x
    xy = product_alpha(B, x, y)
    assert ghost_alpha(B, xy) == tuple(u * v for u, v in zip(ghost_alpha(B, x), ghost_alpha(B, y)))


@pytest.mark.parametrize("key", ["D8", "S4", "A6"])
def test_stability_agrees_with_restriction(fusion_systems, bases, key):
    F, ring = fusion_systems[key], bases[key].ring
    for i in range(ring.n):
        x = ring.basis(i)
        assert is_f_stable(F, ring, x) == is_f_stable_by_restriction(F, ring, x)
    for a in bases[key].alphas:
        assert is_f_stable_by_restriction(F, ring, a)


def a4_fusion():
    G = group_from_permutations(4, [[1, 2, 0, 3], [1, 0, 3, 2]], name="A4")
    return fusion_from_ambient(G, 2)


def test_tie_break_independence():
    # in A4 the three involution subgroups of V4 are fused with equal normalizers
    F = a4_fusion()
    choices = fully_normalized_choices(F)
    assert max(len(c) for c in choices) == 3
    reference = compute_alpha_basis(F).alpha_marks
    for pick in itertools.product(*choices):
        G = with_representatives(F, dict(enumerate(pick)))
        assert compute_alpha_basis(G).alpha_marks == reference


def test_a4_alpha():
    F = a4_fusion()
    B = compute_alpha_basis(F)
    assert F.n == 3
    # alpha of the involution class: [V/<a>] + [V/<b>] + [V/<c>] minus nothing
    assert B.alpha_marks[1] == (6, 2, 2, 2, 0)


# p-local scalars

def test_plocal_rejects_bad_denominator():
    with pytest.raises(DenominatorDivisibleByP):
        PLocal(Fraction(1, 2), 2)
    with pytest.raises(DenominatorDivisibleByP):
        PLocal(1, 2) / 4
    with pytest.raises(DenominatorDivisibleByP):
        PLocal(1, 2) + PLocal(1, 3)


def test_plocal_arithmetic():
    a, b = PLocal(Fraction(1, 3), 2), PLocal(5, 2)
    assert a + b == Fraction(16, 3)
    assert b - a == Fraction(14, 3) and 1 - a == Fraction(2, 3)
    assert a * b == Fraction(5, 3) and 3 * a == 1
    assert b / 5 == 1 and -a == Fraction(-1, 3)
    assert a < b and b >= a and a <= a and b > 0
    assert (a.num, a.den) == (1, 3)
    assert PLocal(12, 2).valuation() == 2
    assert PLocal(0, 2).valuation() == float("inf")
    assert str(a) == "1/3"


@given(st.fractions(max_denominator=50), st.sampled_from([2, 3, 5]))
def test_plocal_membership(q, p):
    if q.denominator % p:
        assert PLocal(q, p).value == q
    else:
        with pytest.raises(DenominatorDivisibleByP):
            PLocal(q, p)


def test_localize(bases):
    B = bases["S4"]
    y = localize(B.alpha(2), 2)
    assert y.p == 2 and y[2] == PLocal(1, 2)
    x = B.element({1: Fraction(1, 3)}, p=2)
    assert to_alpha(B, from_alpha(B, x)) == x
