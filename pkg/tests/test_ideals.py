import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from fusionring.errors import RingMismatch
from fusionring.ideals import (INTEGRAL, LOCAL, IdealDescriptor, enumerate_primes, equal,
                               generators, in_kernel, included, included_by_generators, is_prime,
                               membership, minimal_nonmember_alpha, prime_ideal,
                               residue_characteristic)
from fusionring.stable import localize, product_alpha

from worked_examples import IDEALS_A6, IDEALS_S4

KEYS = ["D8", "S4", "A6"]


def listing(F, B, localized):
    labels = F.labels()
    out = []
    for I in enumerate_primes(F, localized=localized):
        gens = [tuple((int(getattr(c, "value", c)), labels[k]) for k, c in g.terms)
                for g in generators(F, B, I)]
        out.append(((labels[I.f_class], I.q), gens))
    return out


@pytest.mark.parametrize("key,expected", [("S4", IDEALS_S4), ("A6", IDEALS_A6)])
def test_localized_listing_matches_worked_example(fusion_systems, bases, key, expected):
    F, B = fusion_systems[key], bases[key]
    assert listing(F, B, localized=True) == expected


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("q", [0, 2, 3, 5])
def test_generators_span_the_kernel(fusion_systems, bases, key, q):
    """The generators are a Z-basis of {x : Phi_P(x) = 0 mod q}."""
    F, B = fusion_systems[key], bases[key]
    for d in range(F.n):
        I = prime_ideal(F, d, q)
        gens = generators(F, B, I)
        assert all(membership(F, B, I, g) for g in gens)
        M = sympy.Matrix([g.dense() for g in gens])
        if q == 0:
            assert M.rows == F.n - 1
            # saturated rank n-1 sublattice of the rank n-1 kernel
            invariants = smith_normal_form(M, domain=sympy.ZZ)
            assert all(abs(invariants[i, i]) == 1 for i in range(F.n - 1))
        else:
            # the kernel of a surjection Z^n -> Z/q has index q
            assert M.rows == F.n and abs(M.det()) == q


@pytest.mark.parametrize("key", KEYS)
def test_type_p_ideals_coincide(fusion_systems, bases, key):
    F, B = fusion_systems[key], bases[key]
    rng = random.Random(1)
    for _ in range(50):
        x = B.element([rng.randint(-8, 8) for _ in range(F.n)])
        raw = {in_kernel(B, d, F.p, x) for d in range(F.n)}
        assert len(raw) == 1


@pytest.mark.parametrize("key", KEYS)
def test_minimal_nonmember(fusion_systems, bases, key):
    F, B = fusion_systems[key], bases[key]
    for d in range(F.n):
        for q in (0, 3):
            assert minimal_nonmember_alpha(F, B, prime_ideal(F, d, q)) == d
    assert minimal_nonmember_alpha(F, B, prime_ideal(F, 0, F.p)) == F.top


@pytest.mark.parametrize("key", KEYS)
def test_inclusion_closed_form(fusion_systems, bases, key):
    F, B = fusion_systems[key], bases[key]
    ideals = enumerate_primes(F, (3, 5))
    for I in ideals:
        for J in ideals:
            assert included(F, I, J) == included_by_generators(F, B, I, J)
            assert equal(F, I, J) == (included(F, I, J) and included(F, J, I))


def test_enumeration_order(fusion_systems):
    F = fusion_systems["S4"]
    ideals = enumerate_primes(F, (5, 3, 2))
    assert ideals[0] == prime_ideal(F, F.top, 2)
    assert [I.q for I in ideals] == [2] + [0] * 7 + [3] * 7 + [5] * 7
    assert [I.f_class for I in ideals[1:8]] == list(range(6, -1, -1))
    assert len(enumerate_primes(F, (3,), localized=True)) == 8


def test_descriptor_validation(fusion_systems):
    F = fusion_systems["S4"]
    assert prime_ideal(F, 0, 2).f_class == F.top
    assert residue_characteristic(prime_ideal(F, 0, 3)) == 3
    with pytest.raises(ValueError):
        prime_ideal(F, 0, 4)
    with pytest.raises(ValueError):
        prime_ideal(F, 0, 3, localized=True)
    with pytest.raises(ValueError):
        prime_ideal(F, 99, 0)
    with pytest.raises(ValueError):
        IdealDescriptor(INTEGRAL, 0, 2, 2, 6)
    with pytest.raises(ValueError):
        IdealDescriptor("Q", 0, 0, 2, 6)
    assert IdealDescriptor(LOCAL, 0, 0, 2, 6).ring_label() == "Z_(2)"


def test_ring_mismatch(fusion_systems, bases):
    F, B = fusion_systems["S4"], bases["S4"]
    I, J = prime_ideal(F, 1, 0), prime_ideal(F, 1, 0, localized=True)
    x = B.alpha(1)
    with pytest.raises(RingMismatch):
        membership(F, B, J, x)
    with pytest.raises(RingMismatch):
        membership(F, B, I, localize(x, 2))
    with pytest.raises(RingMismatch):
        included(F, I, J)
    with pytest.raises(RingMismatch):
        membership(F, B, I, B.ring.one())


def test_localized_membership_with_fractions(fusion_systems, bases):
    F, B = fusion_systems["A6"], bases["A6"]
    # Phi_Z(alpha_Z / 3 - (4/3) alpha_S) = 0
    x = B.element({1: Fraction(1, 3), F.top: Fraction(-4, 3)}, p=2)
    assert membership(F, B, prime_ideal(F, 1, 0, True), x)
    assert not membership(F, B, prime_ideal(F, 0, 0, True), x)


@given(st.integers(-1, 200))
def test_is_prime(n):
    assert is_prime(n) == sympy.isprime(n)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=7, max_size=7), st.sampled_from([0, 2, 3, 5]))
def test_kernels_are_ideals(fusion_systems, bases, coeffs, q):
    F, B = fusion_systems["S4"], bases["S4"]
    x = B.element(coeffs)
    for I in enumerate_primes(F, (3, 5)):
        if I.q != q:
            continue
        for g in generators(F, B, I):
            assert membership(F, B, I, product_alpha(B, g, x))
