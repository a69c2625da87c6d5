"""Prime ideals of A(F) and of its p-localization A(F)_(p).

Every prime ideal is the kernel of a mark Phi_P reduced modulo q, where q is 0
or a prime. Ideals are named by a canonical :class:`IdealDescriptor`;
membership is one exact congruence on a mark, and generator sets are
produced for display and for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .burnside import ALPHA, BurnsideElement
from .errors import RingMismatch
from .fusion import FusionSystem
from .stable import AlphaBasis, PLocal

INTEGRAL = "Z"
LOCAL = "Z_(p)"


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class IdealDescriptor:
    """Canonical name (class [P]_F, type q) of a prime ideal.

    The type-p ideal is always named by the top class [S]_F.
    """

    ring: str
    f_class: int
    q: int
    p: int
    top: int

    def __post_init__(self):
        if self.ring not in (INTEGRAL, LOCAL):
            raise ValueError(f"unknown ring {self.ring!r}")
        if self.q != 0 and not is_prime(self.q):
            raise ValueError(f"ideal type must be 0 or a prime, got {self.q}")
        if self.q == self.p and self.f_class != self.top:
            raise ValueError("the type-p ideal is named by [S]_F")
        if self.ring == LOCAL and self.q not in (0, self.p):
            raise ValueError(f"A(F)_({self.p}) has no prime ideals of type {self.q}")

    @property
    def localized(self) -> bool:
        return self.ring == LOCAL

    def ring_label(self) -> str:
        return INTEGRAL if self.ring == INTEGRAL else f"Z_({self.p})"


def prime_ideal(F: FusionSystem, f_class: int, q: int, localized: bool = False) -> IdealDescriptor:
    """Descriptor of I_{P,q} (or J_{P,q}) for P in F-class ``f_class``, canonicalized."""
    if not 0 <= f_class < F.n:
        raise ValueError(f"no F-class {f_class}")
    if q == F.p:
        f_class = F.top
    return IdealDescriptor(LOCAL if localized else INTEGRAL, f_class, q, F.p, F.top)


@dataclass(frozen=True)
class GeneratorSet:
    ideal: IdealDescriptor
    gens: tuple[BurnsideElement, ...]

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def mark_of(B: AlphaBasis, d: int, x: BurnsideElement):
    """Phi_P(x) for P fully normalized in F-class ``d``, x in alpha coordinates."""
    if x.basis != ALPHA or x.size != B.n:
        raise RingMismatch(f"expected alpha coordinates of size {B.n}")
    return sum((lam * B.mark(c, d) for c, lam in x.terms), 0)


def _divisible(value, q: int) -> bool:
    if isinstance(value, PLocal):
        value = value.value
    if isinstance(value, Fraction):
        if value.denominator % q == 0:
            raise RingMismatch(f"denominator of {value} is not a unit modulo {q}")
        return value.numerator % q == 0
    return value % q == 0


def in_kernel(B: AlphaBasis, d: int, q: int, x: BurnsideElement) -> bool:
    """Whether Phi_P(x) = 0 mod q for P in F-class ``d`` (no canonicalization)."""
    value = mark_of(B, d, x)
    if q == 0:
        return value == 0
    return _divisible(value, q)


def _check_ring(I: IdealDescriptor, x: BurnsideElement):
    if I.ring == INTEGRAL and x.p is not None:
        raise RingMismatch("localized element tested against an ideal of A(F)")
    if I.ring == LOCAL and x.p != I.p:
        raise RingMismatch(f"element of A(F) tested against an ideal of A(F)_({I.p}); localize it first")


def membership(F: FusionSystem, B: AlphaBasis, I: IdealDescriptor, x: BurnsideElement) -> bool:
    _check_ring(I, x)
    return in_kernel(B, I.f_class, I.q, x)


def kernel_generators(B: AlphaBasis, d: int, q: int, p: int | None = None) -> tuple[BurnsideElement, ...]:
    """Z-basis of the kernel of Phi_P mod q, P in F-class ``d``.

    Ordered as in the worked examples: the alpha_c with Phi_P(alpha_c) = 0
    first, then the corrected alpha_c - Phi_P(alpha_c) alpha_S, each group in
    class order, and q alpha_S last when q > 0.
    """
    top = B.n - 1
    plain, corrected = [], []
    for c in range(top):
        m = B.mark(c, d)
        if m == 0:
            plain.append(B.element({c: 1}, p))
        else:
            corrected.append(B.element({c: 1, top: -m}, p))
    gens = plain + corrected
    if q:
        gens.append(B.element({top: q}, p))
    return tuple(gens)


def generators(F: FusionSystem, B: AlphaBasis, I: IdealDescriptor) -> GeneratorSet:
    p = I.p if I.localized else None
    return GeneratorSet(I, kernel_generators(B, I.f_class, I.q, p))


def enumerate_primes(F: FusionSystem, primes: Iterable[int] = (), localized: bool = False
                     ) -> list[IdealDescriptor]:
    """All prime ideals of type p, 0, and each listed prime q != p.

    Order: the type-p ideal, then the type-0 ideals from [S]_F downwards, then
    each further prime in increasing order with classes from [S]_F downwards.
    In the localized ring only types p and 0 exist and ``primes`` is ignored.
    """
    out = [prime_ideal(F, F.top, F.p, localized)]
    out += [prime_ideal(F, c, 0, localized) for c in reversed(range(F.n))]
    if not localized:
        for q in sorted(set(primes)):
            if q == F.p:
                continue
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
            out += [prime_ideal(F, c, q) for c in reversed(range(F.n))]
    return out


def _same_ring(I: IdealDescriptor, J: IdealDescriptor):
    if I.ring != J.ring or I.p != J.p:
        raise RingMismatch("ideals live in different rings")


def included(F: FusionSystem, I: IdealDescriptor, J: IdealDescriptor) -> bool:
    """Closed-form inclusion I <= J between canonical prime ideals."""
    _same_ring(I, J)
    p = F.p
    same = I.f_class == J.f_class
    return ((I.q == J.q and same)
            or (I.q == 0 and J.q not in (0, p) and same)
            or (I.q == 0 and J.q == p))


def equal(F: FusionSystem, I: IdealDescriptor, J: IdealDescriptor) -> bool:
    _same_ring(I, J)
    return I.q == J.q and I.f_class == J.f_class


def included_by_generators(F: FusionSystem, B: AlphaBasis, I: IdealDescriptor,
                           J: IdealDescriptor) -> bool:
    """Inclusion decided by testing every generator of I for membership in J."""
    _same_ring(I, J)
    return all(membership(F, B, J, g) for g in generators(F, B, I))


def minimal_nonmember_alpha(F: FusionSystem, B: AlphaBasis, I: IdealDescriptor) -> int:
    """The unique F-minimal class c with alpha_c outside I."""
    p = I.p if I.localized else None
    out = [c for c in range(F.n) if not membership(F, B, I, B.element({c: 1}, p))]
    minimal = [c for c in out if not any(d != c and F.f_subconj[d][c] for d in out)]
    assert len(minimal) == 1, f"non-unique minimal non-member {minimal}"
    return minimal[0]


def residue_characteristic(I: IdealDescriptor) -> int:
    return I.q
