"""F-stable elements, the alpha basis of A(F) and p-local scalars."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .burnside import ALPHA, TRANSITIVE, BurnsideElement, BurnsideRing
from .errors import DenominatorDivisibleByP, NoSolution, NotFStable, NotIntegral
from .fusion import FusionSystem
from .groups import enumerate_subgroups, subgroup_as_group


class PLocal:
    """A rational number whose denominator is prime to ``p`` (an element of Z_(p))."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, PLocal):
            value = value.value
        value = Fraction(value)
        if value.denominator % p == 0:
            raise DenominatorDivisibleByP(f"{value} is not in Z_({p})")
        self.value = value
        self.p = p

    @property
    def num(self) -> int:
        return self.value.numerator

    @property
    def den(self) -> int:
        return self.value.denominator

    def _coerce(self, other):
        if isinstance(other, PLocal):
            if other.p != self.p:
                raise DenominatorDivisibleByP("mixing different localizations")
            return other.value
        if isinstance(other, (int, Fraction)):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PLocal(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PLocal(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PLocal(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PLocal(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PLocal(self.value / o, self.p)

    def __neg__(self):
        return PLocal(-self.value, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.value == o

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __le__(self, other):
        return self.value <= self._coerce(other)

    def __gt__(self, other):
        return self.value > self._coerce(other)

    def __ge__(self, other):
        return self.value >= self._coerce(other)

    def valuation(self) -> float | int:
        """p-adic valuation; ``inf`` for zero."""
        if self.value == 0:
            return float("inf")
        n, v = abs(self.num), 0
        while n % self.p == 0:
            n //= self.p
            v += 1
        return v

    def __repr__(self):
        return f"PLocal({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


def localize(x: BurnsideElement, p: int) -> BurnsideElement:
    """Embed an integral element into the p-localized ring (same coordinates)."""
    return BurnsideElement.from_coeffs(x.basis, x.size, {i: PLocal(c, p) for i, c in x.terms}, p)


def is_f_stable(F: FusionSystem, ring: BurnsideRing, x: BurnsideElement) -> bool:
    """Marks of ``x`` are constant on every F-conjugacy class."""
    v = ring.ghost(x)
    return all(len({v[j] for j in cls}) == 1 for cls in F.f_classes)


def is_f_stable_by_restriction(F: FusionSystem, ring: BurnsideRing, x: BurnsideElement) -> bool:
    """Check r_phi(x) = r_incl(x) in A(P) for every P <= S and every phi in F(P, S)."""
    for P in F.table.subgroups():
        sub, incl = subgroup_as_group(F.S, P.members)
        sub_ring = BurnsideRing(sub, enumerate_subgroups(sub))
        base = ring.restrict(sub_ring, incl, x)
        for phi in F.morphisms(P):
            if ring.restrict(sub_ring, phi, x) != base:
                return False
    return True


@dataclass(frozen=True, eq=False)
class AlphaBasis:
    F: FusionSystem
    ring: BurnsideRing
    alphas: tuple[BurnsideElement, ...]
    alpha_marks: tuple[tuple[int, ...], ...]   # F-class -> ghost over Cl(S)

    @property
    def n(self) -> int:
        return len(self.alphas)

    def mark(self, c: int, d: int) -> int:
        """Phi_P(alpha_c) for P fully normalized in F-class ``d``."""
        return self.alpha_marks[c][self.F.fully_normalized[d]]

    def element(self, coeffs, p: int | None = None) -> BurnsideElement:
        if p is not None:
            items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
            coeffs = {i: PLocal(c, p) for i, c in items}
        return BurnsideElement.from_coeffs(ALPHA, self.n, coeffs, p)

    def alpha(self, c: int) -> BurnsideElement:
        return BurnsideElement.basis_vector(ALPHA, self.n, c)

    def zero(self, p: int | None = None) -> BurnsideElement:
        return BurnsideElement.zero(ALPHA, self.n, p)

    def one(self) -> BurnsideElement:
        return self.alpha(self.n - 1)


def compute_alpha_basis(F: FusionSystem, ring: BurnsideRing | None = None) -> AlphaBasis:
    """Reeh's basis of irreducible effective F-stable elements.

    For each F-class the coefficient is pinned to 1 on its fully normalized
    S-class and to 0 on the fully normalized S-classes of every other F-class.
    The remaining coefficients are fixed top-down: each S-class is raised to the
    mark of the fully normalized member of its F-class by adding the
    table-of-marks row whose diagonal sits there, in the exact multiple required.
    """
    if ring is None:
        ring = BurnsideRing(F.S, F.table, F.names)
    M = ring.marks
    nS = ring.n
    alphas, marks = [], []
    for c in range(F.n):
        pinned = {F.fully_normalized[d]: int(d == c) for d in range(F.n)}
        coef = [0] * nS
        ghost = [0] * nS
        for i in range(nS - 1, -1, -1):
            if i in pinned:
                a = pinned[i]
            else:
                r = F.fully_normalized[F.partition[i]]
                target = ghost[r] + (pinned[r] * M[r][r] if r < i else 0)
                gap = target - ghost[i]
                if gap < 0 or gap % M[i][i]:
                    raise NoSolution(f"cannot level S-class {i} for F-class {c}")
                a = gap // M[i][i]
            if a:
                coef[i] = a
                row = M[i]
                for j in range(i + 1):
                    ghost[j] += a * row[j]
        alpha = ring.element(coef)
        if not is_f_stable(F, ring, alpha):
            raise NoSolution(f"leveled element for F-class {c} is not F-stable")
        alphas.append(alpha)
        marks.append(tuple(ghost))
    B = AlphaBasis(F, ring, tuple(alphas), tuple(marks))
    check_alpha_properties(B)
    return B


def check_alpha_properties(B: AlphaBasis) -> None:
    """Assert the defining properties (i)-(iv) of the alpha basis."""
    F, ring = B.F, B.ring
    M = ring.marks
    for c, alpha in enumerate(B.alphas):
        if not alpha.is_effective():
            raise NoSolution(f"alpha_{c} is not effective")
        if not is_f_stable(F, ring, alpha):
            raise NoSolution(f"alpha_{c} is not F-stable")
        if tuple(ring.ghost(alpha)) != B.alpha_marks[c]:
            raise NoSolution(f"stored marks of alpha_{c} are stale")
        below = {j for j in range(ring.n) if F.f_subconj[F.partition[j]][c]}
        # (i) support
        if not set(alpha.coeffs) <= below:
            raise NoSolution(f"alpha_{c} has support outside the classes below it")
        # (ii) the fully normalized component
        for d in range(F.n):
            expect = 1 if d == c else 0
            if alpha[F.fully_normalized[d]] != expect:
                raise NoSolution(f"alpha_{c} has coefficient {alpha[F.fully_normalized[d]]} "
                                 f"on the fully normalized class of F-class {d}")
        # (iii) mark at the fully normalized representative
        r = F.fully_normalized[c]
        if B.alpha_marks[c][r] != M[r][r]:
            raise NoSolution(f"alpha_{c} has the wrong mark at its representative")
        # (iv) nonvanishing exactly below
        for j in range(ring.n):
            if (B.alpha_marks[c][j] != 0) != (j in below):
                raise NoSolution(f"alpha_{c} mark at S-class {j} violates the support law")
    if B.alphas[F.top] != ring.one():
        raise NoSolution("alpha of [S] is not [S/S]")


def from_alpha(B: AlphaBasis, y: BurnsideElement) -> BurnsideElement:
    """Alpha coordinates -> transitive coordinates over S."""
    if y.basis != ALPHA or y.size != B.n:
        raise NotFStable("expected alpha coordinates")
    acc: dict[int, object] = {}
    for c, lam in y.terms:
        for i, a in B.alphas[c].terms:
            acc[i] = acc.get(i, 0) + lam * a
    return BurnsideElement.from_coeffs(TRANSITIVE, B.ring.n, acc, y.p)


def to_alpha(B: AlphaBasis, x: BurnsideElement) -> BurnsideElement:
    """Transitive coordinates of an F-stable element -> alpha coordinates."""
    F, ring = B.F, B.ring
    if not is_f_stable(F, ring, x):
        raise NotFStable("element is not F-stable")
    v = ring.ghost(x)
    lam: list = [0] * F.n
    for d in range(F.n - 1, -1, -1):
        acc = Fraction(_value(v[F.fully_normalized[d]]))
        for c in range(d + 1, F.n):
            if lam[c]:
                acc -= _value(lam[c]) * B.mark(c, d)
        q = acc / B.mark(d, d)
        if x.p is None:
            if q.denominator != 1:
                raise NotIntegral(f"non-integral alpha coordinate {q}")
            lam[d] = int(q)
        else:
            lam[d] = PLocal(q, x.p)
    return B.element(lam, x.p)


def _value(c):
    return c.value if isinstance(c, PLocal) else c


def ghost_alpha(B: AlphaBasis, y: BurnsideElement) -> tuple:
    """Marks over Cl(S) of an element given in alpha coordinates."""
    v = [0] * B.ring.n
    for c, lam in y.terms:
        for j, m in enumerate(B.alpha_marks[c]):
            if m:
                v[j] = v[j] + lam * m
    return tuple(v)


def product_alpha(B: AlphaBasis, x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Multiply in A(F) through the double-coset product on A(S)."""
    return to_alpha(B, B.ring.product(from_alpha(B, x), from_alpha(B, y)))


def transitive_decomposition(B: AlphaBasis, c: int) -> list[tuple[int, int]]:
    """(coefficient, S-class) pairs of alpha_c in class order."""
    return [(a, i) for i, a in B.alphas[c].terms]
