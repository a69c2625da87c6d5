"""The Burnside ring A(G) in the basis of transitive G-sets.

Table-of-marks convention: ``m[Q][P]`` is the number of P-fixed points of
G/Q. Rows are the transitive sets, columns the evaluating subgroups, both in
class order, so the matrix is lower triangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import BasisMismatch, NotAHomomorphism, NotInImage
from .groups import (FiniteGroup, Subgroup, SubgroupClassTable, class_labels, double_cosets,
                     enumerate_subgroups, normalizer, transporter)

TRANSITIVE = "transitive"
ALPHA = "alpha"


@dataclass(frozen=True)
class BurnsideElement:
    """Sparse coefficient vector over a basis of A(G) or A(F).

    ``terms`` holds ``(index, coefficient)`` pairs sorted by index with zeros dropped.
    ``p`` is set when the element lives in the p-localized ring.
    """

    basis: str
    size: int
    terms: tuple[tuple[int, object], ...] = ()
    p: int | None = None

    @classmethod
    def from_coeffs(cls, basis: str, size: int, coeffs: Mapping[int, object] | Sequence,
                    p: int | None = None) -> BurnsideElement:
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        acc: dict[int, object] = {}
        for i, c in items:
            if not 0 <= i < size:
                raise BasisMismatch(f"index {i} outside basis of size {size}")
            acc[i] = acc.get(i, 0) + c
        return cls(basis, size, tuple(sorted((i, c) for i, c in acc.items() if c != 0)), p)

    @classmethod
    def basis_vector(cls, basis: str, size: int, i: int, p: int | None = None) -> BurnsideElement:
        return cls.from_coeffs(basis, size, {i: 1}, p)

    @classmethod
    def zero(cls, basis: str, size: int, p: int | None = None) -> BurnsideElement:
        return cls(basis, size, (), p)

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self.terms)

    def dense(self) -> list:
        out = [0] * self.size
        for i, c in self.terms:
            out[i] = c
        return out

    def __getitem__(self, i: int):
        return self.coeffs.get(i, 0)

    def _check(self, other: BurnsideElement):
        if (self.basis, self.size) != (other.basis, other.size):
            raise BasisMismatch(f"{self.basis}[{self.size}] vs {other.basis}[{other.size}]")
        if self.p is not None and other.p is not None and self.p != other.p:
            raise BasisMismatch("elements localized at different primes")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        acc = self.coeffs
        for i, c in other.terms:
            acc[i] = acc.get(i, 0) + c
        return BurnsideElement.from_coeffs(self.basis, self.size, acc, self.p or other.p)

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.basis, self.size, tuple((i, -c) for i, c in self.terms), self.p)

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def scale(self, k) -> BurnsideElement:
        return BurnsideElement.from_coeffs(self.basis, self.size,
                                           {i: k * c for i, c in self.terms}, self.p)

    def __rmul__(self, k) -> BurnsideElement:
        if isinstance(k, BurnsideElement):
            return NotImplemented
        return self.scale(k)

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        """True when every coefficient is nonnegative (an honest G-set)."""
        return all(c >= 0 for _, c in self.terms)


@dataclass(frozen=True)
class TableOfMarks:
    labels: tuple[str, ...]
    m: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]


def mark(G: FiniteGroup, P: Subgroup, Q: Subgroup) -> int:
    """Number of P-fixed points on G/Q, i.e. |N_G(P,Q)| / |Q|."""
    t = len(transporter(G, P, Q))
    assert t % Q.order == 0
    return t // Q.order


class BurnsideRing:
    """A(G) with its table of marks and structure constants built at construction."""

    def __init__(self, G: FiniteGroup, table: SubgroupClassTable | None = None,
                 names: dict[str, str] | None = None):
        self.group = G
        self.table = table if table is not None else enumerate_subgroups(G)
        self.n = len(self.table)
        self.labels = tuple(class_labels(self.table, names))
        reps = self.table.reps
        self.marks = tuple(
            tuple(mark(G, P, Q) if self.table.subconj[j][i] else 0 for j, P in enumerate(reps))
            for i, Q in enumerate(reps))
        self._structure = {}
        for i in range(self.n):
            for j in range(i, self.n):
                self._structure[i, j] = self._basis_product(i, j)

    def _basis_product(self, i: int, j: int) -> dict[int, int]:
        G = self.group
        P, Q = self.table.rep(i), self.table.rep(j)
        out: dict[int, int] = {}
        for g in double_cosets(G, P, Q):
            R = P & G.conjugate(g, Q)
            k = self.table.class_of(R)
            out[k] = out.get(k, 0) + 1
        return out

    def structure_constants(self, i: int, j: int) -> dict[int, int]:
        return dict(self._structure[min(i, j), max(i, j)])

    # element constructors
    def basis(self, i: int) -> BurnsideElement:
        return BurnsideElement.basis_vector(TRANSITIVE, self.n, i)

    def element(self, coeffs) -> BurnsideElement:
        return BurnsideElement.from_coeffs(TRANSITIVE, self.n, coeffs)

    def zero(self) -> BurnsideElement:
        return BurnsideElement.zero(TRANSITIVE, self.n)

    def one(self) -> BurnsideElement:
        return self.basis(self.n - 1)

    def of(self, P: Subgroup) -> BurnsideElement:
        """The transitive set [G/P]."""
        return self.basis(self.table.class_of(P))

    def _own(self, x: BurnsideElement):
        if x.basis != TRANSITIVE or x.size != self.n:
            raise BasisMismatch(f"expected transitive basis of size {self.n}, got {x.basis}[{x.size}]")

    def table_of_marks(self) -> TableOfMarks:
        return TableOfMarks(self.labels, self.marks)

    def mark_at(self, x: BurnsideElement, i: int):
        """Phi_P(x) for P in class ``i``."""
        self._own(x)
        return sum((c * self.marks[q][i] for q, c in x.terms), 0)

    def ghost(self, x: BurnsideElement) -> tuple:
        self._own(x)
        v = [0] * self.n
        for q, c in x.terms:
            row = self.marks[q]
            for i in range(q + 1):
                if row[i]:
                    v[i] += c * row[i]
        return tuple(v)

    def unghost(self, v: Sequence, p: int | None = None) -> BurnsideElement:
        """Inverse of :meth:`ghost` on its image by back substitution.

        With ``p`` given, denominators prime to p are accepted and the result is
        localized. Raises :class:`NotInImage` carrying the rational solution otherwise.
        """
        if len(v) != self.n:
            raise BasisMismatch(f"mark vector of length {len(v)}, expected {self.n}")
        x = [Fraction(0)] * self.n
        for i in range(self.n - 1, -1, -1):
            acc = Fraction(v[i])
            for q in range(i + 1, self.n):
                if self.marks[q][i]:
                    acc -= x[q] * self.marks[q][i]
            x[i] = acc / self.marks[i][i]
        if p is None:
            if any(c.denominator != 1 for c in x):
                raise NotInImage("mark vector is not the ghost of an integral element", x)
            return self.element([int(c) for c in x])
        from .stable import PLocal
        if any(c.denominator % p == 0 for c in x):
            raise NotInImage(f"preimage needs denominators divisible by {p}", x)
        return BurnsideElement.from_coeffs(TRANSITIVE, self.n, [PLocal(c, p) for c in x], p)

    def product(self, x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
        self._own(x)
        self._own(y)
        acc: dict[int, object] = {}
        for i, a in x.terms:
            for j, b in y.terms:
                ab = a * b
                for k, c in self._structure[min(i, j), max(i, j)].items():
                    acc[k] = acc.get(k, 0) + ab * c
        return BurnsideElement.from_coeffs(TRANSITIVE, self.n, acc, x.p or y.p)

    def restrict(self, target: BurnsideRing, phi: Sequence[int], x: BurnsideElement) -> BurnsideElement:
        """Pull ``x`` back along a homomorphism ``phi`` from ``target.group`` into this group.

        Each G/Q splits into T-orbits under t.gQ = phi(t)gQ; the stabilizer of gQ is
        the set of t with g^-1 phi(t) g in Q.
        """
        self._own(x)
        G, T = self.group, target.group
        check_homomorphism(T, G, phi)
        out = target.zero()
        for q, c in x.terms:
            out = out + self._restrict_transitive(target, phi, q).scale(c)
        return out

    def _restrict_transitive(self, target: BurnsideRing, phi: Sequence[int], q: int) -> BurnsideElement:
        G, T = self.group, target.group
        Q = self.table.rep(q)
        seen = 0
        acc: dict[int, int] = {}
        for g in range(G.order):
            if seen >> g & 1:
                continue
            for t in range(T.order):
                seen |= _coset(G, G.mul[phi[t]][g], Q)
            ginv = G.inv[g]
            stab = Subgroup.from_members(
                t for t in range(T.order) if G.mul[G.mul[ginv][phi[t]]][g] in Q)
            k = target.table.class_of(stab)
            acc[k] = acc.get(k, 0) + 1
        return target.element(acc)


def _coset(G: FiniteGroup, g: int, Q: Subgroup) -> int:
    mask = 0
    row = G.mul[g]
    for y in Q.members:
        mask |= 1 << row[y]
    return mask


def check_homomorphism(T: FiniteGroup, G: FiniteGroup, phi: Sequence[int]) -> None:
    if len(phi) != T.order or any(not 0 <= v < G.order for v in phi):
        raise NotAHomomorphism("map has the wrong length or range")
    for a in range(T.order):
        for b in range(T.order):
            if phi[T.mul[a][b]] != G.mul[phi[a]][phi[b]]:
                raise NotAHomomorphism("map is not multiplicative", witness=(a, b))


def index_of_normalizer(G: FiniteGroup, P: Subgroup) -> int:
    """|N_G(P)| / |P|, the diagonal entry of the table of marks."""
    return normalizer(G, P).order // P.order
