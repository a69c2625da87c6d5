"""Finite groups given by a full multiplication table.

Elements are the integers ``0..n-1``. Subgroups are stored as bitmasks over
those indices, so inclusion and intersection are single integer operations.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotAGroup, OrderCapExceeded

DEFAULT_CLOSURE_CAP = 10000
DEFAULT_LATTICE_CAP = 256
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64
SAMPLED_TRIPLES = 10_000


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a set of element indices (bitset semantics)."""

    mask: int
    order: int

    @classmethod
    def from_members(cls, members: Iterable[int]) -> Subgroup:
        mask = 0
        for m in members:
            mask |= 1 << m
        return cls(mask, bin(mask).count("1"))

    @property
    def members(self) -> tuple[int, ...]:
        return _bits(self.mask)

    @property
    def key(self) -> tuple:
        """Canonical sort key: order first, then sorted member list."""
        return (self.order, self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: Subgroup) -> Subgroup:
        m = self.mask & other.mask
        return Subgroup(m, bin(m).count("1"))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return self.order


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    name: str = ""
    # permutation image of each element, when built from permutations
    perms: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self) -> int:
        return len(self.mul)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def power(self, x: int, k: int) -> int:
        y = self.identity
        for _ in range(k):
            y = self.mul[y][x]
        return y

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def conjugate(self, g: int, P: Subgroup) -> Subgroup:
        return Subgroup.from_members(self.conj(g, x) for x in P.members)

    def whole(self) -> Subgroup:
        return Subgroup((1 << self.order) - 1, self.order)

    def trivial(self) -> Subgroup:
        return Subgroup(1 << self.identity, 1)

    def generate(self, gens: Iterable[int]) -> Subgroup:
        gens = list(dict.fromkeys(gens))
        mask = 1 << self.identity
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            row = self.mul[x]
            for g in gens:
                y = row[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    queue.append(y)
        return Subgroup(mask, bin(mask).count("1"))

    def is_subgroup(self, members: Iterable[int]) -> bool:
        members = set(members)
        if self.identity not in members:
            return False
        return all(self.mul[a][b] in members for a in members for b in members)


def group_from_cayley(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                      name: str = "") -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    full = set(range(n))
    for i, row in enumerate(rows):
        if len(row) != n or set(row) != full:
            raise NotAGroup("row is not a permutation of 0..n-1", witness=("row", i))
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NotAGroup("column is not a permutation of 0..n-1", witness=("column", j))

    identity = next((e for e in range(n)
                     if all(rows[e][x] == x and rows[x][e] == x for x in range(n))), None)
    if identity is None:
        raise NotAGroup("no two-sided identity")
    inv = []
    for x in range(n):
        y = rows[x].index(identity)
        if rows[y][x] != identity:
            raise NotAGroup("no two-sided inverse", witness=(x,))
        inv.append(y)

    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(SAMPLED_TRIPLES))
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NotAGroup("associativity fails", witness=(a, b, c))

    if labels is not None and len(labels) != n:
        raise NotAGroup(f"expected {n} labels, got {len(labels)}")
    return FiniteGroup(rows, identity, tuple(inv), tuple(labels) if labels else None, name)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Permutation product a*b: apply b first, then a."""
    return tuple(a[i] for i in b)


def cycle_string(perm: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def group_from_permutations(degree: int, generators: Sequence[Sequence[int]],
                            cap: int = DEFAULT_CLOSURE_CAP, name: str = "") -> FiniteGroup:
    """Breadth-first closure of permutation generators; element 0 is the identity."""
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if sorted(g) != list(range(degree)):
            raise NotAGroup(f"generator {list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"closure exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    mul = tuple(tuple(index[compose(a, b)] for b in elements) for a in elements)
    inv = []
    for a in elements:
        ai = [0] * degree
        for i, v in enumerate(a):
            ai[v] = i
        inv.append(index[tuple(ai)])
    labels = tuple(cycle_string(a) for a in elements)
    return FiniteGroup(mul, 0, tuple(inv), labels, name, tuple(elements))


def subgroup_as_group(G: FiniteGroup, members: Sequence[int],
                      labels: Sequence[str] | None = None) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Realize an ordered list of elements of ``G`` as a group on its own.

    Returns the new group and the embedding (new index -> index in ``G``).
    The order of ``members`` fixes the element numbering of the result.
    """
    members = [int(m) for m in members]
    if len(set(members)) != len(members) or not G.is_subgroup(members):
        raise NotAGroup("member list is not a subgroup")
    pos = {g: i for i, g in enumerate(members)}
    mul = tuple(tuple(pos[G.mul[a][b]] for b in members) for a in members)
    inv = tuple(pos[G.inv[a]] for a in members)
    if labels is None and G.labels:
        labels = [G.labels[a] for a in members]
    perms = tuple(G.perms[a] for a in members) if G.perms else None
    H = FiniteGroup(mul, pos[G.identity], inv, tuple(labels) if labels else None, "", perms)
    return H, tuple(members)


def normalizer(G: FiniteGroup, P: Subgroup) -> Subgroup:
    return Subgroup.from_members(g for g in range(G.order) if G.conjugate(g, P) == P)


def transporter(G: FiniteGroup, P: Subgroup, Q: Subgroup) -> frozenset[int]:
    """All g with g P g^-1 contained in Q."""
    if P.order > Q.order:
        return frozenset()
    gens = P.members
    return frozenset(g for g in range(G.order) if all(G.conj(g, x) in Q for x in gens))


def double_cosets(G: FiniteGroup, P: Subgroup, Q: Subgroup) -> list[int]:
    """One representative per double coset P g Q, smallest index first."""
    covered = 0
    reps = []
    pm, qm = P.members, Q.members
    for g in range(G.order):
        if covered >> g & 1:
            continue
        reps.append(g)
        for x in pm:
            xg = G.mul[x][g]
            row = G.mul[xg]
            for y in qm:
                covered |= 1 << row[y]
    return reps


def double_coset(G: FiniteGroup, P: Subgroup, g: int, Q: Subgroup) -> Subgroup:
    return Subgroup.from_members(G.mul[G.mul[x][g]][y] for x in P.members for y in Q.members)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """The Sylow p-subgroup that is smallest in the canonical subgroup ordering."""
    target = _p_part(G.order, p)
    P = G.trivial()
    while P.order < target:
        N = normalizer(G, P)
        for g in N.members:
            if g not in P and G.power(g, p) in P:
                P = G.generate(P.members + (g,))
                break
        else:  # pragma: no cover - excluded by Sylow's theorems
            raise AssertionError("failed to extend p-subgroup")
    conjugates = {G.conjugate(g, P) for g in range(G.order)}
    return min(conjugates, key=lambda H: H.key)


@dataclass(frozen=True, eq=False)
class SubgroupClassTable:
    """Conjugacy classes of subgroups of ``group`` with the subconjugation order.

    ``classes[i][0]`` is the representative of class ``i``; classes are sorted by
    the canonical key of their representative.
    """

    group: FiniteGroup
    classes: tuple[tuple[Subgroup, ...], ...]
    subconj: tuple[tuple[bool, ...], ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def reps(self) -> tuple[Subgroup, ...]:
        return tuple(c[0] for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, P: Subgroup) -> int:
        return self._index[P.mask]

    def rep(self, i: int) -> Subgroup:
        return self.classes[i][0]

    def subgroups(self) -> list[Subgroup]:
        return [H for c in self.classes for H in c]


def enumerate_subgroups(G: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupClassTable:
    """All subgroups of ``G``: cyclic seeds closed under joins, then conjugacy classes."""
    if G.order > cap:
        raise OrderCapExceeded(f"lattice enumeration limited to groups of order <= {cap}")
    cyclic = {G.generate([x]) for x in range(G.order)}
    found = {H.mask: H for H in cyclic}
    frontier = list(cyclic)
    while frontier:
        new = []
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                J = G.generate(H.members + C.members)
                if J.mask not in found:
                    found[J.mask] = J
                    new.append(J)
        frontier = new

    remaining = dict(found)
    classes = []
    while remaining:
        H = next(iter(remaining.values()))
        conj = {G.conjugate(g, H) for g in range(G.order)}
        for K in conj:
            del remaining[K.mask]
        classes.append(tuple(sorted(conj, key=lambda K: K.key)))
    classes.sort(key=lambda c: c[0].key)

    index = {K.mask: i for i, c in enumerate(classes) for K in c}
    subconj = tuple(
        tuple(any(K <= cj[0] for K in ci) for cj in classes) for ci in classes)
    return SubgroupClassTable(G, tuple(classes), subconj, index)


def subgroup_label(G: FiniteGroup, P: Subgroup, names: dict[str, str] | None = None) -> str:
    """Render ``P`` as its lexicographically first minimal generating set, e.g. ``<r^2,s>``.

    ``names`` maps such generator strings to display aliases (``{"<r^2>": "Z"}``).
    """
    if P.order == 1:
        raw = "1"
    else:
        members = [m for m in P.members if m != G.identity]
        raw = None
        for k in range(1, len(members) + 1):
            for combo in itertools.combinations(members, k):
                if G.generate(combo) == P:
                    raw = "<" + ",".join(G.label(x) for x in combo) + ">"
                    break
            if raw:
                break
    if names and raw in names:
        return names[raw]
    return raw


def class_labels(table: SubgroupClassTable, names: dict[str, str] | None = None) -> list[str]:
    return [subgroup_label(table.group, rep, names) for rep in table.reps]
