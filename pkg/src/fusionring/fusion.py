"""Fusion systems F_S(G) induced by conjugation in an ambient group.

A fusion system is kept extensionally: the partition of Cl(S) into
F-conjugacy classes, the F-subconjugation order on those classes and a fully
normalized representative for each. Morphisms are recovered on demand from
the ambient group as conjugation maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NoAmbientData, NotASubgroupOfS, NotSylow
from .groups import (FiniteGroup, Subgroup, SubgroupClassTable, _p_part, class_labels,
                     enumerate_subgroups, normalizer, subgroup_as_group, sylow_subgroup)


@dataclass(frozen=True, eq=False)
class FusionSystem:
    p: int
    S: FiniteGroup
    table: SubgroupClassTable
    ambient_name: str
    partition: tuple[int, ...]                 # S-class index -> F-class index
    f_classes: tuple[tuple[int, ...], ...]     # F-class index -> S-class indices
    f_subconj: tuple[tuple[bool, ...], ...]
    fully_normalized: tuple[int, ...]          # F-class index -> S-class index
    ambient: FiniteGroup | None = field(default=None, repr=False)
    embedding: tuple[int, ...] | None = field(default=None, repr=False)
    names: dict | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.f_classes)

    @property
    def top(self) -> int:
        """Index of [S]_F, always the last class."""
        return self.n - 1

    def f_class_of(self, P: Subgroup) -> int:
        if not P <= self.S.whole() or not self.S.is_subgroup(P.members):
            raise NotASubgroupOfS(f"{P.members} is not a subgroup of S")
        return self.partition[self.table.class_of(P)]

    def rep(self, c: int) -> Subgroup:
        """The fully normalized representative subgroup of F-class ``c``."""
        return self.table.rep(self.fully_normalized[c])

    def s_labels(self) -> list[str]:
        return class_labels(self.table, self.names)

    def labels(self) -> list[str]:
        s = self.s_labels()
        return [s[i] for i in self.fully_normalized]

    def morphisms(self, P: Subgroup) -> set[tuple[int, ...]]:
        """Distinct maps P -> S in F, as images of ``P.members`` in order."""
        if self.ambient is None:
            raise NoAmbientData("fusion system carries no ambient group")
        G, emb = self.ambient, self.embedding
        back = {g: i for i, g in enumerate(emb)}
        src = [emb[x] for x in P.members]
        out = set()
        for g in range(G.order):
            img = [G.conj(g, x) for x in src]
            if all(y in back for y in img):
                out.add(tuple(back[y] for y in img))
        return out


def fusion_from_ambient(G: FiniteGroup, p: int, sylow: Sequence[int] | Subgroup | None = None,
                        labels: Sequence[str] | None = None, names: dict | None = None,
                        ambient_name: str = "") -> FusionSystem:
    """Build F_S(G) for a Sylow p-subgroup S of G.

    ``sylow`` is an ordered member list (ambient indices) or a :class:`Subgroup`;
    the list order fixes the element numbering of S. Without it the canonical
    Sylow subgroup is used with members in increasing order.
    """
    if sylow is None:
        members = list(sylow_subgroup(G, p).members)
    elif isinstance(sylow, Subgroup):
        members = list(sylow.members)
    else:
        members = [int(m) for m in sylow]
    if len(set(members)) != len(members) or not G.is_subgroup(members):
        raise NotSylow("given Sylow member list is not a subgroup")
    if len(members) != _p_part(G.order, p):
        raise NotSylow(f"subgroup of order {len(members)} is not a Sylow {p}-subgroup "
                       f"of a group of order {G.order}")

    S, emb = subgroup_as_group(G, members, labels)
    table = enumerate_subgroups(S)
    k = len(table)
    reps = [Subgroup.from_members(emb[x] for x in R.members) for R in table.reps]

    def subconj(P: Subgroup, Q: Subgroup) -> bool:
        if P.order > Q.order:
            return False
        gens = P.members
        return any(all(G.conj(g, x) in Q for x in gens) for g in range(G.order))

    rel = [[table.subconj[i][j] or subconj(reps[i], reps[j]) for j in range(k)] for i in range(k)]

    partition = [-1] * k
    f_classes: list[tuple[int, ...]] = []
    for i in range(k):
        if partition[i] >= 0:
            continue
        members_i = tuple(j for j in range(k) if rel[i][j] and rel[j][i])
        for j in members_i:
            partition[j] = len(f_classes)
        f_classes.append(members_i)

    f_subconj = tuple(tuple(rel[a[0]][b[0]] for b in f_classes) for a in f_classes)

    norm = [normalizer(S, R).order for R in table.reps]
    fully_normalized = tuple(max(c, key=lambda j: (norm[j], -j)) for c in f_classes)

    return FusionSystem(p, S, table, ambient_name or G.name, tuple(partition), tuple(f_classes),
                        f_subconj, fully_normalized, G, emb, names)


def inner_fusion_system(S: FiniteGroup, p: int, names: dict | None = None) -> FusionSystem:
    """F_S(S), whose classes are exactly the S-conjugacy classes."""
    return fusion_from_ambient(S, p, list(range(S.order)), names=names, ambient_name=S.name)


def f_iso(F: FusionSystem, P: Subgroup, Q: Subgroup) -> bool:
    return F.f_class_of(P) == F.f_class_of(Q)


def class_count(F: FusionSystem) -> int:
    return F.n


def with_representatives(F: FusionSystem, reps: dict[int, int]) -> FusionSystem:
    """Copy of ``F`` with other fully normalized representatives chosen.

    ``reps`` maps F-class index to an S-class index; each choice must also
    maximize |N_S(P)| within its class.
    """
    norm = [normalizer(F.S, R).order for R in F.table.reps]
    chosen = list(F.fully_normalized)
    for c, j in reps.items():
        if j not in F.f_classes[c] or norm[j] != norm[F.fully_normalized[c]]:
            raise ValueError(f"S-class {j} is not fully normalized in F-class {c}")
        chosen[c] = j
    return FusionSystem(F.p, F.S, F.table, F.ambient_name, F.partition, F.f_classes,
                        F.f_subconj, tuple(chosen), F.ambient, F.embedding, F.names)


def fully_normalized_choices(F: FusionSystem) -> list[list[int]]:
    """All maximizers of |N_S(P)| per F-class."""
    norm = [normalizer(F.S, R).order for R in F.table.reps]
    out = []
    for c in F.f_classes:
        best = max(norm[j] for j in c)
        out.append([j for j in c if norm[j] == best])
    return out
