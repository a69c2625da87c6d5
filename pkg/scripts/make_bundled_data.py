"""Regenerate the JSON inputs shipped in src/fusionring/data/.

D8 is realized as the symmetries of a square with vertices 0,1,2,3:
r = (0 1 2 3), s = (1 3). Its elements are listed as
e, r^2, r, r^3, rs, r^3s, s, r^2s so that the canonical subgroup order gives
1 < Z < <rs> < <s> < C < <r^2,rs> < <r^2,s> < D8.

In S4 this embedding makes <r^2,rs> the Klein group of double transpositions,
so Z is fused with <rs>. In A6 the odd elements are multiplied by (4 5).
"""

import json
from pathlib import Path

from fusionring.groups import compose

DATA = Path(__file__).resolve().parents[1] / "src" / "fusionring" / "data"

D8_WORDS = ["e", "r^2", "r", "r^3", "rs", "r^3s", "s", "r^2s"]
D8_NAMES = {"<r^2>": "Z", "<r>": "C", "<r,rs>": "D8"}


def word_elements(r, s, n):
    e = tuple(range(n))
    r2 = compose(r, r)
    r3 = compose(r2, r)
    table = {"e": e, "r": r, "r^2": r2, "r^3": r3, "s": s}
    table["rs"] = compose(r, s)
    table["r^2s"] = compose(r2, s)
    table["r^3s"] = compose(r3, s)
    return [list(table[w]) for w in D8_WORDS]


def cayley_from_perms(perms):
    index = {tuple(p): i for i, p in enumerate(perms)}
    return [[index[compose(a, b)] for b in perms] for a in perms]


def write(name, obj):
    (DATA / name).write_text(json.dumps(obj, indent=1) + "\n")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    r4, s4 = (1, 2, 3, 0), (0, 3, 2, 1)
    d8_perms = word_elements(r4, s4, 4)
    labels = {"elements": D8_WORDS, "subgroups": D8_NAMES}

    write("d8.json", {"cayley": cayley_from_perms([tuple(p) for p in d8_perms]),
                      "labels": D8_WORDS, "name": "D8", "subgroup_names": D8_NAMES})
    write("d8-labels.json", labels)
    write("s4.json", {"degree": 4, "perm_generators": [[1, 0, 2, 3], [1, 2, 3, 0]], "name": "S4"})
    # (0 1 2) and (1 2 3 4 5) generate A6
    write("a6.json", {"degree": 6, "perm_generators": [[1, 2, 0, 3, 4, 5], [0, 2, 3, 4, 5, 1]],
                      "name": "A6"})

    write("d8-inner.json", {"ambient": "d8.json", "p": 2, "labels": labels})
    write("s4-d8.json", {"ambient": "s4.json", "p": 2, "sylow": d8_perms, "labels": labels})
    r6, s6 = (1, 2, 3, 0, 5, 4), (0, 3, 2, 1, 5, 4)
    write("a6-d8.json", {"ambient": "a6.json", "p": 2, "sylow": word_elements(r6, s6, 6),
                         "labels": labels})

    # small 2-groups for cross-checks against the classical case
    write("c2.json", {"degree": 2, "perm_generators": [[1, 0]], "name": "C2"})
    write("c4.json", {"degree": 4, "perm_generators": [[1, 2, 3, 0]], "name": "C4"})
    write("c2xc2.json", {"degree": 4, "perm_generators": [[1, 0, 2, 3], [0, 1, 3, 2]],
                         "name": "C2xC2"})
    # regular representation of Q8 = {+-1, +-i, +-j, +-k}, elements 0..7 = 1,-1,i,-i,j,-j,k,-k
    write("q8.json", {"degree": 8, "perm_generators": [[2, 3, 1, 0, 6, 7, 5, 4],
                                                       [4, 5, 7, 6, 1, 0, 2, 3]], "name": "Q8"})


if __name__ == "__main__":
    main()
