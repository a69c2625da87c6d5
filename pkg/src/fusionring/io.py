"""Reading group files, label maps and fusion specs.

Group file (JSON), one of::

    {"cayley": [[...], ...], "labels": [...]}
    {"degree": d, "perm_generators": [[...], ...], "name": "..."}

Either form may carry ``"subgroup_names"``: a map from generator strings such
as ``"<r^2>"`` to display names.

Label map::

    {"elements": [...], "subgroups": {"<r^2>": "Z", ...}}

Fusion spec::

    {"ambient": <group file path or inline object>, "p": 2,
     "sylow": optional ordered member list, "labels": optional label map}

Sylow members are ambient element indices, or permutations when the ambient
group is given by permutation generators. The list order numbers the elements
of S, and ``labels.elements`` names them in that order.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import FusionRingError
from .fusion import FusionSystem, fusion_from_ambient
from .groups import (DEFAULT_CLOSURE_CAP, FiniteGroup, group_from_cayley,
                     group_from_permutations)

DATA_DIR = Path(str(resources.files("fusionring") / "data"))


def resolve(name: str | Path, base: Path | None = None) -> Path:
    """Find an input file: as given, relative to ``base``, or among the bundled inputs."""
    candidates = [Path(name)]
    if base is not None:
        candidates.append(base / name)
    candidates += [DATA_DIR / str(name), DATA_DIR / f"{name}.json"]
    for c in candidates:
        if c.is_file():
            return c
    raise FusionRingError(f"input file not found: {name}")


def _load(source, base: Path | None = None) -> tuple[dict, Path | None]:
    if isinstance(source, dict):
        return source, base
    path = resolve(source, base)
    try:
        return json.loads(path.read_text()), path.parent
    except json.JSONDecodeError as exc:
        raise FusionRingError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc


def group_from_json(obj: dict[str, Any], cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    if "cayley" in obj:
        return group_from_cayley(obj["cayley"], obj.get("labels"), obj.get("name", ""))
    if "perm_generators" in obj:
        return group_from_permutations(int(obj["degree"]), obj["perm_generators"], cap,
                                       obj.get("name", ""))
    raise FusionRingError("group file needs either 'cayley' or 'degree' + 'perm_generators'")


def load_group(source, base: Path | None = None,
               cap: int = DEFAULT_CLOSURE_CAP) -> tuple[FiniteGroup, dict | None]:
    """Returns the group and its optional subgroup display names."""
    obj, _ = _load(source, base)
    return group_from_json(obj, cap), obj.get("subgroup_names")


def load_labels(source, base: Path | None = None) -> tuple[list[str] | None, dict | None]:
    obj, _ = _load(source, base)
    return obj.get("elements"), obj.get("subgroups")


def sylow_indices(G: FiniteGroup, members: list) -> list[int]:
    out = []
    for m in members:
        if isinstance(m, list):
            if G.perms is None:
                raise FusionRingError("permutation Sylow members need a permutation ambient group")
            try:
                out.append(G.perms.index(tuple(m)))
            except ValueError:
                raise FusionRingError(f"permutation {m} is not in the ambient group") from None
        else:
            out.append(int(m))
    return out


def load_fusion(source=None, *, ambient=None, p: int | None = None, sylow: list | None = None,
                labels=None, base: Path | None = None) -> FusionSystem:
    """Build a fusion system from a spec file and/or explicit overrides."""
    spec: dict = {}
    if source is not None:
        spec, base = _load(source, base)
    ambient = ambient if ambient is not None else spec.get("ambient")
    if ambient is None:
        raise FusionRingError("fusion spec needs an ambient group")
    p = p if p is not None else spec.get("p")
    if p is None:
        raise FusionRingError("fusion spec needs a prime p")
    G, names = load_group(ambient, base)
    sylow = sylow if sylow is not None else spec.get("sylow")
    labels = labels if labels is not None else spec.get("labels")
    elements = None
    if labels is not None:
        elements, sub_names = load_labels(labels, base)
        names = sub_names if sub_names is not None else names
    if sylow is not None:
        sylow = sylow_indices(G, sylow)
    return fusion_from_ambient(G, int(p), sylow, elements, names, G.name)
