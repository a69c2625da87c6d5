"""Command-line front end.

Subcommands: marks, subgroups, fusion, alpha, ideals, check. Exit status is 0
on success, 1 on invalid input and 2 on an internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .burnside import BurnsideRing
from .checks import run_all
from .errors import FusionRingError
from .fusion import FusionSystem
from .groups import class_labels, enumerate_subgroups, normalizer
from .ideals import enumerate_primes, generators
from .io import load_fusion, load_group, load_labels
from .stable import compute_alpha_basis

COMMANDS = ("marks", "subgroups", "fusion", "alpha", "ideals", "check")
SUITES = {"d8-suite": ("d8-inner.json", "s4-d8.json", "a6-d8.json")}


@dataclass
class JobSpec:
    command: str
    inputs: list[str] = field(default_factory=list)
    format: str = "table"
    ambient: str | None = None
    p: int | None = None
    primes: list[int] = field(default_factory=list)
    localized: bool = False
    sylow: list[int] | None = None
    labels: str | None = None
    all: bool = False


@dataclass
class Report:
    kind: str
    title: str
    payload: object


# rendering

def _grid(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    out = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return out


def _vector(v) -> str:
    return "(" + " ".join(str(x) for x in v) + ")"


def _combination(terms, name) -> str:
    """Render [[coeff, label], ...] as 'a_Z - 4*a_D8'."""
    parts = []
    for coeff, label in terms:
        mag = abs(coeff)
        body = name(label) if mag == 1 else f"{mag}*{name(label)}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) or "0"


def _render_table(report: Report) -> str:
    kind, data = report.kind, report.payload
    lines = [f"# {report.title}"]
    if kind == "marks":
        lines.append("# rows: transitive sets [G/Q]; columns: marks Phi_P")
        rows = [["Q \\ P"] + data["classes"]]
        rows += [[lab] + [str(v) for v in row] for lab, row in zip(data["classes"], data["matrix"])]
        lines += _grid(rows)
    elif kind == "subgroups":
        rows = [["class", "order", "size", "normalizer", "members of representative", "above"]]
        for c in data["classes"]:
            rows.append([c["label"], str(c["order"]), str(c["size"]), str(c["normalizer"]),
                         " ".join(c["members"]), ",".join(c["above"]) or "-"])
        lines += _grid_left(rows)
    elif kind == "fusion":
        lines.append(f"# {len(data['classes'])} F-classes over {len(data['s_classes'])} S-classes")
        rows = [["F-class", "fully normalized", "S-classes", "below"]]
        for c in data["classes"]:
            rows.append([c["label"], c["fully_normalized"], ",".join(c["s_classes"]),
                         ",".join(c["below"]) or "-"])
        lines += _grid_left(rows)
    elif kind == "alpha":
        lines.append("# marks over Cl(S): " + " ".join(data["s_classes"]))
        rows = []
        for a in data["alphas"]:
            decomp = " + ".join(f"[S/{lab}]" if k == 1 else f"{k}[S/{lab}]"
                                for k, lab in a["transitive"])
            rows.append([f"alpha_{a['label']}", decomp, _vector(a["marks"])])
        lines += _grid_left(rows)
    elif kind == "ideals":
        if not data:
            lines.append("no ideals")
        for entry in data:
            ideal = entry["ideal"]
            letter = "I" if ideal["ring"] == "Z" else "J"
            gens = ", ".join(_combination(g, lambda lab: f"a_{lab}") for g in entry["generators"])
            lines.append(f"{letter}_{{{ideal['class']},{ideal['q']}}} = < {gens} >")
    elif kind == "check":
        for r in data:
            status = "PASS" if r["ok"] else "FAIL"
            detail = f" ({r['detail']})" if r["detail"] else ""
            lines.append(f"{status}  {r['target']}: {r['name']}{detail}")
    return "\n".join(lines) + "\n"


def _grid_left(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def emit_report(report: Report, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(report.payload, indent=1) + "\n"
    return _render_table(report)


# commands

def _fusion(spec: JobSpec) -> FusionSystem:
    source = spec.inputs[0] if spec.inputs else None
    if source is None and spec.ambient is None:
        raise FusionRingError("give a fusion spec file or --ambient")
    return load_fusion(source, ambient=spec.ambient, p=spec.p, sylow=spec.sylow, labels=spec.labels)


def _title(F: FusionSystem) -> str:
    return f"F = F_S({F.ambient_name or 'G'}), p = {F.p}, |S| = {F.S.order}"


def _group(spec: JobSpec):
    if not spec.inputs:
        raise FusionRingError("missing group file")
    G, names = load_group(spec.inputs[0])
    if spec.labels:
        elements, sub_names = load_labels(spec.labels)
        if elements:
            G = type(G)(G.mul, G.identity, G.inv, tuple(elements), G.name, G.perms)
        names = sub_names if sub_names is not None else names
    return G, names


def cmd_marks(spec: JobSpec) -> Report:
    G, names = _group(spec)
    ring = BurnsideRing(G, names=names)
    tom = ring.table_of_marks()
    payload = {"classes": list(tom.labels), "matrix": [list(r) for r in tom.m]}
    return Report("marks", f"table of marks of {G.name or 'G'} (order {G.order})", payload)


def cmd_subgroups(spec: JobSpec) -> Report:
    G, names = _group(spec)
    table = enumerate_subgroups(G)
    labels = class_labels(table, names)
    classes = []
    for i, cls in enumerate(table.classes):
        rep = cls[0]
        classes.append({
            "label": labels[i], "order": rep.order, "size": len(cls),
            "normalizer": normalizer(G, rep).order,
            "members": [G.label(x) for x in rep.members],
            "above": [labels[j] for j in range(len(table)) if j != i and table.subconj[i][j]],
        })
    title = f"{sum(len(c) for c in table.classes)} subgroups in {len(table)} conjugacy classes of {G.name or 'G'}"
    return Report("subgroups", title, {"classes": classes})


def cmd_fusion(spec: JobSpec) -> Report:
    F = _fusion(spec)
    s_labels = F.s_labels()
    labels = F.labels()
    classes = [{
        "label": labels[c],
        "fully_normalized": s_labels[F.fully_normalized[c]],
        "s_classes": [s_labels[j] for j in F.f_classes[c]],
        "below": [labels[d] for d in range(F.n) if d != c and F.f_subconj[d][c]],
    } for c in range(F.n)]
    return Report("fusion", _title(F), {"s_classes": s_labels, "classes": classes})


def cmd_alpha(spec: JobSpec) -> Report:
    F = _fusion(spec)
    B = compute_alpha_basis(F)
    s_labels = F.s_labels()
    alphas = [{
        "label": lab,
        "transitive": [[a, s_labels[i]] for i, a in B.alphas[c].terms],
        "marks": list(B.alpha_marks[c]),
    } for c, lab in enumerate(F.labels())]
    return Report("alpha", "alpha basis of A(F), " + _title(F), {"s_classes": s_labels, "alphas": alphas})


def cmd_ideals(spec: JobSpec) -> Report:
    F = _fusion(spec)
    B = compute_alpha_basis(F)
    labels = F.labels()
    out = []
    for I in enumerate_primes(F, spec.primes, spec.localized):
        gens = [[[_plain(lam), labels[c]] for c, lam in g.terms] for g in generators(F, B, I)]
        out.append({"ideal": {"class": labels[I.f_class], "q": I.q, "ring": I.ring_label()},
                    "generators": gens})
    ring = f"A(F)_({F.p})" if spec.localized else "A(F)"
    return Report("ideals", f"prime ideals of {ring}, " + _title(F), out)


def _plain(c) -> int:
    value = getattr(c, "value", c)
    return int(value)


def cmd_check(spec: JobSpec) -> Report:
    targets = []
    for name in spec.inputs or (["d8-suite"] if spec.all else []):
        targets += SUITES.get(name, (name,))
    if not targets:
        raise FusionRingError("nothing to check; give a suite name or fusion spec")
    rows = []
    for t in targets:
        F = load_fusion(t)
        for r in run_all(F):
            rows.append({"target": Path(t).stem, "name": r.name, "ok": r.ok, "detail": r.detail})
    return Report("check", f"invariant checks on {', '.join(Path(t).stem for t in targets)}", rows)


HANDLERS = {"marks": cmd_marks, "subgroups": cmd_subgroups, "fusion": cmd_fusion,
            "alpha": cmd_alpha, "ideals": cmd_ideals, "check": cmd_check}


def run(spec: JobSpec) -> tuple[int, str]:
    """Execute one job; returns (exit code, output text)."""
    try:
        report = HANDLERS[spec.command](spec)
    except FusionRingError as exc:
        return 1, f"error: {exc}\n"
    except AssertionError as exc:
        return 2, f"internal error: {exc}\n"
    text = emit_report(report, spec.format)
    if report.kind == "check" and not all(r["ok"] for r in report.payload):
        return 2, text
    return 0, text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fusionring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("inputs", nargs="*", help="group file, fusion spec, or suite name")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--labels", help="label map file (element names and subgroup names)")
        if name in ("fusion", "alpha", "ideals"):
            sp.add_argument("--ambient", help="ambient group file")
            sp.add_argument("--p", type=int, help="the prime p")
            sp.add_argument("--sylow", type=_csv_ints, help="ordered ambient indices of S")
        if name == "ideals":
            sp.add_argument("--primes", type=_csv_ints, default=[],
                            help="further primes q != p to list type-q ideals for")
            sp.add_argument("--localized", action="store_true", help="ideals of A(F)_(p)")
        if name == "check":
            sp.add_argument("--all", action="store_true", help="run every invariant check")
    return parser


def parse_args(argv=None) -> JobSpec:
    ns = build_parser().parse_args(argv)
    return JobSpec(
        command=ns.command, inputs=ns.inputs, format=ns.format, labels=ns.labels,
        ambient=getattr(ns, "ambient", None), p=getattr(ns, "p", None),
        sylow=getattr(ns, "sylow", None), primes=getattr(ns, "primes", []),
        localized=getattr(ns, "localized", False), all=getattr(ns, "all", False))


def main(argv=None) -> int:
    code, text = run(parse_args(argv))
    (sys.stdout if code == 0 or text.startswith("#") else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
