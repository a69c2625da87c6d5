"""Rewrite tests/golden/ from the current CLI output.

Review the diff by hand before committing: the golden files are the
reference tables the test suite compares against byte for byte.
"""

import json
from pathlib import Path

from fusionring.cli import parse_args, run

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def main():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in cases.items():
        code, text = run(parse_args(argv))
        if code:
            raise SystemExit(f"{name}: exit {code}\n{text}")
        (GOLDEN / name).write_text(text)
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
