"""Print the worked D8 examples: the table of marks, the alpha bases for
F_D8(S4) and F_D8(A6), and the prime ideals of their 2-localized rings."""

import argparse

from fusionring.cli import parse_args, run


def show(argv):
    code, text = run(parse_args(argv))
    print(text)
    return code


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--primes", default="", help="also list type-q ideals of A(F) for these q")
    args = parser.parse_args()
    fmt = ["--format", args.format]
    codes = [show(["marks", "d8", *fmt])]
    for spec in ("s4-d8", "a6-d8"):
        codes.append(show(["fusion", spec, *fmt]))
        codes.append(show(["alpha", spec, *fmt]))
        codes.append(show(["ideals", spec, "--localized", *fmt]))
        if args.primes:
            codes.append(show(["ideals", spec, "--primes", args.primes, *fmt]))
    raise SystemExit(max(codes))


if __name__ == "__main__":
    main()
