"""Figure rendering front end: netlab-plot --spec <file> --out <dir>."""

from __future__ import annotations

import argparse
import sys

from .figures import load_spec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="netlab-plot",
        description="Render figures from netlab CSV outputs.")
    parser.add_argument("--spec", required=True,
                        help="JSON spec: kind, inputs, output, color bounds")
    parser.add_argument("--out", required=True, help="output directory")
    args = parser.parse_args(argv)
    paths = render(load_spec(args.spec), args.out)
    for p in paths:
        print(p)
    return 0


if __name__ == "__main__":
    sys.exit(main())
