"""Figure-rendering entry point: CSVs in, SVG+PNG out."""

from __future__ import annotations

import argparse
import sys

from .figures import FIGURES, render, render_all
from .schemas import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectorsnake-plots",
        description="Render benchmark figures from the documented CSV tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="render one figure")
    p.add_argument("figure", choices=sorted(FIGURES))
    p.add_argument("--csv", required=True, help="directory holding the CSV tables")
    p.add_argument("--out", default="figures", help="output directory")

    p = sub.add_parser("render-all", help="render every figure")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", default="figures")

    p = sub.add_parser("list", help="list figure ids")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for figure_id in sorted(FIGURES):
            print(figure_id)
        return 0
    try:
        if args.command == "render":
            paths = render(args.figure, args.csv, args.out)
            for path in paths:
                print(f"wrote {path}")
        else:
            for figure_id, paths in render_all(args.csv, args.out).items():
                for path in paths:
                    print(f"wrote {path}")
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
