"""Command-line front-end: qtt-fig <family> --csv FILE --out FILE.(png|svg)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import EmptyDataError, SchemaMismatchError
from .render import FAMILIES, FAMILY_DESCRIPTIONS, FigureSpec, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qtt-fig", description="regenerate figures from qtt sweep CSVs")
    parser.add_argument("family", choices=FAMILIES,
                        help="; ".join(f"{k}: {v}" for k, v in FAMILY_DESCRIPTIONS.items()))
    parser.add_argument("--csv", required=True, help="input scenario CSV")
    parser.add_argument("--out", required=True, help="output image (.png or .svg)")
    parser.add_argument("--dpi", type=int, default=150)
    parser.add_argument("--gap-range", nargs=2, type=float, default=(0.0, 100.0),
                        metavar=("LO", "HI"), help="alpha_gap axis clip (F7)")
    parser.add_argument("--inset-range", nargs=2, type=float, default=(0.25, 0.75),
                        metavar=("LO", "HI"), help="T_B window of the F5 insets")
    args = parser.parse_args(argv)

    spec = FigureSpec(
        family=args.family,
        csv=Path(args.csv),
        out=Path(args.out),
        gap_range=tuple(args.gap_range),
        inset_range=tuple(args.inset_range),
        dpi=args.dpi,
    )
    try:
        out = render(spec)
    except (SchemaMismatchError, EmptyDataError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
