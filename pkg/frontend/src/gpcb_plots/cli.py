"""gpcb-plot: turn simulator CSV files into BER figures."""

import argparse
import sys

from .loader import GROUP_KEYS, SchemaError, load
from .render import render


def make_parser():
    parser = argparse.ArgumentParser(
        prog="gpcb-plot",
        description="Plot BER-vs-Eb/N0 curves from simulator CSV output")
    parser.add_argument("--group-by", choices=GROUP_KEYS, default="iteration",
                        help="which column becomes the curve family")
    parser.add_argument("--out-dir", required=True,
                        help="directory for the PNG/SVG output")
    parser.add_argument("csvs", nargs="+", metavar="csv",
                        help="simulator CSV file(s)")
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        groups = load(args.csvs, group_by=args.group_by)
    except (SchemaError, OSError) as exc:
        print(f"gpcb-plot: {exc}", file=sys.stderr)
        return 2
    if not groups:
        print("gpcb-plot: no plottable rows found", file=sys.stderr)
        return 1
    for path in render(groups, args.out_dir):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
