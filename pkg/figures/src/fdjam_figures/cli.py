"""Command line: render one image per input CSV."""

from __future__ import annotations

import argparse
import sys

from .render import SchemaError, render_csv


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fdjam-render",
        description="Render fdjam sweep CSVs as PNG plots, one image per file.",
    )
    parser.add_argument("csvs", nargs="+", metavar="csv", help="sweep CSV files")
    parser.add_argument("--out", default=".", help="output directory")
    parser.add_argument("--log-y", action="store_true", help="log-scale y axis")
    args = parser.parse_args(argv)
    status = 0
    for path in args.csvs:
        try:
            out_path = render_csv(path, args.out, log_y=args.log_y)
        except SchemaError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = 1
        except OSError as exc:
            print(f"io error: {exc}", file=sys.stderr)
            status = 1
        else:
            print(f"wrote {out_path}")
    return status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
