#!/usr/bin/env python3
"""Emit the per-dimension relative minimum product distance table as CSV
(closed forms only; arbitrarily large rows are instant)."""

import argparse

from rotlat import table1_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    args = parser.parse_args()
    text = table1_csv()
    if args.out:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
