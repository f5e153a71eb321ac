"""Command-line front end: construct modules, certify them, tabulate
minimum product distances, and run ideal-feasibility checks.

Exit codes: 0 success (or verified), 1 verified-false, 2 input error.
Identical invocations produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .constructions import build, module_from_json, module_to_json
from .distance import table1_csv
from .feasibility import dn_feasibility, report_json as feasibility_json
from .fields import make_field
from .gram import det_exact, det_via_formula, embedding_csv, gram
from .verify import verify_rotated_dn

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_INPUT_ERROR = 2

DEFAULT_PRECISION = 128


@dataclass
class RunConfig:
    command: str
    construction: str | None = None
    family: str | None = None
    params: dict | None = None
    module_path: str | None = None
    out: str | None = None
    precision: int = DEFAULT_PRECISION
    coeff_bound: int = 2


def _default_precision() -> int:
    raw = os.environ.get("ROTLAT_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
        if value < 8:
            raise ValueError
    except ValueError:
        raise SystemExit(f"ROTLAT_PRECISION must be an integer >= 8, got {raw!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotlat",
        description="construct and certify rotated D_n lattices from real cyclotomic subfields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a twisted module and write its JSON")
    construct.add_argument("--construction", required=True, choices=["p31", "p32", "p34", "p37"])
    construct.add_argument("--r", type=int)
    construct.add_argument("--p", type=int)
    construct.add_argument("--p1", type=int)
    construct.add_argument("--p2", type=int)
    construct.add_argument("--out", default="module.json")

    verify = sub.add_parser("verify", help="certify that a module's lattice is a rotated D_n")
    verify.add_argument("module", help="path to a module JSON file")
    verify.add_argument("--out", help="also write the report JSON to this path")

    sub.add_parser("table1", help="emit the distance comparison table as CSV").add_argument(
        "--out", help="write the CSV to this path instead of stdout"
    )

    feas = sub.add_parser("feasibility", help="ideal-based feasibility verdict for a field")
    feas.add_argument(
        "--family", required=True,
        choices=["pow2", "odd-prime", "comp-pow2-odd", "comp-odd-odd"],
    )
    feas.add_argument("--r", type=int)
    feas.add_argument("--p", type=int)
    feas.add_argument("--p1", type=int)
    feas.add_argument("--p2", type=int)
    feas.add_argument("--out", help="also write the report JSON to this path")

    embed = sub.add_parser("embed", help="emit the floating generator matrix as CSV")
    embed.add_argument("module", help="path to a module JSON file")
    embed.add_argument("--precision", type=int, default=None, help="bits (default 128)")
    embed.add_argument("--out", help="write the CSV to this path instead of stdout")

    return parser


_PARAM_NAMES = {
    "p31": ("r",),
    "p32": ("p",),
    "p34": ("r", "p"),
    "p37": ("p1", "p2"),
    "pow2": ("r",),
    "odd-prime": ("p",),
    "comp-pow2-odd": ("r", "p"),
    "comp-odd-odd": ("p1", "p2"),
}


def _collect_params(args, kind: str) -> dict:
    params = {}
    for name in _PARAM_NAMES[kind]:
        value = getattr(args, name.replace("-", "_"))
        if value is None:
            raise ValueError(f"missing required parameter --{name} for {kind}")
        params[name] = value
    return params


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="") as handle:
        handle.write(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_text(out, text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    params = _collect_params(args, args.construction)
    module = build(args.construction, **params)
    _write_text(args.out, json.dumps(module_to_json(module), indent=2) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.module) as handle:
        obj = json.load(handle)
    module = module_from_json(obj)
    report = verify_rotated_dn(module)
    payload = report.to_json()
    det_gram = det_exact(gram(module))
    det_formula = det_via_formula(module)
    payload["det_cross_check"] = {
        "gram": str(det_gram),
        "formula": str(det_formula),
        "equal": det_gram == det_formula,
    }
    text = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    return EXIT_OK if report.verdict else EXIT_UNVERIFIED


def _cmd_table1(args) -> int:
    _emit(table1_csv(), args.out)
    return EXIT_OK


def _cmd_feasibility(args) -> int:
    params = _collect_params(args, args.family)
    field = make_field(args.family, **params)
    text = feasibility_json(dn_feasibility(field))
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    return EXIT_OK


def _cmd_embed(args) -> int:
    with open(args.module) as handle:
        obj = json.load(handle)
    module = module_from_json(obj)
    precision = args.precision if args.precision is not None else _default_precision()
    _emit(embedding_csv(module, precision), args.out)
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "table1": _cmd_table1,
    "feasibility": _cmd_feasibility,
    "embed": _cmd_embed,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except json.JSONDecodeError as exc:
        print(f"error: parse error in module file: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
