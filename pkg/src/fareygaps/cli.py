"""Command-line front door.

Subcommands::

    farey   empirical gap histogram of a Farey sequence (CSV or JSON)
    cell    exact polygon of one index cell (JSON; rationals as strings)
    sets    tuple-set enumeration, brute force or closed form, with --check
    limits  per-order limit table (closed form and area route)
    verify  empirical vs. limit comparison; exit 1 on any failing row

Exit codes: 0 success, 1 failed verification or internal error, 2 bad
arguments.  All output is deterministic; rationals are serialized exactly
("p/q"), floats with their shortest round-trip representation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .continuant import KTuple
from .farey import gap_histogram
from .geometry import region_dump
from .proportions import limit_nu_area, limit_nu_closed, verify_report
from .tuple_sets import ResidueSpec, closed_form_circ, enumerate_circ


@dataclass
class CommandConfig:
    """Flat bag of every flag a subcommand may consume."""

    subcommand: str
    q: int | None = None
    modulus: int = 3
    residue: int | None = None  # c0
    c1: int | None = None
    r: int | None = None
    rmax: int | None = None
    kmax: int | None = None
    terms: int = 10_000
    tol: float = 0.01
    fmt: str = "csv"
    output: str | None = None
    tuple_arg: KTuple | None = None
    closed: bool = False
    check: bool = False


def _parse_tuple(text: str) -> KTuple:
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer tuple: {text!r}")
    if not entries or any(e < 1 for e in entries):
        raise argparse.ArgumentTypeError("tuple entries must be integers >= 1")
    return entries


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareygaps",
        description="exact Farey gap statistics, cell geometry and limit proportions",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("farey", help="empirical gap histogram")
    p.add_argument("--q", type=int, required=True, help="Farey order Q")
    p.add_argument("--modulus", type=int, default=3)
    p.add_argument("--residue", type=int, required=True, help="colored residue c0")
    p.add_argument("--rmax", type=int, default=64)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)

    p = sub.add_parser("cell", help="exact polygon of one index cell")
    p.add_argument("--tuple", dest="tuple_arg", type=_parse_tuple, required=True)
    p.add_argument("--output", default=None)

    p = sub.add_parser("sets", help="tuple-set enumeration")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--modulus", type=int, default=3)
    p.add_argument("--c0", dest="residue", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None, help="default 4r+8")
    p.add_argument("--closed", action="store_true", help="use the closed-form table")
    p.add_argument("--check", action="store_true", help="cross-validate brute vs closed")
    p.add_argument("--output", default=None)

    p = sub.add_parser("limits", help="per-order limit table")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--c0", dest="residue", type=int, default=1)
    p.add_argument("--terms", type=int, default=10_000)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="empirical vs limit comparison")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rmax", type=int, default=8)
    p.add_argument("--tol", type=float, default=0.01)
    p.add_argument("--c0", dest="residue", type=int, default=1)
    p.add_argument("--terms", type=int, default=10_000)
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)

    return parser


def _config(ns: argparse.Namespace) -> CommandConfig:
    cfg = CommandConfig(subcommand=ns.subcommand)
    for name in vars(cfg):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    return cfg


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_farey(cfg: CommandConfig) -> int:
    hist = gap_histogram(cfg.q, cfg.modulus, cfg.residue, rmax=cfg.rmax)
    if cfg.fmt == "json":
        _emit(_json_text(hist.to_json_dict()), cfg.output)
    else:
        _emit(hist.to_csv(), cfg.output)
    return 0


def cmd_cell(cfg: CommandConfig) -> int:
    _emit(_json_text(region_dump(cfg.tuple_arg)), cfg.output)
    return 0


def cmd_sets(cfg: CommandConfig) -> int:
    spec = ResidueSpec(cfg.modulus, cfg.residue, cfg.c1)
    kmax = cfg.kmax if cfg.kmax is not None else 4 * cfg.r + 8
    if cfg.check:
        brute = enumerate_circ(cfg.r, spec, kmax)
        closed = closed_form_circ(cfg.r, spec, kmax)
        payload = {
            "check": "pass" if brute.tuples == closed.tuples else "fail",
            "brute": brute.to_json_dict(),
            "closed": closed.to_json_dict(),
        }
        _emit(_json_text(payload), cfg.output)
        return 0 if brute.tuples == closed.tuples else 1
    page = (
        closed_form_circ(cfg.r, spec, kmax)
        if cfg.closed
        else enumerate_circ(cfg.r, spec, kmax)
    )
    _emit(_json_text(page.to_json_dict()), cfg.output)
    return 0


def cmd_limits(cfg: CommandConfig) -> int:
    rows = []
    for r in range(cfg.rmax + 1):
        ar = limit_nu_area(r, cfg.residue, cfg.terms)
        rows.append(
            {
                "r": r,
                "nu_closed": limit_nu_closed(r, cfg.residue),
                "nu_area": ar.value,
                "tail_bound": ar.tail_bound,
            }
        )
    if cfg.fmt == "json":
        _emit(_json_text(rows), cfg.output)
    else:
        lines = ["r,nu_closed,nu_area,tail_bound"]
        for row in rows:
            lines.append(
                f"{row['r']},{row['nu_closed']!r},{row['nu_area']!r},{row['tail_bound']!r}"
            )
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_verify(cfg: CommandConfig) -> int:
    report = verify_report(cfg.q, cfg.rmax, terms=cfg.terms, c0=cfg.residue, tol=cfg.tol)
    if cfg.fmt == "csv":
        _emit(report.to_csv(), cfg.output)
    else:
        _emit(_json_text(report.to_json_list()), cfg.output)
    return 0 if report.all_pass else 1


_COMMANDS = {
    "farey": cmd_farey,
    "cell": cmd_cell,
    "sets": cmd_sets,
    "limits": cmd_limits,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.subcommand](_config(ns))
    except ValueError as exc:  # violated precondition => bad arguments
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
