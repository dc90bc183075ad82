"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
disagreement between independent computations.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import closedform, moduli
from .basis import basis_catalog, verify_basis
from .errors import BranchMismatch, ConsistencyError, DivisionNotExact
from .formats import (
    FORMATS,
    OutputRecord,
    fixture_text,
    render_json,
    render_records,
    render_rows,
    render_table,
)
from .trees import enumerate_stable_trees, group_by_type
from .verify import FIXTURE_R_MAX, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise UsageError(f"{name} must be >= 1, got {value}")


# -- commands: each returns (text, exit code) ---------------------------

def cmd_serre(space: str, r: int, d: Optional[int] = None, method: str = "closed") -> OutputRecord:
    """The requested polynomial as a record; raises on invalid input or disagreement."""
    space = space.upper()
    _positive("--r", r)
    if (space == "M00") != (d is not None):
        raise UsageError("--d is required for m00 and not accepted otherwise")
    if method in ("strata", "both") and space != "M02":
        raise UsageError("--method strata/both is only available for m02")
    if space == "M00":
        _positive("--d", d)
        return OutputRecord.from_poly("M00", r, "closed", moduli.serre_m00(r, d), d=d)
    if space == "M01":
        return OutputRecord.from_poly("M01", r, "closed", closedform.serre_m01_closed(r))
    if space != "M02":
        raise UsageError(f"unknown space {space!r}")
    if method == "closed":
        return OutputRecord.from_poly("M02", r, "closed", closedform.serre_m02_closed(r))
    strata = moduli.serre_m02_strata(r)
    if method == "both":
        closed = closedform.serre_m02_closed(r)
        if closed != strata:
            raise Disagreement(f"r={r}: closed form {closed} != strata sum {strata}")
    return OutputRecord.from_poly("M02", r, method, strata)


def _serre(args) -> tuple[str, int]:
    rec = cmd_serre(args.space, args.r, args.d, args.method)
    return render_records([rec], args.format), EXIT_OK


def _betti(args) -> tuple[str, int]:
    _positive("--r", args.r)
    table = closedform.betti_table(args.r)
    if args.format == "json":
        return render_json(table.to_dict()), EXIT_OK
    rows = [(j, b) for j, b in enumerate(table.betti)] + [("euler", table.euler)]
    return render_rows(["j", "betti"], rows, args.format), EXIT_OK


def _tables(args) -> tuple[str, int]:
    _positive("--r-max", args.r_max)
    text = render_table(args.which, args.r_max, args.format)
    if args.golden:
        if args.format != "csv" or args.r_max != FIXTURE_R_MAX:
            raise UsageError(f"--golden needs --format csv and --r-max {FIXTURE_R_MAX}")
        if text != fixture_text(args.which):
            sys.stderr.write(f"table {args.which} differs from the stored fixture\n")
            return text, EXIT_FAIL
    return text, EXIT_OK


def _basis(args) -> tuple[str, int]:
    _positive("--r", args.r)
    top = 3 * args.r + 1
    if args.degree is not None and not 0 <= args.degree <= top:
        raise UsageError(f"--degree must lie in 0..{top}")
    degrees = [args.degree] if args.degree is not None else range(top + 1)
    summands = [s for k in degrees for s in basis_catalog(args.r, k) if s.dim]
    report = verify_basis(args.r)
    if args.format == "json":
        payload = {
            "r": args.r,
            "grading": "codegree",
            "summands": [s.to_dict() for s in summands],
            "check": report.to_dict(),
        }
        return render_json(payload), EXIT_OK
    cols = ["codegree", "source", "generator", "shift", "base", "base_codegree", "dim"]
    rows = [[s.to_dict()[c] for c in cols] for s in summands]
    return render_rows(cols, rows, args.format), EXIT_OK


def _strata(args) -> tuple[str, int]:
    if args.r is not None:
        _positive("--r", args.r)
    out = []
    for s in moduli.STRATA:
        row = {
            "label": s.label,
            "description": s.description(),
            "automorphisms": s.automorphisms,
            "tree": s.tree.describe(),
            "note": s.note,
        }
        if args.r is not None:
            p = moduli.serre_stratum(args.r, s)
            row.update(grading="dimension", coefficients=list(p.coeffs), euler=p(1))
        out.append(row)
    if args.format == "json":
        payload = {"r": args.r, "strata": out}
        if args.r is not None:
            payload["total"] = OutputRecord.from_poly(
                "M02", args.r, "strata", moduli.serre_m02_strata(args.r)
            ).to_dict()
        return render_json(payload), EXIT_OK
    cols = list(out[0])
    return render_rows(cols, [[row[c] for c in cols] for row in out], args.format), EXIT_OK


def _trees(args) -> tuple[str, int]:
    if args.n < 0 or args.d < 0:
        raise UsageError("--n and --d must be nonnegative")
    trees = enumerate_stable_trees(args.n, args.d)
    n_types = len(group_by_type(trees))
    if args.format == "json":
        payload = {
            "n": args.n,
            "d": args.d,
            "classes": len(trees),
            "types": n_types,
            "trees": [t.to_dict() for t in trees],
        }
        return render_json(payload), EXIT_OK
    rows = [(i, t.describe(), t.automorphism_order()) for i, t in enumerate(trees)]
    return render_rows(["index", "tree", "automorphisms"], rows, args.format), EXIT_OK


def _verify(args) -> tuple[str, int]:
    _positive("--r-max", args.r_max)
    results = run_checks(args.r_max)
    code = EXIT_OK if all(c.passed for c in results) else EXIT_FAIL
    if args.format == "json":
        return render_json({"r_max": args.r_max, "checks": [c.to_dict() for c in results]}), code
    if args.format == "csv":
        rows = [(c.name, c.passed, c.detail) for c in results]
        return render_rows(["check", "passed", "detail"], rows, "csv"), code
    return "\n".join(c.line() for c in results) + "\n", code


# -- argument parsing -----------------------------------------------------

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS
    parser.add_argument("--format", choices=FORMATS,
                        default=default if suppress else "json", help="output format")
    parser.add_argument("--output", metavar="PATH",
                        default=default if suppress else None, help="write to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablemaps",
        description="Poincare polynomials of spaces of degree-two stable maps to P^r.",
    )
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serre", parents=[common], help="one Serre polynomial")
    p.add_argument("--space", required=True, type=str.lower, choices=("m02", "m01", "m00"))
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--method", default="closed", choices=("closed", "strata", "both"))
    p.set_defaults(func=_serre)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of M02")
    p.add_argument("--r", required=True, type=int)
    p.set_defaults(func=_betti)

    p = sub.add_parser("tables", parents=[common], help="tables of Poincare polynomials")
    p.add_argument("--which", required=True, type=int, choices=(1, 2),
                   help="1 for one marked point, 2 for two")
    p.add_argument("--r-max", required=True, type=int)
    p.add_argument("--golden", action="store_true",
                   help="compare the CSV against the stored fixture")
    p.set_defaults(func=_tables)

    p = sub.add_parser("basis", parents=[common], help="additive basis catalog")
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--degree", type=int, help="codegree")
    p.set_defaults(func=_basis)

    p = sub.add_parser("strata", parents=[common], help="the ten strata of M02")
    p.add_argument("--list", action="store_true", help="list the recipes (default)")
    p.add_argument("--r", type=int)
    p.set_defaults(func=_strata)

    p = sub.add_parser("trees", parents=[common], help="enumerate stable trees")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.set_defaults(func=_trees)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--r-max", required=True, type=int)
    p.set_defaults(func=_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"stablemaps: error: {exc}\n")
        return EXIT_USAGE
    except (Disagreement, ConsistencyError, BranchMismatch, DivisionNotExact) as exc:
        sys.stderr.write(f"stablemaps: internal disagreement: {exc}\n")
        return EXIT_INTERNAL
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"stablemaps: error: {exc}\n")
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
