"""Command line interface.

Subcommands:
  verify     run the exact and numeric claim suites, emit a JSON report
  adjoint    materialize the adjoint of a polynomial map read from JSON
  norm       certify sup-norm or adjoint-norm claims for a map from JSON
  decompose  finite-type representation and expansion terms for a map

POLYADJOINT_SEED, POLYADJOINT_TOL, POLYADJOINT_DIMS, POLYADJOINT_FIELD and
POLYADJOINT_RESTARTS supply defaults; explicit flags always win.

Exit codes: 0 all claims hold, 1 a claim failed, 2 bad input, 3 a size cap
would be exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import F64, RATIONAL
from .adjoint import materialize_adjoint
from .errors import (
    CapacityError,
    DegenerateInputError,
    DegreeError,
    DimensionError,
    FieldError,
    PreconditionError,
    SearchBudgetError,
)
from .finite_type import expand_adjoint, finite_rank_rep
from .norms import NormConfig, check_adjoint_norm, sup_norm
from .serialization import (
    expansion_to_obj,
    materialized_to_obj,
    polymap_from_obj,
    sha256_hex,
)
from .suites import SuiteConfig, run_all, report_to_json

INPUT_ERRORS = (DimensionError, DegreeError, FieldError, PreconditionError,
                DegenerateInputError, SearchBudgetError, KeyError, TypeError,
                ValueError, OSError)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return fallback if raw is None else int(raw)


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    return fallback if raw is None else float(raw)


def _env_str(name: str, fallback: str) -> str:
    return os.environ.get(name, fallback)


def _parse_dims(raw: str) -> tuple[int, ...]:
    dims = tuple(int(p) for p in raw.split(",") if p.strip())
    if not dims:
        raise ValueError(f"empty dims spec: {raw!r}")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyadjoint",
        description="adjoint calculus for homogeneous polynomial maps")
    sub = parser.add_subparsers(dest="command")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int,
                       default=_env_int("POLYADJOINT_SEED", 1729))
        p.add_argument("--tol", type=float,
                       default=_env_float("POLYADJOINT_TOL", 1e-6))
        p.add_argument("--restarts", type=int,
                       default=_env_int("POLYADJOINT_RESTARTS", 64))
        p.add_argument("--out", default=None,
                       help="write the JSON result here instead of stdout")

    pv = sub.add_parser("verify", help="run every claim suite")
    common(pv)
    pv.add_argument("--dims", type=_parse_dims,
                    default=_parse_dims(_env_str("POLYADJOINT_DIMS", "2,3")))
    pv.add_argument("--max-m", type=int, default=2)
    pv.add_argument("--max-n", type=int, default=2)
    pv.add_argument("--max-k", type=int, default=2)
    pv.add_argument("--max-r", type=int, default=2)
    pv.add_argument("--max-s", type=int, default=2)
    pv.add_argument("--trials", type=int, default=20)
    pv.add_argument("--field", choices=("rational", "f64", "both"),
                    default=_env_str("POLYADJOINT_FIELD", "both"))
    pv.set_defaults(func=cmd_verify)

    pa = sub.add_parser("adjoint", help="materialize the adjoint of a map")
    common(pa)
    pa.add_argument("input", help="polynomial-map JSON file, or - for stdin")
    pa.add_argument("--n", type=int, required=True, help="power of the pullback")
    pa.add_argument("--k", type=int, required=True,
                    help="degree of the scalar test polynomials")
    pa.set_defaults(func=cmd_adjoint)

    pn = sub.add_parser("norm", help="certify a norm claim for a map")
    common(pn)
    pn.add_argument("input", help="polynomial-map JSON file, or - for stdin")
    pn.add_argument("--claim", choices=("sup", "delta"), default="sup")
    pn.add_argument("--n", type=int, default=1)
    pn.add_argument("--k", type=int, default=1)
    pn.set_defaults(func=cmd_norm)

    pd = sub.add_parser("decompose",
                        help="finite-type representation and expansion")
    common(pd)
    pd.add_argument("input", help="polynomial-map JSON file, or - for stdin")
    pd.add_argument("--n", type=int, default=1)
    pd.add_argument("--k", type=int, default=1)
    pd.set_defaults(func=cmd_decompose)

    return parser


def _read_input(path: str) -> tuple[dict, bytes]:
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            raw = fh.read()
    return json.loads(raw.decode("utf-8")), raw


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = SuiteConfig(seed=args.seed, dims=tuple(args.dims),
                      max_m=args.max_m, max_n=args.max_n, max_k=args.max_k,
                      max_r=args.max_r, max_s=args.max_s, trials=args.trials,
                      tol=args.tol, restarts=args.restarts, field=args.field)
    report = run_all(cfg)
    for claim in report["claims"]:
        status = "PASS" if claim["passed"] else "FAIL"
        print(f"{status}  {claim['name']}  instances={claim['instances']}  "
              f"max_defect={claim['max_defect']}", file=sys.stderr)
    _emit(report_to_json(report), args.out)
    return 0 if report["passed"] else 1


def cmd_adjoint(args: argparse.Namespace) -> int:
    obj, raw = _read_input(args.input)
    P = polymap_from_obj(obj)
    mat = materialize_adjoint(P, args.n, args.k)
    out_obj = materialized_to_obj(mat, sha256_hex(raw))
    _emit(json.dumps(out_obj, indent=2, sort_keys=True), args.out)
    return 0


def cmd_norm(args: argparse.Namespace) -> int:
    obj, _ = _read_input(args.input)
    P = polymap_from_obj(obj)
    if P.field == RATIONAL:
        P = P.as_field(F64)
    cfg = NormConfig(restarts=args.restarts, tol=args.tol, seed=args.seed)
    if args.claim == "sup":
        est = sup_norm(P, cfg)
        out_obj = {
            "claim": "sup_norm",
            "value": est.value,
            "maximizer": list(est.maximizer),
            "lower_bound_certified": est.lower_bound_certified,
            "iterations": est.iterations,
            "method": est.method,
        }
        _emit(json.dumps(out_obj, indent=2, sort_keys=True), args.out)
        return 0
    rep = check_adjoint_norm(P, args.n, args.k, cfg)
    _emit(json.dumps(rep.to_dict(), indent=2, sort_keys=True), args.out)
    return 0 if rep.passed else 1


def cmd_decompose(args: argparse.Namespace) -> int:
    obj, _ = _read_input(args.input)
    P = polymap_from_obj(obj)
    rep = finite_rank_rep(P)
    if rep.rank == 0:
        raise DegenerateInputError("the zero map has no finite-type expansion")
    expansion = expand_adjoint(rep, args.n, args.k)
    _emit(json.dumps(expansion_to_obj(expansion), indent=2, sort_keys=True),
          args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
    except ValueError as exc:
        print(f"error: bad environment variable: {exc}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help(file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON input: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
