"""Command line front end.

Subcommands:
  eval    evaluate one of the special functions at a point
  radius  solve one radius-of-starlikeness query
  table   solve a parameter grid, optionally writing a CSV + manifest
  zeros   list positive zeros of a series stream
  verify  run a named verification suite

Exit codes: 0 success, 1 unexpected library error, 2 invalid input
(bad parameter, bad query, singular point), 3 numeric failure (no
convergence, no root or sign change, quadrature trouble, target below
infimum), 4 certification ran and failed, 5 verification suite failure
or an exact-arithmetic degeneracy.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import io
import json
import math
import os
import sys
from typing import Dict, List, Optional, Sequence

from . import __version__
from .errors import (
    DegenerateSequence,
    InvalidParameter,
    InvalidQuery,
    NoRootFound,
    NoSignChange,
    NonConvergent,
    PreconditionViolated,
    QuadratureFailure,
    SingularPoint,
    StarRadError,
    TargetBelowInfimum,
)
from .radius import RadiusQuery, TableRow, radius_of_starlikeness, radius_table
from .series import (
    FunctionFamily,
    SeriesConfig,
    even_series_value,
    lommel_numerator_series,
    lommel_s,
    phi_series,
    struve_h,
    struve_kernel_series,
    struve_numerator_series,
)
from .suites import SUITE_NAMES, run_suite
from .zerofind import ScanConfig, positive_zeros_up_to

_EXIT_OK = 0
_EXIT_ERROR = 1
_EXIT_BAD_INPUT = 2
_EXIT_NUMERIC = 3
_EXIT_CERTIFICATION = 4
_EXIT_VERIFY = 5

_BAD_INPUT_ERRORS = (InvalidParameter, InvalidQuery, SingularPoint)
_NUMERIC_ERRORS = (
    NonConvergent,
    NoRootFound,
    NoSignChange,
    QuadratureFailure,
    TargetBelowInfimum,
)
_VERIFY_ERRORS = (DegenerateSequence, PreconditionViolated)

_CSV_COLUMNS = (
    "family",
    "param",
    "alpha",
    "radius",
    "equation_root",
    "regime",
    "residual",
    "certified",
)


def _exit_code_for(exc: StarRadError) -> int:
    if isinstance(exc, _BAD_INPUT_ERRORS):
        return _EXIT_BAD_INPUT
    if isinstance(exc, _NUMERIC_ERRORS):
        return _EXIT_NUMERIC
    if isinstance(exc, _VERIFY_ERRORS):
        return _EXIT_VERIFY
    return _EXIT_ERROR


def _series_config(args: argparse.Namespace) -> SeriesConfig:
    rel_tol = getattr(args, "rel_tol", None)
    if rel_tol is None:
        env = os.environ.get("STARRAD_TOL")
        rel_tol = float(env) if env else 1e-14
    max_terms = getattr(args, "max_terms", None) or 500
    return SeriesConfig(rel_tol=rel_tol, max_terms=max_terms)


def _print_pairs(pairs, stream) -> None:
    for key, value in pairs:
        print(f"{key} = {value}", file=stream)


def _emit(payload: Dict, pairs, fmt: str, stream) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=stream)
    else:
        _print_pairs(pairs, stream)


def _float_field(x: Optional[float]) -> str:
    return "" if x is None else repr(x)


# ---------------------------------------------------------------------------
# eval


def _require(args: argparse.Namespace, names: Sequence[str], function: str) -> List[float]:
    values = []
    for name in names:
        val = getattr(args, name.replace("-", "_"))
        if val is None:
            raise InvalidParameter(f"function {function!r} needs --{name}")
        values.append(val)
    return values


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _series_config(args)
    name = args.function.strip().lower().replace("-", "_")
    z = args.z
    if name == "lommel_s":
        (mu_raw, nu_raw) = _require(args, ("mu-raw", "nu-raw"), name)
        sv = lommel_s(mu_raw, nu_raw, z, cfg)
        params = {"mu_raw": mu_raw, "nu_raw": nu_raw}
    elif name == "struve_h":
        (nu,) = _require(args, ("nu",), name)
        sv = struve_h(nu, z, cfg)
        params = {"nu": nu}
    elif name in ("phi0", "phi1"):
        (mu,) = _require(args, ("mu",), name)
        stream = phi_series(mu, 0 if name == "phi0" else 1)
        sv = even_series_value(stream, z, cfg)
        params = {"mu": mu}
    elif name == "psi_mu":
        (mu, c) = _require(args, ("mu", "c"), name)
        sv = even_series_value(lommel_numerator_series(mu, c), z, cfg)
        params = {"mu": mu, "c": c}
    elif name == "phi_nu":
        (nu, d) = _require(args, ("nu", "d"), name)
        sv = even_series_value(struve_numerator_series(nu, d), z, cfg)
        params = {"nu": nu, "d": d}
    else:
        raise InvalidParameter(
            f"unknown function {args.function!r}; choose from "
            "lommel_s, struve_h, phi0, phi1, psi_mu, phi_nu"
        )
    payload = {
        "function": name,
        "z": z,
        "value": sv.value,
        "err_bound": sv.err_bound,
        "terms_used": sv.terms_used,
        **params,
    }
    pairs = [("function", name)]
    pairs += sorted(params.items())
    pairs += [
        ("z", repr(z)),
        ("value", repr(sv.value)),
        ("err_bound", repr(sv.err_bound)),
        ("terms_used", sv.terms_used),
    ]
    _emit(payload, pairs, args.format, sys.stdout)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# radius


def _cmd_radius(args: argparse.Namespace) -> int:
    cfg = _series_config(args)
    family = FunctionFamily.from_string(args.family)
    query = RadiusQuery(family, args.param, args.alpha, diagnostic=args.diagnostic)
    result = radius_of_starlikeness(
        query, cfg, certify=not args.no_certify, n_samples=args.samples
    )
    payload = {
        "family": family.value,
        "param": args.param,
        "alpha": args.alpha,
        "radius": result.radius,
        "equation_root": result.equation_root,
        "equation_constant": result.equation_constant,
        "regime": result.regime.value,
        "residual": result.residual,
        "certified": result.certified,
        "bracket": [result.bracket.lo, result.bracket.hi],
        "note": result.note,
    }
    pairs = [
        ("family", family.value),
        ("param", repr(args.param)),
        ("alpha", repr(args.alpha)),
        ("radius", repr(result.radius)),
        ("equation_root", repr(result.equation_root)),
        ("equation_constant", repr(result.equation_constant)),
        ("regime", result.regime.value),
        ("residual", repr(result.residual)),
        ("certified", str(result.certified).lower()),
        ("bracket", f"[{result.bracket.lo!r}, {result.bracket.hi!r}]"),
        ("note", result.note or ""),
    ]
    _emit(payload, pairs, args.format, sys.stdout)
    if result.note and "certification failed" in result.note:
        return _EXIT_CERTIFICATION
    return _EXIT_OK


# ---------------------------------------------------------------------------
# table


def _parse_value_list(text: str, what: str) -> List[float]:
    text = text.strip()
    if not text:
        raise InvalidParameter(f"empty {what} list")
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise InvalidParameter(
                f"range syntax for {what} is start:stop:count, got {text!r}"
            )
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if count < 1:
            raise InvalidParameter(f"{what} range count must be >= 1")
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _parse_families(text: str) -> List[FunctionFamily]:
    text = text.strip().lower()
    if text == "all":
        return list(FunctionFamily)
    return [FunctionFamily.from_string(tok) for tok in text.split(",") if tok.strip()]


def _row_record(row: TableRow) -> Dict[str, str]:
    return {
        "family": row.family,
        "param": repr(row.param),
        "alpha": repr(row.alpha),
        "radius": _float_field(row.radius),
        "equation_root": _float_field(row.equation_root),
        "regime": row.regime or "",
        "residual": _float_field(row.residual),
        "certified": "" if row.certified is None else str(row.certified).lower(),
    }


def _rows_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    buf.write(",".join(_CSV_COLUMNS) + "\n")
    for row in rows:
        rec = _row_record(row)
        buf.write(",".join(rec[col] for col in _CSV_COLUMNS) + "\n")
    return buf.getvalue()


def _write_manifest(path: str, args, rows: Sequence[TableRow], csv_bytes: bytes, cfg) -> None:
    manifest = {
        "tool": "starrad",
        "version": __version__,
        "command": " ".join(["starrad"] + list(args.raw_argv)),
        "generated_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "rel_tol": cfg.rel_tol,
        "max_terms": cfg.max_terms,
        "columns": list(_CSV_COLUMNS),
        "rows": len(rows),
        "row_status": [
            {
                "family": row.family,
                "param": row.param,
                "alpha": row.alpha,
                "status": "error" if row.error else "ok",
                "error": row.error,
            }
            for row in rows
        ],
        "data_sha256": hashlib.sha256(csv_bytes).hexdigest(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cmd_table(args: argparse.Namespace) -> int:
    cfg = _series_config(args)
    families = _parse_families(args.families)
    params = _parse_value_list(args.params, "params")
    alphas = _parse_value_list(args.alphas, "alphas")
    rows = radius_table(
        families,
        params,
        alphas,
        cfg,
        certify=not args.no_certify,
        diagnostic=args.diagnostic,
        n_samples=args.samples,
    )
    csv_text = _rows_to_csv(rows)
    if args.output:
        data = csv_text.encode("utf-8")
        with open(args.output, "wb") as fh:
            fh.write(data)
        _write_manifest(args.output + ".manifest.json", args, rows, data, cfg)
        n_err = sum(1 for row in rows if row.error)
        print(f"wrote {len(rows)} rows to {args.output} ({n_err} errors)")
    elif args.format == "csv":
        sys.stdout.write(csv_text)
    elif args.format == "json":
        payload = [
            {
                "family": row.family,
                "param": row.param,
                "alpha": row.alpha,
                "radius": row.radius,
                "equation_root": row.equation_root,
                "regime": row.regime,
                "residual": row.residual,
                "certified": row.certified,
                "error": row.error,
            }
            for row in rows
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for row in rows:
            rec = _row_record(row)
            cells = " ".join(f"{col}={rec[col] or '-'}" for col in _CSV_COLUMNS)
            if row.error:
                cells += f" error={row.error!r}"
            print(cells)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# zeros


def _cmd_zeros(args: argparse.Namespace) -> int:
    cfg = _series_config(args)
    name = args.function.strip().lower().replace("-", "_")
    if name == "phi0":
        (mu,) = _require(args, ("mu",), name)
        stream = phi_series(mu, 0)
        params = {"mu": mu}
    elif name == "phi1":
        (mu,) = _require(args, ("mu",), name)
        stream = phi_series(mu, 1)
        params = {"mu": mu}
    elif name == "psi_mu":
        (mu, c) = _require(args, ("mu", "c"), name)
        stream = lommel_numerator_series(mu, c)
        params = {"mu": mu, "c": c}
    elif name == "kernel":
        (nu,) = _require(args, ("nu",), name)
        stream = struve_kernel_series(nu)
        params = {"nu": nu}
    elif name == "phi_nu":
        (nu, d) = _require(args, ("nu", "d"), name)
        stream = struve_numerator_series(nu, d)
        params = {"nu": nu, "d": d}
    else:
        raise InvalidParameter(
            f"unknown function {args.function!r}; choose from "
            "phi0, phi1, psi_mu, kernel, phi_nu"
        )
    # keep the scan inside the range where the compensated summation is
    # still sound for this alternating series
    limit = args.limit if args.limit else min((args.count + 2) * math.pi, 60.0)
    scan = ScanConfig(max_radius=limit)
    roots = positive_zeros_up_to(
        lambda t: even_series_value(stream, t, cfg).value, limit, scan, count=args.count
    )
    zeros = [rr.root for rr in roots]
    annotate = name == "phi0" and 0.0 < params["mu"] < 1.0
    payload = {"label": stream.label, "count": len(zeros), "zeros": zeros, **params}
    pairs = [("label", stream.label), ("count", len(zeros))]
    if annotate:
        bounds = []
        for n, zero in enumerate(zeros, start=1):
            lo, hi = n * math.pi, (n + 1) * math.pi
            bounds.append([lo, hi])
            within = lo < zero < hi
            pairs.append(
                (f"zero_{n:02d}", f"{zero!r} (bounds {lo!r}..{hi!r}, within = {str(within).lower()})")
            )
        payload["bounds"] = bounds
    else:
        for n, zero in enumerate(zeros, start=1):
            pairs.append((f"zero_{n:02d}", repr(zero)))
    _emit(payload, pairs, args.format, sys.stdout)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _series_config(args)
    reports = run_suite(args.suite, cfg)
    if args.format == "json":
        payload = [
            {
                "check_name": rep.check_name,
                "measured": rep.measured,
                "tolerance": rep.tolerance,
                "passed": rep.passed,
                "context": rep.context,
            }
            for rep in reports
        ]
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            print(
                f"{status} {rep.check_name} measured={rep.measured:.6e} "
                f"tol={rep.tolerance:.6e}"
            )
    n_failed = sum(1 for rep in reports if not rep.passed)
    print(f"{len(reports) - n_failed}/{len(reports)} checks passed")
    return _EXIT_VERIFY if n_failed else _EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_tol_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--rel-tol", type=float, default=None,
                     help="series relative tolerance (default 1e-14, or STARRAD_TOL)")
    sub.add_argument("--max-terms", type=int, default=None,
                     help="series term cap (default 500)")


def _add_format_option(sub: argparse.ArgumentParser, choices=("plain", "json")) -> None:
    sub.add_argument("--format", choices=list(choices), default="plain",
                     help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starrad",
        description="radii of starlikeness for normalized Lommel and Struve functions",
    )
    parser.add_argument("--version", action="version", version=f"starrad {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate a special function at a point")
    p_eval.add_argument("--function", required=True)
    p_eval.add_argument("--z", type=float, required=True)
    p_eval.add_argument("--mu", type=float, default=None)
    p_eval.add_argument("--nu", type=float, default=None)
    p_eval.add_argument("--c", type=float, default=None)
    p_eval.add_argument("--d", type=float, default=None)
    p_eval.add_argument("--mu-raw", type=float, default=None)
    p_eval.add_argument("--nu-raw", type=float, default=None)
    _add_tol_options(p_eval)
    _add_format_option(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_rad = subs.add_parser("radius", help="solve one radius query")
    p_rad.add_argument("--family", required=True)
    p_rad.add_argument("--param", type=float, required=True)
    p_rad.add_argument("--alpha", type=float, required=True)
    p_rad.add_argument("--diagnostic", action="store_true",
                       help="allow boundary parameter values")
    p_rad.add_argument("--no-certify", action="store_true",
                       help="skip the boundary sampling certificate")
    p_rad.add_argument("--samples", type=int, default=512)
    _add_tol_options(p_rad)
    _add_format_option(p_rad)
    p_rad.set_defaults(func=_cmd_radius)

    p_tab = subs.add_parser("table", help="solve a grid of radius queries")
    p_tab.add_argument("--families", required=True,
                       help="comma list of family letters, or 'all'")
    p_tab.add_argument("--params", required=True,
                       help="comma list, or inclusive range start:stop:count")
    p_tab.add_argument("--alphas", required=True,
                       help="comma list, or inclusive range start:stop:count")
    p_tab.add_argument("--diagnostic", action="store_true")
    p_tab.add_argument("--no-certify", action="store_true")
    p_tab.add_argument("--samples", type=int, default=512)
    p_tab.add_argument("--output", default=None,
                       help="write CSV here (plus <output>.manifest.json)")
    _add_tol_options(p_tab)
    _add_format_option(p_tab, choices=("plain", "json", "csv"))
    p_tab.set_defaults(func=_cmd_table)

    p_zer = subs.add_parser("zeros", help="list positive zeros of a series stream")
    p_zer.add_argument("--function", required=True)
    p_zer.add_argument("--mu", type=float, default=None)
    p_zer.add_argument("--nu", type=float, default=None)
    p_zer.add_argument("--c", type=float, default=None)
    p_zer.add_argument("--d", type=float, default=None)
    p_zer.add_argument("--count", type=int, default=5)
    p_zer.add_argument("--limit", type=float, default=None,
                       help="scan limit (default derived from --count, capped at 60)")
    _add_tol_options(p_zer)
    _add_format_option(p_zer)
    p_zer.set_defaults(func=_cmd_zeros)

    p_ver = subs.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", default="all", choices=list(SUITE_NAMES))
    _add_tol_options(p_ver)
    _add_format_option(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.raw_argv = argv
    try:
        return args.func(args)
    except StarRadError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
