"""Command-line front end: evaluate bounds, tabulate, verify, report.

Subcommands
    bound   evaluate one theorem bound (coefficient or successive difference)
    table   CSV/JSON/text grid of all bounds over lambda and p values
    verify  run the extremal oracle against selected claims
    report  run the full registered claim suite, emit consolidated JSON
    roots   print the cubic root r0 used by the |a4| branch structure

Exit codes: 0 success with no violations, 1 at least one violation found,
2 usage or validation error.  Data goes to stdout, diagnostics to stderr.
JSON floats are emitted value-preserving (shortest round-trip form); text
mode prints 6 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import bounds, oracle

_FORMATS = ("text", "json", "csv")

#: Documented column order for `table` CSV output.
TABLE_COLUMNS = [
    "lambda",
    "p",
    "a2_bound",
    "a3_bound",
    "a4_bound",
    "d32_bound",
    "d43_bound",
    "a3_branch",
    "a4_branch",
    "d32_branch",
    "d43_branch",
]

#: Documented column order for `verify` CSV output.
REPORT_COLUMNS = [
    "claim_id",
    "lambda",
    "p",
    "bound",
    "branch",
    "oracle_max",
    "witness_p1",
    "witness_x_re",
    "witness_x_im",
    "witness_y_re",
    "witness_y_im",
    "gap",
    "violation",
    "samples",
    "seed",
    "duration_ms",
    "variant",
]


class UsageError(ValueError):
    """Invalid flags or out-of-range values; maps to exit code 2."""


@dataclass
class RunConfig:
    command: str
    lambdas: list[float] = field(default_factory=list)
    ps: Optional[list[float]] = None
    cls: str = "starlike"
    n: Optional[int] = None
    which: Optional[str] = None
    claims: list[str] = field(default_factory=list)
    budget: int = oracle.DEFAULT_BUDGET
    seed: int = oracle.DEFAULT_SEED
    tol: float = oracle.DEFAULT_TOL
    psi2_variant: str = "proof"
    fmt: str = "text"
    workers: int = 1


def _default_workers() -> int:
    env = os.environ.get("COEFBOUND_WORKERS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"COEFBOUND_WORKERS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def _parse_floats(items: Optional[list[str]], flag: str) -> list[float]:
    if not items:
        return []
    out = []
    for chunk in items:
        for tok in str(chunk).split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                out.append(float(tok))
            except ValueError as exc:
                raise UsageError(f"{flag} expects numbers, got {tok!r}") from exc
    return out


def _validate_lambdas(lams: list[float]) -> list[float]:
    for lam in lams:
        if not 0.0 < lam <= math.pi / 2 + 1e-12:
            raise UsageError(f"lambda must lie in (0, pi/2], got {lam}")
    return lams


def _validate_ps(ps: list[float], cls: str) -> list[float]:
    pmax = 2.0 if cls == "starlike" else 1.0
    for p in ps:
        if not 0.0 <= p <= pmax:
            raise UsageError(f"p must lie in [0, {pmax}] for the {cls} class, got {p}")
    return ps


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coefbound",
        description="Evaluate and verify sharp coefficient bounds for classes "
        "subordinate to exp(lambda*z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_oracle: bool):
        sp.add_argument("--format", choices=_FORMATS, default="text")
        if with_oracle:
            sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
            sp.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
            sp.add_argument("--tol", type=float, default=oracle.DEFAULT_TOL)
            sp.add_argument("--workers", type=int, default=None)
        sp.add_argument("--psi2-variant", choices=("proof", "statement"), default="proof")

    sp = sub.add_parser("bound", help="evaluate one bound")
    sp.add_argument("--class", dest="cls", choices=("starlike", "convex"), required=True)
    sp.add_argument("--lambda", dest="lambdas", action="append", required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, choices=(2, 3, 4))
    group.add_argument("--which", choices=("d32", "d43"))
    sp.add_argument("--p", dest="ps", action="append")
    common(sp, with_oracle=False)

    sp = sub.add_parser("table", help="grid of all bounds")
    sp.add_argument("--class", dest="cls", choices=("starlike", "convex"), required=True)
    sp.add_argument("--lambda", dest="lambdas", action="append", required=True)
    sp.add_argument("--p", dest="ps", action="append")
    common(sp, with_oracle=False)

    sp = sub.add_parser("verify", help="verify selected claims with the oracle")
    sp.add_argument("--claim", dest="claims", action="append", required=True)
    sp.add_argument("--lambda", dest="lambdas", action="append")
    sp.add_argument("--p", dest="ps", action="append")
    common(sp, with_oracle=True)

    sp = sub.add_parser("report", help="run the full registered claim suite")
    common(sp, with_oracle=True)

    sp = sub.add_parser("roots", help="print r0 and its residual")
    common(sp, with_oracle=False)

    return parser


def parse_args(argv: list[str]) -> RunConfig:
    """Deterministic flag parsing and range validation.

    Raises UsageError (exit 2) for malformed or out-of-range values; argparse
    itself exits with code 2 for unknown flags or a missing subcommand.
    """
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    cfg.fmt = ns.format
    cfg.psi2_variant = ns.psi2_variant
    cfg.cls = getattr(ns, "cls", "starlike")
    cfg.n = getattr(ns, "n", None)
    cfg.which = getattr(ns, "which", None)
    cfg.claims = list(getattr(ns, "claims", []) or [])
    cfg.lambdas = _validate_lambdas(_parse_floats(getattr(ns, "lambdas", None), "--lambda"))
    raw_ps = _parse_floats(getattr(ns, "ps", None), "--p")
    cfg.ps = raw_ps if raw_ps else None
    if hasattr(ns, "budget"):
        cfg.budget = ns.budget
        cfg.seed = ns.seed
        cfg.tol = ns.tol
        cfg.workers = ns.workers if ns.workers is not None else _default_workers()
        if cfg.budget < 1000:
            raise UsageError(f"budget must be at least 1000, got {cfg.budget}")
        if cfg.workers < 1:
            raise UsageError(f"workers must be positive, got {cfg.workers}")
        if cfg.tol < 0:
            raise UsageError(f"tol must be nonnegative, got {cfg.tol}")
    if cfg.command in ("bound", "table") and cfg.ps is not None:
        _validate_ps(cfg.ps, cfg.cls)
    if cfg.command == "verify":
        for claim in cfg.claims:
            if claim not in oracle.CLAIMS:
                raise UsageError(
                    f"unknown claim {claim!r}; registered: {', '.join(sorted(oracle.CLAIMS))}"
                )
            spec = oracle.CLAIMS[claim]
            if cfg.ps is not None and spec.default_ps is not None:
                _validate_ps(cfg.ps, spec.cls)
    return cfg


def _fmt_text(x: float) -> str:
    return f"{x:.6g}"


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _default_table_ps(cls: str) -> list[float]:
    return [0.0, 0.5, 1.0, 1.5, 2.0] if cls == "starlike" else [0.0, 0.25, 0.5, 0.75, 1.0]


def _bound_for(cfg: RunConfig, lam: float, p: Optional[float]) -> bounds.BoundResult:
    if cfg.n is not None:
        if cfg.cls == "starlike":
            return bounds.s_star_coeff_bound(cfg.n, lam)
        return bounds.k_coeff_bound(cfg.n, lam)
    if p is None:
        raise UsageError(f"--which {cfg.which} needs --p")
    if cfg.cls == "starlike":
        return bounds.s_diff_bound(cfg.which, lam, p, psi2_variant=cfg.psi2_variant)
    return bounds.k_diff_bound(cfg.which, lam, p)


def _bound_result_dict(b: bounds.BoundResult) -> dict:
    return {
        "value": b.value,
        "branch": b.branch,
        "lambda": b.lam,
        "class": b.cls,
        "n": b.n,
        "p": b.p,
        "which": b.which,
        "variant": b.variant,
    }


def _cmd_bound(cfg: RunConfig) -> int:
    rows = []
    ps = cfg.ps if cfg.ps is not None else [None]
    for lam in cfg.lambdas:
        for p in ps:
            rows.append(_bound_for(cfg, lam, p))
    if cfg.fmt == "json":
        _emit_json([_bound_result_dict(b) for b in rows])
    elif cfg.fmt == "csv":
        print("lambda,p,class,n,which,value,branch")
        for b in rows:
            p = "" if b.p is None else repr(b.p)
            n = "" if b.n is None else b.n
            w = b.which or ""
            print(f"{b.lam!r},{p},{b.cls},{n},{w},{b.value!r},{b.branch}")
    else:
        for b in rows:
            print(f"{_fmt_text(b.value)} (branch: {b.branch})")
    return 0


def _cmd_table(cfg: RunConfig) -> int:
    ps = cfg.ps if cfg.ps is not None else _default_table_ps(cfg.cls)
    _validate_ps(ps, cfg.cls)
    diff = bounds.s_diff_bound if cfg.cls == "starlike" else bounds.k_diff_bound
    coeff = bounds.s_star_coeff_bound if cfg.cls == "starlike" else bounds.k_coeff_bound
    rows = []
    for lam in cfg.lambdas:
        a2, a3, a4 = (coeff(n, lam) for n in (2, 3, 4))
        for p in ps:
            kwargs = {"psi2_variant": cfg.psi2_variant} if cfg.cls == "starlike" else {}
            d32 = diff("d32", lam, p, **kwargs)
            d43 = diff("d43", lam, p, **kwargs)
            rows.append(
                {
                    "lambda": lam,
                    "p": p,
                    "a2_bound": a2.value,
                    "a3_bound": a3.value,
                    "a4_bound": a4.value,
                    "d32_bound": d32.value,
                    "d43_bound": d43.value,
                    "a3_branch": a3.branch,
                    "a4_branch": a4.branch,
                    "d32_branch": d32.branch,
                    "d43_branch": d43.branch,
                }
            )
    if cfg.fmt == "json":
        _emit_json(rows)
    elif cfg.fmt == "csv":
        print(",".join(TABLE_COLUMNS))
        for r in rows:
            cells = []
            for col in TABLE_COLUMNS:
                v = r[col]
                cells.append(repr(v) if isinstance(v, float) else str(v))
            print(",".join(cells))
    else:
        for r in rows:
            print(
                f"lambda={_fmt_text(r['lambda'])} p={_fmt_text(r['p'])}: "
                f"a2<={_fmt_text(r['a2_bound'])} a3<={_fmt_text(r['a3_bound'])} "
                f"a4<={_fmt_text(r['a4_bound'])} d32<={_fmt_text(r['d32_bound'])} "
                f"d43<={_fmt_text(r['d43_bound'])}"
            )
    return 0


def _report_csv_row(d: dict) -> str:
    w = d["witness"]
    flat = {
        "claim_id": d["claim_id"],
        "lambda": repr(d["lambda"]),
        "p": "" if d["p"] is None else repr(d["p"]),
        "bound": repr(d["bound"]),
        "branch": d["branch"],
        "oracle_max": repr(d["oracle_max"]),
        "witness_p1": repr(w["p1"]),
        "witness_x_re": repr(w["x_re"]),
        "witness_x_im": repr(w["x_im"]),
        "witness_y_re": repr(w["y_re"]),
        "witness_y_im": repr(w["y_im"]),
        "gap": repr(d["gap"]),
        "violation": str(d["violation"]).lower(),
        "samples": str(d["samples"]),
        "seed": str(d["seed"]),
        "duration_ms": str(d["duration_ms"]),
        "variant": d["variant"] or "",
    }
    return ",".join(flat[c] for c in REPORT_COLUMNS)


def _print_reports(reports, fmt: str) -> None:
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        _emit_json(dicts)
    elif fmt == "csv":
        print(",".join(REPORT_COLUMNS))
        for d in dicts:
            print(_report_csv_row(d))
    else:
        for d in dicts:
            p = "" if d["p"] is None else f" p={_fmt_text(d['p'])}"
            flag = "VIOLATION" if d["violation"] else "ok"
            print(
                f"{d['claim_id']} lambda={_fmt_text(d['lambda'])}{p}: "
                f"bound={_fmt_text(d['bound'])} [{d['branch']}] "
                f"oracle_max={_fmt_text(d['oracle_max'])} gap={d['gap']:.3e} {flag}"
            )


def _cmd_verify(cfg: RunConfig) -> int:
    reports = []
    for claim in cfg.claims:
        spec = oracle.CLAIMS[claim]
        lams = cfg.lambdas if cfg.lambdas else list(spec.default_lambdas)
        reports.extend(
            oracle.verify_claim(
                claim,
                lams,
                cfg.ps,
                budget=cfg.budget,
                seed=cfg.seed,
                tol=cfg.tol,
                psi2_variant=cfg.psi2_variant,
                workers=cfg.workers,
            )
        )
    _print_reports(reports, cfg.fmt)
    return 1 if any(r.violation for r in reports) else 0


def _cmd_report(cfg: RunConfig) -> int:
    reports = oracle.run_claim_suite(
        budget=cfg.budget,
        seed=cfg.seed,
        tol=cfg.tol,
        psi2_variant=cfg.psi2_variant,
        workers=cfg.workers,
    )
    violated = sorted({r.claim_id for r in reports if r.violation})
    doc = {
        "suite": "coefbound-claims",
        "seed": cfg.seed,
        "budget": cfg.budget,
        "tol": cfg.tol,
        "psi2_variant": cfg.psi2_variant,
        "total_reports": len(reports),
        "violation_count": sum(r.violation for r in reports),
        "violated_claim_ids": violated,
        "claims": [r.to_dict() for r in reports],
    }
    _emit_json(doc)
    return 1 if violated else 0


def _cmd_roots(cfg: RunConfig) -> int:
    r0 = bounds.r0_root()
    residual = abs(425.0 * r0 ** 3 + 340.0 * r0 * r0 - 328.0 * r0 - 240.0)
    if cfg.fmt == "json":
        _emit_json({"r0": r0, "residual": residual})
    elif cfg.fmt == "csv":
        print("r0,residual")
        print(f"{r0!r},{residual!r}")
    else:
        print(f"r0 = {r0:.17g}  residual = {residual:.3e}")
    return 0


def run(cfg: RunConfig) -> int:
    """Dispatch a validated config; returns the process exit code."""
    handlers = {
        "bound": _cmd_bound,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "report": _cmd_report,
        "roots": _cmd_roots,
    }
    return handlers[cfg.command](cfg)


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        cfg = parse_args(list(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return run(cfg)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
