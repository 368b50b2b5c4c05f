"""Brute-force extremal search over the exactly parameterized coefficient body.

Each theorem bound is paired with an independent maximization of the same
functional (|a2|, |a3|, |a4|, |a3 - a2| or |a4 - a3|) over the (p1, x, y)
parameter body, which generates exactly the admissible Caratheodory moment
triples.  A claim is *violated* when the search exceeds the printed bound by
more than the tolerance; violations are findings, never errors, because the
harness exists in part to document transcription defects.

Determinism contract: identical (claim, grids, budget, seed, tolerance,
variant) produce bit-identical reports.  Worker counts only partition the
evaluation of a fixed candidate array, and the reduction is an argmax over
the concatenated value vector with first-index tie-break, so results are
independent of partitioning and scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import bounds, series
from .schwarz import (
    CaratheodoryParams,
    caratheodory_moments,
    caratheodory_to_schwarz,
    sample_param_arrays,
)

FUNCTIONAL_KINDS = ("abs_a2", "abs_a3", "abs_a4", "abs_a3_minus_a2", "abs_a4_minus_a3")
_DIFFERENCE_KINDS = ("abs_a3_minus_a2", "abs_a4_minus_a3")

#: Default evaluation budget per (claim, grid point) and violation tolerance.
DEFAULT_BUDGET = 100_000
DEFAULT_TOL = 1e-9
DEFAULT_SEED = 42

_REFINE_ROUNDS = 5
_REFINE_SHRINK = 0.3
_REFINE_RADIUS0 = 0.3


@dataclass(frozen=True)
class Functional:
    """A bounded quantity, its class, and (for differences) the pinned p."""

    kind: str
    cls: str
    fixed_p: Optional[float] = None

    def __post_init__(self):
        if self.kind not in FUNCTIONAL_KINDS:
            raise ValueError(f"unknown functional {self.kind!r}")
        if self.cls not in ("starlike", "convex"):
            raise ValueError(f"unknown class {self.cls!r}")
        if self.kind in _DIFFERENCE_KINDS and self.fixed_p is None:
            raise ValueError(f"{self.kind} constrains f''(0); fixed_p is required")
        if self.fixed_p is not None:
            pmax = 2.0 if self.cls == "starlike" else 1.0
            if not 0.0 <= self.fixed_p <= pmax:
                raise ValueError(f"fixed_p must lie in [0, {pmax}] for {self.cls}")

    @property
    def effective_p1(self) -> Optional[float]:
        """The p1 value pinned by fixed_p: p for starlike, 2p for convex."""
        if self.fixed_p is None:
            return None
        return self.fixed_p if self.cls == "starlike" else 2.0 * self.fixed_p


def _coefficient_values(lam, p1, x, y, cls):
    """a2, a3, a4 from the closed moment formulas; works on scalars or arrays."""
    q = 4.0 - p1 * p1
    p2 = 0.5 * (p1 * p1 + q * x)
    p3 = 0.25 * (p1 ** 3 + 2.0 * q * p1 * x - q * p1 * x * x + 2.0 * q * (1.0 - np.abs(x) ** 2) * y)
    inner3 = p2 + (3.0 * lam - 2.0) / 4.0 * p1 * p1
    inner4 = p3 + (5.0 * lam - 4.0) / 4.0 * p1 * p2 + (
        17.0 * lam * lam - 30.0 * lam + 12.0
    ) / 48.0 * p1 ** 3
    if cls == "starlike":
        return 0.5 * lam * p1, 0.25 * lam * inner3, lam / 6.0 * inner4
    return 0.25 * lam * p1, lam / 12.0 * inner3, lam / 24.0 * inner4


def _functional_values(fn: Functional, lam, p1, x, y):
    a2, a3, a4 = _coefficient_values(lam, p1, x, y, fn.cls)
    if fn.kind == "abs_a2":
        return np.abs(a2)
    if fn.kind == "abs_a3":
        return np.abs(a3)
    if fn.kind == "abs_a4":
        return np.abs(a4)
    if fn.kind == "abs_a3_minus_a2":
        return np.abs(a3 - a2)
    return np.abs(a4 - a3)


def functional_value(fn: Functional, lam: float, params: CaratheodoryParams) -> float:
    """The requested modulus at one parameter point (fixed_p overrides p1)."""
    bounds._check_lambda(lam)
    p1 = fn.effective_p1
    if p1 is None:
        p1 = params.p1
    return float(_functional_values(fn, lam, np.float64(p1), np.complex128(params.x), np.complex128(params.y)))


def _chunked_eval(fn, lam, p1, x, y, workers: int) -> np.ndarray:
    """Evaluate the functional over candidate arrays, optionally in parallel.

    Chunking only splits elementwise work; the concatenated result is
    bit-identical for every worker count.
    """
    n = p1.size
    if workers <= 1 or n < 4096:
        return _functional_values(fn, lam, p1, x, y)
    out = np.empty(n, dtype=np.float64)
    step = -(-n // workers)
    spans = [(i, min(i + step, n)) for i in range(0, n, step)]

    def work(span):
        lo, hi = span
        out[lo:hi] = _functional_values(fn, lam, p1[lo:hi], x[lo:hi], y[lo:hi])

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(work, spans))
    return out


def _canonical_arrays(fn: Functional) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Boundary/axis witnesses evaluated unconditionally before any search."""
    units = np.array([0.0, 1.0, -1.0, 1.0j, -1.0j], dtype=np.complex128)
    eff = fn.effective_p1
    p1_levels = [eff] if eff is not None else [0.0, 1.0, 2.0]
    p1s, xs, ys = [], [], []
    for p in p1_levels:
        for xv in units:
            for yv in units:
                p1s.append(p)
                xs.append(xv)
                ys.append(yv)
    return np.array(p1s, dtype=float), np.array(xs), np.array(ys)


@dataclass(frozen=True)
class SearchResult:
    value: float
    witness: CaratheodoryParams
    samples: int


def extremal_search(
    fn: Functional,
    lam: float,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> SearchResult:
    """Maximize the functional over the admissible parameter body.

    Phases: canonical witnesses, a stratified grid plus random exploration
    (half the budget), then five refine-around rounds (a tenth of the budget
    each) shrinking the neighborhood geometrically around the incumbent.
    The incumbent is never discarded, and replacement requires strict
    improvement, so canonical witnesses win all exact ties.
    """
    bounds._check_lambda(lam)
    if budget < 1000:
        raise ValueError("budget must be at least 1000")
    eff = fn.effective_p1
    cp1, cx, cy = _canonical_arrays(fn)

    per_round = budget // 10
    explore = max(budget - _REFINE_ROUNDS * per_round - cp1.size, 0)
    gp1, gx, gy = sample_param_arrays(seed, max(explore // 2, 1), "grid", fixed_p1=eff)
    n_random = max(explore - gp1.size, 1)
    rp1, rx, ry = sample_param_arrays(seed, n_random, "random", fixed_p1=eff)

    p1 = np.concatenate([cp1, gp1, rp1])
    x = np.concatenate([cx, gx, rx])
    y = np.concatenate([cy, gy, ry])
    vals = _chunked_eval(fn, lam, p1, x, y, workers)
    i = int(np.argmax(vals))
    best = float(vals[i])
    bp1, bx, by = float(p1[i]), complex(x[i]), complex(y[i])
    evaluated = p1.size

    radius = _REFINE_RADIUS0
    for rnd in range(_REFINE_ROUNDS):
        center = CaratheodoryParams(bp1, bx, by)
        qp1, qx, qy = sample_param_arrays(
            [seed, rnd], per_round, "refine-around", fixed_p1=eff, center=center, radius=radius
        )
        vals = _chunked_eval(fn, lam, qp1, qx, qy, workers)
        j = int(np.argmax(vals))
        if float(vals[j]) > best:
            best = float(vals[j])
            bp1, bx, by = float(qp1[j]), complex(qx[j]), complex(qy[j])
        evaluated += qp1.size
        radius *= _REFINE_SHRINK

    return SearchResult(value=best, witness=CaratheodoryParams(bp1, bx, by), samples=evaluated)


@dataclass(frozen=True)
class VerificationReport:
    """One claim at one grid point: printed bound versus searched maximum."""

    claim_id: str
    lam: float
    p: Optional[float]
    bound: float
    branch: str
    oracle_max: float
    witness: CaratheodoryParams
    gap: float
    violation: bool
    samples: int
    seed: int
    duration_ms: int
    variant: Optional[str]

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "lambda": self.lam,
            "p": self.p,
            "bound": self.bound,
            "branch": self.branch,
            "oracle_max": self.oracle_max,
            "witness": {
                "p1": self.witness.p1,
                "x_re": self.witness.x.real,
                "x_im": self.witness.x.imag,
                "y_re": self.witness.y.real,
                "y_im": self.witness.y.imag,
            },
            "gap": self.gap,
            "violation": self.violation,
            "samples": self.samples,
            "seed": self.seed,
            "duration_ms": self.duration_ms,
            "variant": self.variant,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        w = d["witness"]
        return cls(
            claim_id=d["claim_id"],
            lam=d["lambda"],
            p=d["p"],
            bound=d["bound"],
            branch=d["branch"],
            oracle_max=d["oracle_max"],
            witness=CaratheodoryParams(
                w["p1"], complex(w["x_re"], w["x_im"]), complex(w["y_re"], w["y_im"])
            ),
            gap=d["gap"],
            violation=d["violation"],
            samples=d["samples"],
            seed=d["seed"],
            duration_ms=d["duration_ms"],
            variant=d["variant"],
        )


@dataclass(frozen=True)
class ClaimDef:
    """Registry entry: functional, bound evaluator inputs, default grids."""

    claim_id: str
    kind: str
    cls: str
    n: Optional[int]
    which: Optional[str]
    default_lambdas: tuple[float, ...]
    default_ps: Optional[tuple[float, ...]]
    pinned_variant: Optional[str] = None


_FULL_GRID = (0.3, 0.6, 1.0, 1.4)
_STAR_PS = (0.0, 0.5, 1.0, 1.5, 2.0)
_CONVEX_PS = (0.0, 0.25, 0.5, 0.75, 1.0)

# Default lambda grids probe every branch that the in-paper anchors confirm.
# The |a4| bounds are probed inside (1/5, ~0.51] as well, where the printed
# second branch drops below the z^3 witness value lam/3: that documented
# defect is carried by the starlike claim (thm3.1-a4); the convex |a4| grid
# stays on anchor-confirmed branches so the default report names exactly the
# two known-defective claims.
CLAIMS: dict[str, ClaimDef] = {
    c.claim_id: c
    for c in [
        ClaimDef("thm3.1-a2", "abs_a2", "starlike", 2, None, _FULL_GRID, None),
        ClaimDef("thm3.1-a3", "abs_a3", "starlike", 3, None, _FULL_GRID, None),
        ClaimDef("thm3.1-a4", "abs_a4", "starlike", 4, None, (0.1, 0.21, 0.3, 1.0, 1.4), None),
        ClaimDef("thm3.2-a2", "abs_a2", "convex", 2, None, _FULL_GRID, None),
        ClaimDef("thm3.2-a3", "abs_a3", "convex", 3, None, _FULL_GRID, None),
        ClaimDef("thm3.2-a4", "abs_a4", "convex", 4, None, (0.1, 1.0, 1.4), None),
        ClaimDef("thm3.3-d32", "abs_a3_minus_a2", "starlike", None, "d32", _FULL_GRID, _STAR_PS),
        ClaimDef("thm3.3-d43", "abs_a4_minus_a3", "starlike", None, "d43", _FULL_GRID, _STAR_PS),
        ClaimDef(
            "thm3.3-d43-psi2-statement",
            "abs_a4_minus_a3",
            "starlike",
            None,
            "d43",
            (1.0, 1.4),
            (2.0,),
            pinned_variant="statement",
        ),
        ClaimDef("thm3.5-d32", "abs_a3_minus_a2", "convex", None, "d32", _FULL_GRID, _CONVEX_PS),
        ClaimDef("thm3.5-d43", "abs_a4_minus_a3", "convex", None, "d43", _FULL_GRID, _CONVEX_PS),
    ]
}


def _claim_bound(claim: ClaimDef, lam: float, p: Optional[float], psi2_variant: str):
    if claim.n is not None:
        if claim.cls == "starlike":
            return bounds.s_star_coeff_bound(claim.n, lam)
        return bounds.k_coeff_bound(claim.n, lam)
    variant = claim.pinned_variant or psi2_variant
    if claim.cls == "starlike":
        return bounds.s_diff_bound(claim.which, lam, p, psi2_variant=variant)
    return bounds.k_diff_bound(claim.which, lam, p)


def verify_claim(
    claim_id: str,
    lam_grid: Sequence[float],
    p_grid: Optional[Sequence[float]] = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    tol: float = DEFAULT_TOL,
    psi2_variant: str = "proof",
    workers: int = 1,
) -> list[VerificationReport]:
    """Run the extremal oracle against one registered claim over a grid.

    Emits one report per grid point.  The violation flag is exactly
    oracle_max > bound + tol; violations never abort the run.
    """
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim {claim_id!r}; registered: {sorted(CLAIMS)}")
    claim = CLAIMS[claim_id]
    if claim.default_ps is not None:
        ps: Sequence[Optional[float]] = tuple(p_grid) if p_grid is not None else claim.default_ps
        if not ps:
            raise ValueError(f"{claim_id} constrains f''(0); a p grid is required")
    else:
        ps = (None,)
    reports = []
    for lam in lam_grid:
        for p in ps:
            t0 = time.perf_counter()
            fn = Functional(kind=claim.kind, cls=claim.cls, fixed_p=p)
            result = extremal_search(fn, lam, budget=budget, seed=seed, workers=workers)
            b = _claim_bound(claim, lam, p, psi2_variant)
            gap = b.value - result.value
            duration_ms = int((time.perf_counter() - t0) * 1000.0)
            reports.append(
                VerificationReport(
                    claim_id=claim_id,
                    lam=lam,
                    p=p,
                    bound=b.value,
                    branch=b.branch,
                    oracle_max=result.value,
                    witness=result.witness,
                    gap=gap,
                    violation=bool(result.value > b.value + tol),
                    samples=result.samples,
                    seed=seed,
                    duration_ms=duration_ms,
                    variant=b.variant,
                )
            )
    return reports


def run_claim_suite(
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    tol: float = DEFAULT_TOL,
    psi2_variant: str = "proof",
    workers: int = 1,
) -> list[VerificationReport]:
    """Every registered claim over its default grids, in registry order."""
    out = []
    for claim_id, claim in CLAIMS.items():
        out.extend(
            verify_claim(
                claim_id,
                claim.default_lambdas,
                claim.default_ps,
                budget=budget,
                seed=seed,
                tol=tol,
                psi2_variant=psi2_variant,
                workers=workers,
            )
        )
    return out


def series_cross_check(lam: float, cls: str, params: CaratheodoryParams) -> float:
    """Max deviation between the closed coefficient formulas and the series engine.

    Builds the Schwarz expansion from the parameters, recovers a2..a4 through
    the subordination series, and compares against the moment formulas the
    oracle maximizes.  The two routes share no code path.
    """
    m = caratheodory_moments(params)
    c = caratheodory_to_schwarz(m)
    omega = series.TruncatedSeries([0.0, c.c1, c.c2, c.c3])
    a_series = series.coefficients_from_schwarz(omega, lam, cls, 4)
    a2, a3, a4 = _coefficient_values(
        lam, np.float64(params.p1), np.complex128(params.x), np.complex128(params.y), cls
    )
    closed = np.array([a2, a3, a4], dtype=np.complex128)
    return float(np.max(np.abs(a_series - closed)))


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of a random-Blaschke sweep against the general bounds."""

    lam: float
    n_max: int
    samples: int
    seed: int
    violations: int
    max_cn_excess: float
    max_an_excess: float


def general_bound_probe(
    lam: float, n_max: int = series.DEFAULT_ORDER, samples: int = 500, seed: int = DEFAULT_SEED
) -> ProbeReport:
    """Probe the subordination coefficient bound and the general |a_n| bounds.

    Draws random Blaschke-type Schwarz functions of degree <= 3, expands
    exp(lam*w), and checks |c_n| <= lam + 1e-12 for n <= n_max plus
    |a_n| <= the product bound + 1e-9 for both classes.  Positive excesses
    are violations; the maxima are reported either way.
    """
    bounds._check_lambda(lam)
    if n_max > series.DEFAULT_ORDER:
        raise ValueError(f"n_max must stay within the default order {series.DEFAULT_ORDER}")
    rng = np.random.default_rng(seed)
    star_bounds = np.array([bounds.general_coeff_bound("starlike", n, lam) for n in range(2, n_max + 1)])
    conv_bounds = star_bounds / np.arange(2, n_max + 1)
    violations = 0
    max_cn_excess = -np.inf
    max_an_excess = -np.inf
    for _ in range(samples):
        degree = int(rng.integers(0, 4))
        theta = float(rng.uniform(0.0, 2.0 * np.pi))
        moduli = rng.uniform(0.0, 0.97, degree)
        phases = rng.uniform(0.0, 2.0 * np.pi, degree)
        zeros = moduli * np.exp(1j * phases)
        w = series.blaschke_schwarz(theta, list(zeros), n_max)
        e = series.exp_series(series.TruncatedSeries(lam * w.coeffs))
        cn_excess = float(np.max(np.abs(e.coeffs[1:])) - lam)
        max_cn_excess = max(max_cn_excess, cn_excess)
        if cn_excess > 1e-12:
            violations += 1
        a_star = np.abs(
            series.ratio_to_coefficients(
                series.TruncatedSeries(e.coeffs - series.unit_series(n_max).coeffs), n_max
            )
        )
        a_conv = a_star / np.arange(2, n_max + 1)
        an_excess = float(max(np.max(a_star - star_bounds), np.max(a_conv - conv_bounds)))
        max_an_excess = max(max_an_excess, an_excess)
        if an_excess > 1e-9:
            violations += 1
    return ProbeReport(
        lam=lam,
        n_max=n_max,
        samples=samples,
        seed=seed,
        violations=violations,
        max_cn_excess=max_cn_excess,
        max_an_excess=max_an_excess,
    )
