"""Deterministic Monte-Carlo harness for Type I error and power estimation.

Each trial draws both samples, deletes values through the configured
missingness mechanisms, and runs every requested method on the identical
incomplete data. Per-trial random streams are keyed by (seed, trial, role)
through ``numpy``'s SeedSequence, so results are bit-identical for a given
(spec, seed) no matter how many worker processes execute the trials.

Methods
    proposed        robust test, distinct-data variant
    proposed_ties   robust test with ties and closed support
    ignore          classical test on the observed values only
    mean_impute     classical test after mean imputation
    hot_deck        classical test after donor imputation
    oracle          classical test on the complete data (needs simulation truth)
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .distributions import make_distribution
from .exceptions import DegenerateDataError, DomainError
from .ranks import Sample, Support
from .robust import Decision, robust_test_distinct, robust_test_general
from .wmw import Alternative, strategy_test

__all__ = [
    "MECHANISMS",
    "METHODS",
    "MissingnessSpec",
    "ScenarioSpec",
    "MethodOutcome",
    "ScenarioResult",
    "apply_mcar",
    "apply_mnar_positive",
    "run_scenario",
    "sweep",
    "write_results_csv",
    "CSV_COLUMNS",
]

MECHANISMS = ("mcar", "mnar_positive", "none")
METHODS = ("proposed", "proposed_ties", "ignore", "mean_impute", "hot_deck", "oracle")

# stream roles for per-trial SeedSequence keys
_ROLE_X, _ROLE_Y, _ROLE_MISS_X, _ROLE_MISS_Y, _ROLE_HOT_DECK = range(5)


@dataclass(frozen=True)
class MissingnessSpec:
    """One deletion rule: which mechanism, how much, applied to which side."""

    mechanism: str
    s: float = 0.0
    applies_to: str = "both"

    def __post_init__(self) -> None:
        if self.mechanism not in MECHANISMS:
            raise DomainError(
                f"unknown mechanism {self.mechanism!r}; valid: {', '.join(MECHANISMS)}"
            )
        if not 0.0 <= self.s < 1.0:
            raise DomainError("missing proportion s must lie in [0, 1)")
        if self.applies_to not in ("both", "x_only", "y_only"):
            raise DomainError("applies_to must be both, x_only or y_only")


@dataclass(frozen=True)
class ScenarioSpec:
    """Everything one Monte-Carlo cell needs, as plain picklable data."""

    dist_x: str
    dist_y: str
    n: int
    m: int
    missingness: tuple[MissingnessSpec, ...]
    methods: tuple[str, ...]
    alpha: float = 0.05
    trials: int = 1000
    seed: int = 0
    alternative: str = "two_sided"
    support: tuple[float | None, float | None] | None = None  # None: derive from dists

    def __post_init__(self) -> None:
        if isinstance(self.missingness, MissingnessSpec):
            object.__setattr__(self, "missingness", (self.missingness,))
        object.__setattr__(self, "missingness", tuple(self.missingness))
        object.__setattr__(self, "methods", tuple(self.methods))
        object.__setattr__(self, "dist_x", make_distribution(self.dist_x).spec)
        object.__setattr__(self, "dist_y", make_distribution(self.dist_y).spec)
        if not self.methods:
            raise DomainError("at least one method is required")
        for method in self.methods:
            if method not in METHODS:
                raise DomainError(f"unknown method {method!r}; valid: {', '.join(METHODS)}")
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if self.seed < 0:
            raise DomainError("seed must be a nonnegative integer")
        if self.n < 1 or self.m < 1:
            raise DomainError("sample sizes must be positive")
        for side in ("x", "y"):
            if len(self._specs_for(side)) > 1:
                raise DomainError(f"conflicting missingness rules for sample {side}")
        Alternative.parse(self.alternative)

    def _specs_for(self, side: str) -> list[MissingnessSpec]:
        wanted = {"both", f"{side}_only"}
        return [ms for ms in self.missingness if ms.applies_to in wanted]

    def mechanism_for(self, side: str) -> MissingnessSpec:
        specs = self._specs_for(side)
        return specs[0] if specs else MissingnessSpec("none", 0.0, "both")

    @property
    def s_label(self) -> str:
        values = sorted({format(ms.s, "g") for ms in self.missingness if ms.mechanism != "none"})
        if not values:
            return "0"
        return ";".join(values)

    @property
    def mechanism_label(self) -> str:
        mx = self.mechanism_for("x")
        my = self.mechanism_for("y")
        if mx.mechanism == my.mechanism and mx.s == my.s:
            return mx.mechanism
        return f"x:{mx.mechanism};y:{my.mechanism}"


@dataclass(frozen=True)
class MethodOutcome:
    rejections: int
    degenerate: int
    trials: int

    @property
    def rate(self) -> float:
        return self.rejections / self.trials

    @property
    def stderr(self) -> float:
        r = self.rate
        return math.sqrt(r * (1.0 - r) / self.trials)


@dataclass(frozen=True)
class ScenarioResult:
    spec: ScenarioSpec
    outcomes: dict[str, MethodOutcome]
    elapsed: float


def _missing_count(n_values: int, s: float) -> int:
    # nearest integer, halves rounded down: ceil(s*n - 1/2)
    return max(0, math.ceil(s * n_values - 0.5))


def apply_mcar(values: Sequence[float], s: float, rng: np.random.Generator) -> Sample:
    """Delete a fixed fraction of values uniformly at random without replacement."""
    values = np.asarray(values, dtype=float)
    k = _missing_count(len(values), s)
    if k == 0:
        return Sample(tuple(values), 0)
    drop = rng.choice(len(values), size=k, replace=False)
    kept = np.delete(values, drop)
    return Sample(tuple(kept), k)


def apply_mnar_positive(values: Sequence[float], s: float, rng: np.random.Generator) -> Sample:
    """Delete each positive value independently, calibrated so that roughly a
    fraction s of the whole sample goes missing. Non-positive values never
    go missing, which makes the mechanism informative."""
    values = np.asarray(values, dtype=float)
    positive = values > 0
    n_pos = int(positive.sum())
    if n_pos == 0 or s == 0.0:
        return Sample(tuple(values), 0)
    q = min(1.0, s * len(values) / n_pos)
    drop = positive & (rng.random(len(values)) < q)
    kept = values[~drop]
    return Sample(tuple(kept), int(drop.sum()))


def _apply_missingness(
    values: np.ndarray, ms: MissingnessSpec, rng: np.random.Generator
) -> Sample:
    if ms.mechanism == "none" or ms.s == 0.0:
        return Sample(tuple(values), 0)
    if ms.mechanism == "mcar":
        return apply_mcar(values, ms.s, rng)
    return apply_mnar_positive(values, ms.s, rng)


def _resolve_support(spec: ScenarioSpec) -> Support:
    if spec.support is not None:
        return Support(lower=spec.support[0], upper=spec.support[1])
    lo_x, hi_x = make_distribution(spec.dist_x).support_bounds
    lo_y, hi_y = make_distribution(spec.dist_y).support_bounds
    lower = None if lo_x is None or lo_y is None else min(lo_x, lo_y)
    upper = None if hi_x is None or hi_y is None else max(hi_x, hi_y)
    return Support(lower=lower, upper=upper)


def _run_block(spec: ScenarioSpec, start: int, stop: int) -> dict[str, list[int]]:
    dist_x = make_distribution(spec.dist_x)
    dist_y = make_distribution(spec.dist_y)
    support = _resolve_support(spec)
    alternative = Alternative.parse(spec.alternative)
    ms_x = spec.mechanism_for("x")
    ms_y = spec.mechanism_for("y")
    tallies = {method: [0, 0] for method in spec.methods}  # [rejections, degenerate]
    for trial in range(start, stop):
        def stream(role: int) -> np.random.Generator:
            return np.random.default_rng([spec.seed, trial, role])

        x_full = dist_x.sample(stream(_ROLE_X), spec.n)
        y_full = dist_y.sample(stream(_ROLE_Y), spec.m)
        x_s = _apply_missingness(x_full, ms_x, stream(_ROLE_MISS_X))
        y_s = _apply_missingness(y_full, ms_y, stream(_ROLE_MISS_Y))
        for method in spec.methods:
            tally = tallies[method]
            try:
                if method == "proposed":
                    report = robust_test_distinct(x_s, y_s, spec.alpha, alternative)
                    rejected = report.decision is Decision.SIGNIFICANT
                elif method == "proposed_ties":
                    report = robust_test_general(x_s, y_s, support, spec.alpha, alternative)
                    rejected = report.decision is Decision.SIGNIFICANT
                else:
                    strategy = "mean" if method == "mean_impute" else method
                    _, p = strategy_test(
                        x_s,
                        y_s,
                        strategy,
                        alternative,
                        rng=stream(_ROLE_HOT_DECK),
                        complete_x=x_full,
                        complete_y=y_full,
                    )
                    rejected = p < spec.alpha
            except DegenerateDataError:
                tally[1] += 1
                continue
            if rejected:
                tally[0] += 1
    return tallies


def run_scenario(spec: ScenarioSpec, workers: int = 1) -> ScenarioResult:
    """Execute all trials of one scenario; deterministic in (spec, seed)."""
    t0 = time.perf_counter()
    if workers <= 1 or spec.trials == 1:
        merged = _run_block(spec, 0, spec.trials)
    else:
        workers = min(workers, spec.trials)
        chunk = -(-spec.trials // workers)
        ranges = [(i, min(i + chunk, spec.trials)) for i in range(0, spec.trials, chunk)]
        merged = {method: [0, 0] for method in spec.methods}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block in pool.map(_run_block, [spec] * len(ranges), *zip(*ranges)):
                for method, (rej, deg) in block.items():
                    merged[method][0] += rej
                    merged[method][1] += deg
    outcomes = {
        method: MethodOutcome(rejections=rej, degenerate=deg, trials=spec.trials)
        for method, (rej, deg) in merged.items()
    }
    return ScenarioResult(spec=spec, outcomes=outcomes, elapsed=time.perf_counter() - t0)


def sweep(
    base: ScenarioSpec,
    s_values: Iterable[float] | None = None,
    sizes: Iterable[tuple[int, int]] | None = None,
    workers: int = 1,
) -> list[ScenarioResult]:
    """Cartesian sweep of a base scenario over missing fractions and sizes."""
    s_list = [None] if s_values is None else list(s_values)
    size_list = [None] if sizes is None else list(sizes)
    results = []
    for nm in size_list:
        for s in s_list:
            spec = base
            if nm is not None:
                spec = replace(spec, n=nm[0], m=nm[1])
            if s is not None:
                spec = replace(
                    spec, missingness=tuple(replace(ms, s=s) for ms in spec.missingness)
                )
            results.append(run_scenario(spec, workers=workers))
    return results


CSV_COLUMNS = (
    "mechanism",
    "s",
    "n",
    "m",
    "dist_x",
    "dist_y",
    "alpha",
    "method",
    "trials",
    "reject_rate",
    "stderr",
    "degenerate",
)


def write_results_csv(results: Iterable[ScenarioResult], path: str) -> None:
    """Long-format CSV: one row per (scenario, method)."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for result in results:
            spec = result.spec
            for method in spec.methods:
                out = result.outcomes[method]
                writer.writerow(
                    [
                        spec.mechanism_label,
                        spec.s_label,
                        spec.n,
                        spec.m,
                        spec.dist_x,
                        spec.dist_y,
                        repr(spec.alpha),
                        method,
                        spec.trials,
                        repr(out.rate),
                        repr(out.stderr),
                        out.degenerate,
                    ]
                )
