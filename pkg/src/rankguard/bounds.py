"""Attainable ranges of the two-sample rank statistic under missing data.

Given only the observed parts of two samples whose full sizes are known, the
statistic is pinned to an interval: every completion of the missing values
lands inside it, and both endpoints are attained. With distinct values on an
unbounded domain the interval is [W', W' + (nm - n'm')]. When the domain is
closed below/above, observed values sitting exactly on an endpoint tighten
the interval, because missing values cannot fall strictly beyond them.

The same idea bounds the tie-corrected null variance over completions, and
from the two rectangles a sandwich for the attainable two-sided p-value
follows (the lower p bound needs the smallest variance, the upper the
largest).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import DegenerateDataError, DomainError
from .gaussian import normal_cdf
from .ranks import Sample, Support, null_variance, rank_sum, tie_profile, wmw_statistic

__all__ = [
    "StatBounds",
    "BoundaryCounts",
    "VarBounds",
    "rank_sum_bounds_distinct",
    "stat_bounds_distinct",
    "stat_bounds_general",
    "variance_bounds",
    "p_value_bounds",
]


@dataclass(frozen=True)
class StatBounds:
    """Attainable [w_min, w_max] for the statistic, with the size bookkeeping."""

    w_min: Fraction
    w_max: Fraction
    n: int
    m: int
    n_obs_x: int
    n_obs_y: int

    def __post_init__(self) -> None:
        if not 0 <= self.w_min <= self.w_max <= self.n * self.m:
            raise DomainError("bounds must satisfy 0 <= w_min <= w_max <= n*m")

    @property
    def width(self) -> Fraction:
        return self.w_max - self.w_min

    @property
    def mu(self) -> Fraction:
        """Null mean nm/2 of the statistic."""
        return Fraction(self.n * self.m, 2)


@dataclass(frozen=True)
class BoundaryCounts:
    """How many observed values sit exactly on the support endpoints.

    Counts are zero whenever the corresponding endpoint does not exist.
    """

    x_at_lower: int = 0
    x_at_upper: int = 0
    y_at_lower: int = 0
    y_at_upper: int = 0

    @classmethod
    def from_observed(
        cls, x_obs: Sequence[float], y_obs: Sequence[float], support: Support
    ) -> "BoundaryCounts":
        a, b = support.lower, support.upper
        return cls(
            x_at_lower=sum(v == a for v in x_obs) if a is not None else 0,
            x_at_upper=sum(v == b for v in x_obs) if b is not None else 0,
            y_at_lower=sum(v == a for v in y_obs) if a is not None else 0,
            y_at_upper=sum(v == b for v in y_obs) if b is not None else 0,
        )


@dataclass(frozen=True)
class VarBounds:
    """Range of the tie-corrected variance over all completions."""

    sigma2_min: Fraction
    sigma2_max: Fraction
    d_max: int

    def __post_init__(self) -> None:
        if not 0 <= self.sigma2_min <= self.sigma2_max:
            raise DomainError("variance bounds must satisfy 0 <= min <= max")


def _require_distinct(x_obs: Sequence[float], y_obs: Sequence[float]) -> None:
    pooled = list(x_obs) + list(y_obs)
    if len(set(pooled)) != len(pooled):
        raise DomainError(
            "observed values are tied; use the general (ties/closed support) pathway"
        )


def rank_sum_bounds_distinct(
    x_obs: Sequence[float], y_obs: Sequence[float], n: int, m: int
) -> tuple[Fraction, Fraction]:
    """Extreme rank sums of the full x sample over all missing-value placements.

    Requires pairwise distinct observed values and an unbounded domain. The
    minimum puts every missing value below everything observed (and missing
    y values above the missing x values); the maximum mirrors that.
    """
    n1, m1 = len(x_obs), len(y_obs)
    if n1 < 1 or m1 < 1:
        raise DomainError("need at least one observed value on each side")
    if n1 > n or m1 > m:
        raise DomainError("observed counts exceed the declared totals")
    _require_distinct(x_obs, y_obs)
    r_obs = rank_sum(x_obs, list(x_obs) + list(y_obs))
    low = r_obs + Fraction((n - n1) * (n + n1 + 1), 2)
    high = r_obs + Fraction(n * (n + 2 * m + 1) - n1 * (n1 + 2 * m1 + 1), 2)
    return low, high


def stat_bounds_distinct(x: Sample, y: Sample) -> StatBounds:
    """Attainable statistic range for distinct observed values, unbounded domain.

    w_min is the observed-data statistic itself; w_max adds nm - n'm', the
    number of cross pairs involving at least one missing value.
    """
    if x.n_observed < 1 or y.n_observed < 1:
        raise DomainError("need at least one observed value on each side")
    _require_distinct(x.observed, y.observed)
    w_obs = wmw_statistic(x.observed, y.observed)
    slack = x.total * y.total - x.n_observed * y.n_observed
    return StatBounds(
        w_min=w_obs,
        w_max=w_obs + slack,
        n=x.total,
        m=y.total,
        n_obs_x=x.n_observed,
        n_obs_y=y.n_observed,
    )


def stat_bounds_general(x: Sample, y: Sample, support: Support) -> StatBounds:
    """Attainable statistic range allowing ties and a closed support.

    Observed values equal to the support minimum or maximum tighten the
    plain interval: with boundary counts c(.) and d_x, d_y missing per side,

        w_min = W' + [c(y at min) d_x + c(x at max) d_y] / 2
        w_max = W' + (nm - n'm') - [c(x at min) d_y + c(y at max) d_x] / 2

    and both endpoints remain attainable. With no observed value on an
    endpoint this reduces to the distinct-case interval.
    """
    if x.n_observed < 1 or y.n_observed < 1:
        raise DomainError("need at least one observed value on each side")
    for label, sample in (("x", x), ("y", y)):
        for v in sample.observed:
            if not support.contains(v):
                raise DomainError(f"observed {label} value {v!r} lies outside the support")
    counts = BoundaryCounts.from_observed(x.observed, y.observed, support)
    n, m = x.total, y.total
    n1, m1 = x.n_observed, y.n_observed
    w_obs = wmw_statistic(x.observed, y.observed)
    t1 = counts.y_at_lower * (n - n1) + counts.x_at_upper * (m - m1)
    t2 = counts.x_at_lower * (m - m1) + counts.y_at_upper * (n - n1)
    return StatBounds(
        w_min=w_obs + Fraction(t1, 2),
        w_max=w_obs + (n * m - n1 * m1) - Fraction(t2, 2),
        n=n,
        m=m,
        n_obs_x=n1,
        n_obs_y=m1,
    )


def variance_bounds(x: Sample, y: Sample) -> VarBounds:
    """Range of the tie-corrected variance over all completions.

    The maximum keeps only the observed tie groups (missing values tie with
    nothing); the minimum piles every missing value onto the largest
    observed group, growing its multiplicity to d_max.
    """
    pooled = list(x.observed) + list(y.observed)
    if not pooled:
        raise DomainError("at least one observed value is required")
    n, m = x.total, y.total
    N = n + m
    profile = tie_profile(pooled)
    observed_correction = sum(d**3 - d for d in profile.multiplicities)
    scale = Fraction(n * m, 12 * N * (N - 1))
    sigma2_max = null_variance(n, m) - scale * observed_correction
    d_big = max(profile.multiplicities)
    d_max = d_big + (N - len(pooled))
    sigma2_min = sigma2_max - scale * ((d_max**3 - d_max) - (d_big**3 - d_big))
    return VarBounds(sigma2_min=sigma2_min, sigma2_max=sigma2_max, d_max=d_max)


def _two_sided_p(w: Fraction, mu: Fraction, sigma2: Fraction) -> float:
    z = -abs(float(w - mu)) / math.sqrt(float(sigma2))
    return 2.0 * normal_cdf(z)


def p_value_bounds(
    bounds: StatBounds, var: VarBounds, mu: Fraction | None = None
) -> tuple[float, float, bool]:
    """Sandwich (p_low, p_high, same_sign) for the attainable two-sided p-value.

    When both endpoints of [w_min, w_max] sit on the same side of the null
    mean, p_high standardises the endpoint nearer the mean with the largest
    variance and p_low the farther endpoint with the smallest variance.
    Otherwise an interior completion can reach the mean, so p_high = 1.

    The smallest variance genuinely matters for p_low: a middling completion
    with heavy ties can be more extreme after standardisation than either
    statistic endpoint.
    """
    if mu is None:
        mu = bounds.mu
    if var.sigma2_min == 0:
        raise DegenerateDataError(
            "some completion is fully tied (zero variance); p-value bounds are undefined"
        )
    p1 = _two_sided_p(bounds.w_min, mu, var.sigma2_max)
    p2 = _two_sided_p(bounds.w_max, mu, var.sigma2_max)
    p3 = _two_sided_p(bounds.w_max, mu, var.sigma2_min)
    p4 = _two_sided_p(bounds.w_min, mu, var.sigma2_min)
    if bounds.w_min >= mu and bounds.w_max >= mu:
        return p3, p1, True
    if bounds.w_min < mu and bounds.w_max < mu:
        return p4, p2, True
    return min(p3, p4), 1.0, False
