"""Two-sample testing that is sound under arbitrary missing data.

The decision rule: declare significance only when every completion of the
missing values would be significant. Operationally that means the whole
attainable interval [w_min, w_max] of the statistic must sit inside one
rejection tail of the null normal law. Alongside the decision, the report
carries the attainable p-value range [p_min, p_max]; significance is exactly
p_max < alpha, and p_min < alpha <= p_max marks the awkward middle ground
where the verdict genuinely depends on the unseen values.

Two variants are provided. ``robust_test_distinct`` assumes distinct values
on an unbounded domain and uses the plain interval [W', W' + nm - n'm'] with
the uncorrected null variance. ``robust_test_general`` allows ties and a
closed support: the interval tightens via boundary counts, and the decision
standardises with the largest attainable tie-corrected variance, which is
the conservative choice for the rejection tails.

``feasibility`` answers a cheaper question first: given only how much data
is missing, can any observed values be significant at all? Below the
threshold on n'm'/(nm), no. In particular 30 percent missing on both sides
is always hopeless.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .bounds import StatBounds, VarBounds, stat_bounds_general, variance_bounds
from .exceptions import DegenerateDataError, DomainError
from .gaussian import normal_cdf, normal_quantile
from .ranks import Sample, Support, null_variance, wmw_statistic
from .wmw import Alternative

__all__ = [
    "Decision",
    "TestReport",
    "FeasibilityReport",
    "robust_test_distinct",
    "robust_test_general",
    "feasibility",
]


class Decision(enum.Enum):
    SIGNIFICANT = "significant"
    NOT_SIGNIFICANT = "not_significant"
    INCONCLUSIVE_DATA_DEPENDENT = "inconclusive_data_dependent"


@dataclass(frozen=True)
class TestReport:
    """Outcome of a missing-data-robust test."""

    decision: Decision
    p_min: float
    p_max: float
    w_bounds: StatBounds
    condition_same_sign: bool
    alpha: float
    alternative: Alternative
    variance: VarBounds
    variant: str  # "distinct" or "general"

    def to_dict(self) -> dict[str, Any]:
        b = self.w_bounds
        return {
            "decision": self.decision.value,
            "p_min": self.p_min,
            "p_max": self.p_max,
            "w_min": float(b.w_min),
            "w_max": float(b.w_max),
            "n": b.n,
            "m": b.m,
            "n_observed_x": b.n_obs_x,
            "n_observed_y": b.n_obs_y,
            "condition_same_sign": self.condition_same_sign,
            "alpha": self.alpha,
            "alternative": self.alternative.value,
            "sigma2_min": float(self.variance.sigma2_min),
            "sigma2_max": float(self.variance.sigma2_max),
            "variant": self.variant,
        }


@dataclass(frozen=True)
class FeasibilityReport:
    """Can significance ever be reached with this much data missing?"""

    n: int
    m: int
    n_obs_x: int
    n_obs_y: int
    alpha: float
    observed_fraction: float  # n'm'/(nm)
    threshold: float
    feasible: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "n_observed_x": self.n_obs_x,
            "n_observed_y": self.n_obs_y,
            "alpha": self.alpha,
            "observed_pair_fraction": self.observed_fraction,
            "threshold": self.threshold,
            "feasible": self.feasible,
        }


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")


def _z(q: Fraction, sigma2: Fraction) -> float:
    """Standardised deviation q/sigma with the zero-variance limit built in."""
    if sigma2 == 0:
        if q == 0:
            return 0.0
        return math.inf if q > 0 else -math.inf
    return float(q) / math.sqrt(float(sigma2))


def _fold(score: float) -> float:
    """Two-sided p from a CDF score; extreme statistics score near 0 or 1."""
    return 1.0 - abs(1.0 - 2.0 * score)


def _p_range(
    bounds: StatBounds,
    var: VarBounds,
    alternative: Alternative,
) -> tuple[float, float, bool]:
    """Worst-case and best-case p over completions, plus the same-sign flag.

    Two-sided: the upper bound standardises with sigma_max (tails only widen
    with smaller variance, so sigma_max is what the rejection decision may
    rely on); the lower bound needs sigma_min. One-sided alternatives are
    monotone in the statistic, so the extremes sit at the interval endpoints
    with the variance chosen adversarially for the sign of the deviation.
    """
    mu = bounds.mu
    qmin = bounds.w_min - mu
    qmax = bounds.w_max - mu
    same_sign = (qmin >= 0 and qmax >= 0) or (qmin <= 0 and qmax <= 0)
    if alternative is Alternative.TWO_SIDED:
        p1 = 2.0 * normal_cdf(-abs(_z(qmin, var.sigma2_max)))
        p2 = 2.0 * normal_cdf(-abs(_z(qmax, var.sigma2_max)))
        p3 = 2.0 * normal_cdf(-abs(_z(qmax, var.sigma2_min)))
        p4 = 2.0 * normal_cdf(-abs(_z(qmin, var.sigma2_min)))
        if qmin >= 0 and qmax >= 0:
            return p3, p1, True
        if qmin < 0 and qmax < 0:
            return p4, p2, True
        return min(p3, p4), 1.0, False
    if alternative is Alternative.X_GREATER:
        # p = 1 - CDF score; worst case at w_min, best case at w_max
        p_high = 1.0 - normal_cdf(_z(qmin, var.sigma2_max if qmin >= 0 else var.sigma2_min))
        p_low = 1.0 - normal_cdf(_z(qmax, var.sigma2_min if qmax >= 0 else var.sigma2_max))
        return p_low, p_high, same_sign
    # X_LESS mirrors X_GREATER with the roles of the endpoints swapped
    p_high = normal_cdf(_z(qmax, var.sigma2_max if qmax <= 0 else var.sigma2_min))
    p_low = normal_cdf(_z(qmin, var.sigma2_min if qmin <= 0 else var.sigma2_max))
    return p_low, p_high, same_sign


def _decide(p_min: float, p_max: float, alpha: float) -> Decision:
    if p_max < alpha:
        return Decision.SIGNIFICANT
    if p_min < alpha:
        return Decision.INCONCLUSIVE_DATA_DEPENDENT
    return Decision.NOT_SIGNIFICANT


def _no_information_report(
    x: Sample, y: Sample, alpha: float, alternative: Alternative, var: VarBounds, variant: str
) -> TestReport:
    # One side entirely missing: any statistic value in [0, nm] is attainable
    # and nothing can be concluded.
    bounds = StatBounds(
        w_min=Fraction(0),
        w_max=Fraction(x.total * y.total),
        n=x.total,
        m=y.total,
        n_obs_x=x.n_observed,
        n_obs_y=y.n_observed,
    )
    return TestReport(
        decision=Decision.NOT_SIGNIFICANT,
        p_min=0.0,
        p_max=1.0,
        w_bounds=bounds,
        condition_same_sign=False,
        alpha=alpha,
        alternative=alternative,
        variance=var,
        variant=variant,
    )


def robust_test_distinct(
    x: Sample,
    y: Sample,
    alpha: float = 0.05,
    alternative: Alternative = Alternative.TWO_SIDED,
) -> TestReport:
    """Missing-data-robust test for distinct values on an unbounded domain.

    The attainable interval is [W', W' + (nm - n'm')] and the reference law
    has the uncorrected variance nm(n+m+1)/12. Ties in the observed data are
    tolerated (the statistic uses midranks) but do not tighten anything
    here; use :func:`robust_test_general` to exploit them.
    """
    _check_alpha(alpha)
    n, m = x.total, y.total
    sigma2 = null_variance(n, m)
    var = VarBounds(sigma2_min=sigma2, sigma2_max=sigma2, d_max=1)
    if x.n_observed == 0 or y.n_observed == 0:
        return _no_information_report(x, y, alpha, alternative, var, "distinct")
    w_obs = wmw_statistic(x.observed, y.observed)
    bounds = StatBounds(
        w_min=w_obs,
        w_max=w_obs + (n * m - x.n_observed * y.n_observed),
        n=n,
        m=m,
        n_obs_x=x.n_observed,
        n_obs_y=y.n_observed,
    )
    p_min, p_max, same_sign = _p_range(bounds, var, alternative)
    return TestReport(
        decision=_decide(p_min, p_max, alpha),
        p_min=p_min,
        p_max=p_max,
        w_bounds=bounds,
        condition_same_sign=same_sign,
        alpha=alpha,
        alternative=alternative,
        variance=var,
        variant="distinct",
    )


def robust_test_general(
    x: Sample,
    y: Sample,
    support: Support,
    alpha: float = 0.05,
    alternative: Alternative = Alternative.TWO_SIDED,
) -> TestReport:
    """Missing-data-robust test allowing ties and a closed support.

    Boundary ties tighten the statistic interval, and the rejection decision
    standardises with the largest attainable tie-corrected variance. The
    reported p_min additionally uses the smallest attainable variance, which
    is required for a valid lower bound.
    """
    _check_alpha(alpha)
    var = variance_bounds(x, y)
    if var.sigma2_max == 0:
        raise DegenerateDataError(
            "pooled sample holds a single distinct value with nothing missing; "
            "no completion can ever reject"
        )
    if x.n_observed == 0 or y.n_observed == 0:
        return _no_information_report(x, y, alpha, alternative, var, "general")
    bounds = stat_bounds_general(x, y, support)
    p_min, p_max, same_sign = _p_range(bounds, var, alternative)
    return TestReport(
        decision=_decide(p_min, p_max, alpha),
        p_min=p_min,
        p_max=p_max,
        w_bounds=bounds,
        condition_same_sign=same_sign,
        alpha=alpha,
        alternative=alternative,
        variance=var,
        variant="general",
    )


def feasibility(
    n: int, m: int, n_obs_x: int, n_obs_y: int, alpha: float = 0.05
) -> FeasibilityReport:
    """Sharp screen on the missing fractions.

    Significance is possible for some observed data if and only if

        n'm'/(nm) >= 1/2 + z_{1-alpha/2} sqrt((n+m+1)/(12nm)).

    The right side never drops below 1/2, so once both samples are missing
    30 percent or more the answer is no for every alpha.
    """
    _check_alpha(alpha)
    if not (1 <= n_obs_x <= n and 1 <= n_obs_y <= m):
        raise DomainError("observed counts must satisfy 1 <= n' <= n and 1 <= m' <= m")
    lhs = (n_obs_x * n_obs_y) / (n * m)
    rhs = 0.5 + normal_quantile(1.0 - alpha / 2.0) * math.sqrt((n + m + 1) / (12.0 * n * m))
    return FeasibilityReport(
        n=n,
        m=m,
        n_obs_x=n_obs_x,
        n_obs_y=n_obs_y,
        alpha=alpha,
        observed_fraction=lhs,
        threshold=rhs,
        feasible=lhs >= rhs,
    )
