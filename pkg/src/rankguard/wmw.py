"""Classical normal-approximation rank test, plus the usual ways of coping
with missing values before running it: drop them, impute them, or (in
simulations only) peek at the truth."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exceptions import DegenerateDataError, DomainError
from .gaussian import normal_cdf
from .ranks import Sample, null_variance, tie_corrected_variance, tie_profile, wmw_statistic

__all__ = [
    "Alternative",
    "wmw_test",
    "impute_mean",
    "impute_hot_deck",
    "strategy_test",
    "STRATEGIES",
]


class Alternative(enum.Enum):
    """Alternative hypothesis for the two-sample test."""

    TWO_SIDED = "two_sided"
    X_GREATER = "x_greater"
    X_LESS = "x_less"

    @classmethod
    def parse(cls, text: str) -> "Alternative":
        key = text.strip().lower().replace("-", "_")
        table = {
            "two_sided": cls.TWO_SIDED,
            "twosided": cls.TWO_SIDED,
            "x_greater": cls.X_GREATER,
            "greater": cls.X_GREATER,
            "x_less": cls.X_LESS,
            "less": cls.X_LESS,
        }
        if key not in table:
            raise DomainError(f"unknown alternative {text!r}")
        return table[key]


def _p_value(w: Fraction, n: int, m: int, sigma2: Fraction, alternative: Alternative) -> float:
    if sigma2 <= 0:
        raise DegenerateDataError("pooled sample is fully tied; the statistic has zero variance")
    z = float(w - Fraction(n * m, 2)) / math.sqrt(float(sigma2))
    if alternative is Alternative.TWO_SIDED:
        # fold the CDF score: extreme statistics land near either 0 or 1
        score = normal_cdf(z)
        return 1.0 - abs(1.0 - 2.0 * score)
    if alternative is Alternative.X_GREATER:
        return 1.0 - normal_cdf(z)
    return normal_cdf(z)


def wmw_test(
    x_obs: Sequence[float],
    y_obs: Sequence[float],
    alternative: Alternative = Alternative.TWO_SIDED,
    tie_correction: bool = True,
) -> tuple[Fraction, float]:
    """Rank test on fully observed data; returns (statistic, p-value).

    The statistic is referenced to a normal law with mean nm/2 and the
    (optionally tie-corrected) null variance. No continuity correction is
    applied.
    """
    x_obs = list(x_obs)
    y_obs = list(y_obs)
    if not x_obs or not y_obs:
        raise DegenerateDataError("both samples must be nonempty")
    n, m = len(x_obs), len(y_obs)
    w = wmw_statistic(x_obs, y_obs)
    if tie_correction:
        sigma2 = tie_corrected_variance(n, m, tie_profile(x_obs + y_obs))
    else:
        sigma2 = null_variance(n, m)
    return w, _p_value(w, n, m, sigma2, alternative)


def impute_mean(sample: Sample) -> list[float]:
    """Fill every missing slot with the mean of the observed values."""
    if sample.n_observed == 0:
        raise DegenerateDataError("cannot impute a sample with no observed values")
    mean = sum(sample.observed) / sample.n_observed
    return list(sample.observed) + [mean] * sample.n_missing


def impute_hot_deck(sample: Sample, rng: np.random.Generator) -> list[float]:
    """Fill each missing slot with a donor drawn uniformly (with replacement)
    from the same sample's observed values."""
    if sample.n_observed == 0:
        raise DegenerateDataError("cannot impute a sample with no observed values")
    if sample.n_missing == 0:
        return list(sample.observed)
    donors = rng.choice(np.asarray(sample.observed), size=sample.n_missing, replace=True)
    return list(sample.observed) + [float(v) for v in donors]


STRATEGIES = ("ignore", "mean", "hot_deck", "oracle")


def strategy_test(
    x: Sample,
    y: Sample,
    strategy: str,
    alternative: Alternative = Alternative.TWO_SIDED,
    rng: np.random.Generator | None = None,
    complete_x: Sequence[float] | None = None,
    complete_y: Sequence[float] | None = None,
) -> tuple[Fraction, float]:
    """Run the classical test after one of the standard missing-data workarounds.

    ignore    drop the missing values;
    mean      mean-impute each side (always tie-corrected: imputation ties);
    hot_deck  donor-impute each side from its own observed values;
    oracle    use the true complete data (simulation use; pass complete_x/y).
    """
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if strategy == "ignore":
        return wmw_test(x.observed, y.observed, alternative)
    if strategy == "mean":
        return wmw_test(impute_mean(x), impute_mean(y), alternative)
    if strategy == "hot_deck":
        if rng is None:
            raise DomainError("hot_deck requires an rng")
        return wmw_test(impute_hot_deck(x, rng), impute_hot_deck(y, rng), alternative)
    if complete_x is None or complete_y is None:
        raise DomainError("oracle strategy requires the complete data")
    return wmw_test(complete_x, complete_y, alternative)
