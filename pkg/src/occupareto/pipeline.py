"""Objective composition: from organization parameters to the two objective
values at each candidate occupancy.

Three estimator variants are available. The default, ``workplace-risk``,
is the one that reproduces the published operating points:

* risk objective (minimised, compared against the background risk): the
  weekly probability that one of the on-site employees imports an infection,
  times the expected number infected by the time testing catches the
  outbreak (the literal truncated detection-time expectation, with the
  expected-headcount series interpolated at that real-valued day);
* productivity objective (maximised): total productivity with the infected
  headcount taken as the *daily* import probability times the cumulative
  infected count over one full test cycle, clamped to n.

The ``cumulative`` variant scores both objectives with
``rho * Z(round(tau_bar))`` and the ``at-detection`` variant with
``rho * E[n_I(tau_bar)]``, both using the occupancy-independent arrival
probability (weekly by default, daily optionally). They are retained for
comparison; neither is monotone enough (``cumulative``) or
occupancy-discriminating enough (both) to reproduce the published
background-risk intersections, and the validation report records the
side-by-side numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .epidemic import (
    _detection_distribution,
    _spread_series,
    arrival_probability,
    contacts_per_day,
    cumulative_series,
    facility_arrival_probability,
)
from .params import OrganizationParams, ParameterError

ESTIMATORS = ("workplace-risk", "cumulative", "at-detection")
RHO_CONVENTIONS = ("weekly", "daily")
DETECTION_TIMES = ("literal", "residual")


@dataclass(frozen=True)
class ObjectivePipeline:
    """Configuration switch for the objective composition."""

    estimator: str = "workplace-risk"
    rho_convention: str = "weekly"
    detection_time: str = "literal"

    def __post_init__(self) -> None:
        if self.estimator not in ESTIMATORS:
            raise ParameterError(f"estimator must be one of {ESTIMATORS}; got {self.estimator!r}")
        if self.rho_convention not in RHO_CONVENTIONS:
            raise ParameterError(
                f"rho_convention must be one of {RHO_CONVENTIONS}; got {self.rho_convention!r}"
            )
        if self.detection_time not in DETECTION_TIMES:
            raise ParameterError(
                f"detection_time must be one of {DETECTION_TIMES}; got {self.detection_time!r}"
            )


DEFAULT_PIPELINE = ObjectivePipeline()


@dataclass(frozen=True)
class ObjectiveSurface:
    """Objective values over a grid of occupancies (parallel arrays)."""

    occup: np.ndarray
    expected_infections: np.ndarray
    total_productivity: np.ndarray
    tau_bar: np.ndarray
    present_count: np.ndarray

    def __len__(self) -> int:
        return self.occup.size


def _interp_at(series: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Linear interpolation of a (T+1, m) day-series at per-column day x."""
    tmax = series.shape[0] - 1
    x = np.clip(x, 0.0, float(tmax))
    lo = np.clip(np.floor(x).astype(int), 0, tmax - 1) if tmax >= 1 else np.zeros_like(x, int)
    frac = x - lo
    cols = np.arange(series.shape[1])
    return series[lo, cols] * (1.0 - frac) + series[np.minimum(lo + 1, tmax), cols] * frac


def evaluate_objectives(
    params: OrganizationParams,
    occupancies,
    pipeline: ObjectivePipeline = DEFAULT_PIPELINE,
) -> ObjectiveSurface:
    """Evaluate both objectives at each occupancy in one vectorised pass.

    Builds the spread series to horizon tau once per occupancy column, then
    derives the detection-time distribution, the cumulative series, and the
    estimator-specific objective values.
    """
    occ = np.atleast_1d(np.asarray(occupancies, dtype=float))
    if np.any(occ < 0) or np.any(occ > 1):
        raise ParameterError("occupancies must lie in [0, 1]")
    if params.n_v >= params.n:
        raise ParameterError(
            "n_v must be <= n-1: the index case is unvaccinated, so a fully "
            "vaccinated workforce has no admissible source"
        )
    n, tau = params.n, params.tau
    kappa = contacts_per_day(params, occ)
    _, _, expected = _spread_series(
        n, params.n_v, params.beta_u, params.beta_v, kappa, occ, tau
    )
    d, survival = _detection_distribution(expected, n, tau)
    t_col = np.arange(1, tau + 1)[:, None]
    tau_bar_literal = (t_col * d).sum(axis=0)
    tau_bar_residual = tau_bar_literal + tau * survival[-1]
    z = cumulative_series(expected, n)

    if pipeline.estimator == "workplace-risk":
        tb = tau_bar_literal if pipeline.detection_time == "literal" else tau_bar_residual
        risk = facility_arrival_probability(params, occ, "weekly") * _interp_at(expected, tb)
        loss = np.minimum(
            facility_arrival_probability(params, occ, "daily") * z[tau], float(n)
        )
    else:
        rho = arrival_probability(params)
        if pipeline.rho_convention == "daily":
            rho = 1.0 - (1.0 - params.weekly_infection_fraction / 7.0) ** n
        if pipeline.estimator == "cumulative":
            t_star = np.clip(np.rint(tau_bar_residual).astype(int), 1, tau)
            risk = rho * z[t_star, np.arange(occ.size)]
        else:  # at-detection
            risk = rho * _interp_at(expected, tau_bar_residual)
        loss = np.minimum(risk, float(n))

    tp = (occ + params.prod * (1.0 - occ)) * (n - loss)
    return ObjectiveSurface(
        occup=occ,
        expected_infections=risk,
        total_productivity=tp,
        tau_bar=tau_bar_residual,
        present_count=np.rint(occ * n).astype(int),
    )
