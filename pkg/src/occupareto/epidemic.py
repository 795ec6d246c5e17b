"""Closed-form epidemic quantities: spread recursions, cumulative counts,
detection times, arrival probabilities, and productivity.

The spread model is a discrete-day recursion over two probabilities,
``p_u(t)`` and ``p_v(t)``: the chance that an arbitrary unvaccinated
(resp. vaccinated) employee has been infected within t days of a single
unvaccinated index case appearing at day 0. Homogeneous mixing bounded by a
daily contact rate kappa gives, for an employee who is still healthy at
t - 1, three independent escape factors per day:

* contact with the index case, expected ``occup^2 * kappa / (n-1)`` meetings
  (both parties must be on-site);
* contact with the other unvaccinated employees, expected
  ``occup * (n - n_v - 1)/(n-1) * kappa * (1 - 1/(n-1))`` meetings, each
  infectious with probability ``p_u(t-1)``;
* contact with the vaccinated employees, the analogous expression with
  ``n_v`` and ``p_v(t-1)``.

The per-contact transmission probability is ``beta_u`` or ``beta_v``
according to the *susceptible* side's vaccination status, except that
contacts with vaccinated spreaders transmit with ``beta_v``. Multiplying the
escape factors and complementing yields the day update; both series start at
zero and the expected number of infected employees follows as
``1 + (n - n_v - 1) p_u + n_v p_v``.

Everything here is a pure function; the recursions run one step per day
(linear time in the horizon) and are vectorised over occupancy so that a
whole candidate grid evaluates in a handful of array operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import OrganizationParams, ParameterError

__all__ = [
    "InfectionTrajectory",
    "DetectionStats",
    "ComputationError",
    "arrival_probability",
    "per_employee_arrival_probability",
    "facility_arrival_probability",
    "contacts_per_day",
    "trajectory_single_group",
    "trajectory_two_group",
    "cumulative_infections",
    "cumulative_series",
    "expected_detection_time",
    "total_productivity",
    "normalized_productivity",
    "recursion_steps",
]

# Instrumentation: incremented once per day-step of any recursion. Tests use
# it to pin the linear-time contract; it has no semantic effect.
_STEP_COUNTER = 0


def recursion_steps() -> int:
    return _STEP_COUNTER


def _count_steps(k: int) -> None:
    global _STEP_COUNTER
    _STEP_COUNTER += k


class ComputationError(ArithmeticError):
    """A recursion produced a non-finite intermediate value."""


@dataclass(frozen=True)
class InfectionTrajectory:
    """Day-indexed spread series for one occupancy level.

    ``p_u``/``p_v`` hold per-employee infection probabilities for the
    unvaccinated and vaccinated groups, index 0..horizon; ``p_v`` is empty
    for single-group runs. ``expected_infected`` is the expected headcount
    including the index case, so it starts at exactly 1.
    """

    n: int
    n_v: int
    occup: float
    horizon: int
    p_u: np.ndarray
    p_v: np.ndarray
    expected_infected: np.ndarray

    def __post_init__(self) -> None:
        if len(self.p_u) != self.horizon + 1:
            raise ValueError("p_u must have horizon+1 entries")
        if len(self.p_v) not in (0, self.horizon + 1):
            raise ValueError("p_v must be empty or have horizon+1 entries")


@dataclass(frozen=True)
class DetectionStats:
    """Distribution of the day an outbreak is first caught by testing.

    ``daily_detection_probs[t-1]`` is the probability the first positive test
    occurs on day t (t = 1..tau); ``residual_mass`` is the leftover
    probability of surviving the whole test cycle undetected. ``tau_bar``
    assigns that residual to day tau, which keeps it inside [1, tau];
    ``tau_bar_literal`` omits the residual term (the raw truncated
    expectation, which sinks toward 0 when infection levels vanish).
    """

    tau_bar: float
    tau_bar_literal: float
    tests_per_day: float
    daily_detection_probs: np.ndarray
    residual_mass: float


# ---------------------------------------------------------------------------
# arrival & contacts
# ---------------------------------------------------------------------------

def arrival_probability(params: OrganizationParams) -> float:
    """Probability that community spread reaches the organization in a week.

    One minus the chance that none of the n employees is infected outside
    work, at the per-employee weekly rate implied by the 7-day incidence.
    This is the background-risk reference line: it does not depend on
    occupancy (employees keep their normal out-of-office contacts).
    """
    w = params.weekly_infection_fraction
    return float(1.0 - (1.0 - w) ** params.n)


def per_employee_arrival_probability(params: OrganizationParams) -> float:
    """Weekly community-infection probability for a single employee."""
    return params.weekly_infection_fraction


def facility_arrival_probability(
    params: OrganizationParams, occup, convention: str = "weekly"
):
    """Probability that an infection is carried *into the workplace*.

    Only the ``occup * n`` employees actually on-site can import a case, so
    unlike :func:`arrival_probability` this is occupancy-dependent and
    vanishes at occup = 0. ``convention`` selects the window: ``"weekly"``
    uses the 7-day per-employee fraction directly, ``"daily"`` spreads it
    uniformly over the week.
    """
    w = params.weekly_infection_fraction
    if convention == "daily":
        w = w / 7.0
    elif convention != "weekly":
        raise ValueError(f"unknown arrival convention {convention!r}")
    occup = np.asarray(occup, dtype=float)
    out = 1.0 - (1.0 - w) ** (occup * params.n)
    return float(out) if out.ndim == 0 else out


def contacts_per_day(params: OrganizationParams, occup):
    """Mean daily contacts per present employee: base + slope * occup * n."""
    occup = np.asarray(occup, dtype=float)
    out = params.contact_base + params.contact_slope * occup * params.n
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# spread recursion
# ---------------------------------------------------------------------------

def _spread_series(n, n_v, beta_u, beta_v, kappa, occup, horizon):
    """Run the two-group day recursion, vectorised over occupancy.

    ``kappa`` and ``occup`` may be scalars or equal-length 1-d arrays.
    Returns ``(p_u, p_v, expected)`` with shape (horizon+1, m).
    """
    kappa = np.atleast_1d(np.asarray(kappa, dtype=float))
    occup = np.atleast_1d(np.asarray(occup, dtype=float))
    kappa, occup = np.broadcast_arrays(kappa, occup)
    m = occup.shape[0]

    exp_src = occup**2 * kappa / (n - 1)
    exp_u = occup * ((n - n_v - 1) / (n - 1)) * kappa * (1.0 - 1.0 / (n - 1))
    exp_v = occup * (n_v / (n - 1)) * kappa * (1.0 - 1.0 / (n - 1))

    p_u = np.zeros((horizon + 1, m))
    p_v = np.zeros((horizon + 1, m))
    src_u = (1.0 - beta_u) ** exp_src
    src_v = (1.0 - beta_v) ** exp_src
    for t in range(1, horizon + 1):
        pu, pv = p_u[t - 1], p_v[t - 1]
        esc_u = src_u * (1.0 - pu * beta_u) ** exp_u * (1.0 - pv * beta_v) ** exp_v
        esc_v = src_v * (1.0 - pu * beta_v) ** exp_u * (1.0 - pv * beta_v) ** exp_v
        p_u[t] = 1.0 - (1.0 - pu) * esc_u
        p_v[t] = 1.0 - (1.0 - pv) * esc_v
    _count_steps(horizon)

    if not (np.all(np.isfinite(p_u)) and np.all(np.isfinite(p_v))):
        raise ComputationError("spread recursion produced non-finite values")
    expected = 1.0 + (n - n_v - 1) * p_u + n_v * p_v
    return p_u, p_v, expected


def trajectory_single_group(
    n: int, beta_u: float, kappa: float, occup: float, horizon: int
) -> InfectionTrajectory:
    """Spread series for a fully unvaccinated workforce.

    Preconditions: n >= 2, 0 <= beta_u <= 1, kappa >= 0, 0 <= occup <= 1,
    horizon >= 0. The expected headcount is 1 + (n-1) * p_u.
    """
    if n < 2:
        raise ParameterError(f"n must be >= 2; got {n!r}")
    if not 0.0 <= beta_u <= 1.0:
        raise ParameterError(f"beta_u must lie in [0, 1]; got {beta_u!r}")
    if kappa < 0:
        raise ParameterError(f"kappa must be >= 0; got {kappa!r}")
    if not 0.0 <= occup <= 1.0:
        raise ParameterError(f"occup must lie in [0, 1]; got {occup!r}")
    if horizon < 0:
        raise ParameterError(f"horizon must be >= 0; got {horizon!r}")
    p_u, _, expected = _spread_series(n, 0, beta_u, 0.0, kappa, occup, horizon)
    return InfectionTrajectory(
        n=n, n_v=0, occup=float(occup), horizon=horizon,
        p_u=p_u[:, 0], p_v=np.empty(0), expected_infected=expected[:, 0],
    )


def trajectory_two_group(
    params: OrganizationParams, occup: float, horizon: int, kappa: float | None = None
) -> InfectionTrajectory:
    """Spread series with vaccinated/unvaccinated groups.

    The index case is unvaccinated, so all n employees vaccinated leaves the
    model without a source and is rejected. ``kappa`` defaults to the
    organization's contact model evaluated at ``occup``.
    """
    if params.n_v >= params.n:
        raise ParameterError(
            "n_v must be <= n-1: the index case is unvaccinated, so a fully "
            "vaccinated workforce has no admissible source"
        )
    if not 0.0 <= occup <= 1.0:
        raise ParameterError(f"occup must lie in [0, 1]; got {occup!r}")
    if horizon < 0:
        raise ParameterError(f"horizon must be >= 0; got {horizon!r}")
    if kappa is None:
        kappa = contacts_per_day(params, occup)
    p_u, p_v, expected = _spread_series(
        params.n, params.n_v, params.beta_u, params.beta_v, kappa, occup, horizon
    )
    return InfectionTrajectory(
        n=params.n, n_v=params.n_v, occup=float(occup), horizon=horizon,
        p_u=p_u[:, 0], p_v=p_v[:, 0], expected_infected=expected[:, 0],
    )


# ---------------------------------------------------------------------------
# cumulative infections
# ---------------------------------------------------------------------------

def cumulative_series(expected: np.ndarray, n: int) -> np.ndarray:
    """Z(T) for T = 1..len-1, evaluated bottom-up.

    ``Z(1) = E(0) + E(1) - E(1) E(0) / n`` and for T >= 2
    ``Z(T) = E(T) + Z(T-1) - E(1) Z(T-1) / n``: a running total of infected
    employees with the expected overlap between days removed. Index 0 of the
    returned array is unused (NaN) so that ``z[T]`` reads naturally.
    Accepts shape (T+1,) or (T+1, m).
    """
    e = np.asarray(expected, dtype=float)
    z = np.full_like(e, np.nan)
    if e.shape[0] < 2:
        return z
    z[1] = e[0] + e[1] - e[1] * e[0] / n
    for t in range(2, e.shape[0]):
        z[t] = e[t] + z[t - 1] - e[1] * z[t - 1] / n
    _count_steps(e.shape[0] - 1)
    return z


def cumulative_infections(trajectory: InfectionTrajectory, rho: float, T: int) -> float:
    """Expected cumulative infections over T days, scaled by arrival odds.

    Returns ``rho * Z(T)``. T must lie in [1, trajectory.horizon].
    """
    if T < 1:
        raise ParameterError(f"T must be >= 1; got {T!r}")
    if T > trajectory.horizon:
        raise ParameterError(
            f"T={T} exceeds the trajectory horizon {trajectory.horizon}"
        )
    z = cumulative_series(trajectory.expected_infected[: T + 1], trajectory.n)
    return float(rho * z[T])


# ---------------------------------------------------------------------------
# detection time
# ---------------------------------------------------------------------------

def _detection_distribution(expected: np.ndarray, n: int, tau: int):
    """Per-day first-detection probabilities and survival, vectorised.

    ``expected`` has shape (>= tau+1, m). With k = n / tau random tests per
    day and per-employee infection probability Pr(t) = E(t)/n, the chance a
    given day's tests all miss is (1 - Pr(t))^k; detection on day t requires
    all earlier days to miss. Returns (d, survival) of shape (tau, m).
    """
    k = n / tau
    pr = expected[1 : tau + 1] / n
    miss = (1.0 - pr) ** k
    survival = np.cumprod(miss, axis=0)
    d = np.empty_like(miss)
    d[0] = 1.0 - miss[0]
    d[1:] = (1.0 - miss[1:]) * survival[:-1]
    return d, survival


def expected_detection_time(
    trajectory: InfectionTrajectory, n: int, tau: int
) -> DetectionStats:
    """Expected days from outbreak start to the first positive test.

    Testing is uniform over the interval: k = n/tau employees per day (real
    valued; fractional k is kept in the exponent rather than rounded). The
    literal truncated expectation sums t * d(t) for t = 1..tau; because the
    d(t) do not exhaust the probability mass, the default ``tau_bar``
    assigns the residual survival mass to day tau, which pins the result
    inside [1, tau] and matches the reading "tested every tau days on
    average" when spread is negligible.
    """
    if tau < 1:
        raise ParameterError(f"tau must be >= 1; got {tau!r}")
    if trajectory.horizon < tau:
        raise ParameterError(
            f"trajectory horizon {trajectory.horizon} is shorter than tau={tau}"
        )
    e = trajectory.expected_infected[:, None]
    d, survival = _detection_distribution(e, n, tau)
    t = np.arange(1, tau + 1)[:, None]
    literal = float((t * d).sum(axis=0)[0])
    residual = float(survival[-1, 0])
    return DetectionStats(
        tau_bar=literal + tau * residual,
        tau_bar_literal=literal,
        tests_per_day=n / tau,
        daily_detection_probs=d[:, 0],
        residual_mass=residual,
    )


# ---------------------------------------------------------------------------
# productivity
# ---------------------------------------------------------------------------

def total_productivity(n: int, expected_infections: float, prod: float, occup) -> float:
    """Output of the workforce given an expected infected (idle) headcount.

    The n - E healthy employees split into on-site (weight 1) and home
    (weight prod): ``occup (n - E) + prod (1 - occup) (n - E)``.
    """
    e = np.asarray(expected_infections, dtype=float)
    if np.any(e < 0) or np.any(e > n):
        raise ParameterError(
            f"expected_infections must lie in [0, n]; got {expected_infections!r}"
        )
    occup = np.asarray(occup, dtype=float)
    out = (occup + prod * (1.0 - occup)) * (n - e)
    return float(out) if out.ndim == 0 else out


def normalized_productivity(n: int, expected_infections: float, prod: float, occup):
    """Same as :func:`total_productivity`, divided by n (plot-friendly)."""
    out = total_productivity(n, expected_infections, prod, occup)
    return out / n
