"""Agent-based Monte Carlo simulator: independent ground truth for the
closed-form spread recursion.

Each run tracks n agents, one unvaccinated index case infected at day 0, no
recovery and no testing. Per day, every still-susceptible agent draws its
daily contacts uniformly (with replacement) from the other n-1 agents;
non-integer contact rates draw floor(kappa) partners plus one more with
probability frac(kappa), per agent per day. A drawn contact is *effective*
with probability occup^2 when the partner is the index case and occup
otherwise — presence enters as per-contact meeting odds, mirroring the
recursion's contact accounting, where the index case must be on-site to
spread while routine coworker interactions scale with the focal employee's
attendance. Each effective contact with an infectious partner transmits
independently with beta_u or beta_v according to the susceptible agent's
vaccination status; new infections become infectious the next day.

Runs use counter-based substreams (Philox keyed by the config seed, jumped
per run index), so any subset of runs can execute in any order or in
parallel and still reproduce bit-identical trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ParameterError

__all__ = ["SimulationConfig", "SimulationResult", "simulate", "mape"]


@dataclass(frozen=True)
class SimulationConfig:
    n: int
    n_v: int = 0
    beta_u: float = 0.05
    beta_v: float = 0.0075
    kappa: float = 10.0
    occup: float = 1.0
    horizon_days: int = 29
    runs: int = 100
    rng_seed: int = 99

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ParameterError(f"n must be >= 2; got {self.n!r}")
        if not 0 <= self.n_v <= self.n - 1:
            raise ParameterError(
                f"n_v must lie in [0, n-1] (unvaccinated index case); got {self.n_v!r}"
            )
        if not 0.0 <= self.beta_v <= self.beta_u <= 1.0:
            raise ParameterError("need 0 <= beta_v <= beta_u <= 1")
        if self.kappa < 0:
            raise ParameterError(f"kappa must be >= 0; got {self.kappa!r}")
        if not 0.0 <= self.occup <= 1.0:
            raise ParameterError(f"occup must lie in [0, 1]; got {self.occup!r}")
        if self.horizon_days < 1:
            raise ParameterError(f"horizon_days must be >= 1; got {self.horizon_days!r}")
        if self.runs < 1:
            raise ParameterError(f"runs must be >= 1; got {self.runs!r}")


@dataclass(frozen=True)
class SimulationResult:
    mean_infected: np.ndarray            # (horizon+1,)
    per_run_infected: np.ndarray         # (runs, horizon+1)
    mape_vs_recursion: float | None = None


def _run_once(config: SimulationConfig, rng: np.random.Generator) -> np.ndarray:
    n = config.n
    m_lo = int(np.floor(config.kappa))
    frac = config.kappa - m_lo
    occ, occ_sq = config.occup, config.occup**2

    infected = np.zeros(n, dtype=bool)
    vaccinated = np.zeros(n, dtype=bool)
    if config.n_v:
        vaccinated[n - config.n_v:] = True   # index case (agent 0) stays unvaccinated
    infected[0] = True

    counts = np.empty(config.horizon_days + 1, dtype=np.int64)
    counts[0] = 1
    for day in range(1, config.horizon_days + 1):
        sus = np.flatnonzero(~infected)
        if sus.size and (m_lo > 0 or frac > 0):
            width = m_lo + (1 if frac > 0 else 0)
            draws = rng.integers(0, n - 1, size=(sus.size, width))
            draws += draws >= sus[:, None]   # skip self
            active = np.ones((sus.size, width), dtype=bool)
            if frac > 0:
                active[:, -1] = rng.random(sus.size) < frac
            eff_p = np.where(draws == 0, occ_sq, occ)
            effective = active & (rng.random(draws.shape) < eff_p) & infected[draws]
            beta = np.where(vaccinated[sus], config.beta_v, config.beta_u)
            p_i = 1.0 - (1.0 - beta) ** effective.sum(axis=1)
            infected[sus[rng.random(sus.size) < p_i]] = True
        counts[day] = int(infected.sum())
    return counts


def simulate(config: SimulationConfig, reference: np.ndarray | None = None) -> SimulationResult:
    """Run the configured number of independent replicates.

    ``reference`` (a day series of expected counts, e.g. the recursion's)
    triggers the mean-absolute-percentage-error computation on the result.
    """
    per_run = np.empty((config.runs, config.horizon_days + 1), dtype=np.int64)
    for run in range(config.runs):
        rng = np.random.Generator(np.random.Philox(key=config.rng_seed).jumped(run))
        per_run[run] = _run_once(config, rng)
    mean = per_run.mean(axis=0)
    err = None
    if reference is not None:
        err = mape(np.asarray(reference, dtype=float), mean)
    return SimulationResult(mean_infected=mean, per_run_infected=per_run, mape_vs_recursion=err)


def mape(series: np.ndarray, reference: np.ndarray) -> float:
    """Mean absolute percentage error against ``reference``, days 1 onward.

    Day 0 is excluded: both series are exactly the single index case there.
    """
    a = np.asarray(series, dtype=float)
    b = np.asarray(reference, dtype=float)
    if a.shape != b.shape or a.size < 2:
        raise ParameterError("series must have equal length >= 2")
    if np.any(b[1:] <= 0):
        raise ParameterError("reference entries must be positive")
    return float(np.mean(np.abs(a[1:] - b[1:]) / b[1:]))
