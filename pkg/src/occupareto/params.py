"""Organization-level model inputs and their validation.

Everything the engine needs to know about an organization lives in
:class:`OrganizationParams`: workforce size and vaccination split, the two
per-contact transmission rates, the home-office productivity ratio, the mean
testing interval, the contact model (an affine function of occupancy), the
local 7-day incidence, and the minimum feasible occupancy. Occupancy itself
is the decision variable and is deliberately *not* a field here.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


class ParameterError(ValueError):
    """A model input violates its documented domain."""


#: Named per-contact transmission rates. The aerosol presets bracket the
#: indoor-office estimates for a highly infectious index case under active
#: ventilation with high/medium-efficiency masks; the variant presets are the
#: experiment-design baselines.
BETA_PRESETS: dict[str, float] = {
    "office-aerosol-low": 0.004,
    "office-aerosol-high": 0.023,
    "delta": 0.04,
    "omicron": 0.10,
}

#: Default immunity assumed for fully vaccinated employees:
#: beta_v = (1 - VACCINE_EFFICACY) * beta_u.
VACCINE_EFFICACY = 0.80

#: Longest supported mean test interval, in days (the incubation period;
#: testing less often than symptoms appear adds nothing to detection).
MAX_TEST_INTERVAL = 14


@dataclass(frozen=True)
class OrganizationParams:
    """Validated inputs for one organization.

    Attributes:
        n: total employees (>= 2; the spread recursion divides by n - 1).
        n_v: fully vaccinated employees, 0 <= n_v <= n.
        beta_u: per-contact transmission probability, unvaccinated susceptible.
        beta_v: same for vaccinated; must satisfy 0 <= beta_v <= beta_u <= 1.
        prod: home productivity relative to on-site, in [0, 1). At prod >= 1
            the trade-off degenerates (occup = 0 is trivially optimal).
        tau: mean days between successive tests of the same employee, 1..14.
        contact_base: constant part of the daily contact rate kappa.
        contact_slope: occupancy-proportional part; kappa = contact_base
            + contact_slope * occup * n.
        incidence_7day: reported cases per 100,000 over the last 7 days.
        occupancy_threshold: smallest feasible occupancy fraction. Values
            above 1 are accepted and simply make every candidate infeasible.
    """

    n: int
    n_v: int = 0
    beta_u: float = BETA_PRESETS["delta"]
    beta_v: float = (1 - VACCINE_EFFICACY) * BETA_PRESETS["delta"]
    prod: float = 0.6
    tau: int = 7
    contact_base: float = 5.0
    contact_slope: float = 0.10
    incidence_7day: float = 500.0
    occupancy_threshold: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ParameterError(
                f"n must be an integer >= 2 (the infection recursion divides by n-1); got {self.n!r}"
            )
        if not isinstance(self.n_v, int) or not 0 <= self.n_v <= self.n:
            raise ParameterError(f"n_v must be an integer in [0, n]; got {self.n_v!r}")
        if not 0.0 <= self.beta_v <= self.beta_u <= 1.0:
            raise ParameterError(
                f"transmission rates must satisfy 0 <= beta_v <= beta_u <= 1; "
                f"got beta_u={self.beta_u!r}, beta_v={self.beta_v!r}"
            )
        if not 0.0 <= self.prod < 1.0:
            raise ParameterError(
                f"prod must lie in [0, 1); got {self.prod!r}. With prod >= 1 home work "
                f"is never worse, so occup = 0 is the trivial optimum and there is no "
                f"trade-off to solve."
            )
        if not isinstance(self.tau, int) or not 1 <= self.tau <= MAX_TEST_INTERVAL:
            raise ParameterError(
                f"tau must be an integer in [1, {MAX_TEST_INTERVAL}]; got {self.tau!r}"
            )
        if not self.contact_base >= 0:
            raise ParameterError(f"contact_base must be >= 0; got {self.contact_base!r}")
        if not self.contact_slope >= 0:
            raise ParameterError(f"contact_slope must be >= 0; got {self.contact_slope!r}")
        if not self.incidence_7day >= 0:
            raise ParameterError(f"incidence_7day must be >= 0; got {self.incidence_7day!r}")
        if self.incidence_7day / 100_000.0 > 1.0:
            raise ParameterError(
                f"incidence_7day/100000 exceeds 1, not a probability; got {self.incidence_7day!r}"
            )
        if not self.occupancy_threshold >= 0:
            raise ParameterError(
                f"occupancy_threshold must be >= 0; got {self.occupancy_threshold!r}"
            )

    @property
    def weekly_infection_fraction(self) -> float:
        """Per-employee probability of community infection in a week."""
        return self.incidence_7day / 100_000.0

    def with_updates(self, **changes) -> "OrganizationParams":
        """Copy with some fields replaced (re-validates)."""
        return replace(self, **changes)
