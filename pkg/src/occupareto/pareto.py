"""Candidate enumeration, strategy evaluation, and the Pareto frontier.

With n employees only the multiples of 1/n are realisable occupancies, so
the candidate set is finite and the bi-objective problem (minimise expected
infections, maximise total productivity, subject to an occupancy floor) is
solved exactly: evaluate every candidate, then keep the non-dominated ones.

The fast path is a sweep-line: sort by the infection objective and keep
points whose productivity strictly beats everything seen so far. On this
model the infection objective increases with occupancy, so the scan order
coincides with ascending occupancy and the filter is literally "keep a
candidate only when its productivity sets a new record". An O(m^2) pairwise
dominance filter is kept alongside as an independent oracle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .params import OrganizationParams, ParameterError
from .pipeline import DEFAULT_PIPELINE, ObjectivePipeline, ObjectiveSurface, evaluate_objectives

__all__ = [
    "ParetoPoint",
    "ParetoFrontier",
    "enumerate_candidates",
    "evaluate_strategy",
    "pareto_sweep",
    "brute_force_frontier",
]


@dataclass(frozen=True)
class ParetoPoint:
    """One candidate occupancy with its objective values.

    ``tau_bar`` is the bounded expected detection time (residual mass
    assigned to the end of the test cycle), recorded for display.
    """

    occup: float
    expected_infections: float
    total_productivity: float
    tau_bar: float
    present_count: int

    def normalized_productivity(self, n: int) -> float:
        return self.total_productivity / n


@dataclass(frozen=True)
class ParetoFrontier:
    """Non-dominated candidates, ascending in occupancy."""

    points: tuple[ParetoPoint, ...]
    diagnostics: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.points)

    def occupancies(self) -> np.ndarray:
        return np.array([p.occup for p in self.points])


def enumerate_candidates(params: OrganizationParams) -> np.ndarray:
    """All multiples of 1/n in [0, 1] meeting the occupancy threshold."""
    occ = np.arange(params.n + 1) / params.n
    keep = occ >= params.occupancy_threshold
    if not keep.any():
        warnings.warn(
            f"occupancy_threshold={params.occupancy_threshold} admits no candidate; "
            "returning an empty set",
            stacklevel=2,
        )
    return occ[keep]


def _points_from_surface(surface: ObjectiveSurface) -> list[ParetoPoint]:
    return [
        ParetoPoint(
            occup=float(surface.occup[i]),
            expected_infections=float(surface.expected_infections[i]),
            total_productivity=float(surface.total_productivity[i]),
            tau_bar=float(surface.tau_bar[i]),
            present_count=int(surface.present_count[i]),
        )
        for i in range(len(surface))
    ]


def evaluate_strategy(
    params: OrganizationParams,
    occup: float,
    pipeline: ObjectivePipeline = DEFAULT_PIPELINE,
) -> ParetoPoint:
    """Objective values for a single occupancy level."""
    surface = evaluate_objectives(params, [occup], pipeline)
    return _points_from_surface(surface)[0]


def pareto_sweep(
    params: OrganizationParams,
    pipeline: ObjectivePipeline = DEFAULT_PIPELINE,
) -> ParetoFrontier:
    """Evaluate all candidates and keep the non-dominated ones.

    Candidates are scanned in ascending infection order (ties broken by
    higher productivity first); a candidate survives only if its
    productivity strictly exceeds the running maximum. Points are returned
    sorted by occupancy.
    """
    candidates = enumerate_candidates(params)
    if candidates.size == 0:
        return ParetoFrontier(points=(), diagnostics=("empty candidate set",))
    surface = evaluate_objectives(params, candidates, pipeline)
    pts = _points_from_surface(surface)

    order = sorted(
        range(len(pts)),
        key=lambda i: (pts[i].expected_infections, -pts[i].total_productivity, pts[i].occup),
    )
    kept: list[ParetoPoint] = []
    best = -np.inf
    for i in order:
        if pts[i].total_productivity > best:
            kept.append(pts[i])
            best = pts[i].total_productivity
    kept.sort(key=lambda p: p.occup)
    return ParetoFrontier(points=tuple(kept))


def _dominates(a: ParetoPoint, b: ParetoPoint) -> bool:
    """a is weakly better in both objectives and strictly better in one."""
    return (
        a.expected_infections <= b.expected_infections
        and a.total_productivity >= b.total_productivity
        and (
            a.expected_infections < b.expected_infections
            or a.total_productivity > b.total_productivity
        )
    )


def brute_force_frontier(points: list[ParetoPoint]) -> ParetoFrontier:
    """O(m^2) pairwise dominance filter; the sweep's independent oracle."""
    kept = [
        p
        for i, p in enumerate(points)
        if not any(j != i and _dominates(q, p) for j, q in enumerate(points))
    ]
    kept.sort(key=lambda p: p.occup)
    return ParetoFrontier(points=tuple(kept))
