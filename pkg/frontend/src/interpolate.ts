import type { FrontierPoint } from "./types";

// Both readouts interpolate linearly between adjacent frontier points,
// mirroring the engine's scenario summaries exactly: the dashboard performs
// no epidemiological arithmetic of its own.

export interface Crossing {
  occup: number;
  productivityNormalized: number;
}

/** Occupancy where the infection curve reaches the background-risk level. */
export function backgroundIntersection(
  frontier: FrontierPoint[],
  backgroundRisk: number,
  n: number,
): Crossing | null {
  for (let i = 0; i < frontier.length; i++) {
    const p = frontier[i];
    if (p.expected_infections >= backgroundRisk) {
      if (i === 0) {
        return { occup: p.occup, productivityNormalized: p.total_productivity / n };
      }
      const prev = frontier[i - 1];
      const span = p.expected_infections - prev.expected_infections;
      const f = span === 0 ? 0 : (backgroundRisk - prev.expected_infections) / span;
      return {
        occup: prev.occup + f * (p.occup - prev.occup),
        productivityNormalized:
          (prev.total_productivity + f * (p.total_productivity - prev.total_productivity)) / n,
      };
    }
  }
  return null;
}

export interface WhatIf {
  occup: number;
  risk: number;
}

/** Smallest occupancy meeting a normalized-productivity target, plus the
 * infection risk there; null when the target is above the curve's maximum. */
export function productivityTarget(
  frontier: FrontierPoint[],
  target: number,
  n: number,
): WhatIf | null {
  for (let i = 0; i < frontier.length; i++) {
    const tp = frontier[i].total_productivity / n;
    if (tp >= target) {
      if (i === 0) {
        return { occup: frontier[i].occup, risk: frontier[i].expected_infections };
      }
      const prev = frontier[i - 1];
      const prevTp = prev.total_productivity / n;
      const span = tp - prevTp;
      const f = span === 0 ? 0 : (target - prevTp) / span;
      return {
        occup: prev.occup + f * (frontier[i].occup - prev.occup),
        risk:
          prev.expected_infections +
          f * (frontier[i].expected_infections - prev.expected_infections),
      };
    }
  }
  return null;
}
