import type { ApiRequest } from "./types";

// Slider bounds mirror the engine's parameter invariants: requests built
// from these controls can never 400.
export const BOUNDS = {
  n: { min: 2, max: 10000, step: 1 },
  n_v: { min: 0, max: 10000, step: 1 }, // dynamically capped at n
  beta_u: { min: 0, max: 1, step: 0.001 },
  beta_v: { min: 0, max: 1, step: 0.001 }, // dynamically capped at beta_u
  prod: { min: 0, max: 0.99, step: 0.01 },
  tau: { min: 1, max: 14, step: 1 },
  contact_base: { min: 0, max: 50, step: 0.5 },
  contact_slope: { min: 0, max: 0.5, step: 0.01 },
  incidence_7day: { min: 0, max: 5000, step: 10 },
  occupancy_threshold: { min: 0, max: 1, step: 0.01 },
} as const;

export const BETA_PRESETS: Record<string, number> = {
  "office, aerosol low": 0.004,
  "office, aerosol high": 0.023,
  "delta": 0.04,
  "omicron": 0.10,
};

export const VACCINE_EFFICACY = 0.8;

const CONTACT_SLOPES: Record<string, number> = { Low: 0.1, High: 0.2 };

interface GridRow {
  id: string;
  tau: number;
  prod: number;
  vacc: number;
  contact: "Low" | "High";
  beta_u: number;
}

// the 15-row experiment design grid
const GRID: GridRow[] = [
  { id: "a", tau: 7, prod: 0.6, vacc: 0.5, contact: "Low", beta_u: 0.04 },
  { id: "b", tau: 7, prod: 0.6, vacc: 0.8, contact: "Low", beta_u: 0.04 },
  { id: "c", tau: 14, prod: 0.9, vacc: 0.5, contact: "Low", beta_u: 0.04 },
  { id: "d", tau: 14, prod: 0.6, vacc: 0.8, contact: "Low", beta_u: 0.04 },
  { id: "e", tau: 7, prod: 0.9, vacc: 0.5, contact: "High", beta_u: 0.04 },
  { id: "f", tau: 14, prod: 0.6, vacc: 0.5, contact: "High", beta_u: 0.04 },
  { id: "g", tau: 14, prod: 0.9, vacc: 0.5, contact: "High", beta_u: 0.04 },
  { id: "h", tau: 7, prod: 0.9, vacc: 0.5, contact: "Low", beta_u: 0.1 },
  { id: "i", tau: 7, prod: 0.9, vacc: 0.8, contact: "Low", beta_u: 0.1 },
  { id: "j", tau: 14, prod: 0.6, vacc: 0.5, contact: "Low", beta_u: 0.1 },
  { id: "k", tau: 14, prod: 0.9, vacc: 0.8, contact: "Low", beta_u: 0.1 },
  { id: "l", tau: 7, prod: 0.6, vacc: 0.8, contact: "High", beta_u: 0.1 },
  { id: "m", tau: 14, prod: 0.9, vacc: 0.5, contact: "High", beta_u: 0.1 },
  { id: "n", tau: 14, prod: 0.6, vacc: 0.8, contact: "High", beta_u: 0.1 },
  { id: "o", tau: 14, prod: 0.9, vacc: 0.8, contact: "High", beta_u: 0.1 },
];

export function scenarioPreset(id: string, n = 100, incidence = 500): ApiRequest {
  const row = GRID.find((r) => r.id === id);
  if (!row) throw new Error(`unknown scenario preset ${id}`);
  return {
    n,
    n_v: Math.round(row.vacc * n),
    beta_u: row.beta_u,
    beta_v: (1 - VACCINE_EFFICACY) * row.beta_u,
    prod: row.prod,
    tau: row.tau,
    contact_base: 5,
    contact_slope: CONTACT_SLOPES[row.contact],
    incidence_7day: incidence,
    occupancy_threshold: 0,
  };
}

export const SCENARIO_IDS = GRID.map((r) => r.id);

export const DEFAULT_REQUEST: ApiRequest = scenarioPreset("a");
