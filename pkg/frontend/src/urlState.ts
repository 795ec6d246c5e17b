import type { ApiRequest } from "./types";
import { DEFAULT_REQUEST } from "./presets";
import { clampRequest } from "./state";

// Shareable URLs carry the parameter draft (and the selected occupancy
// marker) in the query string; responses are recomputed on load.

const NUMERIC_KEYS: (keyof ApiRequest)[] = [
  "n", "n_v", "beta_u", "beta_v", "prod", "tau", "contact_base",
  "contact_slope", "incidence_7day", "occupancy_threshold",
];

export function encodeState(draft: ApiRequest, selectedOccup: number | null): string {
  const params = new URLSearchParams();
  for (const key of NUMERIC_KEYS) {
    params.set(key, String(draft[key]));
  }
  if (draft.pipeline) params.set("pipeline", draft.pipeline);
  if (selectedOccup !== null) params.set("sel", String(selectedOccup));
  return params.toString();
}

export function decodeState(qs: string): { draft: ApiRequest; selectedOccup: number | null } {
  const params = new URLSearchParams(qs);
  const draft: ApiRequest = { ...DEFAULT_REQUEST };
  for (const key of NUMERIC_KEYS) {
    const raw = params.get(key);
    if (raw !== null && raw !== "" && Number.isFinite(Number(raw))) {
      (draft as any)[key] = Number(raw);
    }
  }
  const pipeline = params.get("pipeline");
  if (pipeline) draft.pipeline = pipeline;
  const sel = params.get("sel");
  return {
    draft: clampRequest(draft),
    selectedOccup: sel !== null && Number.isFinite(Number(sel)) ? Number(sel) : null,
  };
}
