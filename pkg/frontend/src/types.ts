export interface ApiRequest {
  n: number;
  n_v: number;
  beta_u: number;
  beta_v: number;
  prod: number;
  tau: number;
  contact_base: number;
  contact_slope: number;
  incidence_7day: number;
  occupancy_threshold: number;
  pipeline?: string;
}

export interface FrontierPoint {
  occup: number;
  present_count: number;
  expected_infections: number;
  total_productivity: number;
  total_productivity_normalized: number;
  tau_bar: number;
}

export interface ParetoResponse {
  params: Record<string, number>;
  background_risk: number;
  frontier: FrontierPoint[];
  metadata: { pipeline: string; engine_version: string };
}

export interface UiState {
  draft: ApiRequest;
  lastResponse: ParetoResponse | null;
  selectedOccup: number | null;
  pinned: ParetoResponse | null;
}
