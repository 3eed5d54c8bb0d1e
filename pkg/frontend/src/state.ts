/**
 * Control state for the dashboard: one field per scenario override the UI
 * exposes, plus the active view. Everything here is pure so it can be
 * unit-tested without a DOM.
 */

export type View = "electrolysis" | "hydrogen" | "dac" | "ekerosene";
export type GwpHorizon = "GWP20" | "GWP100";

export interface ControlState {
  view: View;
  stackLearningRate: number;
  globalDeploymentGw: number;
  pemShare: number;
  dacLearningRate: number;
  leakRate: number;
  gwpHorizon: GwpHorizon;
  electricityPriceUsdPerKwh: number;
  utilization: number;
  h2SubsidyUsdPerKg: number;
  ekSubsidyUsdPerGal: number;
}

/** Installed electrolyzer base in GW; growth scales down to this floor. */
export const CURRENT_GLOBAL_GW = 2.55;

export const DEFAULT_STATE: ControlState = {
  view: "electrolysis",
  stackLearningRate: 0.18,
  globalDeploymentGw: 100,
  pemShare: 0.5,
  dacLearningRate: 0.1186,
  leakRate: 0.037,
  gwpHorizon: "GWP100",
  electricityPriceUsdPerKwh: 0.05,
  utilization: 0.65,
  h2SubsidyUsdPerKg: 3,
  ekSubsidyUsdPerGal: 0,
};

type NumericKey = {
  [K in keyof ControlState]: ControlState[K] extends number ? K : never;
}[keyof ControlState];

export const LIMITS: Record<NumericKey, { min: number; max: number }> = {
  stackLearningRate: { min: 0, max: 0.5 },
  globalDeploymentGw: { min: CURRENT_GLOBAL_GW, max: 1000 },
  pemShare: { min: 0, max: 1 },
  dacLearningRate: { min: 0, max: 0.5 },
  leakRate: { min: 0, max: 0.3 },
  electricityPriceUsdPerKwh: { min: 0, max: 0.3 },
  utilization: { min: 0.05, max: 1 },
  h2SubsidyUsdPerKg: { min: 0, max: 5 },
  ekSubsidyUsdPerGal: { min: 0, max: 5 },
};

const NUMERIC_KEYS = Object.keys(LIMITS) as NumericKey[];
const VIEWS: View[] = ["electrolysis", "hydrogen", "dac", "ekerosene"];

/** Clamp every numeric control into its schema validity range. */
export function clampState(state: ControlState): ControlState {
  const out: ControlState = { ...state };
  for (const key of NUMERIC_KEYS) {
    const { min, max } = LIMITS[key];
    const value = out[key];
    out[key] = Number.isFinite(value) ? Math.min(max, Math.max(min, value)) : DEFAULT_STATE[key];
  }
  if (!VIEWS.includes(out.view)) out.view = DEFAULT_STATE.view;
  if (out.gwpHorizon !== "GWP20" && out.gwpHorizon !== "GWP100") {
    out.gwpHorizon = DEFAULT_STATE.gwpHorizon;
  }
  return out;
}

/**
 * Serialize state into a URL fragment. Only values differing from the
 * defaults are written, so the default state yields an empty fragment.
 */
export function encodeState(state: ControlState): string {
  const parts: string[] = [];
  for (const key of Object.keys(DEFAULT_STATE) as (keyof ControlState)[]) {
    const value = state[key];
    if (value !== DEFAULT_STATE[key]) {
      parts.push(`${key}=${encodeURIComponent(String(value))}`);
    }
  }
  return parts.join("&");
}

export interface DecodeResult {
  state: ControlState;
  ok: boolean;
}

/**
 * Restore state from a URL fragment. Any malformed or out-of-range input
 * falls back to the defaults with ok=false so the UI can show a notice.
 */
export function decodeState(fragment: string): DecodeResult {
  const cleaned = fragment.replace(/^#/, "");
  if (cleaned === "") return { state: { ...DEFAULT_STATE }, ok: true };
  const state: ControlState = { ...DEFAULT_STATE };
  for (const part of cleaned.split("&")) {
    const eq = part.indexOf("=");
    if (eq <= 0) return { state: { ...DEFAULT_STATE }, ok: false };
    const key = part.slice(0, eq) as keyof ControlState;
    const raw = decodeURIComponent(part.slice(eq + 1));
    if (!(key in DEFAULT_STATE)) return { state: { ...DEFAULT_STATE }, ok: false };
    if (key === "view") {
      if (!VIEWS.includes(raw as View)) return { state: { ...DEFAULT_STATE }, ok: false };
      state.view = raw as View;
    } else if (key === "gwpHorizon") {
      if (raw !== "GWP20" && raw !== "GWP100") return { state: { ...DEFAULT_STATE }, ok: false };
      state.gwpHorizon = raw;
    } else {
      const value = Number(raw);
      if (!Number.isFinite(value)) return { state: { ...DEFAULT_STATE }, ok: false };
      const { min, max } = LIMITS[key as NumericKey];
      if (value < min || value > max) return { state: { ...DEFAULT_STATE }, ok: false };
      state[key as NumericKey] = value;
    }
  }
  return { state, ok: true };
}

interface RegionConfig {
  current_capacity_kw: number;
  deployment_kw: number;
}

export interface BaseConfig {
  electrolysis: {
    global_deployment_kw: number;
    regions: Record<string, RegionConfig>;
  };
}

/**
 * Translate control state into a scenario override document. Regional
 * deployments must sum to the global figure, so a global-deployment
 * change scales every region's growth above its installed base by the
 * same factor, taken from the service's own effective configuration.
 */
export function buildOverrides(state: ControlState, base: BaseConfig): Record<string, unknown> {
  const el = base.electrolysis;
  const currentTotalKw = Object.values(el.regions).reduce(
    (sum, r) => sum + r.current_capacity_kw,
    0,
  );
  const targetKw = state.globalDeploymentGw * 1e6;
  const baseGrowth = el.global_deployment_kw - currentTotalKw;
  const scale = baseGrowth > 0 ? (targetKw - currentTotalKw) / baseGrowth : 0;
  const regions: Record<string, { deployment_kw: number }> = {};
  for (const [name, region] of Object.entries(el.regions)) {
    const growth = region.deployment_kw - region.current_capacity_kw;
    regions[name] = { deployment_kw: region.current_capacity_kw + scale * growth };
  }
  const pem = state.pemShare / 2;
  const alkaline = (1 - state.pemShare) / 2;
  return {
    electrolysis: {
      global_deployment_kw: targetKw,
      stack_learning_rate: state.stackLearningRate,
      stack_learning_rate_lo: Math.min(0.14, state.stackLearningRate),
      stack_learning_rate_hi: Math.max(0.22, state.stackLearningRate),
      market_shares: {
        western_pem: pem,
        chinese_pem: pem,
        western_alkaline: alkaline,
        chinese_alkaline: alkaline,
      },
      regions,
    },
    hydrogen: {
      subsidy_usd_per_kg: state.h2SubsidyUsdPerKg,
    },
    dac: {
      learning_rate: state.dacLearningRate,
      learning_rate_lo: Math.min(0.045, state.dacLearningRate),
      learning_rate_hi: Math.max(0.16, state.dacLearningRate),
      gwp_horizon: state.gwpHorizon,
      // the control moves the upper leak bound; at zero the lo/hi curves
      // coincide and the two dashed sweep curves collapse into one
      leak_rate_lo: Math.min(0.002, state.leakRate),
      leak_rate_hi: state.leakRate,
    },
    ekerosene: {
      electricity_price_usd_per_kwh: state.electricityPriceUsdPerKwh,
      reference_utilization: state.utilization,
      subsidy_usd_per_gal: state.ekSubsidyUsdPerGal,
    },
  };
}
