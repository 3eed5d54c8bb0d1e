import { describe, expect, it } from "vitest";

import {
  BaseConfig,
  CURRENT_GLOBAL_GW,
  DEFAULT_STATE,
  buildOverrides,
  clampState,
  decodeState,
  encodeState,
} from "../src/state";

const BASE: BaseConfig = {
  electrolysis: {
    global_deployment_kw: 1.0e8,
    regions: {
      usa: { current_capacity_kw: 3.0e5, deployment_kw: 1.6e7 },
      eu: { current_capacity_kw: 9.0e5, deployment_kw: 2.3e7 },
      china: { current_capacity_kw: 9.5e5, deployment_kw: 5.0e7 },
      row: { current_capacity_kw: 4.0e5, deployment_kw: 1.1e7 },
    },
  },
};

describe("clampState", () => {
  it("clamps numeric controls into their validity ranges", () => {
    const clamped = clampState({ ...DEFAULT_STATE, leakRate: 2.0, utilization: -1 });
    expect(clamped.leakRate).toBe(0.3);
    expect(clamped.utilization).toBe(0.05);
  });

  it("replaces non-finite values with defaults", () => {
    const clamped = clampState({ ...DEFAULT_STATE, dacLearningRate: NaN });
    expect(clamped.dacLearningRate).toBe(DEFAULT_STATE.dacLearningRate);
  });

  it("never lets deployment fall below the installed base", () => {
    const clamped = clampState({ ...DEFAULT_STATE, globalDeploymentGw: 0 });
    expect(clamped.globalDeploymentGw).toBe(CURRENT_GLOBAL_GW);
  });

  it("leaves valid states untouched", () => {
    expect(clampState({ ...DEFAULT_STATE })).toEqual(DEFAULT_STATE);
  });
});

describe("URL fragment round-trip", () => {
  it("default state encodes to the empty fragment", () => {
    expect(encodeState(DEFAULT_STATE)).toBe("");
  });

  it("round-trips a modified state exactly", () => {
    const state = {
      ...DEFAULT_STATE,
      view: "dac" as const,
      dacLearningRate: 0.2,
      gwpHorizon: "GWP20" as const,
      leakRate: 0,
    };
    const decoded = decodeState(encodeState(state));
    expect(decoded.ok).toBe(true);
    expect(decoded.state).toEqual(state);
  });

  it("resets to defaults on an unknown key", () => {
    const decoded = decodeState("#bogus=1");
    expect(decoded.ok).toBe(false);
    expect(decoded.state).toEqual(DEFAULT_STATE);
  });

  it("resets to defaults on a tampered value", () => {
    expect(decodeState("#leakRate=evil").ok).toBe(false);
    expect(decodeState("#leakRate=99").ok).toBe(false);
    expect(decodeState("#no-equals-sign").ok).toBe(false);
  });

  it("accepts a leading hash and empty fragment", () => {
    expect(decodeState("#").ok).toBe(true);
    expect(decodeState("").state).toEqual(DEFAULT_STATE);
  });
});

describe("buildOverrides", () => {
  it("keeps regional deployments summing to the global figure", () => {
    const overrides = buildOverrides({ ...DEFAULT_STATE, globalDeploymentGw: 50 }, BASE) as any;
    const regions = overrides.electrolysis.regions;
    const sum = Object.values(regions).reduce(
      (acc: number, r: any) => acc + r.deployment_kw,
      0,
    );
    expect(sum).toBeCloseTo(overrides.electrolysis.global_deployment_kw, 3);
    expect(overrides.electrolysis.global_deployment_kw).toBe(50e6);
  });

  it("zero growth pins every region at its installed base", () => {
    const overrides = buildOverrides(
      { ...DEFAULT_STATE, globalDeploymentGw: CURRENT_GLOBAL_GW },
      BASE,
    ) as any;
    expect(overrides.electrolysis.regions.usa.deployment_kw).toBeCloseTo(3.0e5, 6);
    expect(overrides.electrolysis.regions.china.deployment_kw).toBeCloseTo(9.5e5, 6);
  });

  it("splits market shares evenly within each stack class", () => {
    const overrides = buildOverrides({ ...DEFAULT_STATE, pemShare: 0.6 }, BASE) as any;
    const shares = overrides.electrolysis.market_shares;
    expect(shares.western_pem).toBeCloseTo(0.3);
    expect(shares.chinese_alkaline).toBeCloseTo(0.2);
    const total = Object.values(shares).reduce((a: number, s: any) => a + s, 0);
    expect(total).toBeCloseTo(1.0, 12);
  });

  it("collapses the leakage envelope when the control hits zero", () => {
    const overrides = buildOverrides({ ...DEFAULT_STATE, leakRate: 0 }, BASE) as any;
    expect(overrides.dac.leak_rate_lo).toBe(0);
    expect(overrides.dac.leak_rate_hi).toBe(0);
  });

  it("keeps the sensitivity bounds bracketing the chosen learning rate", () => {
    const overrides = buildOverrides({ ...DEFAULT_STATE, dacLearningRate: 0.3 }, BASE) as any;
    expect(overrides.dac.learning_rate_lo).toBeLessThanOrEqual(0.3);
    expect(overrides.dac.learning_rate_hi).toBeGreaterThanOrEqual(0.3);
  });
});
