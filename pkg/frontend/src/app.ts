/**
 * Dashboard wiring: binds the controls to ControlState, debounces service
 * calls, and renders one view per technology from the latest response.
 * No model math happens here — every number comes from the service.
 */

import { SequenceGate, debounce, fetchBaseConfig, project, FieldError } from "./api.js";
import { Bar, BarGroup, Series, barChart, lineChart } from "./charts.js";
import {
  BaseConfig,
  ControlState,
  DEFAULT_STATE,
  View,
  clampState,
  decodeState,
  encodeState,
} from "./state.js";

const API_ROOT = "";
const DEBOUNCE_MS = 200; // >= 150 ms per the control contract

const REGION_LABELS: Record<string, string> = {
  usa: "USA",
  eu: "EU",
  china: "China",
  row: "RoW",
};
const TECH_LABELS: Record<string, string> = {
  western_pem: "W-PEM",
  chinese_pem: "C-PEM",
  western_alkaline: "W-Alk",
  chinese_alkaline: "C-Alk",
};

/** control id -> scenario field path, for inline 422 rendering */
const FIELD_TO_CONTROL: Array<[string, string]> = [
  ["electrolysis.stack_learning_rate", "stackLearningRate"],
  ["electrolysis.global_deployment_kw", "globalDeploymentGw"],
  ["electrolysis.market_shares", "pemShare"],
  ["dac.learning_rate", "dacLearningRate"],
  ["dac.leak_rate", "leakRate"],
  ["dac.gwp_horizon", "gwpHorizon"],
  ["ekerosene.electricity_price_usd_per_kwh", "electricityPriceUsdPerKwh"],
  ["ekerosene.reference_utilization", "utilization"],
  ["hydrogen.subsidy_usd_per_kg", "h2SubsidyUsdPerKg"],
  ["ekerosene.subsidy_usd_per_gal", "ekSubsidyUsdPerGal"],
];

let state: ControlState = { ...DEFAULT_STATE };
let baseConfig: BaseConfig | null = null;
let lastBody: any = null;
const gate = new SequenceGate();

const $ = (id: string) => document.getElementById(id) as HTMLElement;

function notice(message: string): void {
  const el = $("notice");
  el.textContent = message;
  el.classList.toggle("hidden", message === "");
}

function clearFieldErrors(): void {
  document.querySelectorAll(".field-error").forEach((el) => {
    el.textContent = "";
  });
}

function showFieldErrors(errors: FieldError[]): void {
  clearFieldErrors();
  for (const error of errors) {
    const match = FIELD_TO_CONTROL.find(([prefix]) => error.field.startsWith(prefix));
    const target = match ? document.getElementById(`err-${match[1]}`) : null;
    if (target) target.textContent = error.message;
    else notice(`${error.field}: ${error.message}`);
  }
}

function renderElectrolysis(body: any): string {
  const pairs = body.sections.electrolysis.per_pair as any[];
  const groups: BarGroup[] = [];
  for (const region of ["usa", "eu", "china", "row"]) {
    const bars: Bar[] = [];
    for (const pair of pairs.filter((p) => p.region === region)) {
      bars.push({
        label: `${TECH_LABELS[pair.technology]} now`,
        value: pair.current_total_usd_per_kw,
        color: "#9db6cc",
      });
      bars.push({
        label: `${TECH_LABELS[pair.technology]} 2030`,
        value: pair.projected_total_usd_per_kw.mid,
        lo: pair.projected_total_usd_per_kw.lo,
        hi: pair.projected_total_usd_per_kw.hi,
        color: "#2f6da8",
      });
    }
    groups.push({ label: REGION_LABELS[region], bars });
  }
  const section = body.sections.electrolysis;
  const summary =
    `Total capital cost declines ${(section.decline_min_fraction * 100).toFixed(0)}%` +
    `&ndash;${(section.decline_max_fraction * 100).toFixed(0)}% across regions and stacks.`;
  return `<p>${summary}</p>` + barChart(groups, { unit: "USD/kW" });
}

function renderHydrogen(body: any): string {
  const usa = (body.sections.hydrogen.per_region as any[]).find((r) => r.region === "usa");
  const price = nearestGridPrice(usa, state.electricityPriceUsdPerKwh);
  const cells = usa.lcoh_grid.filter(
    (g: any) => Math.abs(g.electricity_price_usd_per_kwh - price) < 1e-9,
  );
  const by = (key: string): Array<[number, number]> =>
    cells.map((g: any) => [g.utilization, g[key]] as [number, number]);
  const series: Series[] = [
    { label: "current", points: by("lcoh_current_usd_per_kg"), color: "#9db6cc" },
    { label: "2030", points: by("lcoh_projected_usd_per_kg"), color: "#2f6da8" },
    {
      label: "2030 + subsidy",
      points: by("lcoh_projected_subsidized_usd_per_kg"),
      color: "#2a8a5c",
      dashed: true,
    },
  ];
  const inverse = usa.required_electricity_price.filter((r: any) => r.target_usd_per_kg === 1.0);
  const inverseSeries: Series[] = [
    {
      label: "price for $1/kg (2030)",
      points: inverse.map(
        (r: any) => [r.utilization, r.price_projected_usd_per_kwh * 1000] as [number, number],
      ),
      color: "#b5562f",
    },
  ];
  return (
    `<p>USA levelized cost of hydrogen at ${(price * 1000).toFixed(0)} USD/MWh electricity.</p>` +
    lineChart(series, { unit: "USD/kg", xUnit: "utilization" }) +
    `<p>Electricity price required for unsubsidized $1/kg; negative means out of reach.</p>` +
    lineChart(inverseSeries, { unit: "USD/MWh", xUnit: "utilization" })
  );
}

function nearestGridPrice(region: any, wanted: number): number {
  const prices: number[] = Array.from(
    new Set(region.lcoh_grid.map((g: any) => g.electricity_price_usd_per_kwh as number)),
  );
  return prices.reduce((best, p) => (Math.abs(p - wanted) < Math.abs(best - wanted) ? p : best));
}

function renderDac(body: any): string {
  const dac = body.sections.dac;
  const sweep = dac.target_sweep as any[];
  const reachable = sweep.filter((r) => r.investment_lo_usd !== null);
  const invLo: Array<[number, number]> = reachable.map((r) => [
    r.target_usd_per_t,
    r.investment_lo_usd / 1e9,
  ]);
  const invHi: Array<[number, number]> = sweep
    .filter((r) => r.investment_hi_usd !== null)
    .map((r) => [r.target_usd_per_t, r.investment_hi_usd / 1e9]);
  const capLo: Array<[number, number]> = reachable.map((r) => [
    r.target_usd_per_t,
    r.capacity_leak_lo_ty / 1e6,
  ]);
  const capHi: Array<[number, number]> = sweep
    .filter((r) => r.capacity_leak_hi_ty !== null)
    .map((r) => [r.target_usd_per_t, r.capacity_leak_hi_ty / 1e6]);
  const capital = dac.capital_projected_usd_per_ty;
  const unreachable = sweep.filter((r) => r.investment_hi_usd === null).length;
  const note =
    unreachable > 0 ? ` ${unreachable} target(s) unreachable at the upper leak rate.` : "";
  return (
    `<p>Capital: ${dac.capital_current_usd_per_ty.toFixed(0)} &rarr; ` +
    `${capital.mid.toFixed(0)} USD/(t/yr) [${capital.lo.toFixed(0)}, ${capital.hi.toFixed(0)}].` +
    `${note}</p>` +
    lineChart(
      [
        { label: "low leakage", points: invLo, color: "#2f6da8" },
        { label: "high leakage", points: invHi, color: "#b5562f", dashed: true },
      ],
      { unit: "investment, B USD", xUnit: "net removal cost target, USD/t" },
    ) +
    lineChart(
      [
        { label: "low leakage", points: capLo, color: "#2f6da8" },
        { label: "high leakage", points: capHi, color: "#b5562f", dashed: true },
      ],
      { unit: "capacity, Mt/yr", xUnit: "net removal cost target, USD/t" },
    )
  );
}

function renderEkerosene(body: any): string {
  const section = body.sections.ekerosene;
  const groups: BarGroup[] = (section.per_region as any[]).map((r) => ({
    label: REGION_LABELS[r.region],
    bars: [
      { label: "now", value: r.lcoek_current_usd_per_gal, color: "#9db6cc" },
      { label: "2030", value: r.lcoek_projected_usd_per_gal, color: "#2f6da8" },
      {
        label: "2030 subsidized",
        value: r.lcoek_projected_subsidized_usd_per_gal,
        color: "#2a8a5c",
      },
    ],
  }));
  const premium = section.flight_premium_usd_per_passenger;
  return (
    barChart(groups, { unit: "USD/gal" }) +
    `<p>Flight premium, NY&ndash;London at 5% blend: ` +
    `$${premium.lo.toFixed(0)}&ndash;$${premium.hi.toFixed(0)} per passenger ` +
    `(mid $${premium.mid.toFixed(0)}).</p>`
  );
}

const RENDERERS: Record<View, (body: any) => string> = {
  electrolysis: renderElectrolysis,
  hydrogen: renderHydrogen,
  dac: renderDac,
  ekerosene: renderEkerosene,
};

function render(): void {
  document.querySelectorAll("[data-view]").forEach((el) => {
    el.classList.toggle("active", (el as HTMLElement).dataset.view === state.view);
  });
  if (lastBody) $("chart").innerHTML = RENDERERS[state.view](lastBody);
}

async function refresh(): Promise<void> {
  if (!baseConfig) return;
  const seq = gate.next();
  $("status").textContent = "computing…";
  const result = await project(API_ROOT, state, baseConfig);
  if (!gate.accept(seq)) return; // a newer request already answered
  $("status").textContent = "";
  if (result.kind === "ok") {
    clearFieldErrors();
    notice("");
    lastBody = result.body;
    render();
  } else if (result.kind === "invalid") {
    showFieldErrors(result.errors);
  } else {
    notice(`request failed: ${result.message}`);
  }
}

const debouncedRefresh = debounce(refresh, DEBOUNCE_MS);

function syncControls(): void {
  for (const key of Object.keys(DEFAULT_STATE) as (keyof ControlState)[]) {
    const input = document.getElementById(`ctl-${key}`) as HTMLInputElement | null;
    if (input) input.value = String(state[key]);
    const label = document.getElementById(`val-${key}`);
    if (label) label.textContent = String(state[key]);
  }
}

function pushUrl(): void {
  const fragment = encodeState(state);
  history.replaceState(null, "", fragment === "" ? "#" : `#${fragment}`);
}

function onControlChange(key: keyof ControlState, raw: string): void {
  const next: ControlState = { ...state };
  if (key === "view") next.view = raw as View;
  else if (key === "gwpHorizon") next.gwpHorizon = raw as ControlState["gwpHorizon"];
  else (next[key] as number) = Number(raw);
  state = clampState(next);
  syncControls();
  pushUrl();
  if (key === "view") render();
  else debouncedRefresh();
}

function bindControls(): void {
  for (const key of Object.keys(DEFAULT_STATE) as (keyof ControlState)[]) {
    const input = document.getElementById(`ctl-${key}`);
    if (!input) continue;
    input.addEventListener("input", (ev) => {
      onControlChange(key, (ev.target as HTMLInputElement).value);
    });
  }
  document.querySelectorAll("[data-view]").forEach((el) => {
    el.addEventListener("click", () => {
      onControlChange("view", (el as HTMLElement).dataset.view ?? "electrolysis");
    });
  });
  window.addEventListener("hashchange", () => {
    applyFragment(location.hash);
    void refresh();
  });
}

function applyFragment(fragment: string): void {
  const decoded = decodeState(fragment);
  state = clampState(decoded.state);
  if (!decoded.ok) notice("could not restore shared state; reset to defaults");
  syncControls();
}

async function start(): Promise<void> {
  bindControls();
  applyFragment(location.hash);
  try {
    baseConfig = await fetchBaseConfig(API_ROOT);
  } catch (err) {
    notice(`cannot reach the projection service: ${String(err)}`);
    return;
  }
  await refresh();
}

void start();
