"""Scenario ingestion, projection orchestration and export.

A scenario is a TOML document holding every calibrated input: curve
anchors, learning rates, horizon deployments, annualization and
sensitivity bounds. Loading validates strictly (unknown keys rejected,
invariants enforced), fills documented defaults and records the full
effective configuration so every number used is auditable. Projection is
a pure function of that configuration.
"""

from __future__ import annotations

import copy
import csv
import io
import json

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import __version__
from .curves import LearningCurve, project_cost
from .dac import (
    DacCostModel,
    LeakageSpec,
    capture_cost,
    net_removal_cost,
    target_sweep,
)
from .ekerosene import EkAssumptions, FlightAssumptions, flight_premium, lcoek
from .electrolysis import (
    CostBreakdown,
    ElectrolyzerCostModel,
    Region,
    StackTechnology,
    current_capital_cost,
    decline_fraction,
    envelope,
    project_capital_cost,
)
from .errors import ParseError, ValidationError
from .finance import FinancialAssumptions
from .hydrogen import (
    HydrogenPlantAssumptions,
    capital_contribution,
    lcoh,
    required_electricity_price,
)
from .ranges import ProjectionRange

SCHEMA_VERSION = 1
DATA_DIR = Path(__file__).parent / "data"

TECHS = [t.value for t in StackTechnology]
REGIONS = [r.value for r in Region]

_REGION_DEFAULTS = {
    "usa": {
        "current_capacity_kw": 3.0e5,
        "deployment_kw": 1.6e7,
        "bop_learning_rate": 0.11,
        "bop_learning_rate_lo": 0.08,
        "bop_learning_rate_hi": 0.14,
        "bop_epc_usd_per_kw": {t: 1800.0 for t in TECHS},
    },
    "eu": {
        "current_capacity_kw": 9.0e5,
        "deployment_kw": 2.3e7,
        "bop_learning_rate": 0.12,
        "bop_learning_rate_lo": 0.09,
        "bop_learning_rate_hi": 0.15,
        "bop_epc_usd_per_kw": {t: 1500.0 for t in TECHS},
    },
    "china": {
        "current_capacity_kw": 9.5e5,
        "deployment_kw": 5.0e7,
        "bop_learning_rate": 0.18,
        "bop_learning_rate_lo": 0.14,
        "bop_learning_rate_hi": 0.22,
        "bop_epc_usd_per_kw": {t: 500.0 for t in TECHS},
    },
    "row": {
        "current_capacity_kw": 4.0e5,
        "deployment_kw": 1.1e7,
        "bop_learning_rate": 0.09,
        "bop_learning_rate_lo": 0.06,
        "bop_learning_rate_hi": 0.12,
        "bop_epc_usd_per_kw": {t: 1600.0 for t in TECHS},
    },
}

DEFAULTS: Dict[str, Any] = {
    "schema_version": SCHEMA_VERSION,
    "name": "unnamed",
    "description": "",
    "base_year": 2023,
    "electrolysis": {
        "global_deployment_kw": 1.0e8,
        "stack_learning_rate": 0.18,
        "stack_learning_rate_lo": 0.14,
        "stack_learning_rate_hi": 0.22,
        "deployment_growth_scale_lo": 0.5,
        "deployment_growth_scale_hi": 1.5,
        "market_shares": {t: 0.25 for t in TECHS},
        "stack_costs_usd_per_kw": {
            "western_pem": 900.0,
            "chinese_pem": 450.0,
            "western_alkaline": 600.0,
            "chinese_alkaline": 250.0,
        },
        "stack_capacities_kw": {
            "western_pem": 6.0e5,
            "chinese_pem": 1.5e5,
            "western_alkaline": 1.0e6,
            "chinese_alkaline": 8.0e5,
        },
        "regions": _REGION_DEFAULTS,
    },
    "hydrogen": {
        "discount_rate": 0.08,
        "lifetime_years": 20,
        "fixed_om_fraction": 0.02,
        "specific_energy_kwh_per_kg": 55.0,
        "subsidy_usd_per_kg": 3.0,
        "utilization_grid": [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
        "electricity_price_grid_usd_per_kwh": [
            0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08,
        ],
        "lcoh_targets_usd_per_kg": [1.0, 2.0],
        "reference_technology": {
            "usa": "western_pem",
            "eu": "western_pem",
            "china": "chinese_alkaline",
            "row": "western_pem",
        },
    },
    "dac": {
        "initial_cost_usd_per_ty": 2600.0,
        "initial_capacity_ty": 5.0e5,
        "learning_rate": 0.1186,
        "learning_rate_lo": 0.045,
        "learning_rate_hi": 0.16,
        "pipeline_capacity_ty": 3.5e6,
        "discount_rate": 0.08,
        "lifetime_years": 20,
        "fixed_om_fraction": 0.05,
        "capacity_factor": 0.90,
        "non_learning_opex_usd_per_t": 44.3,
        "gas_intensity_gj_per_t": 9.5,
        "methane_tch4_per_gj": 0.019,
        "gwp100": 29.8,
        "gwp20": 82.5,
        "gwp_horizon": "GWP100",
        "leak_rate_lo": 0.002,
        "leak_rate_hi": 0.037,
        "target_grid_usd_per_t": [450.0, 400.0, 350.0, 300.0, 250.0, 200.0, 150.0, 100.0],
    },
    "ekerosene": {
        "h2_intensity_kg_per_kg": 0.43,
        "co2_intensity_kg_per_kg": 3.12,
        "conversion_multiplier": 1.1,
        "synthesis_levelized_usd_per_kg": 0.55,
        "synthesis_electricity_kwh_per_kg": 0.8,
        "electricity_price_usd_per_kwh": 0.05,
        "fuel_density_kg_per_l": 0.80,
        "subsidy_usd_per_gal": 0.0,
        "reference_utilization": 0.65,
    },
    "flight": {
        "distance_km": 5570.0,
        "fuel_burn_l_per_pax_km": 0.032,
        "fuel_burn_lo": 0.028,
        "fuel_burn_hi": 0.036,
        "blend_fraction": 0.05,
        "fossil_price_usd_per_gal": 2.0,
        "fossil_price_lo": 1.0,
        "fossil_price_hi": 3.25,
    },
}


def _merge(defaults: Any, supplied: Any, path: str) -> Any:
    """Overlay supplied config on the defaults, rejecting unknown keys."""
    if isinstance(defaults, dict):
        if not isinstance(supplied, dict):
            raise ValidationError(path or "<root>", f"expected a table, got {type(supplied).__name__}")
        unknown = set(supplied) - set(defaults)
        if unknown:
            key = sorted(unknown)[0]
            raise ValidationError(f"{path}.{key}" if path else key, "unknown key")
        merged = {}
        for key, default in defaults.items():
            child = f"{path}.{key}" if path else key
            if key in supplied:
                merged[key] = _merge(default, supplied[key], child)
            else:
                merged[key] = copy.deepcopy(default)
        return merged
    if isinstance(defaults, bool) or isinstance(supplied, bool):
        raise ValidationError(path, "booleans are not valid scenario values")
    if isinstance(defaults, float):
        if not isinstance(supplied, (int, float)):
            raise ValidationError(path, f"expected a number, got {type(supplied).__name__}")
        return float(supplied)
    if isinstance(defaults, int):
        if not isinstance(supplied, int):
            raise ValidationError(path, f"expected an integer, got {type(supplied).__name__}")
        return supplied
    if isinstance(defaults, str):
        if not isinstance(supplied, str):
            raise ValidationError(path, f"expected a string, got {type(supplied).__name__}")
        return supplied
    if isinstance(defaults, list):
        if not isinstance(supplied, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in supplied
        ):
            raise ValidationError(path, "expected a list of numbers")
        return [float(v) for v in supplied]
    raise ValidationError(path, f"unsupported value type {type(defaults).__name__}")


def _require_bounds(cfg: Dict[str, Any], path: str, lo: str, mid: str, hi: str) -> None:
    if not cfg[lo] <= cfg[mid] <= cfg[hi]:
        raise ValidationError(
            f"{path}.{mid}",
            f"bounds must satisfy {lo} <= {mid} <= {hi} "
            f"({cfg[lo]}, {cfg[mid]}, {cfg[hi]})",
        )


@dataclass(frozen=True)
class Scenario:
    """A fully validated scenario with its effective configuration."""

    name: str
    base_year: int
    config: Dict[str, Any]

    # -- electrolysis -----------------------------------------------------

    def electrolyzer_model(self, corner: str = "mid") -> ElectrolyzerCostModel:
        """Build the cost model for one sensitivity corner.

        corner "pessimistic" pins every learning rate at its low bound and
        scales deployment growth down; "optimistic" does the opposite.
        """
        cfg = self.config["electrolysis"]
        if corner == "mid":
            stack_lr = cfg["stack_learning_rate"]
            bop_lr_key = "bop_learning_rate"
            scale = 1.0
        elif corner == "pessimistic":
            stack_lr = cfg["stack_learning_rate_lo"]
            bop_lr_key = "bop_learning_rate_lo"
            scale = cfg["deployment_growth_scale_lo"]
        elif corner == "optimistic":
            stack_lr = cfg["stack_learning_rate_hi"]
            bop_lr_key = "bop_learning_rate_hi"
            scale = cfg["deployment_growth_scale_hi"]
        else:
            raise ValueError(f"unknown corner {corner!r}")

        stack_curves = {
            tech: LearningCurve(
                initial_cost=cfg["stack_costs_usd_per_kw"][tech.value],
                initial_capacity=cfg["stack_capacities_kw"][tech.value],
                learning_rate=stack_lr,
            )
            for tech in StackTechnology
        }
        bop_curves = {}
        regional = {}
        for region in Region:
            rcfg = cfg["regions"][region.value]
            current = rcfg["current_capacity_kw"]
            regional[region] = current + scale * (rcfg["deployment_kw"] - current)
            for tech in StackTechnology:
                bop_curves[(region, tech)] = LearningCurve(
                    initial_cost=rcfg["bop_epc_usd_per_kw"][tech.value],
                    initial_capacity=current,
                    learning_rate=rcfg[bop_lr_key],
                )
        current_total = sum(c.initial_capacity for c in stack_curves.values())
        global_dep = current_total + scale * (cfg["global_deployment_kw"] - current_total)
        return ElectrolyzerCostModel(
            stack_curves=stack_curves,
            bop_epc_curves=bop_curves,
            market_shares={t: cfg["market_shares"][t.value] for t in StackTechnology},
            regional_deployment=regional,
            global_deployment=global_dep,
        )

    # -- hydrogen ---------------------------------------------------------

    def hydrogen_financial(self) -> FinancialAssumptions:
        cfg = self.config["hydrogen"]
        return FinancialAssumptions(
            discount_rate=cfg["discount_rate"],
            lifetime_years=cfg["lifetime_years"],
            fixed_om_fraction=cfg["fixed_om_fraction"],
        )

    def hydrogen_assumptions(
        self,
        capex: float,
        utilization: float,
        electricity_price: float,
        subsidy: float = 0.0,
    ) -> HydrogenPlantAssumptions:
        cfg = self.config["hydrogen"]
        return HydrogenPlantAssumptions(
            capex=capex,
            specific_energy=cfg["specific_energy_kwh_per_kg"],
            utilization=utilization,
            electricity_price=electricity_price,
            subsidy=subsidy,
            financial=self.hydrogen_financial(),
        )

    def reference_technology(self, region: Region) -> StackTechnology:
        name = self.config["hydrogen"]["reference_technology"][region.value]
        return StackTechnology(name)

    # -- dac --------------------------------------------------------------

    def dac_model(self, learning_rate: Optional[float] = None) -> DacCostModel:
        cfg = self.config["dac"]
        return DacCostModel(
            capital_curve=LearningCurve(
                initial_cost=cfg["initial_cost_usd_per_ty"],
                initial_capacity=cfg["initial_capacity_ty"],
                learning_rate=cfg["learning_rate"] if learning_rate is None else learning_rate,
            ),
            financial=FinancialAssumptions(
                discount_rate=cfg["discount_rate"],
                lifetime_years=cfg["lifetime_years"],
                fixed_om_fraction=cfg["fixed_om_fraction"],
            ),
            capacity_factor=cfg["capacity_factor"],
            non_learning_opex=cfg["non_learning_opex_usd_per_t"],
            gas_intensity=cfg["gas_intensity_gj_per_t"],
            methane_mass_per_energy=cfg["methane_tch4_per_gj"],
        )

    def leakage(self, leak_rate: float, horizon: Optional[str] = None) -> LeakageSpec:
        cfg = self.config["dac"]
        horizon = horizon or cfg["gwp_horizon"]
        gwp = cfg["gwp100"] if horizon == "GWP100" else cfg["gwp20"]
        return LeakageSpec(leak_rate=leak_rate, gwp=gwp, horizon=horizon)

    # -- ekerosene --------------------------------------------------------

    def ek_assumptions(self) -> EkAssumptions:
        cfg = self.config["ekerosene"]
        mult = cfg["conversion_multiplier"]
        return EkAssumptions(
            h2_intensity=cfg["h2_intensity_kg_per_kg"] * mult,
            co2_intensity=cfg["co2_intensity_kg_per_kg"] * mult,
            synthesis_levelized=cfg["synthesis_levelized_usd_per_kg"],
            synthesis_electricity=cfg["synthesis_electricity_kwh_per_kg"],
            electricity_price=cfg["electricity_price_usd_per_kwh"],
            fuel_density=cfg["fuel_density_kg_per_l"],
            subsidy=cfg["subsidy_usd_per_gal"],
        )

    def flight_assumptions(self, fuel_burn: float, fossil_price: float) -> FlightAssumptions:
        cfg = self.config["flight"]
        return FlightAssumptions(
            distance=cfg["distance_km"],
            fuel_burn=fuel_burn,
            blend=cfg["blend_fraction"],
            fossil_price=fossil_price,
        )


def _validate(config: Dict[str, Any]) -> None:
    """Cross-field invariants not expressible as per-key type checks."""
    if config["schema_version"] != SCHEMA_VERSION:
        raise ValidationError(
            "schema_version",
            f"unsupported version {config['schema_version']}, expected {SCHEMA_VERSION}",
        )
    el = config["electrolysis"]
    share_sum = sum(el["market_shares"].values())
    if abs(share_sum - 1.0) > 1e-9:
        raise ValidationError(
            "electrolysis.market_shares", f"shares must sum to 1, got {share_sum}"
        )
    for tech, share in el["market_shares"].items():
        if not 0 <= share <= 1:
            raise ValidationError(
                f"electrolysis.market_shares.{tech}", f"share must be in [0, 1], got {share}"
            )
    _require_bounds(
        el, "electrolysis", "stack_learning_rate_lo", "stack_learning_rate",
        "stack_learning_rate_hi",
    )
    _require_bounds(
        el, "electrolysis", "deployment_growth_scale_lo", "deployment_growth_scale_hi",
        "deployment_growth_scale_hi",
    )
    for rate_key in ("stack_learning_rate", "stack_learning_rate_lo", "stack_learning_rate_hi"):
        if not 0 <= el[rate_key] < 1:
            raise ValidationError(
                f"electrolysis.{rate_key}", f"learning rate must be in [0, 1), got {el[rate_key]}"
            )
    regional_sum = 0.0
    for name, rcfg in el["regions"].items():
        path = f"electrolysis.regions.{name}"
        _require_bounds(rcfg, path, "bop_learning_rate_lo", "bop_learning_rate", "bop_learning_rate_hi")
        for rate_key in ("bop_learning_rate", "bop_learning_rate_lo", "bop_learning_rate_hi"):
            if not 0 <= rcfg[rate_key] < 1:
                raise ValidationError(
                    f"{path}.{rate_key}", f"learning rate must be in [0, 1), got {rcfg[rate_key]}"
                )
        if rcfg["deployment_kw"] < rcfg["current_capacity_kw"]:
            raise ValidationError(
                f"{path}.deployment_kw", "horizon deployment is below current capacity"
            )
        regional_sum += rcfg["deployment_kw"]
    if abs(regional_sum - el["global_deployment_kw"]) > 1e-6 * el["global_deployment_kw"]:
        raise ValidationError(
            "electrolysis.global_deployment_kw",
            f"regional deployments sum to {regional_sum}, not the global "
            f"deployment {el['global_deployment_kw']}",
        )
    dac = config["dac"]
    for rate_key in ("learning_rate", "learning_rate_lo", "learning_rate_hi"):
        if not 0 <= dac[rate_key] < 1:
            raise ValidationError(
                f"dac.{rate_key}", f"learning rate must be in [0, 1), got {dac[rate_key]}"
            )
    _require_bounds(dac, "dac", "learning_rate_lo", "learning_rate", "learning_rate_hi")
    _require_bounds(dac, "dac", "leak_rate_lo", "leak_rate_hi", "leak_rate_hi")
    if dac["gwp_horizon"] not in ("GWP20", "GWP100"):
        raise ValidationError("dac.gwp_horizon", "must be GWP20 or GWP100")
    targets = dac["target_grid_usd_per_t"]
    if any(b >= a for a, b in zip(targets, targets[1:])):
        raise ValidationError("dac.target_grid_usd_per_t", "targets must be strictly decreasing")
    fl = config["flight"]
    _require_bounds(fl, "flight", "fuel_burn_lo", "fuel_burn_l_per_pax_km", "fuel_burn_hi")
    _require_bounds(fl, "flight", "fossil_price_lo", "fossil_price_usd_per_gal", "fossil_price_hi")

    # constructing every model object runs the remaining invariant checks
    scenario = Scenario(name=config["name"], base_year=config["base_year"], config=config)
    try:
        for corner in ("pessimistic", "mid", "optimistic"):
            scenario.electrolyzer_model(corner)
        for key in ("learning_rate", "learning_rate_lo", "learning_rate_hi"):
            scenario.dac_model(dac[key])
        scenario.leakage(dac["leak_rate_lo"])
        scenario.leakage(dac["leak_rate_hi"])
        scenario.ek_assumptions()
        scenario.flight_assumptions(fl["fuel_burn_l_per_pax_km"], fl["fossil_price_usd_per_gal"])
        scenario.hydrogen_assumptions(capex=1000.0, utilization=0.5, electricity_price=0.05)
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError("<model>", str(exc)) from exc


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario from TOML text."""
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(str(exc)) from exc
    config = _merge(DEFAULTS, raw, "")
    _validate(config)
    return Scenario(name=config["name"], base_year=config["base_year"], config=config)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read scenario file {path}: {exc}") from exc
    return parse_scenario(text)


def bundled_scenarios() -> Dict[str, Path]:
    """Names and paths of the scenarios shipped with the package."""
    return {p.stem: p for p in sorted(DATA_DIR.glob("*.toml"))}


def load_bundled(name: str) -> Scenario:
    paths = bundled_scenarios()
    if name not in paths:
        raise ParseError(f"no bundled scenario named {name!r}; have {sorted(paths)}")
    return load_scenario(paths[name])


# ---------------------------------------------------------------------------
# projection


def _range_dict(r: ProjectionRange) -> Dict[str, float]:
    return {"lo": r.lo, "mid": r.mid, "hi": r.hi}


def _electrolysis_section(scenario: Scenario) -> Dict[str, Any]:
    pess = scenario.electrolyzer_model("pessimistic")
    mid = scenario.electrolyzer_model("mid")
    opt = scenario.electrolyzer_model("optimistic")
    pairs = []
    declines = []
    for region in Region:
        for tech in StackTechnology:
            current = current_capital_cost(mid, region, tech)
            projected = project_capital_cost(mid, region, tech)
            total_range = envelope(pess, mid, opt, region, tech)
            decline = decline_fraction(mid, region, tech)
            declines.append(decline)
            pairs.append(
                {
                    "region": region.value,
                    "technology": tech.value,
                    "current_stack_usd_per_kw": current.stack,
                    "current_bop_epc_usd_per_kw": current.bop_epc,
                    "current_total_usd_per_kw": current.total,
                    "projected_stack_usd_per_kw": projected.stack,
                    "projected_bop_epc_usd_per_kw": projected.bop_epc,
                    "projected_total_usd_per_kw": _range_dict(total_range),
                    "decline_fraction": decline,
                }
            )
    return {
        "per_pair": pairs,
        "decline_min_fraction": min(declines),
        "decline_max_fraction": max(declines),
    }


def _hydrogen_section(scenario: Scenario) -> Dict[str, Any]:
    cfg = scenario.config["hydrogen"]
    mid = scenario.electrolyzer_model("mid")
    subsidy = cfg["subsidy_usd_per_kg"]
    out = []
    for region in Region:
        tech = scenario.reference_technology(region)
        capex_now = current_capital_cost(mid, region, tech).total
        capex_2030 = project_capital_cost(mid, region, tech).total
        grid = []
        for u in cfg["utilization_grid"]:
            for price in cfg["electricity_price_grid_usd_per_kwh"]:
                now = scenario.hydrogen_assumptions(capex_now, u, price)
                fut = scenario.hydrogen_assumptions(capex_2030, u, price)
                fut_sub = scenario.hydrogen_assumptions(capex_2030, u, price, subsidy=subsidy)
                grid.append(
                    {
                        "utilization": u,
                        "electricity_price_usd_per_kwh": price,
                        "lcoh_current_usd_per_kg": lcoh(now),
                        "lcoh_projected_usd_per_kg": lcoh(fut),
                        "lcoh_projected_subsidized_usd_per_kg": lcoh(fut_sub),
                    }
                )
        required = []
        for target in cfg["lcoh_targets_usd_per_kg"]:
            for u in cfg["utilization_grid"]:
                now = scenario.hydrogen_assumptions(capex_now, u, 0.0)
                fut = scenario.hydrogen_assumptions(capex_2030, u, 0.0)
                required.append(
                    {
                        "target_usd_per_kg": target,
                        "utilization": u,
                        "price_current_usd_per_kwh": required_electricity_price(now, target),
                        "price_projected_usd_per_kwh": required_electricity_price(fut, target),
                    }
                )
        out.append(
            {
                "region": region.value,
                "technology": tech.value,
                "capex_current_usd_per_kw": capex_now,
                "capex_projected_usd_per_kw": capex_2030,
                "capital_contribution_current_usd_per_kg": capital_contribution(
                    scenario.hydrogen_assumptions(capex_now, 1.0, 0.0)
                ),
                "capital_contribution_projected_usd_per_kg": capital_contribution(
                    scenario.hydrogen_assumptions(capex_2030, 1.0, 0.0)
                ),
                "lcoh_grid": grid,
                "required_electricity_price": required,
            }
        )
    return {"per_region": out, "subsidy_usd_per_kg": subsidy}


def _dac_section(scenario: Scenario) -> Dict[str, Any]:
    cfg = scenario.config["dac"]
    pipeline = cfg["pipeline_capacity_ty"]
    model_mid = scenario.dac_model()
    model_lo_lr = scenario.dac_model(cfg["learning_rate_lo"])
    model_hi_lr = scenario.dac_model(cfg["learning_rate_hi"])
    leak_lo = scenario.leakage(cfg["leak_rate_lo"])
    leak_hi = scenario.leakage(cfg["leak_rate_hi"])
    current_capacity = model_mid.capital_curve.initial_capacity

    capital_range = ProjectionRange(
        lo=project_cost(model_hi_lr.capital_curve, pipeline),
        mid=project_cost(model_mid.capital_curve, pipeline),
        hi=project_cost(model_lo_lr.capital_curve, pipeline),
    )
    sweep = target_sweep(model_mid, leak_lo, leak_hi, cfg["target_grid_usd_per_t"])
    return {
        "capital_current_usd_per_ty": model_mid.capital_curve.initial_cost,
        "capital_projected_usd_per_ty": _range_dict(capital_range),
        "capture_cost_current_usd_per_t": capture_cost(model_mid, current_capacity),
        "capture_cost_projected_usd_per_t": capture_cost(model_mid, pipeline),
        "net_removal_current_usd_per_t": {
            "leak_lo": net_removal_cost(model_mid, current_capacity, leak_lo),
            "leak_hi": net_removal_cost(model_mid, current_capacity, leak_hi),
        },
        "net_removal_projected_usd_per_t": {
            "leak_lo": net_removal_cost(model_mid, pipeline, leak_lo),
            "leak_hi": net_removal_cost(model_mid, pipeline, leak_hi),
        },
        "target_sweep": [
            {
                "target_usd_per_t": row.target,
                "capacity_leak_lo_ty": row.capacity_lo,
                "capacity_leak_hi_ty": row.capacity_hi,
                "investment_leak_lo_usd": row.investment_lo,
                "investment_leak_hi_usd": row.investment_hi,
            }
            for row in sweep
        ],
    }


def _ekerosene_section(scenario: Scenario) -> Dict[str, Any]:
    ek_cfg = scenario.config["ekerosene"]
    fl_cfg = scenario.config["flight"]
    ek = scenario.ek_assumptions()
    ek_unsub = EkAssumptions(
        h2_intensity=ek.h2_intensity,
        co2_intensity=ek.co2_intensity,
        synthesis_levelized=ek.synthesis_levelized,
        synthesis_electricity=ek.synthesis_electricity,
        electricity_price=ek.electricity_price,
        fuel_density=ek.fuel_density,
        subsidy=0.0,
    )
    mid = scenario.electrolyzer_model("mid")
    dac_model = scenario.dac_model()
    pipeline = scenario.config["dac"]["pipeline_capacity_ty"]
    co2_now = capture_cost(dac_model, dac_model.capital_curve.initial_capacity)
    co2_2030 = capture_cost(dac_model, pipeline)
    u = ek_cfg["reference_utilization"]
    price = ek_cfg["electricity_price_usd_per_kwh"]

    per_region = []
    lcoek_2030 = []
    for region in Region:
        tech = scenario.reference_technology(region)
        capex_now = current_capital_cost(mid, region, tech).total
        capex_2030 = project_capital_cost(mid, region, tech).total
        h2_now = lcoh(scenario.hydrogen_assumptions(capex_now, u, price))
        h2_2030 = lcoh(scenario.hydrogen_assumptions(capex_2030, u, price))
        now = lcoek(ek_unsub, h2_now, co2_now)
        fut = lcoek(ek_unsub, h2_2030, co2_2030)
        lcoek_2030.append(fut)
        per_region.append(
            {
                "region": region.value,
                "h2_cost_current_usd_per_kg": h2_now,
                "h2_cost_projected_usd_per_kg": h2_2030,
                "co2_cost_current_usd_per_t": co2_now,
                "co2_cost_projected_usd_per_t": co2_2030,
                "lcoek_current_usd_per_gal": now,
                "lcoek_projected_usd_per_gal": fut,
                "reduction_usd_per_gal": now - fut,
                "lcoek_projected_subsidized_usd_per_gal": lcoek(ek, h2_2030, co2_2030),
            }
        )
    premiums = [
        flight_premium(scenario.flight_assumptions(burn, fossil), value)
        for burn in (fl_cfg["fuel_burn_lo"], fl_cfg["fuel_burn_hi"])
        for fossil in (fl_cfg["fossil_price_lo"], fl_cfg["fossil_price_hi"])
        for value in lcoek_2030
    ]
    mid_premium = flight_premium(
        scenario.flight_assumptions(
            fl_cfg["fuel_burn_l_per_pax_km"], fl_cfg["fossil_price_usd_per_gal"]
        ),
        sorted(lcoek_2030)[len(lcoek_2030) // 2],
    )
    return {
        "per_region": per_region,
        "flight_premium_usd_per_passenger": {
            "lo": min(premiums),
            "mid": mid_premium,
            "hi": max(premiums),
        },
    }


_SECTION_BUILDERS = {
    "electrolysis": _electrolysis_section,
    "hydrogen": _hydrogen_section,
    "dac": _dac_section,
    "ekerosene": _ekerosene_section,
}

SECTION_NAMES = tuple(_SECTION_BUILDERS)


def run_full_projection(
    scenario: Scenario, sections: Optional[List[str]] = None
) -> Dict[str, Any]:
    """Evaluate every requested section of a scenario.

    Deterministic: the result is a pure function of the scenario document.
    A failure in one section is recorded under that section's key without
    voiding the others.
    """
    wanted = list(_SECTION_BUILDERS) if sections is None else sections
    unknown = [s for s in wanted if s not in _SECTION_BUILDERS]
    if unknown:
        raise ValidationError("sections", f"unknown section(s) {unknown}")
    results: Dict[str, Any] = {}
    for name in _SECTION_BUILDERS:
        if name not in wanted:
            continue
        try:
            results[name] = _SECTION_BUILDERS[name](scenario)
        except Exception as exc:  # noqa: BLE001 - per-section isolation
            results[name] = {"error": f"{type(exc).__name__}: {exc}"}
    return {
        "meta": {
            "engine_version": __version__,
            "scenario_name": scenario.name,
            "base_year": scenario.base_year,
            "schema_version": scenario.config["schema_version"],
        },
        "effective_config": copy.deepcopy(scenario.config),
        "sections": results,
    }


# ---------------------------------------------------------------------------
# export


def results_to_json(results: Dict[str, Any]) -> str:
    """Stable JSON rendering: sorted keys, fixed layout."""
    return json.dumps(results, sort_keys=True, indent=2) + "\n"


def _csv_text(header: List[str], rows: List[List[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _electrolysis_csv(section: Dict[str, Any]) -> str:
    header = [
        "region", "technology",
        "current_stack_usd_per_kw", "current_bop_epc_usd_per_kw", "current_total_usd_per_kw",
        "projected_stack_usd_per_kw", "projected_bop_epc_usd_per_kw",
        "projected_total_lo_usd_per_kw", "projected_total_mid_usd_per_kw",
        "projected_total_hi_usd_per_kw", "decline_fraction",
    ]
    rows = [
        [
            p["region"], p["technology"],
            p["current_stack_usd_per_kw"], p["current_bop_epc_usd_per_kw"],
            p["current_total_usd_per_kw"],
            p["projected_stack_usd_per_kw"], p["projected_bop_epc_usd_per_kw"],
            p["projected_total_usd_per_kw"]["lo"], p["projected_total_usd_per_kw"]["mid"],
            p["projected_total_usd_per_kw"]["hi"], p["decline_fraction"],
        ]
        for p in section["per_pair"]
    ]
    return _csv_text(header, rows)


def _hydrogen_csv(section: Dict[str, Any]) -> str:
    header = [
        "region", "technology", "utilization", "electricity_price_usd_per_kwh",
        "lcoh_current_usd_per_kg", "lcoh_projected_usd_per_kg",
        "lcoh_projected_subsidized_usd_per_kg",
    ]
    rows = [
        [
            r["region"], r["technology"], g["utilization"],
            g["electricity_price_usd_per_kwh"], g["lcoh_current_usd_per_kg"],
            g["lcoh_projected_usd_per_kg"], g["lcoh_projected_subsidized_usd_per_kg"],
        ]
        for r in section["per_region"]
        for g in r["lcoh_grid"]
    ]
    return _csv_text(header, rows)


def _dac_csv(section: Dict[str, Any]) -> str:
    header = [
        "target_usd_per_t", "capacity_leak_lo_ty", "capacity_leak_hi_ty",
        "investment_leak_lo_usd", "investment_leak_hi_usd",
    ]
    rows = [
        [
            row["target_usd_per_t"],
            "unreachable" if row["capacity_leak_lo_ty"] is None else row["capacity_leak_lo_ty"],
            "unreachable" if row["capacity_leak_hi_ty"] is None else row["capacity_leak_hi_ty"],
            "unreachable" if row["investment_leak_lo_usd"] is None else row["investment_leak_lo_usd"],
            "unreachable" if row["investment_leak_hi_usd"] is None else row["investment_leak_hi_usd"],
        ]
        for row in section["target_sweep"]
    ]
    return _csv_text(header, rows)


def _ekerosene_csv(section: Dict[str, Any]) -> str:
    header = [
        "region", "h2_cost_current_usd_per_kg", "h2_cost_projected_usd_per_kg",
        "co2_cost_current_usd_per_t", "co2_cost_projected_usd_per_t",
        "lcoek_current_usd_per_gal", "lcoek_projected_usd_per_gal",
        "reduction_usd_per_gal",
    ]
    rows = [
        [
            r["region"], r["h2_cost_current_usd_per_kg"], r["h2_cost_projected_usd_per_kg"],
            r["co2_cost_current_usd_per_t"], r["co2_cost_projected_usd_per_t"],
            r["lcoek_current_usd_per_gal"], r["lcoek_projected_usd_per_gal"],
            r["reduction_usd_per_gal"],
        ]
        for r in section["per_region"]
    ]
    return _csv_text(header, rows)


_CSV_RENDERERS = {
    "electrolysis": _electrolysis_csv,
    "hydrogen": _hydrogen_csv,
    "dac": _dac_csv,
    "ekerosene": _ekerosene_csv,
}


def export(results: Dict[str, Any], out_dir: str | Path, fmt: str = "json") -> List[Path]:
    """Write the result bundle to disk; returns the written paths."""
    if fmt not in ("json", "csv"):
        raise ValueError(f"format must be 'json' or 'csv', got {fmt!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt == "json":
        path = out / "results.json"
        path.write_text(results_to_json(results))
        written.append(path)
    else:
        for name, renderer in _CSV_RENDERERS.items():
            section = results["sections"].get(name)
            if section is None or "error" in section:
                continue
            path = out / f"{name}.csv"
            path.write_text(renderer(section))
            written.append(path)
    return written
