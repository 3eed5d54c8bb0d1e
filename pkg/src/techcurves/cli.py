"""Command-line front door for projections, single queries and sweeps.

Exit codes are fixed for CI use: 0 success, 1 internal/model error,
2 usage or validation error, 3 unreachable target.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path
from typing import Optional

import click

from . import __version__
from .dac import target_analysis
from .electrolysis import Region
from .errors import (
    ModelError,
    ParseError,
    ScenarioError,
    UnreachableTarget,
    ValidationError,
)
from .hydrogen import capital_contribution, lcoh, required_electricity_price
from .scenario import (
    Scenario,
    bundled_scenarios,
    export,
    load_scenario,
    run_full_projection,
)

SCENARIO_DIR_ENV = "TECHCURVES_SCENARIO_DIR"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_UNREACHABLE = 3


def _resolve_scenario(ref: str) -> Scenario:
    """Resolve a scenario reference: a path, or a name in the scenario dir
    (TECHCURVES_SCENARIO_DIR) or the bundled set."""
    path = Path(ref)
    if path.exists():
        return load_scenario(path)
    candidates = []
    env_dir = os.environ.get(SCENARIO_DIR_ENV)
    if env_dir:
        candidates.append(Path(env_dir) / f"{ref}.toml")
    bundled = bundled_scenarios()
    if ref in bundled:
        candidates.append(bundled[ref])
    for candidate in candidates:
        if candidate.exists():
            return load_scenario(candidate)
    raise ParseError(f"scenario not found: {ref} (no such file or bundled name)")


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.version_option(version=__version__, prog_name="techcurves")
def main():
    """Experience-curve cost projections for electrolysis, DAC and e-kerosene."""


@main.command()
@click.option("--scenario", "scenario_ref", required=True, help="Scenario file or bundled name.")
@click.option("--out", "out_dir", type=click.Path(), default=None, help="Directory for exported files.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the full result bundle as JSON to stdout.")
def project(scenario_ref: str, out_dir: Optional[str], fmt: str, as_json: bool):
    """Run the full projection and print a summary (optionally export files)."""
    try:
        scenario = _resolve_scenario(scenario_ref)
    except ValidationError as exc:
        _fail(str(exc), EXIT_USAGE)
    except ParseError as exc:
        _fail(str(exc), EXIT_USAGE)
    try:
        results = run_full_projection(scenario)
        if out_dir is not None:
            written = export(results, out_dir, fmt)
        else:
            written = []
    except ScenarioError as exc:
        _fail(str(exc), EXIT_USAGE)
    except (ModelError, OSError) as exc:
        _fail(str(exc), EXIT_INTERNAL)

    if as_json:
        from .scenario import results_to_json

        click.echo(results_to_json(results), nl=False)
        sys.exit(EXIT_OK)

    sections = results["sections"]
    click.echo(f"scenario: {scenario.name} (base year {scenario.base_year})")
    el = sections.get("electrolysis")
    if el and "error" not in el:
        lo = el["decline_min_fraction"] * 100
        hi = el["decline_max_fraction"] * 100
        click.echo(f"electrolyzer capital decline: {lo:.1f}% to {hi:.1f}% across regions and stacks")
        for p in el["per_pair"]:
            rng = p["projected_total_usd_per_kw"]
            click.echo(
                f"  {p['region']:>5s} {p['technology']:<17s} "
                f"{p['current_total_usd_per_kw']:7.0f} -> {rng['mid']:6.0f} USD/kW "
                f"[{rng['lo']:.0f}, {rng['hi']:.0f}]"
            )
    dac = sections.get("dac")
    if dac and "error" not in dac:
        cap = dac["capital_projected_usd_per_ty"]
        click.echo(
            f"dac capital: {dac['capital_current_usd_per_ty']:.0f} -> "
            f"{cap['mid']:.0f} USD/(t/yr) [{cap['lo']:.0f}, {cap['hi']:.0f}]"
        )
        net = dac["net_removal_projected_usd_per_t"]
        click.echo(
            f"dac net removal at pipeline: {net['leak_lo']:.0f} to {net['leak_hi']:.0f} USD/t"
        )
    ek = sections.get("ekerosene")
    if ek and "error" not in ek:
        vals = [r["lcoek_current_usd_per_gal"] for r in ek["per_region"]]
        fut = [r["lcoek_projected_usd_per_gal"] for r in ek["per_region"]]
        prem = ek["flight_premium_usd_per_passenger"]
        click.echo(
            f"e-kerosene: {min(vals):.1f} to {max(vals):.1f} USD/gal today, "
            f"{min(fut):.1f} to {max(fut):.1f} USD/gal projected"
        )
        click.echo(
            f"flight premium: {prem['lo']:.1f} to {prem['hi']:.1f} USD/passenger "
            f"(mid {prem['mid']:.1f})"
        )
    errors = {name: sec["error"] for name, sec in sections.items() if "error" in sec}
    for name, message in errors.items():
        click.echo(f"section {name} failed: {message}", err=True)
    if written:
        for path in written:
            click.echo(f"wrote {path}")
    sys.exit(EXIT_INTERNAL if errors else EXIT_OK)


@main.command("dac-target")
@click.option("--scenario", "scenario_ref", required=True)
@click.option("--target", type=float, required=True, help="Net removal cost target, USD/t.")
@click.option("--leakage", type=float, required=True, help="Upstream methane leak rate, fraction.")
@click.option("--gwp", type=click.Choice(["20", "100"]), default="100", show_default=True)
@click.option("--learning-rate", type=float, default=None, help="Override the capital learning rate.")
@click.option("--json", "as_json", is_flag=True)
def dac_target(
    scenario_ref: str,
    target: float,
    leakage: float,
    gwp: str,
    learning_rate: Optional[float],
    as_json: bool,
):
    """Deployment and investment needed to reach a DAC net-removal-cost target."""
    try:
        scenario = _resolve_scenario(scenario_ref)
        model = scenario.dac_model(learning_rate)
        spec = scenario.leakage(leakage, horizon=f"GWP{gwp}")
    except ScenarioError as exc:
        _fail(str(exc), EXIT_USAGE)
    except ValueError as exc:
        _fail(str(exc), EXIT_USAGE)
    try:
        result = target_analysis(model, spec, target)
    except UnreachableTarget as exc:
        if as_json:
            click.echo(json.dumps({"reachable": False, "reason": str(exc)}, sort_keys=True))
        else:
            click.echo("unreachable")
            click.echo(f"reason: {exc}", err=True)
        sys.exit(EXIT_UNREACHABLE)
    except ModelError as exc:
        _fail(str(exc), EXIT_INTERNAL)
    if as_json:
        click.echo(
            json.dumps(
                {
                    "reachable": True,
                    "required_capacity_ty": result.required_capacity,
                    "learning_investment_usd": result.learning_investment,
                },
                sort_keys=True,
            )
        )
    else:
        click.echo(f"required capacity: {result.required_capacity:.4g} tCO2/yr")
        click.echo(f"learning investment: {result.learning_investment:.4g} USD")
    sys.exit(EXIT_OK)


@main.command("lcoh")
@click.option("--scenario", "scenario_ref", required=True)
@click.option("--region", type=click.Choice([r.value for r in Region]), required=True)
@click.option("--utilization", type=float, required=True)
@click.option("--electricity-price", type=float, default=0.0, show_default=True, help="USD/kWh.")
@click.option("--subsidy", type=float, default=0.0, show_default=True, help="USD/kg.")
@click.option("--year", type=click.Choice(["current", "2030"]), default="current", show_default=True)
@click.option("--solve-electricity", is_flag=True, help="Invert for the electricity price instead.")
@click.option("--target", type=float, default=None, help="Target LCOH for --solve-electricity, USD/kg.")
@click.option("--json", "as_json", is_flag=True)
def lcoh_command(
    scenario_ref: str,
    region: str,
    utilization: float,
    electricity_price: float,
    subsidy: float,
    year: str,
    solve_electricity: bool,
    target: Optional[float],
    as_json: bool,
):
    """Levelized cost of hydrogen for a region's reference electrolyzer."""
    if solve_electricity and target is None:
        _fail("--solve-electricity requires --target", EXIT_USAGE)
    try:
        scenario = _resolve_scenario(scenario_ref)
        from .electrolysis import current_capital_cost, project_capital_cost

        reg = Region(region)
        tech = scenario.reference_technology(reg)
        model = scenario.electrolyzer_model("mid")
        if year == "current":
            capex = current_capital_cost(model, reg, tech).total
        else:
            capex = project_capital_cost(model, reg, tech).total
        assumptions = scenario.hydrogen_assumptions(
            capex, utilization, electricity_price, subsidy=subsidy
        )
    except ScenarioError as exc:
        _fail(str(exc), EXIT_USAGE)
    except ValueError as exc:
        _fail(str(exc), EXIT_USAGE)

    try:
        contribution = capital_contribution(assumptions)
        if solve_electricity:
            price = required_electricity_price(assumptions, target)
            payload = {
                "capex_usd_per_kw": capex,
                "capital_contribution_usd_per_kg": contribution,
                "required_electricity_price_usd_per_kwh": price,
                "target_usd_per_kg": target,
            }
            text = [
                f"capex: {capex:.1f} USD/kW",
                f"capital contribution: {contribution:.3f} USD/kg",
                f"required electricity price: {price:.4f} USD/kWh",
            ]
            if price < 0:
                text.append("target unreachable at any non-negative electricity price")
        else:
            value = lcoh(assumptions)
            payload = {
                "capex_usd_per_kw": capex,
                "capital_contribution_usd_per_kg": contribution,
                "lcoh_usd_per_kg": value,
            }
            text = [
                f"capex: {capex:.1f} USD/kW",
                f"capital contribution: {contribution:.3f} USD/kg",
                f"lcoh: {value:.3f} USD/kg",
            ]
    except ModelError as exc:
        _fail(str(exc), EXIT_INTERNAL)
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in text:
            click.echo(line)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
