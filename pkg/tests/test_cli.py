import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from techcurves.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture()
def runner():
    return CliRunner()


def test_project_summary_decline_band(runner):
    result = runner.invoke(main, ["project", "--scenario", "base-2030"])
    assert result.exit_code == 0
    # the headline range must bracket the 41-74% decline claim
    assert "electrolyzer capital decline: 39.9% to 72.1%" in result.output


def test_project_writes_json_bundle(runner, tmp_path):
    result = runner.invoke(
        main,
        ["project", "--scenario", "base-2030", "--out", str(tmp_path), "--format", "json"],
    )
    assert result.exit_code == 0
    bundle = json.loads((tmp_path / "results.json").read_text())
    assert bundle["meta"]["scenario_name"] == "base-2030"


def test_project_writes_csv(runner, tmp_path):
    result = runner.invoke(
        main,
        ["project", "--scenario", "base-2030", "--out", str(tmp_path), "--format", "csv"],
    )
    assert result.exit_code == 0
    assert (tmp_path / "electrolysis.csv").exists()
    assert (tmp_path / "dac.csv").exists()


def test_project_missing_file_exit_2(runner):
    result = runner.invoke(main, ["project", "--scenario", "/no/such/file.toml"])
    assert result.exit_code == 2
    assert "/no/such/file.toml" in result.output


def test_project_invalid_scenario_exit_2(runner, tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('schema_version = 1\nname = "bad"\n[dac]\nlearning_rate = -1\n')
    result = runner.invoke(main, ["project", "--scenario", str(bad)])
    assert result.exit_code == 2
    assert "dac.learning_rate" in result.output


def test_project_json_flag_stable(runner):
    a = runner.invoke(main, ["project", "--scenario", "base-2030", "--json"])
    b = runner.invoke(main, ["project", "--scenario", "base-2030", "--json"])
    assert a.exit_code == 0
    assert a.output == b.output


def test_scenario_dir_env(runner, tmp_path, monkeypatch):
    custom = tmp_path / "mine.toml"
    custom.write_text('schema_version = 1\nname = "mine"\n')
    monkeypatch.setenv("TECHCURVES_SCENARIO_DIR", str(tmp_path))
    result = runner.invoke(main, ["project", "--scenario", "mine"])
    assert result.exit_code == 0
    assert "scenario: mine" in result.output


def test_dac_target_base_anchor(runner):
    result = runner.invoke(
        main,
        ["dac-target", "--scenario", "base-2030", "--target", "200",
         "--leakage", "0.002", "--gwp", "100", "--json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["reachable"] is True
    assert payload["required_capacity_ty"] == pytest.approx(160e6, rel=0.15)
    assert payload["learning_investment_usd"] == pytest.approx(163e9, rel=0.15)


def test_dac_target_at_current_cost_zero(runner):
    # target equal to today's net removal cost needs no new build-out
    result = runner.invoke(
        main,
        ["dac-target", "--scenario", "base-2030", "--target", "489",
         "--leakage", "0.002", "--gwp", "100", "--json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["learning_investment_usd"] < 1e9  # effectively current capacity


def test_dac_target_unreachable_exit_3(runner):
    result = runner.invoke(
        main,
        ["dac-target", "--scenario", "base-2030", "--target", "40",
         "--leakage", "0.002", "--gwp", "100"],
    )
    assert result.exit_code == 3
    assert "unreachable" in result.output


def test_lcoh_current_usa(runner):
    result = runner.invoke(
        main,
        ["lcoh", "--scenario", "base-2030", "--region", "usa",
         "--utilization", "1.0", "--json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["capital_contribution_usd_per_kg"] >= 2.0


def test_lcoh_subsidized_2030(runner):
    result = runner.invoke(
        main,
        ["lcoh", "--scenario", "base-2030", "--region", "usa", "--utilization", "0.5",
         "--electricity-price", "0.03", "--subsidy", "3", "--year", "2030", "--json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["lcoh_usd_per_kg"] <= 2.0


def test_lcoh_solve_electricity(runner):
    result = runner.invoke(
        main,
        ["lcoh", "--scenario", "base-2030", "--region", "usa", "--utilization", "0.2",
         "--year", "2030", "--solve-electricity", "--target", "1", "--json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["required_electricity_price_usd_per_kwh"] < 0.0


def test_lcoh_solve_requires_target(runner):
    result = runner.invoke(
        main,
        ["lcoh", "--scenario", "base-2030", "--region", "usa",
         "--utilization", "0.5", "--solve-electricity"],
    )
    assert result.exit_code == 2


def test_golden_summary_fixture(runner):
    result = runner.invoke(main, ["project", "--scenario", "base-2030"])
    expected = (FIXTURES / "base-2030-summary.txt").read_text()
    assert result.output == expected
