import dataclasses

import pytest

from techcurves import (
    CostBreakdown,
    ElectrolyzerCostModel,
    InvalidRange,
    LearningCurve,
    NegativeGrowth,
    Region,
    StackTechnology,
    current_capital_cost,
    decline_fraction,
    envelope,
    project_capital_cost,
    stack_capacity_at_horizon,
)

ALL_PAIRS = [(r, t) for r in Region for t in StackTechnology]


def make_model(
    stack_alpha=0.2,
    bop_alpha=0.1,
    stack_x0=1.0e6,
    region_x0=1.0e6,
    global_growth=0.0,
    region_mult=1.0,
):
    stack_curves = {
        t: LearningCurve(1000.0, stack_x0, stack_alpha) for t in StackTechnology
    }
    bop_curves = {
        (r, t): LearningCurve(500.0, region_x0, bop_alpha)
        for r in Region
        for t in StackTechnology
    }
    # USA carries the probed regional multiplier; the rest absorb whatever
    # growth keeps the regional sum equal to the global deployment
    global_dep = 4 * stack_x0 + global_growth
    usa = region_x0 * region_mult
    rest = (global_dep - usa) / 3.0
    regional = {r: (usa if r is Region.USA else rest) for r in Region}
    return ElectrolyzerCostModel(
        stack_curves=stack_curves,
        bop_epc_curves=bop_curves,
        market_shares={t: 0.25 for t in StackTechnology},
        regional_deployment=regional,
        global_deployment=global_dep,
    )


def test_zero_growth_identity():
    model = make_model()
    for region, tech in ALL_PAIRS:
        assert stack_capacity_at_horizon(model, tech) == model.stack_curves[tech].initial_capacity
        breakdown = project_capital_cost(model, region, tech)
        current = current_capital_cost(model, region, tech)
        assert breakdown.stack == pytest.approx(current.stack)
        assert breakdown.bop_epc == pytest.approx(current.bop_epc)


def test_share_allocation_arithmetic():
    model = make_model(global_growth=8.0e6)
    for tech in StackTechnology:
        expected = model.stack_curves[tech].initial_capacity + 0.25 * 8.0e6
        assert stack_capacity_at_horizon(model, tech) == pytest.approx(expected)


def test_negative_growth_rejected():
    model = make_model()
    shrunk = dataclasses.replace(
        model,
        global_deployment=model.current_global_capacity - 1.0,
        regional_deployment={r: (model.current_global_capacity - 1.0) / 4 for r in Region},
    )
    with pytest.raises(NegativeGrowth):
        stack_capacity_at_horizon(shrunk, StackTechnology.WESTERN_PEM)


def test_synthetic_doubling_factors():
    # stack x4 (two doublings at 20%) -> 0.64; bop x2 (one at 10%) -> 0.90
    model = make_model(stack_alpha=0.2, bop_alpha=0.1, global_growth=12.0e6, region_mult=2.0)
    breakdown = project_capital_cost(model, Region.USA, StackTechnology.WESTERN_PEM)
    assert breakdown.stack == pytest.approx(1000.0 * 0.64)
    assert breakdown.bop_epc == pytest.approx(500.0 * 0.90)
    assert breakdown.total == pytest.approx(640.0 + 450.0)


def test_additivity():
    model = make_model(global_growth=5.0e6, region_mult=1.7)
    for region, tech in ALL_PAIRS:
        b = project_capital_cost(model, region, tech)
        assert b.total == b.stack + b.bop_epc


def test_regional_independence():
    model = make_model(global_growth=5.0e6, region_mult=1.5)
    bumped_regional = dict(model.regional_deployment)
    bumped_regional[Region.USA] = bumped_regional[Region.USA] * 2
    bumped = dataclasses.replace(
        model,
        regional_deployment=bumped_regional,
        global_deployment=sum(bumped_regional.values()),
    )
    for tech in StackTechnology:
        for region in Region:
            # stack component depends only on global deployment
            if region is not Region.USA:
                before = project_capital_cost(model, region, tech).bop_epc
                after = project_capital_cost(bumped, region, tech).bop_epc
                assert before == after


def test_market_share_coupling():
    model = make_model(global_growth=5.0e6)
    shares = {t: 0.2 for t in StackTechnology}
    shares[StackTechnology.WESTERN_PEM] = 0.4
    tilted = dataclasses.replace(model, market_shares=shares)
    base = project_capital_cost(model, Region.EU, StackTechnology.WESTERN_PEM).stack
    more = project_capital_cost(tilted, Region.EU, StackTechnology.WESTERN_PEM).stack
    assert more <= base


def test_decline_fraction_in_unit_interval():
    model = make_model(global_growth=5.0e6, region_mult=2.0)
    for region, tech in ALL_PAIRS:
        d = decline_fraction(model, region, tech)
        assert 0.0 <= d < 1.0


def test_envelope_degenerate():
    model = make_model(global_growth=5.0e6, region_mult=1.5)
    rng = envelope(model, model, model, Region.CHINA, StackTechnology.CHINESE_PEM)
    total = project_capital_cost(model, Region.CHINA, StackTechnology.CHINESE_PEM).total
    assert rng.lo == rng.mid == rng.hi == total


def test_envelope_ordering_and_widening():
    mid = make_model(stack_alpha=0.18, bop_alpha=0.10, global_growth=5.0e6, region_mult=1.5)
    pess = make_model(stack_alpha=0.10, bop_alpha=0.05, global_growth=5.0e6, region_mult=1.5)
    opt = make_model(stack_alpha=0.25, bop_alpha=0.15, global_growth=5.0e6, region_mult=1.5)
    rng = envelope(pess, mid, opt, Region.USA, StackTechnology.WESTERN_ALKALINE)
    assert rng.lo <= rng.mid <= rng.hi
    wider_pess = make_model(stack_alpha=0.05, bop_alpha=0.02, global_growth=5.0e6, region_mult=1.5)
    wider_opt = make_model(stack_alpha=0.30, bop_alpha=0.20, global_growth=5.0e6, region_mult=1.5)
    wide = envelope(wider_pess, mid, wider_opt, Region.USA, StackTechnology.WESTERN_ALKALINE)
    assert wide.lo <= rng.lo and wide.hi >= rng.hi


def test_envelope_rejects_inverted_corners():
    mid = make_model(stack_alpha=0.18, global_growth=5.0e6)
    pess = make_model(stack_alpha=0.30, global_growth=5.0e6)  # inverted on purpose
    opt = make_model(stack_alpha=0.05, global_growth=5.0e6)
    with pytest.raises(InvalidRange):
        envelope(pess, mid, opt, Region.USA, StackTechnology.WESTERN_PEM)


def test_model_validation():
    model = make_model()
    bad_shares = {t: 0.3 for t in StackTechnology}  # sums to 1.2
    with pytest.raises(ValueError):
        dataclasses.replace(model, market_shares=bad_shares)
    with pytest.raises(ValueError):
        dataclasses.replace(model, global_deployment=model.global_deployment * 2)


def test_cost_breakdown():
    b = CostBreakdown(stack=300.0, bop_epc=200.0)
    assert b.total == 500.0
    with pytest.raises(ValueError):
        CostBreakdown(stack=-1.0, bop_epc=0.0)
