"""Liquid-solvent direct air capture economics.

Capital cost rides a global experience curve; the levelized capture cost
adds annualization and flat non-learning opex. Upstream methane leakage
from the natural-gas supply debits net removal at a chosen GWP horizon,
and targets on net removal cost invert to required deployment and the
capital outlay needed to get there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .curves import (
    LearningCurve,
    capacity_for_cost,
    cumulative_investment,
    project_cost,
)
from .errors import NonPositiveRemoval, UnreachableTarget
from .finance import FinancialAssumptions


@dataclass(frozen=True)
class DacCostModel:
    """Capital curve plus the fixed plant and fuel-chain parameters."""

    capital_curve: LearningCurve  # USD per tCO2/yr of capture capacity
    financial: FinancialAssumptions
    capacity_factor: float
    non_learning_opex: float  # USD/tCO2, energy and variable costs held flat
    gas_intensity: float  # GJ natural gas per tCO2 captured
    methane_mass_per_energy: float  # tCH4 per GJ delivered gas

    def __post_init__(self):
        if not 0 < self.capacity_factor <= 1:
            raise ValueError(f"capacity_factor must be in (0, 1], got {self.capacity_factor}")
        if self.gas_intensity < 0:
            raise ValueError(f"gas_intensity must be >= 0, got {self.gas_intensity}")
        if self.non_learning_opex < 0:
            raise ValueError(
                f"non_learning_opex must be >= 0, got {self.non_learning_opex}"
            )
        if self.methane_mass_per_energy < 0:
            raise ValueError(
                f"methane_mass_per_energy must be >= 0, got {self.methane_mass_per_energy}"
            )

    @property
    def annualization(self) -> float:
        """(CRF + fixed O&M) / capacity factor, per year."""
        return self.financial.annual_capital_fraction / self.capacity_factor


@dataclass(frozen=True)
class LeakageSpec:
    """Upstream leak rate and the warming potential used to debit it."""

    leak_rate: float  # fraction of produced gas leaked
    gwp: float  # CH4 vs CO2 at the chosen horizon
    horizon: str = "GWP100"

    def __post_init__(self):
        if not 0 <= self.leak_rate < 1:
            raise ValueError(f"leak_rate must be in [0, 1), got {self.leak_rate}")
        if self.gwp <= 0:
            raise ValueError(f"gwp must be positive, got {self.gwp}")
        if self.horizon not in ("GWP20", "GWP100"):
            raise ValueError(f"horizon must be GWP20 or GWP100, got {self.horizon}")


@dataclass(frozen=True)
class TargetResult:
    """Deployment and outlay needed to reach one net-removal-cost target."""

    required_capacity: float  # tCO2/yr
    learning_investment: float  # USD


def capture_cost(model: DacCostModel, cumulative_capacity: float) -> float:
    """Levelized cost per tonne captured at the given cumulative capacity."""
    capital = project_cost(model.capital_curve, cumulative_capacity)
    return capital * model.annualization + model.non_learning_opex


def net_removal_fraction(model: DacCostModel, leakage: LeakageSpec) -> float:
    """Net tonnes removed per tonne captured after the methane debit.

    Leak rates are production-normalized, hence the L/(1-L) factor on gas
    actually delivered. Non-positive values mean fugitive emissions cancel
    the capture entirely; callers must check before dividing.
    """
    leaked_ch4_per_t = (
        model.gas_intensity
        * model.methane_mass_per_energy
        * leakage.leak_rate
        / (1.0 - leakage.leak_rate)
    )
    return 1.0 - leaked_ch4_per_t * leakage.gwp


def net_removal_cost(
    model: DacCostModel, cumulative_capacity: float, leakage: LeakageSpec
) -> float:
    """Cost per tonne of net atmospheric removal, USD/tCO2."""
    fraction = net_removal_fraction(model, leakage)
    if fraction <= 0:
        raise NonPositiveRemoval(
            f"leak rate {leakage.leak_rate} at GWP {leakage.gwp} cancels all "
            "captured CO2; no removal cost exists"
        )
    return capture_cost(model, cumulative_capacity) / fraction


def target_analysis(
    model: DacCostModel, leakage: LeakageSpec, target_net_cost: float
) -> TargetResult:
    """Deployment and capital outlay required to hit a net-removal-cost target.

    The target converts to a capture-cost target through the leakage
    fraction, then to a capital target through the annualization chain,
    and finally to a required cumulative capacity on the capital curve.
    The investment is the outlay along the curve from today's capacity to
    that point.
    """
    fraction = net_removal_fraction(model, leakage)
    if fraction <= 0:
        raise NonPositiveRemoval(
            f"leak rate {leakage.leak_rate} at GWP {leakage.gwp} cancels all "
            "captured CO2; targets are meaningless"
        )
    required_capture = target_net_cost * fraction
    if required_capture <= model.non_learning_opex:
        raise UnreachableTarget(
            f"net target {target_net_cost} implies a capture cost of "
            f"{required_capture:.2f}, at or below the non-learning floor of "
            f"{model.non_learning_opex}; no capital reduction suffices"
        )
    required_capital = (
        (required_capture - model.non_learning_opex)
        * model.capacity_factor
        / model.financial.annual_capital_fraction
    )
    curve = model.capital_curve
    if required_capital >= curve.initial_cost:
        # target already met today; nothing to build
        return TargetResult(
            required_capacity=curve.initial_capacity, learning_investment=0.0
        )
    required_capacity = capacity_for_cost(curve, required_capital)
    investment = cumulative_investment(curve, curve.initial_capacity, required_capacity)
    return TargetResult(required_capacity=required_capacity, learning_investment=investment)


@dataclass(frozen=True)
class SweepRow:
    """One target's results at both leakage bounds; None marks unreachable."""

    target: float
    capacity_lo: Optional[float]
    capacity_hi: Optional[float]
    investment_lo: Optional[float]
    investment_hi: Optional[float]


def target_sweep(
    model: DacCostModel,
    leakage_lo: LeakageSpec,
    leakage_hi: LeakageSpec,
    targets: Sequence[float],
) -> List[SweepRow]:
    """Evaluate target_analysis over a decreasing grid of cost targets.

    Unreachable targets are marked rather than failing the whole sweep.
    """
    if any(b >= a for a, b in zip(targets, targets[1:])):
        raise ValueError("target grid must be strictly decreasing")
    if leakage_hi.leak_rate < leakage_lo.leak_rate:
        raise ValueError("leakage_hi must not leak less than leakage_lo")
    rows = []
    for target in targets:
        results = []
        for leakage in (leakage_lo, leakage_hi):
            try:
                results.append(target_analysis(model, leakage, target))
            except (UnreachableTarget, NonPositiveRemoval):
                results.append(None)
        lo, hi = results
        rows.append(
            SweepRow(
                target=target,
                capacity_lo=lo.required_capacity if lo else None,
                capacity_hi=hi.required_capacity if hi else None,
                investment_lo=lo.learning_investment if lo else None,
                investment_hi=hi.learning_investment if hi else None,
            )
        )
    return rows
