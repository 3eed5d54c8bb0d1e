"""Levelized cost of electrolytic hydrogen and its inverse."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ZeroUtilization
from .finance import FinancialAssumptions

HOURS_PER_YEAR = 8760.0


@dataclass(frozen=True)
class HydrogenPlantAssumptions:
    """Inputs for one levelized-cost evaluation."""

    capex: float  # USD/kW
    specific_energy: float  # kWh per kg H2
    utilization: float  # capacity factor, (0, 1]
    electricity_price: float  # USD/kWh
    subsidy: float  # USD/kg, >= 0
    financial: FinancialAssumptions

    def __post_init__(self):
        if self.specific_energy <= 0:
            raise ValueError(f"specific_energy must be positive, got {self.specific_energy}")
        if not 0 < self.utilization <= 1:
            if self.utilization == 0:
                raise ZeroUtilization("utilization must be positive")
            raise ValueError(f"utilization must be in (0, 1], got {self.utilization}")
        if self.subsidy < 0:
            raise ValueError(f"subsidy must be >= 0, got {self.subsidy}")
        if self.capex < 0:
            raise ValueError(f"capex must be >= 0, got {self.capex}")


def capital_contribution(assumptions: HydrogenPlantAssumptions) -> float:
    """Annualized capital plus fixed O&M per kg of hydrogen, USD/kg."""
    a = assumptions
    return (
        a.capex
        * a.financial.annual_capital_fraction
        * a.specific_energy
        / (HOURS_PER_YEAR * a.utilization)
    )


def lcoh(assumptions: HydrogenPlantAssumptions) -> float:
    """Levelized cost of hydrogen, USD/kg.

    Capital contribution plus electricity cost, minus any production
    subsidy. May go negative under a large subsidy; the value is reported
    as-is.
    """
    a = assumptions
    return (
        capital_contribution(a) + a.electricity_price * a.specific_energy - a.subsidy
    )


def required_electricity_price(
    assumptions: HydrogenPlantAssumptions, target_lcoh: float
) -> float:
    """Electricity price at which lcoh() equals target_lcoh, USD/kWh.

    Exact algebraic inverse of lcoh; the assumptions' own electricity
    price is ignored. A negative result means the target is out of reach
    at any non-negative electricity price.
    """
    if target_lcoh < 0:
        raise ValueError(f"target_lcoh must be >= 0, got {target_lcoh}")
    a = assumptions
    return (target_lcoh + a.subsidy - capital_contribution(a)) / a.specific_energy


def with_electricity_price(
    assumptions: HydrogenPlantAssumptions, price: float
) -> HydrogenPlantAssumptions:
    """Copy of the assumptions with the electricity price replaced."""
    return replace(assumptions, electricity_price=price)
