"""Electrolyzer project capital costs.

Stack costs ride four independent global experience curves (one per stack
technology and manufacturing base), while balance-of-plant and EPC costs
ride one local curve per region, driven by that region's cumulative
deployment of all stack types. A projected project cost is the sum of the
two components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Tuple

from .curves import LearningCurve, project_cost
from .errors import InvalidRange, NegativeGrowth
from .ranges import ProjectionRange

SHARE_SUM_TOL = 1e-9
DEPLOYMENT_SUM_RTOL = 1e-6


class StackTechnology(enum.Enum):
    WESTERN_PEM = "western_pem"
    CHINESE_PEM = "chinese_pem"
    WESTERN_ALKALINE = "western_alkaline"
    CHINESE_ALKALINE = "chinese_alkaline"


class Region(enum.Enum):
    USA = "usa"
    EU = "eu"
    CHINA = "china"
    ROW = "row"


@dataclass(frozen=True)
class CostBreakdown:
    """Stack and BoP&EPC components of a project cost, USD/kW."""

    stack: float
    bop_epc: float

    def __post_init__(self):
        if self.stack < 0 or self.bop_epc < 0:
            raise ValueError("cost components must be non-negative")

    @property
    def total(self) -> float:
        return self.stack + self.bop_epc


@dataclass(frozen=True)
class ElectrolyzerCostModel:
    """Curves, market shares and horizon deployment for one projection case."""

    stack_curves: Mapping[StackTechnology, LearningCurve]
    bop_epc_curves: Mapping[Tuple[Region, StackTechnology], LearningCurve]
    market_shares: Mapping[StackTechnology, float]
    regional_deployment: Mapping[Region, float]
    global_deployment: float

    def __post_init__(self):
        for tech in StackTechnology:
            if tech not in self.stack_curves:
                raise ValueError(f"missing stack curve for {tech.value}")
            if tech not in self.market_shares:
                raise ValueError(f"missing market share for {tech.value}")
        for region in Region:
            if region not in self.regional_deployment:
                raise ValueError(f"missing regional deployment for {region.value}")
            for tech in StackTechnology:
                if (region, tech) not in self.bop_epc_curves:
                    raise ValueError(
                        f"missing BoP&EPC curve for ({region.value}, {tech.value})"
                    )
        shares = [self.market_shares[t] for t in StackTechnology]
        if any(s < 0 or s > 1 for s in shares):
            raise ValueError("market shares must lie in [0, 1]")
        if abs(sum(shares) - 1.0) > SHARE_SUM_TOL:
            raise ValueError(f"market shares must sum to 1, got {sum(shares)}")
        regional_sum = sum(self.regional_deployment[r] for r in Region)
        if abs(regional_sum - self.global_deployment) > DEPLOYMENT_SUM_RTOL * abs(
            self.global_deployment
        ):
            raise ValueError(
                "regional deployment must sum to the global deployment "
                f"({regional_sum} vs {self.global_deployment})"
            )

    @property
    def current_global_capacity(self) -> float:
        return sum(self.stack_curves[t].initial_capacity for t in StackTechnology)


def stack_capacity_at_horizon(
    model: ElectrolyzerCostModel, tech: StackTechnology
) -> float:
    """Cumulative global capacity of one stack technology at the horizon.

    Global growth is allocated to technologies by market share on top of
    each technology's current installed base.
    """
    growth = model.global_deployment - model.current_global_capacity
    if growth < 0:
        raise NegativeGrowth(
            f"global deployment {model.global_deployment} is below the current "
            f"installed total {model.current_global_capacity}"
        )
    return model.stack_curves[tech].initial_capacity + model.market_shares[tech] * growth


def current_capital_cost(
    model: ElectrolyzerCostModel, region: Region, tech: StackTechnology
) -> CostBreakdown:
    """Present-day cost breakdown straight off the curve anchors."""
    return CostBreakdown(
        stack=model.stack_curves[tech].initial_cost,
        bop_epc=model.bop_epc_curves[(region, tech)].initial_cost,
    )


def project_capital_cost(
    model: ElectrolyzerCostModel, region: Region, tech: StackTechnology
) -> CostBreakdown:
    """Projected cost breakdown at the model's deployment horizon."""
    stack = project_cost(model.stack_curves[tech], stack_capacity_at_horizon(model, tech))
    bop = project_cost(
        model.bop_epc_curves[(region, tech)], model.regional_deployment[region]
    )
    return CostBreakdown(stack=stack, bop_epc=bop)


def decline_fraction(
    model: ElectrolyzerCostModel, region: Region, tech: StackTechnology
) -> float:
    """Fractional drop of total project cost between now and the horizon."""
    current = current_capital_cost(model, region, tech).total
    projected = project_capital_cost(model, region, tech).total
    return 1.0 - projected / current


def envelope(
    pessimistic: ElectrolyzerCostModel,
    mid: ElectrolyzerCostModel,
    optimistic: ElectrolyzerCostModel,
    region: Region,
    tech: StackTechnology,
) -> ProjectionRange:
    """Total-cost envelope across a parameter box.

    The power law is monotone in both learning rate and deployed capacity,
    so the extremes sit at the box corners: the pessimistic corner (all
    learning rates and deployments at their low bounds) yields the high
    cost, the optimistic corner the low cost. Only the corners are
    evaluated.
    """
    hi = project_capital_cost(pessimistic, region, tech).total
    mid_total = project_capital_cost(mid, region, tech).total
    lo = project_capital_cost(optimistic, region, tech).total
    if not (lo <= mid_total <= hi):
        raise InvalidRange(
            f"corner costs are not ordered for ({region.value}, {tech.value}): "
            f"{lo}, {mid_total}, {hi}"
        )
    return ProjectionRange(lo=lo, mid=mid_total, hi=hi)
