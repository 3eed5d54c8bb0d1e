"""Experience-curve cost projections for electrolysis, DAC and e-kerosene."""

__version__ = "0.1.0"

from .curves import (  # noqa: E402
    LearningCurve,
    capacity_for_cost,
    cumulative_investment,
    doublings,
    project_cost,
)
from .errors import (  # noqa: E402
    CapacityRegression,
    InvalidRange,
    ModelError,
    NegativeGrowth,
    NonPositiveCapacity,
    NonPositiveRemoval,
    ParseError,
    ScenarioError,
    UnreachableTarget,
    ValidationError,
    ZeroLearning,
    ZeroUtilization,
)
from .finance import FinancialAssumptions  # noqa: E402
from .ranges import ProjectionRange  # noqa: E402
from .electrolysis import (  # noqa: E402
    CostBreakdown,
    ElectrolyzerCostModel,
    Region,
    StackTechnology,
    current_capital_cost,
    decline_fraction,
    envelope,
    project_capital_cost,
    stack_capacity_at_horizon,
)
from .hydrogen import (  # noqa: E402
    HydrogenPlantAssumptions,
    capital_contribution,
    lcoh,
    required_electricity_price,
    with_electricity_price,
)
from .dac import (  # noqa: E402
    DacCostModel,
    LeakageSpec,
    TargetResult,
    capture_cost,
    net_removal_cost,
    net_removal_fraction,
    target_analysis,
    target_sweep,
)
from .ekerosene import (  # noqa: E402
    EkAssumptions,
    FlightAssumptions,
    flight_premium,
    lcoek,
)
from .scenario import (  # noqa: E402
    Scenario,
    bundled_scenarios,
    export,
    load_bundled,
    load_scenario,
    parse_scenario,
    results_to_json,
    run_full_projection,
)

__all__ = [
    "__version__",
    "LearningCurve", "project_cost", "capacity_for_cost",
    "cumulative_investment", "doublings",
    "FinancialAssumptions", "ProjectionRange",
    "ModelError", "NonPositiveCapacity", "CapacityRegression",
    "UnreachableTarget", "ZeroLearning", "NegativeGrowth", "InvalidRange",
    "ZeroUtilization", "NonPositiveRemoval",
    "ScenarioError", "ParseError", "ValidationError",
    "StackTechnology", "Region", "CostBreakdown", "ElectrolyzerCostModel",
    "stack_capacity_at_horizon", "current_capital_cost",
    "project_capital_cost", "decline_fraction", "envelope",
    "HydrogenPlantAssumptions", "capital_contribution", "lcoh",
    "required_electricity_price", "with_electricity_price",
    "DacCostModel", "LeakageSpec", "TargetResult", "capture_cost",
    "net_removal_fraction", "net_removal_cost", "target_analysis",
    "target_sweep",
    "EkAssumptions", "FlightAssumptions", "lcoek", "flight_premium",
    "Scenario", "parse_scenario", "load_scenario", "bundled_scenarios",
    "load_bundled", "run_full_projection", "results_to_json", "export",
]
