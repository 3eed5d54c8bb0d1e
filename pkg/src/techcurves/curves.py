"""Experience-curve mathematics.

A curve relates unit cost to cumulative deployed capacity through a power
law: cost falls by a fixed fraction (the learning rate) for every doubling
of cumulative capacity. Everything here is a pure function of an immutable
curve value, so the functions are safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CapacityRegression,
    NonPositiveCapacity,
    UnreachableTarget,
    ZeroLearning,
)


@dataclass(frozen=True)
class LearningCurve:
    """Wright's-law curve anchored at (initial_capacity, initial_cost).

    initial_cost is in currency per unit capacity (USD/kW or USD per
    tCO2/yr), initial_capacity in the matching capacity unit, and
    learning_rate is the fractional cost reduction per capacity doubling.
    """

    initial_cost: float
    initial_capacity: float
    learning_rate: float

    def __post_init__(self):
        if not self.initial_cost > 0:
            raise ValueError(f"initial_cost must be positive, got {self.initial_cost}")
        if not self.initial_capacity > 0:
            raise ValueError(
                f"initial_capacity must be positive, got {self.initial_capacity}"
            )
        if not 0 <= self.learning_rate < 1:
            raise ValueError(
                f"learning_rate must be in [0, 1), got {self.learning_rate}"
            )

    @property
    def exponent(self) -> float:
        """Power-law exponent log2(1 - learning_rate); zero iff no learning."""
        return math.log2(1.0 - self.learning_rate)


def project_cost(curve: LearningCurve, target_capacity: float) -> float:
    """Unit cost once cumulative capacity has grown to target_capacity."""
    if target_capacity <= 0:
        raise NonPositiveCapacity(f"target_capacity must be positive, got {target_capacity}")
    if target_capacity < curve.initial_capacity:
        raise CapacityRegression(
            f"target_capacity {target_capacity} is below the curve's starting "
            f"capacity {curve.initial_capacity}; the model is forward-only"
        )
    return curve.initial_cost * (target_capacity / curve.initial_capacity) ** curve.exponent


def capacity_for_cost(curve: LearningCurve, target_cost: float) -> float:
    """Cumulative capacity at which the curve reaches target_cost.

    Inverse of project_cost; only costs at or below the current level are
    meaningful, and a zero-learning curve never moves.
    """
    if target_cost <= 0 or target_cost > curve.initial_cost:
        raise UnreachableTarget(
            f"target_cost must be in (0, {curve.initial_cost}], got {target_cost}"
        )
    if curve.learning_rate == 0:
        if target_cost < curve.initial_cost:
            raise ZeroLearning(
                "curve has zero learning rate; no finite capacity reaches "
                f"a cost below {curve.initial_cost}"
            )
        return curve.initial_capacity
    return curve.initial_capacity * (target_cost / curve.initial_cost) ** (
        1.0 / curve.exponent
    )


def cumulative_investment(
    curve: LearningCurve, from_capacity: float, to_capacity: float
) -> float:
    """Capital outlay to build capacity from from_capacity up to to_capacity.

    Integrates the unit cost along the curve. The closed form has a
    removable singularity at exponent -1 (learning rate 50%), where the
    logarithmic form is used instead.
    """
    if from_capacity < curve.initial_capacity:
        raise CapacityRegression(
            f"from_capacity {from_capacity} is below the curve's starting "
            f"capacity {curve.initial_capacity}"
        )
    if to_capacity < from_capacity:
        raise CapacityRegression(
            f"to_capacity {to_capacity} is below from_capacity {from_capacity}"
        )
    b = curve.exponent
    c0, x0 = curve.initial_cost, curve.initial_capacity
    if b == -1.0:
        return c0 * x0 * math.log(to_capacity / from_capacity)
    return (
        c0
        * x0
        / (b + 1.0)
        * ((to_capacity / x0) ** (b + 1.0) - (from_capacity / x0) ** (b + 1.0))
    )


def doublings(curve: LearningCurve, target_capacity: float) -> float:
    """Number of cumulative-capacity doublings between the anchor and target."""
    if target_capacity <= 0:
        raise NonPositiveCapacity(f"target_capacity must be positive, got {target_capacity}")
    if target_capacity < curve.initial_capacity:
        raise CapacityRegression(
            f"target_capacity {target_capacity} is below the curve's starting "
            f"capacity {curve.initial_capacity}"
        )
    return math.log2(target_capacity / curve.initial_capacity)
