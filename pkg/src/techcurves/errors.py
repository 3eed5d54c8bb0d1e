"""Exception hierarchy shared by all model modules."""


class ModelError(ValueError):
    """Base class for domain errors raised by the cost models."""


class NonPositiveCapacity(ModelError):
    """A capacity argument was zero or negative."""


class CapacityRegression(ModelError):
    """Requested capacity below the curve's starting point; curves are forward-only."""


class UnreachableTarget(ModelError):
    """No amount of deployment can reach the requested cost target."""


class ZeroLearning(ModelError):
    """A cost below the current level was requested on a zero-learning curve."""


class NegativeGrowth(ModelError):
    """Horizon deployment is below current cumulative capacity."""


class InvalidRange(ModelError):
    """A lo/mid/hi bound triple is not ordered."""


class ZeroUtilization(ModelError):
    """Plant utilization of zero makes levelized cost undefined."""


class NonPositiveRemoval(ModelError):
    """Fugitive emissions cancel all captured CO2; a removal cost is undefined."""


class ScenarioError(ValueError):
    """Base class for scenario-file problems."""


class ParseError(ScenarioError):
    """The scenario document is not well-formed."""


class ValidationError(ScenarioError):
    """The scenario document violates the schema or a model invariant."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
