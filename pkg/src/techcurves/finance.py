"""Shared annualization inputs."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FinancialAssumptions:
    """Discounting and fixed-cost inputs used to annualize capital."""

    discount_rate: float
    lifetime_years: int
    fixed_om_fraction: float

    def __post_init__(self):
        if self.discount_rate < 0:
            raise ValueError(f"discount_rate must be >= 0, got {self.discount_rate}")
        if self.lifetime_years < 1:
            raise ValueError(f"lifetime_years must be >= 1, got {self.lifetime_years}")
        if self.fixed_om_fraction < 0:
            raise ValueError(
                f"fixed_om_fraction must be >= 0, got {self.fixed_om_fraction}"
            )

    @property
    def crf(self) -> float:
        """Capital recovery factor r(1+r)^n / ((1+r)^n - 1); 1/n at r = 0."""
        r, n = self.discount_rate, self.lifetime_years
        if r == 0:
            return 1.0 / n
        growth = (1.0 + r) ** n
        return r * growth / (growth - 1.0)

    @property
    def annual_capital_fraction(self) -> float:
        """CRF plus fixed O&M, as a fraction of CAPEX per year."""
        return self.crf + self.fixed_om_fraction
