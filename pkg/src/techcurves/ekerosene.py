"""Synthetic kerosene from electrolytic hydrogen and captured CO2."""

from __future__ import annotations

from dataclasses import dataclass

LITERS_PER_GALLON = 3.785411784


@dataclass(frozen=True)
class EkAssumptions:
    """Stoichiometry and conversion-plant inputs per kg of fuel."""

    h2_intensity: float  # kg H2 per kg fuel
    co2_intensity: float  # kg CO2 per kg fuel
    synthesis_levelized: float  # USD per kg fuel, conversion plant capital + O&M
    synthesis_electricity: float  # kWh per kg fuel
    electricity_price: float  # USD/kWh
    fuel_density: float  # kg per liter
    subsidy: float = 0.0  # USD per gallon

    def __post_init__(self):
        if self.h2_intensity <= 0 or self.co2_intensity <= 0:
            raise ValueError("h2_intensity and co2_intensity must be positive")
        if not 0.7 < self.fuel_density <= 0.85:
            raise ValueError(
                f"fuel_density must be in (0.7, 0.85] kg/l, got {self.fuel_density}"
            )
        if self.subsidy < 0:
            raise ValueError(f"subsidy must be >= 0, got {self.subsidy}")


@dataclass(frozen=True)
class FlightAssumptions:
    """Route, aircraft efficiency and fuel-market inputs for one flight."""

    distance: float  # km
    fuel_burn: float  # liters per passenger-km
    blend: float  # e-kerosene fraction by volume
    fossil_price: float  # USD per gallon

    def __post_init__(self):
        if not 0 <= self.blend <= 1:
            raise ValueError(f"blend must be in [0, 1], got {self.blend}")
        if self.distance <= 0 or self.fuel_burn <= 0 or self.fossil_price <= 0:
            raise ValueError("distance, fuel_burn and fossil_price must be positive")


def lcoek(ek: EkAssumptions, h2_cost: float, co2_cost: float) -> float:
    """Levelized cost of e-kerosene, USD per gallon.

    h2_cost is USD/kg hydrogen; co2_cost is USD per tonne CO2. Feedstock,
    synthesis capital and synthesis electricity accrue per kg of fuel and
    convert to gallons through the fuel density; the subsidy comes off the
    per-gallon figure.
    """
    per_kg = (
        ek.h2_intensity * h2_cost
        + ek.co2_intensity * co2_cost / 1000.0
        + ek.synthesis_levelized
        + ek.synthesis_electricity * ek.electricity_price
    )
    return per_kg * ek.fuel_density * LITERS_PER_GALLON - ek.subsidy


def flight_premium(flight: FlightAssumptions, lcoek_value: float) -> float:
    """Added fuel cost per passenger from blending e-kerosene, USD.

    Linear in the blend share and in the price gap to fossil jet fuel; a
    negative gap yields a negative premium, returned as-is.
    """
    gallons_per_passenger = flight.distance * flight.fuel_burn / LITERS_PER_GALLON
    return flight.blend * (lcoek_value - flight.fossil_price) * gallons_per_passenger
