import pytest
from hypothesis import given
from hypothesis import strategies as st

from techcurves import EkAssumptions, FlightAssumptions, flight_premium, lcoek
from techcurves.ekerosene import LITERS_PER_GALLON


def make_ek(subsidy=0.0, density=0.8, h2i=0.473, co2i=3.432):
    return EkAssumptions(
        h2_intensity=h2i,
        co2_intensity=co2i,
        synthesis_levelized=0.55,
        synthesis_electricity=0.8,
        electricity_price=0.05,
        fuel_density=density,
        subsidy=subsidy,
    )


def test_unit_conversion_oracle():
    # only synthesis cost set: 1 USD/kg * 0.8 kg/l * 3.78541 l/gal
    ek = EkAssumptions(
        h2_intensity=1e-12,
        co2_intensity=1e-12,
        synthesis_levelized=1.0,
        synthesis_electricity=0.0,
        electricity_price=0.0,
        fuel_density=0.8,
    )
    assert lcoek(ek, 0.0, 0.0) == pytest.approx(3.028, abs=1e-3)


def test_subsidy_exact_shift():
    base = lcoek(make_ek(), 5.0, 400.0)
    subsidized = lcoek(make_ek(subsidy=1.25), 5.0, 400.0)
    assert base - subsidized == pytest.approx(1.25)


@given(h1=st.floats(0.0, 20.0), h2=st.floats(0.0, 20.0), co2=st.floats(0.0, 1000.0))
def test_affine_in_h2_cost(h1, h2, co2):
    # exact finite difference against the stated slope
    if abs(h2 - h1) < 1e-6:
        return
    ek = make_ek()
    slope = (lcoek(ek, h2, co2) - lcoek(ek, h1, co2)) / (h2 - h1)
    assert slope == pytest.approx(
        ek.h2_intensity * ek.fuel_density * LITERS_PER_GALLON, rel=1e-9
    )


@given(c1=st.floats(0.0, 1000.0), c2=st.floats(0.0, 1000.0), h2=st.floats(0.0, 20.0))
def test_affine_in_co2_cost(c1, c2, h2):
    if abs(c2 - c1) < 1e-6:
        return
    ek = make_ek()
    slope = (lcoek(ek, h2, c2) - lcoek(ek, h2, c1)) / (c2 - c1)
    assert slope == pytest.approx(
        ek.co2_intensity * ek.fuel_density * LITERS_PER_GALLON / 1000.0, rel=1e-9
    )


def make_flight(blend=0.05, burn=0.032, fossil=2.0):
    return FlightAssumptions(distance=5570.0, fuel_burn=burn, blend=blend, fossil_price=fossil)


def test_zero_blend():
    assert flight_premium(make_flight(blend=0.0), 12.0) == 0.0


def test_doubling_blend_doubles_premium():
    p1 = flight_premium(make_flight(blend=0.05), 12.0)
    p2 = flight_premium(make_flight(blend=0.10), 12.0)
    assert p2 == pytest.approx(2.0 * p1)


def test_premium_hand_oracle():
    flight = make_flight()
    gallons = 5570.0 * 0.032 / LITERS_PER_GALLON
    assert flight_premium(flight, 12.0) == pytest.approx(0.05 * 10.0 * gallons)


def test_negative_premium_passes_through():
    assert flight_premium(make_flight(fossil=3.0), 2.0) < 0.0


@given(
    lc1=st.floats(0.0, 30.0),
    lc2=st.floats(0.0, 30.0),
)
def test_premium_linear_in_price_gap(lc1, lc2):
    if abs(lc2 - lc1) < 1e-6:
        return
    flight = make_flight()
    slope = (flight_premium(flight, lc2) - flight_premium(flight, lc1)) / (lc2 - lc1)
    gallons = flight.distance * flight.fuel_burn / LITERS_PER_GALLON
    assert slope == pytest.approx(flight.blend * gallons, rel=1e-9)


def test_validation():
    with pytest.raises(ValueError):
        make_ek(density=0.9)
    with pytest.raises(ValueError):
        make_ek(subsidy=-1.0)
    with pytest.raises(ValueError):
        make_ek(h2i=0.0)
    with pytest.raises(ValueError):
        FlightAssumptions(distance=5570.0, fuel_burn=0.03, blend=1.5, fossil_price=2.0)
