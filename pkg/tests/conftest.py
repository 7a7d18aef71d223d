import pytest

from covertcast import Point2, Scenario, SystemParams


@pytest.fixture(scope="session")
def params() -> SystemParams:
    return SystemParams()


@pytest.fixture(scope="session")
def single_gu_scenario() -> Scenario:
    """One user at the origin, warden 600 m east: the worked reference case."""
    return Scenario(
        gus=(Point2(0.0, 0.0),),
        willie=Point2(600.0, 0.0),
        altitude_m=500.0,
        area_radius_m=500.0,
    )
