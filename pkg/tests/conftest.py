import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "compedge",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    print_blob=True,
)
settings.load_profile("compedge")


@pytest.fixture(scope="session")
def edged_census():
    """All labeled graphs with at least one edge, per vertex count 3..5."""
    from compedge.graphs import enumerate_labeled_graphs

    return {
        n: [g for g in enumerate_labeled_graphs(n) if g.edges] for n in (3, 4, 5)
    }
