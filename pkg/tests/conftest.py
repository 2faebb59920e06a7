import pytest

from it2ipa import default_scale, fixtures, lookup, parse_aggregated


@pytest.fixture(scope="session")
def scale():
    return default_scale()


@pytest.fixture(scope="session")
def terms(scale):
    """Scale values keyed by label for compact test arithmetic."""
    return {label: lookup(scale, label) for label in scale.labels}


@pytest.fixture()
def bundled_profiles():
    """The bundled aggregated dataset, keyed by factor id (fuzzy fields only).

    Function-scoped because pipeline stages fill profiles in place.
    """
    return {p.factor.id: p for p in parse_aggregated(fixtures.aggregated_path())}
