import pytest

from proscons import (
    Argument,
    DecisionUniverse,
    ImportanceScale,
    Polarity,
    load_fixture,
)


def make_universe(num_levels, specs):
    """Universe from (name, "pro"|"con", level) triples on an anonymous scale."""
    scale = ImportanceScale(tuple(f"l{i}" for i in range(num_levels)))
    args = tuple(
        Argument(name, Polarity(polarity), level) for name, polarity, level in specs
    )
    return DecisionUniverse(scale, args)


@pytest.fixture(scope="session")
def luc():
    return load_fixture("luc")


@pytest.fixture(scope="session")
def lucy():
    return load_fixture("lucy")


@pytest.fixture(scope="session")
def luka():
    return load_fixture("luka")
