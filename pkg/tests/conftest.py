import pytest

from g2tcs.catalog import load_catalog
from g2tcs.configuration import make_configuration
from g2tcs.fixtures import EXAMPLES
from g2tcs.invariants import full_report


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def example_configs(catalog):
    """name -> (Configuration, expected tuple) for every worked example."""
    out = {}
    for name, (plus, minus, theta, rows, expected) in EXAMPLES.items():
        cfg = make_configuration(catalog.get(plus), catalog.get(minus),
                                 theta, [list(r) for r in rows])
        out[name] = (cfg, expected)
    return out


@pytest.fixture(scope="session")
def example_reports(example_configs):
    """name -> (InvariantReport, expected tuple); computed once per session."""
    return {name: (full_report(cfg), expected)
            for name, (cfg, expected) in example_configs.items()}
