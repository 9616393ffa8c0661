import functools
from collections import Counter

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from topgen_oracle import load_catalog
from topgen_oracle.pcond import REPRESENTATIVE_PRIMES

settings.register_profile("suite", max_examples=10_000, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow,
                                                 HealthCheck.data_too_large])
settings.load_profile("suite")

CAT = load_catalog()
GROUPS = ("G2", "F4", "E6", "E7", "E8")


@pytest.fixture(scope="session")
def cat():
    return CAT


@st.composite
def order_p_tuples(draw, sizes=(2, 3, 4), groups=GROUPS):
    """(group, p, labels) with every class of order p and (t, p) != (2, 2)."""
    g = draw(st.sampled_from(groups))
    t = draw(st.sampled_from(sizes))
    primes = [p for p in REPRESENTATIVE_PRIMES if not (t == 2 and p == 2)]
    p = draw(st.sampled_from(primes))
    classes = CAT.order_p_classes(g, p)
    # bias towards small classes, where the Empty tuples live
    idx = st.integers(0, len(classes) - 1) | st.integers(0, min(4, len(classes) - 1))
    labels = [classes[draw(idx)] for _ in range(t)]
    return g, p, labels


# -- bookkeeping for the acceptance report -------------------------------------------------------

EXAMPLES = Counter()  # property test name -> examples executed this session
OUTCOMES = {}  # test function name -> "passed" / "failed" (all parametrizations merged)


def counted(fn):
    """Count the examples hypothesis feeds to a property test (place below @given)."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        EXAMPLES[fn.__name__] += 1
        return fn(*args, **kwargs)
    return wrapper


def pytest_runtest_logreport(report):
    if report.when == "call" or report.outcome == "failed":
        name = report.nodeid.split("::")[-1].split("[")[0]
        if OUTCOMES.get(name) != "failed":
            OUTCOMES[name] = report.outcome


def pytest_collection_modifyitems(items):
    # the property-suite criterion reads the results of the other files, so it runs last
    last = [i for i in items if i.name == "test_criterion_7_property_suites"]
    items[:] = [i for i in items if i not in last] + last
