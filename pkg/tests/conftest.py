import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from cubepaths.campaign import random_instance  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def vertices(draw, n):
    return draw(st.integers(min_value=0, max_value=(1 << n) - 1))


@st.composite
def theorem_instances(draw, n_min=3, n_max=6):
    """Theorem-mode instances; the seed drives the campaign sampler so shrinking stays meaningful."""
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(1, n - 2))
    f = draw(st.integers(0, 2 * n - 2 * k - 3))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_instance(n, k, random.Random(seed), f)


@pytest.fixture
def tmp_json(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return make


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for text in mod.summary_lines():
        terminalreporter.write_line(text)
