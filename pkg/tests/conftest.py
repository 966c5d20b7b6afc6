import random

import pytest
from hypothesis import strategies as st

from copartial import delay_by, never


@st.composite
def finite_delays(draw, max_value=50, max_steps=16):
    a = draw(st.integers(min_value=0, max_value=max_value))
    k = draw(st.integers(min_value=0, max_value=max_steps))
    return delay_by(a, k)


def sample_finite(rng: random.Random, max_value=50, max_steps=16):
    return delay_by(rng.randrange(max_value), rng.randrange(max_steps + 1))


def sample_delay(rng: random.Random, never_rate=0.1, max_value=50, max_steps=16):
    if rng.random() < never_rate:
        return never()
    return sample_finite(rng, max_value, max_steps)


@pytest.fixture
def rng():
    return random.Random(20260823)
