from __future__ import annotations

import pytest
from hypothesis import strategies as st

from coincide import Component, Interval, SequenceSpec, sequence


def intervals(max_start: int = 32, max_dur: int = 32):
    return st.builds(
        Interval,
        start=st.integers(min_value=0, max_value=max_start),
        dur=st.integers(min_value=1, max_value=max_dur),
    )


def sequence_specs(name: str = "s", max_components: int = 8, max_dur: int = 16):
    comps = st.lists(
        st.integers(min_value=1, max_value=max_dur),
        min_size=1,
        max_size=max_components,
    )
    return comps.map(
        lambda durs: SequenceSpec(name, tuple(Component(f"c{i}", d) for i, d in enumerate(durs)))
    )


def sequence_pairs(max_components: int = 8, max_dur: int = 16):
    return st.tuples(
        sequence_specs("x", max_components, max_dur),
        sequence_specs("y", max_components, max_dur),
    )


@pytest.fixture
def weekday() -> SequenceSpec:
    return sequence(
        "weekday",
        *([1] * 7),
        component_names=["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"],
    )


@pytest.fixture
def machine() -> SequenceSpec:
    return sequence("machine", 5, 3, component_names=["Working", "Rest"])


@pytest.fixture
def machine_short_rest() -> SequenceSpec:
    return sequence("machine", 5, 2, component_names=["Working", "Rest"])


@pytest.fixture
def pl1() -> SequenceSpec:
    return sequence("PL-1", 3, 3, 2, component_names=["P1", "P2", "P3"])


@pytest.fixture
def pl2() -> SequenceSpec:
    return sequence("PL-2", 2, 2, component_names=["P4", "P5"])
