from __future__ import annotations

import math

import pytest
from hypothesis import given

from coincide import (
    BadGcd,
    IndexOutOfRange,
    Relation,
    build_gcd_partition,
    create_network,
    sequence,
)
from coincide.coincidence import SLOT_SUB_COMPONENT, NetworkEntry
from .conftest import sequence_pairs, sequence_specs
from .refimpl import cursor_network, network_from_period

DISJOINT_RELS = {Relation.BEFORE, Relation.AFTER, Relation.MEETS, Relation.MET_BY}


def test_weekday_network(weekday):
    net = create_network(weekday, 1, 2)
    assert net.entries == (NetworkEntry(2, Relation.EQUALS, 0, 0, 1),)
    assert net.flag is True


def test_machine_rest_network(machine):
    net = create_network(machine, 1, 1)
    assert [e.slot for e in net.entries] == [5, 6, 7]
    assert [e.rel for e in net.entries] == [
        Relation.STARTED_BY,
        Relation.CONTAINS,
        Relation.FINISHED_BY,
    ]
    assert net.flag is True


def test_production_line_network(pl1):
    net = create_network(pl1, 4, 0)
    assert net.entries == (NetworkEntry(0, Relation.STARTS, 0, 1, 3),)
    assert net.flag is False


def test_create_network_errors(machine):
    with pytest.raises(IndexOutOfRange):
        create_network(machine, 1, 2)
    with pytest.raises(BadGcd):
        create_network(machine, 3, 0)
    with pytest.raises(BadGcd):
        create_network(machine, 0, 0)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@given(sequence_specs(max_components=6, max_dur=10))
def test_matches_cursor_walk(spec):
    for g in _divisors(spec.total_dur):
        for p in range(spec.length):
            net = create_network(spec, g, p)
            entries, flag = cursor_network(spec, g, p)
            assert list(net.entries) == entries
            assert net.flag == flag


@given(sequence_specs(max_components=6, max_dur=10))
def test_matches_rebuild_from_any_period(spec):
    # entry data is identical no matter which period it is read from
    for g in _divisors(spec.total_dur):
        for p in range(spec.length):
            net = create_network(spec, g, p)
            for period in (0, 1, 2):
                entries, flag = network_from_period(spec, g, p, period)
                assert list(net.entries) == entries
                assert net.flag == flag


@given(sequence_pairs())
def test_entry_invariants(pair):
    x, y = pair
    part = build_gcd_partition(x, y)
    g = part.slot_dur
    for spec in (x, y):
        for p in range(spec.length):
            net = create_network(spec, g, p)
            d = spec.components[p].dur
            a = spec.offsets()[p]
            assert 1 <= len(net.entries) <= math.ceil(d / g) + 1
            assert [e.slot for e in net.entries] == list(
                range(a // g, (a + d - 1) // g + 1)
            )
            for e in net.entries:
                assert e.rel not in DISJOINT_RELS
                assert 0 <= e.left_gap < g
                assert 0 <= e.right_gap < g
                assert e.common_dur >= 1
            assert net.flag == any(e.rel in SLOT_SUB_COMPONENT for e in net.entries)


@given(sequence_pairs())
def test_no_flag_means_at_most_two_entries(pair):
    x, y = pair
    g = build_gcd_partition(x, y).slot_dur
    for spec in (x, y):
        for p in range(spec.length):
            net = create_network(spec, g, p)
            if not net.flag:
                assert len(net.entries) <= 2


def test_unit_grid_covers_every_slot_of_long_component():
    spec = sequence("s", 4, 9)
    net = create_network(spec, 1, 1)
    assert len(net.entries) == 9
    assert all(e.rel in SLOT_SUB_COMPONENT for e in net.entries[:])
    assert net.flag
