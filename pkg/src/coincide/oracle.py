"""Brute-force cycle projection, the ground truth for every decision.

Project both components' incidence windows over one joint cycle and
intersect them pairwise.  One cycle suffices: every cycle repeats the
same relative layout.  The reported ``comparisons`` figure is the cost
of the projection, the number of incidence pairs examined, which is
quadratic in the periods when their gcd is 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coincidence import Decision
from .intervals import Interval
from .recurrence import SequenceSpec, _check_index, cycle_duration, incidences_of, validate


@dataclass(frozen=True)
class OracleReport:
    """Full projection outcome.

    ``windows`` holds every maximal shared window in the cycle,
    ascending and pairwise non-overlapping; ``comparisons`` counts the
    incidence pairs a straight double loop examines.
    """

    decision: Decision
    windows: tuple[Interval, ...]
    comparisons: int


def _intersections(xs: list[Interval], ys: list[Interval]) -> tuple[Interval, ...]:
    # Both lists are sorted and internally non-overlapping, so a two-pointer
    # sweep visits every intersecting pair once, in ascending order.
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        s = max(xs[i].start, ys[j].start)
        e = min(xs[i].end, ys[j].end)
        if s < e:
            out.append(Interval.from_endpoints(s, e))
        if xs[i].end <= ys[j].end:
            i += 1
        else:
            j += 1
    return tuple(out)


def oracle_decide(x: SequenceSpec, y: SequenceSpec, p: int, q: int) -> OracleReport:
    """Decide by projecting one full cycle; the quadratic baseline."""
    validate(x)
    validate(y)
    _check_index(x, p)
    _check_index(y, q)
    cycle = cycle_duration(x, y)
    xs = incidences_of(x, p, cycle)
    ys = incidences_of(y, q, cycle)
    windows = _intersections(xs, ys)
    witness = windows[0] if windows else None
    return OracleReport(Decision(bool(windows), witness), windows, len(xs) * len(ys))


def enumerate_coincidences(
    x: SequenceSpec, y: SequenceSpec, p: int, q: int
) -> tuple[Interval, ...]:
    """All maximal shared windows of ``x[p]`` and ``y[q]`` in one cycle."""
    return oracle_decide(x, y, p, q).windows
