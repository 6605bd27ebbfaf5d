"""Deterministic scaling benchmark: slot-grid method vs cycle projection.

Instances are the worst case for projection: periods D and D - 1 are
coprime (slot size 1) and every component is a single unit, so the
projection examines D * (D - 1) incidence pairs while the grid method's
work stays proportional to D.  Operation counts, not wall-clock time,
are the metric; both are exactly reproducible.

Grid-method ops per query: cursor-walk steps of each network actually
built (components skipped + slots skipped + entries emitted) plus frame
pair checks on the verdict path.  Projection ops: incidence pairs
examined.  Queried components are the middle ones of each sequence.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .coincidence import OpCounter, decide
from .oracle import oracle_decide
from .recurrence import sequence


@dataclass(frozen=True)
class BenchRow:
    max_dur: int
    gcd_method_ops: int
    oracle_ops: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    gcd_slope: float | None
    oracle_slope: float | None

    def csv_lines(self) -> list[str]:
        lines = ["max_dur,gcd_method_ops,oracle_ops"]
        lines += [f"{r.max_dur},{r.gcd_method_ops},{r.oracle_ops}" for r in self.rows]
        return lines


def _loglog_slope(xs: list[int], ys: list[int]) -> float | None:
    if len(xs) < 2:
        return None
    fit = statistics.linear_regression([math.log2(v) for v in xs], [math.log2(v) for v in ys])
    return fit.slope


def run_bench(max_exponent: int) -> BenchReport:
    """Rows for D = 2^4 .. 2^max_exponent."""
    if max_exponent < 4:
        raise ValueError(f"max exponent must be >= 4, got {max_exponent}")
    rows = []
    for j in range(4, max_exponent + 1):
        big_d = 2**j
        x = sequence("x", *([1] * big_d))
        y = sequence("y", *([1] * (big_d - 1)))
        p = big_d // 2
        q = (big_d - 1) // 2
        ops = OpCounter()
        decide(x, y, p, q, ops=ops)
        oracle_ops = oracle_decide(x, y, p, q).comparisons
        rows.append(BenchRow(big_d, ops.steps, oracle_ops))
    durs = [r.max_dur for r in rows]
    return BenchReport(
        tuple(rows),
        _loglog_slope(durs, [r.gcd_method_ops for r in rows]),
        _loglog_slope(durs, [r.oracle_ops for r in rows]),
    )
