"""Coincidence decision via per-period slot networks.

For a component p of sequence x, the network records how p's window sits
on the slot grid within one period: which slots it positively overlaps,
the basic relation to each, and the gap/common durations.  Those numbers
are identical in every period, so one network per side plus the residue
alignment of the grid decides whether the two components ever share a
unit anywhere in the joint cycle.

The closed-form test: pin both component windows to the frame of one
shared slot (origin at the slot's start) and intersect them.  A battery
of qualitative sufficient conditions over the same network data is kept
alongside as an independently tested predicate set; it is not the
production decision path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intervals import CoincideError, Interval, Relation, allen_relation
from .partition import GcdPartition, BadGcd, align_slot, build_gcd_partition
from .recurrence import SequenceSpec, _check_index, validate

# Relations meaning the slot lies fully inside the component window.  Any
# such entry guarantees a coincidence against every component of the other
# sequence: the other component overlaps some slot, and that slot aligns
# with this one somewhere in the cycle.
SLOT_SUB_COMPONENT = frozenset(
    {Relation.EQUALS, Relation.STARTED_BY, Relation.FINISHED_BY, Relation.CONTAINS}
)


@dataclass
class OpCounter:
    """Deterministic primitive-operation tally for benchmarking."""

    steps: int = 0

    def add(self, n: int) -> None:
        self.steps += n


@dataclass(frozen=True)
class NetworkEntry:
    """One slot positively overlapped by a component window.

    slot:       period-local slot index.
    rel:        relation of the component window to the slot window
                (component as first argument); never a disjoint relation.
    left_gap:   units of the slot left of the component start (0 if the
                component starts at or before the slot).
    right_gap:  units of the slot right of the component end.
    common_dur: units shared by component and slot (always >= 1).
    """

    slot: int
    rel: Relation
    left_gap: int
    right_gap: int
    common_dur: int


@dataclass(frozen=True)
class Network:
    """All slot entries of one component within a period.

    ``flag`` is True when some slot lies fully inside the component
    window, which already settles every coincidence query against this
    component in the affirmative.
    """

    component: int
    entries: tuple[NetworkEntry, ...]
    flag: bool


class NoOverlap(CoincideError):
    """The window does not positively overlap the requested slot."""


def create_network(
    spec: SequenceSpec, g: int, p: int, ops: OpCounter | None = None
) -> Network:
    """Build the slot network of component ``p`` on a grid of ``g``-unit slots.

    Entries cover exactly the slots ``a // g .. (a + d - 1) // g`` where
    ``[a, a + d)`` is the component window; only those overlap it by at
    least one unit.  When ``ops`` is given it is charged the cursor-walk
    cost: one step per component skipped, per slot skipped, and per entry
    emitted.
    """
    validate(spec)
    _check_index(spec, p)
    if g < 1 or spec.total_dur % g != 0:
        raise BadGcd(f"slot duration {g} does not divide period {spec.total_dur}")
    a = spec.offsets()[p]
    d = spec.components[p].dur
    first = a // g
    last = (a + d - 1) // g
    if ops is not None:
        ops.add(p + first + (last - first + 1))
    entries = []
    for r in range(first, last + 1):
        slot = Interval(r * g, g)
        rel = allen_relation(Interval(a, d), slot)
        left_gap = max(0, a - slot.start)
        right_gap = max(0, slot.end - (a + d))
        common_dur = min(a + d, slot.end) - max(a, slot.start)
        entries.append(NetworkEntry(r, rel, left_gap, right_gap, common_dur))
    flag = any(e.rel in SLOT_SUB_COMPONENT for e in entries)
    return Network(p, tuple(entries), flag)


@dataclass(frozen=True)
class SlotFrameWindow:
    """A component window re-based to a slot's start.

    ``lo`` may be negative (the window begins before the slot) and ``hi``
    may exceed the slot duration; the window always covers at least one
    unit of ``[0, g)``.
    """

    lo: int
    hi: int


def slot_frame_window(a: int, d: int, r: int, g: int) -> SlotFrameWindow:
    """Express the window ``[a, a + d)`` in the frame of slot ``r``."""
    if not (a < (r + 1) * g and a + d > r * g):
        raise NoOverlap(f"window [{a}, {a + d}) does not overlap slot {r} of size {g}")
    return SlotFrameWindow(a - r * g, a + d - r * g)


def check_pair(wx: SlotFrameWindow, wy: SlotFrameWindow) -> bool:
    """True when the two frame windows share at least one unit.

    Both windows are pinned to the same slot frame, which some cycle slot
    realizes for every residue pair, so a positive answer here is a
    positive answer for the whole cycle.
    """
    return max(wx.lo, wy.lo) < min(wx.hi, wy.hi)


def fired_theorems(
    ex: NetworkEntry, dx: int, ey: NetworkEntry, dy: int, g: int
) -> set[str]:
    """Identifiers of the sufficient-condition rules the entry pair satisfies.

    Each rule reads only the entry fields plus the component durations
    and slot size, and each is sound: if any fires, the frame windows of
    the two entries overlap.  The set is not exhaustive; overlapping
    pairs that fire nothing are possible and are surfaced by the
    verification harness as a census, not a failure.

    Base rules T6.1-T6.9 take the x-side entry first; C6.1-C6.6 are the
    same conditions with the two sides exchanged.
    """
    rx, ry = ex.rel, ey.rel
    fired: set[str] = set()
    ov, ovb = Relation.OVERLAPS, Relation.OVERLAPPED_BY
    st, fin, dur = Relation.STARTS, Relation.FINISHES, Relation.DURING

    # A slot fully inside either component overlaps the other side's
    # entry window no matter what.
    if rx in SLOT_SUB_COMPONENT or ry in SLOT_SUB_COMPONENT:
        fired.add("T6.9")

    # Both windows hang over the same slot edge: an overlap at that edge
    # is forced.  Start-edge family {starts, overlaps}, end-edge family
    # {finishes, overlapped-by}.
    if (rx is ov and ry in (st, ov)) or (rx is ovb and ry in (fin, ovb)):
        fired.add("T6.1")
    if (ry is ov and rx in (st, ov)) or (ry is ovb and rx in (fin, ovb)):
        fired.add("C6.1")

    # Opposite edges, but together the windows are longer than the slot.
    if rx is fin and ry is st and dx + dy > g:
        fired.add("T6.2")
    if ry is fin and rx is st and dx + dy > g:
        fired.add("C6.2")

    # One window starts the slot, the other floats inside it but starts
    # before the first one ends.
    if rx is st and ry is dur and ey.left_gap < dx:
        fired.add("T6.3")
    if ry is st and rx is dur and ex.left_gap < dy:
        fired.add("C6.3")

    # Mirror image at the slot's end.
    if rx is fin and ry is dur and ey.right_gap < dx:
        fired.add("T6.4")
    if ry is fin and rx is dur and ex.right_gap < dy:
        fired.add("C6.4")

    # One window overhangs the slot start, the other floats inside and
    # begins before the overhanging part runs out.
    if rx is ov and ry is dur and ey.left_gap < ex.common_dur:
        fired.add("T6.5")
    if ry is ov and rx is dur and ex.left_gap < ey.common_dur:
        fired.add("C6.5")

    # Overhang at the slot end instead.
    if rx is ovb and ry is dur and ey.right_gap < ex.common_dur:
        fired.add("T6.6")
    if ry is ovb and rx is dur and ex.right_gap < ey.common_dur:
        fired.add("C6.6")

    # Same anchor on both sides: both start the slot or both finish it.
    if (rx is st and ry is st) or (rx is fin and ry is fin):
        fired.add("T6.7")

    # Both float inside the slot; their lead gaps are staggered by less
    # than the other window's length.
    if rx is dur and ry is dur:
        jj, kk = ex.left_gap, ey.left_gap
        if (kk <= jj < kk + dy) or (jj <= kk < jj + dx):
            fired.add("T6.8")

    return fired


@dataclass(frozen=True)
class Decision:
    """Outcome of a coincidence query.

    ``witness`` is one maximal shared window in absolute cycle
    coordinates, present only when ``coincides``.  ``via`` is the
    period-local slot pair ``(r, s)`` whose alignment produces it.
    """

    coincides: bool
    witness: Interval | None = None
    via: tuple[int, int] | None = None


def _frames(
    spec: SequenceSpec, p: int, net: Network, g: int
) -> list[SlotFrameWindow]:
    a = spec.offsets()[p]
    d = spec.components[p].dur
    return [slot_frame_window(a, d, e.slot, g) for e in net.entries]


def _scan_witness(
    part: GcdPartition,
    nx: Network,
    frames_x: list[SlotFrameWindow],
    ny: Network,
    frames_y: list[SlotFrameWindow],
) -> Decision:
    g = part.slot_dur
    for ex, wx in zip(nx.entries, frames_x):
        for ey, wy in zip(ny.entries, frames_y):
            if check_pair(wx, wy):
                k = align_slot(part, ex.slot, ey.slot)
                start = k * g + max(wx.lo, wy.lo)
                end = k * g + min(wx.hi, wy.hi)
                return Decision(True, Interval.from_endpoints(start, end), (ex.slot, ey.slot))
    raise AssertionError("verdict was positive but no entry pair overlaps")


def decide(
    x: SequenceSpec, y: SequenceSpec, p: int, q: int, ops: OpCounter | None = None
) -> Decision:
    """Decide whether components ``x[p]`` and ``y[q]`` ever share a unit.

    Verdict evaluation order: build the y-side network and accept on its
    flag; otherwise build the x-side network and accept on its flag;
    otherwise test every entry pair in the shared slot frame.  Without a
    flag each network has at most two entries, so the pair scan is
    constant-size.  When the verdict is positive the witness is taken
    from the first overlapping entry pair in scan order (x entries outer,
    y entries inner), regardless of which path produced the verdict.

    ``ops`` (when given) is charged the verdict-path work only.
    """
    validate(x)
    validate(y)
    _check_index(x, p)
    _check_index(y, q)
    part = build_gcd_partition(x, y)
    g = part.slot_dur

    ny = create_network(y, g, q, ops=ops)
    nx: Network | None = None
    if ny.flag:
        coincides = True
    else:
        nx = create_network(x, g, p, ops=ops)
        if nx.flag:
            coincides = True
        else:
            frames_x = _frames(x, p, nx, g)
            frames_y = _frames(y, q, ny, g)
            coincides = False
            for wx in frames_x:
                for wy in frames_y:
                    if ops is not None:
                        ops.add(1)
                    if check_pair(wx, wy):
                        coincides = True
                        break
                if coincides:
                    break
    if not coincides:
        return Decision(False)
    if nx is None:
        nx = create_network(x, g, p)
    return _scan_witness(part, nx, _frames(x, p, nx, g), ny, _frames(y, q, ny, g))


def first_coincidence(x: SequenceSpec, y: SequenceSpec, p: int, q: int) -> Interval | None:
    """Earliest maximal shared window of ``x[p]`` and ``y[q]`` in the cycle.

    Every overlapping entry pair is mapped through the slot alignment;
    distinct pairs can land on the same window, so results are
    deduplicated before taking the minimum start.  Returns None when the
    components never coincide.
    """
    validate(x)
    validate(y)
    _check_index(x, p)
    _check_index(y, q)
    part = build_gcd_partition(x, y)
    g = part.slot_dur
    nx = create_network(x, g, p)
    ny = create_network(y, g, q)
    frames_x = _frames(x, p, nx, g)
    frames_y = _frames(y, q, ny, g)
    windows: set[Interval] = set()
    for ex, wx in zip(nx.entries, frames_x):
        for ey, wy in zip(ny.entries, frames_y):
            if check_pair(wx, wy):
                k = align_slot(part, ex.slot, ey.slot)
                windows.add(
                    Interval.from_endpoints(
                        k * g + max(wx.lo, wy.lo), k * g + min(wx.hi, wy.hi)
                    )
                )
    if not windows:
        return None
    return min(windows, key=lambda w: w.start)
