"""Coincidence detection for doubly recurring fixed-duration schedules.

Two sequences of fixed-duration components repeat forever from a shared
origin.  This package decides whether a chosen component of each ever
shares a time unit, using a gcd slot grid that reduces the question to
one period of each sequence, cross-validated against brute-force
projection of a full joint cycle.
"""
from .intervals import (
    AuxEntry,
    CoincideError,
    Derived,
    DisjointIntervals,
    EmptyTimeMap,
    EqualIntervals,
    Interval,
    NonContiguous,
    NotMeeting,
    Relation,
    allen_relation,
    aux_intervals,
    common,
    cover,
    cover_star,
    holds,
)
from .recurrence import (
    BadHorizon,
    Component,
    ComponentLookupError,
    EmptySequence,
    IndexOutOfRange,
    NonPositiveDuration,
    SequenceSpec,
    component_window,
    cycle_duration,
    incidences_of,
    resolve_component,
    sequence,
    unroll,
    validate,
)
from .partition import BadGcd, GcdPartition, align_slot, build_gcd_partition, slot_interval
from .coincidence import (
    Decision,
    Network,
    NetworkEntry,
    NoOverlap,
    OpCounter,
    SLOT_SUB_COMPONENT,
    SlotFrameWindow,
    check_pair,
    create_network,
    decide,
    fired_theorems,
    first_coincidence,
    slot_frame_window,
)
from .oracle import OracleReport, enumerate_coincidences, oracle_decide

__version__ = "0.1.0"

__all__ = [
    "AuxEntry",
    "BadGcd",
    "BadHorizon",
    "CoincideError",
    "Component",
    "ComponentLookupError",
    "Decision",
    "Derived",
    "DisjointIntervals",
    "EmptySequence",
    "EmptyTimeMap",
    "EqualIntervals",
    "GcdPartition",
    "IndexOutOfRange",
    "Interval",
    "Network",
    "NetworkEntry",
    "NoOverlap",
    "NonContiguous",
    "NonPositiveDuration",
    "NotMeeting",
    "OpCounter",
    "OracleReport",
    "Relation",
    "SLOT_SUB_COMPONENT",
    "SequenceSpec",
    "SlotFrameWindow",
    "allen_relation",
    "align_slot",
    "aux_intervals",
    "build_gcd_partition",
    "check_pair",
    "common",
    "component_window",
    "cover",
    "cover_star",
    "create_network",
    "cycle_duration",
    "decide",
    "enumerate_coincidences",
    "fired_theorems",
    "first_coincidence",
    "holds",
    "incidences_of",
    "oracle_decide",
    "resolve_component",
    "sequence",
    "slot_frame_window",
    "slot_interval",
    "unroll",
    "validate",
]
