"""Command-line interface.

Subcommands: check, witness, enumerate, partition, network, verify, bench.
Exit status is 0 whenever the command ran to completion (a negative
verdict is still 0) and 2 on any input or usage error; verdicts live in
the output document, never in the exit code.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bench import run_bench
from .coincidence import create_network, decide, fired_theorems, first_coincidence
from .intervals import CoincideError, Interval
from .oracle import oracle_decide
from .partition import build_gcd_partition
from .recurrence import Component, SequenceSpec, cycle_duration, resolve_component, validate
from .verify import run_verification


def _parse_sequence(obj, which: str) -> SequenceSpec:
    if not isinstance(obj, dict):
        raise ValueError(f"{which!r} must be an object with 'name' and 'components'")
    comps = obj.get("components")
    if not isinstance(comps, list):
        raise ValueError(f"{which}.components must be a list")
    parsed = []
    for idx, c in enumerate(comps):
        if not isinstance(c, dict) or "dur" not in c:
            raise ValueError(f"{which}.components[{idx}] must be an object with 'dur'")
        dur = c["dur"]
        if not isinstance(dur, int) or isinstance(dur, bool):
            raise ValueError(f"{which}.components[{idx}].dur must be an integer")
        parsed.append(Component(str(c.get("name", f"c{idx}")), dur))
    return validate(SequenceSpec(str(obj.get("name", which)), tuple(parsed)))


def _load_document(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("input document must be a JSON object")
    return doc


def _component_key(raw) -> int | str:
    # Flag values arrive as strings; digits mean an index, anything else a name.
    if isinstance(raw, str) and (raw.isdigit() or (raw.startswith("-") and raw[1:].isdigit())):
        return int(raw)
    return raw


def _load_query(args) -> tuple[SequenceSpec, SequenceSpec, int, int, str | None]:
    doc = _load_document(args.input)
    x = _parse_sequence(doc.get("x"), "x")
    y = _parse_sequence(doc.get("y"), "y")
    p_key = _component_key(args.p if args.p is not None else doc.get("p"))
    q_key = _component_key(args.q if args.q is not None else doc.get("q"))
    if p_key is None or q_key is None:
        raise ValueError("both 'p' and 'q' must be given (document field or flag)")
    p = resolve_component(x, p_key)
    q = resolve_component(y, q_key)
    return x, y, p, q, doc.get("unit")


def _interval_obj(iv: Interval) -> dict:
    return {"start": iv.start, "end": iv.end}


def _emit(args, doc: dict, unit: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
        return
    for key, value in doc.items():
        if value is None:
            print(f"{key}: none")
        elif key in ("witness",) and isinstance(value, dict):
            print(f"{key}: [{value['start']}, {value['end']})")
        elif key == "windows":
            spans = " ".join(f"[{w['start']}, {w['end']})" for w in value)
            print(f"{key}: {spans if spans else '(none)'}")
        elif key == "partition":
            print(f"{key}: g={value['g']} R={value['R']} S={value['S']}")
        elif key == "cycle" and unit:
            print(f"{key}: {value} {unit}")
        elif key == "fired":
            print(f"{key}: {' '.join(value) if value else '(none)'}")
        elif isinstance(value, str):
            print(f"{key}: {value}")
        else:
            print(f"{key}: {json.dumps(value)}")


def _partition_obj(x: SequenceSpec, y: SequenceSpec) -> dict:
    part = build_gcd_partition(x, y)
    return {"g": part.slot_dur, "R": part.slots_x, "S": part.slots_y}


def _fired_for(x, y, p, q, via) -> list[str]:
    part = build_gcd_partition(x, y)
    g = part.slot_dur
    ex = next(e for e in create_network(x, g, p).entries if e.slot == via[0])
    ey = next(e for e in create_network(y, g, q).entries if e.slot == via[1])
    return sorted(fired_theorems(ex, x.components[p].dur, ey, y.components[q].dur, g))


def cmd_check(args) -> int:
    x, y, p, q, unit = _load_query(args)
    d = decide(x, y, p, q)
    doc = {
        "coincides": d.coincides,
        "witness": _interval_obj(d.witness) if d.witness else None,
        "partition": _partition_obj(x, y),
        "cycle": cycle_duration(x, y),
        "method": "gcd-partition",
        "fired": _fired_for(x, y, p, q, d.via) if d.via else [],
    }
    _emit(args, doc, unit)
    return 0


def cmd_witness(args) -> int:
    x, y, p, q, unit = _load_query(args)
    w = first_coincidence(x, y, p, q)
    doc = {
        "coincides": w is not None,
        "witness": _interval_obj(w) if w else None,
        "partition": _partition_obj(x, y),
        "cycle": cycle_duration(x, y),
        "method": "gcd-partition",
    }
    _emit(args, doc, unit)
    return 0


def cmd_enumerate(args) -> int:
    x, y, p, q, unit = _load_query(args)
    rep = oracle_decide(x, y, p, q)
    doc = {
        "coincides": rep.decision.coincides,
        "witness": _interval_obj(rep.decision.witness) if rep.decision.witness else None,
        "windows": [_interval_obj(w) for w in rep.windows],
        "partition": _partition_obj(x, y),
        "cycle": cycle_duration(x, y),
        "method": "oracle",
        "comparisons": rep.comparisons,
    }
    _emit(args, doc, unit)
    return 0


def cmd_partition(args) -> int:
    doc = _load_document(args.input)
    x = _parse_sequence(doc.get("x"), "x")
    y = _parse_sequence(doc.get("y"), "y")
    out = {"partition": _partition_obj(x, y), "cycle": cycle_duration(x, y)}
    _emit(args, out, doc.get("unit"))
    return 0


def cmd_network(args) -> int:
    doc = _load_document(args.input)
    x = _parse_sequence(doc.get("x"), "x")
    y = _parse_sequence(doc.get("y"), "y")
    spec = x if args.side == "x" else y
    part = build_gcd_partition(x, y)
    net = create_network(spec, part.slot_dur, args.index)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "sequence": spec.name,
                    "component": net.component,
                    "g": part.slot_dur,
                    "entries": [
                        {
                            "slot": e.slot,
                            "rel": e.rel.value,
                            "left_gap": e.left_gap,
                            "right_gap": e.right_gap,
                            "common_dur": e.common_dur,
                        }
                        for e in net.entries
                    ],
                    "flag": net.flag,
                },
                indent=2,
            )
        )
    else:
        comp = spec.components[net.component]
        print(f"network: {spec.name}[{net.component}] {comp.name!r} on slot grid g={part.slot_dur}")
        for e in net.entries:
            print(
                f"  slot {e.slot}: {e.rel.value}  left_gap={e.left_gap} "
                f"right_gap={e.right_gap} common={e.common_dur}"
            )
        print(f"flag: {'true' if net.flag else 'false'}")
    return 0


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValueError(f"trials must be >= 1, got {args.trials}")
    report = run_verification(args.trials, args.seed)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "trials": report.trials,
                    "seed": report.seed,
                    "pairs_checked": report.pairs_checked,
                    "mismatches": report.mismatches,
                    "witness_errors": report.witness_errors,
                    "battery_pairs": report.battery_pairs,
                    "soundness_violations": report.soundness_violations,
                    "exhaustiveness_gaps": report.exhaustiveness_gaps,
                    "passed": report.passed,
                },
                indent=2,
            )
        )
    else:
        for line in report.summary_lines(include_battery=True):
            print(line)
        for failure in report.failures[:20]:
            print(f"  {failure}")
    return 0


def cmd_bench(args) -> int:
    if args.max_exponent < 4:
        raise ValueError(f"--max-exponent must be >= 4, got {args.max_exponent}")
    report = run_bench(args.max_exponent)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rows": [
                        {
                            "max_dur": r.max_dur,
                            "gcd_method_ops": r.gcd_method_ops,
                            "oracle_ops": r.oracle_ops,
                        }
                        for r in report.rows
                    ],
                    "gcd_slope": report.gcd_slope,
                    "oracle_slope": report.oracle_slope,
                },
                indent=2,
            )
        )
    else:
        for line in report.csv_lines():
            print(line)
        gcd_s = "n/a" if report.gcd_slope is None else f"{report.gcd_slope:.3f}"
        ora_s = "n/a" if report.oracle_slope is None else f"{report.oracle_slope:.3f}"
        print(f"gcd-method log-log slope: {gcd_s}")
        print(f"oracle log-log slope: {ora_s}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coincide",
        description="Decide whether components of two recurring schedules ever coincide.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, needs_input=True, needs_pq=False):
        if needs_input:
            sp.add_argument("--input", required=True, help="query document (JSON)")
        if needs_pq:
            sp.add_argument("--p", help="first-sequence component index or name (overrides document)")
            sp.add_argument("--q", help="second-sequence component index or name (overrides document)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("check", help="decide coincidence via the slot grid")
    add_common(sp, needs_pq=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("witness", help="earliest shared window in the cycle")
    add_common(sp, needs_pq=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("enumerate", help="all shared windows via cycle projection")
    add_common(sp, needs_pq=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("partition", help="show the slot grid of the pair")
    add_common(sp)
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("network", help="dump one component's slot network")
    add_common(sp)
    sp.add_argument("--side", choices=("x", "y"), required=True)
    sp.add_argument("--index", type=int, required=True, help="component index")
    sp.set_defaults(func=cmd_network)

    sp = sub.add_parser("verify", help="randomized cross-validation against projection")
    add_common(sp, needs_input=False)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="operation-count scaling benchmark")
    add_common(sp, needs_input=False)
    sp.add_argument("--max-exponent", type=int, default=10, dest="max_exponent")
    sp.add_argument("--seed", type=int, default=0, help="accepted for uniformity; bench is deterministic")
    sp.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CoincideError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
