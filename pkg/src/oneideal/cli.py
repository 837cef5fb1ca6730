"""Command-line front end.

Subcommands: ``invariant``, ``fullness``, ``compare``, ``scan``.  Family
members are given either as flags (``--m 8 --n 1,0,3 --tail zero``), as a
JSON object matching the input schema
``{"m": 8 | "inf", "n": [..], "tail": {"kind": ..., "c": ...}}``, or (for
``compare``) compactly as ``m=8,n=[1,0,3],tail=constant:2``.

Exit codes: 0 = computed (negative verdicts included), 2 = input or
validation error, 3 = internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify
from .dyadic import INF
from .errors import (
    FamilyValidationError,
    InternalConsistencyError,
    OneIdealError,
    OutOfScopeComparison,
)
from .family import FamilySpec, TailSpec, validate_family
from .ktheory import invariant_of, stable_oracle_depth, truncated_k0
from .report import Report, ScanResult, spec_from_json


def _parse_m(text: str):
    if text.strip().lower() == "inf":
        return INF
    return int(text)


def _parse_tail(text: str) -> TailSpec:
    kind, _, c = text.partition(":")
    kind = kind.strip().lower()
    if kind == "zero":
        if c:
            raise ValueError("zero tail takes no parameter")
        return TailSpec("zero")
    if kind in ("constant", "doubling"):
        if not c:
            raise ValueError(f"{kind} tail needs a parameter, e.g. {kind}:2")
        return TailSpec(kind, int(c))
    raise ValueError(f"unknown tail {text!r} (want zero, constant:<c> or doubling:<c>)")


def _parse_n(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _spec_from_flags(args) -> FamilySpec:
    if args.spec is not None:
        return spec_from_json(json.loads(args.spec))
    if args.m is None or args.n is None:
        raise ValueError("provide --m and --n (or --spec with a JSON object)")
    return validate_family(_parse_m(args.m), _parse_n(args.n), _parse_tail(args.tail))


def _spec_from_compact(text: str) -> FamilySpec:
    """Parse ``m=8,n=[1,0,3],tail=constant:2`` (or a JSON object)."""
    text = text.strip()
    if text.startswith("{"):
        return spec_from_json(json.loads(text))
    fields: dict[str, str] = {}
    rest = text
    while rest:
        key, sep, rest = rest.partition("=")
        if not sep:
            raise ValueError(f"expected key=value in {text!r}")
        key = key.strip()
        if rest.startswith("["):
            value, _, rest = rest[1:].partition("]")
            rest = rest.lstrip(",")
        else:
            value, _, rest = rest.partition(",")
        fields[key] = value.strip()
    if "m" not in fields or "n" not in fields:
        raise ValueError(f"spec {text!r} needs at least m= and n=")
    tail = _parse_tail(fields.get("tail", "zero"))
    return validate_family(_parse_m(fields["m"]), _parse_n(fields["n"]), tail)


def _emit(report: Report, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text())


def _cmd_invariant(args) -> int:
    spec = _spec_from_flags(args)
    invariant, scalars = invariant_of(spec)
    truncation = None
    if spec.has_finite_loops:
        depth = args.depth if args.depth is not None else max(
            len(spec.prefix) + 3, stable_oracle_depth(spec)
        )
        free_rank, torsion = truncated_k0(spec, depth)
        truncation = (depth, free_rank, tuple(torsion))
    elif args.depth is not None:
        raise ValueError("--depth applies only when 1 < m < infinity")
    report = Report(
        command="invariant",
        inputs=(spec,),
        scalars=scalars,
        invariant=invariant,
        truncation=truncation,
    )
    _emit(report, args.format)
    return 0


def _cmd_fullness(args) -> int:
    spec = _spec_from_flags(args)
    invariant, scalars = invariant_of(spec)
    verdict = classify.decide_fullness(spec)
    report = Report(
        command="fullness",
        inputs=(spec,),
        scalars=scalars,
        invariant=invariant,
        fullness=verdict,
    )
    _emit(report, args.format)
    return 0


def _cmd_compare(args) -> int:
    spec_a = _spec_from_compact(args.a)
    spec_b = _spec_from_compact(args.b)
    decide = classify.exact_iso if args.mode == "exact" else classify.stable_iso
    verdict = decide(spec_a, spec_b)
    report = Report(
        command="compare",
        inputs=(spec_a, spec_b),
        comparison=verdict,
        compare_mode=args.mode,
    )
    _emit(report, args.format)
    return 0


def _cmd_scan(args) -> int:
    if args.max_m < 2:
        raise ValueError("--max-m must be at least 2")
    table = tuple(classify.divergence_table(args.max_m))
    smallest = next((m for m, e, s in table if e != s), None)
    report = Report(
        command="scan",
        scan=ScanResult(smallest_divergent_m=smallest, table=table),
        scan_limit=args.max_m,
    )
    _emit(report, args.format)
    return 0


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", help="loop count: a non-negative integer or 'inf'")
    parser.add_argument("--n", help="comma-separated edge multiplicities, e.g. 1,0,3")
    parser.add_argument(
        "--tail",
        default="zero",
        help="tail rule: zero | constant:<c> | doubling:<c> (default zero)",
    )
    parser.add_argument("--spec", help="JSON family object instead of --m/--n/--tail")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oneideal",
        description="Ordered K-theory invariants and classification for the "
        "one-ideal graph family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariant", help="compute the six-term invariant")
    _add_spec_flags(p_inv)
    p_inv.add_argument("--depth", type=int, help="truncation oracle depth override")
    p_inv.set_defaults(func=_cmd_invariant)

    p_full = sub.add_parser("fullness", help="decide fullness of the extension")
    _add_spec_flags(p_full)
    p_full.set_defaults(func=_cmd_fullness)

    p_cmp = sub.add_parser("compare", help="decide exact or stable isomorphism")
    p_cmp.add_argument("--a", required=True, help="first member, e.g. m=8,n=1")
    p_cmp.add_argument("--b", required=True, help="second member, e.g. m=8,n=3")
    p_cmp.add_argument("--mode", choices=("exact", "stable"), required=True)
    p_cmp.set_defaults(func=_cmd_compare)

    p_scan = sub.add_parser("scan", help="tabulate class counts and find divergence")
    p_scan.add_argument("--max-m", type=int, required=True)
    p_scan.set_defaults(func=_cmd_scan)

    for p in (p_inv, p_full, p_cmp, p_scan):
        p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilyValidationError as err:
        print(f"error [{err.code}]: {err.message}", file=sys.stderr)
        return 2
    except OutOfScopeComparison as err:
        print(f"error [OutOfScope]: {err}", file=sys.stderr)
        return 2
    except InternalConsistencyError as err:
        print(f"error [InternalConsistency]: {err}", file=sys.stderr)
        return 3
    except (OneIdealError, ValueError, KeyError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
