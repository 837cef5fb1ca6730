"""Reports: one structure, two renderings (text and JSON), exact round-trip.

Every integer in the JSON form is emitted as a decimal string so consumers
without big-integer support cannot silently lose precision.  Rationals are
emitted as "p/q" strings and infinity as "inf".  ``Report.from_json_dict``
is the exact inverse of ``Report.to_json_dict``: parsing an emitted report
re-yields the original values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import UNKNOWN, FullnessVerdict, IsoVerdict, IsoWitness
from .dyadic import INF, is_infinite
from .family import FamilySpec, TailSpec
from .groups import (
    ALL_POSITIVE,
    ALPHA_CONE,
    LEXICOGRAPHIC_CONE,
    ConeDescriptor,
    GroupDescriptor,
    PreorderedGroup,
)
from .ktheory import DerivedScalars, SixTermInvariant
from .version import __version__

UNKNOWN_NOTE = "see Example (α finite): K-theory does not decide"


def _int_str(v: int | None) -> str | None:
    return None if v is None else str(v)


def _parse_int(v: str | None) -> int | None:
    return None if v is None else int(v)


def _rational_str(v) -> str | None:
    if v is None:
        return None
    if is_infinite(v):
        return "inf"
    return str(Fraction(v))


def _parse_rational(v: str | None):
    if v is None:
        return None
    if v == "inf":
        return INF
    return Fraction(v)


def _m_str(m) -> str:
    return "inf" if is_infinite(m) else str(m)


def _parse_m(v: str):
    return INF if v == "inf" else int(v)


def spec_to_json(spec: FamilySpec) -> dict:
    tail: dict = {"kind": spec.tail.kind}
    if spec.tail.c is not None:
        tail["c"] = str(spec.tail.c)
    return {"m": _m_str(spec.m), "n": [str(n) for n in spec.prefix], "tail": tail}


def spec_from_json(d: dict) -> FamilySpec:
    tail_d = d.get("tail", {"kind": "zero"})
    c = tail_d.get("c")
    tail = TailSpec(tail_d["kind"], int(c) if c is not None else None)
    return FamilySpec(_parse_m(str(d["m"])), tuple(int(n) for n in d["n"]), tail)


def _cone_to_json(cone: ConeDescriptor) -> dict:
    out: dict = {"tag": cone.tag}
    if cone.tag == ALL_POSITIVE:
        out["withFullClass"] = cone.with_full_class
    elif cone.tag == ALPHA_CONE:
        out["alpha"] = _rational_str(cone.alpha)
    elif cone.tag == LEXICOGRAPHIC_CONE:
        out["parts"] = [_cone_to_json(p) for p in cone.parts]
    return out


def _cone_from_json(d: dict) -> ConeDescriptor:
    tag = d["tag"]
    if tag == ALL_POSITIVE:
        return ConeDescriptor(tag, with_full_class=d["withFullClass"])
    if tag == ALPHA_CONE:
        return ConeDescriptor(tag, alpha=_parse_rational(d["alpha"]))
    if tag == LEXICOGRAPHIC_CONE:
        return ConeDescriptor(tag, parts=tuple(_cone_from_json(p) for p in d["parts"]))
    return ConeDescriptor(tag)


def _group_to_json(group: GroupDescriptor) -> dict:
    out: dict = {"tag": group.tag, "symbol": group.render()}
    if group.torsion_order is not None:
        out["torsion"] = str(group.torsion_order)
    if group.modulus is not None:
        out["modulus"] = str(group.modulus)
    return out


def _group_from_json(d: dict) -> GroupDescriptor:
    return GroupDescriptor(
        d["tag"],
        torsion_order=_parse_int(d.get("torsion")),
        modulus=_parse_int(d.get("modulus")),
    )


def _pg_to_json(pg: PreorderedGroup) -> dict:
    return {"group": _group_to_json(pg.group), "cone": _cone_to_json(pg.cone)}


def _pg_from_json(d: dict) -> PreorderedGroup:
    return PreorderedGroup(_group_from_json(d["group"]), _cone_from_json(d["cone"]))


def invariant_to_json(inv: SixTermInvariant) -> dict:
    return {
        "ideal": _pg_to_json(inv.ideal),
        "middle": _pg_to_json(inv.middle),
        "quotient": _pg_to_json(inv.quotient),
        "caseTag": inv.case_tag,
        "indexMapZero": inv.index_map_zero,
    }


def invariant_from_json(d: dict) -> SixTermInvariant:
    return SixTermInvariant(
        ideal=_pg_from_json(d["ideal"]),
        middle=_pg_from_json(d["middle"]),
        quotient=_pg_from_json(d["quotient"]),
        index_map_zero=d["indexMapZero"],
        case_tag=d["caseTag"],
    )


def scalars_to_json(s: DerivedScalars) -> dict:
    return {
        "alpha": _rational_str(s.alpha),
        "k": _int_str(s.k),
        "N": _int_str(s.n_weight),
        "x": _int_str(s.x),
        "M": _int_str(s.m_odd),
    }


def scalars_from_json(d: dict) -> DerivedScalars:
    return DerivedScalars(
        alpha=_parse_rational(d["alpha"]),
        k=_parse_int(d["k"]),
        n_weight=_parse_int(d["N"]),
        x=_parse_int(d["x"]),
        m_odd=_parse_int(d["M"]),
    )


@dataclass(frozen=True)
class ScanResult:
    smallest_divergent_m: int | None
    table: tuple[tuple[int, int, int], ...]  # (m, exact classes, stable classes)


@dataclass(frozen=True)
class Report:
    """Everything a command computed, ready for rendering."""

    command: str
    inputs: tuple[FamilySpec, ...] = ()
    scalars: DerivedScalars | None = None
    invariant: SixTermInvariant | None = None
    fullness: FullnessVerdict | None = None
    comparison: IsoVerdict | None = None
    compare_mode: str | None = None
    scan: ScanResult | None = None
    truncation: tuple[int, int, tuple[int, ...]] | None = None  # (depth, free rank, torsion)
    scan_limit: int | None = None
    version: str = __version__

    # -- JSON ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        inputs: list[dict] = [spec_to_json(s) for s in self.inputs]
        if self.scan_limit is not None:
            inputs.append({"maxM": str(self.scan_limit)})
        verdict = None
        witness = None
        if self.fullness is not None:
            verdict = {
                "stenotic": self.fullness.stenotic,
                "kLexicographic": self.fullness.k_lexicographic,
                "stabilizedFull": self.fullness.stabilized_full,
                "unstabilized": self.fullness.unstabilized,
            }
            if self.fullness.unstabilized == UNKNOWN:
                verdict["note"] = UNKNOWN_NOTE
        if self.comparison is not None:
            verdict = {"mode": self.compare_mode, "isomorphic": self.comparison.isomorphic}
            if self.comparison.reason is not None:
                verdict["reason"] = self.comparison.reason
            if self.comparison.witness is not None:
                w = self.comparison.witness
                witness = {"l": str(w.l), "lPrime": str(w.l_prime), "unit": str(w.unit)}
        if self.scan is not None:
            verdict = {
                "smallestDivergentM": _int_str(self.scan.smallest_divergent_m),
                "table": [
                    {"m": str(m), "exactClasses": str(e), "stableClasses": str(s)}
                    for m, e, s in self.scan.table
                ],
            }
        invariant = None
        if self.invariant is not None:
            invariant = invariant_to_json(self.invariant)
            if self.truncation is not None:
                depth, free_rank, torsion = self.truncation
                invariant["truncation"] = {
                    "depth": str(depth),
                    "freeRank": str(free_rank),
                    "torsion": [str(t) for t in torsion],
                }
        return {
            "command": self.command,
            "inputs": inputs,
            "scalars": scalars_to_json(self.scalars) if self.scalars else None,
            "invariant": invariant,
            "verdict": verdict,
            "witness": witness,
            "version": self.version,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Report":
        command = d["command"]
        specs = []
        scan_limit = None
        for entry in d["inputs"]:
            if "maxM" in entry:
                scan_limit = int(entry["maxM"])
            else:
                specs.append(spec_from_json(entry))
        scalars = scalars_from_json(d["scalars"]) if d.get("scalars") else None
        invariant = None
        truncation = None
        if d.get("invariant"):
            invariant = invariant_from_json(d["invariant"])
            trunc = d["invariant"].get("truncation")
            if trunc:
                truncation = (
                    int(trunc["depth"]),
                    int(trunc["freeRank"]),
                    tuple(int(t) for t in trunc["torsion"]),
                )
        fullness = None
        comparison = None
        compare_mode = None
        scan = None
        verdict = d.get("verdict")
        if command == "fullness" and verdict is not None:
            fullness = FullnessVerdict(
                stenotic=verdict["stenotic"],
                k_lexicographic=verdict["kLexicographic"],
                stabilized_full=verdict["stabilizedFull"],
                unstabilized=verdict["unstabilized"],
            )
        elif command == "compare" and verdict is not None:
            compare_mode = verdict["mode"]
            witness = None
            if d.get("witness") is not None:
                w = d["witness"]
                witness = IsoWitness(l=int(w["l"]), l_prime=int(w["lPrime"]), unit=int(w["unit"]))
            comparison = IsoVerdict(
                isomorphic=verdict["isomorphic"],
                witness=witness,
                reason=verdict.get("reason"),
            )
        elif command == "scan" and verdict is not None:
            scan = ScanResult(
                smallest_divergent_m=_parse_int(verdict["smallestDivergentM"]),
                table=tuple(
                    (int(r["m"]), int(r["exactClasses"]), int(r["stableClasses"]))
                    for r in verdict["table"]
                ),
            )
        return cls(
            command=command,
            inputs=tuple(specs),
            scalars=scalars,
            invariant=invariant,
            fullness=fullness,
            comparison=comparison,
            compare_mode=compare_mode,
            scan=scan,
            truncation=truncation,
            scan_limit=scan_limit,
            version=d["version"],
        )

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for spec in self.inputs:
            tail = spec.tail.kind if spec.tail.c is None else f"{spec.tail.kind}:{spec.tail.c}"
            n = ",".join(str(v) for v in spec.prefix)
            lines.append(f"input: m={_m_str(spec.m)} n=[{n}] tail={tail}")
        if self.scan_limit is not None:
            lines.append(f"input: max-m={self.scan_limit}")
        if self.scalars is not None:
            s = self.scalars
            lines.append(
                "scalars: alpha={} k={} N={} x={} M={}".format(
                    _rational_str(s.alpha), s.k, s.n_weight, s.x, s.m_odd
                )
            )
        if self.invariant is not None:
            inv = self.invariant
            lines.append(f"ideal:    {inv.ideal.render()}")
            lines.append(f"middle:   {inv.middle.render()}")
            lines.append(f"quotient: {inv.quotient.render()}")
            lines.append(f"case: {inv.case_tag}  index map zero: {inv.index_map_zero}")
            if self.truncation is not None:
                depth, free_rank, torsion = self.truncation
                lines.append(
                    f"truncation oracle: depth={depth} free rank={free_rank} "
                    f"torsion={list(torsion)}"
                )
        if self.fullness is not None:
            f = self.fullness
            lines.append(
                "fullness: stenotic={} K-lexicographic={} stabilized-full={} "
                "unstabilized={}".format(
                    f.stenotic, f.k_lexicographic, f.stabilized_full, f.unstabilized
                )
            )
            if f.unstabilized == UNKNOWN:
                lines.append(f"note: {UNKNOWN_NOTE}")
        if self.comparison is not None:
            c = self.comparison
            lines.append(f"mode: {self.compare_mode}")
            lines.append(f"isomorphic: {c.isomorphic}")
            if c.reason:
                lines.append(f"reason: {c.reason}")
            if c.witness:
                w = c.witness
                lines.append(f"witness: l={w.l} l'={w.l_prime} unit={w.unit}")
        if self.scan is not None:
            lines.append("m  exact-classes  stable-classes")
            for m, e, s in self.scan.table:
                marker = "  <- diverges" if e != s else ""
                lines.append(f"{m:<3}{e:<15}{s}{marker}")
            lines.append(f"smallest divergent m: {self.scan.smallest_divergent_m}")
        lines.append(f"version: {self.version}")
        return "\n".join(lines)
