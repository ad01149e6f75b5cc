"""Strict JSON input for cover documents.

A document is one JSON object with top-level keys ``base`` and ``cover``
mirroring the model types field for field.  Parsing is deliberately fussy:
only exact integers are accepted (any floating point literal is an error),
object keys must be known, duplicate keys are rejected, and every
cross-reference must resolve.  Lists are canonicalized on the way in
(components by id, crossings by index, points by sheet indices) so that
semantically equal documents produce identical downstream output.

Local data at a point is given either as a lattice subgroup
``[[g1x, g1y], [g2x, g2y]]`` (first coordinate = winding around the first
component of the crossing's pair) or directly as an object
``{"n":., "q":., "m1":., "m2":.}`` when the lattice is not known.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InputFormatError
from .local_cover import LatticeSubgroup, LocalCoverType
from .model import (
    BaseGeometry,
    BranchComponent,
    CoverDescription,
    Crossing,
    PointAbove,
    RamSheet,
    check_references,
)

__all__ = [
    "parse_cover_json",
    "load_cover_path",
    "canonical_document",
    "dumps_document",
]

_BASE_KEYS = {"genus_C", "KX_sq", "euler_X", "KX_dot_F", "components", "crossings", "pair_intersections"}
_BASE_REQUIRED = {"genus_C", "KX_sq", "euler_X", "KX_dot_F", "components", "crossings"}
_COMPONENT_KEYS = {"id", "genus", "self_int", "KX_dot", "fiber_deg"}
_CROSSING_KEYS = {"index", "pair"}
_PAIR_KEYS = {"pair", "count"}
_COVER_KEYS = {"degree", "ramification", "points_above"}
_SHEET_KEYS = {"e", "f"}
_POINT_KEYS = {"j", "jp", "local"}
_LOCAL_TYPE_KEYS = {"n", "q", "m1", "m2"}


def _reject_float(text: str) -> Any:
    raise InputFormatError(
        f"floating point literal {text!r} is not allowed; all numeric fields are exact integers"
    )


def _reject_constant(text: str) -> Any:
    raise InputFormatError(f"non-finite literal {text!r} is not allowed")


def _no_duplicate_keys(pairs: list) -> dict:
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise InputFormatError(f"duplicate object key {key!r}")
        seen.add(key)
    return dict(pairs)


def _as_int(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputFormatError(f"{path}: expected an integer (got {value!r})")
    return value


def _as_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise InputFormatError(f"{path}: expected a string (got {value!r})")
    return value


def _as_obj(value: Any, path: str, allowed: set, required: "set | None" = None) -> dict:
    if not isinstance(value, dict):
        raise InputFormatError(f"{path}: expected an object (got {type(value).__name__})")
    unknown = set(value) - allowed
    if unknown:
        raise InputFormatError(f"{path}: unknown keys {sorted(unknown)}")
    missing = (required if required is not None else allowed) - set(value)
    if missing:
        raise InputFormatError(f"{path}: missing keys {sorted(missing)}")
    return value


def _as_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise InputFormatError(f"{path}: expected a list (got {type(value).__name__})")
    return value


def _parse_local(value: Any, path: str):
    if isinstance(value, list):
        rows = _as_list(value, path)
        if len(rows) != 2:
            raise InputFormatError(f"{path}: lattice form needs exactly two generator rows")
        gens = []
        for r, row in enumerate(rows):
            row = _as_list(row, f"{path}[{r}]")
            if len(row) != 2:
                raise InputFormatError(f"{path}[{r}]: generator must have two coordinates")
            gens.append((_as_int(row[0], f"{path}[{r}][0]"), _as_int(row[1], f"{path}[{r}][1]")))
        return LatticeSubgroup(gens[0], gens[1])
    if isinstance(value, dict):
        obj = _as_obj(value, path, _LOCAL_TYPE_KEYS)
        return LocalCoverType(
            n=_as_int(obj["n"], f"{path}.n"),
            q=_as_int(obj["q"], f"{path}.q"),
            m1=_as_int(obj["m1"], f"{path}.m1"),
            m2=_as_int(obj["m2"], f"{path}.m2"),
        )
    raise InputFormatError(f"{path}: local data must be a 2x2 generator list or an n/q/m1/m2 object")


def _parse_base(obj: Any) -> BaseGeometry:
    obj = _as_obj(obj, "base", _BASE_KEYS, _BASE_REQUIRED)
    components = []
    for k, raw in enumerate(_as_list(obj["components"], "base.components")):
        path = f"base.components[{k}]"
        comp = _as_obj(raw, path, _COMPONENT_KEYS)
        components.append(
            BranchComponent(
                id=_as_str(comp["id"], f"{path}.id"),
                genus=_as_int(comp["genus"], f"{path}.genus"),
                self_int=_as_int(comp["self_int"], f"{path}.self_int"),
                KX_dot=_as_int(comp["KX_dot"], f"{path}.KX_dot"),
                fiber_deg=_as_int(comp["fiber_deg"], f"{path}.fiber_deg"),
            )
        )
    components.sort(key=lambda c: c.id)

    crossings = []
    for k, raw in enumerate(_as_list(obj["crossings"], "base.crossings")):
        path = f"base.crossings[{k}]"
        cr = _as_obj(raw, path, _CROSSING_KEYS)
        pair = _as_list(cr["pair"], f"{path}.pair")
        if len(pair) != 2:
            raise InputFormatError(f"{path}.pair: expected exactly two component ids")
        crossings.append(
            Crossing(
                index=_as_int(cr["index"], f"{path}.index"),
                pair=(_as_str(pair[0], f"{path}.pair[0]"), _as_str(pair[1], f"{path}.pair[1]")),
            )
        )
    crossings.sort(key=lambda x: x.index)

    pair_counts = []
    for k, raw in enumerate(_as_list(obj.get("pair_intersections", []), "base.pair_intersections")):
        path = f"base.pair_intersections[{k}]"
        pc = _as_obj(raw, path, _PAIR_KEYS)
        pair = _as_list(pc["pair"], f"{path}.pair")
        if len(pair) != 2:
            raise InputFormatError(f"{path}.pair: expected exactly two component ids")
        pair_counts.append(
            (
                (_as_str(pair[0], f"{path}.pair[0]"), _as_str(pair[1], f"{path}.pair[1]")),
                _as_int(pc["count"], f"{path}.count"),
            )
        )
    pair_counts.sort(key=lambda item: tuple(sorted(item[0])))

    return BaseGeometry(
        genus_C=_as_int(obj["genus_C"], "base.genus_C"),
        KX_sq=_as_int(obj["KX_sq"], "base.KX_sq"),
        euler_X=_as_int(obj["euler_X"], "base.euler_X"),
        KX_dot_F=_as_int(obj["KX_dot_F"], "base.KX_dot_F"),
        components=tuple(components),
        crossings=tuple(crossings),
        pair_counts=tuple(pair_counts),
    )


def _parse_cover(obj: Any) -> CoverDescription:
    obj = _as_obj(obj, "cover", _COVER_KEYS)
    ram = []
    ram_obj = obj["ramification"]
    if not isinstance(ram_obj, dict):
        raise InputFormatError("cover.ramification: expected an object keyed by component id")
    for cid in sorted(ram_obj):
        sheets = []
        for k, raw in enumerate(_as_list(ram_obj[cid], f"cover.ramification[{cid!r}]")):
            path = f"cover.ramification[{cid!r}][{k}]"
            sheet = _as_obj(raw, path, _SHEET_KEYS)
            sheets.append(
                RamSheet(e=_as_int(sheet["e"], f"{path}.e"), f=_as_int(sheet["f"], f"{path}.f"))
            )
        ram.append((cid, tuple(sheets)))

    pts = []
    pts_obj = obj["points_above"]
    if not isinstance(pts_obj, dict):
        raise InputFormatError("cover.points_above: expected an object keyed by crossing index")
    for key in pts_obj:
        try:
            idx = int(key, 10)
        except ValueError:
            raise InputFormatError(
                f"cover.points_above: key {key!r} is not a decimal crossing index"
            ) from None
        if str(idx) != key:
            raise InputFormatError(
                f"cover.points_above: key {key!r} is not in canonical decimal form"
            )
        raw_points = []
        for k, raw in enumerate(_as_list(pts_obj[key], f"cover.points_above[{key!r}]")):
            path = f"cover.points_above[{key!r}][{k}]"
            pt = _as_obj(raw, path, _POINT_KEYS)
            raw_points.append(
                PointAbove(
                    j=_as_int(pt["j"], f"{path}.j"),
                    jp=_as_int(pt["jp"], f"{path}.jp"),
                    local=_parse_local(pt["local"], f"{path}.local"),
                )
            )
        raw_points.sort(key=lambda p: (p.j, p.jp, repr(p.local)))
        pts.append((idx, tuple(raw_points)))
    pts.sort(key=lambda item: item[0])

    return CoverDescription(
        degree=_as_int(obj["degree"], "cover.degree"),
        ramification=tuple(ram),
        points_above=tuple(pts),
    )


def parse_cover_json(text: str) -> tuple[BaseGeometry, CoverDescription]:
    """Parse a cover document from a JSON string.

    Raises :class:`InputFormatError` on malformed documents (including any
    floating point literal) and :class:`InvalidInputError` when values
    violate the model's constructor preconditions or references dangle.
    """
    try:
        doc = json.loads(
            text,
            parse_float=_reject_float,
            parse_constant=_reject_constant,
            object_pairs_hook=_no_duplicate_keys,
        )
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from None
    doc = _as_obj(doc, "document", {"base", "cover"})
    base = _parse_base(doc["base"])
    cover = _parse_cover(doc["cover"])
    check_references(base, cover)
    return base, cover


def load_cover_path(path: str) -> tuple[BaseGeometry, CoverDescription]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cover_json(fh.read())


def _local_to_json(local) -> Any:
    if isinstance(local, LatticeSubgroup):
        return [list(local.g1), list(local.g2)]
    return {"n": local.n, "q": local.q, "m1": local.m1, "m2": local.m2}


def canonical_document(base: BaseGeometry, cover: CoverDescription) -> dict:
    """Rebuild the JSON form of a document with canonical list orders."""
    doc: dict[str, Any] = {
        "base": {
            "genus_C": base.genus_C,
            "KX_sq": base.KX_sq,
            "euler_X": base.euler_X,
            "KX_dot_F": base.KX_dot_F,
            "components": [
                {
                    "id": c.id,
                    "genus": c.genus,
                    "self_int": c.self_int,
                    "KX_dot": c.KX_dot,
                    "fiber_deg": c.fiber_deg,
                }
                for c in sorted(base.components, key=lambda c: c.id)
            ],
            "crossings": [
                {"index": x.index, "pair": list(x.pair)}
                for x in sorted(base.crossings, key=lambda x: x.index)
            ],
        },
        "cover": {
            "degree": cover.degree,
            "ramification": {
                cid: [{"e": s.e, "f": s.f} for s in sheets]
                for cid, sheets in sorted(cover.ramification)
            },
            "points_above": {
                str(idx): [
                    {"j": p.j, "jp": p.jp, "local": _local_to_json(p.local)}
                    for p in sorted(points, key=lambda p: (p.j, p.jp, repr(p.local)))
                ]
                for idx, points in sorted(cover.points_above)
            },
        },
    }
    if base.pair_counts:
        doc["base"]["pair_intersections"] = [
            {"pair": list(pair), "count": count}
            for pair, count in sorted(base.pair_counts, key=lambda item: tuple(sorted(item[0])))
        ]
    return doc


def dumps_document(base: BaseGeometry, cover: CoverDescription) -> str:
    """Serialize a document deterministically (sorted keys, two-space indent)."""
    return json.dumps(canonical_document(base, cover), indent=2, sort_keys=True) + "\n"
