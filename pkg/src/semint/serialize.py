"""JSON round-tripping for semicopulas, instances, results and certificates.

Floats go through :mod:`json`, which prints the shortest repr that parses
back to the same double, so every artifact re-parses to an equal value.
"""

import json

from ._checks import StructuralError
from .capacity import Capacity, FiniteSpace, Instance, MeasurableFunction
from .invariance import InvarianceVerdict, InvarianceWitness
from .semicopula import DRASTIC, LUKASIEWICZ, MIN, PRODUCT, from_table, yager

_NAMED = {
    "min": MIN,
    "minimum": MIN,
    "product": PRODUCT,
    "lukasiewicz": LUKASIEWICZ,
    "drastic": DRASTIC,
}


def semicopula_from_descriptor(desc):
    """Build a semicopula from a descriptor dict, a JSON string, or a bare family name."""
    if isinstance(desc, str):
        text = desc.strip()
        if text.startswith("{"):
            try:
                desc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise StructuralError(f"semicopula descriptor is not valid JSON: {exc}") from None
        else:
            desc = {"kind": text}
    if not isinstance(desc, dict) or "kind" not in desc:
        raise StructuralError(f"semicopula descriptor needs a 'kind' field: {desc!r}")
    kind = str(desc["kind"]).lower()
    if kind in _NAMED:
        return _NAMED[kind]
    if kind == "yager":
        if "p" not in desc:
            raise StructuralError("yager descriptor needs a 'p' field")
        return yager(desc["p"])
    if kind == "table":
        values = desc.get("values")
        if values is None:
            raise StructuralError("table descriptor needs 'values'")
        s = from_table(values, desc.get("label", "table"))
        if "resolution" in desc and int(desc["resolution"]) != s.resolution:
            raise StructuralError(
                f"table resolution {desc['resolution']} does not match a {s.table.shape[0]}x{s.table.shape[0]} matrix"
            )
        return s
    raise StructuralError(f"unknown semicopula kind {desc['kind']!r}")


def semicopula_to_descriptor(s):
    if s.kind == "yager":
        return {"kind": "yager", "p": s.p}
    if s.kind == "table":
        return {"kind": "table", "resolution": s.resolution, "values": s.table.tolist()}
    if s.kind == "custom":
        raise StructuralError("custom (callable) semicopulas cannot be serialized")
    return {"kind": s.kind}


def _subset_key(labels):
    return ",".join(sorted(labels))


def capacity_from_json(points, table):
    space = FiniteSpace(tuple(points))
    if not isinstance(table, dict):
        raise StructuralError("capacity must be an object keyed by comma-joined point labels")
    values = [None] * (1 << len(space))
    for key, value in table.items():
        labels = [p.strip() for p in key.split(",")] if key.strip() else []
        if len(set(labels)) != len(labels):
            raise StructuralError(f"repeated label in capacity key {key!r}")
        mask = space.mask(labels)
        if values[mask] is not None:
            raise StructuralError(f"duplicate capacity entry for subset {key!r}")
        values[mask] = float(value)
    missing = [_subset_key(space.labels(m)) for m, v in enumerate(values) if v is None]
    if missing:
        raise StructuralError(f"capacity is missing {len(missing)} subsets, e.g. {missing[0]!r}")
    return Capacity(space, tuple(values))


def capacity_to_json(capacity):
    space = capacity.space
    return {_subset_key(space.labels(m)): v for m, v in enumerate(capacity.values)}


def instance_from_json(data):
    """Parse the instance schema ``{"points", "capacity", "function"}``."""
    try:
        capacity = capacity_from_json(data["points"], data["capacity"])
        fdata = data["function"]
    except KeyError as exc:
        raise StructuralError(f"instance is missing field {exc.args[0]!r}") from None
    space = capacity.space
    if not isinstance(fdata, dict) or set(fdata) != set(space.points):
        raise StructuralError("function must give exactly one value per point label")
    function = MeasurableFunction(space, tuple(float(fdata[p]) for p in space.points))
    return Instance(capacity, function)


def instance_to_json(inst):
    space = inst.space
    return {
        "points": list(space.points),
        "capacity": capacity_to_json(inst.capacity),
        "function": dict(zip(space.points, inst.function.values)),
    }


def witness_to_json(w):
    return {
        "a": w.a,
        "b": w.b,
        "c": w.c,
        "instance": instance_to_json(w.instance),
        "lhs": w.lhs,
        "rhs": w.rhs,
        "gap": w.gap,
        "semicopula": semicopula_to_descriptor(w.semicopula),
    }


def witness_from_json(data):
    try:
        return InvarianceWitness(
            a=float(data["a"]),
            b=None if data["b"] is None else float(data["b"]),
            c=float(data["c"]),
            instance=instance_from_json(data["instance"]),
            lhs=float(data["lhs"]),
            rhs=float(data["rhs"]),
            gap=float(data["gap"]),
            semicopula=semicopula_from_descriptor(data["semicopula"]),
        )
    except KeyError as exc:
        raise StructuralError(f"certificate is missing field {exc.args[0]!r}") from None


def verdict_to_json(v):
    return {
        "invariant": v.invariant,
        "witness": None if v.witness is None else witness_to_json(v.witness),
        "samples_checked": v.samples_checked,
        "max_residual_seen": v.max_residual_seen,
        "note": v.note,
    }


def verdict_from_json(data):
    return InvarianceVerdict(
        invariant=bool(data["invariant"]),
        witness=None if data["witness"] is None else witness_from_json(data["witness"]),
        samples_checked=int(data["samples_checked"]),
        max_residual_seen=float(data["max_residual_seen"]),
        note=data.get("note", ""),
    )


def dumps(obj):
    return json.dumps(obj, indent=2, allow_nan=False)
