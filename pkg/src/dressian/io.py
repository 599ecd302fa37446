"""JSON serialization for matroids, weight vectors, subdivisions and fans.

All writers emit canonical order (bases lexicographic, cells sorted) so
output is byte-identical across runs.  Rationals serialize as bare ints
when integral and as "p/q" strings otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .fan import Fan, IndecomposabilityVerdict
from .matroid import Matroid, from_bases, graphic, named, uniform
from .rational import QQ
from .subdivision import Classification, Subdivision
from .tropical import WeightVector


def rational_to_json(x):
    f = Fraction(int(x.numerator), int(x.denominator))
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def rational_from_json(v):
    if isinstance(v, bool):
        raise ParseError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return QQ(v)
    if isinstance(v, str):
        try:
            return QQ(Fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {v!r}") from exc
    raise ParseError(f"not a rational: {v!r}")


def matroid_to_json(m: Matroid) -> dict:
    return {
        "n": m.n,
        "rank": m.d,
        "bases": [list(b) for b in m.bases],
    }


def matroid_from_json(data) -> Matroid:
    if not isinstance(data, dict):
        raise ParseError("matroid document must be an object")
    if "name" in data:
        return named(data["name"])
    if "uniform" in data:
        d, n = data["uniform"]
        return uniform(int(d), int(n))
    if "graphic" in data:
        g = data["graphic"]
        return graphic(int(g["vertices"]), [tuple(e) for e in g["edges"]])
    try:
        n = int(data["n"])
        d = int(data["rank"])
        bases = [tuple(int(e) for e in b) for b in data["bases"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matroid document: {exc}") from exc
    return from_bases(n, d, bases)


def weights_to_json(w: WeightVector, include_matroid: bool = True) -> dict:
    out = {}
    if include_matroid:
        out["matroid"] = matroid_to_json(w.matroid)
    out["values"] = [
        [list(b), rational_to_json(w.values[b])] for b in w.matroid.bases
    ]
    return out


def weights_from_json(data, matroid: Matroid | None = None) -> WeightVector:
    if not isinstance(data, dict) or "values" not in data:
        raise ParseError("weight document must be an object with a values list")
    if matroid is None:
        if "matroid" not in data:
            raise ParseError("weight document needs an embedded matroid")
        matroid = matroid_from_json(data["matroid"])
    try:
        values = {
            tuple(int(e) for e in b): rational_from_json(v)
            for b, v in data["values"]
        }
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed weight values: {exc}") from exc
    return WeightVector(matroid, values)


def octahedra_to_json(faces) -> list:
    return [{"s": list(f.s), "t": list(f.t)} for f in faces]


def classification_to_json(c: Classification) -> dict:
    out = {"kind": c.kind, "cell_count": c.cell_count}
    if c.hyperplane is not None:
        normal, rhs = c.hyperplane
        out["hyperplane"] = {"normal": list(normal), "rhs": rhs}
    return out


def subdivision_to_json(s: Subdivision, classification=None) -> dict:
    out = {"cells": [[list(b) for b in cell] for cell in s.maximal_cells]}
    if classification is not None:
        out["classification"] = classification_to_json(classification)
    return out


def _state_key(key) -> str:
    s, quad = key
    return ",".join(map(str, s)) + "|" + ",".join(map(str, quad))


def fan_to_json(f: Fan) -> dict:
    return {
        "lineality_dim": f.lineality_dim,
        "maximal_cones": [
            {
                "dim": c.dim,
                "states": {
                    _state_key(k): st
                    for k, st in zip(f.relation_keys, c.states)
                },
                "witness": [rational_to_json(x) for x in c.witness],
            }
            for c in f.maximal_cones
        ],
        "is_linear_space": f.is_linear_space,
        "complete": f.complete,
    }


def verdict_to_json(v: IndecomposabilityVerdict) -> dict:
    out = {"verdict": v.verdict, "reason": v.reason}
    if v.witness is not None:
        out["witness"] = weights_to_json(v.witness, include_matroid=False)
        out["subdivision"] = subdivision_to_json(v.subdivision)
    return out
