"""Lossless JSON forms: rationals as "p/q" strings, complex values as
[re, im] pairs, words over "xyzw".  Encoders sort everything so equal
inputs give byte-identical output."""

from __future__ import annotations

import json
from fractions import Fraction

from .arcs import PLArc, SceneConfig
from .exactcx import QC
from .freecomplex import FCGen, FreeComplex
from .paths import FreePathElement
from .reps import Representation, StabilityParams, StabilityVerdict


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    return Fraction(s)


def fpe_to_json(e: FreePathElement):
    return [{"word": w, "coeff": frac_str(e.coeffs[w])} for w in e.words()]


def fpe_from_json(data) -> FreePathElement:
    return FreePathElement({item["word"]: parse_frac(item["coeff"]) for item in data})


def matrix_to_json(m):
    return [[frac_str(c) for c in row] for row in m]


def matrix_from_json(rows):
    return tuple(tuple(parse_frac(c) for c in row) for row in rows)


def rep_to_json(r: Representation):
    return {"dims": list(r.dims), "x": matrix_to_json(r.mx), "z": matrix_to_json(r.mz),
            "y": matrix_to_json(r.my), "w": matrix_to_json(r.mw)}


def rep_from_json(data) -> Representation:
    return Representation(tuple(data["dims"]), matrix_from_json(data["x"]),
                          matrix_from_json(data["z"]), matrix_from_json(data["y"]),
                          matrix_from_json(data["w"]))


def params_to_json(p: StabilityParams):
    return {"z0": [frac_str(p.z0.re), frac_str(p.z0.im)],
            "z1": [frac_str(p.z1.re), frac_str(p.z1.im)]}


def params_from_json(data) -> StabilityParams:
    return StabilityParams(QC(parse_frac(data["z0"][0]), parse_frac(data["z0"][1])),
                           QC(parse_frac(data["z1"][0]), parse_frac(data["z1"][1])))


def verdict_to_json(v: StabilityVerdict):
    out = {"verdict": v.kind, "primes": list(v.primes)}
    if v.witness_dims is not None:
        out["witness_dims"] = list(v.witness_dims)
    if v.witness is not None:
        out["witness"] = {"basis0": matrix_to_json(v.witness[0]),
                          "basis1": matrix_to_json(v.witness[1])}
    if v.flagged:
        out["flagged"] = [list(d) for d in v.flagged]
    return out


def complex_to_json(fc: FreeComplex):
    gens = [{"name": g.name, "vertex": g.vertex, "degree": g.degree,
             "internal": g.internal} for g in fc.gens]
    names = [g.name for g in fc.gens]
    matrix = []
    for out_name in names:
        row = []
        for in_name in names:
            entry = FreePathElement()
            for coeff, target in fc.diff[in_name]:
                if target == out_name:
                    entry = entry + coeff
            row.append(fpe_to_json(entry))
        matrix.append(row)
    return {"generators": gens, "differential": matrix}


def complex_from_json(data) -> FreeComplex:
    gens = [FCGen(g["name"], g["vertex"], g["degree"], g["internal"])
            for g in data["generators"]]
    names = [g.name for g in gens]
    diff = {}
    for i, out_name in enumerate(names):
        for j, in_name in enumerate(names):
            e = fpe_from_json(data["differential"][i][j])
            if not e.is_zero():
                diff.setdefault(in_name, []).append((e, out_name))
    return FreeComplex(gens, diff)


def arc_to_json(arc: PLArc):
    return {"points": [[frac_str(x), frac_str(y)] for x, y in arc.points],
            "orientation": arc.orientation}


def arc_from_json(data) -> PLArc:
    return PLArc(tuple((parse_frac(x), parse_frac(y)) for x, y in data["points"]),
                 data.get("orientation", 1))


def scene_to_json(cfg: SceneConfig):
    return {"a": frac_str(cfg.a), "b": frac_str(cfg.b), "r1": frac_str(cfg.r1),
            "r2": frac_str(cfg.r2), "eps": frac_str(cfg.eps)}


def scene_from_json(data) -> SceneConfig:
    return SceneConfig(parse_frac(data["a"]), parse_frac(data["b"]),
                       parse_frac(data["r1"]), parse_frac(data["r2"]),
                       parse_frac(data["eps"]))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
