from fractions import Fraction

from conifold_flop import jsonio
from conifold_flop.arcs import DEFAULT_SCENE, catalog_arc
from conifold_flop.paths import FreePathElement
from conifold_flop.reps import is_stable, make_catalog_rep, stability_params
from conifold_flop.tables import table_sphere0, table_torus


def test_fpe_roundtrip():
    e = FreePathElement({"xyz": Fraction(1, 2), "zyx": Fraction(-3)})
    assert jsonio.fpe_from_json(jsonio.fpe_to_json(e)) == e
    assert jsonio.fpe_to_json(e)[0]["coeff"] == "1/2"


def test_rep_roundtrip():
    r = make_catalog_rep("vplus", 3)
    assert jsonio.rep_from_json(jsonio.rep_to_json(r)) == r
    p = make_catalog_rep("point", Fraction(2, 3), -1)
    assert jsonio.rep_from_json(jsonio.rep_to_json(p)) == p


def test_params_roundtrip():
    p = stability_params(Fraction(-1, 2), 2, 1, Fraction(1, 3))
    assert jsonio.params_from_json(jsonio.params_to_json(p)) == p


def test_verdict_serialization():
    ch2 = stability_params(1, 1, -1, 2)
    v = is_stable(make_catalog_rep("vplus", 2), ch2)
    data = jsonio.verdict_to_json(v)
    assert data["verdict"] == "unstable"
    assert data["witness_dims"] == [0, 1]
    assert "basis1" in data["witness"]


def test_complex_roundtrip():
    for fc in (table_sphere0(), table_torus(2)):
        data = jsonio.complex_to_json(fc)
        back = jsonio.complex_from_json(data)
        assert {g.name for g in back.gens} == {g.name for g in fc.gens}
        for g in fc.gens:
            assert dict((o, c) for c, o in back.diff[g.name]) == \
                dict((o, c) for c, o in fc.diff[g.name])


def test_arc_and_scene_roundtrip():
    arc = catalog_arc("S", 2, DEFAULT_SCENE)
    back = jsonio.arc_from_json(jsonio.arc_to_json(arc))
    assert back == arc
    assert jsonio.scene_from_json(jsonio.scene_to_json(DEFAULT_SCENE)) == DEFAULT_SCENE


def test_dumps_is_canonical():
    payload = {"b": 1, "a": [2, 3]}
    assert jsonio.dumps(payload) == jsonio.dumps({"a": [2, 3], "b": 1})
