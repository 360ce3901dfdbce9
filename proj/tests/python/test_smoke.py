import math
from fractions import Fraction

import pytest

import rahp


def test_constants():
    assert abs(rahp.v8().value - 3.663862376709) < 1e-11
    assert abs(rahp.v3().value - 1.014941606410) < 1e-11
    lam = rahp.lobachevsky(math.pi / 6)
    assert abs(3 * rahp.lobachevsky(math.pi / 3).value - 2 * lam.value) < 1e-11


def test_antiprism_volume_and_class():
    assert abs(rahp.vol_antiprism(4).value - 6.023046) < 5e-7
    a4 = rahp.antiprism(4)
    assert a4.profile()["V"] == 8
    assert rahp.classify(a4)["kind"] == "IdealRA"
    assert a4.avg_face_neighbours() == Fraction(32, 5)


def test_non_realizable_witnesses():
    assert rahp.classify(rahp.tetrahedron())["witness_kind"] == "Tetrahedron"
    assert rahp.classify(rahp.prism(3))["witness_kind"] == "TriangularPrism"
    assert rahp.classify(rahp.prism(4))["witness_kind"] == "Condition4"


def test_doubling_dodecahedron():
    d = rahp.double_along_face(rahp.loebell(5), 2)
    prof = d.profile()
    assert (prof["V"], prof["F"]) == (30, 17)
    assert rahp.classify(d)["kind"] == "CompactRA"


def test_octahedron_chain_counts():
    assert [p.vertex_count for p in rahp.octahedron_chain(3)] == [6, 9, 15, 27]


def test_bounds_contain_volume():
    for n in (5, 8, 13):
        report = rahp.bounds(rahp.loebell(n))
        upper = report["entries"][report["best_upper"]].value
        lower = report["entries"][report["best_lower"]].value
        assert lower <= rahp.vol_loebell(n).value <= upper


def test_round_trip():
    p = rahp.antiprism(6)
    (q,) = rahp.parse(p.serialize())
    assert q.serialize() == p.serialize()


def test_parse_error_has_line():
    with pytest.raises(rahp.ParseError, match="line 3"):
        rahp.parse("polytope x\nvertices 3\nface 0 1 z\n")


def test_invalid_polytope_rejected():
    broken = rahp.Polytope("broken", [[0, 1, 2], [0, 2, 1]])
    assert not broken.valid
    with pytest.raises(rahp.InvalidPolytope):
        broken.avg_face_neighbours()
