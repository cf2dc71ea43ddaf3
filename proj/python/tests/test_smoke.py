import json

import pytest

import gradalg as ga


def test_quaternions_are_azumaya_division():
    h = ga.quaternion_algebra("-1", "-1")
    assert h.dim == 4
    assert ga.validate(h)["ok"]
    assert ga.is_graded_azumaya(h)["verdict"] == "true"
    assert ga.is_graded_division_ring(h)["verdict"] == "true"
    assert ga.is_graded_central_simple(h)["verdict"] == "true"


def test_group_algebra_of_z2_is_not_central_simple():
    a = ga.group_algebra(ga.GradeGroup(0, [2]))
    assert ga.is_graded_central_simple(a)["verdict"] == "false"
    assert ga.is_graded_field(a)["verdict"] == "true"


def test_upper_triangular_ideal_certificate_verifies():
    ut = ga.corpus_instance("UT2_Q")
    r = ga.is_graded_simple(ut)
    assert r["verdict"] == "false"
    assert r["certificate"]["kind"] == "proper-graded-ideal"
    assert ga.verify_certificate(ut, r["certificate"])["status"] == "verified"
    forged = dict(r["certificate"], kind="zero-divisor")
    assert ga.verify_certificate(ut, forged)["status"] == "refuted"


def test_json_round_trip():
    a = ga.matrix_shift(ga.group_algebra(ga.GradeGroup(0, [2])), [0, 1])
    b = ga.Algebra.from_json(json.loads(json.dumps(a.to_json())))
    assert a.same_table(b)
    assert a.provenance["kind"] == "matrix-shift"
    assert ga.parse(ga.emit(a)).same_table(a)


def test_tensor_of_quaternions():
    h = ga.quaternion_algebra("-1", "-1")
    hh = ga.tensor_product(h, h)
    assert hh.dim == 16
    assert ga.is_graded_simple(hh)["verdict"] == "true"


def test_graded_k0():
    h = ga.quaternion_algebra("-1", "-1")
    k = ga.k0gr(h)
    assert k["rank"] == 1 and k["generators"] == ["(0,0)+Γ*"]
    assert ga.k0gr(h, route="dade")["rank"] == 1
    assert ga.k0gr(ga.corpus_instance("Q_K4"))["rank"] == 4
    t = ga.torsion_check(h)
    assert "notice" in t
    assert ga.k0_ungraded(ga.group_algebra(ga.FiniteGroup.symmetric(3)))["rank"] == 3


def test_matrix_algebra_checks():
    m = ga.matrix_shift(ga.group_algebra(ga.GradeGroup(0, [2])), [0, 1])
    assert ga.is_strongly_graded(m)["verdict"] in ("true", "false")
    assert ga.dfunctor_check(m, [0, 1])["composite_is_k"]
    r = ga.morita_check(ga.group_algebra(ga.GradeGroup(0, [2])), [0, 1])
    assert all(v for k, v in r.items() if isinstance(v, bool))


def test_errors_map_to_python_exceptions():
    with pytest.raises(ga.UnsupportedError):
        ga.k0gr_map(ga.corpus_instance("UT2_Q"))
    with pytest.raises(ga.Error):
        ga.parse("{")
    assert issubclass(ga.UnsupportedError, ga.Error)


def test_demeyer_janusz():
    assert ga.demeyer_janusz(ga.FiniteGroup.symmetric(3))["verdict"] is True
    assert ga.demeyer_janusz(ga.FiniteGroup.symmetric(3), field="F3")["verdict"] is False
