import pytest

import nscurve


def test_cusp_invariants():
    r = nscurve.invariants("y^2*z - x^3", "(0:0:1)")
    assert r["delta"] == 1
    assert r["conductor"] == 2
    assert r["semigroup"]["minimal_generators"] == [2, 3]
    assert r["d_levels"] == [2, 1]
    assert r["all_checks_pass"]


def test_off_curve_point_raises():
    with pytest.raises(nscurve.NscurveError) as info:
        nscurve.invariants("y^2*z - x^3", "(1:0:1)")
    assert info.value.kind == "PointNotOnCurve"


def test_parse_error_kind():
    with pytest.raises(nscurve.NscurveError) as info:
        nscurve.invariants("y^2*z - x^3 +", "(0:0:1)")
    assert info.value.kind == "ParseError"


def test_member_and_equation():
    m = nscurve.make_member("C0", "r", "r+1", 1)
    assert m == {"family": "C0", "t1": "r", "t2": "r + 1", "a": "1", "A": "r + 2", "B": "1", "C": "r^2 + r"}
    assert nscurve.equation(m) == "t*x^4 + x^2*y*z + x*y^3 + (t^2 + t)*x*z^3 + y^2*z^2"
    assert nscurve.singular_points(m) == ["(r:r^2:1)", "(r + 1:r^2 + 2*r + 1:1)"]


def test_invalid_parameters():
    with pytest.raises(nscurve.NscurveError) as info:
        nscurve.make_member("C0", "r", "r", 1)
    assert info.value.kind == "InvalidParameters"


def test_equivalence():
    m = nscurve.make_member("C0", "r", "r+1", 1)
    moved = {"family": "C0", "A": "r + 2", "B": "t", "C": "(r^2 + r)/t"}
    res = nscurve.are_equivalent(m, moved)
    assert res["verdict"] == "equivalent"
    assert res["witness"]["parameters"]["lambda"] == "t"
    other = nscurve.make_member("C0", "r", "r+1", "t^3")
    assert nscurve.are_equivalent(m, other) == {"verdict": "not_equivalent"}
    c1 = nscurve.make_member("C1", "r", "r+1", 1)
    assert nscurve.are_equivalent(m, c1)["verdict"] == "different_family"


def test_descent():
    assert nscurve.descend("(r*x + y)^3") == "level 0\nt*x^3 + y^3\n"
    assert nscurve.is_invariant(nscurve.extend("t*x^3 + y^3"))
    assert not nscurve.is_invariant("x + r*z")
    with pytest.raises(nscurve.NscurveError) as info:
        nscurve.descend("x + r*z")
    assert info.value.kind == "NotInvariant"


def test_sampling_is_deterministic_and_verifies():
    a = nscurve.sample_members("C2", 2, 7)
    assert a == nscurve.sample_members("C2", 2, 7)
    v = nscurve.verify_member(a[0])
    assert v["all_pass"]
    assert v["geometric_genus"] == 1
