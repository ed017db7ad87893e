import pytest
from hypothesis import given, settings, strategies as st

from tamloday.gsimp import (SimplicialGMap, free_orbit, point, reflection_circle, rotation_circle,
                            two_fixed_points)
from tamloday.homotopy import (chain_homotopy_violations, endpoints_agree, homology_groups, pi_0_tambara, pi_n,
                               pi_range)
from tamloday.loday import cone_contraction, homotopy_source, loday, loday_simplicial_homotopy
from tamloday.mackey import check_mackey_axioms
from tamloday.ringobj import RingObject
from tamloday.tambara import burnside_tambara, check_tambara_axioms, constant_tambara

zmod = RingObject.integers_mod

BASES = {
    "point": lambda: point(2),
    "two fixed points": lambda: two_fixed_points(2),
    "free orbit": lambda: free_orbit(2),
    "reflection circle": reflection_circle,
    "rotation circle": lambda: rotation_circle(2),
}
COEFFS = {
    "Z/4": lambda: constant_tambara(zmod(4), 2),
    "Z/3": lambda: constant_tambara(zmod(3), 2),
    "Z": lambda: constant_tambara(zmod(0), 2),
    "A": lambda: burnside_tambara(2),
}


def test_pi_of_a_point_is_the_coefficients():
    r = constant_tambara(zmod(4), 2)
    ps = pi_range(loday(point(2), r, 3), 2)
    assert [str(p.fixed) for p in ps] == ["Z/4", "0", "0"]
    assert [str(p.free) for p in ps] == ["Z/4", "0", "0"]
    assert check_mackey_axioms(ps[0].mackey) == []


def test_pi_needs_enough_degrees():
    with pytest.raises(ValueError):
        pi_n(loday(point(2), burnside_tambara(2), 1), 1)


def test_pi_zero_tambara_matches_h0():
    L = loday(reflection_circle(), constant_tambara(zmod(3), 2), 2)
    p0 = pi_0_tambara(L)
    assert check_tambara_axioms(p0) == []
    h0 = pi_n(L, 0)
    assert p0.fixed.orders == h0.fixed.orders and p0.free.orders == h0.free.orders


def test_to_dict_fields():
    d = pi_n(loday(point(2), burnside_tambara(2), 1), 0).to_dict()
    assert sorted(d) == ["degree", "fixed", "free", "res", "tr", "weyl"]
    assert d["fixed"] == {"rank": 2, "torsion": [], "str": "Z^2"}


def test_homology_groups_of_rotation_circle():
    gs = homology_groups(loday(rotation_circle(2), constant_tambara(zmod(0), 2), 3), 2, "free")
    assert [str(g) for g in gs] == ["Z", "0", "0"]


def test_homotopy_source_required():
    from tamloday.gsimp import delta1, product
    x = point(2)
    plain = product(x, delta1(2))
    h = SimplicialGMap(plain, x, lambda k, s: s[0])
    with pytest.raises(ValueError):
        loday_simplicial_homotopy(h, burnside_tambara(2), 1)


def test_constant_homotopy_has_equal_ends():
    x = reflection_circle()
    src = homotopy_source(x)
    h = SimplicialGMap(src, x, lambda k, s: s[0])
    assert h.violations(2) == []
    hd = loday_simplicial_homotopy(h, constant_tambara(zmod(4), 2), 2)
    assert hd.failures == []
    for k in range(3):
        assert hd.endpoint(k, 0) == hd.endpoint(k, 1)


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(sorted(BASES)), st.sampled_from(sorted(COEFFS)))
def test_cone_contraction_endpoints_agree_on_pi(base, coeff):
    h = cone_contraction(BASES[base]())
    assert h.violations(2) == []
    r = COEFFS[coeff]()
    hd = loday_simplicial_homotopy(h, r, 3)
    assert hd.failures == []
    assert endpoints_agree(hd, 1) == []
    assert chain_homotopy_violations(hd, 2) == []
    # the cone is contractible: π_* is the coefficients in degree 0
    ps = pi_range(hd.target, 2)
    assert ps[0].fixed.orders == r.fixed.orders and ps[0].free.orders == r.free.orders
    assert all(p.is_zero() for p in ps[1:])
