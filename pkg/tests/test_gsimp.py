import pytest

from tamloday.gsimp import (FinGSet, GMap, SimplicialGMap, cone, delta1, disjoint_union, fixed_points, free_orbit,
                            interval_sigma, one_vertex_circle, point, product, pushout, reflection_circle,
                            rotation_circle, rotation_quotient_circle, sigma_suspension, subdivide, surjections,
                            suspension, two_fixed_points, underlying, validate_simplicial_identities)


def _equivariance(x, upto):
    bad = []
    for k in range(upto + 1):
        for s in x.simplices(k):
            for g in range(x.n):
                for i in range(k + 1):
                    if k >= 1 and x.face(k, i, x.act(s, g)) != x.act(x.face(k, i, s), g):
                        bad.append(("face", k, i, s, g))
                    if x.degen(k, i, x.act(s, g)) != x.act(x.degen(k, i, s), g):
                        bad.append(("degen", k, i, s, g))
    return bad


SPACES = {
    "point": lambda: point(2),
    "free_orbit": lambda: free_orbit(3),
    "two_fixed_points": lambda: two_fixed_points(2),
    "rotation_circle_2": lambda: rotation_circle(2),
    "rotation_circle_3": lambda: rotation_circle(3),
    "rotation_circle_4": lambda: rotation_circle(4),
    "circle": lambda: one_vertex_circle(2),
    "rotation_quotient": lambda: rotation_quotient_circle(3),
    "reflection_circle": reflection_circle,
    "interval_sigma": interval_sigma,
    "delta1": lambda: delta1(2),
    "cone": lambda: cone(reflection_circle()),
    "suspension": lambda: suspension(two_fixed_points(2)),
    "sigma_suspension": lambda: sigma_suspension(free_orbit(2)),
    "product": lambda: product(rotation_circle(2), interval_sigma()),
    "disjoint": lambda: disjoint_union(reflection_circle(), free_orbit(2)),
    "subdivision": lambda: subdivide(rotation_circle(2), 2),
    "underlying": lambda: underlying(rotation_circle(3)),
    "fixed_points": lambda: fixed_points(reflection_circle()),
}


@pytest.mark.parametrize("name", sorted(SPACES))
def test_builders_are_simplicial_and_equivariant(name):
    x = SPACES[name]()
    assert validate_simplicial_identities(x, 3) == []
    assert _equivariance(x, 2) == []


def test_level_sizes():
    assert len(rotation_circle(3).simplices(2)) == 3 * 3
    assert [o.size for o in reflection_circle().level(1).orbits] == [1, 1, 2]
    assert len(point(2).simplices(4)) == 1
    assert surjections(3, 1) == [(0, 1, 1, 1), (0, 0, 1, 1), (0, 0, 0, 1)]


def test_rotation_circle_faces():
    x = rotation_circle(3)
    e = ("e", (0, 1), 0)
    assert x.face(1, 0, e) == ("x", (0,), 0)
    assert x.face(1, 1, e) == ("x", (0,), 2)


def test_gmap_composition():
    a = FinGSet.from_orbits(2, [2, 1])
    b = FinGSet.from_orbits(2, [1])
    f = GMap(a, b, [(0, 0), (0, 0)])
    assert f.compose(GMap(b, b, [(0, 0)])) == f
    with pytest.raises(ValueError):
        GMap(b, a, [(0, 0)])  # fixed point to free orbit


def test_pushout_of_intervals():
    I, S0 = interval_sigma(), free_orbit(2)
    P = pushout(I, S0, I, lambda k, s: ("b", s[1], s[2]), lambda k, s: ("b", s[1], (s[2] + 1) % 2))
    assert validate_simplicial_identities(P, 3) == []
    # two fixed centers, one free orbit of endpoints, two free orbits of edges
    assert sorted(o.size for o in P.level(0).orbits) == [1, 1, 2]
    # degenerate vertices (1 + 2 + 1) and two free orbits of edges
    assert len(P.simplices(1)) == 8


def test_pushout_rejects_non_injective():
    P = pushout(point(2), two_fixed_points(2), point(2), lambda k, s: ("v0", s[1], 0), lambda k, s: ("v0", s[1], 0))
    with pytest.raises(ValueError):
        P.level(0)


def test_simplicial_gmap_violations():
    x = reflection_circle()
    pt = point(2)
    collapse = SimplicialGMap(x, pt, lambda k, s: ("v0", (0,) * (k + 1), 0))
    assert collapse.violations(3) == []
    wrong = SimplicialGMap(x, x, lambda k, s: ("x0", (0,) * (k + 1), 0) if s[0] == "x1" else s)
    assert wrong.violations(2)


def test_subdivision_shape():
    x = subdivide(one_vertex_circle(1), 3)
    assert len(x.simplices(0)) == len(one_vertex_circle(1).simplices(2))
