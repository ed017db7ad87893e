import pytest

from oracles import cyclic_bar_homology_oracle
from tamloday.fgab import FgAbGroup, GroupMap
from tamloday.gsimp import (SimplicialGMap, cone, free_orbit, interval_sigma, one_vertex_circle, point,
                            reflection_circle, rotation_circle, rotation_quotient_circle, sigma_suspension,
                            suspension, two_fixed_points)
from tamloday.loday import (ConstantSimplicial, NonequivLoday, Subdivided, box_distributivity_iso,
                            cyclic_bar, diagonal_product_iso, disjoint_union_iso, free_level_iso, loday, loday_map,
                            norm_induction_iso, pushout_iso, reflection_bar_iso, relative_cyclic_iso, relative_loday,
                            relative_plain_iso, rotation_hc_iso, rotation_hc_ring_iso, rotation_quotient_iso,
                            subdivision_iso, suspension_bar_iso, twisted_cyclic_nerve, unit_box_iso, verify_iso)
from tamloday.ringobj import RingMap, RingObject
from tamloday.tambara import TambaraMorphism, burnside_tambara, constant_tambara, unit_map

zmod = RingObject.integers_mod


def dual_numbers_f2():
    """F2[x]/x^2: not solid, so slot permutations are visible."""
    g = FgAbGroup.from_invariants([2, 2])
    return RingObject.from_function(g, [1, 0], lambda i, j: [[1, 0], [0, 1]][j] if i == 0 else
                                    ([0, 1] if j == 0 else [0, 0]), name="F2[x]/x2")


@pytest.fixture(scope="module")
def c4():
    return constant_tambara(zmod(4), 2)


SPACES = {
    "reflection": lambda: reflection_circle(),
    "rotation": lambda: rotation_circle(2),
    "rotation quotient": lambda: rotation_quotient_circle(2),
    "interval": lambda: interval_sigma(),
    "suspension": lambda: suspension(two_fixed_points(2)),
    "sigma suspension": lambda: sigma_suspension(free_orbit(2)),
    "cone": lambda: cone(reflection_circle()),
}


@pytest.mark.parametrize("space", sorted(SPACES))
def test_loday_is_simplicial(space, c4):
    L = loday(SPACES[space](), c4, 2)
    assert L.identity_violations() == []
    assert L.morphism_violations() == []


def test_loday_rejects_wrong_group(c4):
    with pytest.raises(ValueError):
        loday(rotation_circle(3), c4, 2)


def test_loday_level_types(c4):
    L = loday(reflection_circle(), c4, 2)
    # level 0 is R □ R, level 1 adds N(R_e) for the free edge orbit
    assert str(L.level(0).fixed) == "Z/4"
    assert str(L.level(1).free) == "Z/4"
    assert L.complex("fixed", 2).homology(0) is not None


def test_loday_map_commutes_with_faces(c4):
    x = reflection_circle()
    f = SimplicialGMap(x, point(2), lambda k, s: ("v0", (0,) * (k + 1), 0))
    assert f.violations(2) == []
    m = loday_map(f, c4, 2)
    for k in range(1, 3):
        for i in range(k + 1):
            assert m.source.face(k, i).compose(m.level_map(k - 1)) == m.level_map(k).compose(m.target.face(k, i))


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_cyclic_bar_homology_matches_oracle(m):
    C = cyclic_bar(zmod(m), 5)
    assert C.identity_violations(3) == []
    got = [(C.homology(n).rank, tuple(C.homology(n).torsion)) for n in range(4)]
    assert got == cyclic_bar_homology_oracle(m, 3)


def test_twisted_nerve_ring_and_tambara(c4):
    H = twisted_cyclic_nerve(c4, 2)
    assert H.identity_violations() == [] and H.morphism_violations() == []
    s = dual_numbers_f2()
    assert twisted_cyclic_nerve(s, 3).identity_violations() == []


def test_subdivided_identities():
    S = Subdivided(cyclic_bar(zmod(2), 12), 3, 2)
    assert S.identity_violations() == []


@pytest.mark.parametrize("n", [2, 3])
def test_rotation_isos(n):
    r = constant_tambara(zmod(4), n)
    assert rotation_hc_iso(r, n, 2).verified
    assert rotation_quotient_iso(r, 2).verified


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ring_level_isos_on_a_non_solid_ring(n):
    s = dual_numbers_f2()
    assert rotation_hc_ring_iso(s, n, 1).verified
    if n < 4:
        assert subdivision_iso(s, n, 1).verified


def test_verifier_detects_a_wrong_subdivision_convention():
    s, n, D = dual_numbers_f2(), 3, 1
    x = rotation_circle(n)
    L = NonequivLoday(x, s, D)
    S = Subdivided(cyclic_bar(s, n * (D + 2)), n, D)

    def phi(k):
        tgt, lv = S.level(k), x.level(k)
        # the sign of the group coordinate is flipped on purpose
        maps = [tgt.inclusion((lv.address[q][1] % n) * (k + 1) + lv.address[q][0]) for q in L.points(k)]
        return L.level(k).from_factors(tgt, maps)

    rep = verify_iso(L, S, phi, D)
    assert not rep.verified
    assert ("face", 1, 1) in rep.failures


def test_verifier_detects_non_bijective_maps(c4):
    L = loday(reflection_circle(), c4, 1)

    def phi(k):
        T = L.level(k)
        two = lambda g: GroupMap.identity(g).scaled(2)
        return TambaraMorphism(T, T, two(T.free), two(T.fixed), check=False)

    rep = verify_iso(L, L, phi, 1)
    assert ("not bijective", 0) in rep.failures


def test_reflection_and_suspension_bars(c4):
    assert reflection_bar_iso(c4, 2).verified
    assert reflection_bar_iso(burnside_tambara(2), 2).verified
    c3 = constant_tambara(zmod(3), 2)
    assert suspension_bar_iso(two_fixed_points(2), c3, 2).verified
    assert suspension_bar_iso(free_orbit(2), c3, 2, flipped=True).verified


def test_free_level_and_norm_induction(c4):
    assert free_level_iso(reflection_circle(), c4, 3).verified
    assert free_level_iso(rotation_circle(2), c4, 3).verified
    assert norm_induction_iso(one_vertex_circle(2), zmod(3), constant_tambara(zmod(3), 2), 2).verified


def test_structural_isos(c4):
    D = 2
    assert disjoint_union_iso(reflection_circle(), rotation_circle(2), c4, D).verified
    assert box_distributivity_iso(reflection_circle(), c4, burnside_tambara(2), D).verified
    assert diagonal_product_iso(two_fixed_points(2), two_fixed_points(2), c4, D).verified
    assert pushout_iso(interval_sigma(), free_orbit(2), interval_sigma(),
                       lambda k, s: ("b", s[1], s[2]), lambda k, s: ("b", s[1], (s[2] + 1) % 2), c4, D).verified
    assert unit_box_iso(reflection_circle(), c4, D).verified


def test_constant_simplicial_is_trivially_simplicial(c4):
    C = ConstantSimplicial(c4, 3)
    assert C.identity_violations() == []
    assert verify_iso(C, C, lambda k: c4.identity(), 3).verified


def test_relative_constructions(c4):
    z = constant_tambara(zmod(0), 2)
    f = RingMap.from_function(zmod(0), zmod(4), lambda v: (v[0],))
    from tamloday.loday import constant_morphism
    phi = constant_morphism(f, z, c4)
    assert relative_plain_iso(phi, reflection_circle(), 2).verified
    rel = relative_loday(unit_map(c4), reflection_circle(), 1)
    assert rel.identity_violations() == [] and rel.morphism_violations() == []
    g = RingMap.from_function(zmod(4), zmod(2), lambda v: (v[0],))
    assert relative_cyclic_iso(g, 2, 2).verified
