import pytest

from tamloday.gsimp import validate_simplicial_identities
from tamloday.parse import ParseError, builtin_ring, load_ring, parse_coeff, parse_group, parse_ring, parse_rings, parse_space
from tamloday.ringobj import check_ring_axioms

Z4 = "ring Z4 { generators: e; relations: 4*e; unit: e; mult: e*e = e; }"
BURNSIDE = "ring B { generators: one, t; relations:; unit: one; mult: t*t = 2*t; one*t = t; }"


def test_parse_z4():
    r = parse_ring(Z4)
    assert r.name == "Z4"
    assert str(r.additive) == "Z/4"
    assert check_ring_axioms(r) == []


def test_parse_burnside_fills_missing_products():
    r = parse_ring(BURNSIDE)
    assert str(r.additive) == "Z^2"
    assert check_ring_axioms(r) == []
    t = (0, 1)
    assert r.mul(t, t) == (0, 2)


def test_missing_unit():
    with pytest.raises(ParseError, match="unit required"):
        parse_ring("ring R { generators: e; relations:; mult: e*e = e; }")


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_ring("ring R {\n  generators e; }")
    assert err.value.line == 2
    assert err.value.col is not None


def test_axiom_failure_rejected():
    with pytest.raises(ParseError):
        parse_ring("ring R { generators: e; relations:; unit: e; mult: e*e = 2*e; }")


def test_action_block():
    text = ("ring S { generators: a, b; relations:; unit: a + b; mult: a*a = a; b*b = b; a*b = 0; "
            "action: a -> b; b -> a; }")
    r = parse_ring(text)
    assert r.order == 2
    assert r.apply_aut((1, 0)) == (0, 1)


def test_multiple_rings():
    rings = parse_rings(Z4 + "\n" + BURNSIDE)
    assert list(rings) == ["Z4", "B"]


@pytest.mark.parametrize("source,name", [("Z", "Z"), ("Z/4", "Z/4"), ("z3", "Z/3"), ("z2.ring", "Z/2"),
                                       ("some/dir/z5.ring", "Z/5")])
def test_builtin_rings(source, name):
    assert builtin_ring(source).name == name


def test_load_ring_prefers_files(tmp_path):
    f = tmp_path / "z3.ring"
    f.write_text(Z4)
    ring, src = load_ring(str(f))
    assert str(ring.additive) == "Z/4" and src == Z4
    ring, src = load_ring("z3.ring")
    assert src == "builtin:Z/3"
    with pytest.raises(ParseError):
        load_ring("nonsense")


@pytest.mark.parametrize("text,n,sizes0", [
    ("point", 2, [1]),
    ("free_orbit", 3, [3]),
    ("reflection_circle()", 2, [1, 1]),
    ("rotation_circle(3)", 3, [3]),
    ("rotation_quotient_circle(2)", 2, [1]),
    ("cone(reflection_circle())", 2, [1, 1, 1]),
    ("disjoint(point, free_orbit)", 2, [1, 2]),
    ("product(two_fixed_points, free_orbit)", 2, [2, 2]),
    ("pushout(interval_sigma(), free_orbit, interval_sigma())", 2, [1, 1, 2]),
])
def test_space_expressions(text, n, sizes0):
    x = parse_space(text, n)
    assert sorted(x.level(0).orbit_sizes()) == sorted(sizes0)
    assert validate_simplicial_identities(x, 2) == []


@pytest.mark.parametrize("text,n", [
    ("rotation_circle(3)", 2), ("reflection_circle()", 3), ("cone()", 2), ("unknown", 2),
    ("point extra", 2), ("product(point)", 2), ("point$", 2), ("pushout(point, delta1, point)", 2),
])
def test_bad_space_expressions(text, n):
    with pytest.raises(ParseError):
        parse_space(text, n)


def test_coefficients():
    t, key = parse_coeff("burnside", 3)
    assert key == "burnside" and str(t.fixed) == "Z^2"
    t, key = parse_coeff("constant:Z/4", 2)
    assert key == "constant:builtin:Z/4"
    t, key = parse_coeff("norm:z2", 2)
    assert str(t.fixed) == "Z/4"
    t, key = parse_coeff("box(constant:Z/4, burnside)", 2)
    assert key == "box(constant:builtin:Z/4,burnside)" and str(t.fixed) == "Z/4"
    for bad, p in (("constant:Z/4", 4), ("mystery", 2), ("box(burnside)", 2)):
        with pytest.raises(ParseError):
            parse_coeff(bad, p)


def test_group():
    assert parse_group("C2") == 2 and parse_group(" c5 ") == 5
    for bad in ("C0", "D3", "2"):
        with pytest.raises(ParseError):
            parse_group(bad)
