"""Fault injection for Tambara functors: each mutation corrupts one structure map."""

from tamloday.fgab import GroupMap
from tamloday.ringobj import RingObject
from tamloday.tambara import TambaraFunctor, burnside_tambara, constant_tambara, norm_construction


def _copy(t, **kw):
    args = dict(p=t.p, free_ring=t.free_ring, fixed_ring=t.fixed_ring, res=t.res, tr=t.tr,
                norm_gens=list(t.norm_gens))
    args.update(kw)
    out = TambaraFunctor(args["p"], args["free_ring"], args["fixed_ring"], args["res"], args["tr"],
                         args["norm_gens"], name="mutant")
    return out


def corrupt_transfer(t):
    G = t.fixed
    d = t.free.orders[0]
    # smallest nonzero multiple of the unit killed by the order of the first generator
    c = next(c for c in range(1, 1000) if any(G.scale(c, t.fixed_ring.unit)) and not any(G.scale(c * d, t.fixed_ring.unit)))
    col = G.scale(c, t.fixed_ring.unit)
    bump = GroupMap(t.free, G, [col if j == 0 else G.zero() for j in range(t.free.ngens)])
    return _copy(t, tr=t.tr + bump)


def corrupt_norm_generator(t):
    gens = list(t.norm_gens)
    gens[0] = t.fixed.add(gens[0], t.fixed_ring.unit)
    return _copy(t, norm_gens=gens)


def corrupt_norm_function(t):
    out = _copy(t)
    G = t.fixed_ring
    out.norm_fn = lambda x: G.add(t.norm(x), G.mul(t.norm(x), t.norm(x)))
    return out


def corrupt_multiplication(t):
    G = t.fixed_ring
    n = G.additive.ngens
    mult = [[list(c) for c in row] for row in G.mult]
    mult[n - 1][n - 1] = list(G.additive.add(mult[n - 1][n - 1], G.unit))
    bad = RingObject(G.additive, G.unit, mult, name="mutant")
    return _copy(t, fixed_ring=bad)


MUTATIONS = {
    "transfer": corrupt_transfer,
    "norm generator": corrupt_norm_generator,
    "norm function": corrupt_norm_function,
    "fixed multiplication": corrupt_multiplication,
}


def victims():
    return {
        "A(C2)": burnside_tambara(2),
        "A(C3)": burnside_tambara(3),
        "N(Z/2)": norm_construction(RingObject.integers_mod(2), 2),
        "(Z/4)^c": constant_tambara(RingObject.integers_mod(4), 2),
        "(Z/3)^c C3": constant_tambara(RingObject.integers_mod(3), 3),
    }
