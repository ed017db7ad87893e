"""Tambara functors for C_p: constant and Burnside functors, the norm
construction, box products, tensoring with finite C_p-sets, quotients by
Tambara ideals and relative box products.

Conventions.  The Weyl generator ``w`` acts on the free level; on a tensor
power ``S^{⊗p}`` it is the shift ``x_0⊗x_1⊗...⊗x_{p-1} ↦ x_1⊗...⊗x_{p-1}⊗x_0``,
so slot ``s`` of the free level of a free orbit factor is the tensor factor
sitting at the point ``γ^{-s}`` times the orbit basepoint.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Sequence

from .fgab import DirectSum, Elem, FgAbGroup, GroupMap, Subquotient, coinvariants, hnf_basis
from .gsimp import FinGSet, GMap
from .mackey import BoxPresentation, MackeyFunctor, MackeyMorphism, Violation, check_mackey_axioms
from .ringobj import RingMap, RingObject, TensorRing, burnside_ring, check_ring_axioms, cyclic_tensor_power


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


# ---------------------------------------------------------------------------
# Norm expansion
# ---------------------------------------------------------------------------


def _rotation_reps(m: int, p: int):
    for word in iproduct(range(m), repeat=p):
        if len(set(word)) == 1:
            continue
        if all(word <= word[i:] + word[:i] for i in range(1, p)):
            yield word


def multiplicative_extension(p: int, free: RingObject, tr: Callable, fixed: FgAbGroup,
                             terms: Sequence[tuple[int, Sequence[int], Sequence[int]]]) -> Elem:
    """Norm of ``Σ c_k a_k`` from the norms ``N_k`` of the ``a_k``.

    ``terms`` holds triples ``(c_k, a_k, N_k)``.  Constant words contribute
    ``c N + ((c^p - c)/p) tr(Π_i w^i a)``; every free C_p-orbit of words
    ``f`` contributes ``Π_i c_{f(i)} · tr(Π_i w^i a_{f(i)})``.
    """
    terms = [(c, tuple(a), tuple(n)) for c, a, n in terms if c and any(a)]
    acc = fixed.zero()
    if not terms:
        return acc
    orbit_cache: dict[int, list[Elem]] = {}

    def shifts(k):
        if k not in orbit_cache:
            a = terms[k][1]
            out = [a]
            for _ in range(p - 1):
                out.append(free.apply_aut(out[-1], 1))
            orbit_cache[k] = out
        return orbit_cache[k]

    free_part = free.zero()
    for k, (c, a, n) in enumerate(terms):
        acc = fixed.add(acc, fixed.scale(c, n))
        extra = (c ** p - c) // p
        if extra:
            free_part = free.add(free_part, free.scale(extra, free.prod(shifts(k))))
    for word in _rotation_reps(len(terms), p):
        coef = 1
        for k in word:
            coef *= terms[k][0]
        prod = free.prod(shifts(k)[i] for i, k in enumerate(word))
        free_part = free.add(free_part, free.scale(coef, prod))
    return fixed.add(acc, tr(free_part))


# ---------------------------------------------------------------------------
# Tambara functors and morphisms
# ---------------------------------------------------------------------------


class TambaraFunctor:
    """Two-level C_p-Tambara functor.

    ``free_ring`` carries the Weyl action as its automorphism (order ``p``).
    ``norm_gens[j]`` is the norm of canonical free-level generator ``j``;
    the norm of other elements is its multiplicative extension.  ``norm_fn``
    overrides the norm entirely (used to inject faults in tests).
    """

    def __init__(self, p: int, free_ring: RingObject, fixed_ring: RingObject, res: GroupMap, tr: GroupMap,
                 norm_gens: Sequence[Sequence[int]], name: str | None = None):
        self.p = p
        self.free_ring = free_ring
        self.fixed_ring = fixed_ring
        if free_ring.automorphism is None:
            free_ring.automorphism = GroupMap.identity(free_ring.additive)
            free_ring.order = p
        self.res = res
        self.tr = tr
        self.norm_gens = [fixed_ring.additive.normalize(n) for n in norm_gens]
        self.norm_fn: Callable | None = None
        self.name = name
        self._norm_construction: "NormTambara | None" = None

    @property
    def free(self) -> FgAbGroup:
        return self.free_ring.additive

    @property
    def fixed(self) -> FgAbGroup:
        return self.fixed_ring.additive

    @property
    def weyl(self) -> GroupMap:
        return self.free_ring.automorphism

    def w(self, x, k: int = 1) -> Elem:
        return self.free_ring.apply_aut(x, k)

    def orbit_sum(self, x) -> Elem:
        return self.free.combine((1, self.w(x, i)) for i in range(self.p))

    def orbit_product(self, x) -> Elem:
        return self.free_ring.prod(self.w(x, i) for i in range(self.p))

    def extend_norm(self, terms) -> Elem:
        return multiplicative_extension(self.p, self.free_ring, self.tr, self.fixed, terms)

    def norm(self, x) -> Elem:
        if self.norm_fn is not None:
            return self.fixed.normalize(self.norm_fn(x))
        x = self.free.normalize(x)
        return self.extend_norm([(c, self.free.basis(j), self.norm_gens[j]) for j, c in enumerate(x) if c])

    def mackey(self) -> MackeyFunctor:
        return MackeyFunctor(self.p, self.free, self.weyl, self.fixed, self.res, self.tr)

    def identity(self) -> "TambaraMorphism":
        return TambaraMorphism(self, self, GroupMap.identity(self.free), GroupMap.identity(self.fixed), check=False)

    def norm_construction_of_free(self) -> "NormTambara":
        """``N_e^{C_p}`` of the underlying plain ring of the free level (cached)."""
        if self._norm_construction is None:
            self._norm_construction = norm_construction(plain_ring(self.free_ring), self.p)
        return self._norm_construction

    def summary(self) -> str:
        return f"fixed {self.fixed}, free {self.free}"

    def __repr__(self) -> str:
        return f"TambaraFunctor({self.name or ''} p={self.p}; {self.summary()})"


def plain_ring(r: RingObject) -> RingObject:
    return RingObject(r.additive, r.unit, r.mult, name=r.name)


def check_tambara_axioms(t: TambaraFunctor, exhaustive_limit: int = 64) -> list[Violation]:
    """All violated Tambara axioms with witnesses; empty iff ``t`` passes."""
    out: list[Violation] = []
    p = t.p
    for v in check_ring_axioms(t.free_ring):
        out.append(Violation(f"free ring {v.axiom}", v.witness))
    for v in check_ring_axioms(t.fixed_ring):
        out.append(Violation(f"fixed ring {v.axiom}", v.witness))
    out.extend(check_mackey_axioms(t.mackey()))
    if out:
        return out
    F, G = t.free_ring, t.fixed_ring
    fgens, ggens = t.free.gens(), t.fixed.gens()
    if t.res(G.unit) != F.unit:
        out.append(Violation("res unit", (tuple(G.unit),)))
    for i, a in enumerate(ggens):
        for j, b in enumerate(ggens):
            if j >= i and t.res(G.mul(a, b)) != F.mul(t.res(a), t.res(b)):
                out.append(Violation("res multiplicative", (i, j)))
        for j, x in enumerate(fgens):
            if G.mul(a, t.tr(x)) != t.tr(F.mul(t.res(a), x)):
                out.append(Violation("Frobenius", (i, j)))
    if t.norm(F.unit) != G.unit:
        out.append(Violation("norm(1) = 1", (tuple(F.unit),)))
    if any(t.norm(F.zero())):
        out.append(Violation("norm(0) = 0", (tuple(F.zero()),)))
    for j, x in enumerate(fgens):
        if t.res(t.norm(x)) != t.orbit_product(x):
            out.append(Violation("res∘norm = Π w^i", (j,)))
        if t.norm(t.w(x)) != t.norm(x):
            out.append(Violation("norm∘w = norm", (j,)))
        d = t.free.orders[j]
        if d:
            expect = G.add(G.scale(d, t.norm(x)), t.tr(F.scale((d ** p - d) // p, t.orbit_product(x))))
            if any(expect):
                out.append(Violation("norm well-defined on torsion", (j,)))
        for c in (-1, 2, 3):
            lhs = t.norm(F.scale(c, x))
            rhs = G.add(G.scale(c, t.norm(x)), t.tr(F.scale((c ** p - c) // p, t.orbit_product(x))))
            if lhs != rhs:
                out.append(Violation("scalar rule", (j, c)))
    for i, x in enumerate(fgens):
        for j, y in enumerate(fgens):
            if j >= i and t.norm(F.mul(x, y)) != G.mul(t.norm(x), t.norm(y)):
                out.append(Violation("norm multiplicative", (i, j)))
    if t.free.is_finite() and t.free.order() <= exhaustive_limit:
        pairs = [(x, y) for x in t.free.elements() for y in t.free.elements()]
    else:
        pairs = [(x, y) for x in fgens for y in fgens]
        pairs += [(F.add(x, y), z) for x in fgens for y in fgens for z in fgens[:2]]
    for x, y in pairs:
        lhs = t.norm(F.add(x, y))
        rhs = multiplicative_extension(p, F, t.tr, t.fixed, [(1, x, t.norm(x)), (1, y, t.norm(y))])
        if lhs != rhs:
            out.append(Violation("Tambara reciprocity", (x, y)))
            break
    return out


class TambaraMorphism:
    def __init__(self, source: TambaraFunctor, target: TambaraFunctor, fe: GroupMap, fG: GroupMap, check: bool = True):
        self.source = source
        self.target = target
        self.fe = fe
        self.fG = fG
        if check:
            bad = self.violations()
            if bad:
                raise ValueError(f"not a Tambara morphism: {bad[0]}")

    def violations(self) -> list[Violation]:
        s, t = self.source, self.target
        out = list(MackeyMorphism(s.mackey(), t.mackey(), self.fe, self.fG, check=False).violations())
        out += [Violation(f"free {v.axiom}", v.witness) for v in RingMap(s.free_ring, t.free_ring, self.fe, check=False).violations()]
        out += [Violation(f"fixed {v.axiom}", v.witness) for v in RingMap(s.fixed_ring, t.fixed_ring, self.fG, check=False).violations()]
        for j, x in enumerate(s.free.gens()):
            if self.fG(s.norm(x)) != t.norm(self.fe(x)):
                out.append(Violation("norm", (j,)))
        return out

    def compose(self, other: "TambaraMorphism") -> "TambaraMorphism":
        """``other ∘ self``."""
        return TambaraMorphism(self.source, other.target, self.fe.compose(other.fe), self.fG.compose(other.fG), check=False)

    def is_isomorphism(self) -> bool:
        return self.fe.is_isomorphism() and self.fG.is_isomorphism()

    def inverse(self) -> "TambaraMorphism":
        return TambaraMorphism(self.target, self.source, self.fe.inverse(), self.fG.inverse(), check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, TambaraMorphism) and self.fe == other.fe and self.fG == other.fG

    def __hash__(self):
        return hash((self.fe, self.fG))


# ---------------------------------------------------------------------------
# Constant and Burnside functors
# ---------------------------------------------------------------------------


def constant_tambara(r: RingObject, p: int) -> TambaraFunctor:
    """``R^c``: both levels ``R``, ``res = id``, ``tr = ·p``, ``norm(a) = a^p``."""
    if r.automorphism is not None and not r.automorphism.is_identity_like():
        raise ValueError("constant Tambara functor needs a ring with trivial action")
    free = plain_ring(r)
    fixed = plain_ring(r)
    ident = GroupMap.identity(r.additive)
    norms = [r.power(e, p) for e in r.additive.gens()]
    name = f"({r.name})^c" if r.name else None
    return TambaraFunctor(p, free, fixed, ident, ident.scaled(p), norms, name=name)


def _is_identity_like(self: GroupMap) -> bool:
    return self.source.orders == self.target.orders and all(
        self(g) == g for g in self.source.gens())


GroupMap.is_identity_like = _is_identity_like


def burnside_tambara(p: int) -> TambaraFunctor:
    """``A``: fixed level ``Z{1, t}`` with ``t^2 = p t``, free level ``Z``."""
    free = RingObject.integers()
    fixed = burnside_ring(p)
    res = GroupMap(fixed.additive, free.additive, [[1], [p]])
    tr = GroupMap(free.additive, fixed.additive, [[0, 1]])
    return TambaraFunctor(p, free, fixed, res, tr, [(1, 0)], name="A")


# ---------------------------------------------------------------------------
# The norm construction N_e^{C_p}
# ---------------------------------------------------------------------------


class NormTambara(TambaraFunctor):
    """``N_e^{C_p}(S)``.

    The fixed level is presented by symbols ``N(e_j)`` for the canonical
    generators of ``S`` together with the C_p-coinvariants of ``S^{⊗p}``,
    subject to ``d N(e) + ((d^p - d)/p) [e^{⊗p}] = 0`` for ``e`` of order ``d``.
    """

    def __init__(self, s: RingObject, p: int):
        if not is_prime(p):
            raise ValueError("the norm construction needs a prime p")
        self.base = s
        self.p = p
        free: TensorRing = cyclic_tensor_power(plain_ring(s), p)
        self.tensor = free
        F = free.additive
        self.coinv = coinvariants(F, free.automorphism)
        m = s.additive.ngens
        self.sum = DirectSum([FgAbGroup.free(m), self.coinv.group])
        self.powers = [free.elementary([e] * p) for e in s.additive.gens()]
        rels = []
        for j, d in enumerate(s.additive.orders):
            if d:
                v = [0] * m
                v[j] = d
                lhs = self.sum.inclusion(0, v)
                rhs = self.sum.inclusion(1, self.coinv.project(F.scale((d ** p - d) // p, self.powers[j])))
                rels.append(self.sum.group.add(lhs, rhs))
        self.quotient = Subquotient(self.sum.group, self.sum.group.gens(), rels)
        G = self.quotient.group
        self.symbols = [self.quotient.project(self.sum.inclusion(0, FgAbGroup.free(m).basis(j))) for j in range(m)]

        def tr_class(z):
            return self.quotient.project(self.sum.inclusion(1, self.coinv.project(z)))

        self._tr_class = tr_class
        tr = GroupMap.from_function(F, G, tr_class)
        self._tr = tr
        self._free_ring = free
        self.base_norm_cache: dict[Elem, Elem] = {}
        slot0 = [free.slot(0, e) for e in s.additive.gens()]
        self._slot0 = slot0

        def res_fn(q):
            n, z = self.decompose(q)
            acc = F.combine(zip(n, self.powers))
            return F.add(acc, F.combine((1, free.apply_aut(z, i)) for i in range(p)))

        def mult(i, j):
            gi, gj = G.basis(i), G.basis(j)
            n1, z1 = self.decompose(gi)
            n2, z2 = self.decompose(gj)
            acc = G.zero()
            for a, c1 in enumerate(n1):
                if not c1:
                    continue
                for b, c2 in enumerate(n2):
                    if c2:
                        acc = G.add(acc, G.scale(c1 * c2, self.base_norm(s.mult[a][b])))
            zz = F.combine([(c, free.mul(self.powers[a], z2)) for a, c in enumerate(n1) if c]
                           + [(c, free.mul(self.powers[b], z1)) for b, c in enumerate(n2) if c])
            orbit = F.combine((1, free.apply_aut(z2, k)) for k in range(p))
            zz = F.add(zz, free.mul(z1, orbit))
            return G.add(acc, tr_class(zz))

        fixed = RingObject.from_function(G, self.base_norm(s.unit), mult)
        res = GroupMap.from_function(G, F, res_fn)
        super().__init__(p, free, fixed, res, tr, [], name=f"N({s.name})" if s.name else "N(S)")
        self.norm_gens = [self._norm_of_free_gen(j) for j in range(F.ngens)]

    def decompose(self, q) -> tuple[list[int], Elem]:
        """``q = Σ n_j N(e_j) + [z]``; returns ``(n, z)``."""
        d = self.quotient.lift(q)
        n = list(self.sum.component(0, d))
        z = self.coinv.lift(self.sum.component(1, d))
        return n, z

    def base_norm(self, x) -> Elem:
        """``N(x ⊗ 1 ⊗ ... ⊗ 1)`` for ``x`` in the base ring."""
        x = self.base.additive.normalize(x)
        if x not in self.base_norm_cache:
            self.base_norm_cache[x] = multiplicative_extension(
                self.p, self._free_ring, self._tr, self.quotient.group,
                [(c, self._slot0[j], self.symbols[j]) for j, c in enumerate(x) if c])
        return self.base_norm_cache[x]

    def _norm_of_free_gen(self, i: int) -> Elem:
        s, free = self.base, self._free_ring
        terms = []
        for c, t in free.tp.expand_gen(i):
            factors = [s.additive.basis(j) for j in t]
            terms.append((c, free.elementary(factors), self.base_norm(s.prod(factors))))
        return multiplicative_extension(self.p, free, self._tr, self.quotient.group, terms)


def norm_construction(s: RingObject, p: int) -> NormTambara:
    return NormTambara(s, p)


def from_norm(nt: NormTambara, target: TambaraFunctor, phi: Callable[[Elem], Elem]) -> TambaraMorphism:
    """The Tambara map ``N(S) -> T`` adjoint to a ring map ``phi: S -> T_e``.

    Free level: ``x_0⊗...⊗x_{p-1} ↦ Π_s w^{-s} phi(x_s)``; fixed level:
    ``N(e_j) ↦ norm(phi(e_j))`` and ``[z] ↦ tr(free image of z)``.
    """
    p = nt.p
    s = nt.base
    images = [target.free.normalize(phi(e)) for e in s.additive.gens()]
    maps = [(lambda x, k=k: target.w(target.free.combine(zip(x, images)), -k)) for k in range(p)]
    fe = nt.tensor.from_factors(target.free_ring, maps).gmap
    sym_images = [target.norm(img) for img in images]

    def fixed(q):
        n, z = nt.decompose(q)
        acc = target.fixed.combine(zip(n, sym_images))
        return target.fixed.add(acc, target.tr(fe(z)))

    fG = GroupMap.from_function(nt.fixed, target.fixed, fixed)
    return TambaraMorphism(nt, target, fe, fG, check=False)


def counit(r: TambaraFunctor) -> TambaraMorphism:
    """``N_e^{C_p}(R_e) -> R``."""
    nt = r.norm_construction_of_free()
    return from_norm(nt, r, lambda x: x)


def weyl_automorphism(t: TambaraFunctor, k: int) -> TambaraMorphism:
    fe = GroupMap.from_function(t.free, t.free, lambda x: t.w(x, k))
    return TambaraMorphism(t, t, fe, GroupMap.identity(t.fixed), check=False)


def unit_map(t: TambaraFunctor) -> TambaraMorphism:
    """The unique map ``A -> T``."""
    a = burnside_tambara(t.p)
    fe = GroupMap(a.free, t.free, [t.free_ring.unit])
    fG = GroupMap(a.fixed, t.fixed, [t.fixed_ring.unit, t.tr(t.free_ring.unit)])
    return TambaraMorphism(a, t, fe, fG, check=False)


# ---------------------------------------------------------------------------
# Box products
# ---------------------------------------------------------------------------


class BoxTambara(TambaraFunctor):
    """``A □ B`` with the Lewis presentation of the fixed level."""

    def __init__(self, a: TambaraFunctor, b: TambaraFunctor):
        if a.p != b.p:
            raise ValueError("mismatched primes")
        p = a.p
        self.left, self.right = a, b
        pres = BoxPresentation(a.mackey(), b.mackey())
        self.pres = pres
        free = TensorRing([a.free_ring, b.free_ring])
        free.automorphism = pres.weyl
        free.order = p
        F = free.additive
        G = pres.fixed
        res = pres.res_map()

        def mult(i, j):
            pairs1, z1 = pres.decompose(G.basis(i))
            pairs2, z2 = pres.decompose(G.basis(j))
            acc = G.zero()
            for c1, (a1, b1) in pairs1:
                for c2, (a2, b2) in pairs2:
                    acc = G.add(acc, G.scale(c1 * c2, pres.pair(a.fixed_ring.mult[a1][a2], b.fixed_ring.mult[b1][b2])))
            zz = F.zero()
            for pairs, z in ((pairs1, z2), (pairs2, z1)):
                if any(z):
                    for c, (ai, bj) in pairs:
                        r = free.elementary([a.res(a.fixed.basis(ai)), b.res(b.fixed.basis(bj))])
                        zz = F.add(zz, F.scale(c, free.mul(r, z)))
            if any(z1) and any(z2):
                zz = F.add(zz, free.mul(z1, F.combine((1, free.apply_aut(z2, k)) for k in range(p))))
            return G.add(acc, pres.tr_class(zz))

        fixed = RingObject.from_function(G, pres.pair(a.fixed_ring.unit, b.fixed_ring.unit), mult)
        norm_gens = []
        for i in range(F.ngens):
            terms = []
            for c, (x, y) in free.tp.expand_gen(i):
                ex, ey = a.free.basis(x), b.free.basis(y)
                terms.append((c, free.elementary([ex, ey]), pres.pair(a.norm(ex), b.norm(ey))))
            norm_gens.append(multiplicative_extension(p, free, pres.tr_map(), G, terms))
        super().__init__(p, free, fixed, res, pres.tr_map(), norm_gens, name=f"{a.name}□{b.name}")

    def inclusion_left(self) -> TambaraMorphism:
        a, b = self.left, self.right
        fe = GroupMap.from_function(a.free, self.free, lambda x: self.free_ring.elementary([x, b.free_ring.unit]))
        fG = GroupMap.from_function(a.fixed, self.fixed, lambda x: self.pres.pair(x, b.fixed_ring.unit))
        return TambaraMorphism(a, self, fe, fG, check=False)

    def inclusion_right(self) -> TambaraMorphism:
        a, b = self.left, self.right
        fe = GroupMap.from_function(b.free, self.free, lambda y: self.free_ring.elementary([a.free_ring.unit, y]))
        fG = GroupMap.from_function(b.fixed, self.fixed, lambda y: self.pres.pair(a.fixed_ring.unit, y))
        return TambaraMorphism(b, self, fe, fG, check=False)

    def from_pair(self, f: TambaraMorphism, g: TambaraMorphism) -> TambaraMorphism:
        """The map out of the coproduct determined by ``f: A -> T`` and ``g: B -> T``."""
        t = f.target
        fe = self.free_ring.from_factors(t.free_ring, [f.fe, g.fe]).gmap
        pres = self.pres

        def fixed(q):
            pairs, z = pres.decompose(q)
            acc = t.fixed.combine(
                (c, t.fixed_ring.mul(f.fG(self.left.fixed.basis(i)), g.fG(self.right.fixed.basis(j))))
                for c, (i, j) in pairs)
            return t.fixed.add(acc, t.tr(fe(z)))

        fG = GroupMap.from_function(self.fixed, t.fixed, fixed)
        return TambaraMorphism(self, t, fe, fG, check=False)


def box_tambara(a: TambaraFunctor, b: TambaraFunctor) -> BoxTambara:
    return BoxTambara(a, b)


_BOX_CACHE: dict[tuple[int, ...], tuple[list, "BoxProduct"]] = {}


class BoxProduct:
    """Iterated box product ``((F_0 □ F_1) □ F_2) □ ...`` with its universal property.

    With no factors this is the Burnside functor, with one factor the factor itself.
    """

    def __init__(self, factors: Sequence[TambaraFunctor], p: int | None = None):
        self.factors = list(factors)
        m = len(self.factors)
        if m == 0:
            if p is None:
                raise ValueError("empty box product needs p")
            self.T = burnside_tambara(p)
            self.prev = None
        elif m == 1:
            self.T = self.factors[0]
            self.prev = None
        else:
            self.prev = BoxProduct.of(self.factors[:-1])
            self.T = BoxTambara(self.prev.T, self.factors[-1])
        self.p = self.T.p
        self._incl: dict[int, TambaraMorphism] = {}

    @classmethod
    def of(cls, factors: Sequence[TambaraFunctor], p: int | None = None) -> "BoxProduct":
        key = tuple(id(f) for f in factors) + ((p,) if not factors else ())
        hit = _BOX_CACHE.get(key)
        if hit is None:
            hit = (list(factors), cls(factors, p))
            _BOX_CACHE[key] = hit
        return hit[1]

    def inclusion(self, j: int) -> TambaraMorphism:
        if j not in self._incl:
            m = len(self.factors)
            if m == 1:
                inc = self.T.identity()
            elif j == m - 1:
                inc = self.T.inclusion_right()
            else:
                inc = self.prev.inclusion(j).compose(self.T.inclusion_left())
            self._incl[j] = inc
        return self._incl[j]

    def from_factors(self, target: TambaraFunctor, maps: Sequence[TambaraMorphism]) -> TambaraMorphism:
        m = len(self.factors)
        if len(maps) != m:
            raise ValueError("need one map per factor")
        if m == 0:
            return unit_map(target)
        if m == 1:
            return maps[0]
        g = self.prev.from_factors(target, maps[:-1])
        return self.T.from_pair(g, maps[-1])


def clear_caches() -> None:
    _BOX_CACHE.clear()


# ---------------------------------------------------------------------------
# Tensoring with finite G-sets
# ---------------------------------------------------------------------------


def orbit_factor(r: TambaraFunctor, size: int) -> TambaraFunctor:
    if size == 1:
        return r
    if size != r.p:
        raise ValueError("orbit size must be 1 or p")
    return r.norm_construction_of_free()


def tensor_gset(x: FinGSet, r: TambaraFunctor) -> BoxProduct:
    """``X ⊗ R`` as the box over orbits: ``R`` for fixed orbits, ``N(R_e)`` for free ones."""
    if x.n != r.p:
        raise ValueError("group order mismatch")
    return BoxProduct.of([orbit_factor(r, o.size) for o in x.orbits], r.p)


def orbit_maps(f: GMap, r: TambaraFunctor, target: BoxProduct) -> list[TambaraMorphism]:
    """Per source orbit, the Tambara map from its factor into ``target``."""
    maps = []
    for so, (t, k) in zip(f.source.orbits, f.data):
        to = f.target.orbits[t]
        inc = target.inclusion(t)
        if so.size == 1:
            if to.size != 1:
                raise ValueError("a fixed orbit cannot map to a free orbit")
            maps.append(inc)
        elif to.size == 1:
            nt = r.norm_construction_of_free()
            maps.append(from_norm(nt, target.T, lambda x, inc=inc: inc.fe(x)))
        else:
            nt = r.norm_construction_of_free()
            tgt = target.T
            maps.append(from_norm(nt, tgt, lambda x, inc=inc, k=k, nt=nt: tgt.w(inc.fe(nt.tensor.slot(0, x)), k)))
    return maps


def induced_map(f: GMap, r: TambaraFunctor, source: BoxProduct | None = None,
                target: BoxProduct | None = None) -> TambaraMorphism:
    """``f ⊗ R : X ⊗ R -> Y ⊗ R``."""
    source = source or tensor_gset(f.source, r)
    target = target or tensor_gset(f.target, r)
    return source.from_factors(target.T, orbit_maps(f, r, target))


def naturality_map(phi: TambaraMorphism, x: FinGSet) -> TambaraMorphism:
    """``X ⊗ φ : X ⊗ R -> X ⊗ R'`` for a Tambara map ``φ: R -> R'``."""
    r, r2 = phi.source, phi.target
    src, tgt = tensor_gset(x, r), tensor_gset(x, r2)
    maps = []
    for j, o in enumerate(x.orbits):
        inc = tgt.inclusion(j)
        if o.size == 1:
            maps.append(phi.compose(inc))
        else:
            n1, n2 = r.norm_construction_of_free(), r2.norm_construction_of_free()
            tgt_T = tgt.T
            maps.append(from_norm(n1, tgt_T, lambda v, inc=inc, n2=n2: inc.fe(n2.tensor.slot(0, phi.fe(v)))))
    return src.from_factors(tgt.T, maps)


# ---------------------------------------------------------------------------
# Ideals, quotients and relative box products
# ---------------------------------------------------------------------------


def _lattice(g: FgAbGroup, gens) -> list[list[int]]:
    return hnf_basis([list(v) for v in gens] + g.torsion_rows(), g.ngens)


def ideal_closure(t: TambaraFunctor, gens_e, gens_G) -> tuple[list[list[int]], list[list[int]]]:
    """Smallest Tambara ideal containing the given elements (as lattice bases)."""
    F, G = t.free_ring, t.fixed_ring
    Ie = _lattice(t.free, gens_e)
    IG = _lattice(t.fixed, gens_G)
    while True:
        new_e = list(Ie)
        for v in Ie:
            new_e += [F.mul(v, g) for g in t.free.gens()]
            new_e.append(t.w(v))
        new_e += [t.res(v) for v in IG]
        new_G = list(IG)
        for v in IG:
            new_G += [G.mul(v, g) for g in t.fixed.gens()]
        new_G += [t.tr(v) for v in Ie]
        new_G += [t.norm(v) for v in Ie]
        e2, G2 = _lattice(t.free, new_e), _lattice(t.fixed, new_G)
        if e2 == Ie and G2 == IG:
            return Ie, IG
        Ie, IG = e2, G2


class QuotientTambara(TambaraFunctor):
    def __init__(self, t: TambaraFunctor, gens_e=(), gens_G=()):
        self.parent = t
        Ie, IG = ideal_closure(t, gens_e, gens_G)
        self.qe = Subquotient(t.free, t.free.gens(), Ie)
        self.qG = Subquotient(t.fixed, t.fixed.gens(), IG)
        E, G = self.qe.group, self.qG.group
        lift_e, lift_G = self.qe.lift, self.qG.lift
        pe, pG = self.qe.project, self.qG.project
        F0, G0 = t.free_ring, t.fixed_ring
        free = RingObject.from_function(E, pe(F0.unit), lambda i, j: pe(F0.mul(lift_e(E.basis(i)), lift_e(E.basis(j)))))
        free.automorphism = GroupMap.from_function(E, E, lambda x: pe(t.w(lift_e(x))))
        free.order = t.p
        fixed = RingObject.from_function(G, pG(G0.unit), lambda i, j: pG(G0.mul(lift_G(G.basis(i)), lift_G(G.basis(j)))))
        res = GroupMap.from_function(G, E, lambda x: pe(t.res(lift_G(x))))
        tr = GroupMap.from_function(E, G, lambda x: pG(t.tr(lift_e(x))))
        norms = [pG(t.norm(lift_e(g))) for g in E.gens()]
        super().__init__(t.p, free, fixed, res, tr, norms, name=f"{t.name}/I")

    def projection(self) -> TambaraMorphism:
        t = self.parent
        return TambaraMorphism(t, self, GroupMap.from_function(t.free, self.free, self.qe.project),
                               GroupMap.from_function(t.fixed, self.fixed, self.qG.project), check=False)


def quotient_tambara(t: TambaraFunctor, gens_e=(), gens_G=()) -> QuotientTambara:
    return QuotientTambara(t, gens_e, gens_G)


class BoxOver(QuotientTambara):
    """``T □_R T'``: the quotient of ``T □ T'`` identifying ``f(x) ⊗ 1`` with ``1 ⊗ g(x)``."""

    def __init__(self, t: TambaraFunctor, r: TambaraFunctor, t2: TambaraFunctor,
                 f: TambaraMorphism, g: TambaraMorphism):
        self.box = BoxProduct.of([t, t2])
        il, ir = self.box.inclusion(0), self.box.inclusion(1)
        B = self.box.T
        ge = [B.free.sub(il.fe(f.fe(x)), ir.fe(g.fe(x))) for x in r.free.gens()]
        gG = [B.fixed.sub(il.fG(f.fG(x)), ir.fG(g.fG(x))) for x in r.fixed.gens()]
        super().__init__(B, ge, gG)
        self.name = f"{t.name}□_{r.name}{t2.name}"
        self.left_map = il.compose(self.projection())
        self.right_map = ir.compose(self.projection())


def box_over(t: TambaraFunctor, r: TambaraFunctor, t2: TambaraFunctor,
             f: TambaraMorphism, g: TambaraMorphism) -> BoxOver:
    return BoxOver(t, r, t2, f, g)
