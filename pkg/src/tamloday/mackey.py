"""Mackey functors for a cyclic group of prime order.

A C_p-Mackey functor is stored as its two levels: the free level ``M_e``
(with the Weyl action ``w``) and the fixed level ``M_G``, together with
restriction and transfer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fgab import DirectSum, Elem, FgAbGroup, GroupMap, Subquotient, TensorProduct, coinvariants


@dataclass
class Violation:
    axiom: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.axiom}: {self.witness}" if self.witness else self.axiom


def weyl_power(w: GroupMap, k: int, p: int) -> GroupMap:
    out = GroupMap.identity(w.source)
    for _ in range(k % p):
        out = out.compose(w)
    return out


def orbit_sum(w: GroupMap, p: int) -> GroupMap:
    """``Σ_{i<p} w^i``."""
    acc = GroupMap.zero(w.source, w.target)
    step = GroupMap.identity(w.source)
    for _ in range(p):
        acc = acc + step
        step = step.compose(w)
    return acc


class MackeyFunctor:
    def __init__(self, p: int, free: FgAbGroup, weyl: GroupMap, fixed: FgAbGroup, res: GroupMap, tr: GroupMap):
        self.p = p
        self.free = free
        self.weyl = weyl
        self.fixed = fixed
        self.res = res
        self.tr = tr

    def w(self, x, k: int = 1) -> Elem:
        x = self.free.normalize(x)
        for _ in range(k % self.p):
            x = self.weyl(x)
        return x

    def orbit_sum(self, x) -> Elem:
        return self.free.combine((1, self.w(x, i)) for i in range(self.p))

    def __repr__(self) -> str:
        return f"MackeyFunctor(p={self.p}, fixed={self.fixed}, free={self.free})"


def check_mackey_axioms(m: MackeyFunctor) -> list[Violation]:
    out = []
    p = m.p
    if m.weyl.source.orders != m.free.orders or m.res.target.orders != m.free.orders:
        out.append(Violation("shape"))
        return out
    for i, x in enumerate(m.free.gens()):
        if m.w(x, p) != x:
            out.append(Violation("w^p = id", (i,)))
        if m.tr(m.weyl(x)) != m.tr(x):
            out.append(Violation("tr∘w = tr", (i,)))
        if m.res(m.tr(x)) != m.orbit_sum(x):
            out.append(Violation("res∘tr = Σ w^i", (i,)))
    for i, a in enumerate(m.fixed.gens()):
        r = m.res(a)
        if m.weyl(r) != r:
            out.append(Violation("w∘res = res", (i,)))
    return out


class MackeyMorphism:
    def __init__(self, source: MackeyFunctor, target: MackeyFunctor, fe: GroupMap, fG: GroupMap, check: bool = True):
        self.source = source
        self.target = target
        self.fe = fe
        self.fG = fG
        if check:
            bad = self.violations()
            if bad:
                raise ValueError(f"not a Mackey morphism: {bad[0]}")

    def violations(self) -> list[Violation]:
        s, t = self.source, self.target
        out = []
        for i, x in enumerate(s.free.gens()):
            if self.fe(s.weyl(x)) != t.weyl(self.fe(x)):
                out.append(Violation("w", (i,)))
            if self.fG(s.tr(x)) != t.tr(self.fe(x)):
                out.append(Violation("tr", (i,)))
        for i, a in enumerate(s.fixed.gens()):
            if self.fe(s.res(a)) != t.res(self.fG(a)):
                out.append(Violation("res", (i,)))
        return out

    def is_isomorphism(self) -> bool:
        return self.fe.is_isomorphism() and self.fG.is_isomorphism()

    def compose(self, other: "MackeyMorphism") -> "MackeyMorphism":
        return MackeyMorphism(self.source, other.target, self.fe.compose(other.fe), self.fG.compose(other.fG), check=False)


def burnside_mackey(p: int) -> MackeyFunctor:
    free = FgAbGroup.free(1)
    fixed = FgAbGroup.free(2)  # basis 1, t
    return MackeyFunctor(p, free, GroupMap.identity(free), fixed,
                         GroupMap(fixed, free, [[1], [p]]), GroupMap(free, fixed, [[0, 1]]))


def constant_mackey(g: FgAbGroup, p: int) -> MackeyFunctor:
    ident = GroupMap.identity(g)
    return MackeyFunctor(p, g, ident, g, ident, ident.scaled(p))


class BoxPresentation:
    """The Lewis-style presentation of the fixed level of ``M □ N``.

    Fixed level = (M_G ⊗ N_G ⊕ (M_e ⊗ N_e)_{C_p}) / Frobenius relations.
    ``quotient.group`` is the fixed level; ``pair(a, b)`` and ``tr_class(z)``
    give the classes of ``a ⊗ b`` and ``[z]``.
    """

    def __init__(self, m: MackeyFunctor, n: MackeyFunctor):
        if m.p != n.p:
            raise ValueError("mismatched primes")
        self.p = p = m.p
        self.m, self.n = m, n
        self.te = TensorProduct([m.free, n.free])
        self.tG = TensorProduct([m.fixed, n.fixed])
        e = self.te.group
        self.free = e
        self.weyl = GroupMap.from_function(
            e, e, lambda z: self._act_free(z, 1))
        self.coinv: Subquotient = coinvariants(e, self.weyl)
        self.sum = DirectSum([self.tG.group, self.coinv.group])
        rels = []
        for x in m.free.gens():
            for b in n.fixed.gens():
                lhs = self._pair_raw(m.tr(x), b)
                rhs = self._class_raw(self.te.pure([x, n.res(b)]))
                rels.append(self.sum.group.sub(lhs, rhs))
        for a in m.fixed.gens():
            for y in n.free.gens():
                lhs = self._pair_raw(a, n.tr(y))
                rhs = self._class_raw(self.te.pure([m.res(a), y]))
                rels.append(self.sum.group.sub(lhs, rhs))
        self.quotient = Subquotient(self.sum.group, self.sum.group.gens(), rels)
        self.fixed = self.quotient.group

    def _act_free(self, z, k):
        return self.free.combine(
            (c, self.te.pure([self.m.w(self.m.free.basis(i), k), self.n.w(self.n.free.basis(j), k)]))
            for c, (i, j) in self.te.expand(z))

    def _pair_raw(self, a, b) -> Elem:
        return self.sum.inclusion(0, self.tG.pure([a, b]))

    def _class_raw(self, z) -> Elem:
        return self.sum.inclusion(1, self.coinv.project(z))

    def pair(self, a, b) -> Elem:
        return self.quotient.project(self._pair_raw(a, b))

    def tr_class(self, z) -> Elem:
        return self.quotient.project(self._class_raw(z))

    def decompose(self, q) -> tuple[list[tuple[int, tuple[int, int]]], Elem]:
        """Split a fixed-level element into ``Σ c a_i ⊗ b_j`` terms and a free-level lift of the class part."""
        d = self.quotient.lift(q)
        pairs = self.tG.expand(self.sum.component(0, d))
        z = self.coinv.lift(self.sum.component(1, d))
        return pairs, z

    def res_map(self) -> GroupMap:
        m, n = self.m, self.n

        def res(q):
            pairs, z = self.decompose(q)
            acc = self.free.combine(
                (c, self.te.pure([m.res(m.fixed.basis(i)), n.res(n.fixed.basis(j))])) for c, (i, j) in pairs)
            for k in range(self.p):
                acc = self.free.add(acc, self._act_free(z, k))
            return acc

        return GroupMap.from_function(self.fixed, self.free, res)

    def tr_map(self) -> GroupMap:
        return GroupMap.from_function(self.free, self.fixed, self.tr_class)

    def mackey(self) -> MackeyFunctor:
        return MackeyFunctor(self.p, self.free, self.weyl, self.fixed, self.res_map(), self.tr_map())


def box_mackey(m: MackeyFunctor, n: MackeyFunctor) -> MackeyFunctor:
    return BoxPresentation(m, n).mackey()


def swap_iso(m: MackeyFunctor, n: MackeyFunctor) -> MackeyMorphism:
    """The symmetry ``M □ N -> N □ M``."""
    a, b = BoxPresentation(m, n), BoxPresentation(n, m)
    fe = GroupMap.from_function(a.free, b.free, lambda z: b.free.combine(
        (c, b.te.pure([n.free.basis(j), m.free.basis(i)])) for c, (i, j) in a.te.expand(z)))

    def fixed(q):
        pairs, z = a.decompose(q)
        acc = b.fixed.combine((c, b.pair(n.fixed.basis(j), m.fixed.basis(i))) for c, (i, j) in pairs)
        return b.fixed.add(acc, b.tr_class(fe(z)))

    fG = GroupMap.from_function(a.fixed, b.fixed, fixed)
    return MackeyMorphism(a.mackey(), b.mackey(), fe, fG)


def unit_iso(m: MackeyFunctor) -> MackeyMorphism:
    """``A □ M -> M``: ``a ⊗ x ↦ a·x`` (``t`` acts by ``tr∘res``), ``[k ⊗ y] ↦ tr(k y)``."""
    a = burnside_mackey(m.p)
    box = BoxPresentation(a, m)

    def act(i, x):
        return x if i == 0 else m.tr(m.res(x))

    fe = GroupMap.from_function(box.free, m.free, lambda z: m.free.combine(
        (c, m.free.basis(j)) for c, (_, j) in box.te.expand(z)))

    def fixed(q):
        pairs, z = box.decompose(q)
        acc = m.fixed.combine((c, act(i, m.fixed.basis(j))) for c, (i, j) in pairs)
        return m.fixed.add(acc, m.tr(fe(z)))

    fG = GroupMap.from_function(box.fixed, m.fixed, fixed)
    return MackeyMorphism(box.mackey(), m, fe, fG)


def compare_invariants(a: MackeyFunctor, b: MackeyFunctor) -> bool:
    """Cheap necessary condition for isomorphism (level types and structure-map types)."""
    if a.fixed.orders != b.fixed.orders or a.free.orders != b.free.orders:
        return False
    for f, g in ((a.res, b.res), (a.tr, b.tr), (a.weyl, b.weyl)):
        if f.kernel().group.orders != g.kernel().group.orders:
            return False
        if f.cokernel().group.orders != g.cokernel().group.orders:
            return False
    return True
