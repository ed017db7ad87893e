"""Commutative rings whose additive group is finitely generated."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .fgab import Elem, FgAbGroup, GroupMap, TensorProduct


class RingObject:
    """Commutative ring with structure constants on canonical generators.

    ``mult[i][j]`` is the product of canonical generators ``i`` and ``j``.
    ``automorphism`` is an optional ring automorphism of declared ``order``.
    """

    def __init__(self, additive: FgAbGroup, unit: Sequence[int], mult: Sequence[Sequence[Sequence[int]]],
                 automorphism: GroupMap | None = None, order: int = 1, name: str | None = None):
        self.additive = additive
        self.unit = additive.normalize(unit)
        n = additive.ngens
        if len(mult) != n or any(len(r) != n for r in mult):
            raise ValueError("structure constants must be ngens x ngens")
        self.mult = [[additive.normalize(c) for c in row] for row in mult]
        self.automorphism = automorphism
        self.order = order
        self.name = name

    # construction helpers ----------------------------------------------
    @classmethod
    def from_function(cls, additive: FgAbGroup, unit, product: Callable[[int, int], Sequence[int]], **kw) -> "RingObject":
        n = additive.ngens
        return cls(additive, unit, [[product(i, j) for j in range(n)] for i in range(n)], **kw)

    @classmethod
    def integers_mod(cls, m: int) -> "RingObject":
        """``Z/m`` (``m = 0`` gives ``Z``)."""
        g = FgAbGroup.cyclic(m)
        if g.ngens == 0:
            return cls(g, (), [], name=f"Z/{m}")
        return cls(g, (1,), [[(1,)]], name="Z" if m == 0 else f"Z/{m}")

    @classmethod
    def integers(cls) -> "RingObject":
        return cls.integers_mod(0)

    @classmethod
    def zero_ring(cls) -> "RingObject":
        return cls(FgAbGroup.trivial(), (), [], name="0")

    # arithmetic ---------------------------------------------------------
    @property
    def group(self) -> FgAbGroup:
        return self.additive

    def zero(self) -> Elem:
        return self.additive.zero()

    def one(self) -> Elem:
        return self.unit

    def add(self, x, y) -> Elem:
        return self.additive.add(x, y)

    def sub(self, x, y) -> Elem:
        return self.additive.sub(x, y)

    def neg(self, x) -> Elem:
        return self.additive.neg(x)

    def scale(self, c: int, x) -> Elem:
        return self.additive.scale(c, x)

    def mul(self, x, y) -> Elem:
        n = self.additive.ngens
        acc = [0] * n
        mult = self.mult
        for i, a in enumerate(x):
            if not a:
                continue
            row = mult[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                c = a * b
                for k, v in enumerate(row[j]):
                    if v:
                        acc[k] += c * v
        return self.additive.normalize(acc)

    def prod(self, xs) -> Elem:
        out = self.unit
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, x, k: int) -> Elem:
        out = self.unit
        base = tuple(x)
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def apply_aut(self, x, k: int = 1) -> Elem:
        if self.automorphism is None:
            return self.additive.normalize(x)
        x = tuple(x)
        for _ in range(k % self.order):
            x = self.automorphism(x)
        return x

    def is_zero_ring(self) -> bool:
        return self.additive.is_trivial()

    def __repr__(self) -> str:
        label = self.name or str(self.additive)
        return f"RingObject({label})"

    def identity_map(self) -> "RingMap":
        return RingMap(self, self, GroupMap.identity(self.additive), check=False)


@dataclass
class AxiomViolation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom}: {self.witness}"


def check_ring_axioms(r: RingObject) -> list[AxiomViolation]:
    """All violated ring axioms with witnesses; empty list iff ``r`` is valid."""
    out: list[AxiomViolation] = []
    g = r.additive
    n = g.ngens
    gens = g.gens()
    for i, d in enumerate(g.orders):
        if d:
            for j in range(n):
                if not g.is_zero(g.scale(d, r.mult[i][j])) or not g.is_zero(g.scale(d, r.mult[j][i])):
                    out.append(AxiomViolation("well-defined", (i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            if r.mult[i][j] != r.mult[j][i]:
                out.append(AxiomViolation("commutativity", (i, j)))
    for i in range(n):
        for j in range(n):
            ij = r.mult[i][j]
            for k in range(n):
                if r.mul(ij, gens[k]) != r.mul(gens[i], r.mult[j][k]):
                    out.append(AxiomViolation("associativity", (i, j, k)))
    for i in range(n):
        if r.mul(r.unit, gens[i]) != gens[i]:
            out.append(AxiomViolation("unit", (i,)))
    a = r.automorphism
    if a is not None:
        if a.source.orders != g.orders or a.target.orders != g.orders:
            out.append(AxiomViolation("automorphism-type", ()))
        else:
            if a(r.unit) != r.unit:
                out.append(AxiomViolation("automorphism-unit", ()))
            for i in range(n):
                for j in range(n):
                    if a(r.mult[i][j]) != r.mul(a(gens[i]), a(gens[j])):
                        out.append(AxiomViolation("automorphism-multiplicative", (i, j)))
            for i in range(n):
                if r.apply_aut(gens[i], r.order) != gens[i]:
                    out.append(AxiomViolation("automorphism-order", (i,)))
    return out


class RingMap:
    """Unital ring homomorphism, stored as an additive map."""

    def __init__(self, source: RingObject, target: RingObject, gmap: GroupMap, check: bool = True):
        self.source = source
        self.target = target
        self.gmap = gmap
        if check:
            bad = self.violations()
            if bad:
                raise ValueError(f"not a ring map: {bad[0]}")

    @classmethod
    def from_function(cls, source: RingObject, target: RingObject, fn, check: bool = True) -> "RingMap":
        return cls(source, target, GroupMap.from_function(source.additive, target.additive, fn), check=check)

    def violations(self) -> list[AxiomViolation]:
        out = []
        s, t = self.source, self.target
        if self.gmap(s.unit) != t.unit:
            out.append(AxiomViolation("unit", ()))
        gens = s.additive.gens()
        for i in range(len(gens)):
            for j in range(i, len(gens)):
                if self.gmap(s.mult[i][j]) != t.mul(self.gmap(gens[i]), self.gmap(gens[j])):
                    out.append(AxiomViolation("multiplicative", (i, j)))
        return out

    def __call__(self, x) -> Elem:
        return self.gmap(x)

    def compose(self, other: "RingMap") -> "RingMap":
        """``other ∘ self``."""
        return RingMap(self.source, other.target, self.gmap.compose(other.gmap), check=False)


class TensorRing(RingObject):
    """Tensor product of a list of rings, with slot inclusions."""

    def __init__(self, factors: Sequence[RingObject], automorphism_shift: bool = False):
        self.factors = list(factors)
        self.tp = TensorProduct([f.additive for f in self.factors])
        g = self.tp.group
        tp = self.tp
        cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Elem] = {}

        def idx_product(s, t):
            key = (s, t)
            if key not in cache:
                cache[key] = tp.pure([f.mult[a][b] for f, a, b in zip(self.factors, s, t)])
            return cache[key]

        def product(i, j):
            return g.combine(
                (c * c2, idx_product(s, t))
                for c, s in tp.expand_gen(i)
                for c2, t in tp.expand_gen(j)
            )

        mult = [[None] * g.ngens for _ in range(g.ngens)]
        for i in range(g.ngens):
            for j in range(i, g.ngens):
                mult[i][j] = mult[j][i] = product(i, j)
        unit = tp.pure([f.unit for f in self.factors])
        super().__init__(g, unit, mult)
        if automorphism_shift:
            m = len(self.factors)
            shift = tp.map_from_slots(g, lambda t: tp.group.to_canon(self._index_vec(t[1:] + t[:1])))
            self.automorphism = shift
            self.order = m

    def _index_vec(self, t):
        v = [0] * len(self.tp.index)
        v[self.tp.position[t]] = 1
        return v

    def elementary(self, xs: Sequence[Sequence[int]]) -> Elem:
        """``x_0 ⊗ x_1 ⊗ ... ⊗ x_{m-1}``."""
        return self.tp.pure(xs)

    def slot(self, j: int, x) -> Elem:
        xs = [f.unit for f in self.factors]
        xs[j] = x
        return self.elementary(xs)

    def inclusion(self, j: int) -> RingMap:
        f = self.factors[j]
        return RingMap.from_function(f, self, lambda x: self.slot(j, x), check=False)

    def from_factors(self, target: RingObject, maps: Sequence[RingMap | Callable]) -> RingMap:
        """The ring map out of the tensor product determined by one map per factor."""
        if len(maps) != len(self.factors):
            raise ValueError("need one map per factor")
        images = [[m(e) for e in f.additive.gens()] for m, f in zip(maps, self.factors)]
        memo: dict[tuple[int, ...], Elem] = {}

        def on_index(t):
            if t not in memo:
                memo[t] = target.prod(images[k][j] for k, j in enumerate(t))
            return memo[t]

        gm = self.tp.map_from_slots(target.additive, on_index)
        return RingMap(self, target, gm, check=False)


def tensor_rings(a: RingObject, b: RingObject) -> TensorRing:
    return TensorRing([a, b])


def cyclic_tensor_power(s: RingObject, p: int) -> TensorRing:
    """``s^{⊗p}`` with the shift ``x_0⊗...⊗x_{p-1} ↦ x_1⊗...⊗x_{p-1}⊗x_0``."""
    if p < 1:
        raise ValueError("p must be positive")
    return TensorRing([s] * p, automorphism_shift=True)


def burnside_ring(p: int) -> RingObject:
    """``A(C_p) = Z{1, t}`` with ``t^2 = p t``."""
    g = FgAbGroup.free(2)
    mult = [[(1, 0), (0, 1)], [(0, 1), (0, p)]]
    return RingObject(g, (1, 0), mult, name=f"A(C_{p})")
