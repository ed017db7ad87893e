"""Finite C_n-sets and finite simplicial C_n-sets.

A group element is an exponent of a fixed generator ``γ`` of ``C_n``.
Simplicial sets are described by their elements level by level, together
with face, degeneracy and action functions; :class:`CellularGSet` builds
these from nondegenerate cells, and the remaining builders combine them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Sequence

Simplex = Hashable


# ---------------------------------------------------------------------------
# Finite G-sets and G-maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Orbit:
    basepoint: Simplex
    size: int  # = n / |stabilizer|

    def is_free(self, n: int) -> bool:
        return self.size == n

    def is_trivial(self) -> bool:
        return self.size == 1


class FinGSet:
    """A finite C_n-set with chosen orbit basepoints.

    ``address[x] = (j, g)`` means ``x = γ^g · orbits[j].basepoint`` with
    ``0 <= g < orbits[j].size``.
    """

    def __init__(self, n: int, elements: Sequence[Simplex], act: Callable[[Simplex, int], Simplex]):
        self.n = n
        self.orbits: list[Orbit] = []
        self.address: dict[Simplex, tuple[int, int]] = {}
        self.points: list[Simplex] = []
        for x in elements:
            if x in self.address:
                continue
            j = len(self.orbits)
            orbit = [x]
            y = act(x, 1)
            while y != x:
                orbit.append(y)
                y = act(y, 1)
                if len(orbit) > n:
                    raise ValueError("action does not have order dividing n")
            if n % len(orbit):
                raise ValueError("orbit size does not divide n")
            self.orbits.append(Orbit(x, len(orbit)))
            for g, y in enumerate(orbit):
                self.address[y] = (j, g)
        for o in self.orbits:
            y = o.basepoint
            for _ in range(o.size):
                self.points.append(y)
                y = act(y, 1)
        self._act = act

    @classmethod
    def from_orbits(cls, n: int, sizes: Sequence[int]) -> "FinGSet":
        elems = [(j, g) for j, s in enumerate(sizes) for g in range(s)]
        return cls(n, elems, lambda x, h: (x[0], (x[1] + h) % sizes[x[0]]))

    def __len__(self) -> int:
        return len(self.points)

    def orbit_sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def element(self, j: int, g: int = 0) -> Simplex:
        o = self.orbits[j]
        return self._act(o.basepoint, g % o.size)

    def act(self, x: Simplex, g: int) -> Simplex:
        return self._act(x, g)

    def num_trivial(self) -> int:
        return sum(1 for o in self.orbits if o.size == 1)

    def num_free(self) -> int:
        return sum(1 for o in self.orbits if o.size == self.n and self.n > 1)

    def __repr__(self) -> str:
        return f"FinGSet(C_{self.n}, orbit sizes {self.orbit_sizes()})"


class GMap:
    """Equivariant map of finite C_n-sets, one ``(target orbit, k)`` per source orbit.

    The basepoint of source orbit ``j`` goes to ``γ^k`` times the basepoint of
    target orbit ``data[j][0]``.
    """

    def __init__(self, source: FinGSet, target: FinGSet, data: Sequence[tuple[int, int]]):
        if len(data) != len(source.orbits):
            raise ValueError("need one entry per source orbit")
        self.source = source
        self.target = target
        self.data = []
        for so, (t, k) in zip(source.orbits, data):
            to = target.orbits[t]
            if so.size % to.size:
                raise ValueError("stabilizer of a source orbit is not contained in that of its image")
            self.data.append((t, k % to.size))

    @classmethod
    def from_function(cls, source: FinGSet, target: FinGSet, fn: Callable[[Simplex], Simplex]) -> "GMap":
        return cls(source, target, [target.address[fn(o.basepoint)] for o in source.orbits])

    def __call__(self, x: Simplex) -> Simplex:
        j, g = self.source.address[x]
        t, k = self.data[j]
        return self.target.element(t, g + k)

    def compose(self, other: "GMap") -> "GMap":
        """``other ∘ self``."""
        out = []
        for t, k in self.data:
            t2, k2 = other.data[t]
            out.append((t2, k + k2))
        return GMap(self.source, other.target, out)

    def preimage_orbits(self, t: int) -> list[int]:
        return [j for j, (tt, _) in enumerate(self.data) if tt == t]

    def is_identity(self) -> bool:
        return self.source is self.target and all(d == (j, 0) for j, d in enumerate(self.data))

    def __eq__(self, other):
        return isinstance(other, GMap) and self.data == other.data

    def __repr__(self):
        return f"GMap({self.data})"


# ---------------------------------------------------------------------------
# Simplicial G-sets
# ---------------------------------------------------------------------------


class SimplicialGSet:
    """Finite simplicial C_n-set given by level enumerations and operators.

    Subclasses (or :class:`FunctionalGSet`) provide ``simplices(k)``,
    ``face(k, i, x)``, ``degen(k, j, x)`` and ``act(x, g)``.
    """

    n: int = 1
    name: str = "X"

    def __init__(self):
        self._levels: dict[int, FinGSet] = {}
        self._lock = threading.Lock()

    def simplices(self, k: int) -> list[Simplex]:
        raise NotImplementedError

    def face(self, k: int, i: int, x: Simplex) -> Simplex:
        raise NotImplementedError

    def degen(self, k: int, j: int, x: Simplex) -> Simplex:
        raise NotImplementedError

    def act(self, x: Simplex, g: int) -> Simplex:
        raise NotImplementedError

    def level(self, k: int) -> FinGSet:
        lv = self._levels.get(k)
        if lv is None:
            lv = FinGSet(self.n, self.simplices(k), self.act)
            with self._lock:
                lv = self._levels.setdefault(k, lv)
        return lv

    def face_map(self, k: int, i: int) -> GMap:
        """``d_i : X_k -> X_{k-1}``."""
        return GMap.from_function(self.level(k), self.level(k - 1), lambda x: self.face(k, i, x))

    def degen_map(self, k: int, j: int) -> GMap:
        """``s_j : X_k -> X_{k+1}``."""
        return GMap.from_function(self.level(k), self.level(k + 1), lambda x: self.degen(k, j, x))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, C_{self.n})"


class FunctionalGSet(SimplicialGSet):
    def __init__(self, n: int, simplices, face, degen, act, name: str = "X"):
        super().__init__()
        self.n = n
        self.name = name
        self._simplices = simplices
        self._face = face
        self._degen = degen
        self._act_fn = act
        self._cache: dict[int, list] = {}

    def simplices(self, k):
        if k not in self._cache:
            self._cache[k] = list(self._simplices(k))
        return self._cache[k]

    def face(self, k, i, x):
        return self._face(k, i, x)

    def degen(self, k, j, x):
        return self._degen(k, j, x)

    def act(self, x, g):
        return self._act_fn(x, g)


def expand_level(x: SimplicialGSet, k: int) -> tuple[FinGSet, list[GMap], list[GMap]]:
    lv = x.level(k)
    faces = [x.face_map(k, i) for i in range(k + 1)] if k > 0 else []
    degens = [x.degen_map(k, j) for j in range(k + 1)]
    return lv, faces, degens


def validate_simplicial_identities(x: SimplicialGSet, upto: int) -> list[tuple]:
    """Violated identities (with witnesses) on levels ``0..upto``; empty iff fine."""
    bad = []
    levels = {k: set(x.simplices(k)) for k in range(upto + 2)}
    for k in range(upto + 1):
        for s in x.simplices(k):
            for g in range(x.n):
                if x.act(s, g) not in levels[k]:
                    bad.append(("action-closure", k, s, g))
            if x.act(s, x.n) != s:
                bad.append(("action-order", k, s))
            for i in range(k + 1):
                if k > 0:
                    f = x.face(k, i, s)
                    if f not in levels[k - 1]:
                        bad.append(("face-closure", k, i, s))
                        continue
                    if x.face(k, i, x.act(s, 1)) != x.act(f, 1):
                        bad.append(("face-equivariance", k, i, s))
                d = x.degen(k, i, s)
                if d not in levels[k + 1]:
                    bad.append(("degeneracy-closure", k, i, s))
                    continue
                if x.degen(k, i, x.act(s, 1)) != x.act(d, 1):
                    bad.append(("degeneracy-equivariance", k, i, s))
            if k >= 2:
                for j in range(k + 1):
                    for i in range(j):
                        lhs = x.face(k - 1, i, x.face(k, j, s))
                        rhs = x.face(k - 1, j - 1, x.face(k, i, s))
                        if lhs != rhs:
                            bad.append(("d_i d_j", k, i, j, s))
            for j in range(k + 1):
                sj = x.degen(k, j, s)
                for i in range(k + 2):
                    lhs = x.face(k + 1, i, sj)
                    if i < j:
                        rhs = x.degen(k - 1, j - 1, x.face(k, i, s)) if k > 0 else None
                    elif i in (j, j + 1):
                        rhs = s
                    else:
                        rhs = x.degen(k - 1, j, x.face(k, i - 1, s)) if k > 0 else None
                    if rhs is not None and lhs != rhs:
                        bad.append(("d_i s_j", k, i, j, s))
                for i in range(j + 1):
                    lhs = x.degen(k + 1, i, sj)
                    rhs = x.degen(k + 1, j + 1, x.degen(k, i, s))
                    if lhs != rhs:
                        bad.append(("s_i s_j", k, i, j, s))
    return bad


# ---------------------------------------------------------------------------
# Cellular presentation
# ---------------------------------------------------------------------------


def surjections(k: int, m: int) -> list[tuple[int, ...]]:
    """Order-preserving surjections ``[k] -> [m]`` as value tuples."""
    out = []
    for steps in combinations(range(1, k + 1), m):
        u, v, it = [], 0, set(steps)
        for a in range(k + 1):
            if a in it:
                v += 1
            u.append(v)
        out.append(tuple(u))
    return out


@dataclass
class Cell:
    name: str
    dim: int
    size: int  # orbit size; 1 = fixed, n = free
    faces: tuple = ()  # for each i: (cell name, surjection, exponent)


class CellularGSet(SimplicialGSet):
    """Simplicial C_n-set generated by nondegenerate cells.

    Elements are ``(cell, u, g)`` meaning ``γ^g · u^*(cell)`` for an
    order-preserving surjection ``u``.
    """

    def __init__(self, n: int, cells: Sequence[Cell], name: str = "X"):
        super().__init__()
        self.n = n
        self.name = name
        self.cells = {c.name: c for c in cells}
        self.order = [c.name for c in cells]
        for c in cells:
            if n % c.size:
                raise ValueError(f"cell {c.name}: orbit size must divide n")
            if c.dim > 0 and len(c.faces) != c.dim + 1:
                raise ValueError(f"cell {c.name}: needs {c.dim + 1} faces")
            for f, u, _ in c.faces:
                fc = self.cells[f]
                if len(u) != c.dim or (u and (u[0] != 0 or u[-1] != fc.dim)):
                    raise ValueError(f"cell {c.name}: bad face surjection {u}")
                if fc.size > c.size or c.size % fc.size:
                    raise ValueError(f"cell {c.name}: face {f} has a smaller stabilizer")
        self._cache: dict[int, list] = {}

    def simplices(self, k):
        if k not in self._cache:
            out = []
            for name in self.order:
                c = self.cells[name]
                if c.dim <= k:
                    for u in surjections(k, c.dim):
                        for g in range(c.size):
                            out.append((name, u, g))
            self._cache[k] = out
        return self._cache[k]

    def _norm(self, name, u, g):
        return (name, u, g % self.cells[name].size)

    def face(self, k, i, x):
        name, u, g = x
        v = u[i]
        rest = u[:i] + u[i + 1 :]
        if v in rest:
            return (name, rest, g)
        c = self.cells[name]
        relabeled = tuple(a - 1 if a > v else a for a in rest)
        fname, t, h = c.faces[v]
        return self._norm(fname, tuple(t[a] for a in relabeled), g + h)

    def degen(self, k, j, x):
        name, u, g = x
        return (name, u[: j + 1] + u[j:], g)

    def act(self, x, g):
        name, u, h = x
        return self._norm(name, u, h + g)

    def vertex(self, name: str, k: int, g: int = 0):
        """The ``k``-fold degeneracy of a vertex cell."""
        return self._norm(name, (0,) * (k + 1), g)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def discrete(n: int, sizes: Sequence[int], name: str = "discrete") -> CellularGSet:
    return CellularGSet(n, [Cell(f"v{j}", 0, s) for j, s in enumerate(sizes)], name=name)


def empty(n: int = 2) -> CellularGSet:
    return CellularGSet(n, [], name="empty")


def point(n: int = 2) -> CellularGSet:
    return discrete(n, [1], name="point")


def free_orbit(n: int = 2) -> CellularGSet:
    return discrete(n, [n], name="free_orbit")


def two_fixed_points(n: int = 2) -> CellularGSet:
    return discrete(n, [1, 1], name="two_fixed_points")


def rotation_circle(n: int) -> CellularGSet:
    """Circle with free rotation: ``d_0 e = x``, ``d_1 e = γ^{-1} x``."""
    if n < 1:
        raise ValueError("n must be positive")
    return CellularGSet(n, [Cell("x", 0, n), Cell("e", 1, n, (("x", (0,), 0), ("x", (0,), -1)))],
                        name=f"rotation_circle({n})")


def one_vertex_circle(n: int = 1) -> CellularGSet:
    """Circle with one vertex and one edge, trivial action."""
    return CellularGSet(n, [Cell("x", 0, 1), Cell("e", 1, 1, (("x", (0,), 0), ("x", (0,), 0)))],
                        name="circle")


def rotation_quotient_circle(n: int) -> CellularGSet:
    c = one_vertex_circle(n)
    c.name = f"rotation_quotient_circle({n})"
    return c


def reflection_circle() -> CellularGSet:
    """Two fixed vertices joined by a free orbit of edges."""
    return CellularGSet(2, [Cell("x0", 0, 1), Cell("x1", 0, 1),
                            Cell("e", 1, 2, (("x0", (0,), 0), ("x1", (0,), 0)))],
                        name="reflection_circle()")


def interval_sigma() -> CellularGSet:
    """Interval with the reflection: fixed center ``c``, swapped endpoints ``b, γb``."""
    return CellularGSet(2, [Cell("c", 0, 1), Cell("b", 0, 2),
                            Cell("e", 1, 2, (("c", (0,), 0), ("b", (0,), 0)))],
                        name="interval_sigma()")


def delta1(n: int = 1) -> CellularGSet:
    """The standard 1-simplex with trivial action; vertices ``v0``, ``v1``."""
    return CellularGSet(n, [Cell("v0", 0, 1), Cell("v1", 0, 1),
                            Cell("e", 1, 1, (("v1", (0,), 0), ("v0", (0,), 0)))], name="delta1")


def product(x: SimplicialGSet, y: SimplicialGSet) -> FunctionalGSet:
    if x.n != y.n:
        raise ValueError("group orders differ")
    return FunctionalGSet(
        x.n,
        lambda k: [(a, b) for a in x.simplices(k) for b in y.simplices(k)],
        lambda k, i, s: (x.face(k, i, s[0]), y.face(k, i, s[1])),
        lambda k, j, s: (x.degen(k, j, s[0]), y.degen(k, j, s[1])),
        lambda s, g: (x.act(s[0], g), y.act(s[1], g)),
        name=f"product({x.name},{y.name})",
    )


def disjoint_union(x: SimplicialGSet, y: SimplicialGSet) -> FunctionalGSet:
    if x.n != y.n:
        raise ValueError("group orders differ")
    parts = (x, y)
    return FunctionalGSet(
        x.n,
        lambda k: [(0, a) for a in x.simplices(k)] + [(1, b) for b in y.simplices(k)],
        lambda k, i, s: (s[0], parts[s[0]].face(k, i, s[1])),
        lambda k, j, s: (s[0], parts[s[0]].degen(k, j, s[1])),
        lambda s, g: (s[0], parts[s[0]].act(s[1], g)),
        name=f"disjoint({x.name},{y.name})",
    )


class SimplicialGMap:
    """Equivariant simplicial map given by ``fn(k, simplex)``."""

    def __init__(self, source: SimplicialGSet, target: SimplicialGSet, fn: Callable[[int, Simplex], Simplex]):
        self.source = source
        self.target = target
        self.fn = fn

    def __call__(self, k, x):
        return self.fn(k, x)

    def level_map(self, k: int) -> GMap:
        return GMap.from_function(self.source.level(k), self.target.level(k), lambda s: self.fn(k, s))

    def violations(self, upto: int) -> list[tuple]:
        bad = []
        for k in range(upto + 1):
            for s in self.source.simplices(k):
                if self.fn(k, self.source.act(s, 1)) != self.target.act(self.fn(k, s), 1):
                    bad.append(("equivariance", k, s))
                for i in range(k + 1):
                    if k > 0 and self.fn(k - 1, self.source.face(k, i, s)) != self.target.face(k, i, self.fn(k, s)):
                        bad.append(("face", k, i, s))
                    if self.fn(k + 1, self.source.degen(k, i, s)) != self.target.degen(k, i, self.fn(k, s)):
                        bad.append(("degeneracy", k, i, s))
        return bad


def pushout(x: SimplicialGSet, z: SimplicialGSet, y: SimplicialGSet,
            f: Callable[[int, Simplex], Simplex], g: Callable[[int, Simplex], Simplex]) -> FunctionalGSet:
    """Levelwise pushout of ``x <-f- z -g-> y`` for injective ``f`` and ``g``."""
    if not (x.n == y.n == z.n):
        raise ValueError("group orders differ")
    back: dict[int, dict] = {}

    def gmap_inverse(k):
        if k not in back:
            inv = {}
            for s in z.simplices(k):
                a, b = f(k, s), g(k, s)
                if b in inv:
                    raise ValueError("g is not injective")
                inv[b] = a
            if len(set(inv.values())) != len(inv):
                raise ValueError("f is not injective")
            for b in inv:
                for h in range(y.n):
                    if y.act(b, h) not in inv:
                        raise ValueError("image of z is not closed under the group action")
            back[k] = inv
        return back[k]

    def to_push(k, tag, s):
        if tag == 1:
            inv = gmap_inverse(k)
            if s in inv:
                return (0, inv[s])
        return (tag, s)

    parts = (x, y)
    return FunctionalGSet(
        x.n,
        lambda k: [(0, a) for a in x.simplices(k)] + [(1, b) for b in y.simplices(k) if b not in gmap_inverse(k)],
        lambda k, i, s: to_push(k - 1, s[0], parts[s[0]].face(k, i, s[1])),
        lambda k, j, s: to_push(k + 1, s[0], parts[s[0]].degen(k, j, s[1])),
        lambda s, h: (s[0], parts[s[0]].act(s[1], h)),
        name=f"pushout({x.name},{z.name},{y.name})",
    )


def fixed_points(x: SimplicialGSet) -> FunctionalGSet:
    return FunctionalGSet(
        1,
        lambda k: [s for s in x.simplices(k) if x.act(s, 1) == s],
        x.face, x.degen, lambda s, g: s,
        name=f"fixed_points({x.name})",
    )


def underlying(x: SimplicialGSet) -> FunctionalGSet:
    return FunctionalGSet(1, x.simplices, x.face, x.degen, lambda s, g: s, name=f"underlying({x.name})")


def join(x: SimplicialGSet, y: SimplicialGSet) -> FunctionalGSet:
    """Simplicial join; simplices ``('L', a)``, ``('R', b)`` and ``('J', i, a, b)`` with ``a ∈ X_i``."""
    if x.n != y.n:
        raise ValueError("group orders differ")

    def simplices(k):
        out = [("L", a) for a in x.simplices(k)] + [("R", b) for b in y.simplices(k)]
        for i in range(k):
            for a in x.simplices(i):
                for b in y.simplices(k - 1 - i):
                    out.append(("J", i, a, b))
        return out

    def face(k, l, s):
        if s[0] == "L":
            return ("L", x.face(k, l, s[1]))
        if s[0] == "R":
            return ("R", y.face(k, l, s[1]))
        _, i, a, b = s
        j = k - 1 - i
        if l <= i:
            return ("R", b) if i == 0 else ("J", i - 1, x.face(i, l, a), b)
        return ("L", a) if j == 0 else ("J", i, a, y.face(j, l - i - 1, b))

    def degen(k, l, s):
        if s[0] == "L":
            return ("L", x.degen(k, l, s[1]))
        if s[0] == "R":
            return ("R", y.degen(k, l, s[1]))
        _, i, a, b = s
        if l <= i:
            return ("J", i + 1, x.degen(i, l, a), b)
        return ("J", i, a, y.degen(k - 1 - i, l - i - 1, b))

    def act(s, g):
        if s[0] == "L":
            return ("L", x.act(s[1], g))
        if s[0] == "R":
            return ("R", y.act(s[1], g))
        return ("J", s[1], x.act(s[2], g), y.act(s[3], g))

    return FunctionalGSet(x.n, simplices, face, degen, act, name=f"join({x.name},{y.name})")


def cone(x: SimplicialGSet) -> FunctionalGSet:
    """``x * pt`` (cone point on the right)."""
    c = join(x, point(x.n))
    c.name = f"cone({x.name})"
    return c


def apex(k: int):
    """The cone point of :func:`cone` in degree ``k``."""
    return ("R", ("v0", (0,) * (k + 1), 0))


def _interval_index(k: int, i: int, j: int) -> int:
    return i - 1 if j < i else i


def suspension(y: SimplicialGSet) -> FunctionalGSet:
    """Unreduced suspension ``Δ^1 × Y`` with both ends collapsed, apexes fixed.

    Simplices are ``('m', i, b)`` for ``1 <= i <= k`` (``i`` = number of
    zeros of the ``Δ^1`` coordinate) and the apexes ``('a', 1)`` (``i = 0``)
    and ``('a', 0)`` (``i = k + 1``).
    """

    def simplices(k):
        return [("a", 1)] + [("m", i, b) for i in range(1, k + 1) for b in y.simplices(k)] + [("a", 0)]

    def wrap(k, i, b):
        if i == 0:
            return ("a", 1)
        if i == k + 1:
            return ("a", 0)
        return ("m", i, b)

    def face(k, j, s):
        if s[0] == "a":
            return s
        _, i, b = s
        return wrap(k - 1, i - 1 if j < i else i, y.face(k, j, b))

    def degen(k, j, s):
        if s[0] == "a":
            return s
        _, i, b = s
        return ("m", i + 1 if j < i else i, y.degen(k, j, b))

    def act(s, g):
        return s if s[0] == "a" else ("m", s[1], y.act(s[2], g))

    return FunctionalGSet(y.n, simplices, face, degen, act, name=f"suspension({y.name})")


def sigma_suspension(y: SimplicialGSet) -> FunctionalGSet:
    """Unreduced suspension with the two apexes swapped by the generator of C_2.

    Two cones on ``Y`` glued along ``Y``: ``('c', b)`` is the common base,
    ``('m', i, ε, b)`` lies in cone ``ε`` and ``('a', ε)`` is its apex.
    """
    if y.n != 2:
        raise ValueError("sigma_suspension needs C_2")

    def simplices(k):
        out = [("c", b) for b in y.simplices(k)]
        out += [("m", i, e, b) for i in range(1, k + 1) for e in (0, 1) for b in y.simplices(k)]
        out += [("a", 0), ("a", 1)]
        return out

    def face(k, j, s):
        if s[0] == "a":
            return s
        if s[0] == "c":
            return ("c", y.face(k, j, s[1]))
        _, i, e, b = s
        i2 = i - 1 if j < i else i
        if i2 == 0:
            return ("c", y.face(k, j, b))
        if i2 == k:
            return ("a", e)
        return ("m", i2, e, y.face(k, j, b))

    def degen(k, j, s):
        if s[0] == "a":
            return s
        if s[0] == "c":
            return ("c", y.degen(k, j, s[1]))
        _, i, e, b = s
        return ("m", i + 1 if j < i else i, e, y.degen(k, j, b))

    def act(s, g):
        g %= 2
        if s[0] == "a":
            return ("a", (s[1] + g) % 2)
        if s[0] == "c":
            return ("c", y.act(s[1], g))
        return ("m", s[1], (s[2] + g) % 2, y.act(s[3], g))

    return FunctionalGSet(2, simplices, face, degen, act, name=f"sigma_suspension({y.name})")


def subdivide(x: SimplicialGSet, n: int) -> FunctionalGSet:
    """Edgewise subdivision: ``sd_n(X)_k = X_{n(k+1)-1}``, operators applied blockwise."""
    if n < 1:
        raise ValueError("n must be positive")

    def face(k, i, s):
        top = n * (k + 1) - 1
        for b in reversed(range(n)):
            s = x.face(top, i + b * (k + 1), s)
            top -= 1
        return s

    def degen(k, j, s):
        top = n * (k + 1) - 1
        for b in range(n):
            s = x.degen(top, j + b * (k + 2), s)
            top += 1
        return s

    return FunctionalGSet(x.n, lambda k: x.simplices(n * (k + 1) - 1), face, degen, x.act,
                          name=f"sd_{n}({x.name})")
