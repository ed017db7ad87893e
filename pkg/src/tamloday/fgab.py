"""Finitely generated abelian groups over the integers.

Groups are given by a presentation (generators and integer relation rows)
and carry a canonical basis read off from the Smith normal form of the
relation matrix.  Elements are tuples of integers in that canonical basis,
with torsion coordinates reduced into ``[0, d)``.  All arithmetic is exact.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

Matrix = list[list[int]]
Elem = tuple[int, ...]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(inner):
            c = row[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += c * bk[j]
        out.append(acc)
    return out


def vecmat(v: Sequence[int], m: Sequence[Sequence[int]], cols: int) -> list[int]:
    acc = [0] * cols
    for k, c in enumerate(v):
        if c:
            row = m[k]
            for j in range(cols):
                if row[j]:
                    acc[j] += c * row[j]
    return acc


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms
# ---------------------------------------------------------------------------


def _snf_core(m: Sequence[Sequence[int]], nrows: int, ncols: int):
    """Return (diag, L, R, Rinv) with L*m*R diagonal with entries ``diag``."""
    A = [list(row) for row in m]
    L = identity(nrows)
    R = identity(ncols)
    Rinv = identity(ncols)

    def row_add(dst, src, q):  # row_dst += q*row_src
        if q:
            ra, rs = A[dst], A[src]
            for j in range(ncols):
                if rs[j]:
                    ra[j] += q * rs[j]
            la, ls = L[dst], L[src]
            for j in range(nrows):
                if ls[j]:
                    la[j] += q * ls[j]

    def col_add(dst, src, q):  # col_dst += q*col_src
        if q:
            for row in A:
                if row[src]:
                    row[dst] += q * row[src]
            for row in R:
                if row[src]:
                    row[dst] += q * row[src]
            # inverse: row_src -= q*row_dst
            rd, rs = Rinv[dst], Rinv[src]
            for j in range(ncols):
                if rd[j]:
                    rs[j] -= q * rd[j]

    def row_swap(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            L[i], L[j] = L[j], L[i]

    def col_swap(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in R:
                row[i], row[j] = row[j], row[i]
            Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    diag = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            row = A[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            piv = A[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // piv))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, ncols):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // piv))
                    if A[t][j]:
                        clean = False
            if not clean:
                best = None
                for i in range(t + 1, nrows):
                    v = A[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, None)
                for j in range(t + 1, ncols):
                    v = A[t][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), None, j)
                if best[1] is not None:
                    row_swap(t, best[1])
                else:
                    col_swap(t, best[2])
                continue
            bad = None
            for i in range(t + 1, nrows):
                row = A[i]
                for j in range(t + 1, ncols):
                    if row[j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]
        diag.append(A[t][t])
        t += 1
    return diag, L, R, Rinv


@lru_cache(maxsize=4096)
def _snf_cached(key: tuple[tuple[int, ...], ...], nrows: int, ncols: int):
    diag, L, R, Rinv = _snf_core(key, nrows, ncols)
    return tuple(diag), tuple(map(tuple, L)), tuple(map(tuple, R)), tuple(map(tuple, Rinv))


def _snf(m: Sequence[Sequence[int]], ncols: int | None = None):
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if nrows else 0
    diag, L, R, Rinv = _snf_cached(tuple(tuple(r) for r in m), nrows, ncols)
    return list(diag), [list(r) for r in L], [list(r) for r in R], [list(r) for r in Rinv]


def _monomial_chain(rels, n: int):
    """Skip the SNF when every relation is ``d * e_j`` for distinct ``j`` and the ``d`` form a divisibility chain."""
    orders = {}
    for r in rels:
        nz = [(j, a) for j, a in enumerate(r) if a]
        if len(nz) != 1 or nz[0][0] in orders:
            return None
        orders[nz[0][0]] = abs(nz[0][1])
    cols = sorted(orders, key=lambda j: (orders[j], j)) + [j for j in range(n) if j not in orders]
    ds = [orders[j] for j in cols[:len(orders)]]
    if any(b % a for a, b in zip(ds, ds[1:])):
        return None
    R = [[0] * n for _ in range(n)]
    for i, j in enumerate(cols):
        R[j][i] = 1
    Rinv = [list(row) for row in zip(*R)]
    return ds, R, Rinv


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(D, L, R)`` with ``L @ m @ R == D``.

    ``L`` and ``R`` are unimodular and the nonzero diagonal entries of ``D``
    are positive with ``d_1 | d_2 | ...``.

    >>> smith_normal_form([[2, 4], [6, 8]])[0]
    [[2, 0], [0, 4]]
    """
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if nrows else 0
    diag, L, R, _ = _snf(m, ncols)
    D = [[0] * ncols for _ in range(nrows)]
    for i, d in enumerate(diag):
        D[i][i] = d
    return D, L, R


def hnf_basis(vectors: Iterable[Sequence[int]], ncols: int) -> Matrix:
    """Row-style Hermite basis of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    basis: Matrix = []
    col = 0
    while rows and col < ncols:
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not active:
            col += 1
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for b in basis:
            q = b[col] // piv[col]
            if q:
                for j in range(ncols):
                    b[j] -= q * piv[j]
        basis.append(piv)
        rows = rest
        col += 1
    return basis


def left_kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis of ``{z : z @ m == 0}`` over the integers."""
    nrows = len(m)
    if nrows == 0:
        return []
    if ncols is None:
        ncols = len(m[0])
    diag, L, _, _ = _snf(m, ncols)
    k = sum(1 for d in diag if d)
    return [L[i] for i in range(k, nrows)]


def solve_left(m: Sequence[Sequence[int]], x: Sequence[int], ncols: int | None = None) -> list[int] | None:
    """Some integer ``c`` with ``c @ m == x``, or None when no solution exists."""
    nrows = len(m)
    if ncols is None:
        ncols = len(x)
    if nrows == 0:
        return [] if not any(x) else None
    diag, L, R, _ = _snf(m, ncols)
    y = vecmat(x, R, ncols)
    cp = [0] * nrows
    for i in range(ncols):
        d = diag[i] if i < len(diag) else 0
        if d:
            if y[i] % d:
                return None
            cp[i] = y[i] // d
        elif y[i]:
            return None
    return vecmat(cp, L, nrows)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


def _fmt_group(orders: Sequence[int]) -> str:
    parts = []
    free = sum(1 for d in orders if d == 0)
    for d in orders:
        if d:
            parts.append(f"Z/{d}")
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    return " + ".join(parts) if parts else "0"


class FgAbGroup:
    """Abelian group ``Z^n / rowspan(relations)`` with canonical coordinates.

    Canonical generators are ordered torsion first (invariant factors in
    divisibility order) then free.  ``orders[i]`` is the order of canonical
    generator ``i`` (0 for infinite order).
    """

    def __init__(self, num_generators: int, relations: Iterable[Sequence[int]] = ()):
        n = num_generators
        rels = [list(r) for r in relations if any(r)]
        for r in rels:
            if len(r) != n:
                raise ValueError("relation length does not match generator count")
        self.num_generators = n
        self.relations = rels
        mono = _monomial_chain(rels, n) if rels else None
        if mono is not None:
            diag, R, Rinv = mono
        elif rels:
            diag, _, R, Rinv = _snf(rels, n)
        else:
            diag, R, Rinv = [], identity(n), identity(n)
        padded = list(diag) + [0] * (n - len(diag))
        keep = [i for i, d in enumerate(padded) if d != 1]
        self._keep = keep
        self.orders: tuple[int, ...] = tuple(padded[i] for i in keep)
        self._R = R
        self._Rinv = Rinv
        self._identity = not rels

    # constructors -------------------------------------------------------
    @classmethod
    def from_invariants(cls, torsion: Sequence[int] = (), rank: int = 0) -> "FgAbGroup":
        torsion = [d for d in torsion if d != 1]
        n = len(torsion) + rank
        rels = []
        for i, d in enumerate(torsion):
            r = [0] * n
            r[i] = d
            rels.append(r)
        return cls(n, rels)

    @classmethod
    def cyclic(cls, d: int) -> "FgAbGroup":
        return cls.from_invariants((), 1) if d == 0 else cls.from_invariants((d,), 0)

    @classmethod
    def free(cls, n: int) -> "FgAbGroup":
        return cls(n, [])

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, [])

    # invariants ---------------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.orders)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.orders if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.orders if d)

    def canonical_decomposition(self) -> tuple[int, tuple[int, ...]]:
        return self.rank, self.torsion

    def is_trivial(self) -> bool:
        return not self.orders

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite group")
        out = 1
        for d in self.orders:
            out *= d
        return out

    def is_isomorphic(self, other: "FgAbGroup") -> bool:
        return self.orders == other.orders

    def __repr__(self) -> str:
        return f"FgAbGroup({_fmt_group(self.orders)})"

    def __str__(self) -> str:
        return _fmt_group(self.orders)

    # elements -----------------------------------------------------------
    def normalize(self, coords: Sequence[int]) -> Elem:
        return tuple(c % d if d else c for c, d in zip(coords, self.orders))

    def zero(self) -> Elem:
        return (0,) * self.ngens

    def basis(self, i: int) -> Elem:
        v = [0] * self.ngens
        v[i] = 1
        return self.normalize(v)

    def gens(self) -> list[Elem]:
        return [self.basis(i) for i in range(self.ngens)]

    def add(self, x: Sequence[int], y: Sequence[int]) -> Elem:
        return self.normalize([a + b for a, b in zip(x, y)])

    def sub(self, x: Sequence[int], y: Sequence[int]) -> Elem:
        return self.normalize([a - b for a, b in zip(x, y)])

    def neg(self, x: Sequence[int]) -> Elem:
        return self.normalize([-a for a in x])

    def scale(self, c: int, x: Sequence[int]) -> Elem:
        return self.normalize([c * a for a in x])

    def combine(self, terms: Iterable[tuple[int, Sequence[int]]]) -> Elem:
        acc = [0] * self.ngens
        for c, x in terms:
            if c:
                for i, a in enumerate(x):
                    if a:
                        acc[i] += c * a
        return self.normalize(acc)

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.normalize(x))

    def elements(self) -> list[Elem]:
        if not self.is_finite():
            raise ValueError("infinite group has no element list")
        out: list[Elem] = [()]
        for d in self.orders:
            out = [e + (a,) for e in out for a in range(d)]
        return out

    def to_canon(self, vec: Sequence[int]) -> Elem:
        """Canonical coordinates of a vector over the presentation generators."""
        if self._identity:
            return self.normalize(vec)
        y = vecmat(vec, self._R, self.num_generators)
        return self.normalize([y[i] for i in self._keep])

    def from_canon(self, coords: Sequence[int]) -> list[int]:
        """A presentation vector representing canonical coordinates ``coords``."""
        if self._identity:
            return list(coords)
        y = [0] * self.num_generators
        for c, i in zip(coords, self._keep):
            y[i] = c
        return vecmat(y, self._Rinv, self.num_generators)

    def torsion_rows(self) -> Matrix:
        rows = []
        for i, d in enumerate(self.orders):
            if d:
                r = [0] * self.ngens
                r[i] = d
                rows.append(r)
        return rows

    def contains(self, lattice_gens: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
        """Whether ``x`` lies in the subgroup generated by ``lattice_gens``."""
        stack = [list(g) for g in lattice_gens] + self.torsion_rows()
        return solve_left(stack, list(x), self.ngens) is not None


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------


class GroupMap:
    """Homomorphism given by images of the source's canonical generators."""

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix: Sequence[Sequence[int]], check: bool = True):
        self.source = source
        self.target = target
        if len(matrix) != source.ngens:
            raise ValueError("matrix needs one row per source generator")
        self.matrix = [list(target.normalize(r)) for r in matrix]
        if check:
            for i, d in enumerate(source.orders):
                if d and not target.is_zero([d * a for a in self.matrix[i]]):
                    raise ValueError(f"map not well defined on generator {i} of order {d}")

    @classmethod
    def from_function(cls, source: FgAbGroup, target: FgAbGroup, fn: Callable[[Elem], Sequence[int]], check: bool = True) -> "GroupMap":
        return cls(source, target, [fn(g) for g in source.gens()], check=check)

    @classmethod
    def identity(cls, g: FgAbGroup) -> "GroupMap":
        return cls(g, g, [g.basis(i) for i in range(g.ngens)], check=False)

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "GroupMap":
        return cls(source, target, [target.zero()] * source.ngens, check=False)

    def __call__(self, x: Sequence[int]) -> Elem:
        return self.target.normalize(vecmat(x, self.matrix, self.target.ngens))

    def compose(self, other: "GroupMap") -> "GroupMap":
        """``other ∘ self`` (apply self first)."""
        return GroupMap(self.source, other.target, [other(r) for r in self.matrix], check=False)

    def __add__(self, other: "GroupMap") -> "GroupMap":
        return GroupMap(self.source, self.target, [self.target.add(a, b) for a, b in zip(self.matrix, other.matrix)], check=False)

    def __sub__(self, other: "GroupMap") -> "GroupMap":
        return GroupMap(self.source, self.target, [self.target.sub(a, b) for a, b in zip(self.matrix, other.matrix)], check=False)

    def scaled(self, c: int) -> "GroupMap":
        return GroupMap(self.source, self.target, [self.target.scale(c, a) for a in self.matrix], check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(tuple(map(tuple, self.matrix)))

    def kernel(self) -> "Subquotient":
        return kernel(self)

    def cokernel(self) -> "Subquotient":
        return cokernel(self)

    def is_injective(self) -> bool:
        return self.kernel().group.is_trivial()

    def is_surjective(self) -> bool:
        return self.cokernel().group.is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "GroupMap":
        if not self.is_isomorphism():
            raise ValueError("map is not an isomorphism")
        stack = [list(r) for r in self.matrix] + self.target.torsion_rows()
        rows = []
        for g in self.target.gens():
            c = solve_left(stack, list(g), self.target.ngens)
            rows.append(c[: self.source.ngens])
        return GroupMap(self.target, self.source, rows)


# ---------------------------------------------------------------------------
# Subquotients, kernels, cokernels, homology
# ---------------------------------------------------------------------------


class Subquotient:
    """``<sub_gens> / (<sub_gens> ∩ (<rel_gens> + torsion))`` inside ``ambient``.

    ``group`` is the resulting FgAbGroup; ``project`` sends an ambient element
    of the span to canonical coordinates of ``group``, ``lift`` goes back.
    """

    def __init__(self, ambient: FgAbGroup, sub_gens: Sequence[Sequence[int]], rel_gens: Sequence[Sequence[int]] = ()):
        self.ambient = ambient
        n = ambient.ngens
        self.sub_gens = [list(ambient.normalize(g)) for g in sub_gens]
        tors = ambient.torsion_rows()
        rels = [list(r) for r in rel_gens]
        m = len(self.sub_gens)
        stack = self.sub_gens + rels + tors
        presentation = [z[:m] for z in left_kernel(stack, n)] if stack else []
        self.group = FgAbGroup(m, presentation)
        self._solve_stack = self.sub_gens + tors

    def project(self, x: Sequence[int]) -> Elem:
        c = solve_left(self._solve_stack, list(x), self.ambient.ngens)
        if c is None:
            raise ValueError("element not in the subgroup")
        return self.group.to_canon(c[: len(self.sub_gens)])

    def lift(self, h: Sequence[int]) -> Elem:
        c = self.group.from_canon(h)
        return self.ambient.combine(zip(c, self.sub_gens))

    def contains(self, x: Sequence[int]) -> bool:
        return solve_left(self._solve_stack, list(x), self.ambient.ngens) is not None


def kernel_gens(f: GroupMap) -> Matrix:
    stack = [list(r) for r in f.matrix] + f.target.torsion_rows()
    if not f.source.ngens:
        return []
    if not stack or f.target.ngens == 0:
        return [list(g) for g in f.source.gens()]
    k = f.source.ngens
    gens = [z[:k] for z in left_kernel(stack, f.target.ngens)]
    return hnf_basis(gens + f.source.torsion_rows(), k)


def kernel(f: GroupMap) -> Subquotient:
    return Subquotient(f.source, kernel_gens(f))


def image_gens(f: GroupMap) -> Matrix:
    return [list(r) for r in f.matrix]


def cokernel(f: GroupMap) -> Subquotient:
    return Subquotient(f.target, [list(g) for g in f.target.gens()], image_gens(f))


def quotient_by(g: FgAbGroup, rel_gens: Sequence[Sequence[int]]) -> Subquotient:
    return Subquotient(g, [list(e) for e in g.gens()], rel_gens)


class DirectSum:
    """Direct sum of canonical groups with inclusions and components."""

    def __init__(self, groups: Sequence[FgAbGroup]):
        self.summands = list(groups)
        self.offsets = []
        n = 0
        for g in self.summands:
            self.offsets.append(n)
            n += g.ngens
        rels = []
        for g, off in zip(self.summands, self.offsets):
            for i, d in enumerate(g.orders):
                if d:
                    r = [0] * n
                    r[off + i] = d
                    rels.append(r)
        self.group = FgAbGroup(n, rels)

    def inclusion(self, k: int, x: Sequence[int]) -> Elem:
        v = [0] * self.group.num_generators
        off = self.offsets[k]
        v[off : off + self.summands[k].ngens] = list(x)
        return self.group.to_canon(v)

    def component(self, k: int, x: Sequence[int]) -> Elem:
        v = self.group.from_canon(x)
        off = self.offsets[k]
        return self.summands[k].normalize(v[off : off + self.summands[k].ngens])

    def inclusion_map(self, k: int) -> "GroupMap":
        return GroupMap.from_function(self.summands[k], self.group, lambda x: self.inclusion(k, x))

    def component_map(self, k: int) -> "GroupMap":
        return GroupMap.from_function(self.group, self.summands[k], lambda x: self.component(k, x))


def direct_sum(groups: Sequence[FgAbGroup]) -> DirectSum:
    return DirectSum(groups)


class TensorProduct:
    """Multilinear tensor product of canonical groups.

    The presentation generators are index tuples ``(j_0, ..., j_{m-1})`` of
    canonical generators of the factors; ``group`` is the reduced group.
    """

    def __init__(self, factors: Sequence[FgAbGroup]):
        self.factors = list(factors)
        idx: list[tuple[int, ...]] = [()]
        for g in self.factors:
            idx = [t + (j,) for t in idx for j in range(g.ngens)]
        self.index = idx
        self.position = {t: i for i, t in enumerate(idx)}
        n = len(idx)
        rels = []
        for i, t in enumerate(idx):
            d = 0
            for g, j in zip(self.factors, t):
                d = gcd(d, g.orders[j])
            if d:
                r = [0] * n
                r[i] = d
                rels.append(r)
        self.group = FgAbGroup(n, rels)
        self._expansions: dict[int, list[tuple[int, tuple[int, ...]]]] = {}

    def pure(self, xs: Sequence[Sequence[int]]) -> Elem:
        """Canonical coordinates of the elementary tensor ``x_0 ⊗ ... ⊗ x_{m-1}``."""
        vec = [0] * len(self.index)
        terms: list[tuple[int, tuple[int, ...]]] = [(1, ())]
        for x in xs:
            nz = [(j, a) for j, a in enumerate(x) if a]
            terms = [(c * a, t + (j,)) for c, t in terms for j, a in nz]
            if not terms:
                return self.group.zero()
        for c, t in terms:
            vec[self.position[t]] += c
        return self.group.to_canon(vec)

    def expand(self, coords: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
        """Write an element as ``sum c * e_{j_0} ⊗ ... ⊗ e_{j_{m-1}}``."""
        vec = self.group.from_canon(coords)
        return [(c, self.index[i]) for i, c in enumerate(vec) if c]

    def expand_gen(self, i: int) -> list[tuple[int, tuple[int, ...]]]:
        if i not in self._expansions:
            self._expansions[i] = self.expand(self.group.basis(i))
        return self._expansions[i]

    def map_from_slots(self, target: FgAbGroup, image_of_index: Callable[[tuple[int, ...]], Sequence[int]]) -> GroupMap:
        """Additive map defined on index tuples (must respect relations)."""
        rows = []
        for i in range(self.group.ngens):
            rows.append(target.combine((c, image_of_index(t)) for c, t in self.expand_gen(i)))
        return GroupMap(self.group, target, rows)


def tensor(a: FgAbGroup, b: FgAbGroup) -> TensorProduct:
    return TensorProduct([a, b])


def coinvariants(g: FgAbGroup, action: GroupMap) -> Subquotient:
    """Quotient of ``g`` by the subgroup generated by ``x - action(x)``."""
    if action.source is not g or action.target is not g:
        if action.source.orders != g.orders or action.target.orders != g.orders:
            raise ValueError("action must be an endomorphism of g")
    if not action.is_isomorphism():
        raise ValueError("action is not invertible")
    rels = [g.sub(e, action(e)) for e in g.gens()]
    return quotient_by(g, rels)


class ChainComplex:
    """Chain complex ``groups[n]`` with ``differentials[n]: C_n -> C_{n-1}``.

    ``differentials[0]`` is ignored (the zero map to 0).
    """

    def __init__(self, groups: Sequence[FgAbGroup], differentials: Sequence[GroupMap | None]):
        self.groups = list(groups)
        self.differentials = list(differentials)
        for n in range(1, len(self.groups)):
            d = self.differentials[n]
            if d.source.orders != self.groups[n].orders or d.target.orders != self.groups[n - 1].orders:
                raise ValueError(f"differential {n} not composable")

    def check(self) -> list[int]:
        bad = []
        for n in range(2, len(self.groups)):
            comp = self.differentials[n].compose(self.differentials[n - 1])
            if any(any(r) for r in comp.matrix):
                bad.append(n)
        return bad

    def cycles(self, n: int) -> Matrix:
        if n == 0:
            return [list(g) for g in self.groups[0].gens()]
        return kernel_gens(self.differentials[n])

    def boundaries(self, n: int) -> Matrix:
        if n + 1 >= len(self.groups):
            raise ValueError(f"degree {n} needs C_{n + 1}")
        return image_gens(self.differentials[n + 1])

    def homology_subquotient(self, n: int) -> Subquotient:
        if n >= 1 and n + 1 < len(self.groups):
            comp = self.differentials[n + 1].compose(self.differentials[n])
            if any(any(r) for r in comp.matrix):
                raise ValueError(f"d∘d != 0 at degree {n + 1}")
        return Subquotient(self.groups[n], self.cycles(n), self.boundaries(n))

    def homology(self, n: int) -> FgAbGroup:
        return self.homology_subquotient(n).group


def homology(c: ChainComplex, n: int) -> FgAbGroup:
    return c.homology(n)


def induced_on_subquotients(src: Subquotient, tgt: Subquotient, f: GroupMap) -> GroupMap:
    """Map ``src.group -> tgt.group`` induced by an ambient map ``f``."""
    rows = [tgt.project(f(src.lift(g))) for g in src.group.gens()]
    return GroupMap(src.group, tgt.group, rows)


def canonical_decomposition(g: FgAbGroup) -> tuple[int, tuple[int, ...]]:
    return g.canonical_decomposition()
