"""Homotopy Mackey functors of simplicial Tambara functors.

``π_n`` is computed levelwise as homology of the alternating face complex;
restriction, transfer and the Weyl action are induced from degree ``n``.
``π_0`` additionally carries its Tambara structure as a quotient of level 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .fgab import FgAbGroup, GroupMap, Subquotient, induced_on_subquotients
from .loday import HomotopyData, SimplicialTambara
from .mackey import MackeyFunctor, MackeyMorphism, check_mackey_axioms
from .tambara import QuotientTambara, TambaraMorphism, quotient_tambara


@dataclass
class PiResult:
    degree: int
    mackey: MackeyFunctor
    fixed_sq: Subquotient
    free_sq: Subquotient

    @property
    def fixed(self) -> FgAbGroup:
        return self.mackey.fixed

    @property
    def free(self) -> FgAbGroup:
        return self.mackey.free

    def is_zero(self) -> bool:
        return self.fixed.is_trivial() and self.free.is_trivial()

    def to_dict(self) -> dict:
        m = self.mackey
        return {
            "degree": self.degree,
            "fixed": _group_dict(m.fixed),
            "free": _group_dict(m.free),
            "res": m.res.matrix,
            "tr": m.tr.matrix,
            "weyl": m.weyl.matrix,
        }

    def __str__(self) -> str:
        return f"pi_{self.degree}: fixed {self.fixed}, free {self.free}"


def _group_dict(g: FgAbGroup) -> dict:
    return {"rank": g.rank, "torsion": list(g.torsion), "str": str(g)}


def _homology_sq(s: SimplicialTambara, n: int, part: str) -> Subquotient:
    top = n + 1
    if top > s.D:
        raise ValueError(f"π_{n} needs degree {top} but the object is truncated at {s.D}")
    return s.complex(part, top).homology_subquotient(n)


def pi_n(s: SimplicialTambara, n: int) -> PiResult:
    """``π_n`` as a C_p-Mackey functor."""
    HG = _homology_sq(s, n, "fixed")
    He = _homology_sq(s, n, "free")
    lv = s.level(n)
    res = induced_on_subquotients(HG, He, lv.res)
    tr = induced_on_subquotients(He, HG, lv.tr)
    weyl = induced_on_subquotients(He, He, lv.weyl)
    m = MackeyFunctor(s.p, He.group, weyl, HG.group, res, tr)
    bad = check_mackey_axioms(m)
    if bad:
        raise AssertionError(f"homology failed the Mackey axioms: {bad[0]}")
    return PiResult(n, m, HG, He)


def pi_range(s: SimplicialTambara, top: int) -> list[PiResult]:
    return [pi_n(s, n) for n in range(top + 1)]


def pi_0_tambara(s: SimplicialTambara) -> QuotientTambara:
    """``π_0`` as a Tambara functor: level 0 modulo the ideal generated by ``d_0 - d_1``."""
    d0, d1 = s.face(1, 0), s.face(1, 1)
    L0, L1 = s.level(0), s.level(1)
    ge = [L0.free.sub(d0.fe(x), d1.fe(x)) for x in L1.free.gens()]
    gG = [L0.fixed.sub(d0.fG(x), d1.fG(x)) for x in L1.fixed.gens()]
    return quotient_tambara(L0, ge, gG)


def induced_on_pi(maps: Callable[[int], TambaraMorphism], src: PiResult, tgt: PiResult) -> MackeyMorphism:
    """The map on ``π_n`` induced by a levelwise map of simplicial Tambara functors."""
    n = src.degree
    f = maps(n)
    fe = induced_on_subquotients(src.free_sq, tgt.free_sq, f.fe)
    fG = induced_on_subquotients(src.fixed_sq, tgt.fixed_sq, f.fG)
    return MackeyMorphism(src.mackey, tgt.mackey, fe, fG, check=False)


def endpoints_agree(hd: HomotopyData, top: int) -> list[tuple]:
    """Compare the maps on ``π_n`` induced by the two ends of a homotopy, ``n <= top``."""
    bad = []
    for n in range(top + 1):
        ps, pt = pi_n(hd.source, n), pi_n(hd.target, n)
        f0 = induced_on_pi(lambda k: hd.endpoint(k, 0), ps, pt)
        f1 = induced_on_pi(lambda k: hd.endpoint(k, 1), ps, pt)
        if f0.fe != f1.fe:
            bad.append(("free", n))
        if f0.fG != f1.fG:
            bad.append(("fixed", n))
    return bad


def chain_homotopy(hd: HomotopyData, k: int, part: str = "fixed") -> GroupMap:
    """``H = Σ_j (-1)^j h_{t_j} s_j : L_k(X) -> L_{k+1}(Y)``, ``t_j`` having ``j + 1`` zeros."""
    pick = (lambda m: m.fG) if part == "fixed" else (lambda m: m.fe)
    X = hd.source
    acc = None
    for j in range(k + 1):
        t = ("e", tuple([0] * (j + 1) + [1] * (k + 1 - j)), 0)
        term = pick(X.degen(k, j)).compose(pick(hd.slices[k + 1, t]))
        if j % 2:
            term = term.scaled(-1)
        acc = term if acc is None else acc + term
    return acc


def chain_homotopy_violations(hd: HomotopyData, top: int) -> list[tuple]:
    """Check ``dH + Hd = ±(f_1 - f_0)`` in degrees ``<= top`` at both levels."""
    bad = []
    for part in ("fixed", "free"):
        pick = (lambda m: m.fG) if part == "fixed" else (lambda m: m.fe)
        sign = None
        for k in range(top + 1):
            H = chain_homotopy(hd, k, part)
            lhs = H.compose(hd.target.differential(k + 1, part))
            if k >= 1:
                lhs = lhs + hd.source.differential(k, part).compose(chain_homotopy(hd, k - 1, part))
            diff = pick(hd.endpoint(k, 1)) - pick(hd.endpoint(k, 0))
            ok = [s for s in (1, -1) if lhs == diff.scaled(s)]
            if sign is None and ok:
                sign = ok[0]
            if sign not in ok:
                bad.append((part, k))
    return bad


def homology_groups(s: SimplicialTambara, top: int, part: str = "fixed") -> list[FgAbGroup]:
    c = s.complex(part, top + 1)
    return [c.homology(n) for n in range(top + 1)]
