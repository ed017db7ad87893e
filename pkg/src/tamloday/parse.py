"""Parsers for the ring description language, space expressions and coefficient expressions.

Ring files look like::

    ring B {
      generators: one, t;
      relations: ;
      unit: one;
      mult: t*t = 2*t; one*t = t;
    }

Products not listed are filled in by commutativity, and products with a
unit generator default to the identity rule.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .fgab import FgAbGroup, GroupMap
from .gsimp import (SimplicialGSet, SimplicialGMap, cone, delta1, disjoint_union, free_orbit, interval_sigma,
                    one_vertex_circle, point, product, pushout, reflection_circle, rotation_circle,
                    rotation_quotient_circle, sigma_suspension, suspension, two_fixed_points)
from .ringobj import RingObject, check_ring_axioms
from .tambara import (TambaraFunctor, box_tambara, burnside_tambara, constant_tambara, is_prime,
                      norm_construction)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"line {line}, column {col}: {msg}" if line else msg)


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<arrow>->)|(?P<punct>[{}:;,+*=\-()]))")


@dataclass
class Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Tok]:
    out = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].strip() == "":
                break
            m = _TOKEN.match(line, pos)
            if not m or m.end() == pos:
                col = pos + 1 + (len(line[pos:]) - len(line[pos:].lstrip()))
                raise ParseError(f"unexpected character {line[col - 1]!r}", ln, col)
            kind = m.lastgroup
            start = m.start(kind)
            out.append(Tok(kind, m.group(kind), ln, start + 1))
            pos = m.end()
    out.append(Tok("eof", "", len(text.splitlines()) + 1, 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def error(self, msg: str):
        t = self.cur
        raise ParseError(msg, t.line, t.col)

    def accept(self, text: str) -> bool:
        if self.cur.text == text and self.cur.kind in ("punct", "arrow", "name"):
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            found = self.cur.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")

    def name(self) -> str:
        if self.cur.kind != "name":
            self.error(f"expected a name, found {self.cur.text or 'end of input'!r}")
        t = self.cur.text
        self.i += 1
        return t

    def section(self, key: str):
        if self.cur.text != key:
            if key == "unit":
                self.error("unit required")
            self.error(f"expected '{key}:'")
        self.i += 1
        self.expect(":")

    # lincomb ::= term ("+" term)* ; term ::= INT "*" id | id | INT
    def lincomb(self) -> list[tuple[int, str | None]]:
        terms = [self.term()]
        while self.cur.text in ("+", "-"):
            neg = self.cur.text == "-"
            self.i += 1
            c, g = self.term()
            terms.append((-c if neg else c, g))
        return terms

    def term(self) -> tuple[int, str | None]:
        sign = 1
        if self.accept("-"):
            sign = -1
        if self.cur.kind == "int":
            c = int(self.cur.text)
            self.i += 1
            if self.accept("*"):
                return sign * c, self.name()
            return sign * c, None
        return sign, self.name()


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


@dataclass
class RingSyntax:
    name: str
    gens: list[str]
    relations: list
    unit: list
    mult: dict
    action: dict
    line: int


def _parse_ring_syntax(p: _Parser) -> RingSyntax:
    line = p.cur.line
    p.expect("ring")
    name = p.name()
    p.expect("{")
    p.section("generators")
    gens = [p.name()]
    while p.accept(","):
        gens.append(p.name())
    p.expect(";")
    p.section("relations")
    rels = []
    if not p.accept(";"):
        rels.append(p.lincomb())
        while p.accept(","):
            rels.append(p.lincomb())
        p.expect(";")
    p.section("unit")
    unit = p.lincomb()
    p.expect(";")
    p.section("mult")
    mult = {}
    while p.cur.kind == "name" and p.cur.text != "action":
        tok = p.cur
        a = p.name()
        p.expect("*")
        b = p.name()
        p.expect("=")
        mult[a, b] = (p.lincomb(), tok)
        p.expect(";")
    if not mult:
        p.error("at least one product required")
    action = {}
    if p.accept("action"):
        p.expect(":")
        while p.cur.kind == "name":
            tok = p.cur
            a = p.name()
            p.expect("->")
            action[a] = (p.lincomb(), tok)
            p.expect(";")
    p.expect("}")
    return RingSyntax(name, gens, rels, unit, mult, action, line)


def _vector(terms, gens: list[str], unit_vec=None, tok: Tok | None = None) -> list[int]:
    idx = {g: i for i, g in enumerate(gens)}
    v = [0] * len(gens)
    for c, g in terms:
        if g is None:
            if unit_vec is None:
                raise ParseError("integer constant used before the unit is known", tok.line if tok else 0, tok.col if tok else 0)
            for i, a in enumerate(unit_vec):
                v[i] += c * a
        else:
            if g not in idx:
                raise ParseError(f"unknown generator {g!r}", tok.line if tok else 0, tok.col if tok else 0)
            v[idx[g]] += c
    return v


def _build_ring(rs: RingSyntax) -> RingObject:
    gens = rs.gens
    if len(set(gens)) != len(gens):
        raise ParseError(f"repeated generator in ring {rs.name}", rs.line, 1)
    n = len(gens)
    unit = _vector(rs.unit, gens)
    rels = [_vector(r, gens, unit) for r in rs.relations]
    G = FgAbGroup(n, rels)
    table: dict[tuple[int, int], list[int]] = {}
    for (a, b), (terms, tok) in rs.mult.items():
        if a not in gens or b not in gens:
            raise ParseError(f"unknown generator in product {a}*{b}", tok.line, tok.col)
        i, j = gens.index(a), gens.index(b)
        v = _vector(terms, gens, unit, tok)
        for key in ((i, j), (j, i)):
            if key in table and G.to_canon(table[key]) != G.to_canon(v):
                raise ParseError(f"conflicting products for {a}*{b}", tok.line, tok.col)
            table[key] = v
    unit_gen = unit.index(1) if sorted(unit) == [0] * (n - 1) + [1] else None
    for i in range(n):
        for j in range(n):
            if (i, j) in table:
                continue
            if unit_gen is not None and i == unit_gen:
                table[i, j] = [1 if k == j else 0 for k in range(n)]
            elif unit_gen is not None and j == unit_gen:
                table[i, j] = [1 if k == i else 0 for k in range(n)]
            else:
                raise ParseError(f"missing product {gens[i]}*{gens[j]} in ring {rs.name}", rs.line, 1)

    def product_of(x, y):
        acc = [0] * n
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for k, c in enumerate(table[i, j]):
                            acc[k] += a * b * c
        return acc

    def mult(i, j):
        return G.to_canon(product_of(G.from_canon(G.basis(i)), G.from_canon(G.basis(j))))

    ring = RingObject.from_function(G, G.to_canon(unit), mult)
    ring.name = rs.name
    if rs.action:
        img = {}
        for a, (terms, tok) in rs.action.items():
            if a not in gens:
                raise ParseError(f"unknown generator {a!r} in action", tok.line, tok.col)
            img[gens.index(a)] = _vector(terms, gens, unit, tok)
        rows = [img.get(i, [1 if k == i else 0 for k in range(n)]) for i in range(n)]

        def act(x):
            v = G.from_canon(x)
            acc = [0] * n
            for i, a in enumerate(v):
                for k, c in enumerate(rows[i]):
                    acc[k] += a * c
            return G.to_canon(acc)

        aut = GroupMap.from_function(G, G, act)
        order, x = 1, aut
        while not all(x(e) == e for e in G.gens()):
            x = x.compose(aut)
            order += 1
            if order > 64:
                raise ParseError(f"action in ring {rs.name} has no finite order below 64", rs.line, 1)
        ring.automorphism, ring.order = aut, order
    bad = check_ring_axioms(ring)
    if bad:
        v = bad[0]
        raise ParseError(f"ring {rs.name} fails {v.axiom} at {v.witness}", rs.line, 1)
    return ring


def parse_rings(text: str) -> dict[str, RingObject]:
    p = _Parser(text)
    out = {}
    while p.cur.kind != "eof":
        rs = _parse_ring_syntax(p)
        out[rs.name] = _build_ring(rs)
    if not out:
        raise ParseError("no ring found", 1, 1)
    return out


def parse_ring(text: str) -> RingObject:
    """The first ring in ``text``."""
    return next(iter(parse_rings(text).values()))


_BUILTIN = re.compile(r"^(?:z|Z)(?:/)?(\d*)(?:\.ring)?$")


def builtin_ring(source: str) -> RingObject | None:
    """``Z``, ``Z/4``, ``z4``, ``z4.ring``; ``None`` if not of that shape."""
    m = _BUILTIN.match(source) or _BUILTIN.match(os.path.basename(source))
    if not m:
        return None
    digits = m.group(1)
    ring = RingObject.integers_mod(int(digits)) if digits else RingObject.integers()
    return ring


def load_ring(source: str) -> tuple[RingObject, str]:
    """Ring from a file (if it exists) or a builtin name; also returns canonical source text."""
    if os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
        return parse_ring(text), text
    ring = builtin_ring(source)
    if ring is None:
        raise ParseError(f"no ring file {source!r} and not a builtin ring name")
    return ring, f"builtin:{ring.name}"


# ---------------------------------------------------------------------------
# Space expressions
# ---------------------------------------------------------------------------


_SPACE_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")


def _space_tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _SPACE_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r} in space expression", 1, pos + 1)
        out.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup) + 1))
        pos = m.end()
    out.append(("eof", "", len(text) + 1))
    return out


def _glue_map(z: SimplicialGSet, x: SimplicialGSet, twist: int):
    """Send each vertex orbit of a discrete ``z`` to the first unused vertex cell of ``x`` of the same size."""
    from .gsimp import CellularGSet

    if not isinstance(z, CellularGSet) or not isinstance(x, CellularGSet):
        raise ParseError("pushout needs cellular spaces")
    zc = [z.cells[nm] for nm in z.order]
    xc = [x.cells[nm] for nm in x.order]
    if any(c.dim for c in zc):
        raise ParseError("pushout needs a discrete middle space")
    used, mapping = set(), {}
    for c in zc:
        cand = [d for d in xc if d.dim == 0 and d.size == c.size and d.name not in used]
        if not cand:
            raise ParseError(f"no vertex orbit of size {c.size} to glue along")
        used.add(cand[0].name)
        mapping[c.name] = cand[0]
    n = x.n

    def fn(k, s):
        name, u, g = s
        d = mapping[name]
        return (d.name, u, (g + twist) % n if d.size > 1 else 0)

    return fn


def parse_space(text: str, n: int) -> SimplicialGSet:
    """Evaluate a space expression for the group ``C_n``."""
    toks = _space_tokens(text)
    pos = [0]

    def cur():
        return toks[pos[0]]

    def expect(t):
        if cur()[1] != t:
            raise ParseError(f"expected {t!r} in space expression", 1, cur()[2])
        pos[0] += 1

    def expr():
        kind, name, col = cur()
        if kind != "name":
            raise ParseError("expected a space name", 1, col)
        pos[0] += 1
        args = []
        if cur()[1] == "(":
            pos[0] += 1
            if cur()[1] != ")":
                args.append(arg())
                while cur()[1] == ",":
                    pos[0] += 1
                    args.append(arg())
            expect(")")
        return build(name, args, col)

    def arg():
        if cur()[0] == "int":
            v = int(cur()[1])
            pos[0] += 1
            return v
        return expr()

    def need(args, count, col, name):
        if len(args) != count:
            raise ParseError(f"{name} takes {count} argument(s)", 1, col)

    def build(name, args, col):
        nullary = {"point": lambda: point(n), "free_orbit": lambda: free_orbit(n),
                   "two_fixed_points": lambda: two_fixed_points(n), "delta1": lambda: delta1(n),
                   "circle": lambda: one_vertex_circle(n), "reflection_circle": reflection_circle,
                   "interval_sigma": interval_sigma}
        if name in nullary:
            need(args, 0, col, name)
            if name in ("reflection_circle", "interval_sigma") and n != 2:
                raise ParseError(f"{name} needs C2", 1, col)
            return nullary[name]()
        if name in ("rotation_circle", "rotation_quotient_circle"):
            need(args, 1, col, name)
            if args[0] != n:
                raise ParseError(f"{name}({args[0]}) does not match the group C{n}", 1, col)
            return rotation_circle(n) if name == "rotation_circle" else rotation_quotient_circle(n)
        unary = {"cone": cone, "suspension": suspension, "sigma_suspension": sigma_suspension}
        if name in unary:
            need(args, 1, col, name)
            if name == "sigma_suspension" and n != 2:
                raise ParseError("sigma_suspension needs C2", 1, col)
            return unary[name](args[0])
        if name in ("product", "disjoint"):
            need(args, 2, col, name)
            return (product if name == "product" else disjoint_union)(*args)
        if name == "pushout":
            need(args, 3, col, name)
            x, z, y = args
            return pushout(x, z, y, _glue_map(z, x, 0), _glue_map(z, y, 1))
        raise ParseError(f"unknown space {name!r}", 1, col)

    out = expr()
    if cur()[0] != "eof":
        raise ParseError("trailing input in space expression", 1, cur()[2])
    return out


# ---------------------------------------------------------------------------
# Coefficients
# ---------------------------------------------------------------------------


def parse_coeff(text: str, p: int) -> tuple[TambaraFunctor, str]:
    """``burnside``, ``constant:RING``, ``norm:RING`` or ``box(C,C)``; returns the functor and a canonical key."""
    if not is_prime(p):
        raise ParseError(f"Tambara coefficients need a prime group order, got {p}")
    text = text.strip()
    if text == "burnside":
        return burnside_tambara(p), "burnside"
    if text.startswith("box(") and text.endswith(")"):
        inner = text[4:-1]
        depth = 0
        for i, ch in enumerate(inner):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                a, ka = parse_coeff(inner[:i], p)
                b, kb = parse_coeff(inner[i + 1:], p)
                return box_tambara(a, b), f"box({ka},{kb})"
        raise ParseError("box(C,C) needs two arguments")
    kind, _, ring_src = text.partition(":")
    if kind in ("constant", "norm") and ring_src:
        ring, src = load_ring(ring_src)
        t = constant_tambara(ring, p) if kind == "constant" else norm_construction(ring, p)
        return t, f"{kind}:{src}"
    raise ParseError(f"unknown coefficient expression {text!r}")


def parse_group(text: str) -> int:
    m = re.fullmatch(r"[Cc](\d+)", text.strip())
    if not m or int(m.group(1)) < 1:
        raise ParseError(f"group must look like C2, C3, ...; got {text!r}")
    return int(m.group(1))
