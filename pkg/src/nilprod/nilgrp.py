"""Groups: abelianisation of presentations and the class-two free product of abelian groups.

Elements of ``A +2 B`` are triples ``(a, b, t)`` standing for the normal
form ``i1(a) i2(b) c`` with ``c = t`` central in ``A (x) B``.  Moving
``i2(b)`` past ``i1(a')`` costs the commutator ``-(a' (x) b)``, which
gives the multiplication law used below.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import GroupMismatch, NilprodError, UnknownGenerator
from .exactlin import FgAbGroup, Matrix, ZZ, fgab_from_presentation, tensor_fgab
from .exactlin import modules as mod


# -- presentations ----------------------------------------------------

class WordSyntaxError(NilprodError, ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[()\[\],^])|(?P<int>-?\d+))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"cannot read word at column {pos + 1}: {text!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _WordParser:
    """word := factor*; factor := atom ('^' int)?; atom := name | '(' word ')' | '[' word ',' word ']'"""

    def __init__(self, text: str, gens: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {g: k for k, g in enumerate(gens)}
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise WordSyntaxError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def word(self) -> list[tuple[int, int]]:
        out = []
        while self.peek()[1] not in (None, ")", "]", ","):
            out.extend(self.factor())
        return out

    def factor(self):
        kind, val = self.peek()
        if kind == "name":
            self.take()
            if val not in self.index:
                raise UnknownGenerator(f"unknown generator {val!r} in {self.text!r}")
            base = [(self.index[val], 1)]
        elif val == "(":
            self.take("(")
            base = self.word()
            self.take(")")
        elif val == "[":
            self.take("[")
            u = self.word()
            self.take(",")
            v = self.word()
            self.take("]")
            base = u + v + _inverse(u) + _inverse(v)
        else:
            raise WordSyntaxError(f"unexpected {val!r} in {self.text!r}")
        if self.peek()[1] == "^":
            self.take("^")
            k = int(self.take()[1])
            base = base * k if k >= 0 else _inverse(base) * (-k)
        return base


def _inverse(word):
    return [(g, -e) for g, e in reversed(word)]


def parse_word(text: str, gens: Sequence[str]) -> tuple[tuple[int, int], ...]:
    """Parse ``a^2 b a^-1``, ``(a b)^2`` or ``[a, b]`` into (generator index, exponent) pairs."""
    p = _WordParser(text, gens)
    w = p.word()
    if p.peek()[0] is not None:
        raise WordSyntaxError(f"trailing input in {text!r}")
    return tuple(w)


def format_word(word, gens: Sequence[str]) -> str:
    parts = []
    for g, e in word:
        parts.append(gens[g] if e == 1 else f"{gens[g]}^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class FpGroupPresentation:
    generators: tuple
    relators: tuple  # each a tuple of (generator index, exponent)

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise NilprodError("duplicate generator names")
        for r in self.relators:
            for g, _ in r:
                if not 0 <= g < n:
                    raise UnknownGenerator(f"relator refers to generator index {g}")

    @classmethod
    def parse(cls, generators: Sequence[str], relators: Sequence[str]) -> "FpGroupPresentation":
        gens = tuple(generators)
        return cls(gens, tuple(parse_word(r, gens) for r in relators))

    def exponent_matrix(self) -> Matrix:
        rows = []
        for r in self.relators:
            row = [0] * len(self.generators)
            for g, e in r:
                row[g] += e
            rows.append(row)
        return Matrix.from_rows(ZZ, rows, len(self.generators))

    def relator_strings(self) -> list[str]:
        return [format_word(r, self.generators) for r in self.relators]


def abelianization_gp(P: FpGroupPresentation) -> FgAbGroup:
    return fgab_from_presentation(P.exponent_matrix())


def bilinear_product_gp(X: FpGroupPresentation, Y: FpGroupPresentation) -> FgAbGroup:
    """ab(X) (x) ab(Y)."""
    return tensor_fgab(abelianization_gp(X), abelianization_gp(Y))


# -- the class-two coproduct of abelian groups -------------------------

@dataclass(frozen=True)
class Nil2Element:
    group: "Nil2CoproductGroup"
    a: tuple
    b: tuple
    t: tuple

    def __mul__(self, other: "Nil2Element") -> "Nil2Element":
        return nil2_mul(self, other)

    def inverse(self) -> "Nil2Element":
        return nil2_inv(self)

    def is_identity(self) -> bool:
        return not any(self.a) and not any(self.b) and not any(self.t)

    def __repr__(self):
        return f"({list(self.a)}, {list(self.b)}, {list(self.t)})"


@dataclass(frozen=True)
class Nil2CoproductGroup:
    """A +2 B on the carrier A x B x (A (x) B); the tensor factor is indexed by pairs (i, j)."""

    A: FgAbGroup
    B: FgAbGroup

    @property
    def mod_a(self) -> mod.Module:
        return self.A.to_module()

    @property
    def mod_b(self) -> mod.Module:
        return self.B.to_module()

    @property
    def mod_t(self) -> mod.Module:
        return mod.tensor(self.mod_a, self.mod_b)

    @property
    def T(self) -> FgAbGroup:
        return self.mod_t.invariants()

    def element(self, a: Sequence[int], b: Sequence[int], t: Sequence[int] | None = None) -> Nil2Element:
        if t is None:
            t = [0] * self.mod_t.n
        if len(a) != self.mod_a.n or len(b) != self.mod_b.n or len(t) != self.mod_t.n:
            raise GroupMismatch("coordinate lengths do not match the group")
        return Nil2Element(self, tuple(self.mod_a.reduce(a)), tuple(self.mod_b.reduce(b)),
                           tuple(self.mod_t.reduce(t)))

    def identity(self) -> Nil2Element:
        return self.element([0] * self.mod_a.n, [0] * self.mod_b.n)

    def i1(self, a: Sequence[int]) -> Nil2Element:
        return self.element(a, [0] * self.mod_b.n)

    def i2(self, b: Sequence[int]) -> Nil2Element:
        return self.element([0] * self.mod_a.n, b)

    def central(self, t: Sequence[int]) -> Nil2Element:
        return self.element([0] * self.mod_a.n, [0] * self.mod_b.n, t)

    def tensor_vec(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Coordinates of a (x) b."""
        nb = self.mod_b.n
        v = [0] * self.mod_t.n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        v[i * nb + j] += x * y
        return self.mod_t.reduce(v)

    def retraction(self, g: Nil2Element) -> tuple[tuple, tuple]:
        """The comparison A +2 B -> A x B."""
        return g.a, g.b

    def is_finite(self) -> bool:
        return self.A.order is not None and self.B.order is not None

    def order(self) -> int | None:
        if not self.is_finite():
            return None
        return self.A.order * self.B.order * self.T.order

    def elements(self) -> Iterator[Nil2Element]:
        if not self.is_finite():
            raise NilprodError("cannot enumerate an infinite group")
        ranges = [range(o) for o in self.mod_a.orders + self.mod_b.orders + self.mod_t.orders]
        na, nb = self.mod_a.n, self.mod_b.n
        for coords in itertools.product(*ranges):
            yield self.element(coords[:na], coords[na:na + nb], coords[na + nb:])

    def center(self) -> list[Nil2Element]:
        els = list(self.elements())
        return [z for z in els if all(z * g == g * z for g in els)]

    def nilpotency_class(self) -> int:
        """Class of a finite instance by iterating commutator subgroups with the whole group."""
        els = list(self.elements())
        current = set(els)
        c = 0
        while len(current) > 1:
            gens = {nil2_commutator(x, g) for x in current for g in els}
            current = _generated_subgroup(gens, self.identity())
            c += 1
            if c > len(els):
                raise NilprodError("not nilpotent")
        return c


def _generated_subgroup(gens, identity):
    sub = {identity}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in sub:
                    sub.add(y)
                    nxt.append(y)
        frontier = nxt
    return sub


def nil2_coproduct(A: FgAbGroup, B: FgAbGroup) -> Nil2CoproductGroup:
    return Nil2CoproductGroup(A, B)


def _same(g: Nil2Element, h: Nil2Element):
    if g.group != h.group:
        raise GroupMismatch("elements belong to different groups")


def nil2_mul(g: Nil2Element, h: Nil2Element) -> Nil2Element:
    """(a,b,t)(a',b',t') = (a+a', b+b', t+t' - a'(x)b)."""
    _same(g, h)
    G = g.group
    cross = G.tensor_vec(h.a, g.b)
    return G.element([x + y for x, y in zip(g.a, h.a)],
                     [x + y for x, y in zip(g.b, h.b)],
                     [x + y - z for x, y, z in zip(g.t, h.t, cross)])


def nil2_inv(g: Nil2Element) -> Nil2Element:
    """(a,b,t)^-1 = (-a, -b, -t - a(x)b)."""
    G = g.group
    ab = G.tensor_vec(g.a, g.b)
    return G.element([-x for x in g.a], [-x for x in g.b], [-x - y for x, y in zip(g.t, ab)])


def nil2_commutator(g: Nil2Element, h: Nil2Element) -> Nil2Element:
    """g h g^-1 h^-1."""
    _same(g, h)
    return g * h * nil2_inv(g) * nil2_inv(h)


@dataclass(frozen=True)
class CosmashResult:
    group: FgAbGroup
    module: mod.Module
    inclusion: Matrix  # tensor coordinates -> carrier coordinates (a, b, t)


def cosmash_gp(A: FgAbGroup, B: FgAbGroup) -> CosmashResult:
    """Kernel of A +2 B -> A x B, the central part {(0, 0, t)}."""
    G = nil2_coproduct(A, B)
    na, nb, nt = G.mod_a.n, G.mod_b.n, G.mod_t.n
    inc = Matrix.zeros(ZZ, na + nb, nt).vstack(Matrix.identity(ZZ, nt))
    return CosmashResult(G.T, G.mod_t, inc)


@dataclass(frozen=True)
class CommutatorSubgroup:
    """A central subgroup of A +2 B given by generators in the tensor coordinates."""

    generators: Matrix
    group: FgAbGroup

    def contains(self, G: Nil2CoproductGroup, g: Nil2Element) -> bool:
        if any(g.a) or any(g.b):
            return False
        return mod.contains(G.mod_t, self.generators, list(g.t))


def higgins_commutator_nil2(G: Nil2CoproductGroup, K_gens: Sequence[Nil2Element],
                            L_gens: Sequence[Nil2Element]) -> CommutatorSubgroup:
    """[K, L] for subgroups given by generators.

    Commutators are central and the commutator map is bilinear in class
    two, so generator pairs suffice.
    """
    cols = []
    for k in K_gens:
        for l in L_gens:
            if k.group != G or l.group != G:
                raise GroupMismatch("generator outside the group")
            c = nil2_commutator(k, l)
            if any(c.a) or any(c.b):
                raise NilprodError("commutator is not central; group law is broken")
            if any(c.t):
                cols.append(list(c.t))
    MT = G.mod_t
    gens = Matrix.from_cols(ZZ, cols, MT.n) if cols else Matrix.zeros(ZZ, MT.n, 0)
    return CommutatorSubgroup(gens, mod.submodule_type(MT, gens).invariants())


def symmetry_gp(A: FgAbGroup, B: FgAbGroup) -> Matrix:
    """a (x) b |-> -(b (x) a), as a matrix from A (x) B to B (x) A coordinates."""
    return -mod.twist(A.to_module(), B.to_module())


def twist_coproduct(g: Nil2Element) -> Nil2Element:
    """The isomorphism A +2 B -> B +2 A exchanging the injections.

    Defined on generators only: the central part is rewritten as a
    product of commutators [i1(e_i), i2(f_j)]^t_ij, and each commutator
    is sent to [i2(e_i), i1(f_j)] evaluated with the group law of B +2 A.
    """
    G = g.group
    H = nil2_coproduct(G.B, G.A)
    na, nb = G.mod_a.n, G.mod_b.n
    out = H.i2(g.a) * H.i1(g.b)
    for i in range(na):
        for j in range(nb):
            k = g.t[i * nb + j]
            if k:
                ei = [1 if r == i else 0 for r in range(na)]
                fj = [1 if r == j else 0 for r in range(nb)]
                out = out * nil2_pow(nil2_commutator(H.i2(ei), H.i1(fj)), k)
    return out


def nil2_pow(g: Nil2Element, k: int) -> Nil2Element:
    base = g if k >= 0 else nil2_inv(g)
    out = g.group.identity()
    for _ in range(abs(k)):
        out = out * base
    return out
