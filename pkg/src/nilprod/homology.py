"""Chevalley-Eilenberg H1 and H2 of Lie algebras and the six-term Ganea sequence.

Conventions: d2(x^y) = -[x,y] and
d3(x^y^z) = -[x,y]^z + [x,z]^y - [y,z]^x.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Sequence

from .errors import NotCentral, NotIdeal, WrongVariety
from .exactlin import Matrix, QuotientSpace, Subspace, field_kernel
from .exactlin.linalg import solve_field
from .nonassoc import SCAlgebra, is_ideal, j_filtration, quotient_algebra
from .nonassoc.quotients import QuotientAlgebra


def _require_lie(g: SCAlgebra):
    if g.variety != "Lie":
        raise WrongVariety(f"Lie algebra homology needs a Lie-tagged algebra, got {g.variety}")


def wedge_basis(n: int, k: int) -> list[tuple]:
    return list(combinations(range(n), k))


def wedge2(u: Sequence, v: Sequence, F) -> list:
    """u ^ v in the basis e_a ^ e_b (a < b)."""
    return [u[a] * v[b] - u[b] * v[a] for a, b in wedge_basis(len(u), 2)]


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def ce_d2(g: SCAlgebra) -> Matrix:
    F = g.field
    cols = [[-x for x in g.mul(g.basis_vector(i), g.basis_vector(j))] for i, j in wedge_basis(g.dim, 2)]
    return Matrix.from_cols(F, cols, g.dim)


def ce_d3(g: SCAlgebra) -> Matrix:
    F = g.field
    n = g.dim
    e = [g.basis_vector(i) for i in range(n)]
    cols = []
    for i, j, k in wedge_basis(n, 3):
        x, y, z = e[i], e[j], e[k]
        v = [-c for c in wedge2(g.mul(x, y), z, F)]
        v = _add(v, wedge2(g.mul(x, z), y, F))
        v = _sub(v, wedge2(g.mul(y, z), x, F))
        cols.append(v)
    return Matrix.from_cols(F, cols, n * (n - 1) // 2)


@dataclass(frozen=True, eq=False)
class CEHomology:
    algebra: SCAlgebra
    h1: QuotientSpace      # g / [g, g]
    h2: QuotientSpace      # ker d2 / im d3 inside Lambda^2 g
    d2: Matrix
    d3: Matrix

    @property
    def dims(self) -> tuple[int, int]:
        return self.h1.dim, self.h2.dim

    def to_json(self) -> dict:
        return {"H1": self.h1.dim, "H2": self.h2.dim,
                "cycles": self.h2.V.dim, "boundaries": self.h2.W.dim}


def _span_cols(F, n, M: Matrix) -> Subspace:
    return Subspace.span(F, n, M.cols())


def ce_homology(g: SCAlgebra) -> CEHomology:
    _require_lie(g)
    F, n = g.field, g.dim
    d2, d3 = ce_d2(g), ce_d3(g)
    m = n * (n - 1) // 2
    cycles = Subspace.from_matrix_cols(field_kernel(d2)) if m else Subspace.zero(F, 0)
    bounds = _span_cols(F, m, d3)
    derived = _span_cols(F, n, d2)
    return CEHomology(g, QuotientSpace(Subspace.full(F, n), derived), QuotientSpace(cycles, bounds), d2, d3)


# -- central extensions ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CentralExtension:
    B: SCAlgebra
    K: Subspace
    quotient: QuotientAlgebra

    @property
    def A(self) -> SCAlgebra:
        return self.quotient.algebra


def central_extension_validate(B: SCAlgebra, K: Subspace) -> CentralExtension:
    _require_lie(B)
    if not is_ideal(B, K):
        raise NotIdeal("K is not an ideal of B")
    for k in K.basis:
        for i in range(B.dim):
            v = B.mul(list(k), B.basis_vector(i))
            if any(x != 0 for x in v):
                raise NotCentral(f"[{_fmt(k, B.field)}, e{i + 1}] = {_fmt(v, B.field)} is nonzero")
    return CentralExtension(B, K, quotient_algebra(B, K))


def _fmt(v, F) -> str:
    return "(" + ", ".join(str(F.to_json(x)) for x in v) + ")"


# -- the Ganea sequence ----------------------------------------------------------

TERM_NAMES = ("K (x) H1(B)", "H2(B)", "H2(A)", "K", "H1(B)", "H1(A)")


@dataclass(frozen=True, eq=False)
class GaneaSequence:
    extension: CentralExtension
    dims: tuple
    maps: tuple  # g1..g5; g_i goes from term i to term i+1 (0-based terms)
    characteristic_two: bool = False

    def with_map(self, index: int, M: Matrix) -> "GaneaSequence":
        """Copy with g_index (1-based) replaced, for negative controls."""
        maps = list(self.maps)
        maps[index - 1] = M
        return replace(self, maps=tuple(maps))

    def to_json(self) -> dict:
        F = self.extension.B.field
        return {"terms": list(TERM_NAMES), "dims": list(self.dims),
                "maps": [m.to_json() for m in self.maps], "field": F.name,
                "characteristic_two": self.characteristic_two}


def _matrix(F, cols, nrows) -> Matrix:
    return Matrix.from_cols(F, cols, nrows) if cols else Matrix.zeros(F, nrows, 0)


def ganea_sequence(E: CentralExtension, section: Matrix | None = None) -> GaneaSequence:
    """All six terms and five maps.  ``section`` (dim B x dim A) must satisfy p s = 1."""
    B, K, Q = E.B, E.K, E.quotient
    A = Q.algebra
    F = B.field
    p = Q.proj
    s = Q.section if section is None else section
    if section is not None and not (p @ section - Matrix.identity(F, A.dim)).is_zero():
        raise ValueError("the given section does not split the projection")
    HB, HA = ce_homology(B), ce_homology(A)
    h1B, h2B, h1A, h2A = HB.h1, HB.h2, HA.h1, HA.h2
    kb = [list(v) for v in K.basis]

    # g1: k (x) [b] |-> [k ^ b]
    g1_cols = []
    for k in kb:
        for rep in h1B.reps:
            g1_cols.append(h2B.coords(wedge2(k, rep, F)))
    g1 = _matrix(F, g1_cols, h2B.dim)

    # g2: Lambda^2 p on cycle representatives
    g2_cols = []
    for z in h2B.reps:
        img = [F.zero] * (A.dim * (A.dim - 1) // 2)
        for c, (i, j) in zip(z, wedge_basis(B.dim, 2)):
            if c != 0:
                img = _add(img, [c * x for x in wedge2(p.col(i), p.col(j), F)])
        g2_cols.append(h2A.coords(img))
    g2 = _matrix(F, g2_cols, h2A.dim)

    # g3: sum c [a ^ b] |-> sum c [s a, s b], which lands in K
    Kmat = _matrix(F, kb, B.dim)
    g3_cols = []
    for w in h2A.reps:
        acc = B.zero_vector()
        for c, (i, j) in zip(w, wedge_basis(A.dim, 2)):
            if c != 0:
                acc = _add(acc, [c * x for x in B.mul(s.col(i), s.col(j))])
        coords = solve_field(Kmat, acc) if kb else ([] if all(x == 0 for x in acc) else None)
        if coords is None:
            raise NotCentral("bracket of lifts does not land in K; the extension data is inconsistent")
        g3_cols.append(coords)
    g3 = _matrix(F, g3_cols, len(kb))

    # g4: K -> H1(B); g5: H1(B) -> H1(A)
    g4 = _matrix(F, [h1B.coords(k) for k in kb], h1B.dim)
    g5 = _matrix(F, [h1A.coords(p.apply(rep)) for rep in h1B.reps], h1A.dim)

    dims = (len(kb) * h1B.dim, h2B.dim, h2A.dim, len(kb), h1B.dim, h1A.dim)
    return GaneaSequence(E, dims, (g1, g2, g3, g4, g5), F.characteristic == 2)


@dataclass
class ExactnessReport:
    dims: tuple
    positions: dict = field(default_factory=dict)   # term name -> bool (image == kernel)
    composites_vanish: list = field(default_factory=list)
    surjective_end: bool = True

    @property
    def exact(self) -> bool:
        return all(self.positions.values()) and all(self.composites_vanish) and self.surjective_end

    def failing(self) -> list[str]:
        return [k for k, v in self.positions.items() if not v]

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "positions": self.positions,
                "composites_vanish": self.composites_vanish, "surjective_end": self.surjective_end,
                "exact": self.exact}


def _image(M: Matrix, F) -> Subspace:
    return Subspace.span(F, M.nrows, M.cols())


def _kernel(M: Matrix, F) -> Subspace:
    if M.ncols == 0:
        return Subspace.zero(F, 0)
    return Subspace.from_matrix_cols(field_kernel(M))


def exactness_check(S: GaneaSequence) -> ExactnessReport:
    F = S.extension.B.field
    rep = ExactnessReport(S.dims)
    for pos in range(1, 5):
        incoming, outgoing = S.maps[pos - 1], S.maps[pos]
        rep.positions[TERM_NAMES[pos]] = _image(incoming, F) == _kernel(outgoing, F)
        rep.composites_vanish.append((outgoing @ incoming).is_zero())
    g5 = S.maps[4]
    rep.surjective_end = _image(g5, F).dim == S.dims[5]
    return rep


@dataclass
class LcsGaneaReport:
    n: int
    dims: tuple          # gamma_n (x) H1(X), H2(X), H2(X/gamma_n), gamma_n
    exact_at_h2x: bool
    exact_at_h2q: bool
    sequence: GaneaSequence

    @property
    def exact(self) -> bool:
        return self.exact_at_h2x and self.exact_at_h2q

    def to_json(self) -> dict:
        return {"n": self.n, "dims": list(self.dims), "exact": self.exact}


def lcs_ganea_application(X: SCAlgebra, n: int) -> LcsGaneaReport:
    """The fragment gamma_n (x) X -> H2(X) -> H2(X/gamma_n) -> gamma_n for X of class at most n."""
    _require_lie(X)
    if n < 2:
        raise ValueError("n must be at least 2")
    gn = j_filtration(X, n)
    E = central_extension_validate(X, gn)
    S = ganea_sequence(E)
    full = exactness_check(S)
    names = TERM_NAMES
    return LcsGaneaReport(n, S.dims[:4], full.positions[names[1]], full.positions[names[2]], S)
