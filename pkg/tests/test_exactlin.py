from fractions import Fraction
from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod.errors import DomainMismatch
from nilprod.exactlin import (GF, QQ, ZZ, FgAbGroup, Matrix, Module, Subspace, determinant,
                              exterior_square_fgab, field_kernel, fgab_from_presentation, map_cokernel,
                              rank, ring_from_name, smith_normal_form, solve, tensor_fgab)
from nilprod.exactlin import modules as mod
from nilprod.exactlin.linalg import inverse

small_int = st.integers(-6, 6)


@st.composite
def int_matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(ZZ, rows, c)


def minor_gcd(M: Matrix, k: int) -> int:
    """gcd of all k x k minors, by cofactor expansion (independent of the SNF code)."""
    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(len(rows)))

    g = 0
    for rs in combinations(range(M.nrows), k):
        for cs in combinations(range(M.ncols), k):
            g = gcd(g, det([[M.rows[i][j] for j in cs] for i in rs]))
    return g


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_smith_form_matches_minor_gcds(M):
    res = smith_normal_form(M)
    assert res.U @ M @ res.V == res.D
    assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
    diag = res.diagonal
    for i in range(1, len(diag)):
        if diag[i]:
            assert diag[i] % diag[i - 1] == 0
    prod_k = 1
    for k in range(1, min(M.shape) + 1):
        prod_k *= diag[k - 1] if k - 1 < len(diag) else 0
        assert abs(prod_k) == minor_gcd(M, k)


def test_smith_form_small_example():
    M = Matrix.from_rows(ZZ, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(M).diagonal == [2, 6, 12]


@settings(max_examples=40, deadline=None)
@given(int_matrices(), st.lists(small_int, min_size=4, max_size=4))
def test_integer_solve(M, x):
    x = x[:M.ncols]
    b = M.apply(x)
    y = solve(M, b)
    assert y is not None and M.apply(y) == b


def test_solve_reports_no_integer_solution():
    assert solve(Matrix.from_rows(ZZ, [[2]]), [1]) is None


@settings(max_examples=40, deadline=None)
@given(int_matrices(), st.sampled_from(["Q", "F5", "F7"]))
def test_field_kernel_and_rank(M, name):
    F = ring_from_name(name)
    A = M.convert(F)
    K = field_kernel(A)
    assert (A @ K).is_zero()
    assert K.ncols + rank(A) == A.ncols


def test_inverse_over_fraction_field():
    M = Matrix.from_rows(QQ, [[2, 1], [1, 1]])
    assert M @ inverse(M) == Matrix.identity(QQ, 2)
    assert inverse(M).rows[0][0] == Fraction(1)


def test_gf_arithmetic_and_parsing():
    F = GF(7)
    assert F.convert(Fraction(1, 2)) * F.convert(2) == F.one
    assert ring_from_name("GF7") == F
    with pytest.raises(ValueError):
        QQ.convert(F.one)


def test_subspace_lattice_operations():
    F = QQ
    U = Subspace.span(F, 3, [[1, 0, 0], [0, 1, 0]])
    W = Subspace.span(F, 3, [[0, 1, 0], [0, 0, 1]])
    assert U.meet(W).dim == 1 and U.join(W).dim == 3
    assert U.meet(W) <= U
    assert U.contains([2, -3, 0]) and not U.contains([0, 0, 1])


# -- finitely generated abelian groups ----------------------------------------------

orders = st.lists(st.sampled_from([0, 1, 2, 3, 4, 6, 8, 9]), max_size=3)


def count_hom_to(group_orders, k):
    """|Hom(G, Z/k)| for G = sum Z/o_i, counted directly."""
    total = 1
    for o in group_orders:
        total *= gcd(o, k) if o else k
    return total


@settings(max_examples=60, deadline=None)
@given(orders, orders)
def test_tensor_against_gcd_formula(a, b):
    T = tensor_fgab(FgAbGroup.from_orders(a), FgAbGroup.from_orders(b))
    expected = FgAbGroup.from_orders([gcd(m, n) for m in a for n in b])
    assert T == expected


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([2, 3, 4, 6]), min_size=1, max_size=2),
       st.lists(st.sampled_from([2, 3, 4, 6]), min_size=1, max_size=2), st.sampled_from([2, 4, 6, 12]))
def test_tensor_counts_bilinear_maps(a, b, k):
    """|Hom(A (x) B, Z/k)| equals the number of bilinear maps A x B -> Z/k, enumerated."""
    T = tensor_fgab(FgAbGroup.from_orders(a), FgAbGroup.from_orders(b))
    # a bilinear map is a choice of f(e_i, f_j) in Z/k killed by gcd(a_i, b_j)
    bilinear = 0
    for values in product(range(k), repeat=len(a) * len(b)):
        ok = True
        for (i, j), v in zip(product(range(len(a)), range(len(b))), values):
            if (a[i] * v) % k or (b[j] * v) % k:
                ok = False
                break
        bilinear += ok
    assert count_hom_to(T.invariant_factors, k) == bilinear


@settings(max_examples=40, deadline=None)
@given(orders)
def test_exterior_square_formula(a):
    expected = FgAbGroup.from_orders([gcd(a[i], a[j]) for i in range(len(a)) for j in range(i + 1, len(a))])
    assert exterior_square_fgab(FgAbGroup.from_orders(a)) == expected


def test_presentation_and_printing():
    G = fgab_from_presentation(Matrix.from_rows(ZZ, [[2, 0], [0, 3]]))
    assert G.invariant_factors == (6,)
    assert str(FgAbGroup.from_orders([2, 0])) == "Z/2 + Z"
    assert FgAbGroup.from_orders([4, 6]).invariant_factors == (2, 12)


def test_map_cokernel_requires_a_homomorphism():
    Z6, Z = FgAbGroup.from_orders([6]), FgAbGroup.free(1)
    with pytest.raises(DomainMismatch):
        map_cokernel(Matrix.from_rows(ZZ, [[1]]), Z6, Z)
    C = map_cokernel(Matrix.from_rows(ZZ, [[2]]), Z, FgAbGroup.from_orders([6]))
    assert C.group.invariant_factors == (2,)


def test_module_quotient_and_kernel():
    M = Module(ZZ, (0, 4))
    q = mod.quotient(M, Matrix.from_cols(ZZ, [[2, 2]], 2))
    # relations (0, 4) and (2, 2): entry gcd 2, determinant 8
    assert q.module.invariants() == FgAbGroup.from_orders([2, 4])
    f = Matrix.from_rows(ZZ, [[1, 0]])
    K = mod.kernel(f, Module.free(ZZ, 2), Module.free(ZZ, 1))
    assert mod.sub_eq(Module.free(ZZ, 2), K, Matrix.from_cols(ZZ, [[0, 1]], 2))


@settings(max_examples=30, deadline=None)
@given(orders, orders)
def test_module_tensor_agrees_with_group_tensor(a, b):
    M, N = Module(ZZ, tuple(a)), Module(ZZ, tuple(b))
    assert mod.tensor(M, N).invariants() == tensor_fgab(M.invariants(), N.invariants())
