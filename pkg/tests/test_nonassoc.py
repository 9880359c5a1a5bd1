import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod import randgen
from nilprod.errors import NotIdeal, RepAxiomFailure, WrongVariety
from nilprod.exactlin import GF, QQ, Matrix
from nilprod.nonassoc import (SCAlgebra, abelian_extension_analysis, bilinear_product_sc, birkhoff_reflect,
                              center, check_identity, commute_nil_birkhoff_test, higgins_commutator, is_ideal,
                              j_filtration, left_normed_chain, lower_central_series, nilpotentisation,
                              quotient_algebra, rep_tensor_lie, sl2, sl2_standard_rep, ternary_commutator)
from nilprod.nonassoc.reps import LieRep, adjoint_rep, validated
from oracles import all_bracketings, span_rank


def heisenberg(F=QQ):
    return SCAlgebra.from_products(F, 3, {(0, 1): [0, 0, 1]}, "Lie")


def test_identities():
    assert check_identity(heisenberg()).valid
    assert check_identity(sl2(QQ)).valid
    leib = SCAlgebra.from_products(QQ, 2, {(1, 0): [0, 1]}, "Leib", mirror=False)
    assert check_identity(leib).valid
    assert not check_identity(leib, "Lie").valid
    bad_assoc = SCAlgebra.from_products(QQ, 2, {(0, 0): [0, 1], (1, 0): [1, 0]}, "Assoc", mirror=False)
    assert not check_identity(bad_assoc).valid


def test_lower_central_series_examples():
    assert lower_central_series(heisenberg()).dims() == [3, 1, 0]
    assert lower_central_series(heisenberg()).nilpotency_class == 2
    L = lower_central_series(sl2(QQ))
    assert L.dims() == [3] and not L.nilpotent
    ab = lower_central_series(SCAlgebra.abelian(QQ, 2, "Lie"))
    assert ab.dims() == [2, 0] and ab.nilpotency_class == 1
    two_dim = SCAlgebra.from_products(QQ, 2, {(0, 1): [0, 1]}, "Lie")
    assert lower_central_series(two_dim).gamma(3) == two_dim.span([[0, 1]])


def test_center_and_commutators_of_heisenberg():
    h = heisenberg()
    z = h.span([[0, 0, 1]])
    assert center(h) == z
    assert higgins_commutator(h, h.full(), h.full()) == z
    assert ternary_commutator(h, h.full(), h.full(), h.full()).dim == 0
    with pytest.raises(NotIdeal):
        ternary_commutator(h, h.span([[1, 0, 0]]), h.full(), h.full())


def test_quotients_and_nilpotentisation():
    h = heisenberg()
    Q = quotient_algebra(h, center(h))
    assert Q.algebra.dim == 2 and Q.algebra.is_abelian()
    assert nilpotentisation(h, 1).algebra.dim == 2
    assert nilpotentisation(h, 2).algebra.dim == 3
    assert nilpotentisation(sl2(QQ), 3).algebra.dim == 0


def test_birkhoff_reflectors():
    leib = SCAlgebra.from_products(QQ, 2, {(1, 0): [0, 1]}, "Leib", mirror=False)
    R = birkhoff_reflect(leib, "Lie-from-Leib")
    assert R.algebra.dim == 1
    upper = randgen.random_assoc(random.Random(3), QQ)
    C = birkhoff_reflect(upper, "Comm-from-Assoc")
    assert check_identity(C.algebra.with_variety("Comm")).valid
    with pytest.raises(WrongVariety):
        birkhoff_reflect(heisenberg(), "Comm-from-Assoc")


def test_abelian_extension_example():
    h = heisenberg()
    rep = abelian_extension_analysis(h, h.full())
    out = rep.to_json()
    assert out["commutator_dim"] == 1 and out["ternary_dim"] == 0
    assert rep.quotient.algebra.dim == 2
    with pytest.raises(NotIdeal):
        abelian_extension_analysis(h, h.span([[1, 0, 0]]))


def test_bilinear_products_of_structure_constant_algebras():
    h = heisenberg()
    assert bilinear_product_sc(h, h).dim == 4
    assert bilinear_product_sc(sl2(QQ), h).dim == 0
    A = SCAlgebra.abelian(QQ, 2, "Leib")
    B = SCAlgebra.abelian(QQ, 3, "Leib")
    assert bilinear_product_sc(A, B).dim == 12
    assert bilinear_product_sc(SCAlgebra.abelian(QQ, 2, "Lie"), SCAlgebra.abelian(QQ, 3, "Lie")).dim == 6


def _kernel_dim(M, F):
    return M.ncols - span_rank(M.rows, F)


def test_kronecker_sum_of_the_standard_representation():
    V = sl2_standard_rep(QQ)
    T = rep_tensor_lie(V, V)
    assert T.dim == 4 and T.is_valid()
    h = T.rho[2]
    eig = {lam: _kernel_dim(h - Matrix.identity(QQ, 4).scale(lam), QQ) for lam in (2, 0, -2)}
    assert eig == {2: 1, 0: 2, -2: 1}


def test_broken_representation_is_reported():
    g = sl2(QQ)
    e = Matrix.from_rows(QQ, [[0, 1], [0, 0]])
    f = Matrix.from_rows(QQ, [[0, 0], [1, 0]])
    zero = Matrix.zeros(QQ, 2, 2)
    bad = LieRep(g, 2, (e, f, zero))
    assert bad.axiom_failures()
    with pytest.raises(RepAxiomFailure):
        validated(bad)
    assert adjoint_rep(g).is_valid()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["Lie", "Leib", "Assoc"]), st.sampled_from([QQ, GF(5)]))
def test_filtration_equals_all_bracketings_and_left_normed(seed, variety, F):
    A = randgen.random_tagged_algebra(random.Random(seed), F, variety, 4)
    left = left_normed_chain(A, 4)
    for n in range(1, 5):
        J = j_filtration(A, n)
        brute = all_bracketings(A, n)
        assert J.dim == span_rank(brute, F)
        assert all(J.contains(v) for v in brute)
        assert J == left[n - 1]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_filtration_terms_are_ideals_and_decrease(seed):
    A = randgen.random_tagged_algebra(random.Random(seed), QQ, "Leib", 5)
    prev = A.full()
    for n in range(1, 5):
        J = j_filtration(A, n)
        assert is_ideal(A, J) and J <= prev
        prev = J


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_reflector_commutes_with_nilpotentisation(seed, n):
    L = randgen.random_tagged_algebra(random.Random(seed), QQ, "Leib", 5)
    assert commute_nil_birkhoff_test(L, n).isomorphic


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([QQ, GF(5)]))
def test_kronecker_sums_are_representations(seed, F):
    rng = random.Random(seed)
    xi = randgen.random_lie_rep(rng, F)
    zeta = rng.choice([xi, adjoint_rep(xi.algebra)])
    assert rep_tensor_lie(xi, zeta).is_valid()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_basis_change_preserves_identities_and_series(seed):
    rng = random.Random(seed)
    g = randgen.random_nilpotent_lie(rng, QQ, 5, basis_change=False)
    P = randgen.random_invertible(rng, QQ, g.dim)
    g2 = g.change_basis(P)
    assert check_identity(g2).valid
    assert lower_central_series(g).dims() == lower_central_series(g2).dims()


def test_every_basis_product_is_in_the_span_of_the_table():
    h = heisenberg()
    for i, j in product(range(3), repeat=2):
        assert h.mul(h.basis_vector(i), h.basis_vector(j)) == list(h.table[i][j])
