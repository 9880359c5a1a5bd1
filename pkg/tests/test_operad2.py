import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod import operad2, randgen
from nilprod.errors import BadCharacteristic, InvalidAlgebra, NotInvolution, OperadMismatch
from nilprod.exactlin import GF, QQ, ZZ, FgAbGroup, Matrix, Module
from nilprod.exactlin import modules as mod
from nilprod.operad2 import (AlgebraMap, abelian_algebra, algebra_from_products, bilinear2, coproduct2,
                             cosmash2, free_nil2_algebra, preset_operad, product2, symmetry2, validate_algebra)

PRESETS = ["Comm", "Assoc", "Lie", "Leib"]


def free_dim(variety, n):
    """n generators plus the coinvariants of V (x) V (x) P2, counted by hand."""
    return n + {"Comm": n * (n + 1) // 2, "Lie": n * (n - 1) // 2,
                "Assoc": n * n, "Leib": n * n, "Mod": 0}[variety]


@pytest.mark.parametrize("variety", PRESETS + ["Mod"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_free_algebra_dimensions(variety, n):
    A = free_nil2_algebra(preset_operad(variety, QQ), Module.free(QQ, n))
    assert A.n == free_dim(variety, n)
    assert validate_algebra(A).valid


def test_free_commutative_on_one_generator():
    A = free_nil2_algebra(preset_operad("Comm", QQ), Module.free(QQ, 1))
    x = [1, 0]
    assert A.product(x, x, [1]) == [0, 1]


def test_lie_preset_rejects_characteristic_two():
    with pytest.raises(BadCharacteristic):
        preset_operad("Lie", GF(2))
    assert preset_operad("Lie", GF(3)).p == 1


def test_involution_is_checked():
    with pytest.raises(NotInvolution):
        operad2.Nil2Operad(QQ, Module.free(QQ, 1), Matrix.from_rows(QQ, [[2]]))
    with pytest.raises(NotInvolution):
        operad2.Nil2Operad(ZZ, Module(ZZ, (4,)), Matrix.from_rows(ZZ, [[2]]))
    # 3 * 3 = 1 mod 4, so this one is fine
    assert operad2.Nil2Operad(ZZ, Module(ZZ, (4,)), Matrix.from_rows(ZZ, [[3]])).p == 1


def _violations(alg):
    return {v["check"] for v in validate_algebra(alg).violations}


def test_validation_reports_each_kind_of_violation():
    comm = preset_operad("Comm", QQ)
    A = Module.free(QQ, 2)
    D = Matrix.from_cols(QQ, [[0, 1]], 2)
    leaks = algebra_from_products(comm, A, D, {(0, 0, 0): [1, 0]})
    assert "image_in_decomposables" in _violations(leaks)
    assert "surjective_onto_decomposables" in _violations(leaks)
    slot = algebra_from_products(comm, A, D, {(0, 0, 0): [0, 1], (1, 0, 0): [0, 1]})
    assert "decomposable_slot" in _violations(slot)

    assoc = preset_operad("Assoc", QQ)
    lopsided = algebra_from_products(assoc, A, D, {(0, 0, 0): [0, 1]}, complete_symmetric=False)
    assert "symmetry" in _violations(lopsided)

    commz = preset_operad("Comm", ZZ)
    tors = algebra_from_products(commz, Module(ZZ, (2, 0)), Matrix.from_cols(ZZ, [[0, 1]], 2),
                                 {(0, 0, 0): [0, 1]})
    assert "torsion" in _violations(tors)
    with pytest.raises(InvalidAlgebra):
        operad2.require_valid(tors)


def test_coproduct_dimensions():
    for variety, dim in (("Comm", 3), ("Assoc", 4), ("Lie", 3), ("Leib", 4), ("Mod", 2)):
        op = preset_operad(variety, QQ)
        L = abelian_algebra(op, Module.free(QQ, 1))
        assert coproduct2(L, L).algebra.n == dim


def test_cyclic_groups_under_the_commutative_operad():
    op = preset_operad("Comm", ZZ)
    X, Y = abelian_algebra(op, Module(ZZ, (4,))), abelian_algebra(op, Module(ZZ, (6,)))
    assert cosmash2(X, Y).algebra.A.invariants() == FgAbGroup.from_orders([2])
    assert validate_algebra(coproduct2(X, Y).algebra).valid


def test_mixed_operads_are_rejected():
    X = abelian_algebra(preset_operad("Comm", QQ), Module.free(QQ, 1))
    Y = abelian_algebra(preset_operad("Lie", QQ), Module.free(QQ, 1))
    with pytest.raises(OperadMismatch):
        coproduct2(X, Y)


def test_symmetry_depends_on_the_operad():
    V = Module.free(QQ, 2)
    for variety, sign in (("Comm", 1), ("Lie", -1)):
        X = abelian_algebra(preset_operad(variety, QQ), V)
        assert symmetry2(X, X) == mod.twist(V, V).scale(sign)


def test_algebra_maps_on_the_free_commutative_algebra():
    A = free_nil2_algebra(preset_operad("Comm", QQ), Module.free(QQ, 1))
    assert AlgebraMap(A, A, Matrix.diag(QQ, [2, 4])).is_valid()
    assert not AlgebraMap(A, A, Matrix.diag(QQ, [2, 2])).is_valid()


def test_copairing_is_an_algebra_map():
    op = preset_operad("Leib", QQ)
    A = free_nil2_algebra(op, Module.free(QQ, 1))
    cp = coproduct2(A, A)
    f = AlgebraMap(A, A, mod.identity(A.A))
    h = cp.copair(f.matrix, f.matrix, A)
    assert AlgebraMap(cp.algebra, A, h).is_valid()
    assert h @ cp.inj_left == mod.identity(A.A)


def test_comparison_map_kernel_is_the_mixed_summand():
    op = preset_operad("Assoc", ZZ)
    A = free_nil2_algebra(op, Module(ZZ, (0,)))
    B = free_nil2_algebra(op, Module(ZZ, (3,)))
    cp = coproduct2(A, B)
    comp = cp.comparison()
    K = mod.kernel(comp, cp.algebra.A, product2(A, B).algebra.A)
    assert mod.sub_eq(cp.algebra.A, K, cp.mixed_inclusion)


def test_bilinear_product_examples():
    for variety, dim in (("Lie", 6), ("Leib", 12), ("Comm", 6), ("Assoc", 12), ("Mod", 0)):
        op = preset_operad(variety, QQ)
        X, Y = abelian_algebra(op, Module.free(QQ, 2)), abelian_algebra(op, Module.free(QQ, 3))
        assert bilinear2(X, Y).n == dim


def test_lower_central_series_of_an_operad_algebra():
    A = free_nil2_algebra(preset_operad("Leib", ZZ), Module(ZZ, (2, 0)))
    J = operad2.j_filtration2(A)
    assert mod.sub_eq(A.A, J[1], A.D)
    assert all(A.A.is_zero(c) for c in J[2].cols())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(PRESETS), st.sampled_from([QQ, ZZ]))
def test_bilinearity_in_the_first_variable(seed, variety, R):
    rng = random.Random(seed)
    op = preset_operad(variety, R)
    A, B, C = (randgen.random_nil2_algebra(rng, op) for _ in range(3))
    lhs = cosmash2(coproduct2(A, B).algebra, C).algebra.A
    rhs = product2(cosmash2(A, C).algebra, cosmash2(B, C).algebra).algebra.A
    assert lhs.isomorphic(rhs)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(PRESETS), st.sampled_from([QQ, ZZ]))
def test_generated_algebras_are_valid_and_coproducts_stay_valid(seed, variety, R):
    rng = random.Random(seed)
    op = preset_operad(variety, R)
    A, B = randgen.random_nil2_algebra(rng, op), randgen.random_nil2_algebra(rng, op)
    assert validate_algebra(A).valid
    assert validate_algebra(coproduct2(A, B).algebra).valid
    assert validate_algebra(product2(A, B).algebra).valid
