import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod.errors import ActionInvalid, DomainMismatch
from nilprod.exactlin import ZZ, FgAbGroup, Matrix, tensor_fgab
from nilprod.nilgrp import FpGroupPresentation
from nilprod.suites import random_abxmod
from nilprod.xmod import (AbCrossedModule, GroupXModInput, compare_tensors, free_rank_one_xmod, pxmod_tensor,
                          same_invariants, unit_xmod, xmod_abelianize, xmod_tensor, zero_xmod)


def test_golden_value_for_the_free_rank_one_crossed_module():
    M = free_rank_one_xmod()
    T = xmod_tensor(M, M).result
    assert T.G == FgAbGroup.free(4)
    assert T.A == FgAbGroup.free(3)
    assert T.is_injective()
    inv = T.invariants()
    assert inv["kernel"] == [] and inv["cokernel"] == [0]


def test_precrossed_product_before_the_cokernel():
    M = free_rank_one_xmod()
    P = pxmod_tensor(M, M)
    assert P.to_json()["middle"] == [0] * 5
    c = compare_tensors(M, M)
    assert c.surjective and c.kernel_matches and c.boundaries_commute


def test_zero_and_unit():
    M = free_rank_one_xmod()
    assert same_invariants(xmod_tensor(M, zero_xmod()).result, zero_xmod())
    assert same_invariants(xmod_tensor(unit_xmod(), M).result, M)
    assert same_invariants(xmod_tensor(M, unit_xmod()).result, M)
    assert not same_invariants(xmod_tensor(M, M).result, M)


def test_boundary_must_respect_torsion():
    with pytest.raises(DomainMismatch):
        AbCrossedModule.build([0], [6], [[1]])
    assert AbCrossedModule.build([6], [0], [[2]]).invariants()["cokernel"] == [2]


def test_top_layer_is_the_tensor_of_the_tops():
    M1 = AbCrossedModule.build([4], [0], [[2]])
    M2 = AbCrossedModule.build([6, 0], [3], [[2], [0]])
    T = xmod_tensor(M1, M2).result
    assert T.G == tensor_fgab(M1.G, M2.G)


S3_GENS, S3_RELS = ["a", "b"], ["a^2", "b^3", "(a b)^2"]


def test_abelianising_conjugation_on_s3():
    G = FpGroupPresentation.parse(S3_GENS, S3_RELS)
    A = FpGroupPresentation.parse(S3_GENS, S3_RELS)
    # conjugation by a inverts b; by b it fixes both generators after abelianising
    X = GroupXModInput(G, A, {"a": [[1, 0], [0, -1]], "b": [[1, 0], [0, 1]]}, {"a": "a", "b": "b"})
    M = xmod_abelianize(X)
    assert M.G == FgAbGroup.from_orders([2])
    assert M.A == FgAbGroup.from_orders([2])
    assert M.d == Matrix.from_rows(ZZ, [[1]])


def test_non_invertible_action_is_rejected():
    G = FpGroupPresentation.parse(["g"], [])
    A = FpGroupPresentation.parse(["x"], [])
    with pytest.raises(ActionInvalid):
        xmod_abelianize(GroupXModInput(G, A, {"g": [[2]]}, {"x": "g"}))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_symmetry_unit_and_comparison(seed):
    rng = random.Random(seed)
    M1, M2 = random_abxmod(rng), random_abxmod(rng)
    assert same_invariants(xmod_tensor(M1, M2).result, xmod_tensor(M2, M1).result)
    assert same_invariants(xmod_tensor(unit_xmod(), M1).result, M1)
    c = compare_tensors(M1, M2)
    assert c.surjective and c.kernel_matches and c.boundaries_commute


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_associativity_up_to_invariants(seed):
    rng = random.Random(seed)
    M1, M2, M3 = (random_abxmod(rng, 1) for _ in range(3))
    left = xmod_tensor(xmod_tensor(M1, M2).result, M3).result
    right = xmod_tensor(M1, xmod_tensor(M2, M3).result).result
    assert same_invariants(left, right)
