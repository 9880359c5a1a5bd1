import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod import randgen
from nilprod.errors import NotCentral, NotIdeal, WrongVariety
from nilprod.exactlin import GF, QQ, Matrix
from nilprod.homology import (ce_d2, ce_d3, ce_homology, central_extension_validate, exactness_check,
                              ganea_sequence, lcs_ganea_application)
from nilprod.nonassoc import SCAlgebra, center, nilpotentisation, sl2


def heisenberg(F=QQ):
    return SCAlgebra.from_products(F, 3, {(0, 1): [0, 0, 1]}, "Lie")


def filiform4(F=QQ):
    return SCAlgebra.from_products(F, 4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]}, "Lie")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_abelian_homology(n):
    assert ce_homology(SCAlgebra.abelian(QQ, n, "Lie")).dims == (n, comb(n, 2))


@pytest.mark.parametrize("algebra, dims", [
    (heisenberg(), (2, 2)),
    (sl2(QQ), (0, 0)),
    (SCAlgebra.from_products(QQ, 2, {(0, 1): [0, 1]}, "Lie"), (1, 0)),
    (filiform4(), (2, 2)),
    (heisenberg(GF(5)), (2, 2)),
])
def test_known_betti_numbers(algebra, dims):
    assert ce_homology(algebra).dims == dims


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_differentials_compose_to_zero(seed):
    g = randgen.random_lie(random.Random(seed), QQ, 5)
    if g.dim >= 3:
        assert (ce_d2(g) @ ce_d3(g)).is_zero()


def test_homology_needs_a_lie_algebra():
    with pytest.raises(WrongVariety):
        ce_homology(SCAlgebra.abelian(QQ, 2, "Leib"))


def test_heisenberg_ganea_sequence():
    h = heisenberg()
    S = ganea_sequence(central_extension_validate(h, center(h)))
    assert S.dims == (2, 2, 1, 1, 2, 2)
    rep = exactness_check(S)
    assert rep.exact and rep.failing() == []


def test_corrupted_map_breaks_exactness():
    h = heisenberg()
    S = ganea_sequence(central_extension_validate(h, center(h)))
    broken = S.with_map(3, Matrix.zeros(QQ, *S.maps[2].shape))
    rep = exactness_check(broken)
    assert not rep.exact
    assert rep.failing() == ["H2(A)", "K"]


def test_section_choice_does_not_change_the_verdict():
    h = heisenberg()
    E = central_extension_validate(h, center(h))
    s = E.quotient.section
    shifted = s + Matrix.from_rows(QQ, [[0, 0], [0, 0], [5, -7]])
    assert exactness_check(ganea_sequence(E, shifted)).exact
    with pytest.raises(ValueError):
        ganea_sequence(E, s.scale(2))


def test_trivial_kernel_and_abelian_algebras():
    h = heisenberg()
    assert exactness_check(ganea_sequence(central_extension_validate(h, h.zero()))).exact
    ab = SCAlgebra.abelian(QQ, 3, "Lie")
    E = central_extension_validate(ab, ab.span([[1, 0, 0], [0, 1, 1]]))
    assert exactness_check(ganea_sequence(E)).exact


def test_extension_preconditions():
    h = heisenberg()
    with pytest.raises(NotCentral):
        central_extension_validate(h, h.span([[1, 0, 0], [0, 0, 1]]))
    with pytest.raises(NotIdeal):
        central_extension_validate(h, h.span([[1, 0, 0]]))


def test_lower_central_series_application():
    rep = lcs_ganea_application(filiform4(), 3)
    assert rep.exact
    assert lcs_ganea_application(heisenberg(), 2).exact
    with pytest.raises(NotCentral):
        lcs_ganea_application(sl2(QQ), 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([QQ, GF(5), GF(3)]))
def test_random_central_extensions_are_exact(seed, F):
    B, K = randgen.random_central_extension(random.Random(seed), F, 6)
    S = ganea_sequence(central_extension_validate(B, K))
    assert exactness_check(S).exact
    h1 = nilpotentisation(B, 1).algebra.dim
    assert S.dims[0] == K.dim * h1 and S.dims[4] == h1
