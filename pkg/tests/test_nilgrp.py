import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilprod.errors import UnknownGenerator
from nilprod.exactlin import FgAbGroup
from nilprod.nilgrp import (FpGroupPresentation, WordSyntaxError, abelianization_gp, bilinear_product_gp,
                            cosmash_gp, format_word, higgins_commutator_nil2, nil2_commutator, nil2_coproduct,
                            nil2_inv, nil2_pow, parse_word, symmetry_gp, twist_coproduct)
from oracles import compose_perms, dihedral_group_of_square, find_isomorphism

S3 = FpGroupPresentation.parse(["a", "b"], ["a^2", "b^3", "(a b)^2"])
Q8 = FpGroupPresentation.parse(["i", "j"], ["i^4", "i^2 j^-2", "j^-1 i j i"])


def test_word_parsing():
    assert parse_word("a^2 b a^-1", ["a", "b"]) == ((0, 1), (0, 1), (1, 1), (0, -1))
    assert parse_word("[a,b]", ["a", "b"]) == ((0, 1), (1, 1), (0, -1), (1, -1))
    assert format_word(parse_word("(a b)^2", ["a", "b"]), ["a", "b"]) == "a b a b"
    with pytest.raises(WordSyntaxError):
        parse_word("a^", ["a"])
    with pytest.raises((UnknownGenerator, WordSyntaxError)):
        parse_word("c", ["a", "b"])


def test_abelianizations():
    assert abelianization_gp(S3) == FgAbGroup.from_orders([2])
    assert abelianization_gp(Q8) == FgAbGroup.from_orders([2, 2])
    free = FpGroupPresentation.parse(["x", "y"], [])
    assert abelianization_gp(free) == FgAbGroup.free(2)


def test_bilinear_products_of_groups():
    assert bilinear_product_gp(S3, S3) == FgAbGroup.from_orders([2])
    assert bilinear_product_gp(Q8, Q8) == FgAbGroup.from_orders([2, 2, 2, 2])
    Z4 = FpGroupPresentation.parse(["x"], ["x^4"])
    Z6 = FpGroupPresentation.parse(["y"], ["y^6"])
    assert bilinear_product_gp(Z4, Z6) == FgAbGroup.from_orders([2])


def test_coproduct_of_two_involutions_is_dihedral():
    C2 = FgAbGroup.from_orders([2])
    G = nil2_coproduct(C2, C2)
    els = list(G.elements())
    assert G.order() == 8 == len(els)
    assert len(G.center()) == 2
    assert G.nilpotency_class() == 2
    D4 = dihedral_group_of_square()
    phi = find_isomorphism(els, lambda x, y: x * y, [G.i1([1]), G.i2([1])], D4, compose_perms)
    assert phi is not None


def test_heisenberg_commutator_convention():
    Z = FgAbGroup.free(1)
    G = nil2_coproduct(Z, Z)
    x, y = G.i1([1]), G.i2([1])
    c = nil2_commutator(x, y)
    assert (c.a, c.b, c.t) == ((0,), (0,), (1,))
    assert nil2_commutator(y, x) == nil2_inv(c)
    assert nil2_commutator(nil2_pow(x, 2), nil2_pow(y, 3)) == nil2_pow(c, 6)


def test_cosmash_is_the_tensor_product():
    A, B = FgAbGroup.from_orders([4]), FgAbGroup.from_orders([6, 0])
    assert cosmash_gp(A, B).group == FgAbGroup.from_orders([2, 4])


def test_higgins_commutator_of_the_factors():
    A, B = FgAbGroup.from_orders([0]), FgAbGroup.from_orders([0])
    G = nil2_coproduct(A, B)
    K = higgins_commutator_nil2(G, [G.i1([2])], [G.i2([3])])
    assert K.group == FgAbGroup.free(1)
    assert K.contains(G, G.central([6])) and not K.contains(G, G.central([1]))


group_orders = st.lists(st.sampled_from([0, 0, 2, 3, 4]), min_size=1, max_size=2)


@st.composite
def coproduct_and_elements(draw, k=3):
    A = FgAbGroup.from_orders(draw(group_orders))
    B = FgAbGroup.from_orders(draw(group_orders))
    G = nil2_coproduct(A, B)
    coord = st.integers(-4, 4)

    def elem():
        a = draw(st.lists(coord, min_size=G.mod_a.n, max_size=G.mod_a.n))
        b = draw(st.lists(coord, min_size=G.mod_b.n, max_size=G.mod_b.n))
        t = draw(st.lists(coord, min_size=G.mod_t.n, max_size=G.mod_t.n))
        return G.element(a, b, t)

    return G, [elem() for _ in range(k)]


@settings(max_examples=60, deadline=None)
@given(coproduct_and_elements())
def test_group_axioms_and_class_two(data):
    G, (x, y, z) = data
    e = G.identity()
    assert (x * y) * z == x * (y * z)
    assert x * e == x == e * x
    assert x * nil2_inv(x) == e
    c = nil2_commutator(x, y)
    assert not any(c.a) and not any(c.b)
    assert c * z == z * c


@settings(max_examples=60, deadline=None)
@given(coproduct_and_elements(k=2))
def test_twist_is_a_homomorphism_and_involution(data):
    G, (x, y) = data
    assert twist_coproduct(x * y) == twist_coproduct(x) * twist_coproduct(y)
    assert twist_coproduct(twist_coproduct(x)) == x


@settings(max_examples=40, deadline=None)
@given(coproduct_and_elements(k=1))
def test_twist_acts_on_the_central_part_by_minus_the_swap(data):
    G, (x,) = data
    central = G.central(list(x.t))
    image = twist_coproduct(central)
    H = nil2_coproduct(G.B, G.A)
    expected = symmetry_gp(G.A, G.B).apply(list(x.t))
    assert H.mod_t.equal(list(image.t), expected)
