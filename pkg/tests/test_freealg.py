import hypothesis.strategies as st
import pytest
from hypothesis import given

from posbraid.freealg import (B, CommPoly, NcMatrix, NcPoly, RingMismatch, b, comm_det,
                              monomial_div, monomial_divides, monomial_from_word,
                              monomial_lcm)

RING = st.sampled_from(["Z2", "Z"])


@st.composite
def polys(draw, ring="Z"):
    terms = draw(st.dictionaries(
        st.lists(st.integers(1, 3), max_size=3).map(lambda ks: tuple(b(k) for k in ks)),
        st.integers(-3, 3), max_size=4))
    return NcPoly(terms, ring)


def test_z2_cancellation():
    x = NcPoly.var(b(1))
    assert x + x == NcPoly.zero()
    assert (x + 1) * (x + 1) == NcPoly.parse("1 + b1b1")


def test_noncommutative():
    x, y = NcPoly.var(b(1), "Z"), NcPoly.var(b(2), "Z")
    assert x * y != y * x
    assert (x * y - y * x).abelianize() == CommPoly.zero("Z")


@pytest.mark.parametrize("text", ["1 + b1 + b3 + b1b2b3", "0", "b2b3b1b2"])
def test_parse_print_round_trip(text):
    assert str(NcPoly.parse(text)) == text


def test_signed_printing():
    p = NcPoly.var(b(1), "Z") - 2 * NcPoly.var(b(2), "Z")
    assert str(p) == "b1 - 2*b2"
    assert NcPoly.parse(str(p), "Z") == p


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        NcPoly.one("Z") + NcPoly.one("Z2")


def test_evaluate():
    p = NcPoly.parse("1 + b1 + b3 + b1b2b3")
    assert p.evaluate({b(1): 1, b(2): 0, b(3): 0}) == 0
    assert p.evaluate(lambda v: 1) == 0
    assert p.evaluate(lambda v: 0) == 1


def test_substitute():
    p = NcPoly.parse("b1b2", "Z")
    q = p.substitute({b(1): NcPoly.parse("1 + b3", "Z")})
    assert q == NcPoly.parse("b2 + b3b2", "Z")


@given(polys(), polys(), polys())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == NcPoly.zero("Z")


@given(polys(), polys())
def test_abelianize_is_a_homomorphism(x, y):
    assert (x * y).abelianize() == x.abelianize() * y.abelianize()
    assert (x + y).abelianize() == x.abelianize() + y.abelianize()


@given(polys(), polys())
def test_evaluation_is_a_homomorphism(x, y):
    vals = {b(1): 2, b(2): -1, b(3): 3}
    assert (x * y).evaluate(vals) == x.evaluate(vals) * y.evaluate(vals)


def test_matrix_product_and_identity():
    m = NcMatrix.generic(2, "Z")
    ident = NcMatrix.identity(2, "Z")
    assert m @ ident == m and ident @ m == m
    assert str((m @ m)[1, 2]) == "B[1,1]B[1,2] + B[1,2]B[2,2]"


def test_matrix_json_round_trip():
    m = NcMatrix.from_ints([[1, 0], [1, 1]])
    assert NcMatrix.from_json(m.to_json()) == m


def test_monomials():
    m1 = monomial_from_word((B(1, 1), B(1, 2), B(1, 1)))
    m2 = monomial_from_word((B(1, 1),))
    assert monomial_divides(m2, m1) and not monomial_divides(m1, m2)
    assert monomial_div(m1, m2) == monomial_from_word((B(1, 1), B(1, 2)))
    assert monomial_lcm(m1, m2) == m1


def test_determinant_2x2():
    g = [[CommPoly.var(B(i, j), "Z") for j in (1, 2)] for i in (1, 2)]
    det = comm_det(g)
    assert det == CommPoly.var(B(1, 1), "Z") * CommPoly.var(B(2, 2), "Z") \
        - CommPoly.var(B(1, 2), "Z") * CommPoly.var(B(2, 1), "Z")
