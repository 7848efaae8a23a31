"""Coefficient ring arithmetic: canonical forms, axioms, field gating."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcheck.errors import StructuralError, UnsupportedRingError
from hopfcheck.rings import (QQ, ZZ, ModRing, PolyQuotientRing, binomial,
                             cyclotomic_ring, is_prime, ring_from_string)

EISENSTEIN = cyclotomic_ring(3)  # Z[q]/(1 + q + q^2)
QEISENSTEIN = PolyQuotientRing(QQ, [Fraction(1), Fraction(1), Fraction(1)],
                               irreducible=True)
RINGS = [ZZ, QQ, ModRing(5), ModRing(6), EISENSTEIN, QEISENSTEIN]


def elements(ring):
    return st.integers(min_value=-30, max_value=30).map(ring.embed)


# --- basic arithmetic ------------------------------------------------------

def test_integer_add():
    assert ZZ.embed(2) + ZZ.embed(3) == ZZ.embed(5)


def test_mod5_mul():
    R = ModRing(5)
    assert R.embed(3) * R.embed(4) == R.embed(2)


def test_eisenstein_q_squared():
    q = EISENSTEIN.element([0, 1])
    assert q * q == -q - EISENSTEIN.one


def test_eisenstein_root_of_unity():
    q = EISENSTEIN.element([0, 1])
    assert q ** 3 == EISENSTEIN.one
    assert EISENSTEIN.one + q + q * q == EISENSTEIN.zero


def test_embed_int():
    assert ZZ.embed(1) == ZZ.one
    assert ModRing(5).embed(7) == ModRing(5).embed(2)
    assert EISENSTEIN.embed(-1) == -EISENSTEIN.one


def test_rational_canonical():
    assert QQ.embed(2).value / 4 == Fraction(1, 2)
    a = QQ.element(Fraction(2, 4))
    assert a.value == Fraction(1, 2)


def test_mixed_ring_operands_rejected():
    with pytest.raises(StructuralError):
        ZZ.one + QQ.one
    with pytest.raises(StructuralError):
        ModRing(5).one * ModRing(7).one


# --- field gating ----------------------------------------------------------

def test_is_field():
    assert QQ.is_field
    assert not ZZ.is_field
    assert ModRing(7).is_field
    assert not ModRing(6).is_field
    assert not EISENSTEIN.is_field
    assert PolyQuotientRing(QQ, [Fraction(1), Fraction(1), Fraction(1)],
                            irreducible=True).is_field


def test_field_inverse():
    R = ModRing(7)
    for n in range(1, 7):
        a = R.embed(n)
        assert a * a.inverse() == R.one
    half = QQ.embed(2).inverse()
    assert half.value == Fraction(1, 2)


def test_quotient_field_inverse():
    R = PolyQuotientRing(QQ, [Fraction(1), Fraction(1), Fraction(1)],
                         irreducible=True)
    q = R.element([0, 1])
    inv = q.inverse()
    assert q * inv == R.one


def test_no_inverse_outside_fields():
    with pytest.raises(UnsupportedRingError):
        ZZ.embed(2).inverse()


def test_is_prime():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)


# --- ring axioms, randomized ----------------------------------------------

@pytest.mark.parametrize("ring", RINGS, ids=repr)
@given(data=st.data())
def test_ring_axioms(ring, data):
    a = data.draw(elements(ring))
    b = data.draw(elements(ring))
    c = data.draw(elements(ring))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ring.zero == a
    assert a * ring.one == a
    assert a + (-a) == ring.zero
    assert a - b == a + (-b)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
@given(data=st.data())
def test_canonicalization_idempotent(ring, data):
    a = data.draw(elements(ring))
    assert ring.element(a.value) == a


# --- binomial --------------------------------------------------------------

def test_binomial():
    assert binomial(3, 1) == 3
    assert binomial(5, 2) == 10
    assert binomial(4, 6) == 0
    assert binomial(4, -1) == 0
    assert binomial(0, 0) == 1


# --- grammar ---------------------------------------------------------------

def test_ring_grammar():
    assert ring_from_string("Z") is ZZ
    assert ring_from_string("Q") is QQ
    assert ring_from_string("Z/5") == ModRing(5)
    R = ring_from_string("Z[q]/(1,1,1)")
    q = R.element([0, 1])
    assert q ** 3 == R.one


def test_ring_grammar_rejects_garbage():
    for bad in ("Z/bad", "Z/1", "R", "Z[q]/(1,1,2)", ""):
        with pytest.raises(StructuralError):
            ring_from_string(bad)


def test_format_parse_roundtrip():
    for ring in RINGS:
        for n in (-7, 0, 1, 13):
            a = ring.embed(n)
            assert ring.parse_value(ring.format_value(a.value)) == a
