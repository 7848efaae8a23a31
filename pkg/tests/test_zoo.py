"""Built-in algebras: basis enumeration, structure, closed-form antipodes."""

import math
from itertools import product as iproduct

import pytest

from hopfcheck.errors import ConstructionError, ResourceGuardError
from hopfcheck.rings import QQ, ZZ, cyclotomic_ring
from hopfcheck.zoo import (UNIT, build_algebra, free_bialgebra,
                           free_example_abc, fqsym, shuffle_algebra, taft,
                           tensor_algebra)


# --- free algebras ---------------------------------------------------------

def test_abc_degree_two_basis():
    H = free_example_abc(ZZ, 4)
    assert set(H.basis.labels_of_degree(2)) == {"aa", "ab", "ba", "bb", "c"}


def brute_force_word_count(degree_weights, n):
    """Count words with letter degrees from the list summing to n."""
    if n == 0:
        return 1
    return sum(brute_force_word_count(degree_weights, n - d)
               for d in degree_weights if d <= n)


def test_abc_rank_matches_brute_force():
    H = free_example_abc(ZZ, 6)
    for n in range(7):
        assert H.basis.rank(n) == brute_force_word_count([1, 1, 2], n)


def test_tensor_rank_is_power():
    H = tensor_algebra(3, ZZ, 4)
    for n in range(5):
        assert H.basis.rank(n) == 3 ** n


def test_free_guard():
    with pytest.raises(ResourceGuardError):
        tensor_algebra(2, ZZ, 9)
    with pytest.raises(ResourceGuardError):
        shuffle_algebra(2, ZZ, 9)


def test_broken_generator_coproduct_rejected():
    with pytest.raises(ConstructionError):
        # dropping 1(x)c breaks the counit axiom
        free_bialgebra([("a", 1, "primitive"), ("b", 1, "primitive"),
                        ("c", 2, [(1, "c", UNIT), (1, "a", "b")])], ZZ, 3)


def test_wrong_degree_generator_coproduct_rejected():
    with pytest.raises(ConstructionError):
        free_bialgebra([("a", 1, "primitive"),
                        ("c", 2, [(1, "c", UNIT), (1, UNIT, "c"),
                                  (1, "a", UNIT)])], ZZ, 3)


def test_tensor_antipode_reverses_with_sign():
    H = tensor_algebra(2, ZZ, 4)
    S = H.antipode()
    for label in H.basis.labels:
        if label == UNIT:
            continue
        word = label
        expected = H.element(word[::-1]).scale(ZZ.embed((-1) ** len(word)))
        assert S(H.element(label)) == expected


def test_tensor_antipode_degree_two_explicitly():
    H = tensor_algebra(2, ZZ, 4)
    S = H.antipode()
    assert S(H.element("ab")) == H.element("ba")
    assert S(H.element("aab")) == -H.element("baa")


def test_shuffle_antipode_reverses_with_sign():
    H = shuffle_algebra(2, QQ, 4)
    S = H.antipode()
    for label in H.basis.labels:
        if label == UNIT:
            continue
        word = label
        expected = H.element(word[::-1]).scale(QQ.embed((-1) ** len(word)))
        assert S(H.element(label)) == expected


def test_shuffle_product_example():
    H = shuffle_algebra(2, ZZ, 3)
    # a sh ab = 2 aab + aba
    result = H.product(H.element("a"), H.element("ab"))
    assert result == (H.element("aab").scale(ZZ.embed(2)) + H.element("aba"))


def test_cocommutative_tensor_s2_is_identity():
    H = tensor_algebra(2, ZZ, 5)
    S = H.antipode()
    S2 = S.compose(S)
    assert all(S2.images[l] == H.element(l) for l in H.basis.labels)


def test_commutative_shuffle_s2_is_identity():
    H = shuffle_algebra(2, ZZ, 5)
    S = H.antipode()
    S2 = S.compose(S)
    assert all(S2.images[l] == H.element(l) for l in H.basis.labels)


# --- permutations ----------------------------------------------------------

def test_fqsym_rank_is_factorial():
    H = fqsym(ZZ, 5)
    for n in range(6):
        assert H.basis.rank(n) == math.factorial(n)


def test_fqsym_guard():
    with pytest.raises(ResourceGuardError):
        fqsym(ZZ, 7)


def test_fqsym_shifted_shuffle():
    H = fqsym(ZZ, 4)
    lhs = H.product(H.element("12"), H.element("1"))
    assert lhs == (H.element("123") + H.element("132") + H.element("312"))


def test_fqsym_coproduct_standardizes():
    H = fqsym(ZZ, 4)
    d = H.coproduct_of_label("231")
    # cuts: ()|231, 2|31 -> 1 (x) 21, 23|1 -> 12 (x) 1, 231|()
    assert d.coeffs == {
        ("e", "231"): ZZ.one,
        ("1", "21"): ZZ.one,
        ("12", "1"): ZZ.one,
        ("231", "e"): ZZ.one,
    }


def test_fqsym_bialgebra_and_antipode_axioms():
    H = fqsym(ZZ, 4)
    assert H.verify_bialgebra().ok()
    assert H.verify_antipode_axioms().ok()


# --- Taft ------------------------------------------------------------------

def test_taft_dimensions_and_relations():
    H = taft(3)
    assert len(H.basis.labels) == 9
    a = H.element("a1x0")
    x = H.element("a0x1")
    q = H.ring.element([0, 1])
    # a^3 = 1, x^3 = 0, x a = q a x
    a3 = H.product(H.product(a, a), a)
    assert a3 == H.unit()
    x3 = H.product(H.product(x, x), x)
    assert x3.is_zero()
    assert H.product(x, a) == H.product(a, x).scale(q)


def test_taft_grouplike_and_skew_primitive():
    H = taft(3)
    a = H.element("a1x0")
    x = H.element("a0x1")
    assert H.coproduct(a) == a.tensor(a)
    assert H.coproduct(x) == x.tensor(H.unit()) + a.tensor(x)


def test_taft_antipode_axioms():
    assert taft(3).verify_antipode_axioms().ok()
    assert taft(5).verify_antipode_axioms().ok()


def test_taft_squared_antipode_on_x():
    H = taft(3)
    S = H.antipode()
    S2 = S.compose(S)
    q = H.ring.element([0, 1])
    x = H.element("a0x1")
    assert S2(x) in (x.scale(q), x.scale(q ** 2))  # q^2 = q^-1 here


def test_taft_requires_prime():
    from hopfcheck.errors import UnsupportedRingError
    with pytest.raises(UnsupportedRingError):
        taft(4)


# --- registry --------------------------------------------------------------

def test_build_algebra_dispatch():
    assert build_algebra("abc", ZZ, 3).name == "abc"
    assert build_algebra("tensor", ZZ, 3, rank=3).name == "tensor3"
    assert build_algebra("shuffle", ZZ, 3).name == "shuffle2"
    assert build_algebra("fqsym", ZZ, 3).name == "fqsym"
    assert build_algebra("taft", ZZ, 3, taft_n=3).name == "taft3"
    from hopfcheck.errors import StructuralError
    with pytest.raises(StructuralError):
        build_algebra("nope", ZZ, 3)
