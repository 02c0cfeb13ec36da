from fractions import Fraction

import pytest

from qbinomdiff.koh import (
    K3Summand,
    KohTerm,
    k3_assembled,
    k3_flat_degrees,
    k3_iterated,
    k3_predicted_flat_degrees,
    koh_decompose,
    koh_term,
    partial_sums,
    partitions,
)
from qbinomdiff.poly import ZERO, IntPoly, is_nonnegative, is_symmetric, is_unimodal
from qbinomdiff.qbinom import qbinomial


def test_partitions_order():
    assert partitions(1) == [(1,)]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(5) == [
        (5,),
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
        (2, 1, 1, 1),
        (1, 1, 1, 1, 1),
    ]
    assert len(partitions(8)) == 22
    with pytest.raises(ValueError):
        partitions(0)


def test_partitions_are_weakly_decreasing_and_sum():
    for k in range(1, 10):
        seen = partitions(k)
        assert len(seen) == len(set(seen))
        for lam in seen:
            assert sum(lam) == k
            assert all(lam[i] >= lam[i + 1] > 0 for i in range(len(lam) - 1))


def test_partial_sums():
    assert partial_sums((2, 1), upto=3) == (0, 2, 3, 3)
    assert partial_sums((3,)) == (0, 3)
    assert partial_sums((3,), upto=2) == (0, 3, 3)
    y = partial_sums((1, 1, 1), upto=4)
    assert y[2] == 2 and y[4] == 3
    assert partial_sums((), upto=2) == (0, 0, 0)


def test_koh_term_hand_examples():
    # a = 2, k = 3: the three summands of [5 choose 3]_q
    t3 = koh_term(2, 3, (3,))
    assert t3.factors == ((1, 3),)
    assert t3.poly == ZERO

    t21 = koh_term(2, 3, (2, 1))
    assert t21.exponent == 2
    assert t21.factors == ((1, 1), (3, 1))
    assert t21.poly == IntPoly([0, 0, 1, 1, 1])

    t111 = koh_term(2, 3, (1, 1, 1))
    assert t111.exponent == 0
    assert t111.factors == ((2, 0), (4, 0), (7, 1))
    assert t111.poly == IntPoly([1] * 7)

    assert t3.poly + t21.poly + t111.poly == IntPoly([1, 1, 2, 2, 2, 1, 1])


def test_koh_term_validates_input():
    with pytest.raises(ValueError):
        koh_term(-1, 3, (3,))
    with pytest.raises(ValueError):
        koh_term(2, 3, (1, 2))
    with pytest.raises(ValueError):
        koh_term(2, 3, (2, 2))
    with pytest.raises(ValueError):
        koh_term(2, 3, ())


def test_koh_identity_small_grid():
    for a in range(13):
        for k in range(1, 7):
            total = ZERO
            for term in koh_decompose(a, k):
                total = total + term.poly
            assert total == qbinomial(a + k, k), (a, k)


def test_koh_terms_are_symmetric_unimodal_about_ak_half():
    for a in range(1, 11):
        for k in range(1, 7):
            for term in koh_decompose(a, k):
                if term.poly.is_zero():
                    continue
                assert is_nonnegative(term.poly).nonnegative
                assert is_unimodal(term.poly).unimodal
                assert is_symmetric(term.poly) == (True, Fraction(a * k, 2)), (a, k, term)


def test_koh_three_term_shape():
    # decomposing [m choose 3]_q, the three summands are
    # q^6 [m-4 choose 3], q^2 [m-4 choose 1][2m-7 choose 1], and [3m-8 choose 1]
    for m in range(7, 24):
        first, second, third = koh_decompose(m - 3, 3)
        assert first.exponent == 6
        assert first.factors == ((m - 4, 3),)
        assert first.poly == qbinomial(m - 4, 3).shift(6)
        assert second.exponent == 2
        assert second.factors == ((m - 4, 1), (2 * m - 7, 1))
        assert second.poly == (qbinomial(m - 4, 1) * qbinomial(2 * m - 7, 1)).shift(2)
        assert third.exponent == 0
        assert third.factors == ((m - 3, 0), (2 * m - 5, 0), (3 * m - 8, 1))
        assert third.poly == qbinomial(3 * m - 8, 1)


def test_koh_seven_term_shape():
    # decomposing [6n choose 5]_q: exponents and nontrivial factors per partition
    for n in (4, 5, 7):
        terms = koh_decompose(6 * n - 5, 5)
        by_partition = {term.partition: term for term in terms}
        assert [t.exponent for t in terms] == [20, 12, 8, 6, 4, 2, 0]
        assert by_partition[(5,)].poly == qbinomial(6 * n - 8, 5).shift(20)
        assert by_partition[(4, 1)].poly == (
            qbinomial(6 * n - 8, 3) * qbinomial(12 * n - 15, 1)
        ).shift(12)
        assert by_partition[(3, 2)].poly == (
            qbinomial(6 * n - 8, 1) * qbinomial(12 * n - 14, 2)
        ).shift(8)
        assert by_partition[(3, 1, 1)].poly == (
            qbinomial(6 * n - 7, 2) * qbinomial(18 * n - 18, 1)
        ).shift(6)
        assert by_partition[(2, 2, 1)].poly == (
            qbinomial(12 * n - 13, 1) * qbinomial(18 * n - 18, 1)
        ).shift(4)
        assert by_partition[(2, 1, 1, 1)].poly == (
            qbinomial(6 * n - 6, 1) * qbinomial(24 * n - 21, 1)
        ).shift(2)
        assert by_partition[(1, 1, 1, 1, 1)].poly == qbinomial(30 * n - 24, 1)
        total = ZERO
        for term in terms:
            total = total + term.poly
        assert total == qbinomial(6 * n, 5)


def test_koh_first_term_is_the_ladder_shrink():
    # in koh_decompose(b-k+2, k-2) the partition (k-2) contributes
    # q^((k-2)(k-3)) [b-2k+6 choose k-2]_q, the shrunk end of the ladder step
    for k in range(4, 9):
        for b in range(3 * k - 8, 3 * k + 20):
            first = koh_decompose(b - k + 2, k - 2)[0]
            assert first.partition == (k - 2,)
            assert first.exponent == (k - 2) * (k - 3)
            assert first.poly == qbinomial(b - 2 * k + 6, k - 2).shift((k - 2) * (k - 3))


def test_koh_a_zero_collapses_to_one():
    for k in range(1, 7):
        terms = koh_decompose(0, k)
        total = ZERO
        for term in terms:
            total = total + term.poly
        assert total == qbinomial(k, k)


def test_koh_term_json_round_trip():
    term = koh_term(2, 3, (2, 1))
    assert KohTerm.from_json_dict(term.to_json_dict()) == term


def test_k3_iterated_examples():
    epsilon, summands = k3_iterated(7)
    assert epsilon == 1
    assert len(summands) == 2
    assert k3_assembled(7) == qbinomial(7, 3)

    epsilon, summands = k3_iterated(4)
    assert epsilon == 0
    assert k3_assembled(4) == IntPoly([1, 1, 1, 1])

    epsilon, summands = k3_iterated(20)
    assert epsilon == 0
    assert len(summands) == 10
    assert k3_assembled(20) == qbinomial(20, 3)

    assert k3_iterated(3) == (1, [])
    assert k3_assembled(3) == qbinomial(3, 3)
    with pytest.raises(ValueError):
        k3_iterated(2)


def test_k3_iterated_descriptors():
    m = 20
    _, summands = k3_iterated(m)
    for i in range(m // 4):
        pair, single = summands[2 * i], summands[2 * i + 1]
        assert isinstance(pair, K3Summand)
        assert pair.iteration == i and single.iteration == i
        assert pair.exponent == 6 * i + 2
        assert pair.factors == ((m - 4 * i - 4, 1), (2 * m - 8 * i - 7, 1))
        assert single.exponent == 6 * i
        assert single.factors == ((3 * m - 12 * i - 8, 1),)


def test_k3_assembled_matches_qbinomial():
    for m in range(3, 61):
        assert k3_assembled(m) == qbinomial(m, 3), m


def test_k3_flat_degrees_examples():
    assert k3_flat_degrees(8) == {7}
    assert k3_flat_degrees(9) == {9, 7}
    assert k3_flat_degrees(11) == {11}
    assert k3_flat_degrees(5) == {3}
    with pytest.raises(ValueError):
        k3_flat_degrees(4)


def test_k3_flat_degrees_match_prediction():
    for m in range(5, 61):
        assert k3_flat_degrees(m) == k3_predicted_flat_degrees(m), m
