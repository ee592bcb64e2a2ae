"""Tests for the classification of proportional spin labels.

Decomposition examples are frozen from hand computations; the structural
properties (rebuild round trips, conjugate pairs, size preservation) run
over every strict partition up to a modest size.
"""

from hypothesis import given, settings, strategies as st

from barspin import classify as cl
from barspin.abacus import two_quotient
from barspin.partitions import (
    bar_staircase,
    partitions_of,
    scale_parts,
    size,
    staircase,
    strict_partitions_of,
    sum_parts,
    union_parts,
)


def test_fsas_decompose_frozen():
    assert cl.fsas_decompose((12, 8, 7, 4, 3, 2)) == cl.FsasDecomposition(4, 4, 2)
    assert cl.fsas_decompose((4,)) == cl.FsasDecomposition(0, 1, 1)
    assert cl.fsas_decompose((2,)) == cl.FsasDecomposition(0, 1, 0)
    assert cl.fsas_decompose((5, 2, 1)) == cl.FsasDecomposition(3, 1, 0)
    assert cl.fsas_decompose((3, 2, 1)) is None
    assert cl.fsas_decompose(()) == cl.FsasDecomposition(0, 0, 0)


def test_is_fsas_examples():
    assert not cl.is_fsas((3, 2, 1))
    assert cl.is_fsas((2,))
    assert cl.is_fsas(())
    assert cl.is_fsas((10, 6, 2))
    assert not cl.is_fsas((8, 2))
    assert not cl.is_fsas((7, 1))


def test_fsas_equals_stepped_and_semicongruent():
    for n in range(0, 14):
        for al in strict_partitions_of(n):
            both = cl.is_four_stepped(al) and cl.is_four_semicongruent(al)
            assert cl.is_fsas(al) == both


def test_fsas_rebuild_round_trip():
    for n in range(0, 15):
        for al in strict_partitions_of(n):
            dec = cl.fsas_decompose(al)
            if dec is None:
                continue
            assert dec.r >= dec.s >= 0
            assert dec.rebuild() == al


def test_lambda_of_frozen():
    assert cl.lambda_of((4,)) == ((2, 2), (2, 2))
    assert cl.lambda_of((12, 8, 7, 4, 3, 2)) == (
        (12, 9, 6, 3, 3, 1, 1, 1),
        (8, 5, 5, 3, 3, 3, 2, 2, 2, 1, 1, 1),
    )
    assert cl.lambda_of((5, 2, 1)) == ((5, 2, 1), (3, 2, 1, 1, 1))


def test_lambda_of_structure():
    for n in range(0, 13):
        for al in strict_partitions_of(n):
            dec = cl.fsas_decompose(al)
            if dec is None:
                continue
            la, conj = cl.lambda_of(al)
            assert size(la) == size(al)
            core, (q0, q1) = two_quotient(la)
            assert core == staircase(dec.a)
            assert (q0, q1) == (staircase(dec.s), staircase(dec.r))


def test_ratio_exponent():
    assert cl.ratio_exponent((12, 8, 7, 4, 3, 2)) == 4
    assert cl.ratio_exponent((4,)) == 1
    assert cl.ratio_exponent((2,)) == 1
    assert cl.ratio_exponent((5, 2, 1)) == 1
    assert cl.ratio_exponent((5, 1)) == 0


def test_predicted_pairs_frozen():
    assert cl.predicted_pairs(8) == [
        ((5, 2, 1), (3, 2, 1, 1, 1), 1),
        ((5, 2, 1), (5, 2, 1), 1),
        ((6, 2), (3, 3, 1, 1), 2),
        ((6, 2), (4, 2, 2), 2),
    ]
    assert cl.equality_cases(8) == [
        ((5, 2, 1), (3, 2, 1, 1, 1), 1),
        ((5, 2, 1), (5, 2, 1), 1),
    ]


def test_predicted_pairs_structure():
    for n in range(1, 12):
        pairs = cl.predicted_pairs(n)
        assert pairs == sorted(pairs)
        for al, la, e in pairs:
            assert cl.is_fsas(al)
            assert e == cl.ratio_exponent(al)
            assert la in cl.lambda_of(al)
        eq = cl.equality_cases(n)
        assert eq == [rec for rec in pairs if rec[2] <= 1]


def test_spin_rock_decompose_frozen():
    assert cl.spin_rock_decompose((9, 1)) == (3, (1,), ())
    assert cl.spin_rock_decompose((5, 2, 1)) == (3, (), (1,))
    assert cl.spin_rock_decompose((6, 4, 2)) == (0, (), (3, 2, 1))
    assert cl.spin_rock_decompose((3, 2, 1)) is None


def test_spin_rock_decompose_rebuild():
    for n in range(0, 14):
        for al in strict_partitions_of(n):
            dec = cl.spin_rock_decompose(al)
            if dec is None:
                continue
            b, sigma, eta = dec
            body = sum_parts(bar_staircase(b), scale_parts(sigma, 4))
            assert union_parts(body, scale_parts(eta, 2)) == al


def test_is_rock_examples():
    assert cl.spin_is_rock((9, 1))
    assert cl.spin_is_rock((5, 2, 1))
    assert not cl.spin_is_rock((6, 4, 2))
    assert not cl.spin_is_rock((3, 2, 1))
    assert not cl.spin_is_rock((4,))
    assert cl.linear_is_rock((4, 1))
    assert cl.linear_is_rock((2, 1))
    assert not cl.linear_is_rock((2, 2))
    assert not cl.linear_is_rock((6, 3, 1, 1))


@given(st.integers(min_value=0, max_value=12))
@settings(max_examples=13, deadline=None)
def test_rock_spin_labels_have_small_weight(n):
    for al in strict_partitions_of(n):
        if not cl.spin_is_rock(al):
            continue
        b, sigma, eta = cl.spin_rock_decompose(al)
        assert 2 * size(sigma) + size(eta) <= b + 1
