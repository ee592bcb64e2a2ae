"""Acceptance sweep: the twelve headline checks at their full size bounds.

Each test runs (or reuses) a verification suite at its default bound, which
is the bound the claims are stated at, and additionally pins the named
worked examples bit-exactly.  These are the slowest tests in the repo; the
whole module still finishes in a few seconds.
"""

import pytest

from barspin import charspace as cs
from barspin import charvalues as cv
from barspin import classify
from barspin import verify
from barspin import partitions as pt
from barspin.scalars import Scalar, sqrt2_pow

S = lambda a, b=0: Scalar(a, b)

_reports = {}


def suite(name):
    if name not in _reports:
        _reports[name] = verify.run_suite(name)
    return _reports[name]


def failing(rep):
    return [c.input for c in rep.cases if not c.ok]


def test_criterion_01_main_scan_matches_prediction():
    """Proportional spin rows are exactly the predicted pairs, n up to 14."""
    rep = suite("main")
    assert rep.max_n == 14
    assert rep.ok, failing(rep)
    assert rep.millis < 300_000
    for n in range(1, 15):
        want = sorted(
            ((al, la, sqrt2_pow(e)) for al, la, e in classify.predicted_pairs(n)),
            key=lambda rec: (rec[0], rec[1]),
        )
        assert cv.scan(n) == want


def test_criterion_02_equality_refinement():
    """Pairs with ratio 1 or sqrt2 are exactly the predicted equality cases."""
    rep = suite("equality")
    assert rep.max_n == 14
    assert rep.ok, failing(rep)
    for n in range(1, 15):
        got = sorted(
            (al, la)
            for al, la, c in cv.scan(n)
            if c in (S(1), S(0, 1))
        )
        assert got == sorted((al, la) for al, la, _ in classify.equality_cases(n))


def test_criterion_03_size_four_golden_data():
    """The full spin story at size 4, read off the decomposition matrix."""
    rep = suite("degrees")
    assert rep.ok, failing(rep)
    sb4 = cv.spin_brauer((4,))
    lb22 = cv.linear_brauer((2, 2))
    assert sb4.values == tuple(S(0, 1) * x for x in lb22.values)
    sb31 = cv.spin_brauer((3, 1))
    for la in pt.partitions_of(4):
        ratio = cv.proportionality_ratio(sb31.values, cv.linear_brauer(la).values)
        assert ratio is None
    assert cv.spin_degree((3, 1)) == S(4)


def test_criterion_04_runner_swap_linear():
    """Top swap sends [la] to a sign times [swp(la)], all |la| <= 12, plus
    the staircase-core specialization up to size 16."""
    rep = suite("runner-swap")
    assert rep.max_n == 12
    assert rep.ok, failing(rep)
    got = cs.runner_swap(cs.unit("linear", (6, 3, 1, 1)), 1, -2)
    assert got == cs.scale(cs.unit("linear", (5, 2, 2)), S(-1))


def test_criterion_05_runner_swap_spin():
    """Top swap sends <<al>> to a sign times <<bswp(al)>>, all |al| <= 12,
    plus bar-staircase transport with even padding up to size 16."""
    rep = suite("runner-swap-spin")
    assert rep.max_n == 12
    assert rep.ok, failing(rep)
    got = cs.runner_swap(cs.unit("spin", (6, 3, 2)), 1, -2)
    assert got == cs.scale(cs.unit("spin", (6, 2, 1)), S(-1))


def test_criterion_06_quotient_redistribution():
    """Redistribution on every relaxed label of size <= 14 with |d| <= 3
    matches the intermediate-count expansion, with the staircase
    specializations up to size 16 and both worked examples bit-exact."""
    rep = suite("quot-red")
    assert rep.max_n == 14
    assert rep.ok, failing(rep)
    got = cs.quot_red(cs.unit("linear", (6, 3)), 1, -1)
    assert got == cs.scale(cs.unit("linear", (4, 1, 1, 1)), S(-1))
    got = cs.quot_red(cs.unit("spin", (4, 3, 2)), 1, -1)
    assert got == cs.scale(cs.unit("spin", (4, 3)), S(0, -1))


def test_criterion_07_intermediate_combinatorics():
    """Signed intermediate sums collapse for staircase pairs (r < s <= 4),
    the brute-force B agrees with its closed form up to size 10, and the
    worked strip-pair data reproduces the column-removal sign flip."""
    rep = suite("interm")
    assert rep.max_n == 10
    assert rep.ok, failing(rep)
    eta, theta = (7, 6, 2, 1), (6, 5, 3, 1)
    ceta, ctheta = (6, 5, 1), (5, 4, 2)
    assert cs.b_sum(eta, theta) == -cs.b_sum(ceta, ctheta)
    assert cs.b_closed(eta, theta) == cs.b_sum(eta, theta)


def test_criterion_08_symmetric_function_identities():
    """P at a sum of staircases factors into Schur functions up to size 12;
    character recursion matches the power-sum transition matrix up to 10;
    the Pfaffian route matches tableau generating functions up to 6."""
    rep = suite("symfunc")
    assert rep.max_n == 12
    assert rep.ok, failing(rep)


def test_criterion_09_degree_identities():
    """Squared degrees sum to n! in both families for n <= 14, and spin
    table entries are integers or integer multiples of sqrt2 up to 12."""
    rep = suite("degrees")
    assert rep.max_n == 14
    assert rep.ok, failing(rep)


def test_criterion_10_support_invariants():
    """k-weight and k-bar-weight give the maximal nonvanishing cycle
    multiplicities for odd k, all labels of size <= 12."""
    rep = suite("invariants")
    assert rep.max_n == 12
    assert rep.ok, failing(rep)


def test_criterion_11_proportional_pair_consequences():
    """Scanned pairs at n <= 14 share regularization, weights, content and
    core data, and stay proportional under the descent operations."""
    rep = suite("invariants")
    assert rep.ok, failing(rep)
    tags = [c.input for c in rep.cases if c.input.startswith("proportional-pair")]
    assert any("n=14" in t for t in tags)


def test_criterion_12_odd_runner_swap_example():
    """The five-runner swap example, bit-exact."""
    rep = suite("runner-swap")
    assert rep.ok, failing(rep)
    got = cs.runner_swap(cs.unit("linear", (9, 8, 5, 1, 1, 1, 1, 1)), 2, 1, p=5)
    want = cs.scale(cs.unit("linear", (9, 9, 4, 1, 1, 1, 1, 1, 1)), S(-1))
    assert got == want
