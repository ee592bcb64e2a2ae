"""Exact character values on odd classes.

Linear side: Murnaghan-Nakayama recursion for the ordinary irreducible
characters; restricting to odd-part classes gives the 2-Brauer character.
Spin side: values are extracted from the expansion of p_nu in the Schur P
basis, normalized so that the value at (1^n) is the character degree and a
class of cycle type nu carries the factor

    prod_i (-1)^((nu_i^2 - 1)/8) * 2^(-(n - len(nu))/2),

that is, a Gauss sign -1 for every part congruent to 3 or 5 mod 8.  The sign
matches evaluating on the odd-order preimage of the class in the double
cover; it is pinned by an explicit spinor-matrix oracle in the tests (trace
of the odd-order lift in a Clifford-algebra model of the basic spin
representation) rather than taken on trust.  The naive guess (-2)^(-(n-l)/2)
agrees whenever all parts are 1 or 3 mod 8 but has the wrong sign on parts
5 or 7 mod 8, first visible at the class (5).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from barspin.partitions import (
    check_partition,
    check_strict,
    hook_lengths,
    odd_partitions_of,
    partitions_of,
    rim_hooks,
    size,
    strict_partitions_of,
)
from barspin.scalars import Scalar, sqrt2_pow
from barspin.symfunc import p_in_P_coefficient, schur_poly


@dataclass(frozen=True)
class BrauerVector:
    """Values of a character on the odd-part classes of one symmetric group,
    classes in descending lexicographic order; entries are Scalars and the
    entry at (1^n) is positive."""
    basis: str
    n: int
    label: tuple
    classes: tuple
    values: tuple

    def value(self, nu):
        return self.values[self.classes.index(tuple(nu))]


def z_order(nu):
    """Centralizer order of the class nu."""
    out = 1
    mult = {}
    for p in nu:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        out *= p ** m * math.factorial(m)
    return out


# ---------------------------------------------------------------------------
# linear characters via Murnaghan-Nakayama

@lru_cache(maxsize=None)
def chi(la, nu):
    """Ordinary character value chi^la(nu), stripping the front part of nu."""
    if size(la) != size(nu):
        raise ValueError(f"size mismatch: {la} vs {nu}")
    if not nu:
        return 1
    total = 0
    k = nu[0]
    for mu, leg in rim_hooks(la, k):
        total += (-1) ** leg * chi(mu, nu[1:])
    return total


def specht_degree(la):
    n = size(la)
    prod = 1
    for h in hook_lengths(la):
        prod *= h
    deg, rem = divmod(math.factorial(n), prod)
    assert rem == 0
    return deg


def chi_schur_oracle(la, nu):
    """chi^la(nu) as z_nu times the p_nu coefficient of s_la; independent of
    the rim-hook recursion."""
    c = schur_poly(la).get(tuple(nu), Fraction(0)) * z_order(nu)
    assert c.denominator == 1
    return int(c)


# ---------------------------------------------------------------------------
# spin degrees and Brauer values

def spin_degree(al):
    """Degree of the spin character, normalized so the squares over strict
    labels sum to n factorial; a Scalar, rational or rational times sqrt2."""
    check_strict(al)
    n = size(al)
    ell = len(al)
    rat = Fraction(math.factorial(n))
    for a in al:
        rat /= math.factorial(a)
    for i in range(ell):
        for j in range(i + 1, ell):
            rat *= Fraction(al[i] - al[j], al[i] + al[j])
    return sqrt2_pow(n - ell) * Scalar(rat)


def spin_value(al, nu):
    """Spin character value on the odd class nu."""
    check_strict(al)
    n = size(al)
    if size(nu) != n:
        raise ValueError(f"size mismatch: {al} vs {nu}")
    if any(p % 2 == 0 for p in nu):
        raise ValueError(f"spin values live on odd classes, got {nu}")
    x_nu = p_in_P_coefficient(al, tuple(nu))
    x_one = p_in_P_coefficient(al, (1,) * n)
    sign = -1 if sum((q * q - 1) // 8 for q in nu) % 2 else 1
    clsfac = Fraction(sign, 2 ** ((n - len(nu)) // 2))
    return spin_degree(al) * Scalar(x_nu / x_one * clsfac)


# ---------------------------------------------------------------------------
# Brauer vectors and tables

def odd_classes(n):
    return odd_partitions_of(n)


def linear_brauer(la):
    la = tuple(la)
    check_partition(la)
    n = size(la)
    classes = odd_classes(n)
    values = tuple(Scalar(chi(la, nu)) for nu in classes)
    return BrauerVector("linear", n, la, classes, values)


def spin_brauer(al):
    al = tuple(al)
    check_strict(al)
    n = size(al)
    classes = odd_classes(n)
    values = tuple(spin_value(al, nu) for nu in classes)
    return BrauerVector("spin", n, al, classes, values)


@lru_cache(maxsize=None)
def linear_brauer_table(n):
    return {la: linear_brauer(la) for la in partitions_of(n)}


@lru_cache(maxsize=None)
def spin_brauer_table(n):
    return {al: spin_brauer(al) for al in strict_partitions_of(n)}


# optional disk cache for the tables, purely a speed feature

def _table_to_json(table):
    return {
        ",".join(map(str, label)) or "-": [v.to_json() for v in vec.values]
        for label, vec in table.items()
    }


def load_or_build_tables(n, cache_dir=None):
    """(linear table, spin table) for size n, using cache_dir if given."""
    if cache_dir is None:
        return linear_brauer_table(n), spin_brauer_table(n)
    path = os.path.join(cache_dir, f"brauer_{n}.json")
    classes = odd_classes(n)
    if os.path.exists(path):
        with open(path) as fh:
            blob = json.load(fh)
        lin = {}
        for la in partitions_of(n):
            key = ",".join(map(str, la)) or "-"
            vals = tuple(Scalar.from_json(d) for d in blob["linear"][key])
            lin[la] = BrauerVector("linear", n, la, classes, vals)
        spn = {}
        for al in strict_partitions_of(n):
            key = ",".join(map(str, al)) or "-"
            vals = tuple(Scalar.from_json(d) for d in blob["spin"][key])
            spn[al] = BrauerVector("spin", n, al, classes, vals)
        return lin, spn
    lin, spn = linear_brauer_table(n), spin_brauer_table(n)
    os.makedirs(cache_dir, exist_ok=True)
    blob = {"n": n, "linear": _table_to_json(lin), "spin": _table_to_json(spn)}
    with open(path, "w") as fh:
        json.dump(blob, fh)
    return lin, spn


# ---------------------------------------------------------------------------
# proportionality scan

def proportionality_ratio(u, v):
    """Scalar c with u = c*v entrywise, or None.  Zero vectors never match."""
    if len(u) != len(v):
        return None
    if all(x.is_zero() for x in u) or all(y.is_zero() for y in v):
        return None
    c = None
    for x, y in zip(u, v):
        if y.is_zero():
            if not x.is_zero():
                return None
            continue
        r = x / y
        if c is None:
            c = r
        elif c != r:
            return None
    return c


def scan(n, cache_dir=None):
    """All (alpha, lambda, ratio) with the spin Brauer vector of alpha a
    scalar multiple of the linear Brauer vector of lambda, sorted."""
    lin, spn = load_or_build_tables(n, cache_dir)
    out = []
    for al, svec in spn.items():
        for la, lvec in lin.items():
            c = proportionality_ratio(svec.values, lvec.values)
            if c is not None:
                out.append((al, la, c))
    return sorted(out, key=lambda rec: (rec[0], rec[1]))
