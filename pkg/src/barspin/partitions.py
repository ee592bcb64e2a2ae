"""Partition and strict-partition combinatorics.

Partitions are tuples of weakly decreasing positive ints with no trailing
zeros; strict partitions decrease strictly.  Nodes are (row, column) pairs,
1-indexed.  Everything here is pure and exact.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


# ---------------------------------------------------------------------------
# parsing, validation, basic structure

def parse_partition(text):
    """Parse 'INT(,INT)*' into a partition tuple; '-' is the empty partition."""
    text = text.strip()
    if text == "-":
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition text {text!r}") from None
    check_partition(parts)
    return parts


def parse_strict(text):
    parts = parse_partition(text)
    check_strict(parts)
    return parts


def format_partition(la):
    return "-" if not la else ",".join(str(p) for p in la)


def check_partition(la):
    if any(not isinstance(p, int) or p <= 0 for p in la):
        raise ValueError(f"parts must be positive integers: {la!r}")
    if any(la[i] < la[i + 1] for i in range(len(la) - 1)):
        raise ValueError(f"parts must weakly decrease: {la!r}")


def check_strict(al):
    check_partition(al)
    if any(al[i] == al[i + 1] for i in range(len(al) - 1)):
        raise ValueError(f"parts must strictly decrease: {al!r}")


def is_partition(la):
    try:
        check_partition(la)
    except ValueError:
        return False
    return True


def is_strict(al):
    try:
        check_strict(al)
    except ValueError:
        return False
    return True


def size(la):
    return sum(la)


def conjugate(la):
    if not la:
        return ()
    return tuple(sum(1 for p in la if p >= c) for c in range(1, la[0] + 1))


def dominates(la, mu):
    """la dominates mu (same size, partial sums of la are at least mu's)."""
    if sum(la) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def cells(la):
    return [(r, c) for r in range(1, len(la) + 1) for c in range(1, la[r - 1] + 1)]


def contains(la, mu):
    """mu fits inside la rowwise."""
    return len(mu) <= len(la) and all(mu[i] <= la[i] for i in range(len(mu)))


# ---------------------------------------------------------------------------
# enumeration (descending lexicographic everywhere, for reproducible reports)

@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strict_partitions_of(n, max_part=None):
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def odd_partitions_of(n, max_part=None):
    if max_part is None or max_part > n:
        max_part = n
    if max_part % 2 == 0:
        max_part -= 1
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -2):
        for rest in odd_partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions_upto(n):
    """All strict partitions of every size up to n."""
    out = []
    for m in range(n + 1):
        out.extend(strict_partitions_of(m))
    return out


# ---------------------------------------------------------------------------
# part-multiset helpers

def union_parts(*parts_lists):
    """Multiset union of parts, sorted into a partition."""
    merged = sorted(itertools.chain(*parts_lists), reverse=True)
    return tuple(merged)


def sum_parts(la, mu):
    """Componentwise sum (shorter padded with zeros)."""
    k = max(len(la), len(mu))
    out = tuple(
        (la[i] if i < len(la) else 0) + (mu[i] if i < len(mu) else 0)
        for i in range(k)
    )
    return tuple(p for p in out if p)


def min_parts(la, mu):
    """Componentwise minimum; the diagram intersection."""
    out = tuple(min(a, b) for a, b in zip(la, mu))
    return tuple(p for p in out if p)


def scale_parts(la, c):
    return tuple(c * p for p in la)


def even_parts(la):
    return tuple(p for p in la if p % 2 == 0)


def odd_parts(la):
    return tuple(p for p in la if p % 2 == 1)


# ---------------------------------------------------------------------------
# residues and contents

def residue(r, c, p=2):
    return (c - r) % p


def spin_residue(c):
    """Spin residue of column c: the pattern 0,1,1,0,0,1,1,0,... for c=1,2,..."""
    return (c // 2) % 2


def content_counts(la, p=2):
    counts = [0] * p
    for r, c in cells(la):
        counts[residue(r, c, p)] += 1
    return tuple(counts)


def spin_content_counts(al):
    counts = [0, 0]
    for _, c in cells(al):
        counts[spin_residue(c)] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# doubling and 2-regularization

def dbl(al):
    """Double of a strict partition: part 2k+1 becomes rows (k+1, k), part 2k
    becomes (k, k)."""
    rows = []
    for a in al:
        k, odd = divmod(a, 2)
        rows.append(k + odd)
        rows.append(k)
    return tuple(r for r in rows if r)


def ladder_counts(la):
    """Number of nodes on each ladder l = r + c - 1."""
    counts = {}
    for r, c in cells(la):
        l = r + c - 1
        counts[l] = counts.get(l, 0) + 1
    return counts


def regularize2(la):
    """2-regularization: slide every node to the top of its ladder."""
    counts = ladder_counts(la)
    rows = []
    r = 1
    while True:
        row = sum(1 for l, cnt in counts.items() if l >= r and cnt >= r)
        if row == 0:
            break
        rows.append(row)
        r += 1
    return tuple(rows)


def flad(al):
    """Largest l whose full ladder lies inside dbl(al); 0 for the empty one."""
    d = dbl(al)
    best = 0
    l = 1
    while len(d) >= l:
        if all(d[r - 1] >= l + 1 - r for r in range(1, l + 1)):
            best = l
        l += 1
    return best


def tlad(al):
    """Largest ladder index meeting dbl(al) at all."""
    d = dbl(al)
    if not d:
        return 0
    return max(r + d[r - 1] - 1 for r in range(1, len(d) + 1))


# ---------------------------------------------------------------------------
# removable/addable nodes (linear side, any modulus)

def removable_nodes(la, eps=None, p=2):
    out = []
    for i in range(1, len(la) + 1):
        part = la[i - 1]
        nxt = la[i] if i < len(la) else 0
        if part > nxt:
            if eps is None or residue(i, part, p) == eps:
                out.append((i, part))
    return out


def addable_nodes(la, eps=None, p=2):
    out = []
    for i in range(1, len(la) + 1):
        part = la[i - 1]
        prev = la[i - 2] if i >= 2 else None
        if prev is None or prev > part:
            if eps is None or residue(i, part + 1, p) == eps:
                out.append((i, part + 1))
    if eps is None or residue(len(la) + 1, 1, p) == eps:
        out.append((len(la) + 1, 1))
    return out


def remove_corner_set(la, nodes):
    """Remove a set of removable corners (at most one per row)."""
    lst = list(la)
    for r, c in nodes:
        if r > len(lst) or lst[r - 1] != c:
            raise ValueError(f"{(r, c)} is not a corner of {la}")
        lst[r - 1] -= 1
    out = tuple(p for p in lst if p)
    check_partition(out)
    return out


def add_corner_set(la, nodes):
    lst = list(la)
    for r, c in nodes:
        if r == len(lst) + 1:
            if c != 1:
                raise ValueError(f"{(r, c)} is not addable to {la}")
            lst.append(1)
        elif r <= len(lst) and lst[r - 1] + 1 == c:
            lst[r - 1] += 1
        else:
            raise ValueError(f"{(r, c)} is not addable to {la}")
    out = tuple(lst)
    check_partition(out)
    return out


def remove_all_removable(la, eps, p=2):
    return remove_corner_set(la, removable_nodes(la, eps, p))


def n_eps(la, eps, p=2):
    """Net number of addable minus removable eps-nodes."""
    return len(addable_nodes(la, eps, p)) - len(removable_nodes(la, eps, p))


# ---------------------------------------------------------------------------
# beta-numbers, rim-hooks, cores

def beta_numbers(la, r=None):
    if r is None:
        r = len(la)
    if r < len(la):
        raise ValueError(f"need at least {len(la)} beta-numbers for {la}")
    padded = la + (0,) * (r - len(la))
    return [padded[i] + r - 1 - i for i in range(r)]


def partition_from_beta(beta):
    bs = sorted(beta, reverse=True)
    r = len(bs)
    if len(set(bs)) != r:
        raise ValueError(f"beta-numbers must be distinct: {beta}")
    parts = tuple(bs[i] - (r - 1 - i) for i in range(r))
    return tuple(p for p in parts if p)


def rim_hooks(la, k):
    """All k-rim-hook removals as (smaller partition, leg length) pairs.

    A removal is a beta-number move b -> b-k with b-k free; the leg is the
    number of beta-numbers strictly between them.
    """
    beta = beta_numbers(la)
    bset = set(beta)
    out = []
    for b in sorted(bset, reverse=True):
        nb = b - k
        if nb >= 0 and nb not in bset:
            leg = sum(1 for x in bset if nb < x < b)
            mu = partition_from_beta((bset - {b}) | {nb})
            out.append((mu, leg))
    return out


def k_core(la, k):
    beta = beta_numbers(la)
    r = len(beta)
    runners = [sorted((b - j) // k for b in beta if b % k == j) for j in range(k)]
    newbeta = []
    for j in range(k):
        for i in range(len(runners[j])):
            newbeta.append(i * k + j)
    assert len(newbeta) == r
    return partition_from_beta(newbeta)


def k_weight(la, k):
    core = k_core(la, k)
    w, rem = divmod(size(la) - size(core), k)
    assert rem == 0
    return w


def hook_lengths(la):
    conj = conjugate(la)
    return [la[r - 1] - c + conj[c - 1] - r + 1 for r, c in cells(la)]


# ---------------------------------------------------------------------------
# bars (odd k) and the 4-bar-core

def bars(al, k):
    """Strict partitions obtained from al by removing one k-bar (k odd).

    A k-bar is a part equal to k, a pair of parts summing to k, or the last
    k nodes of a part a > k with a - k not already a part.
    """
    if k % 2 == 0:
        raise ValueError("bars are defined for odd lengths only")
    pset = set(al)
    out = set()
    for a in al:
        if a >= k:
            rest = a - k
            if rest == 0 or rest not in pset:
                new = [p for p in al if p != a]
                if rest:
                    new.append(rest)
                out.add(tuple(sorted(new, reverse=True)))
    for a, b in itertools.combinations(al, 2):
        if a + b == k:
            out.add(tuple(p for p in al if p != a and p != b))
    return sorted(out, reverse=True)


def bar_core(al, k):
    cur = al
    while True:
        nxt = bars(cur, k)
        if not nxt:
            return cur
        cur = nxt[0]


def bar_weight(al, k):
    core = bar_core(al, k)
    w, rem = divmod(size(al) - size(core), k)
    assert rem == 0
    return w


def largest_odd_bar(al):
    """(length, result) for the longest odd bar of a nonempty strict partition."""
    if not al:
        raise ValueError("the empty partition has no bars")
    odds = odd_parts(al)
    evens = even_parts(al)
    if not evens:
        return al[0], al[1:]
    if not odds:
        rest = [p for p in al[1:]] + [1]
        return al[0] - 1, tuple(sorted(rest, reverse=True))
    o, e = odds[0], evens[0]
    return o + e, tuple(p for p in al if p != o and p != e)


def four_bar_moves(al):
    """Results of a single 4-bar-core move: drop an even part, drop two parts
    summing to a multiple of 4, or lower an odd part > 4 by 4 if free."""
    pset = set(al)
    out = set()
    for a in al:
        if a % 2 == 0:
            out.add(tuple(p for p in al if p != a))
    for a, b in itertools.combinations(al, 2):
        if (a + b) % 4 == 0:
            out.add(tuple(p for p in al if p != a and p != b))
    for a in al:
        if a % 2 == 1 and a > 4 and (a - 4) not in pset:
            out.add(tuple(sorted((set(al) - {a}) | {a - 4}, reverse=True)))
    return sorted(out, reverse=True)


def four_bar_core(al):
    """(core, weight): the weight counts removed nodes in units of 2."""
    cur = al
    while True:
        nxt = four_bar_moves(cur)
        if not nxt:
            break
        cur = nxt[0]
    w, rem = divmod(size(al) - size(cur), 2)
    assert rem == 0
    return cur, w


# ---------------------------------------------------------------------------
# staircases

def staircase(r):
    return tuple(range(r, 0, -1))


def bar_staircase(a):
    """The 4-bar-cores: (2a-1, 2a-5, ...) down to 3 or 1; empty for a = 0."""
    out = []
    part = 2 * a - 1
    while part > 0:
        out.append(part)
        part -= 4
    return tuple(out)


def bar_staircase_index(al):
    """a with al == bar_staircase(a), else None."""
    if not al:
        return 0
    a = (al[0] + 1) // 2
    return a if bar_staircase(a) == al else None


# ---------------------------------------------------------------------------
# spin nodes: simultaneous end-of-row removals/additions for strict partitions

def _spin_removal_options(part, eps):
    """How many end cells (0, 1 or 2) a row of this size may shed with all
    shed cells of spin residue eps."""
    opts = [0]
    if part >= 1 and spin_residue(part) == eps:
        opts.append(1)
        if part >= 3 and part % 2 == 1:
            # columns part and part-1 share a spin residue only for odd parts
            opts.append(2)
    return opts


def _spin_addition_options(part, eps):
    opts = [0]
    if spin_residue(part + 1) == eps:
        opts.append(1)
        if part % 2 == 1:
            opts.append(2)
    return opts


def spin_removals(al, eps, count=None):
    """All ways to shed end cells of spin residue eps, up to 2 per row,
    leaving a strict partition.  Yields (beta, frozenset of shed nodes).
    With count, only configurations shedding exactly that many cells."""
    results = []

    def rec(i, prev, parts, nodes, shed):
        if count is not None and shed > count:
            return
        if i == len(al):
            if count is None or shed == count:
                beta = tuple(p for p in parts if p)
                results.append((beta, frozenset(nodes)))
            return
        for k in _spin_removal_options(al[i], eps):
            new = al[i] - k
            if prev is not None and new >= prev:
                continue
            added = [(i + 1, al[i] - j) for j in range(k)]
            rec(i + 1, new, parts + [new], nodes + added, shed + k)

    rec(0, None, [], [], 0)
    return results


def spin_additions(al, eps, count=None):
    """All ways to grow rows by end cells of spin residue eps, up to 2 per
    row, plus possibly a new final row of size 1 (residue 0 only)."""
    results = []

    def rec(i, prev, parts, nodes, grown):
        if count is not None and grown > count:
            return
        if i == len(al):
            for extra in (0, 1):
                if extra and (eps != 0 or (prev is not None and prev <= 1)):
                    continue
                total = grown + extra
                if count is not None and total != count:
                    continue
                beta = tuple(parts) + ((1,) if extra else ())
                results.append((beta, frozenset(nodes + ([(len(al) + 1, 1)] if extra else []))))
            return
        for k in _spin_addition_options(al[i], eps):
            new = al[i] + k
            if prev is not None and new >= prev:
                continue
            added = [(i + 1, al[i] + j) for j in range(1, k + 1)]
            rec(i + 1, new, parts + [new], nodes + added, grown + k)

    rec(0, None, [], [], 0)
    return results


def spin_removable_nodes(al, eps):
    """Nodes shed by at least one legal residue-eps removal configuration."""
    out = set()
    for _, nodes in spin_removals(al, eps):
        out |= nodes
    return out


def spin_addable_nodes(al, eps):
    out = set()
    for _, nodes in spin_additions(al, eps):
        out |= nodes
    return out


def spin_n_eps(al, eps):
    return len(spin_addable_nodes(al, eps)) - len(spin_removable_nodes(al, eps))


def remove_all_spin_removable(al, eps):
    """Shed every spin-removable eps-node at once."""
    nodes = spin_removable_nodes(al, eps)
    lst = list(al)
    for i in range(len(lst)):
        shed = sorted(c for r, c in nodes if r == i + 1)
        if shed:
            if shed != list(range(al[i] - len(shed) + 1, al[i] + 1)):
                raise ValueError(f"non-contiguous removal from row {i + 1} of {al}")
            lst[i] -= len(shed)
    out = tuple(p for p in lst if p)
    check_strict(out)
    return out
