from hypothesis import given, strategies as st

from barspin import partitions as pt

partition_lists = st.lists(st.integers(min_value=1, max_value=12), max_size=6)


def as_partition(parts):
    return tuple(sorted(parts, reverse=True))


def as_strict(parts):
    return tuple(sorted(set(parts), reverse=True))


partition_st = st.builds(as_partition, partition_lists)
strict_st = st.builds(as_strict, partition_lists)


def test_parse_and_format():
    assert pt.parse_partition("6,3,1,1") == (6, 3, 1, 1)
    assert pt.parse_partition("-") == ()
    assert pt.format_partition((6, 3, 1, 1)) == "6,3,1,1"
    assert pt.parse_strict("7,5,4,1") == (7, 5, 4, 1)


def test_conjugate():
    assert pt.conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert pt.conjugate(()) == ()


@given(partition_st)
def test_conjugate_involution(la):
    assert pt.conjugate(pt.conjugate(la)) == la


def test_dominance():
    assert pt.dominates((4, 2), (3, 3))
    assert not pt.dominates((3, 3), (4, 2))
    assert pt.dominates((3, 1), (3, 1))


def test_counting():
    assert len(pt.partitions_of(8)) == 22
    assert len(pt.strict_partitions_of(8)) == 6
    assert len(pt.odd_partitions_of(8)) == 6


@given(st.integers(min_value=0, max_value=14))
def test_strict_matches_odd_count(n):
    assert len(pt.strict_partitions_of(n)) == len(pt.odd_partitions_of(n))


def test_dbl():
    assert pt.dbl((5, 2)) == (3, 2, 1, 1)
    assert pt.dbl((5, 1)) == (3, 2, 1)
    assert pt.dbl(()) == ()


@given(strict_st)
def test_dbl_preserves_size(al):
    assert pt.size(pt.dbl(al)) == pt.size(al)


def test_regularize2():
    assert pt.regularize2((1, 1)) == (2,)
    assert pt.regularize2((2, 2)) == (3, 1)
    assert pt.regularize2((3, 2, 1)) == (3, 2, 1)


@given(partition_st)
def test_regularize2_idempotent_and_regular(la):
    reg = pt.regularize2(la)
    assert pt.size(reg) == pt.size(la)
    assert len(set(reg)) == len(reg)
    assert pt.regularize2(reg) == reg


def test_spin_residues():
    # columns 1..8 repeat the pattern 0 1 1 0 0 1 1 0
    assert [pt.spin_residue(c) for c in range(1, 9)] == [0, 1, 1, 0, 0, 1, 1, 0]
    assert pt.spin_residue(9) == 0


def test_spin_content_matches_double():
    for al in pt.strict_partitions_of(9):
        assert pt.spin_content_counts(al) == pt.content_counts(pt.dbl(al))


def test_spin_nodes():
    assert pt.spin_removable_nodes((7, 5, 4, 1), 0) == {(2, 5), (3, 4), (4, 1)}
    assert pt.spin_addable_nodes((7, 5, 4, 1), 0) == {(1, 8), (1, 9)}
    assert pt.spin_n_eps((6, 3, 2), 1) == -2


def test_remove_all_spin_removable():
    assert pt.remove_all_spin_removable((6, 3, 2), 1) == (5, 2, 1)


def test_four_bar_core():
    assert pt.four_bar_core((12, 8, 7, 4, 3, 2)) == ((7, 3), 13)
    assert pt.four_bar_core((4, 3, 2)) == ((3,), 3)
    assert pt.four_bar_core((9, 1)) == ((5, 1), 2)
    assert pt.four_bar_core(()) == ((), 0)


@given(strict_st)
def test_four_bar_core_invariants(al):
    core, w = pt.four_bar_core(al)
    assert pt.size(core) + 2 * w == pt.size(al)
    assert core == pt.bar_staircase(pt.bar_staircase_index(core))


def test_staircases():
    assert pt.staircase(3) == (3, 2, 1)
    assert pt.staircase(0) == ()
    assert pt.bar_staircase(3) == (5, 1)
    assert pt.bar_staircase(4) == (7, 3)
    assert pt.bar_staircase(0) == ()
    # doubling a bar staircase gives the ordinary staircase
    for a in range(8):
        assert pt.dbl(pt.bar_staircase(a)) == pt.staircase(a)


def test_bars():
    assert set(pt.bars((5, 4), 3)) == {(4, 2), (5, 1)}
    assert pt.largest_odd_bar((12, 8, 7, 4, 3, 2)) == (19, (8, 4, 3, 2))
    assert pt.largest_odd_bar((5, 3, 1)) == (5, (3, 1))


def test_ladders():
    assert pt.ladder_counts((3, 1)) == {1: 1, 2: 2, 3: 1}
    assert pt.flad((5, 2, 1)) == 3
    assert pt.tlad((5, 2, 1)) == 5


def test_beta_numbers_roundtrip():
    assert pt.beta_numbers((3, 1), 3) == [5, 2, 0]
    assert pt.partition_from_beta([5, 2, 0]) == (3, 1)


@given(partition_st, st.integers(min_value=0, max_value=4))
def test_beta_roundtrip_any_padding(la, extra):
    b = pt.beta_numbers(la, len(la) + extra)
    assert pt.partition_from_beta(b) == la


def test_k_core():
    assert pt.k_core((6, 3, 1, 1), 2) == (2, 1)
    assert pt.k_core((4, 2), 2) == ()
    assert pt.k_core((9, 8, 5, 1, 1, 1, 1, 1), 5) == (2,)
    assert pt.k_core((9, 9, 4, 1, 1, 1, 1, 1, 1), 5) == (3,)
