from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from unipext import perm as P
from unipext.errors import CapabilityError
from unipext.partitions import Partition, partitions
from unipext.weyl import (BiPartition, bipartitions, chi_hyperoct, chi_sym, class_size_hyperoct,
                          class_size_sym, d4_triality_fixed, parabolic_multiplicity,
                          staircase_class, sym_table)

# S_4, rows and columns in increasing lex order:
# [1,1,1,1] [2,1,1] [2,2] [3,1] [4]
S4 = [
    [1, -1, 1, 1, -1],
    [3, -1, -1, 0, 1],
    [2, 0, 2, -1, 0],
    [3, 1, -1, 0, -1],
    [1, 1, 1, 1, 1],
]


def test_s4_table_frozen():
    labels, classes, rows = sym_table(4)
    assert [str(l) for l in labels] == ["[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"]
    assert rows == S4


@pytest.mark.parametrize("lam, mu, v", [
    ((2, 1), (3,), -1), ((3, 2, 1), (5, 1), 1), ((2, 2), (2, 2), 2), ((5,), (3, 2), 1),
    ((3, 2, 1), (3, 3), -2), ((4, 2), (1,) * 6, 9)])
def test_chi_sym_values(lam, mu, v):
    assert chi_sym(lam, mu) == v


def test_chi_sym_size_mismatch():
    with pytest.raises(ValueError):
        chi_sym((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum(n):
    assert sum(class_size_sym(m) for m in partitions(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_hyperoct_class_sizes_sum(n):
    assert sum(class_size_hyperoct(c) for c in bipartitions(n)) == 2 ** n * factorial(n)


def test_hyperoct_named_characters():
    n = 3
    for c in bipartitions(n):
        pos, neg = c.first, c.second
        assert chi_hyperoct(BiPartition((n,), ()), c) == 1
        # eps' = -1 per sign change; an odd number of negative cycles flips it
        assert chi_hyperoct(BiPartition((), (n,)), c) == (-1) ** len(neg)
    two = BiPartition((1,), (1,))
    assert chi_hyperoct(two, BiPartition((1, 1), ())) == 2


def test_bipartition_parse_roundtrip():
    for b in bipartitions(4):
        assert BiPartition.parse(str(b)) == b
    with pytest.raises(ValueError):
        BiPartition.parse("[2],[1]")


@pytest.mark.parametrize("t, mu", [(2, (3,)), (3, (5, 1)), (4, (7, 3)), (6, (11, 7, 3))])
def test_staircase_class(t, mu):
    assert staircase_class(t) == Partition(mu)


@given(st.integers(1, 6), st.data())
@settings(max_examples=30, deadline=None)
def test_parabolic_trivial_and_full(n, data):
    subset = data.draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    assert parabolic_multiplicity("A", n, subset, (n,)) == 1
    full = set(range(1, n))
    for lam in partitions(n):
        expected = 1 if lam.parts == (n,) else 0
        assert parabolic_multiplicity("A", n, full, lam) == expected


def test_parabolic_examples():
    # S_3 with an S_2 parabolic: permutation character on 3 points
    assert parabolic_multiplicity("A", 3, {1}, (2, 1)) == 1
    # W(B_2) with one reflection, reflection character, by direct summation
    refl = BiPartition((1,), (1,))
    for s in (0, 1):
        gens = P.simple_reflections_B(2)
        elems = P.generate([gens[s]], P.sperm_identity(2), P.sperm_compose)
        total = sum(chi_hyperoct(refl, BiPartition(*P.signed_cycle_type(w))) for w in elems)
        assert parabolic_multiplicity("B", 2, {s}, refl) == total // len(elems) == 1
    assert parabolic_multiplicity("B", 3, {0, 1, 2}, BiPartition((3,), ())) == 1


def test_parabolic_limits():
    with pytest.raises(CapabilityError):
        parabolic_multiplicity("B", 5, set(), BiPartition((5,), ()))
    with pytest.raises(ValueError):
        parabolic_multiplicity("A", 3, {7}, (3,))


def test_d4_triality_fixed():
    fixed = d4_triality_fixed()
    assert len(fixed) == 7
    trivial = frozenset((Partition((4,)), Partition(())))
    assert trivial in fixed
