from math import factorial

import pytest

from unipext.errors import CapabilityError
from unipext.oracle import (commuting_types_exist, oracle_char_table, oracle_hyperoct_table,
                            perm_char_table, sperm_from_signed_type, young_perm_char)
from unipext.partitions import Partition, partitions
from unipext.perm import signed_cycle_type
from unipext.weyl import bipartitions, chi_hyperoct, chi_sym


def test_young_perm_char():
    assert young_perm_char((4,), (2, 1, 1)) == 1
    assert young_perm_char((1, 1, 1, 1), (1, 1, 1, 1)) == factorial(4)
    assert young_perm_char((2, 1), (2, 1)) == 1


def test_perm_char_table_shape():
    t = perm_char_table(4)
    assert len(t.rows) == len(t.classes) == 5


def test_small_tables():
    assert oracle_char_table(1).rows == ((1,),)
    t = oracle_char_table(3)
    for lam in t.labels:
        row = [t.value(lam, mu) for mu in t.classes]
        assert t.inner(row, row) == 1
        assert row == [chi_sym(lam, mu) for mu in t.classes]


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_matches_mn(n):
    t = oracle_char_table(n)
    for lam in partitions(n):
        for mu in partitions(n):
            assert t.value(lam, mu) == chi_sym(lam, mu)


def test_limits():
    with pytest.raises(CapabilityError):
        oracle_char_table(8)
    with pytest.raises(CapabilityError):
        commuting_types_exist((9,), (9,))
    with pytest.raises(CapabilityError):
        oracle_hyperoct_table(5)


@pytest.mark.parametrize("mu, nu, expected", [
    ((3,), (2, 1), False), ((2,), (2,), True), ((5, 1), (2, 2, 2), False),
    ((2, 2), (2, 2), True), ((1, 1, 1), (2, 1), True)])
def test_commuting(mu, nu, expected):
    assert commuting_types_exist(mu, nu) is expected


def test_sperm_representatives():
    for c in bipartitions(4):
        pos, neg = signed_cycle_type(sperm_from_signed_type(c))
        assert (Partition(pos), Partition(neg)) == (c.first, c.second)


@pytest.mark.parametrize("n", range(1, 4))
def test_hyperoct_oracle_matches(n):
    t = oracle_hyperoct_table(n)
    for lab in t.labels:
        for c in t.classes:
            assert t.value(lab, c) == chi_hyperoct(lab, c)
