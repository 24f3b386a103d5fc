import pytest
from hypothesis import given, strategies as st

from conftest import partitions_st
from unipext.partitions import (BetaSet, Partition, beta_set, conjugate, even_bead_count,
                                is_staircase, parity_exponent, partition_from_beads, partitions,
                                remove_border_strips, staircase, two_core, two_quotient)

P = Partition.of

# p(n) for n = 0..12
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def hooks(lam):
    """Hook lengths straight from the diagram."""
    conj = conjugate(lam)
    return [lam[i] - j - 1 + conj[j] - i - 1 + 1 for i in range(len(lam)) for j in range(lam[i])]


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.parse("[3,1,1]") == P((3, 1, 1))
    assert Partition.parse("[]") == P(())
    assert str(P((3, 1, 1))) == "[3,1,1]"
    with pytest.raises(ValueError):
        Partition.parse("3,1")


@pytest.mark.parametrize("n", range(13))
def test_partition_counts_and_order(n):
    ps = list(partitions(n))
    assert len(ps) == PARTITION_COUNTS[n]
    assert [p.parts for p in ps] == sorted(p.parts for p in ps)
    assert all(p.size == n for p in ps)


@pytest.mark.parametrize("lam, expected", [((3, 1), (2, 1, 1)), ((), ()), ((2, 1), (2, 1))])
def test_conjugate(lam, expected):
    assert conjugate(lam) == P(expected)


@pytest.mark.parametrize("lam, beads, expected", [
    ((3, 1, 1), 3, (5, 2, 1)), ((), 3, (2, 1, 0)), ((2, 1), 2, (3, 1))])
def test_beta_set(lam, beads, expected):
    assert beta_set(lam, beads) == BetaSet(expected)


def test_beta_set_too_few_beads():
    with pytest.raises(ValueError):
        beta_set((2, 1), 1)


def test_border_strips_examples():
    assert remove_border_strips((2, 1), 2) == []
    (r,) = remove_border_strips((2, 1), 3)
    assert (r.remainder, r.height, r.sign) == (P(()), 1, -1)
    (r,) = remove_border_strips((3, 2, 1), 5)
    assert (r.remainder, r.height, r.sign) == (P((1,)), 2, 1)


@pytest.mark.parametrize("lam, core", [((2, 2), ()), ((3, 1, 1), (1,)), ((4, 3, 2, 1), (4, 3, 2, 1))])
def test_two_core_examples(lam, core):
    assert two_core(lam) == P(core)


def test_two_quotient_examples():
    assert two_quotient((1,)) == (P(()), P(()))
    q0, q1 = two_quotient((3, 1, 1))
    assert q0.size + q1.size == 2
    assert two_quotient((2,)) == (P(()), P((1,)))
    assert two_quotient((1, 1)) == (P((1,)), P(()))


def test_staircase_and_parity():
    assert is_staircase((3, 2, 1)) == (True, 3)
    assert is_staircase((2, 2)) == (False, None)
    assert is_staircase(()) == (True, 0)
    assert staircase(4) == P((4, 3, 2, 1))
    assert [parity_exponent(x) for x in ((2, 1), (3,), (1, 1, 1))] == [1, 0, 0]


@given(partitions_st())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions_st(), st.integers(0, 4))
def test_beta_roundtrip(lam, extra):
    assert beta_set(lam, len(lam) + extra).to_partition() == lam
    assert partition_from_beads(beta_set(lam, even_bead_count(lam)).beads) == lam


@given(partitions_st(), st.integers(1, 8))
def test_strips_match_hooks(lam, k):
    found = remove_border_strips(lam, k)
    assert len(found) == hooks(lam).count(k)
    for r in found:
        assert r.remainder.size == lam.size - k
        assert r.height >= 0


@given(partitions_st(max_size=20))
def test_core_quotient_identity(lam):
    core = two_core(lam)
    q0, q1 = two_quotient(lam)
    assert core.size + 2 * (q0.size + q1.size) == lam.size
    assert is_staircase(core)[0]
    assert remove_border_strips(core, 2) == []
    assert two_core(conjugate(lam)) == conjugate(core)
