import pytest

from unipext.classify import (extension_field, fs_consistency, hc_series, sigma_invariant,
                              thm1_twisted_A_field, thm33_field)
from unipext.errors import InsufficientData, OutOfScope
from unipext.fields import Q, Q_I, Q_ZETA3, SQRT_MINUS_Q, SQRT_Q, serialize_field
from unipext.groups import builtin_records, find_record, parse_group
from unipext.partitions import Partition, partitions, two_core


def ext(series, n, label, q, **kw):
    res = extension_field(parse_group(series, n, q, **kw), label)
    return serialize_field(res.resolved_field), res.rule


@pytest.mark.parametrize("series, n, label, q, field, rule", [
    ("2A", 3, "[2,1]", 5, "Q(sqrt(-5))", "Thm1"),
    ("A", 3, "[2,1]", 5, "Q(sqrt(5))", "Thm3.1"),
    ("A", 3, "[2,1]", 9, "Q", "Thm3.1"),
    ("E6", None, "phi(64,4)", 4, "Q", "Thm3.2"),
    ("E6", None, "phi(64,13)", 2, "Q(sqrt(2))", "Thm3.2"),
    ("G2x", None, "phi(2,2)", 27, "Q(sqrt(3))", "BrunatG2"),
    ("G2x", None, "G2[1]", 3, "Q(zeta3)", "BrunatG2"),
    ("F4x", None, "F4[-1]", 8, "Q(sqrt(-2))", "Prop4.2"),
    ("F4x", None, "F4[i]", 2, "Q(i)", "Prop4.2"),
    ("F4x", None, "phi(16,5)", 2, "Q(sqrt(2))", "Prop4.2"),
    ("B2x", None, "phi(1,0)", 8, "Q", "BrunatB2"),
    ("2E6", None, "2A5:1", 7, "Q(sqrt(-7))", "Thm3.3"),
    ("E6", None, "E6[theta]", 5, "Q(zeta3)", "Thm1"),
    ("2A", 5, "[2,1,1,1]", 5, "Q(sqrt(-5))", "Thm3.3"),
    ("2A", 5, "[3,1,1]", 5, "Q", "Thm3.3"),
])
def test_extension_field_examples(series, n, label, q, field, rule):
    assert ext(series, n, label, q) == (field, rule)


def test_d4_full_graph_rational():
    g = parse_group("D4-full-graph", None, 5)
    for rec in builtin_records(g):
        if rec.sigma_inv:
            res = extension_field(g, rec.label)
            assert res.field == Q and res.rule == "D4Gamma"


def test_triality_gives_three_extensions():
    res = extension_field(parse_group("3D4", None, 5), "3D4[-1]")
    assert res.extension_fields == (Q, Q_ZETA3, Q_ZETA3)
    assert res.field == Q


def test_errors():
    with pytest.raises(InsufficientData):
        extension_field(parse_group("E6", None, 2), "phi(20,2)")
    with pytest.raises(InsufficientData):
        extension_field(parse_group("E6", None, 2), "no-such-label")
    g2 = parse_group("G2x", None, 3)
    not_inv = next(r for r in builtin_records(g2) if r.sigma_inv is False)
    with pytest.raises(OutOfScope):
        extension_field(g2, not_inv.label)


def test_sigma_invariant():
    assert sigma_invariant(parse_group("2A", 10, 3), "[4,3,2,1]") is True
    assert sigma_invariant(parse_group("F4x", None, 2), "phi(16,5)") is True
    assert sigma_invariant(parse_group("E6", None, 2), "phi(20,2)") is None


def test_hc_series():
    s = hc_series(parse_group("2A", 5, 3), "[3,1,1]")
    assert s.support == Partition((1,)) and s.core_size == 1
    s = hc_series(parse_group("2A", 12, 3), "[4,3,2,1,1,1]")
    assert s.support == Partition((4, 3, 2, 1)) and s.core_size == 10
    s = hc_series(parse_group("2E6", None, 3), "2A5:eps")
    assert s.support == "2A5-series" and s.core_size == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_2A_matches_core_rule(n):
    g = parse_group("2A", n, 5)
    for lam in partitions(n):
        res = extension_field(g, str(lam))
        assert res.field == thm33_field(two_core(lam).size)


def test_thm1_field():
    assert [thm1_twisted_A_field(n) == SQRT_MINUS_Q for n in (3, 6, 10, 15, 21, 28)] == [
        True, True, True, True, False, False]


def test_serialized_keys():
    res = extension_field(parse_group("2A", 3, 5), "[2,1]")
    assert res.serialized() == (("q", "5"), ("ext_formal", "Q(sqrt(-q))"),
                                ("ext_field", "Q(sqrt(-5))"), ("rule", "Thm1"))
    assert res.resolved == (res.resolved_field, res.resolved_field)


@pytest.mark.parametrize("series, n, label", [
    ("2A", 3, "[2,1]"), ("2A", 28, "[7,6,5,4,3,2,1]"), ("2D", 9, "2D9:cusp"), ("D", 4, "D4:cusp")])
def test_fs_consistency(series, n, label):
    g = parse_group(series, n, 5)
    assert fs_consistency(g, find_record(g, label))


def test_fs_consistency_scope():
    g = parse_group("F4x", None, 2)
    with pytest.raises(OutOfScope):
        fs_consistency(g, find_record(g, "F4[-1]"))
    g = parse_group("2A", 3, 5)
    with pytest.raises(ValueError):
        fs_consistency(g, find_record(g, "[3]"))


def test_formal_result_without_q_resolution():
    res = extension_field(parse_group("A", 3, 5), "[2,1]")
    assert res.field == SQRT_Q
    assert res.resolved_field != Q_I
