import time

import pytest

from unipext.fields import Q_ZETA3, FrobeniusEigenvalue
from unipext.groups import (TableError, builtin_records, cuspidal_records, dump_table,
                            find_record, load_table, normalize_label, parse_group)


def test_parse_group():
    g = parse_group("2A", 3, 5)
    assert (g.delta, g.sigma_order) == (2, 2)
    g = parse_group("3D4", 4, 7)
    assert (g.delta, g.sigma_order) == (3, 3)
    assert parse_group("F4-excgraph", 4, 8).series == "F4x"
    assert parse_group("D", 4, 5, sigma_order=3).sigma_order == 3


@pytest.mark.parametrize("args", [
    ("F4-excgraph", 4, 9), ("G2x", None, 9), ("B2x", None, 4), ("2A", 3, 6), ("D", 3, 5),
    ("E7", None, 2), ("E6", 5, 2), ("2D", 4, 3, 3)])
def test_parse_group_errors(args):
    with pytest.raises(ValueError):
        parse_group(*args)


@pytest.mark.parametrize("series, q, total, invariant", [
    ("G2x", 3, 10, 8), ("B2x", 2, 6, 4), ("F4x", 2, 37, 21), ("D4-full-graph", 5, 14, 8)])
def test_exceptional_counts(series, q, total, invariant):
    recs = builtin_records(parse_group(series, None, q))
    assert len(recs) == total
    assert sum(r.sigma_inv is True for r in recs) == invariant


def test_named_records():
    g2 = parse_group("G2x", None, 3)
    assert find_record(g2, "G2[θ]").rho_field == Q_ZETA3
    f4 = parse_group("F4x", None, 8)
    rec = find_record(f4, "F4[-1]")
    assert rec.sigma_inv and rec.fs == 1
    cusp = find_record(parse_group("2A", 3, 5), "[2,1]")
    assert cusp.cuspidal and cusp.omega == FrobeniusEigenvalue.minus_q_power(3)
    assert len(builtin_records(parse_group("2A", 3, 5))) == 3


def test_unlisted_labels_are_unknown():
    e6 = builtin_records(parse_group("E6", None, 2))
    assert any(r.sigma_inv is None for r in e6)
    assert find_record(parse_group("E6", None, 2), "phi(64,4)").sigma_inv is True


def test_normalize_label():
    g = parse_group("E6", None, 2)
    assert normalize_label(g, "phi_{64,4}") == "phi(64,4)"
    assert normalize_label(g, "E6[θ]") == "E6[theta]"
    with pytest.raises(ValueError):
        normalize_label(parse_group("A", 3, 2), "[2,2]")


def test_cuspidal_records_large_2A_fast():
    t = time.time()
    (rec,) = cuspidal_records(parse_group("2A", 78, 5))
    assert rec.label == "[12,11,10,9,8,7,6,5,4,3,2,1]"
    assert cuspidal_records(parse_group("2A", 77, 5)) == []
    assert time.time() - t < 1


@pytest.mark.parametrize("series, n, q", [
    ("A", 4, 2), ("2A", 6, 3), ("D", 5, 3), ("D", 4, 5), ("2D", 5, 3), ("E6", None, 2),
    ("2E6", None, 2), ("3D4", None, 2), ("F4x", None, 2), ("G2x", None, 3), ("B2x", None, 2),
    ("D4-full-graph", None, 5)])
def test_dump_load_roundtrip(series, n, q):
    recs = builtin_records(parse_group(series, n, q))
    text = dump_table(recs)
    assert load_table(text) == recs
    assert dump_table(load_table(text)) == text
    assert text.isascii()


def test_load_table_basics():
    assert load_table("") == []
    line = ("series=E6 n=6 label=phi(64,4) omega=1*q^0 sigma_inv=true rho_field=Q "
            "hc=principal fs=unknown")
    (rec,) = load_table("# comment\n\n" + line + "\n")
    assert rec.sigma_inv is True and rec.omega == FrobeniusEigenvalue.of("1")


@pytest.mark.parametrize("line, needle", [
    ("series=E6 n=6 label=x omega=-q^3 sigma_inv=true rho_field=Q hc=principal fs=unknown",
     "omega"),
    ("series=E6 n=6 label=x omega=1*q^0 sigma_inv=maybe rho_field=Q hc=principal fs=unknown",
     "sigma_inv"),
    ("series=E6 n=6 label=x omega=1*q^0 sigma_inv=true hc=principal fs=unknown", "rho_field"),
    ("n=6 series=E6 label=x omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown",
     "order"),
    ("series=E6 n=6 label=x omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown z=1",
     "z"),
    ("series=E6 n=6 label=θ omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=unknown",
     "ASCII"),
    ("series=E6 n=6 label=x omega=1*q^0 sigma_inv=true rho_field=Q(sqrt(q)) hc=principal fs=unknown",
     "q"),
    ("series=E6 n=6 label=x omega=1*q^0 sigma_inv=true rho_field=Q hc=principal fs=0", "indicator"),
])
def test_load_table_errors(line, needle):
    with pytest.raises(TableError) as exc:
        load_table("\n" + line)
    assert needle in str(exc.value)
    assert exc.value.line == 2

