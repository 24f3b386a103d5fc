"""Extension fields of sigma-invariant unipotent characters.

Rule tags name the result a classification comes from:

``Thm1``      cuspidal characters, standard graph automorphism
``Thm3``      rational non-cuspidal characters outside the listed exceptions
``Thm3.1``    split type A, parity of the partition
``Thm3.2``    E6, phi(64,4) and phi(64,13)
``Thm3.3``    Harish-Chandra series of a 2A cuspidal (2-core)
``Prop4.2``, ``BrunatB2``, ``BrunatG2``   exceptional graph automorphisms
``D4Gamma``   D4 extended by its full graph automorphism group
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InsufficientData, OutOfScope
from .fields import (Q, Q_ZETA3, SQRT_MINUS_Q, SQRT_Q, FieldDesc, canonicalize, resolve,
                     serialize_field)
from .groups import (ENNOLA_HINTS, EXCEPTIONAL_EXTENSION_FIELDS, RELATIVE_WEYL, GroupDescriptor,
                     UnipotentCharRecord, builtin_records, normalize_label)
from .partitions import Partition, is_staircase, parity_exponent, two_core

_EXC_RULES = {"B2x": "BrunatB2", "G2x": "BrunatG2", "F4x": "Prop4.2"}


@dataclass(frozen=True)
class HCSeries:
    support: str | Partition
    relative_weyl: str
    core_size: int | None = None


@dataclass(frozen=True)
class ClassificationResult:
    extension_fields: tuple[FieldDesc, ...]
    rule: str
    q: int | None = None
    resolved: tuple[FieldDesc, ...] | None = None
    trail: tuple[str, ...] = field(default=(), compare=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def field(self) -> FieldDesc:
        """Smallest character field among the extensions (the one the theorems state)."""
        rational = [f for f in self.extension_fields if f.is_rational]
        return rational[0] if rational else self.extension_fields[0]

    @property
    def resolved_field(self) -> FieldDesc | None:
        return None if self.q is None else resolve(self.field, self.q)

    def serialized(self) -> tuple[tuple[str, str], ...]:
        out = []
        if self.q is not None:
            out.append(("q", str(self.q)))
        out.append(("ext_formal", serialize_field(self.field)))
        out.append(("ext_field", serialize_field(self.resolved_field or self.field)))
        out.append(("rule", self.rule))
        return tuple(out)


def _lookup(g: GroupDescriptor, label: str, records=None) -> UnipotentCharRecord:
    key = normalize_label(g, label)
    for r in records if records is not None else builtin_records(g):
        if r.label == key:
            return r
    raise InsufficientData(f"insufficient data: no record for {key} in series {g.series}")


def sigma_invariant(g: GroupDescriptor, label: str, records=None) -> bool | None:
    """True/False from the tables; None when the tables carry no invariance data."""
    if g.series in ("A", "2A"):
        normalize_label(g, label)
        return True
    try:
        return _lookup(g, label, records).sigma_inv
    except InsufficientData:
        return None


def hc_series(g: GroupDescriptor, label: str, records=None) -> HCSeries:
    if g.series == "A":
        normalize_label(g, label)
        return HCSeries("principal", "A")
    if g.series == "2A":
        core = two_core(Partition.parse(normalize_label(g, label)))
        rank = (g.n - core.size) // 2
        return HCSeries(core, "B" if rank else "trivial", core.size)
    rec = _lookup(g, label, records)
    if rec.hc == "cuspidal":
        return HCSeries(rec.hc, "trivial")
    core_size = 6 if rec.hc == "2A5-series" else None
    rel = RELATIVE_WEYL.get((g.series, rec.hc))
    if rel is None and rec.hc.startswith(("D", "2D")) and rec.hc.endswith("-series"):
        rel = "B"
    if rel is None and rec.hc == "principal" and g.series in ("D", "D4-full-graph"):
        rel = "D"
    if rel is None and rec.hc == "principal" and g.series == "2D":
        rel = "B"
    return HCSeries(rec.hc, rel or "unknown", core_size)


def thm1_twisted_A_field(n: int) -> FieldDesc:
    """Cuspidal character of 2A_{n-1}: irrational exactly when C(n, 2) is odd."""
    return SQRT_MINUS_Q if comb(n, 2) % 2 else Q


def thm33_field(core_size: int) -> FieldDesc:
    """Series of a 2A cuspidal labelled by a 2-core of the given size."""
    return SQRT_MINUS_Q if core_size % 4 in (2, 3) else Q


def thm31_field(lam) -> FieldDesc:
    # formal sqrt(q) resolves to Q when q is a square
    return SQRT_Q if parity_exponent(lam) else Q


def _pair(f: FieldDesc, d) -> tuple[FieldDesc, ...]:
    """Fields of all extensions of an invariant character given the best one."""
    if d == 3:
        # the other two differ by linear characters of order 3
        if not f.is_rational:
            raise AssertionError("order-3 branch expects a rational extension")
        return (f, Q_ZETA3, Q_ZETA3)
    return (f, f)


def extension_field(g: GroupDescriptor, label: str, q: int | None = None,
                    records=None) -> ClassificationResult:
    """Classify the character fields of the extensions of a sigma-invariant character to G<sigma>."""
    q = g.q if q is None else q
    trail = []
    notes = []
    if g.series in ("A", "2A"):
        lam = Partition.parse(normalize_label(g, label))
        if g.series == "A":
            e = parity_exponent(lam)
            trail.append(f"parity exponent of {lam} is {e}")
            f, rule = thm31_field(lam), "Thm3.1"
        else:
            core = two_core(lam)
            if core == lam:
                t = is_staircase(lam)[1]
                trail.append(f"{lam} is the staircase t={t}; cuspidal, C({g.n},2)={comb(g.n, 2)}")
                f, rule = thm1_twisted_A_field(g.n), "Thm1"
            else:
                trail.append(f"2-core of {lam} is {core}, size {core.size} = {core.size % 4} mod 4")
                f, rule = thm33_field(core.size), "Thm3.3"
        return _result(g, f, rule, q, trail, notes)

    rec = _lookup(g, label, records)
    if rec.sigma_inv is None:
        raise InsufficientData(f"insufficient data: sigma-invariance of {rec.label} "
                               f"in series {g.series} is not tabulated")
    if not rec.sigma_inv:
        raise OutOfScope(f"{rec.label} is not invariant under the graph automorphism")

    if g.series in _EXC_RULES:
        f = EXCEPTIONAL_EXTENSION_FIELDS[g.series].get(rec.label)
        if f is None:
            raise InsufficientData(f"insufficient data: no extension field tabulated for {rec.label}")
        hint = ENNOLA_HINTS.get((g.series, rec.label))
        if hint is not None:
            notes.append(f"Ennola-dual reading: {serialize_field(hint)}")
        trail.append(f"tabulated for {g.series}")
        return _result(g, f, _EXC_RULES[g.series], q, trail, notes)

    if g.series == "D4-full-graph":
        trail.append("Gamma-invariant character of D4")
        return _result(g, Q, "D4Gamma", q, trail, notes)

    if rec.cuspidal:
        # the field of the extension is Q(rho) for every standard-sigma cuspidal outside 2A
        trail.append(f"cuspidal with Q(rho) = {serialize_field(rec.rho_field)}")
        return _result(g, canonicalize(rec.rho_field), "Thm1", q, trail, notes)

    if not rec.rho_field.is_rational:
        raise OutOfScope(f"{rec.label} is neither rational nor cuspidal")
    if g.series == "E6" and rec.label in ("phi(64,4)", "phi(64,13)"):
        trail.append("exceptional pair of E6")
        return _result(g, SQRT_Q, "Thm3.2", q, trail, notes)
    if g.series == "2E6" and rec.hc == "2A5-series":
        trail.append("series of the cuspidal of 2A5, 2-core of size 6")
        return _result(g, thm33_field(6), "Thm3.3", q, trail, notes)
    trail.append(f"rational, Harish-Chandra series {rec.hc}")
    return _result(g, Q, "Thm3", q, trail, notes)


def _result(g, f, rule, q, trail, notes):
    d = g.sigma_order
    fields = _pair(f, 3 if d == 3 else 2)
    resolved = tuple(resolve(x, q) for x in fields) if q is not None else None
    return ClassificationResult(fields, rule, q, resolved, tuple(trail), tuple(notes))


def fs_consistency(g: GroupDescriptor, rec: UnipotentCharRecord) -> bool:
    """Rational extension exists  <=>  Frobenius-Schur indicator +1, for a real cuspidal."""
    if not rec.cuspidal:
        raise ValueError(f"{rec.label} is not cuspidal")
    if not g.standard_sigma:
        raise OutOfScope("the indicator criterion concerns standard graph automorphisms only")
    if rec.fs is None:
        raise InsufficientData(f"Frobenius-Schur indicator of {rec.label} unknown")
    if not rec.rho_field.is_real:
        raise ValueError(f"{rec.label} is not real-valued")
    res = extension_field(g, rec.label, records=[rec] if g.series not in ("A", "2A") else None)
    return res.field.is_rational == (rec.fs == 1)
