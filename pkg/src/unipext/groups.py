"""Group descriptors, built-in unipotent character data and the record file format.

Record format, one record per line::

    series=<tag> n=<int> label=<text> omega=<unit>*q^<int> sigma_inv=<true|false|unknown>
    rho_field=<field> hc=<tag> fs=<-1|0|+1|unknown>

``omega`` may also be ``unknown``.  Classification output appends the keys
``q``, ``ext_formal``, ``ext_field`` and ``rule`` in that order.  Lines
starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, isqrt

from .errors import CapabilityError
from .fields import (FieldDesc, FrobeniusEigenvalue, Q, Q_I, Q_ZETA3, SQRT_MINUS_Q, SQRT_Q,
                     canonicalize, parse_field, prime_power, quadratic, serialize_field, unit_field)
from .partitions import Partition, partitions, staircase, two_core
from .weyl import BiPartition, bipartitions, d4_triality_fixed

SERIES = ("A", "2A", "D", "2D", "3D4", "E6", "2E6", "B2x", "G2x", "F4x", "D4-full-graph")

ALIASES = {
    "B2-excgraph": "B2x", "G2-excgraph": "G2x", "F4-excgraph": "F4x",
    "D4G": "D4-full-graph", "D4-full": "D4-full-graph",
}

# series -> (delta, default sigma order, fixed rank or None, q constraint)
_SERIES_DATA = {
    "A": (1, 2, None, None),
    "2A": (2, 2, None, None),
    "D": (1, 2, None, None),
    "2D": (2, 2, None, None),
    "3D4": (3, 3, 4, None),
    "E6": (1, 2, 6, None),
    "2E6": (2, 2, 6, None),
    "B2x": (1, 2, 2, "q = 2^(2f+1)"),
    "G2x": (1, 2, 2, "q = 3^(2f+1)"),
    "F4x": (1, 2, 4, "q = 2^(2f+1)"),
    "D4-full-graph": (1, "S3", 4, None),
}

EXCEPTIONAL_GRAPH = frozenset({"B2x", "G2x", "F4x"})


@dataclass(frozen=True)
class GroupDescriptor:
    series: str
    n: int
    q: int
    delta: int
    sigma_order: int | str
    q_constraint: str | None = None

    @property
    def standard_sigma(self) -> bool:
        """sigma is induced by a graph automorphism of the algebraic group."""
        return self.series not in EXCEPTIONAL_GRAPH and self.series != "D4-full-graph"

    def __str__(self):
        return f"{self.series}(n={self.n}, q={self.q})"


def canonical_series(series: str) -> str:
    s = ALIASES.get(series.strip(), series.strip())
    if s not in _SERIES_DATA:
        raise ValueError(f"unknown series {series!r}; expected one of {', '.join(SERIES)}")
    return s


def parse_group(series: str, n: int | None, q: int, sigma_order: int | None = None) -> GroupDescriptor:
    """Validate and complete a group descriptor.

    ``n`` is the rank parameter: A_{n-1} for series A/2A and D_n for D/2D;
    for the exceptional series it may be omitted.
    """
    s = canonical_series(series)
    delta, d, fixed_rank, constraint = _SERIES_DATA[s]
    if fixed_rank is not None:
        if n is not None and n != fixed_rank:
            raise ValueError(f"series {s} has rank {fixed_rank}, got n={n}")
        n = fixed_rank
    if n is None:
        raise ValueError(f"series {s} needs n")
    if s in ("A", "2A") and n < 1:
        raise ValueError("n must be positive")
    if s in ("D", "2D") and n < 4:
        raise ValueError(f"type D_n needs n >= 4, got {n}")
    p, a = prime_power(q)
    if s in ("B2x", "F4x") and not (p == 2 and a % 2 == 1):
        raise ValueError(f"series {s} needs q = 2^(2f+1), got q={q}")
    if s == "G2x" and not (p == 3 and a % 2 == 1):
        raise ValueError(f"series {s} needs q = 3^(2f+1), got q={q}")
    if sigma_order is not None and sigma_order != d:
        if s == "D" and n == 4 and sigma_order == 3:
            d = 3
        else:
            raise ValueError(f"sigma of order {sigma_order} not available for series {s} (n={n})")
    if delta not in (1, 2, 3):
        raise AssertionError("delta out of range")
    return GroupDescriptor(s, n, q, delta, d, constraint)


@dataclass(frozen=True)
class UnipotentCharRecord:
    series: str
    n: int
    label: str
    omega: FrobeniusEigenvalue | None
    sigma_inv: bool | None
    rho_field: FieldDesc
    hc: str
    fs: int | None
    extras: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    @property
    def cuspidal(self) -> bool:
        if self.hc == "cuspidal":
            return True
        return self.series == "2A" and self.hc == f"core{self.label}"

    def to_line(self) -> str:
        parts = [
            f"series={self.series}", f"n={self.n}", f"label={self.label}",
            f"omega={self.omega if self.omega is not None else 'unknown'}",
            f"sigma_inv={_tristate(self.sigma_inv)}",
            f"rho_field={serialize_field(self.rho_field)}", f"hc={self.hc}",
            f"fs={_fs_text(self.fs)}",
        ]
        parts += [f"{k}={v}" for k, v in self.extras]
        return " ".join(parts)


def _tristate(b):
    return "unknown" if b is None else ("true" if b else "false")


def _fs_text(fs):
    return {None: "unknown", 1: "+1", 0: "0", -1: "-1"}[fs]


# -- type A and 2A ------------------------------------------------------------

def _records_A_one(n, lam):
    return UnipotentCharRecord("A", n, str(lam), FrobeniusEigenvalue.of("1"), True, Q,
                               "principal", None)


def _records_A(n):
    return [_records_A_one(n, lam) for lam in partitions(n)]


def cuspidal_2A_omega(m: int) -> FrobeniusEigenvalue:
    """(-q)^C(m,2), the Frobenius eigenvalue on the series of the 2-core of size m."""
    return FrobeniusEigenvalue.minus_q_power(comb(m, 2))


def _record_2A(n, lam):
    core = two_core(lam)
    return UnipotentCharRecord("2A", n, str(lam), cuspidal_2A_omega(core.size), True, Q,
                               f"core{core}", (-1) ** (n // 2) if core == lam else None)


def _records_2A(n):
    return [_record_2A(n, lam) for lam in partitions(n)]


# -- type D ---------------------------------------------------------------------

def _unordered_label(a, b):
    x, y = (a.size, a.parts), (b.size, b.parts)
    first, second = (a, b) if x >= y else (b, a)
    return str(BiPartition(first, second))


def _d_series_omega(k):
    # eigenvalue of the cuspidal of D_{4k^2}; only k = 1 is modelled
    return FrobeniusEigenvalue.of("-1") if k == 1 else None


def _records_D(n, d, series="D"):
    out = []
    seen = set()
    fixed = d4_triality_fixed() if n == 4 and d in (3, "S3") else None
    for bp in bipartitions(n):
        key = frozenset((bp.first, bp.second))
        if key in seen:
            continue
        seen.add(key)
        if bp.first == bp.second:
            for sgn in "+-":
                out.append(UnipotentCharRecord(series, n, str(bp) + sgn, FrobeniusEigenvalue.of("1"),
                                               False, Q, "principal", None))
            continue
        inv = True if fixed is None else key in fixed
        out.append(UnipotentCharRecord(series, n, _unordered_label(bp.first, bp.second),
                                       FrobeniusEigenvalue.of("1"), inv, Q, "principal", None))
    k = 1
    while 4 * k * k <= n:
        m = n - 4 * k * k
        omega = _d_series_omega(k)
        if m == 0:
            out.append(UnipotentCharRecord(series, n, f"D{n}:cusp", omega, True, Q, "cuspidal", 1))
        else:
            for bp in bipartitions(m):
                # sigma fixes the cuspidal and acts trivially on W' of type B
                out.append(UnipotentCharRecord(series, n, f"D{4 * k * k}:{bp}", omega, True, Q,
                                               f"D{4 * k * k}-series", None))
        k += 1
    return out


def _records_2D(n):
    out = []
    k = 0
    while (2 * k + 1) ** 2 <= n:
        c = (2 * k + 1) ** 2
        m = n - c
        if m == 0:
            out.append(UnipotentCharRecord("2D", n, f"2D{n}:cusp", FrobeniusEigenvalue.of("1"),
                                           True, Q, "cuspidal", 1))
        else:
            tag = "principal" if c == 1 else f"2D{c}-series"
            for bp in bipartitions(m):
                prefix = "" if c == 1 else f"2D{c}:"
                out.append(UnipotentCharRecord("2D", n, f"{prefix}{bp}", FrobeniusEigenvalue.of("1"),
                                               None, Q, tag, None))
        k += 1
    return out


# -- tabulated exceptional data ------------------------------------------------------

def _w(unit, e=0):
    return FrobeniusEigenvalue.of(unit, e)


# (label, omega, sigma_inv, rho_field, hc tag, fs)
_T = {}

_E6_PRINCIPAL = ["phi(1,0)", "phi(1,36)", "phi(10,9)", "phi(6,1)", "phi(6,25)", "phi(20,10)",
                 "phi(15,5)", "phi(15,17)", "phi(15,4)", "phi(15,16)", "phi(20,2)", "phi(20,20)",
                 "phi(24,6)", "phi(24,12)", "phi(30,3)", "phi(30,15)", "phi(60,8)", "phi(80,7)",
                 "phi(90,8)", "phi(60,5)", "phi(60,11)", "phi(64,4)", "phi(64,13)", "phi(81,6)",
                 "phi(81,10)"]

_F4_PRINCIPAL = ["phi(1,0)", "phi(1,12'')", "phi(1,12')", "phi(1,24)", "phi(2,4'')", "phi(2,16')",
                 "phi(2,4')", "phi(2,16'')", "phi(4,8)", "phi(9,2)", "phi(9,6'')", "phi(9,6')",
                 "phi(9,10)", "phi(6,6')", "phi(6,6'')", "phi(12,4)", "phi(4,1)", "phi(4,7'')",
                 "phi(4,7')", "phi(4,13)", "phi(8,3'')", "phi(8,9')", "phi(8,3')", "phi(8,9'')",
                 "phi(16,5)"]

_T["E6"] = (
    [(lab, _w("1"), True if lab in ("phi(64,4)", "phi(64,13)") else None, Q, "principal", None)
     for lab in _E6_PRINCIPAL]
    + [(lab, _w("-1"), True, Q, "D4-series", None) for lab in ("D4,1", "D4,r", "D4,eps")]
    + [("E6[theta]", _w("zeta3"), True, Q_ZETA3, "cuspidal", 0),
       ("E6[theta^2]", _w("zeta3^2"), True, Q_ZETA3, "cuspidal", 0)]
)

# principal series of 2E6 is labelled by characters of W(F4)
_T["2E6"] = (
    [(lab, _w("1"), None, Q, "principal", None) for lab in _F4_PRINCIPAL]
    + [(lab, cuspidal_2A_omega(6), True, Q, "2A5-series", None) for lab in ("2A5:1", "2A5:eps")]
    + [("2E6[1]", _w("1"), True, Q, "cuspidal", 1),
       ("2E6[theta]", _w("zeta3"), True, Q_ZETA3, "cuspidal", 0),
       ("2E6[theta^2]", _w("zeta3^2"), True, Q_ZETA3, "cuspidal", 0)]
)

_T["3D4"] = (
    [(lab, _w("1"), None, Q, "principal", None)
     for lab in ("phi(1,0)", "phi(1,6)", "phi(1,3')", "phi(1,3'')", "phi(2,1)", "phi(2,2)")]
    + [("3D4[1]", _w("1"), True, Q, "cuspidal", 1),
       ("3D4[-1]", _w("-1"), True, Q, "cuspidal", 1)]
)

_T["B2x"] = [
    ("phi(1,0)", _w("1"), True, Q, "principal", None),
    ("phi(1,4)", _w("1"), True, Q, "principal", None),
    ("phi(2,1)", _w("1"), True, Q, "principal", None),
    ("phi(1,2')", _w("1"), False, Q, "principal", None),
    ("phi(1,2'')", _w("1"), False, Q, "principal", None),
    ("B2", _w("-1"), True, Q, "cuspidal", 1),
]

_T["G2x"] = [
    ("phi(1,0)", _w("1"), True, Q, "principal", None),
    ("phi(1,6)", _w("1"), True, Q, "principal", None),
    ("phi(1,3')", _w("1"), False, Q, "principal", None),
    ("phi(1,3'')", _w("1"), False, Q, "principal", None),
    ("phi(2,1)", _w("1"), True, Q, "principal", None),
    ("phi(2,2)", _w("1"), True, Q, "principal", None),
    ("G2[1]", _w("1"), True, Q, "cuspidal", 1),
    ("G2[-1]", _w("-1"), True, Q, "cuspidal", 1),
    ("G2[theta]", _w("zeta3"), True, Q_ZETA3, "cuspidal", 0),
    ("G2[theta^2]", _w("zeta3^2"), True, Q_ZETA3, "cuspidal", 0),
]

_F4_INVARIANT_PRINCIPAL = {"phi(1,0)", "phi(4,1)", "phi(9,2)", "phi(12,4)", "phi(6,6')", "phi(6,6'')",
                           "phi(4,8)", "phi(9,10)", "phi(4,13)", "phi(1,24)", "phi(16,5)"}

_T["F4x"] = (
    [(lab, _w("1"), lab in _F4_INVARIANT_PRINCIPAL, Q, "principal", None) for lab in _F4_PRINCIPAL]
    + [(lab, _w("-1"), lab in ("B2,1", "B2,r", "B2,eps"), Q, "B2-series", None)
       for lab in ("B2,1", "B2,eps'", "B2,eps''", "B2,r", "B2,eps")]
    + [("F4[-1]", _w("-1"), True, Q, "cuspidal", 1),
       ("F4[i]", _w("i"), True, Q_I, "cuspidal", 0),
       ("F4[-i]", _w("-i"), True, Q_I, "cuspidal", 0),
       ("F4[theta]", _w("zeta3"), True, Q_ZETA3, "cuspidal", 0),
       ("F4[theta^2]", _w("zeta3^2"), True, Q_ZETA3, "cuspidal", 0),
       ("F4^I[1]", _w("1"), True, Q, "cuspidal", 1),
       ("F4^II[1]", _w("1"), True, Q, "cuspidal", 1)]
)

# character fields of the extensions for exceptional graph automorphisms
EXCEPTIONAL_EXTENSION_FIELDS = {
    "B2x": {"phi(1,0)": Q, "phi(1,4)": Q, "phi(2,1)": Q, "B2": Q},
    "G2x": {"phi(1,0)": Q, "phi(2,1)": Q, "phi(1,6)": Q, "G2[-1]": Q,
            "phi(2,2)": quadratic(1, 3),
            "G2[1]": Q_ZETA3, "G2[theta]": Q_ZETA3, "G2[theta^2]": Q_ZETA3},
    "F4x": dict({lab: Q for lab in _F4_INVARIANT_PRINCIPAL - {"phi(16,5)"}},
                **{"B2,1": Q, "B2,r": Q, "B2,eps": Q, "F4^I[1]": Q, "F4^II[1]": Q,
                   "phi(16,5)": quadratic(1, 2),
                   "F4[i]": Q_I, "F4[-i]": Q_I,
                   "F4[theta]": Q_ZETA3, "F4[theta^2]": Q_ZETA3,
                   "F4[-1]": quadratic(-1, 2)}),
}

# Ennola-dual reading of the exceptional-graph irrationalities; metadata only
ENNOLA_HINTS = {
    ("G2x", "phi(2,2)"): SQRT_Q, ("G2x", "G2[1]"): SQRT_MINUS_Q,
    ("F4x", "phi(16,5)"): SQRT_Q, ("F4x", "F4[-1]"): SQRT_MINUS_Q,
}

# Relative Weyl group type of each Harish-Chandra series tag, per series.
RELATIVE_WEYL = {
    ("E6", "principal"): "E6", ("E6", "D4-series"): "A2", ("2E6", "principal"): "F4",
    ("2E6", "2A5-series"): "B1", ("3D4", "principal"): "G2", ("B2x", "principal"): "B2",
    ("G2x", "principal"): "G2", ("F4x", "principal"): "F4", ("F4x", "B2-series"): "B2",
}


def builtin_records(g: GroupDescriptor) -> list[UnipotentCharRecord]:
    return list(_builtin(g.series, g.n, g.sigma_order))


@lru_cache(maxsize=64)
def _builtin(s, n, sigma_order):
    return tuple(_generate(s, n, sigma_order))


def _generate(s, n, sigma_order):
    if s == "A":
        return _records_A(n)
    if s == "2A":
        return _records_2A(n)
    if s == "D":
        return _records_D(n, sigma_order)
    if s == "D4-full-graph":
        return _records_D(4, "S3", series="D4-full-graph")
    if s == "2D":
        return _records_2D(n)
    if s in _T:
        return [UnipotentCharRecord(s, n, lab, w, inv, rho, hc, fs)
                for lab, w, inv, rho, hc, fs in _T[s]]
    raise CapabilityError(f"insufficient data: no built-in table for series {s}")


def cuspidal_records(g: GroupDescriptor) -> list[UnipotentCharRecord]:
    """Cuspidal records only; avoids enumerating every partition for large 2A."""
    if g.series == "A":
        return []
    if g.series == "2A":
        t = (isqrt(8 * g.n + 1) - 1) // 2
        return [_record_2A(g.n, staircase(t))] if t * (t + 1) // 2 == g.n else []
    return [r for r in builtin_records(g) if r.cuspidal]


def find_record(g: GroupDescriptor, label: str, records=None) -> UnipotentCharRecord | None:
    label = normalize_label(g, label)
    if records is None and g.series in ("A", "2A"):
        lam = Partition.parse(label)
        return _records_A_one(g.n, lam) if g.series == "A" else _record_2A(g.n, lam)
    for r in records if records is not None else builtin_records(g):
        if r.label == label:
            return r
    return None


def normalize_label(g: GroupDescriptor, label: str) -> str:
    """Canonical text for a user-supplied label."""
    s = label.strip().replace(" ", "")
    if g.series in ("A", "2A"):
        lam = Partition.parse(s)
        if lam.size != g.n:
            raise ValueError(f"label {s} is not a partition of {g.n}")
        return str(lam)
    if g.series in ("D", "2D", "D4-full-graph") and s.startswith("(") and s[-1] in ")+-":
        sign = s[-1] if s[-1] in "+-" else ""
        bp = BiPartition.parse(s[:-1] if sign else s)
        if bp.size != g.n - (1 if g.series == "2D" else 0):
            raise ValueError(f"bipartition {s} has the wrong size for {g.series}{g.n}")
        if sign or g.series == "2D":
            return str(bp) + sign
        return _unordered_label(bp.first, bp.second)
    for a, b in (("θ", "theta"), ("ε", "eps"), ("_{", "("), ("}", ")"), ("phi_", "phi")):
        s = s.replace(a, b)
    if s.startswith("phi") and not s.startswith("phi("):
        s = "phi(" + s[3:] + ")"
    return s


# -- file format --------------------------------------------------------------

class TableError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_REQUIRED = ("series", "n", "label", "omega", "sigma_inv", "rho_field", "hc", "fs")
_EXTRA = ("q", "ext_formal", "ext_field", "rule")


def _parse_tristate(text):
    return {"true": True, "false": False, "unknown": None}[text]


def parse_record(line: str, lineno: int | None = None) -> UnipotentCharRecord:
    if not line.isascii():
        raise TableError("non-ASCII text", lineno)
    kv = {}
    order = []
    for token in line.split():
        key, eq, value = token.partition("=")
        if not eq:
            raise TableError(f"token {token!r} is not key=value", lineno)
        if key in kv:
            raise TableError(f"duplicate field {key!r}", lineno)
        if key not in _REQUIRED and key not in _EXTRA:
            raise TableError(f"unknown field {key!r}", lineno)
        kv[key] = value
        order.append(key)
    missing = [k for k in _REQUIRED if k not in kv]
    if missing:
        raise TableError(f"missing field(s) {', '.join(missing)}", lineno)
    if tuple(order[:len(_REQUIRED)]) != _REQUIRED:
        raise TableError("fields out of order", lineno)

    def conv(key, fn):
        try:
            return fn(kv[key])
        except (ValueError, KeyError) as exc:
            raise TableError(f"bad {key} field {kv[key]!r}: {exc}", lineno) from None

    series = conv("series", canonical_series)
    n = conv("n", int)
    omega = None if kv["omega"] == "unknown" else conv("omega", FrobeniusEigenvalue.parse)
    rec = UnipotentCharRecord(
        series=series, n=n, label=kv["label"], omega=omega,
        sigma_inv=conv("sigma_inv", _parse_tristate),
        rho_field=conv("rho_field", parse_field), hc=kv["hc"],
        fs=conv("fs", lambda t: {"+1": 1, "1": 1, "0": 0, "-1": -1, "unknown": None}[t]),
        extras=tuple((k, kv[k]) for k in order[len(_REQUIRED):]),
    )
    try:
        validate_record(rec)
    except ValueError as exc:
        raise TableError(f"record {rec.series}:{rec.label}: {exc}", lineno) from None
    return rec


def validate_record(rec: UnipotentCharRecord) -> None:
    if rec.rho_field.is_formal:
        raise ValueError("rho_field of a unipotent character cannot depend on q")
    if rec.omega is not None:
        if rec.omega.root_order in (1, 2) and not rec.rho_field.is_rational:
            raise ValueError("omega is +-(power of q) but rho_field is not Q")
        if rec.cuspidal and canonicalize(rec.rho_field) != unit_field(rec.omega):
            raise ValueError(f"cuspidal record needs rho_field = Q(omega) = {unit_field(rec.omega)}")
    if rec.fs == 0 and rec.rho_field.is_real:
        raise ValueError("indicator 0 requires a non-real character field")
    if rec.fs in (1, -1) and not rec.rho_field.is_real:
        raise ValueError("indicator +-1 requires a real character field")
    if rec.series in ("A", "2A"):
        lam = Partition.parse(rec.label)
        if lam.size != rec.n:
            raise ValueError(f"label is not a partition of {rec.n}")
        if rec.series == "2A" and rec.hc != f"core{two_core(lam)}":
            raise ValueError(f"hc tag must be core{two_core(lam)}")


def load_table(text: str) -> list[UnipotentCharRecord]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append(parse_record(s, lineno))
    return out


def dump_table(records) -> str:
    return "".join(r.to_line() + "\n" for r in records)
