"""Formal character fields and Frobenius eigenvalues.

Only the fields that occur as character fields of extended unipotent
characters are modelled: Q, Q(sqrt(+-c q^e)) with c squarefree and e in {0, 1},
Q(i) and Q(zeta3).  ``q`` stays a formal symbol until :func:`resolve` is
called with a concrete prime power.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from sympy import factorint

RATIONAL, QUADRATIC, CYCLOTOMIC = "rational", "quadratic", "cyclotomic"


@dataclass(frozen=True)
class FieldDesc:
    kind: str
    sign: int = 1
    coeff: int = 1
    qpow: int = 0
    order: int = 1
    # set by resolve(); excluded from equality
    at_q: int | None = field(default=None, compare=False)

    @property
    def is_formal(self) -> bool:
        return self.qpow != 0

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    @property
    def is_real(self) -> bool:
        """Real for every admissible value of q."""
        if self.kind == RATIONAL:
            return True
        return self.kind == QUADRATIC and self.sign > 0

    def __str__(self):
        return serialize_field(self)


Q = FieldDesc(RATIONAL)
Q_I = FieldDesc(CYCLOTOMIC, order=4)
Q_ZETA3 = FieldDesc(CYCLOTOMIC, order=3)


def quadratic(sign: int, coeff: int = 1, qpow: int = 0) -> FieldDesc:
    """Q(sqrt(sign * coeff * q^qpow)), canonicalized."""
    if sign not in (1, -1) or coeff < 1 or qpow not in (0, 1):
        raise ValueError(f"bad quadratic field data ({sign}, {coeff}, {qpow})")
    return canonicalize(FieldDesc(QUADRATIC, sign, coeff, qpow))


def squarefree_kernel(m: int) -> int:
    """Squarefree part of a nonzero integer, keeping its sign."""
    if m == 0:
        raise ValueError("zero has no squarefree kernel")
    k = 1
    for p, e in factorint(abs(m)).items():
        if e % 2:
            k *= p
    return k if m > 0 else -k


def canonicalize(f: FieldDesc) -> FieldDesc:
    if f.kind != QUADRATIC:
        return f
    radicand = squarefree_kernel(f.sign * f.coeff)
    if f.qpow == 0:
        if radicand == 1:
            return FieldDesc(RATIONAL, at_q=f.at_q)
        if radicand == -1:
            return FieldDesc(CYCLOTOMIC, order=4, at_q=f.at_q)
        if radicand == -3:
            return FieldDesc(CYCLOTOMIC, order=3, at_q=f.at_q)
    return FieldDesc(QUADRATIC, 1 if radicand > 0 else -1, abs(radicand), f.qpow, at_q=f.at_q)


SQRT_Q = quadratic(1, 1, 1)
SQRT_MINUS_Q = quadratic(-1, 1, 1)


def prime_power(q: int) -> tuple[int, int]:
    """(p, a) with q = p^a, or ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, a), = fac.items()
    return p, a


def is_square(q: int) -> bool:
    return prime_power(q)[1] % 2 == 0


def resolve(f: FieldDesc, q: int) -> FieldDesc:
    """Substitute a concrete prime power for q and reduce to a canonical field."""
    p, a = prime_power(q)
    f = canonicalize(f)
    if f.kind == QUADRATIC and f.qpow:
        # sqrt(eps c p^a): only the parity of a matters
        radicand = f.sign * f.coeff * (p if a % 2 else 1)
        f = canonicalize(FieldDesc(QUADRATIC, 1 if radicand > 0 else -1, abs(radicand), 0))
    return FieldDesc(f.kind, f.sign, f.coeff, f.qpow, f.order, at_q=q)


def field_equal(a: FieldDesc, b: FieldDesc) -> bool:
    if (a.is_formal and b.at_q is not None) or (b.is_formal and a.at_q is not None):
        raise ValueError(f"cannot compare formal {a} with a field resolved at a concrete q")
    if a.at_q is not None and b.at_q is not None and a.at_q != b.at_q:
        raise ValueError(f"fields resolved at different q ({a.at_q}, {b.at_q})")
    return canonicalize(a) == canonicalize(b)


def serialize_field(f: FieldDesc) -> str:
    f = canonicalize(f)
    if f.kind == RATIONAL:
        return "Q"
    if f.kind == CYCLOTOMIC:
        return "Q(i)" if f.order == 4 else "Q(zeta3)"
    sign = "-" if f.sign < 0 else ""
    if f.qpow:
        body = "q" if f.coeff == 1 else f"{f.coeff}q"
    else:
        body = str(f.coeff)
    return f"Q(sqrt({sign}{body}))"


_SQRT = re.compile(r"^Q\(sqrt\((-?)(\d*)(q?)\)\)$")


def parse_field(text: str) -> FieldDesc:
    s = text.strip()
    if s == "Q":
        return Q
    if s == "Q(i)":
        return Q_I
    if s in ("Q(zeta3)", "Q(theta)"):
        return Q_ZETA3
    m = _SQRT.match(s)
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"unrecognised field {text!r}")
    coeff = int(m.group(2)) if m.group(2) else 1
    if coeff < 1 or squarefree_kernel(coeff) != coeff:
        raise ValueError(f"coefficient in {text!r} must be a squarefree positive integer")
    return quadratic(-1 if m.group(1) else 1, coeff, 1 if m.group(3) else 0)


# -- Frobenius eigenvalues ---------------------------------------------------

_UNITS = {"1": (1, 0), "-1": (2, 1), "i": (4, 1), "-i": (4, 3),
          "zeta3": (3, 1), "zeta3^2": (3, 2)}
_UNIT_NAMES = {v: k for k, v in _UNITS.items()}


@dataclass(frozen=True)
class FrobeniusEigenvalue:
    """zeta_k^j * q^e, meaningful only up to integral powers of q^delta."""

    root_order: int
    root_index: int
    qexp: int = 0

    def __post_init__(self):
        k, j = self.root_order, self.root_index % self.root_order
        g = gcd(k, j) if j else k
        k, j = k // g, j // g
        if (k, j) not in _UNIT_NAMES:
            raise ValueError(f"unsupported root of unity zeta_{self.root_order}^{self.root_index}")
        if self.qexp < 0:
            raise ValueError("q exponent must be non-negative")
        object.__setattr__(self, "root_order", k)
        object.__setattr__(self, "root_index", j)

    @classmethod
    def of(cls, unit: str, qexp: int = 0) -> "FrobeniusEigenvalue":
        if unit not in _UNITS:
            raise ValueError(f"unsupported unit {unit!r}")
        k, j = _UNITS[unit]
        return cls(k, j, qexp)

    @classmethod
    def minus_q_power(cls, e: int) -> "FrobeniusEigenvalue":
        """(-q)^e."""
        return cls.of("-1" if e % 2 else "1", e)

    @classmethod
    def parse(cls, text: str) -> "FrobeniusEigenvalue":
        m = re.match(r"^(-?1|-?i|zeta3(?:\^2)?)\*q\^(\d+)$", text.strip())
        if not m:
            raise ValueError(f"malformed eigenvalue {text!r}; expected <unit>*q^<int>")
        return cls.of(m.group(1), int(m.group(2)))

    @property
    def unit(self) -> str:
        return _UNIT_NAMES[(self.root_order, self.root_index)]

    def equivalent(self, other: "FrobeniusEigenvalue", delta: int) -> bool:
        """Equality up to integral powers of q^delta."""
        return self.unit == other.unit and (self.qexp - other.qexp) % delta == 0

    def __str__(self):
        return f"{self.unit}*q^{self.qexp}"


def unit_field(w: FrobeniusEigenvalue) -> FieldDesc:
    """Q(omega); the q-part is rational."""
    return {1: Q, 2: Q, 3: Q_ZETA3, 4: Q_I}[w.root_order]


def delta_root_field(w: FrobeniusEigenvalue, delta: int) -> FieldDesc:
    """Field generated over Q by a delta-th root of w.

    Well defined although w is only known up to powers of q^delta: changing
    w by q^(delta*m) changes a root by q^m, which is rational.  Hence only
    qexp mod delta enters.  For delta = 2 both square roots generate the same
    field.  For delta = 3 a root is chosen in the smallest possible field (the
    real cube root of +-1), i.e. the field over which some extension exists.
    """
    if delta not in (1, 2, 3):
        raise ValueError(f"delta must be 1, 2 or 3, got {delta}")
    e = w.qexp % delta
    if delta == 1:
        return unit_field(w)
    if delta == 2:
        if e == 0:
            # sqrt(1) = 1, sqrt(-1) = i, sqrt(zeta3^j) = zeta3^(2j)
            if w.root_order in (1, 2, 3):
                return {1: Q, 2: Q_I, 3: Q_ZETA3}[w.root_order]
        else:
            if w.root_order == 1:
                return SQRT_Q
            if w.root_order == 2:
                return SQRT_MINUS_Q
        raise ValueError(f"square root of {w} generates a field outside the supported set")
    if e == 0 and w.root_order in (1, 2):
        return Q
    raise ValueError(f"cube root of {w} generates a field outside the supported set")
