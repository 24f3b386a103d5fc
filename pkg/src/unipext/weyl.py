"""Characters of the Weyl groups of types A and B by the Murnaghan-Nakayama rule.

Labeling convention for W(B_n)
------------------------------
An irreducible character of W(B_n) is labelled by a bipartition ``(alpha; beta)``
with ``|alpha| + |beta| = n``.  It is induced from ``W(B_k) x W(B_{n-k})``
(``k = |alpha|``) of ``chi_alpha`` on the first factor and ``chi_beta * eps'``
on the second, where both symmetric group characters are inflated along
``W(B_m) -> S_m`` and ``eps'`` is the linear character sending every sign
change to -1.  So ``((n); ())`` is trivial, ``((); (n))`` is ``eps'`` and
``((); (1^n))`` is the sign character of the Coxeter group.

Classes are signed cycle types ``(positive cycles; negative cycles)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from collections import Counter

from .errors import CapabilityError
from .partitions import Partition, partitions, remove_border_strips
from . import perm as P


@dataclass(frozen=True)
class BiPartition:
    first: Partition
    second: Partition

    def __post_init__(self):
        object.__setattr__(self, "first", Partition.of(self.first))
        object.__setattr__(self, "second", Partition.of(self.second))

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @classmethod
    def parse(cls, text: str) -> "BiPartition":
        """Parse ``([2],[1])``."""
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"bipartition must look like ([..],[..]): {text!r}")
        body = s[1:-1]
        cut = body.find("]")
        if cut < 0 or "," not in body[cut:]:
            raise ValueError(f"bipartition must look like ([..],[..]): {text!r}")
        left, right = body[: cut + 1], body[cut + 1:].lstrip()[1:]
        return cls(Partition.parse(left), Partition.parse(right))

    def __str__(self):
        return f"({self.first},{self.second})"


# A signed cycle type has the same shape as a bipartition: (positive; negative).
SignedCycleType = BiPartition


def bipartitions(n: int) -> list[BiPartition]:
    out = []
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                out.append(BiPartition(a, b))
    return out


def cycle_sign(mu) -> int:
    mu = Partition.of(mu)
    return -1 if (mu.size - len(mu)) % 2 else 1


def class_size_sym(mu) -> int:
    mu = Partition.of(mu)
    z = prod(k ** m * factorial(m) for k, m in Counter(mu.parts).items())
    return factorial(mu.size) // z


def class_size_hyperoct(cls: BiPartition) -> int:
    n = cls.size
    z = 1
    for parts in (cls.first, cls.second):
        for k, m in Counter(parts.parts).items():
            z *= (2 * k) ** m * factorial(m)
    return 2 ** n * factorial(n) // z


def chi_sym(lam, mu) -> int:
    """chi_lam evaluated at an element of cycle type mu."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _chi_sym(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _chi_sym(lam, mu):
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    return sum(r.sign * _chi_sym(r.remainder.parts, rest)
               for r in remove_border_strips(lam, k))


def chi_hyperoct(label: BiPartition, cls: BiPartition) -> int:
    if label.size != cls.size:
        raise ValueError(f"size mismatch: {label} vs class {cls}")
    return _chi_b(label.first.parts, label.second.parts, cls.first.parts, cls.second.parts)


@lru_cache(maxsize=None)
def _chi_b(a, b, pos, neg):
    if not pos and not neg:
        return 1
    # strip the largest cycle; positive wins ties
    if pos and (not neg or pos[0] >= neg[0]):
        k, sign, pos, neg = pos[0], 1, pos[1:], neg
    else:
        k, sign, pos, neg = neg[0], -1, pos, neg[1:]
    total = 0
    for r in remove_border_strips(a, k):
        total += r.sign * _chi_b(r.remainder.parts, b, pos, neg)
    for r in remove_border_strips(b, k):
        total += sign * r.sign * _chi_b(a, r.remainder.parts, pos, neg)
    return total


def sym_table(n: int) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    """(row labels, class labels, values) for S_n; both indexed by partitions of n."""
    parts = list(partitions(n))
    return parts, parts, [[chi_sym(l, m) for m in parts] for l in parts]


def hyperoct_table(n: int) -> tuple[list[BiPartition], list[BiPartition], list[list[int]]]:
    labels = bipartitions(n)
    return labels, labels, [[chi_hyperoct(l, c) for c in labels] for l in labels]


def staircase_class(t: int) -> Partition:
    """Cycle type (2t-1, 2t-5, ...) for the staircase (t, ..., 1); sums to t(t+1)/2."""
    parts = list(range(2 * t - 1, 0, -4))
    mu = Partition(tuple(parts))
    if mu.size != t * (t + 1) // 2:
        raise AssertionError(f"staircase class {mu} does not have size {t * (t + 1) // 2}")
    return mu


PARABOLIC_LIMITS = {"A": 7, "B": 4}


def parabolic_multiplicity(group_type: str, n: int, parabolic, phi) -> int:
    """<Ind_P^W 1, phi> for the standard parabolic P generated by ``parabolic``.

    ``group_type`` is "A" (W = S_n, simple reflections 1..n-1) or "B"
    (W = W(B_n), simple reflections 0..n-1, 0 being the sign change).
    Computed as (1/|P|) sum_{p in P} phi(p) by Frobenius reciprocity,
    summing over the explicitly generated subgroup.
    """
    if group_type not in PARABOLIC_LIMITS:
        raise ValueError(f"unknown group type {group_type!r}")
    if n > PARABOLIC_LIMITS[group_type]:
        raise CapabilityError(f"parabolic multiplicities limited to n <= "
                              f"{PARABOLIC_LIMITS[group_type]} for type {group_type}")
    parabolic = frozenset(parabolic)
    if group_type == "A":
        gens = P.simple_reflections_A(n)
        if not parabolic <= gens.keys():
            raise ValueError(f"not a set of simple reflections of S_{n}: {sorted(parabolic)}")
        lam = Partition.of(phi)
        elems = P.generate([gens[i] for i in parabolic], tuple(range(n)), P.perm_compose)
        total = sum(chi_sym(lam, P.cycle_type(p)) for p in elems)
    else:
        gens = P.simple_reflections_B(n)
        if not parabolic <= gens.keys():
            raise ValueError(f"not a set of simple reflections of B_{n}: {sorted(parabolic)}")
        elems = P.generate([gens[i] for i in parabolic], P.sperm_identity(n), P.sperm_compose)
        total = 0
        for p in elems:
            pos, neg = P.signed_cycle_type(p)
            total += chi_hyperoct(phi, BiPartition(pos, neg))
    m = Fraction(total, len(elems))
    if m.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {m}")
    return int(m)


def _d4_generators():
    # s2 is the branch node; s1, s3, s4 are the three legs permuted by triality
    return {1: (2, 1, 3, 4), 2: (1, 3, 2, 4), 3: (1, 2, 4, 3), 4: (1, 2, -4, -3)}


@lru_cache(maxsize=None)
def d4_triality_fixed() -> frozenset[frozenset[Partition]]:
    """Unordered non-degenerate bipartitions of 4 whose W(D4) character is triality-fixed.

    Triality is realised on W(D4) by permuting the generators s1 -> s3 -> s4
    and evaluated on every element through a reduced word found by BFS.
    Degenerate labels are excluded; Brauer's permutation lemma (fixed
    characters = fixed classes) is used to confirm none of their four
    constituents is fixed.
    """
    gens = _d4_generators()
    tau = {1: 3, 3: 4, 4: 1, 2: 2}
    ident = P.sperm_identity(4)
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in gens.items():
                h = P.sperm_compose(g, s)
                if h not in words:
                    words[h] = words[g] + (i,)
                    nxt.append(h)
        frontier = nxt
    image = {}
    for g, w in words.items():
        h = ident
        for i in w:
            h = P.sperm_compose(h, gens[tau[i]])
        image[g] = h

    def cls(g):
        pos, neg = P.signed_cycle_type(g)
        return BiPartition(pos, neg)

    fixed, degenerate = set(), 0
    for lab in bipartitions(4):
        if lab.first == lab.second:
            degenerate += 1
            continue
        if all(chi_hyperoct(lab, cls(g)) == chi_hyperoct(lab, cls(image[g])) for g in words):
            fixed.add(frozenset((lab.first, lab.second)))

    seen, fixed_classes = set(), 0
    for g in words:
        if g in seen:
            continue
        ccl = {P.sperm_compose(P.sperm_compose(x, g), P.sperm_inverse(x)) for x in words}
        seen |= ccl
        fixed_classes += {image[h] for h in ccl} == ccl
    if fixed_classes != len(fixed):
        raise AssertionError("a degenerate W(D4) character is triality-fixed; not modelled")
    return frozenset(fixed)
