"""Independent ground truth by exhaustive enumeration.

Nothing in here uses the Murnaghan-Nakayama rule.  The symmetric group table
is obtained by peeling irreducibles off Young permutation characters, the
hyperoctahedral table by inducing from ``W(B_k) x W(B_{n-k})`` with an
explicit sum over all signed permutations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import CapabilityError
from .partitions import Partition, partitions
from .weyl import BiPartition, bipartitions
from . import perm as P

MAX_TABLE_N = 7
MAX_COMMUTE_N = 8
MAX_HYPEROCT_N = 4


@dataclass(frozen=True)
class PermCharTable:
    compositions: tuple[tuple[int, ...], ...]
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CharTable:
    labels: tuple
    classes: tuple
    class_sizes: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    def value(self, label, cls) -> int:
        return self.rows[self.labels.index(label)][self.classes.index(cls)]

    def inner(self, f, g) -> Fraction:
        return Fraction(sum(s * a * b for s, a, b in zip(self.class_sizes, f, g)), self.order)


def _check_n(n, limit):
    if n > limit:
        raise CapabilityError(f"brute-force enumeration limited to n <= {limit}, got {n}")


def _labelings(counts):
    """Sequences with ``counts[i]`` copies of symbol i, one per coset of the Young subgroup."""
    n = sum(counts)
    out = []
    seq = [0] * n
    left = list(counts)

    def rec(pos):
        if pos == n:
            out.append(tuple(seq))
            return
        for b, c in enumerate(left):
            if c:
                left[b] -= 1
                seq[pos] = b
                rec(pos + 1)
                left[b] += 1

    rec(0)
    return out


def young_perm_char(c, mu) -> int:
    """Number of cosets of the Young subgroup S_c fixed by an element of cycle type mu."""
    c = tuple(int(x) for x in c)
    mu = Partition.of(mu)
    n = sum(c)
    if mu.size != n:
        raise ValueError(f"size mismatch: composition {c} vs class {mu}")
    _check_n(n, MAX_TABLE_N)
    return _young_perm_char(c, mu.parts)


@lru_cache(maxsize=None)
def _young_perm_char(c, mu):
    g = P.perm_from_cycle_type(mu)
    # g fixes the ordered set partition f iff f is constant on the cycles of g
    return sum(1 for f in _labelings(c) if all(f[g[i]] == f[i] for i in range(len(g))))


@lru_cache(maxsize=None)
def _class_sizes(n):
    counts = Counter(P.cycle_type(p) for p in P.all_perms(n))
    return counts


def perm_char_table(n: int) -> PermCharTable:
    _check_n(n, MAX_TABLE_N)
    comps = tuple(lam.parts for lam in partitions(n))
    classes = tuple(partitions(n))
    counts = _class_sizes(n)
    sizes = tuple(counts[mu.parts] for mu in classes)
    rows = tuple(tuple(young_perm_char(c, mu) for mu in classes) for c in comps)
    return PermCharTable(comps, classes, sizes, rows)


@lru_cache(maxsize=None)
def oracle_char_table(n: int) -> CharTable:
    """Irreducible characters of S_n by Gram-Schmidt on Young permutation characters.

    Partitions are processed in decreasing lexicographic order, a linear
    extension of dominance, so every irreducible in a permutation character
    other than its own label has been found already.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pt = perm_char_table(n)
    order = factorial(n)
    if sum(pt.class_sizes) != order:
        raise AssertionError("class sizes do not sum to n!")

    def inner(f, g):
        return Fraction(sum(s * a * b for s, a, b in zip(pt.class_sizes, f, g)), order)

    found = {}
    for comp in sorted(pt.compositions, reverse=True):
        row = [Fraction(v) for v in pt.rows[pt.compositions.index(comp)]]
        for chi in found.values():
            m = inner(row, chi)
            row = [a - m * b for a, b in zip(row, chi)]
        if inner(row, row) != 1 or row[pt.classes.index(Partition((1,) * n))] <= 0:
            raise AssertionError(f"orthogonalization failed at {comp}")
        if any(v.denominator != 1 for v in row):
            raise AssertionError(f"non-integral character at {comp}")
        found[comp] = [int(v) for v in row]
    labels = tuple(pt.classes)  # partitions of n, increasing lex
    rows = tuple(tuple(found[lam.parts]) for lam in labels)
    return CharTable(labels, pt.classes, pt.class_sizes, rows)


def commuting_types_exist(mu, nu) -> bool:
    """Whether some element of cycle type mu commutes with some element of type nu."""
    mu, nu = Partition.of(mu), Partition.of(nu)
    if mu.size != nu.size:
        raise ValueError(f"size mismatch: {mu} vs {nu}")
    _check_n(mu.size, MAX_COMMUTE_N)
    return _commuting(mu.parts, nu.parts)


@lru_cache(maxsize=None)
def _commuting(mu, nu):
    # all type-mu elements are conjugate, so one representative suffices
    g = P.perm_from_cycle_type(mu)
    for h in P.all_perms(len(g)):
        if P.perm_compose(g, h) == P.perm_compose(h, g) and P.cycle_type(h) == nu:
            return True
    return False


def sperm_from_signed_type(cls: BiPartition):
    """Representative signed permutation with the given (positive; negative) cycle type."""
    out, start = [], 0
    for parts, negative in ((cls.first, False), (cls.second, True)):
        for k in parts:
            block = [start + (i + 1) % k + 1 for i in range(k)]
            if negative:
                block[-1] = -block[-1]
            out.extend(block)
            start += k
    return tuple(out)


@lru_cache(maxsize=None)
def oracle_hyperoct_table(n: int) -> CharTable:
    """Irreducible characters of W(B_n), by brute-force induction.

    The character labelled (alpha; beta) is induced from the stabiliser of
    the coordinate blocks {1..k}, {k+1..n} (k = |alpha|) of
    chi_alpha x (chi_beta * eps'), with chi_alpha, chi_beta taken from
    :func:`oracle_char_table` and eps' = -1 on each sign change.
    """
    _check_n(n, MAX_HYPEROCT_N)
    group = list(P.all_signed_perms(n))
    classes = tuple(bipartitions(n))
    sizes = Counter(P.signed_cycle_type(w) for w in group)
    class_sizes = tuple(sizes[(c.first.parts, c.second.parts)] for c in classes)
    labels = classes
    sym = {m: oracle_char_table(m) for m in range(1, n + 1)}

    def sym_value(lam, perm_images):
        if not perm_images:
            return 1
        return sym[len(perm_images)].value(lam, Partition(P.cycle_type(perm_images)))

    def phi(label, h):
        k = label.first.size
        if any((abs(x) <= k) != (i < k) for i, x in enumerate(h)):
            return None  # h is outside the block stabiliser
        top = tuple(abs(x) - 1 for x in h[:k])
        bottom = tuple(abs(x) - 1 - k for x in h[k:])
        twist = -1 if sum(1 for x in h[k:] if x < 0) % 2 else 1
        return sym_value(label.first, top) * sym_value(label.second, bottom) * twist

    rows = {lab: [] for lab in labels}
    for cls in classes:
        g = sperm_from_signed_type(cls)
        conjugates = [P.sperm_compose(P.sperm_compose(x, g), P.sperm_inverse(x)) for x in group]
        for lab in labels:
            k = lab.first.size
            h_order = 2 ** n * factorial(k) * factorial(n - k)
            total = 0
            for c in conjugates:
                v = phi(lab, c)
                if v is not None:
                    total += v
            val = Fraction(total, h_order)
            if val.denominator != 1:
                raise AssertionError(f"non-integral induced value for {lab} at {cls}")
            rows[lab].append(int(val))
    return CharTable(labels, classes, class_sizes, tuple(tuple(rows[l]) for l in labels))
