"""Partition combinatorics: conjugates, beta-sets, border strips, 2-cores and 2-quotients.

Everything here is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, value: "Partition | Iterable[int]") -> "Partition":
        if isinstance(value, Partition):
            return value
        if isinstance(value, int):
            return cls((value,) if value else ())
        return cls(tuple(value))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[3,1,1]``; ``[]`` is the empty partition."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"partition must be bracketed: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls(())
        try:
            return cls(tuple(int(x) for x in body.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class BetaSet:
    beads: tuple[int, ...]  # strictly decreasing

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def to_partition(self) -> Partition:
        return partition_from_beads(self.beads)


@dataclass(frozen=True)
class StripRemoval:
    remainder: Partition
    height: int

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in increasing lexicographic order of part sequences."""
    return iter(_partitions_lex(n))


@lru_cache(maxsize=None)
def _partitions_lex(n: int) -> tuple[Partition, ...]:
    out = [Partition(p) for p in _parts_desc(n, n)]
    out.sort(key=lambda p: p.parts)
    return tuple(out)


def _parts_desc(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


def conjugate(lam) -> Partition:
    lam = Partition.of(lam)
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)))


def beta_set(lam, beads: int) -> BetaSet:
    lam = Partition.of(lam)
    if beads < len(lam):
        raise ValueError(f"need at least {len(lam)} beads, got {beads}")
    padded = lam.parts + (0,) * (beads - len(lam))
    return BetaSet(tuple(p + beads - 1 - i for i, p in enumerate(padded)))


def partition_from_beads(beads: Iterable[int]) -> Partition:
    b = sorted(beads, reverse=True)
    if len(set(b)) != len(b) or (b and b[-1] < 0):
        raise ValueError(f"beads must be distinct and non-negative: {b}")
    m = len(b)
    return Partition(tuple(x - (m - 1 - i) for i, x in enumerate(b) if x - (m - 1 - i) > 0))


def even_bead_count(lam) -> int:
    """Smallest even integer >= the number of parts; the canonical bead count."""
    n = len(Partition.of(lam))
    return n + (n % 2)


def remove_border_strips(lam, k: int) -> list[StripRemoval]:
    """Every way to remove a border strip of size k from lam.

    A strip removal is a bead moving from b to b - k onto an empty position;
    its height is the number of beads strictly between the two positions.
    Results are ordered by the moved bead, largest first.
    """
    if k < 1:
        raise ValueError("strip size must be positive")
    lam = Partition.of(lam)
    beads = beta_set(lam, len(lam)).beads
    occupied = set(beads)
    out = []
    for b in beads:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = (occupied - {b}) | {target}
        out.append(StripRemoval(partition_from_beads(moved), height))
    return out


def _runners(lam):
    lam = Partition.of(lam)
    beads = beta_set(lam, even_bead_count(lam)).beads
    return [sorted((b // 2 for b in beads if b % 2 == r), reverse=True) for r in (0, 1)]


def two_core(lam) -> Partition:
    """Slide every bead down its runner on the 2-abacus; what remains is the 2-core."""
    runners = _runners(lam)
    core_beads = [2 * i + r for r, run in enumerate(runners) for i in range(len(run))]
    return partition_from_beads(core_beads)


def two_quotient(lam) -> tuple[Partition, Partition]:
    """2-quotient read off the abacus with an even number of beads (runner 0 first)."""
    r0, r1 = _runners(lam)
    return partition_from_beads(r0), partition_from_beads(r1)


def is_staircase(lam) -> tuple[bool, int | None]:
    """Return (True, t) if lam == (t, t-1, ..., 1), else (False, None)."""
    lam = Partition.of(lam)
    t = len(lam)
    if lam.parts == tuple(range(t, 0, -1)):
        return True, t
    return False, None


def staircase(t: int) -> Partition:
    return Partition(tuple(range(t, 0, -1)))


def parity_exponent(lam) -> int:
    """sum C(lam_i, 2) - sum C(lam'_i, 2) + C(n, 2), reduced mod 2."""
    lam = Partition.of(lam)
    total = (sum(comb(p, 2) for p in lam)
             - sum(comb(p, 2) for p in conjugate(lam))
             + comb(lam.size, 2))
    return total % 2
