"""Verification suites behind ``unipext verify``.

Each suite returns a :class:`SuiteReport`; a suite passes when no check fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .classify import extension_field, fs_consistency, thm1_twisted_A_field, thm33_field
from .fields import FrobeniusEigenvalue, delta_root_field, serialize_field
from .groups import cuspidal_records, parse_group
from .oracle import oracle_char_table, oracle_hyperoct_table
from .partitions import (Partition, conjugate, is_staircase, partitions, remove_border_strips,
                         staircase, two_core, two_quotient)
from .weyl import (bipartitions, chi_hyperoct, chi_sym, class_size_hyperoct, class_size_sym,
                   parabolic_multiplicity, staircase_class)
from .dlverify import sigma_fixed_in_class, verify_frob_hypotheses


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    lines: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str, verbose: bool = False):
        if ok:
            self.passed += 1
            if verbose:
                self.lines.append(f"ok   {what}")
        else:
            self.failed += 1
            self.lines.append(f"FAIL {what}")

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _orthogonal(rows, sizes):
    order = sum(sizes)
    k = len(rows)
    for i in range(k):
        for j in range(k):
            ip = Fraction(sum(s * a * b for s, a, b in zip(sizes, rows[i], rows[j])), order)
            if ip != (1 if i == j else 0):
                return False
    for a in range(len(sizes)):
        for b in range(len(sizes)):
            col = sum(rows[i][a] * rows[i][b] for i in range(k))
            expect = order // sizes[a] if a == b else 0
            if col != expect:
                return False
    return True


def suite_mn_oracle(max_n=7):
    rep = SuiteReport("mn-oracle")
    for n in range(1, max_n + 1):
        table = oracle_char_table(n)
        cells = [(lam, mu) for lam in table.labels for mu in table.classes]
        bad = sum(1 for lam, mu in cells if chi_sym(lam, mu) != table.value(lam, mu))
        rep.check(bad == 0, f"S_{n}: {len(cells)} cells, {bad} mismatches", True)
        rows = [[chi_sym(l, m) for m in table.classes] for l in table.labels]
        sizes = [class_size_sym(m) for m in table.classes]
        rep.check(_orthogonal(rows, sizes), f"S_{n}: orthogonality", True)
    return rep


def suite_hyperoct(max_n=4):
    rep = SuiteReport("hyperoct")
    for n in range(1, max_n + 1):
        table = oracle_hyperoct_table(n)
        cells = [(l, c) for l in table.labels for c in table.classes]
        bad = sum(1 for l, c in cells if chi_hyperoct(l, c) != table.value(l, c))
        rep.check(bad == 0, f"W(B_{n}): {len(cells)} cells, {bad} mismatches", True)
        rows = [[chi_hyperoct(l, c) for c in table.classes] for l in table.labels]
        sizes = [class_size_hyperoct(c) for c in table.classes]
        rep.check(list(sizes) == list(table.class_sizes), f"W(B_{n}): class sizes", True)
        rep.check(_orthogonal(rows, sizes), f"W(B_{n}): orthogonality", True)
    return rep


def exhaustive_two_cores(lam) -> set[Partition]:
    """Every terminal partition reachable by removing dominoes in any order."""
    seen, terminal = set(), set()
    stack = [Partition.of(lam)]
    while stack:
        p = stack.pop()
        if p in seen:
            continue
        seen.add(p)
        nxt = _dominoes(p)
        if not nxt:
            terminal.add(p)
        stack.extend(nxt)
    return terminal


def _dominoes(p):
    """Size-2 border strips found directly on the Young diagram (no beta-sets)."""
    parts = list(p.parts)
    out = []
    for i, row in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        # horizontal domino at the end of row i
        if row - 2 >= below:
            out.append(Partition(tuple(x for x in parts[:i] + [row - 2] + parts[i + 1:] if x)))
        # vertical domino in column row, rows i and i+1
        if i + 1 < len(parts) and parts[i + 1] == row:
            under = parts[i + 2] if i + 2 < len(parts) else 0
            if row - 1 >= under:
                new = parts[:i] + [row - 1, row - 1] + parts[i + 2:]
                out.append(Partition(tuple(x for x in new if x)))
    return out


def suite_cores(max_n=12, exhaustive_n=10):
    rep = SuiteReport("cores")
    for n in range(0, max_n + 1):
        bad = 0
        for lam in partitions(n):
            core = two_core(lam)
            q0, q1 = two_quotient(lam)
            ok = (core.size + 2 * (q0.size + q1.size) == n
                  and not remove_border_strips(core, 2)
                  and conjugate(conjugate(lam)) == lam
                  and (is_staircase(lam)[0] == (core == lam)))
            if n <= exhaustive_n:
                ok = ok and exhaustive_two_cores(lam) == {core}
            bad += not ok
        rep.check(bad == 0, f"n={n}: {bad} failures", True)
    return rep


def suite_parity(max_n=10000):
    rep = SuiteReport("parity")
    bad = [n for n in range(max_n + 1) if (n // 2) % 2 != comb(n, 2) % 2]
    rep.check(not bad, f"floor(n/2) = C(n,2) mod 2 for 0 <= n <= {max_n}", True)
    bad = [m for m in range(max_n + 1) if (m % 4 in (2, 3)) != (comb(m, 2) % 2 == 1)]
    rep.check(not bad, f"m = 2,3 mod 4 <=> C(m,2) odd for 0 <= m <= {max_n}", True)
    return rep


def suite_staircase(max_t=6):
    rep = SuiteReport("staircase")
    for t in range(2, max_t + 1):
        mu = staircase_class(t)
        v = chi_sym(staircase(t), mu)
        rep.check(v in (1, -1), f"t={t} chi_{staircase(t)}({mu}) = {v}", True)
    return rep


def suite_theorem_agreement(max_t=12):
    rep = SuiteReport("theorem-agreement")
    irrational = []
    for t in range(1, max_t + 1):
        n = t * (t + 1) // 2
        a, b = thm1_twisted_A_field(n), thm33_field(two_core(staircase(t)).size)
        rep.check(a == b, f"t={t} n={n}: {serialize_field(a)} / {serialize_field(b)}", True)
        if not a.is_rational:
            irrational.append(n)
            rep.check(n % 4 in (2, 3), f"n={n} irrational with n = 2,3 mod 4")
    rep.lines.append(f"irrational n: {irrational}")
    return rep


CUSPIDAL_GROUPS = [("2A", n) for n in (3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78)] + [
    ("D", 4), ("D", 16), ("2D", 9), ("2D", 25), ("3D4", None), ("E6", None), ("2E6", None)]


def standard_cuspidals(q=5):
    """(group, record) for every built-in cuspidal record with a standard graph automorphism."""
    out = []
    for series, n in CUSPIDAL_GROUPS:
        g = parse_group(series, n, q)
        out.extend((g, r) for r in cuspidal_records(g))
    g = parse_group("D", 4, q, sigma_order=3)
    out.extend((g, r) for r in cuspidal_records(g))
    return out


def omega_candidates(rec):
    """The stored eigenvalue, or both signs when only rationality of omega is known."""
    if rec.omega is not None:
        return [rec.omega]
    if rec.rho_field.is_rational:
        return [FrobeniusEigenvalue.of("1"), FrobeniusEigenvalue.of("-1")]
    return []


def suite_delta_root(q=5):
    rep = SuiteReport("delta-root")
    for g, rec in standard_cuspidals(q):
        res = extension_field(g, rec.label)
        cands = omega_candidates(rec)
        ok = bool(cands) and all(delta_root_field(w, g.delta) == res.field for w in cands)
        rep.check(ok, f"{g.series} n={g.n} {rec.label}: {serialize_field(res.field)}", True)
    return rep


def suite_fs(q=5):
    rep = SuiteReport("fs")
    for g, rec in standard_cuspidals(q):
        if rec.fs is None or not rec.rho_field.is_real:
            continue
        rep.check(fs_consistency(g, rec), f"{g.series} n={g.n} {rec.label} fs={rec.fs:+d}", True)
    return rep


def suite_frob_hypotheses():
    rep = SuiteReport("frob-hypotheses")
    for t in (2, 3):
        lam, mu = staircase(t), staircase_class(t)
        g = parse_group("2A", lam.size, 5)
        report = verify_frob_hypotheses(g, lam, mu)
        rep.check(report.hypotheses_satisfied, f"n={g.n} {lam} w~{mu}: {report.to_line()}", True)
        rep.check(not sigma_fixed_in_class(mu), f"no sigma-fixed element of type {mu}", True)
    return rep


def suite_parabolic(max_n=4):
    rep = SuiteReport("parabolic")
    for n in range(1, max_n + 1):
        subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
        full = frozenset(range(n))
        for phi in bipartitions(n):
            trivial = phi.first.parts == (n,) and not phi.second.parts
            hits = [s for s in subsets if parabolic_multiplicity("B", n, s, phi) == 1]
            proper = [s for s in hits if s != full]
            ok = bool(hits) and (trivial or bool(proper))
            rep.check(ok, f"B_{n} {phi}: multiplicity-one parabolics {len(hits)}")
    return rep


SUITES = {
    "mn-oracle": lambda a: suite_mn_oracle(a.max_n or 7),
    "hyperoct": lambda a: suite_hyperoct(a.max_n or 4),
    "cores": lambda a: suite_cores(a.max_n or 12),
    "parity": lambda a: suite_parity(a.max_n or 10000),
    "staircase": lambda a: suite_staircase(a.max_t or 6),
    "theorem-agreement": lambda a: suite_theorem_agreement(a.max_t or 12),
    "delta-root": lambda a: suite_delta_root(),
    "fs": lambda a: suite_fs(),
    "frob-hypotheses": lambda a: suite_frob_hypotheses(),
    "parabolic": lambda a: suite_parabolic(a.max_n or 4),
}
