"""Brute-force helpers for permutations and signed permutations.

A signed permutation of rank n is a tuple ``w`` of length n with
``w[i] = +-(j + 1)`` meaning the basis vector ``e_i`` goes to ``+-e_j``.
Ordinary permutations are tuples of 0-based images.
"""

from __future__ import annotations

from itertools import permutations, product


def perm_compose(a, b):
    """(a o b)(i) = a[b[i]]."""
    return tuple(a[i] for i in b)


def perm_inverse(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def cycle_type(a) -> tuple[int, ...]:
    seen = [False] * len(a)
    lengths = []
    for i in range(len(a)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def perm_from_cycle_type(mu) -> tuple[int, ...]:
    """A fixed representative: consecutive blocks, each a forward cycle."""
    out, start = [], 0
    for k in mu:
        out.extend(start + (i + 1) % k for i in range(k))
        start += k
    return tuple(out)


def all_perms(n):
    return permutations(range(n))


def sperm_compose(a, b):
    """(a o b): apply b first, then a."""
    out = []
    for x in b:
        y = a[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def sperm_inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[abs(x) - 1] = (i + 1) if x > 0 else -(i + 1)
    return tuple(inv)


def sperm_identity(n):
    return tuple(range(1, n + 1))


def signed_cycle_type(a) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(positive cycle lengths, negative cycle lengths), each sorted descending."""
    n = len(a)
    seen = [False] * n
    pos, neg = [], []
    for i in range(n):
        if seen[i]:
            continue
        k, j, sign = 0, i, 1
        while not seen[j]:
            seen[j] = True
            x = a[j]
            if x < 0:
                sign = -sign
            j = abs(x) - 1
            k += 1
        (pos if sign > 0 else neg).append(k)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def all_signed_perms(n):
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, p))


def underlying_perm(a):
    return tuple(abs(x) - 1 for x in a)


def generate(gens, identity, compose):
    """Closure of a set of generators under composition."""
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return elems


def simple_reflections_A(n):
    """s_1..s_{n-1} of S_n as 0-based permutations; s_i swaps i-1 and i."""
    out = {}
    for i in range(1, n):
        p = list(range(n))
        p[i - 1], p[i] = p[i], p[i - 1]
        out[i] = tuple(p)
    return out


def simple_reflections_B(n):
    """s_0 negates the first coordinate; s_i (1 <= i < n) swaps coordinates i and i+1."""
    out = {}
    p = list(range(1, n + 1))
    p[0] = -1
    out[0] = tuple(p)
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        out[i] = tuple(p)
    return out
