"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools
import math


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def count_ssyt(shape, max_entry: int) -> int:
    """Semistandard tableaux of ``shape`` with entries in 1..max_entry, by backtracking."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            total += rec(k + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)


def brute_lr(lam, mu, nu) -> int:
    """Count LR tableaux of shape nu/lam and content mu.

    Fills the skew cells with every semistandard filling of the right
    content, then keeps those whose reverse reading word is a lattice word.
    """
    lam = tuple(lam) + (0,) * (len(nu) - len(lam))
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    cells = [(i, j) for i in range(len(nu)) for j in range(lam[i], nu[i])]
    content = list(mu)
    letters = len(mu)
    filling: dict[tuple[int, int], int] = {}

    def lattice() -> bool:
        seen = [0] * (letters + 1)
        for i in range(len(nu)):
            for j in range(nu[i] - 1, lam[i] - 1, -1):
                v = filling[(i, j)]
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    return False
        return True

    def rec(k: int) -> int:
        if k == len(cells):
            return 1 if lattice() else 0
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, letters + 1):
            if content[v - 1]:
                content[v - 1] -= 1
                filling[(i, j)] = v
                total += rec(k + 1)
                del filling[(i, j)]
                content[v - 1] += 1
        return total

    return rec(0)


def cells_transpose(rows, l):
    """Transpose via explicit box sets: cut at column l, transpose both halves, stack rows."""
    left = {(i, j) for i, y in enumerate(rows) for j in range(min(y, l))}
    right = {(i, j - l) for i, y in enumerate(rows) for j in range(l, y)}
    out = []
    for j in range(l):
        out.append(sum(1 for (i, c) in left if c == j) + sum(1 for (i, c) in right if c == j))
    return tuple(out)


def cells_dagger(rows, l):
    """Rotated complement via box sets; the full l-rectangle collapses to empty."""
    r = len(rows)
    width = l if rows[0] <= l else 2 * l
    boxes = {(i, j) for i, y in enumerate(rows) for j in range(y)}
    comp = {(r - 1 - i, width - 1 - j)
            for i in range(r) for j in range(width) if (i, j) not in boxes}
    out = tuple(sum(1 for (i, _) in comp if i == k) for k in range(r))
    if out[-1] == l:
        out = tuple(y - l for y in out)
    return out


def su2_verlinde(k: int, genus: int, spins) -> float:
    """SU(2) level k Verlinde formula with sines; spins are Dynkin labels 0..k."""
    total = 0.0
    for j in range(k + 1):
        s0 = math.sqrt(2 / (k + 2)) * math.sin(math.pi * (j + 1) / (k + 2))
        term = s0 ** (2 - 2 * genus)
        for a in spins:
            term *= math.sin(math.pi * (a + 1) * (j + 1) / (k + 2)) / math.sin(
                math.pi * (j + 1) / (k + 2))
        total += term
    return total


def all_weights(r: int, l: int):
    return [labels for labels in itertools.product(range(l + 1), repeat=r - 1) if sum(labels) <= l]
