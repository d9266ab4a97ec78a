"""Finite-dimensional representation theory of sl(r).

Partitions are plain tuples of non-negative ints, weakly decreasing.  A
weight of sl(r) corresponds to the partition with r parts and last part 0;
going back, columns of full height r are dropped (the determinant twist
that separates gl(r) from sl(r)).

Littlewood-Richardson coefficients are computed by building LR tableaux one
letter at a time (each letter a horizontal strip obeying the lattice
condition).  ``lr_coefficient_pieri`` is a slower, independent route via
Jacobi-Trudi and the Pieri rule.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .weights import Weight, check_rank

Partition = tuple[int, ...]

CACHE_SIZE = int(os.environ.get("RANKLEVEL_CACHE_SIZE", "65536"))


def normalize_partition(parts) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def weight_to_partition(w: Weight) -> Partition:
    """Partition with ``w.rank`` parts whose last part is zero."""
    parts = [0] * w.rank
    for i in range(w.rank - 2, -1, -1):
        parts[i] = parts[i + 1] + w.labels[i]
    return tuple(parts)


def partition_to_weight(p, rank: int) -> Weight:
    """Weight of sl(rank) for a partition of length <= rank."""
    p = tuple(p)
    if len(p) > rank:
        if any(p[rank:]):
            raise ValueError(f"partition {p} has more than {rank} rows")
        p = p[:rank]
    p = p + (0,) * (rank - len(p))
    return Weight(rank, tuple(p[i] - p[i + 1] for i in range(rank - 1)))


def conjugate(p: Partition) -> Partition:
    p = normalize_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def weyl_dim(w: Weight) -> int:
    """dim V_w by the Weyl product formula, exact."""
    lam = weight_to_partition(w)
    r = w.rank
    num = den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def casimir_norm(w: Weight) -> Fraction:
    """(w, w + 2 rho) with the highest root normalised to length squared 2."""
    lam = weight_to_partition(w)
    r = w.rank
    total = sum(lam)
    return (
        Fraction(sum(x * x for x in lam))
        - Fraction(total * total, r)
        + sum((r - 1 - 2 * i) * x for i, x in enumerate(lam))
    )


def exterior_power_dim(k: int, m: int) -> int:
    """Dimension of the k-th exterior power of an m-dimensional space."""
    if not 0 <= k <= m:
        raise ValueError(f"exterior power degree {k} out of range [0, {m}]")
    return math.comb(m, k)


# --- Littlewood-Richardson: letter-by-letter tableau construction ----------


def _add_letter(shape: Partition, prev: tuple[int, ...] | None, count: int,
                max_rows: int | None, bound: Partition | None):
    """Ways to add ``count`` copies of the next letter as an LR-legal strip.

    ``prev[j]`` is how many copies of the previous letter sit in row j
    (None for the first letter, which has no lattice constraint).
    Yields ``(new_shape, per_row_counts)``.
    """
    rows = len(shape) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    if bound is not None:
        rows = min(rows, len(bound))
    old = shape + (0,) * (rows - len(shape))
    prev_cum = [0] * (rows + 1)
    if prev is not None:
        for j in range(rows):
            prev_cum[j + 1] = prev_cum[j] + (prev[j] if j < len(prev) else 0)

    placed = [0] * rows

    def rec(j: int, left: int, cum: int):
        if left == 0:
            new = tuple(o + k for o, k in zip(old, placed))
            yield tuple(x for x in new if x), tuple(placed)
            return
        if j == rows:
            return
        cap = left
        if j > 0:
            cap = min(cap, old[j - 1] - old[j])
        if prev is not None:
            cap = min(cap, prev_cum[j] - cum)
        if bound is not None:
            cap = min(cap, bound[j] - old[j])
        for k in range(cap, -1, -1):
            placed[j] = k
            yield from rec(j + 1, left - k, cum + k)
        placed[j] = 0

    yield from rec(0, count, 0)


def _lr_states(lam: Partition, mu: Partition, max_rows: int | None,
               bound: Partition | None) -> dict[Partition, int]:
    states: dict[tuple[Partition, tuple[int, ...] | None], int] = {(lam, None): 1}
    for count in mu:
        nxt: dict[tuple[Partition, tuple[int, ...] | None], int] = defaultdict(int)
        for (shape, prev), mult in states.items():
            for new_shape, placed in _add_letter(shape, prev, count, max_rows, bound):
                nxt[(new_shape, placed)] += mult
        states = nxt
    out: dict[Partition, int] = defaultdict(int)
    for (shape, _), mult in states.items():
        out[shape] += mult
    return dict(out)


@lru_cache(maxsize=CACHE_SIZE)
def _lr_product_cached(lam: Partition, mu: Partition, max_rows: int | None):
    if max_rows is not None and (len(lam) > max_rows or len(mu) > max_rows):
        return ()
    return tuple(sorted(_lr_states(lam, mu, max_rows, None).items()))


def lr_product(lam, mu, max_rows: int | None = None) -> dict[Partition, int]:
    """Schur expansion of s_lam * s_mu, optionally keeping only <= max_rows rows."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    return dict(_lr_product_cached(lam, mu, max_rows))


@lru_cache(maxsize=CACHE_SIZE)
def _lr_coefficient_cached(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    return _lr_states(lam, mu, None, nu).get(nu, 0)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    return _lr_coefficient_cached(
        normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    )


# --- Slow path: Jacobi-Trudi determinant and Pieri strips -------------------


def _strips(shape: Partition, k: int, vertical: bool) -> list[Partition]:
    """All shapes obtained by adding a horizontal (or vertical) k-strip."""
    if vertical:
        return [conjugate(s) for s in _strips(conjugate(shape), k, False)]
    rows = len(shape) + 1
    old = shape + (0,)
    out = []

    def rec(j: int, left: int, acc: list[int]):
        if j == rows:
            if left == 0:
                out.append(normalize_partition(acc))
            return
        cap = left if j == 0 else min(left, old[j - 1] - old[j])
        for a in range(cap + 1):
            rec(j + 1, left - a, acc + [old[j] + a])

    rec(0, k, [])
    return out


def lr_coefficient_pieri(lam, mu, nu) -> int:
    """c^nu_{lam, mu} from s_mu = det(h_{mu_i - i + j}) and repeated Pieri steps.

    Uses the e-version of Jacobi-Trudi when mu has more rows than columns.
    """
    lam, mu, nu = map(normalize_partition, (lam, mu, nu))
    vertical = len(mu) > (mu[0] if mu else 0)
    parts = conjugate(mu) if vertical else mu
    n = len(parts)
    total = 0
    for perm in itertools.permutations(range(n)):
        degrees = [parts[i] - i + perm[i] for i in range(n)]
        if any(d < 0 for d in degrees):
            continue
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        sign = -1 if inversions % 2 else 1
        frontier: dict[Partition, int] = {lam: 1}
        for d in degrees:
            nxt: dict[Partition, int] = defaultdict(int)
            for shape, mult in frontier.items():
                for s in _strips(shape, d, vertical):
                    if len(s) <= len(nu) and all(a <= b for a, b in zip(s, nu)):
                        nxt[s] += mult
            frontier = nxt
        total += sign * frontier.get(nu, 0)
    return total


# --- sl(r) tensor products --------------------------------------------------


def tensor_decompose(v: Weight, w: Weight) -> dict[Weight, int]:
    """Multiplicities of irreducibles in V_v (x) V_w."""
    r = check_rank(v, w)
    product = lr_product(weight_to_partition(v), weight_to_partition(w), max_rows=r)
    out: dict[Weight, int] = defaultdict(int)
    for nu, mult in product.items():
        out[partition_to_weight(nu, r)] += mult
    return dict(sorted(out.items()))
