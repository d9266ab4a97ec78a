"""The fusion ring of sl(r) at level l.

Fusion coefficients come from the Kac-Walton formula: decompose the
classical tensor product, then fold each constituent into the level-l alcove
with the shifted action of the affine Weyl group.  Everything is integer.

``verlinde_smatrix_dim`` is a floating-point cross-check through the modular
S-matrix and never feeds the exact results.
"""

from __future__ import annotations

import cmath
import math
import threading
import warnings
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .reptheory import casimir_norm, tensor_decompose, weight_to_partition
from .weights import Weight, enumerate_weights, level1_weight, weight_dagger
from .young import YoungDiagram, pi, size, transpose


class PrecisionWarning(UserWarning):
    """The floating-point oracle is running outside its comfortable range."""


def fold_into_alcove(x: Sequence[int], k: int) -> tuple[int, tuple[int, ...]]:
    """Move a shifted weight into the fundamental alcove of height ``k``.

    ``x`` is lambda + rho in partition coordinates.  Returns ``(sign, y)``
    with ``y[0] > y[1] > ... > y[-1] > y[0] - k``, or ``(0, ())`` when the
    orbit meets a wall.
    """
    y = list(x)
    sign = 1
    r = len(y)
    if r == 1:
        return 1, tuple(y)
    while True:
        # finite Weyl group: sort descending, counting transpositions
        for i in range(1, r):
            j = i
            while j > 0 and y[j - 1] < y[j]:
                y[j - 1], y[j] = y[j], y[j - 1]
                sign = -sign
                j -= 1
        if any(y[i] == y[i + 1] for i in range(r - 1)):
            return 0, ()
        gap = y[0] - y[-1]
        if gap < k:
            return sign, tuple(y)
        if gap == k:
            return 0, ()
        # affine reflection in the wall y0 - y_{r-1} = k
        y[0], y[-1] = y[-1] + k, y[0] - k
        sign = -sign


class FusionContext:
    """Fusion ring of sl(rank) at ``level``, with lazily built, shared caches."""

    def __init__(self, rank: int, level: int):
        if rank < 1 or level < 0:
            raise ValueError(f"need rank >= 1 and level >= 0, got ({rank}, {level})")
        self.rank = rank
        self.level = level
        self.basis: tuple[Weight, ...] = tuple(enumerate_weights(rank, level))
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.unit = Weight.zero(rank)
        self._lock = threading.Lock()
        self._products: dict[tuple[Weight, Weight], dict[Weight, int]] = {}
        self._matrices: dict[Weight, tuple[tuple[int, ...], ...]] = {}
        self._handle: tuple[tuple[int, ...], ...] | None = None

    def __repr__(self) -> str:
        return f"FusionContext(rank={self.rank}, level={self.level})"

    def __len__(self) -> int:
        return len(self.basis)

    def check(self, *weights: Weight) -> None:
        for w in weights:
            if w.rank != self.rank:
                raise ValueError(f"{w} has rank {w.rank}, context has rank {self.rank}")
            if w.level > self.level:
                raise ValueError(f"{w} is not in P_{self.level}(sl({self.rank}))")

    def _compute_product(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        r, k = self.rank, self.level + self.rank
        rho = tuple(range(r - 1, -1, -1))
        out: dict[Weight, int] = defaultdict(int)
        for kappa, mult in tensor_decompose(lam, mu).items():
            shifted = tuple(p + s for p, s in zip(weight_to_partition(kappa), rho))
            sign, y = fold_into_alcove(shifted, k)
            if sign:
                labels = tuple(y[i] - y[i + 1] - 1 for i in range(r - 1))
                out[Weight(r, labels)] += sign * mult
        result = {w: m for w, m in sorted(out.items()) if m}
        if any(m < 0 for m in result.values()):
            raise ArithmeticError(f"negative fusion multiplicity for {lam} * {mu}: {result}")
        return result

    def product(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        """``{nu: N_{lam mu}^nu}`` for the nonzero coefficients."""
        self.check(lam, mu)
        key = (lam, mu) if lam <= mu else (mu, lam)
        cached = self._products.get(key)
        if cached is None:
            computed = self._compute_product(*key)
            with self._lock:
                cached = self._products.setdefault(key, computed)
        return dict(cached)

    def coefficient(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        self.check(nu)
        return self.product(lam, mu).get(nu, 0)

    def matrix(self, lam: Weight) -> tuple[tuple[int, ...], ...]:
        """Fusion matrix with entry [mu][nu] = N_{lam mu}^nu in basis order."""
        self.check(lam)
        cached = self._matrices.get(lam)
        if cached is None:
            n = len(self.basis)
            rows = []
            for mu in self.basis:
                row = [0] * n
                for nu, m in self.product(lam, mu).items():
                    row[self.index[nu]] = m
                rows.append(tuple(row))
            with self._lock:
                cached = self._matrices.setdefault(lam, tuple(rows))
        return cached

    def act(self, lam: Weight, vec: Sequence[int]) -> list[int]:
        """Multiply the ring element with coordinates ``vec`` by [lam]."""
        self.check(lam)
        out = [0] * len(self.basis)
        for i, c in enumerate(vec):
            if c:
                for nu, m in self.product(lam, self.basis[i]).items():
                    out[self.index[nu]] += m * c
        return out

    def handle_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row mu holds the coordinates of C * [mu], C = sum_kappa [kappa][kappa^dagger]."""
        if self._handle is None:
            n = len(self.basis)
            rows = []
            for mu in self.basis:
                e = [0] * n
                e[self.index[mu]] = 1
                acc = [0] * n
                for kappa in self.basis:
                    v = self.act(kappa, self.act(weight_dagger(kappa), e))
                    acc = [a + b for a, b in zip(acc, v)]
                rows.append(tuple(acc))
            with self._lock:
                if self._handle is None:
                    self._handle = tuple(rows)
        return self._handle


@lru_cache(maxsize=None)
def get_context(rank: int, level: int) -> FusionContext:
    """Shared context per (rank, level)."""
    return FusionContext(rank, level)


def fusion_coefficient(ctx: FusionContext, lam: Weight, mu: Weight, nu: Weight) -> int:
    return ctx.coefficient(lam, mu, nu)


def fusion_product(ctx: FusionContext, lam: Weight, mu: Weight) -> dict[Weight, int]:
    return ctx.product(lam, mu)


def conformal_weight(w: Weight, r: int, l: int) -> Fraction:
    """Sugawara L0 eigenvalue on the highest-weight space: (w, w+2rho) / 2(l + r)."""
    if w.rank != r:
        raise ValueError(f"{w} is not a weight of sl({r})")
    if w.level > l:
        raise ValueError(f"{w} is not in P_{l}(sl({r}))")
    return casimir_norm(w) / (2 * (l + r))


def branching_gap(Y: YoungDiagram) -> int:
    """L0 offset n_Y at which V_mu (x) V_{mu^t} sits inside the level-1 module.

    Computed as h(pi(Y)) + h(pi(Y^t)) - h(|Y|) for sl(r) at level l,
    sl(l) at level r and sl(rl) at level 1.
    """
    r, l = Y.r, Y.l
    tY = transpose(Y)
    gap = (
        conformal_weight(pi(Y), r, l)
        + conformal_weight(pi(tY), l, r)
        - conformal_weight(level1_weight(size(Y), r * l), r * l, 1)
    )
    if gap.denominator != 1 or gap < 0:
        raise ArithmeticError(f"branching gap of {Y} is {gap}, not a non-negative integer")
    return int(gap)


# --- floating-point oracle --------------------------------------------------


def _sl_inner(x: Sequence[float], y: Sequence[float]) -> float:
    r = len(x)
    return sum(a * b for a, b in zip(x, y)) - sum(x) * sum(y) / r


def smatrix(ctx: FusionContext) -> np.ndarray:
    """Unitary modular S-matrix of sl(r) at level l in the context's basis order.

    S[a, b] is proportional to sum over permutations w of
    sign(w) exp(-2 pi i (w(a + rho), b + rho) / (l + r)), a determinant.
    """
    r, k = ctx.rank, ctx.level + ctx.rank
    n = len(ctx.basis)
    rho = np.arange(r - 1, -1, -1, dtype=float)
    shifted = [np.array(weight_to_partition(w), dtype=float) + rho for w in ctx.basis]
    A = np.empty((n, n), dtype=complex)
    for a, x in enumerate(shifted):
        for b, y in enumerate(shifted):
            phase = np.exp(-2j * np.pi * np.outer(x, y) / k)
            trace = cmath.exp(2j * math.pi * x.sum() * y.sum() / (r * k))
            A[a, b] = np.linalg.det(phase) * trace if r > 1 else 1.0
    i0 = ctx.index[ctx.unit]
    norm = math.sqrt(float(np.sum(np.abs(A[i0]) ** 2)))
    phase0 = A[i0, i0] / abs(A[i0, i0])
    return A / (norm * phase0)


def verlinde_smatrix_dim(ctx: FusionContext, genus: int, labels: Iterable[Weight],
                         max_basis: int = 200, max_value: float = 2.0 ** 40) -> float:
    """Block dimension from the trigonometric Verlinde formula, in floating point.

    Warns with :class:`PrecisionWarning` when the basis or the result gets
    large enough that double precision may not resolve the nearest integer.
    """
    labels = list(labels)
    ctx.check(*labels)
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if len(ctx.basis) > max_basis:
        warnings.warn(f"S-matrix of size {len(ctx.basis)} exceeds {max_basis}", PrecisionWarning)
    S = smatrix(ctx)
    i0 = ctx.index[ctx.unit]
    total = 0j
    for b in range(len(ctx.basis)):
        s0 = S[i0, b]
        term = s0 ** (2 - 2 * genus)
        for lam in labels:
            term *= S[ctx.index[lam], b] / s0
        total += term
    if abs(total.imag) > 1e-6 * max(1.0, abs(total.real)):
        warnings.warn(f"Verlinde sum has imaginary part {total.imag:g}", PrecisionWarning)
    if abs(total.real) > max_value:
        warnings.warn(f"Verlinde sum {total.real:g} exceeds {max_value:g}", PrecisionWarning)
    return float(total.real)
