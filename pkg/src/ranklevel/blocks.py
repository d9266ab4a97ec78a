"""Dimensions of spaces of conformal blocks.

A genus-g curve is built from the sphere by sewing in g handles, each a sum
over mu of the pair (mu, mu^dagger).  In the fusion ring that means

    dim = coefficient of [0] in [lam_1] * ... * [lam_n] * C^g,
    C   = sum_mu [mu] * [mu^dagger].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .fusion import FusionContext
from .reptheory import weyl_dim
from .weights import Weight, level1_label, weight_dagger


@dataclass(frozen=True)
class CurveSpec:
    """Genus plus ordered marked-point labels."""

    genus: int
    labels: tuple[Weight, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if len({w.rank for w in self.labels}) > 1:
            raise ValueError("marked-point labels have different ranks")


def block_dim(ctx: FusionContext, spec: CurveSpec) -> int:
    ctx.check(*spec.labels)
    n = len(ctx.basis)
    vec = [0] * n
    vec[ctx.index[ctx.unit]] = 1
    for lam in sorted(spec.labels, key=lambda w: (weyl_dim(w), w)):
        vec = ctx.act(lam, vec)
    if spec.genus:
        handle = ctx.handle_matrix()
        for _ in range(spec.genus):
            nxt = [0] * n
            for i, c in enumerate(vec):
                if c:
                    row = handle[i]
                    for j in range(n):
                        nxt[j] += c * row[j]
            vec = nxt
    return vec[ctx.index[ctx.unit]]


def level1_dim_closed(m: int, spec: CurveSpec) -> int:
    """Level-1 sl(m) blocks: m**g when the labels sum to 0 mod m, else 0."""
    total = 0
    for w in spec.labels:
        if w.rank != m:
            raise ValueError(f"{w} is not a weight of sl({m})")
        total += level1_label(w)
    return m ** spec.genus if total % m == 0 else 0


@dataclass(frozen=True)
class FactorizationReport:
    lhs: int
    rhs: int
    terms: tuple[tuple[Weight, int], ...]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def factorize_check(ctx: FusionContext, spec: CurveSpec) -> FactorizationReport:
    """Compare a genus-g dimension with the sum over one pinched handle."""
    if spec.genus < 1:
        raise ValueError("factorization needs genus >= 1")
    lhs = block_dim(ctx, spec)
    terms = []
    for mu in ctx.basis:
        smaller = CurveSpec(spec.genus - 1, spec.labels + (mu, weight_dagger(mu)))
        terms.append((mu, block_dim(ctx, smaller)))
    return FactorizationReport(lhs, sum(d for _, d in terms), tuple(terms))


def dims(ctx: FusionContext, genus: int, labels: Sequence[Weight] = ()) -> int:
    """Shorthand for ``block_dim(ctx, CurveSpec(genus, labels))``."""
    return block_dim(ctx, CurveSpec(genus, tuple(labels)))
