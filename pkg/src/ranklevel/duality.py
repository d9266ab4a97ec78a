"""Branching of sl(r) x sl(l) inside sl(rl) and rank-level duality checks.

Only dimensions and index sets are computed here; none of the linear maps
between spaces of blocks are built.  Each check returns a
:class:`CheckReport` that serialises to JSON with big integers as decimal
strings.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .blocks import CurveSpec, block_dim
from .fusion import branching_gap, get_context
from .reptheory import weyl_dim
from .weights import Weight, level1_label, level1_weight
from .young import YoungDiagram, enumerate_aff, pi, size, transpose


class HypothesisError(ValueError):
    """Diagram sizes do not sum to 0 mod rl."""


@dataclass(frozen=True)
class CheckReport:
    lhs: int
    rhs: int
    holds: bool
    relation: str = "=="
    provenance: str = "paper"
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "relation": self.relation,
            "provenance": self.provenance,
            "details": self.details,
        }


@dataclass(frozen=True)
class BranchingSummand:
    diagram: YoungDiagram
    mu: Weight
    mu_t: Weight
    gap: int

    @property
    def is_fin(self) -> bool:
        return self.gap == 0


def branching_summands(lambda0: int, r: int, l: int) -> list[BranchingSummand]:
    """Summands of the level-1 sl(rl) module of weight ``lambda0``."""
    if not 0 <= lambda0 < r * l:
        raise ValueError(f"level-1 label must lie in [0, {r * l - 1}], got {lambda0}")
    return [
        BranchingSummand(Y, pi(Y), pi(transpose(Y)), branching_gap(Y))
        for Y in enumerate_aff(r, l, lambda0)
    ]


@dataclass(frozen=True)
class Triple:
    """(lambda0, mu1, mu2) in P_1(rl) x P_l(r) x P_r(l); lambda0 as its integer label."""

    lambda0: int
    mu1: Weight
    mu2: Weight

    @classmethod
    def of(cls, lambda0: int | Weight, mu1: Weight, mu2: Weight) -> Triple:
        if isinstance(lambda0, Weight):
            lambda0 = level1_label(lambda0)
        return cls(lambda0, mu1, mu2)


def _check_triple(t: Triple, r: int, l: int) -> None:
    if t.mu1.rank != r or t.mu2.rank != l:
        raise ValueError(f"triple ranks ({t.mu1.rank}, {t.mu2.rank}) do not match ({r}, {l})")
    if not 0 <= t.lambda0 < r * l:
        raise ValueError(f"level-1 label {t.lambda0} out of range for sl({r * l})")


def admissible(t: Triple, r: int, l: int) -> YoungDiagram | None:
    """The diagram realising the triple, or None."""
    _check_triple(t, r, l)
    hits = [
        Y for Y in enumerate_aff(r, l, t.lambda0)
        if pi(Y) == t.mu1 and pi(transpose(Y)) == t.mu2
    ]
    if len(hits) > 1:
        raise AssertionError(f"triple {t} realised by several diagrams: {hits}")
    return hits[0] if hits else None


class AlphaKind(enum.Enum):
    ZERO = "zero"
    NONZERO_FIN = "nonzero_fin"


@dataclass(frozen=True)
class AlphaComponent:
    kind: AlphaKind
    diagram: YoungDiagram | None = None


def classify_alpha_component(t: Triple, r: int, l: int) -> AlphaComponent:
    """Whether the (lambda0, mu1, mu2) block of the sewing map can be nonzero."""
    Y = admissible(t, r, l)
    if Y is None or not Y.is_fin:
        return AlphaComponent(AlphaKind.ZERO, Y)
    return AlphaComponent(AlphaKind.NONZERO_FIN, Y)


def skew_cauchy_check(lam: int, r: int, l: int) -> CheckReport:
    """dim of the lam-th exterior power of C^r (x) C^l against the fin summands."""
    lhs = math.comb(r * l, lam)
    terms = []
    for s in branching_summands(lam, r, l):
        if s.diagram.is_fin:
            terms.append((list(s.diagram.rows), weyl_dim(s.mu) * weyl_dim(s.mu_t)))
    rhs = sum(d for _, d in terms)
    return CheckReport(lhs, rhs, lhs == rhs, details={
        "r": r, "l": l, "lambda": lam,
        "terms": [{"rows": rows, "dim": str(d)} for rows, d in terms],
    })


def _shape_of(diagrams: Sequence[YoungDiagram], shape: tuple[int, int] | None) -> tuple[int, int]:
    types = {Y.shape_type for Y in diagrams}
    if shape is not None:
        types.add(tuple(shape))
    if len(types) != 1:
        raise ValueError(f"need diagrams of one type, got {sorted(types)}")
    return types.pop()


def _check_hypothesis(diagrams: Sequence[YoungDiagram], r: int, l: int) -> None:
    for Y in diagrams:
        if not Y.is_aff:
            raise ValueError(f"{Y} is not in the aff set of type ({r}, {l})")
    total = sum(size(Y) for Y in diagrams)
    if total % (r * l):
        raise HypothesisError(f"diagram sizes sum to {total}, not 0 mod {r * l}")


def genus0_rank_level_check(diagrams: Sequence[YoungDiagram],
                            shape: tuple[int, int] | None = None) -> CheckReport:
    """Sphere blocks of sl(r) level l against sl(l) level r for transposed labels.

    ``shape`` is only needed when ``diagrams`` is empty.
    """
    r, l = _shape_of(diagrams, shape)
    _check_hypothesis(diagrams, r, l)
    d_r = block_dim(get_context(r, l), CurveSpec(0, tuple(pi(Y) for Y in diagrams)))
    d_l = block_dim(get_context(l, r), CurveSpec(0, tuple(pi(transpose(Y)) for Y in diagrams)))
    return CheckReport(d_r, d_l, d_r == d_l, details={
        "r": r, "l": l, "diagrams": [list(Y.rows) for Y in diagrams],
    })


def main_theorem_check(g: int, diagrams: Sequence[YoungDiagram],
                       shape: tuple[int, int] | None = None) -> CheckReport:
    """dim V(sl(r), l) <= dim V(sl(rl), 1) * dim V(sl(l), r), with equality at g = 0."""
    r, l = _shape_of(diagrams, shape)
    _check_hypothesis(diagrams, r, l)
    lhs = block_dim(get_context(r, l), CurveSpec(g, tuple(pi(Y) for Y in diagrams)))
    level1 = block_dim(
        get_context(r * l, 1),
        CurveSpec(g, tuple(level1_weight(size(Y), r * l) for Y in diagrams)),
    )
    dual = block_dim(get_context(l, r), CurveSpec(g, tuple(pi(transpose(Y)) for Y in diagrams)))
    rhs = level1 * dual
    holds = lhs <= rhs and (g > 0 or lhs == rhs)
    return CheckReport(lhs, rhs, holds, relation="<=" if g else "==", details={
        "r": r, "l": l, "genus": g, "diagrams": [list(Y.rows) for Y in diagrams],
        "level1_dim": str(level1), "dual_dim": str(dual),
    })


def sd0_identity_check(g: int, r: int, l: int) -> CheckReport:
    """l**g * dim V(sl(r), level l, genus g) == r**g * dim V(sl(l), level r, genus g)."""
    if g < 0 or r < 1 or l < 1:
        raise ValueError(f"need g >= 0 and r, l >= 1, got g={g}, r={r}, l={l}")
    v_rl = block_dim(get_context(r, l), CurveSpec(g))
    v_lr = block_dim(get_context(l, r), CurveSpec(g))
    lhs, rhs = l ** g * v_rl, r ** g * v_lr
    return CheckReport(lhs, rhs, lhs == rhs, provenance="derived", details={
        "r": r, "l": l, "genus": g, "dim_r_l": str(v_rl), "dim_l_r": str(v_lr),
    })
