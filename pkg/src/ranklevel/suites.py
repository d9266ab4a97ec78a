"""Batch verification suites behind ``ranklevel verify``.

Each suite yields ``Case`` records in a fixed order; random instances come
from a ``random.Random`` seeded by the caller, so runs are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .blocks import CurveSpec, block_dim, level1_dim_closed
from .duality import (
    genus0_rank_level_check,
    main_theorem_check,
    sd0_identity_check,
    skew_cauchy_check,
)
from .fusion import branching_gap, get_context, verlinde_smatrix_dim
from .weights import enumerate_weights, level1_weight
from .young import (
    YoungDiagram,
    diagram_dagger,
    enumerate_aff,
    pi,
    size,
    transpose,
)

DEFAULT_SEED = 20100523


@dataclass
class Case:
    name: str
    holds: bool
    report: dict[str, Any] = field(default_factory=dict)


@dataclass
class SuiteOptions:
    max_rl: int = 12
    genus: int = 2
    seed: int = DEFAULT_SEED
    count: int = 20
    max_points: int = 3
    rank: int | None = None
    level: int | None = None


def random_valid_diagrams(rng: random.Random, r: int, l: int, n: int) -> list[YoungDiagram]:
    """n aff diagrams of type (r, l) whose sizes sum to 0 mod rl."""
    if n == 0:
        return []
    pool = enumerate_aff(r, l)
    out = [rng.choice(pool) for _ in range(n - 1)]
    need = -sum(size(Y) for Y in out) % (r * l)
    out.append(rng.choice(enumerate_aff(r, l, need)))
    return out


def _pairs(opts: SuiteOptions, lo: int = 1) -> list[tuple[int, int]]:
    if opts.rank is not None and opts.level is not None:
        return [(opts.rank, opts.level)]
    return [
        (r, l) for r in range(lo, opts.max_rl + 1) for l in range(lo, opts.max_rl + 1)
        if r * l <= opts.max_rl
    ]


def example_suite(opts: SuiteOptions) -> Iterator[Case]:
    Y = YoungDiagram(3, 4, (6, 4, 3))
    tY, Yd = transpose(Y), diagram_dagger(Y)
    got = {
        "tY": list(tY.rows), "Yd": list(Yd.rows), "tYd": list(transpose(Yd).rows),
        "pi": [list(pi(D).labels) for D in (Y, tY, Yd, transpose(Yd))],
        "sizes": [size(Y), size(Yd)],
    }
    want = {
        "tY": [4, 4, 3, 2], "Yd": [5, 4, 2], "tYd": [4, 3, 2, 2],
        "pi": [[2, 1], [0, 1, 1], [1, 2], [1, 1, 0]],
        "sizes": [1, 11],
    }
    yield Case("example Y=(6,4,3)", got == want, {"got": got, "expected": want})


def level1_suite(opts: SuiteOptions) -> Iterator[Case]:
    rng = random.Random(opts.seed)
    ms = [opts.rank] if opts.rank else range(2, opts.max_rl + 1)
    for m in ms:
        ctx = get_context(m, 1)
        for _ in range(opts.count):
            g = rng.randint(0, opts.genus)
            labels = [rng.randrange(m) for _ in range(rng.randint(0, opts.max_points + 1))]
            spec = CurveSpec(g, tuple(level1_weight(i, m) for i in labels))
            engine, closed = block_dim(ctx, spec), level1_dim_closed(m, spec)
            yield Case(f"level1 m={m} g={g} labels={labels}", engine == closed,
                       {"engine": str(engine), "closed": str(closed)})


def skew_cauchy_suite(opts: SuiteOptions) -> Iterator[Case]:
    for r, l in _pairs(opts):
        for lam in range(r * l):
            rep = skew_cauchy_check(lam, r, l)
            yield Case(f"skew-cauchy r={r} l={l} lambda={lam}", rep.holds, rep.to_json())


def cardinality_suite(opts: SuiteOptions) -> Iterator[Case]:
    for r, l in _pairs(opts):
        aff = enumerate_aff(r, l)
        p_rl, p_lr = len(enumerate_weights(r, l)), len(enumerate_weights(l, r))
        fibers: dict[Any, int] = {}
        for Y in aff:
            fibers[pi(Y)] = fibers.get(pi(Y), 0) + 1
        ok = (
            len(aff) == len(enumerate_aff(l, r)) == l * p_rl == r * p_lr
            and len(fibers) == p_rl and set(fibers.values()) == {l}
        )
        yield Case(f"cardinalities r={r} l={l}", ok,
                   {"aff": len(aff), "l*P_l(r)": l * p_rl, "r*P_r(l)": r * p_lr})


def gap_suite(opts: SuiteOptions) -> Iterator[Case]:
    for r, l in _pairs(opts):
        bad = []
        for Y in enumerate_aff(r, l):
            try:
                gap = branching_gap(Y)
            except ArithmeticError as exc:
                bad.append({"rows": list(Y.rows), "error": str(exc)})
                continue
            if (gap == 0) != Y.is_fin:
                bad.append({"rows": list(Y.rows), "gap": gap, "fin": Y.is_fin})
        yield Case(f"gap r={r} l={l}", not bad, {"counterexamples": bad})


def genus0_suite(opts: SuiteOptions) -> Iterator[Case]:
    rng = random.Random(opts.seed)
    for r, l in _pairs(opts, lo=2):
        for _ in range(opts.count):
            Ys = random_valid_diagrams(rng, r, l, rng.randint(1, opts.max_points + 2))
            rep = genus0_rank_level_check(Ys)
            yield Case(f"genus0 r={r} l={l} Y={[list(Y.rows) for Y in Ys]}",
                       rep.holds, rep.to_json())


def main_theorem_suite(opts: SuiteOptions) -> Iterator[Case]:
    rng = random.Random(opts.seed)
    for r, l in _pairs(opts, lo=2):
        for _ in range(opts.count):
            g = rng.randint(0, opts.genus)
            Ys = random_valid_diagrams(rng, r, l, rng.randint(0, opts.max_points))
            rep = main_theorem_check(g, Ys, shape=(r, l))
            yield Case(f"main-theorem r={r} l={l} g={g} Y={[list(Y.rows) for Y in Ys]}",
                       rep.holds, rep.to_json())


def sd0_suite(opts: SuiteOptions) -> Iterator[Case]:
    if opts.rank is not None and opts.level is not None:
        pairs = [(opts.rank, opts.level)]
    else:
        pairs = list(itertools.product(range(1, 5), repeat=2))
    for r, l in pairs:
        for g in range(opts.genus + 1):
            rep = sd0_identity_check(g, r, l)
            yield Case(f"sd0 r={r} l={l} g={g}", rep.holds, rep.to_json())


def oracle_suite(opts: SuiteOptions) -> Iterator[Case]:
    if opts.rank is not None and opts.level is not None:
        pairs = [(opts.rank, opts.level)]
    else:
        pairs = list(itertools.product(range(1, 4), repeat=2))
    for r, l in pairs:
        ctx = get_context(r, l)
        bad, checked, worst = [], 0, 0.0
        for g in range(opts.genus + 1):
            for n in range(opts.max_points + 1):
                for labels in itertools.combinations_with_replacement(ctx.basis, n):
                    exact = block_dim(ctx, CurveSpec(g, labels))
                    approx = verlinde_smatrix_dim(ctx, g, labels)
                    resid = abs(approx - round(approx))
                    worst = max(worst, resid)
                    checked += 1
                    if round(approx) != exact or resid >= 1e-6:
                        bad.append({"genus": g, "labels": [list(w.labels) for w in labels],
                                    "exact": str(exact), "float": approx})
        yield Case(f"oracle r={r} l={l}", not bad,
                   {"checked": checked, "max_residual": worst, "counterexamples": bad})


SUITES: dict[str, Callable[[SuiteOptions], Iterator[Case]]] = {
    "example": example_suite,
    "level1": level1_suite,
    "skew-cauchy": skew_cauchy_suite,
    "cardinalities": cardinality_suite,
    "gap": gap_suite,
    "genus0": genus0_suite,
    "main-theorem": main_theorem_suite,
    "sd0": sd0_suite,
    "oracle": oracle_suite,
}
