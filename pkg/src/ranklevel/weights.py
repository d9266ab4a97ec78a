"""Dominant weights of sl(r) and the level truncation P_l(r)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True, order=True)
class Weight:
    """A dominant weight of sl(rank), stored as Dynkin labels.

    ``labels[i]`` is the coefficient of the (i+1)-th fundamental weight.
    Rank 1 is allowed and has the empty label tuple.
    """

    rank: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        labels = tuple(int(a) for a in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.rank - 1:
            raise ValueError(
                f"sl({self.rank}) weight needs {self.rank - 1} labels, got {len(labels)}"
            )
        if any(a < 0 for a in labels):
            raise ValueError(f"labels must be non-negative: {labels}")

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls(rank, (0,) * (rank - 1))

    @classmethod
    def fundamental(cls, i: int, rank: int) -> Weight:
        """The i-th fundamental weight; i = 0 gives the trivial weight."""
        return level1_weight(i, rank)

    @property
    def level(self) -> int:
        """Smallest level at which this weight is integrable (sum of labels)."""
        return sum(self.labels)

    def in_level(self, level: int) -> bool:
        return self.level <= level

    @property
    def is_zero(self) -> bool:
        return not any(self.labels)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.labels, start=1):
            if a == 1:
                terms.append(f"w{i}")
            elif a:
                terms.append(f"{a}w{i}")
        return "+".join(terms) or "0"


def enumerate_weights(r: int, l: int) -> list[Weight]:
    """All weights of sl(r) with label sum <= l, lexicographic on labels."""
    if r < 1 or l < 0:
        raise ValueError(f"need r >= 1 and l >= 0, got r={r}, l={l}")
    out = [
        Weight(r, labels)
        for labels in itertools.product(range(l + 1), repeat=r - 1)
        if sum(labels) <= l
    ]
    return out


def weight_dagger(w: Weight) -> Weight:
    """Highest weight of the dual module: the label vector reversed."""
    return Weight(w.rank, w.labels[::-1])


def level1_label(w: Weight) -> int:
    """Integer name of a level-1 weight: 0 for trivial, i for the i-th fundamental."""
    if w.level > 1:
        raise ValueError(f"{w} is not a level-1 weight of sl({w.rank})")
    for i, a in enumerate(w.labels, start=1):
        if a:
            return i
    return 0


def level1_weight(i: int, r: int) -> Weight:
    if not 0 <= i < r:
        raise ValueError(f"level-1 label must lie in [0, {r - 1}], got {i}")
    labels = [0] * (r - 1)
    if i:
        labels[i - 1] = 1
    return Weight(r, tuple(labels))


def check_rank(*weights: Weight, rank: int | None = None) -> int:
    """Return the common rank of ``weights``; raise on a mismatch."""
    ranks = {w.rank for w in weights}
    if rank is not None:
        ranks.add(rank)
    if len(ranks) > 1:
        raise ValueError(f"rank mismatch: {sorted(ranks)}")
    return ranks.pop() if ranks else rank  # type: ignore[return-value]


def weight_to_json(w: Weight) -> dict[str, Any]:
    return {"rank": w.rank, "labels": list(w.labels)}


def weight_from_json(obj: Any, rank: int | None = None) -> Weight:
    """Decode ``{"rank": r, "labels": [...]}``, or a bare level-1 integer when ``rank`` is given."""
    if isinstance(obj, bool):
        raise TypeError("booleans are not weights")
    if isinstance(obj, int):
        if rank is None:
            raise ValueError("a bare integer weight needs an explicit rank")
        return level1_weight(obj, rank)
    w = Weight(int(obj["rank"]), tuple(obj["labels"]))
    if rank is not None and w.rank != rank:
        raise ValueError(f"expected rank {rank}, got {w.rank}")
    return w
