"""Young diagrams of type (r, l) and the maps between them.

A diagram of type (r, l) is a weakly decreasing sequence of r non-negative
rows with ``y[0] - y[-1] <= l``.  Two finite subsets matter:

* aff: ``y[-1] <= l - 1``
* fin: aff and ``y[0] <= l``

Transpose sends type (r, l) to type (l, r); dagger is an involution of the
aff set.  Both preserve fin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .weights import Weight, enumerate_weights


@dataclass(frozen=True, order=True)
class YoungDiagram:
    r: int
    l: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(y) for y in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.r < 1 or self.l < 1:
            raise ValueError(f"type must have r, l >= 1, got ({self.r}, {self.l})")
        if len(rows) != self.r:
            raise ValueError(f"type ({self.r}, {self.l}) needs {self.r} rows, got {len(rows)}")
        if rows[-1] < 0:
            raise ValueError(f"rows must be non-negative: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        if rows[0] - rows[-1] > self.l:
            raise ValueError(f"rows {rows} exceed width {self.l} (y1 - yr > l)")

    @classmethod
    def empty(cls, r: int, l: int) -> YoungDiagram:
        return cls(r, l, (0,) * r)

    @property
    def shape_type(self) -> tuple[int, int]:
        return (self.r, self.l)

    @property
    def is_aff(self) -> bool:
        return self.rows[-1] <= self.l - 1

    @property
    def is_fin(self) -> bool:
        return self.is_aff and self.rows[0] <= self.l

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"


def _require_aff(Y: YoungDiagram) -> None:
    if not Y.is_aff:
        raise ValueError(f"{Y} of type {Y.shape_type} is not in the aff set (y_r > l - 1)")


def pi(Y: YoungDiagram) -> Weight:
    """Weight of sl(r) with labels the successive row differences."""
    y = Y.rows
    return Weight(Y.r, tuple(y[i] - y[i + 1] for i in range(Y.r - 1)))


def size(Y: YoungDiagram) -> int:
    """Box count reduced mod rl into {0, ..., rl-1}."""
    return sum(Y.rows) % (Y.r * Y.l)


def transpose(Y: YoungDiagram) -> YoungDiagram:
    """Transpose of an aff diagram, of type (l, r).

    Diagrams sticking out of the l-wide rectangle are cut at column l and the
    two transposed pieces are added row-wise, which gives
    ``row_j = #{i: y_i >= j} + #{i: y_i >= j + l}``.
    """
    _require_aff(Y)
    r, l = Y.r, Y.l
    rows = tuple(
        sum(1 for y in Y.rows if y >= j) + sum(1 for y in Y.rows if y >= j + l)
        for j in range(1, l + 1)
    )
    return YoungDiagram(l, r, rows)


def diagram_dagger(Y: YoungDiagram) -> YoungDiagram:
    """Rotated complement in the l-wide (fin) or 2l-wide (aff minus fin) rectangle.

    The complement of the empty diagram is the full rectangle, which is not
    aff; one full layer of width l is then removed (same weight, size shifts
    by rl).
    """
    _require_aff(Y)
    width = Y.l if Y.rows[0] <= Y.l else 2 * Y.l
    rows = [width - y for y in reversed(Y.rows)]
    if rows[-1] >= Y.l:
        rows = [y - Y.l for y in rows]
    return YoungDiagram(Y.r, Y.l, tuple(rows))


def enumerate_aff(r: int, l: int, size_class: int | None = None) -> list[YoungDiagram]:
    """The aff diagrams of type (r, l), optionally only those of a given size.

    Each weight of P_l(r) lifts to exactly l aff diagrams, one per bottom row
    length 0..l-1.
    """
    if size_class is not None and not 0 <= size_class < r * l:
        raise ValueError(f"size class must lie in [0, {r * l - 1}], got {size_class}")
    out = []
    for w in enumerate_weights(r, l):
        tail = [0] * r
        for i in range(r - 2, -1, -1):
            tail[i] = tail[i + 1] + w.labels[i]
        for base in range(l):
            Y = YoungDiagram(r, l, tuple(base + t for t in tail))
            if size_class is None or size(Y) == size_class:
                out.append(Y)
    out.sort(key=lambda Y: Y.rows)
    return out


def enumerate_fin(r: int, l: int, size_class: int | None = None) -> list[YoungDiagram]:
    return [Y for Y in enumerate_aff(r, l, size_class) if Y.is_fin]


def diagram_to_json(Y: YoungDiagram) -> dict[str, Any]:
    return {"type": [Y.r, Y.l], "rows": list(Y.rows)}


def diagram_from_json(obj: Any) -> YoungDiagram:
    r, l = obj["type"]
    return YoungDiagram(int(r), int(l), tuple(obj["rows"]))
