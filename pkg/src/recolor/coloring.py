"""Coloring value objects, penalty functions, and class accounting.

Colors are dense 1-based integers 1..k; the uncolored marker is 0 in
partial colorings. Assignment arrays are copied on construction and
frozen, so colorings behave as plain values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Union

import numpy as np

from .graph import Graph

__all__ = [
    "UNCOLORED",
    "CompleteColoring",
    "PartialColoring",
    "penalty_complete",
    "penalty_partial",
    "is_legal",
    "is_conflict_free",
    "color_classes",
    "compact",
    "conflicting_vertex_count",
    "serialize_coloring",
    "parse_coloring",
]

UNCOLORED = 0


def _freeze(values: Sequence[int] | np.ndarray) -> np.ndarray:
    arr = np.array(values, dtype=np.int32)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CompleteColoring:
    """Total assignment of colors 1..k to every vertex."""

    k: int
    assign: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "assign", _freeze(self.assign))
        if self.k < 1:
            raise ValueError("color count must be at least 1")
        if self.assign.size and (
            self.assign.min() < 1 or self.assign.max() > self.k
        ):
            raise ValueError("complete coloring has a color outside [1..k]")

    @property
    def n(self) -> int:
        return int(self.assign.size)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CompleteColoring)
            and self.k == other.k
            and np.array_equal(self.assign, other.assign)
        )


@dataclass(frozen=True)
class PartialColoring:
    """Assignment of colors 1..k or the uncolored marker 0.

    Conflict-freeness is a structural invariant maintained by every
    producing operation; use `is_conflict_free` to verify against a graph.
    """

    k: int
    assign: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "assign", _freeze(self.assign))
        if self.k < 1:
            raise ValueError("color count must be at least 1")
        if self.assign.size and (
            self.assign.min() < 0 or self.assign.max() > self.k
        ):
            raise ValueError("partial coloring has a color outside [1..k] or 0")

    @property
    def n(self) -> int:
        return int(self.assign.size)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PartialColoring)
            and self.k == other.k
            and np.array_equal(self.assign, other.assign)
        )


Coloring = Union[CompleteColoring, PartialColoring]


def _check_length(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")


def penalty_complete(g: Graph, c: CompleteColoring) -> int:
    """Number of conflicting edges (endpoints sharing a color)."""
    _check_length(g, c)
    if g.n == 0:
        return 0
    a = c.assign
    indptr, indices = g.csr
    # Each conflicting edge is seen from both endpoints.
    same = np.repeat(a, np.diff(indptr)) == a[indices]
    return int(same.sum()) // 2


def penalty_partial(c: PartialColoring) -> int:
    """Number of uncolored vertices."""
    return int(np.count_nonzero(c.assign == UNCOLORED))


def is_legal(g: Graph, c: CompleteColoring) -> bool:
    return penalty_complete(g, c) == 0


def is_conflict_free(g: Graph, c: PartialColoring) -> bool:
    """Check the partial-coloring invariant: no conflicting colored edge."""
    _check_length(g, c)
    if g.n == 0:
        return True
    a = c.assign
    indptr, indices = g.csr
    mine = np.repeat(a, np.diff(indptr))
    clash = (mine != UNCOLORED) & (mine == a[indices])
    return not bool(clash.any())


def color_classes(c: Coloring) -> List[int]:
    """Sizes of the k color classes; class i has index i-1."""
    counts = np.bincount(c.assign, minlength=c.k + 1)
    return counts[1:c.k + 1].tolist()


def compact(c: Coloring) -> Coloring:
    """Drop unused colors, renumbering used ones 1..k' by first appearance.

    Returns the input unchanged when every color is in use.
    """
    a = c.assign
    seen: dict[int, int] = {}
    for col in a.tolist():
        if col != UNCOLORED and col not in seen:
            seen[col] = len(seen) + 1
    new_k = len(seen) if seen else 1
    if new_k == c.k:
        return c
    remapped = np.array(
        [seen[col] if col != UNCOLORED else UNCOLORED for col in a.tolist()],
        dtype=np.int32,
    )
    if isinstance(c, CompleteColoring):
        return CompleteColoring(new_k, remapped)
    return PartialColoring(new_k, remapped)


def conflicting_vertex_count(g: Graph, c: CompleteColoring) -> int:
    """Vertices incident to at least one conflicting edge."""
    _check_length(g, c)
    if g.n == 0:
        return 0
    a = c.assign
    indptr, indices = g.csr
    same = np.repeat(a, np.diff(indptr)) == a[indices]
    conflicted = np.zeros(g.n, dtype=bool)
    np.logical_or.at(conflicted, np.repeat(np.arange(g.n), np.diff(indptr)), same)
    return int(conflicted.sum())


def serialize_coloring(c: Coloring) -> str:
    """One `<vertex> <color>` line per vertex, 1-based, 0 marks uncolored."""
    return "\n".join(
        f"{v + 1} {int(col)}" for v, col in enumerate(c.assign)
    ) + "\n"


def parse_coloring(text: str, k: int, partial: bool = False) -> Coloring:
    """Inverse of `serialize_coloring` for a known color count."""
    entries: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed coloring line {lineno}")
        entries[int(parts[0]) - 1] = int(parts[1])
    assign = np.zeros(len(entries), dtype=np.int32)
    for v, col in entries.items():
        assign[v] = col
    if partial:
        return PartialColoring(k, assign)
    return CompleteColoring(k, assign)
