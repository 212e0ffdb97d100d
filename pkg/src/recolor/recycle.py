"""Initial k-coloring generation from a legal (k+1)-coloring.

Selected color classes are recolored (complete strategy) or uncolored
(partial strategy) so that one color disappears; remaining classes are
untouched, which is what keeps the resulting penalty small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .coloring import (
    UNCOLORED,
    CompleteColoring,
    PartialColoring,
    color_classes,
    is_legal,
)
from .graph import Graph

__all__ = [
    "RecycleConfig",
    "select_smallest_class",
    "recycle_complete",
    "recycle_partial",
    "least_selection_recolor",
]


@dataclass(frozen=True)
class RecycleConfig:
    """Recycling configuration.

    t = None selects the single smallest color class (the R* generator);
    t >= 1 selects t random classes (R_t). The removed color is the
    selected smallest-class color, or the first sampled one for R_t.
    recolor applies to the complete strategy only: "random" draws uniformly
    from the surviving colors, "least" picks the color with fewest
    conflicts among the vertex's neighbors.
    """

    t: Optional[int] = None
    recolor: str = "random"

    def __post_init__(self) -> None:
        if self.t is not None and self.t < 1:
            raise ValueError("class count t must be at least 1")
        if self.recolor not in ("random", "least"):
            raise ValueError(f"unknown recolor rule {self.recolor!r}")


def select_smallest_class(c: CompleteColoring) -> int:
    """Color (1-based) with the smallest class; ties go to the lowest color."""
    sizes = color_classes(c)
    return int(np.argmin(sizes)) + 1


def _check_recyclable(g: Graph, c: CompleteColoring) -> None:
    if c.k < 2:
        raise ValueError("recycling needs at least 2 colors")
    if not is_legal(g, c):
        raise ValueError("recycle input coloring is not legal")


def _pick_classes(
    c: CompleteColoring, cfg: RecycleConfig, rng: np.random.Generator
) -> tuple[list[int], int]:
    """Resolve (K, removed color) from the config."""
    if cfg.t is None:
        eps = select_smallest_class(c)
        return [eps], eps
    if cfg.t > c.k:
        raise ValueError(f"t={cfg.t} exceeds available colors {c.k}")
    chosen = rng.choice(c.k, size=cfg.t, replace=False) + 1
    selected = [int(x) for x in chosen]
    return selected, selected[0]


def _shift_out(assign: np.ndarray, eps: int) -> np.ndarray:
    """Renumber colors so the unused color eps vanishes: j > eps maps to j-1."""
    out = assign.copy()
    out[out > eps] -= 1
    return out


def least_selection_recolor(
    g: Graph,
    assign: np.ndarray,
    v: int,
    allowed: Sequence[int],
) -> int:
    """Allowed color held by fewest of v's colored neighbors; ties go low.

    `assign` uses 0 for uncolored vertices.
    """
    if len(allowed) == 0:
        raise ValueError("allowed color set is empty")
    counts = {col: 0 for col in allowed}
    for u in g.adjacency[v]:
        cu = int(assign[u])
        if cu in counts:
            counts[cu] += 1
    return min(sorted(counts), key=lambda col: counts[col])


def recycle_complete(
    g: Graph,
    c: CompleteColoring,
    cfg: RecycleConfig,
    rng: np.random.Generator,
) -> CompleteColoring:
    """k-coloring from a legal (k+1)-coloring by recoloring selected classes.

    Vertices in the selected classes move to a surviving color (uniformly at
    random or by least-selection); everything else keeps its color. The
    removed color's slot is squeezed out so the result uses colors 1..k.
    """
    _check_recyclable(g, c)
    selected, eps = _pick_classes(c, cfg, rng)
    selected_set = set(selected)
    k1 = c.k
    survivors = [col for col in range(1, k1 + 1) if col != eps]

    assign = c.assign.copy()
    victims = np.flatnonzero(np.isin(assign, selected)).tolist()
    if cfg.recolor == "random":
        for v in victims:
            assign[v] = survivors[rng.integers(len(survivors))]
    else:
        # Least-selection processes victims in ascending vertex order;
        # earlier reassignments count as colored neighbors.
        scratch = assign.copy()
        scratch[victims] = UNCOLORED
        for v in victims:
            col = least_selection_recolor(g, scratch, v, survivors)
            scratch[v] = col
            assign[v] = col
    return CompleteColoring(k1 - 1, _shift_out(assign, eps))


def recycle_partial(
    g: Graph,
    c: CompleteColoring,
    cfg: RecycleConfig,
    rng: Optional[np.random.Generator] = None,
) -> PartialColoring:
    """Partial k-coloring: selected classes become uncolored, others persist.

    The surviving classes are independent sets of a legal coloring, so the
    conflict-free invariant holds by construction.
    """
    _check_recyclable(g, c)
    if rng is None:
        rng = np.random.default_rng()
    selected, eps = _pick_classes(c, cfg, rng)
    assign = c.assign.copy()
    assign[np.isin(assign, selected)] = UNCOLORED
    return PartialColoring(c.k - 1, _shift_out(assign, eps))
