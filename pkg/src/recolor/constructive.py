"""First-solution construction and per-k initial generators.

All generators are pure functions of (graph, k, rng) and never mutate
shared state, so trials can run them concurrently.
"""

from __future__ import annotations

import numpy as np

from .coloring import UNCOLORED, CompleteColoring, PartialColoring
from .graph import Graph

__all__ = [
    "dsatur",
    "greedy_k_complete",
    "greedy_k_partial",
    "random_k",
    "random_k_partial",
]


def dsatur(g: Graph, rng: np.random.Generator) -> CompleteColoring:
    """Legal coloring by saturation-first selection.

    Each step colors the uncolored vertex with the most distinct colors in
    its neighborhood, breaking ties by degree and then uniformly at random,
    and gives it the smallest non-conflicting color (opening a new color
    when necessary). Uses at most max_degree + 1 colors.
    """
    n = g.n
    if n == 0:
        return CompleteColoring(1, np.zeros(0, dtype=np.int32) + 1)
    cap = g.max_degree + 1
    assign = np.zeros(n, dtype=np.int32)
    # neighbor_has[v, c] marks color c+1 present in v's neighborhood
    neighbor_has = np.zeros((n, cap), dtype=bool)
    saturation = np.zeros(n, dtype=np.int64)
    degrees = g.degrees
    uncolored = np.ones(n, dtype=bool)

    for _ in range(n):
        cand = np.flatnonzero(uncolored)
        sat = saturation[cand]
        best_sat = sat.max()
        cand = cand[sat == best_sat]
        deg = degrees[cand]
        cand = cand[deg == deg.max()]
        v = int(cand[rng.integers(cand.size)]) if cand.size > 1 else int(cand[0])

        color = int(np.flatnonzero(~neighbor_has[v])[0]) + 1
        assign[v] = color
        uncolored[v] = False
        for u in g.adjacency[v]:
            if not neighbor_has[u, color - 1]:
                neighbor_has[u, color - 1] = True
                saturation[u] += 1

    k = int(assign.max())
    return CompleteColoring(k, assign)


def _greedy_scan(
    g: Graph, k: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Shared greedy pass: returns (assign, stuck mask of conflicted visits).

    Vertices are visited in a random order; each gets the smallest color in
    [1..k] not used by an already-visited neighbor. Vertices with no free
    color are left at 0 in `assign` with stuck[v] = True.
    """
    n = g.n
    assign = np.zeros(n, dtype=np.int32)
    stuck = np.zeros(n, dtype=bool)
    order = rng.permutation(n)
    used = np.zeros(k + 1, dtype=bool)
    for v in order:
        used[:] = False
        for u in g.adjacency[v]:
            cu = assign[u]
            if cu:
                used[cu] = True
        free = np.flatnonzero(~used[1:])
        if free.size:
            assign[v] = int(free[0]) + 1
        else:
            stuck[v] = True
    return assign, stuck


def greedy_k_complete(g: Graph, k: int, rng: np.random.Generator) -> CompleteColoring:
    """Greedy k-coloring: smallest feasible color, random color when stuck."""
    if k < 1:
        raise ValueError("k must be at least 1")
    assign, stuck = _greedy_scan(g, k, rng)
    for v in np.flatnonzero(stuck):
        assign[v] = int(rng.integers(1, k + 1))
    return CompleteColoring(k, assign)


def greedy_k_partial(g: Graph, k: int, rng: np.random.Generator) -> PartialColoring:
    """Greedy partial k-coloring: vertices with no feasible color stay uncolored."""
    if k < 1:
        raise ValueError("k must be at least 1")
    assign, _ = _greedy_scan(g, k, rng)
    return PartialColoring(k, assign)


def random_k(g: Graph, k: int, rng: np.random.Generator) -> CompleteColoring:
    """Uniformly random complete k-coloring."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return CompleteColoring(k, rng.integers(1, k + 1, size=g.n, dtype=np.int32))


def random_k_partial(g: Graph, k: int, rng: np.random.Generator) -> PartialColoring:
    """Random partial k-coloring: random assignment, then uncolor conflicts.

    While a conflicting edge remains, one of its endpoints loses its color;
    the result satisfies the conflict-free invariant.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    assign = rng.integers(1, k + 1, size=g.n, dtype=np.int32)
    # Repeatedly strip one endpoint of each surviving conflict.
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            cu = assign[u]
            if cu == UNCOLORED:
                continue
            for v in g.adjacency[u]:
                if assign[v] == cu:
                    victim = u if rng.random() < 0.5 else v
                    assign[victim] = UNCOLORED
                    changed = True
                    if victim == u:
                        break
    return PartialColoring(k, assign)
