"""Exact small-instance ground truth by exhaustive backtracking.

Deliberately capped at 30 vertices so it stays a test oracle rather than
an accidental solver.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["is_k_colorable", "exact_chromatic_number", "ORACLE_MAX_VERTICES"]

ORACLE_MAX_VERTICES = 30


def _guard(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(
            f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}"
        )


def is_k_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability decision by backtracking.

    Symmetry is broken by never opening more than one new color per step:
    vertex i may only use colors 1..(max used so far)+1.
    """
    _guard(g)
    if k < 1:
        return g.n == 0
    n = g.n
    if n == 0:
        return True

    # Order vertices by descending degree for earlier pruning.
    order = sorted(range(n), key=lambda v: -len(g.adjacency[v]))
    pos = {v: i for i, v in enumerate(order)}
    colors = [0] * n  # indexed by position in `order`
    adj_pos = [
        sorted(pos[u] for u in g.adjacency[v] if pos[u] < pos[v])
        for v in order
    ]

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        forbidden = {colors[j] for j in adj_pos[i]}
        limit = min(k, used + 1)
        for col in range(1, limit + 1):
            if col in forbidden:
                continue
            colors[i] = col
            if extend(i + 1, max(used, col)):
                return True
        colors[i] = 0
        return False

    return extend(0, 0)


def exact_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a legal k-coloring."""
    _guard(g)
    if g.n == 0:
        return 0
    k = 1
    while not is_k_colorable(g, k):
        k += 1
    return k
