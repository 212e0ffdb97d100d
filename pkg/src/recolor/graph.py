"""Immutable simple undirected graphs, DIMACS .col I/O, and degree statistics."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

__all__ = [
    "Graph",
    "DegreeStats",
    "DimacsError",
    "DimacsWarning",
    "parse_dimacs",
    "write_dimacs",
    "degree_stats",
    "gnp_random_graph",
    "gnm_random_graph",
]


class DimacsError(ValueError):
    """Raised for malformed DIMACS input; message names the offending line."""


class DimacsWarning(UserWarning):
    """Non-fatal DIMACS irregularities (duplicate edges, wrong edge count)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with 0-based vertices and sorted neighbor lists.

    Invariants: no self-loops, no duplicate neighbors, symmetric adjacency.
    Instances are immutable and safe to share across concurrent trials.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)

    @cached_property
    def csr(self) -> Tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices) for the search kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, nbrs in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(nbrs)
        indices = np.empty(indptr[-1], dtype=np.int32)
        for v, nbrs in enumerate(self.adjacency):
            indices[indptr[v]:indptr[v + 1]] = nbrs
        return indptr, indices

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = np.searchsorted(nbrs, v) if nbrs else 0
        return bool(nbrs) and i < len(nbrs) and nbrs[int(i)] == v

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from 0-based endpoint pairs, collapsing duplicates.

        Self-loops are rejected; endpoints must lie in [0, n).
        """
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"endpoint out of range: ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class DegreeStats:
    """Degree distribution summary; cv is the percentage stddev/mean ratio."""

    mean: float
    stddev: float
    cv: float


def degree_stats(g: Graph) -> DegreeStats:
    """Mean, population stddev, and coefficient of variation of the degrees.

    Raises ValueError on an edgeless graph, where the CV is undefined.
    """
    if g.n < 1:
        raise ValueError("degree statistics require at least one vertex")
    degs = g.degrees
    mean = float(degs.mean())
    if mean == 0.0:
        raise ValueError("degree CV undefined: graph has no edges")
    stddev = float(degs.std())
    return DegreeStats(mean=mean, stddev=stddev, cv=100.0 * stddev / mean)


def parse_dimacs(text: str | Iterable[str]) -> Graph:
    """Parse DIMACS .col text into a Graph.

    Accepts `c` comments, one `p edge <n> <m>` line, then `e <u> <v>` lines
    with 1-based endpoints. Duplicate edges are merged with a warning; the
    declared edge count is advisory (mismatch also warns). Self-loops and
    out-of-range endpoints are errors naming the line number.
    """
    if isinstance(text, str):
        lines: Iterable[str] = text.splitlines()
    else:
        lines = text

    n = -1
    nbrs: list[set[int]] = []
    declared_m = 0
    duplicates = 0
    actual_m = 0

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n >= 0:
                raise DimacsError(f"duplicate 'p' line at line {lineno}")
            if len(tokens) != 4 or tokens[1] not in ("edge", "edges", "col"):
                raise DimacsError(f"malformed 'p' line at line {lineno}")
            try:
                n = int(tokens[2])
                declared_m = int(tokens[3])
            except ValueError:
                raise DimacsError(f"malformed 'p' line at line {lineno}") from None
            if n < 0:
                raise DimacsError(f"negative vertex count at line {lineno}")
            nbrs = [set() for _ in range(n)]
        elif tokens[0] == "e":
            if n < 0:
                raise DimacsError(f"edge before 'p' line at line {lineno}")
            if len(tokens) != 3:
                raise DimacsError(f"malformed edge at line {lineno}")
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise DimacsError(f"malformed token at line {lineno}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"endpoint out of range at line {lineno}")
            if u == v:
                raise DimacsError(f"self-loop at line {lineno}")
            a, b = u - 1, v - 1
            if b in nbrs[a]:
                duplicates += 1
            else:
                nbrs[a].add(b)
                nbrs[b].add(a)
                actual_m += 1
        else:
            raise DimacsError(f"unrecognized line type {tokens[0]!r} at line {lineno}")

    if n < 0:
        raise DimacsError("missing 'p' line")
    if duplicates:
        warnings.warn(
            f"{duplicates} duplicate edge(s) merged", DimacsWarning, stacklevel=2
        )
    if declared_m != actual_m:
        warnings.warn(
            f"declared edge count {declared_m} != actual {actual_m}",
            DimacsWarning,
            stacklevel=2,
        )
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def write_dimacs(g: Graph) -> str:
    """Serialize to DIMACS text: `p edge n m` then `e u v` lines with u < v."""
    out = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def gnp_random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi G(n, p) sample; each pair is an edge independently."""
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    if n < 2 or p == 0.0:
        return Graph.from_edges(n, [])
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[mask].tolist(), ju[mask].tolist()))


def gnm_random_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Uniform random graph with exactly n vertices and m distinct edges."""
    max_m = n * (n - 1) // 2
    if m > max_m:
        raise ValueError(f"too many edges: {m} > {max_m}")
    chosen = rng.choice(max_m, size=m, replace=False)
    iu, ju = np.triu_indices(n, k=1)
    return Graph.from_edges(n, zip(iu[chosen].tolist(), ju[chosen].tolist()))
