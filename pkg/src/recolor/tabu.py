"""Tabu-search engines for fixed-k coloring.

Two engines share one interface: `tabucol_search` minimizes conflicting
edges over complete k-colorings; `partialcol_search` minimizes uncolored
vertices over conflict-free partial k-colorings. Tenure is set by a
dynamic scheme (conflict-count based) or a reactive one (fluctuation of
the objective).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np

from . import _kernels
from .coloring import (
    UNCOLORED,
    CompleteColoring,
    PartialColoring,
    penalty_complete,
    penalty_partial,
)
from .graph import Graph

__all__ = [
    "DynTenure",
    "FooTenure",
    "TenureScheme",
    "FooState",
    "tenure",
    "SearchBudget",
    "SearchStatus",
    "SearchOutcome",
    "tabucol_search",
    "partialcol_search",
]

CHUNK = 256  # wall-clock checked between chunks, never inside the hot loop


@dataclass(frozen=True)
class DynTenure:
    """Tenure = floor(alpha * conflicting-vertex count) + U{0..gamma_max}."""

    alpha: float = 0.6
    gamma_max: int = 9

    def __post_init__(self) -> None:
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")


@dataclass(frozen=True)
class FooTenure:
    """Reactive tenure driven by fluctuation of the objective.

    If the penalty stays within `flat_tolerance` over a detection window,
    the reactive value jumps by an increment; it decays by 1 on every move
    that changes the penalty, with floor 0. Window and increment are
    sampled per run from the given ranges (increment defaults to
    [n/20, n/10]). A U{0..gamma_max} term is added on top so tenure never
    collapses to a constant 0.
    """

    window_range: Tuple[int, int] = (500, 1500)
    increment_range: Optional[Tuple[int, int]] = None
    flat_tolerance: int = 0
    gamma_max: int = 9


TenureScheme = Union[DynTenure, FooTenure]


class FooState:
    """Python mirror of the kernel's reactive-tenure bookkeeping."""

    def __init__(self, window: int, increment: int, flat_tolerance: int = 0):
        self.value = 0
        self.window = window
        self.increment = increment
        self.flat_tolerance = flat_tolerance
        self.counter = 0
        self.pmin: Optional[int] = None
        self.pmax: Optional[int] = None
        self.prev: Optional[int] = None

    def update(self, penalty: int) -> int:
        if self.prev is not None and penalty != self.prev and self.value > 0:
            self.value -= 1
        self.prev = penalty
        self.counter += 1
        self.pmin = penalty if self.pmin is None else min(self.pmin, penalty)
        self.pmax = penalty if self.pmax is None else max(self.pmax, penalty)
        if self.counter >= self.window:
            if self.pmax - self.pmin <= self.flat_tolerance:
                self.value += self.increment
            self.counter = 0
            self.pmin = penalty
            self.pmax = penalty
        return self.value

    def to_array(self) -> np.ndarray:
        arr = np.zeros(_kernels.FOO_SIZE, dtype=np.int64)
        arr[_kernels.FOO_VALUE] = self.value
        arr[_kernels.FOO_WINDOW] = self.window
        arr[_kernels.FOO_INCREMENT] = self.increment
        arr[_kernels.FOO_TOLERANCE] = self.flat_tolerance
        arr[_kernels.FOO_PREV] = -1
        arr[_kernels.FOO_PMIN] = 1 << 40
        arr[_kernels.FOO_PMAX] = -1
        return arr


def tenure(
    scheme: TenureScheme,
    *,
    n_c: int = 0,
    foo_state: Optional[FooState] = None,
    gamma: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> int:
    """Current tabu tenure under a scheme.

    For Dyn, `n_c` is the conflicting-vertex count; for Foo, `foo_state`
    carries the reactive value. `gamma` pins the random term for tests,
    otherwise it is drawn from `rng` (or 0 without one).
    """
    if isinstance(scheme, DynTenure):
        base = int(scheme.alpha * n_c)
        gmax = scheme.gamma_max
    elif isinstance(scheme, FooTenure):
        if foo_state is None:
            raise ValueError("Foo tenure requires reactive state")
        base = foo_state.value
        gmax = scheme.gamma_max
    else:
        raise TypeError(f"unknown tenure scheme {scheme!r}")
    if gamma is None:
        gamma = int(rng.integers(gmax + 1)) if rng is not None else 0
    return base + gamma


@dataclass(frozen=True)
class SearchBudget:
    """Termination bounds; at least one of the two must be set."""

    time_limit: Optional[float] = None
    max_iters: Optional[int] = None

    def __post_init__(self) -> None:
        if self.time_limit is None and self.max_iters is None:
            raise ValueError("budget needs a time limit or an iteration cap")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.max_iters is not None and self.max_iters < 0:
            raise ValueError("iteration cap must be non-negative")


class SearchStatus(Enum):
    LEGAL_FOUND = "legal_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass
class SearchOutcome:
    status: SearchStatus
    best: Union[CompleteColoring, PartialColoring]
    best_penalty: int
    iterations: int
    elapsed: float
    # (iteration, best penalty) samples, one per kernel chunk
    best_trace: List[Tuple[int, int]] = field(default_factory=list)


def _foo_array(
    scheme: FooTenure, n: int, rng: np.random.Generator
) -> np.ndarray:
    lo, hi = scheme.window_range
    window = int(rng.integers(lo, hi + 1))
    if scheme.increment_range is not None:
        ilo, ihi = scheme.increment_range
    else:
        ilo, ihi = max(1, n // 20), max(2, n // 10)
    increment = int(rng.integers(ilo, ihi + 1))
    state = FooState(window, increment, scheme.flat_tolerance)
    return state.to_array()


def _run_chunks(
    kernel,
    args: dict,
    budget: SearchBudget,
    started: float,
) -> Tuple[int, int, int, List[Tuple[int, int]]]:
    """Drive a kernel in chunks until legal, stuck, or out of budget."""
    it = 0
    penalty = args["penalty"]
    best_penalty = args["best_penalty"]
    trace: List[Tuple[int, int]] = [(0, best_penalty)]
    deadline = (
        started + budget.time_limit if budget.time_limit is not None else None
    )
    while penalty > 0:
        if budget.max_iters is not None and it >= budget.max_iters:
            break
        if deadline is not None and time.monotonic() >= deadline:
            break
        chunk = CHUNK
        if budget.max_iters is not None:
            chunk = min(chunk, budget.max_iters - it)
        it, penalty, best_penalty, stuck = kernel(
            args["indptr"],
            args["indices"],
            args["k"],
            args["color"],
            args["nbr_count"],
            *args["extra"],
            args["tabu_until"],
            it,
            chunk,
            penalty,
            best_penalty,
            args["best_color"],
            args["is_dyn"],
            args["alpha"],
            args["gamma_max"],
            args["foo"],
        )
        trace.append((it, best_penalty))
        if stuck:
            break
    return it, penalty, best_penalty, trace


def tabucol_search(
    g: Graph,
    k: int,
    init: CompleteColoring,
    scheme: TenureScheme,
    budget: SearchBudget,
    rng: np.random.Generator,
    collect_state: bool = False,
) -> SearchOutcome:
    """Minimize conflicting edges over complete k-colorings.

    Moves recolor a conflicting vertex; the abandoned (vertex, color) pair
    becomes tabu; aspiration admits tabu moves that beat the incumbent.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if init.n != g.n:
        raise ValueError("initial coloring length mismatch")
    if init.k != k:
        raise ValueError(f"initial coloring has k={init.k}, expected {k}")
    started = time.monotonic()
    n = g.n
    indptr, indices = g.csr
    color = init.assign.astype(np.int64) - 1
    nbr_count = np.zeros((n, k), dtype=np.int32)
    if n:
        np.add.at(
            nbr_count,
            (np.repeat(np.arange(n), np.diff(indptr)), color[indices]),
            1,
        )
    own = nbr_count[np.arange(n), color].astype(np.int32) if n else np.zeros(0, np.int32)
    penalty = int(own.sum()) // 2
    tabu_until = np.zeros((n, k), dtype=np.int64)
    best_color = color.copy()

    _kernels.seed_rng(int(rng.integers(2**31 - 1)))
    is_dyn = isinstance(scheme, DynTenure)
    foo = (
        np.zeros(_kernels.FOO_SIZE, dtype=np.int64)
        if is_dyn
        else _foo_array(scheme, n, rng)
    )
    args = {
        "indptr": indptr,
        "indices": indices,
        "k": k,
        "color": color,
        "nbr_count": nbr_count,
        "extra": (own,),
        "tabu_until": tabu_until,
        "penalty": penalty,
        "best_penalty": penalty,
        "best_color": best_color,
        "is_dyn": is_dyn,
        "alpha": scheme.alpha if is_dyn else 0.0,
        "gamma_max": scheme.gamma_max,
        "foo": foo,
    }
    it, penalty, best_penalty, trace = _run_chunks(
        _kernels.tabucol_chunk, args, budget, started
    )
    status = (
        SearchStatus.LEGAL_FOUND if best_penalty == 0 else SearchStatus.BUDGET_EXHAUSTED
    )
    outcome = SearchOutcome(
        status=status,
        best=CompleteColoring(k, (best_color + 1).astype(np.int32)),
        best_penalty=best_penalty,
        iterations=it,
        elapsed=time.monotonic() - started,
        best_trace=trace,
    )
    if collect_state:
        outcome.debug_state = {  # type: ignore[attr-defined]
            "color": color,
            "nbr_count": nbr_count,
            "own": own,
            "penalty": penalty,
        }
    return outcome


def partialcol_search(
    g: Graph,
    k: int,
    init: PartialColoring,
    scheme: TenureScheme,
    budget: SearchBudget,
    rng: np.random.Generator,
    collect_state: bool = False,
) -> SearchOutcome:
    """Minimize uncolored vertices over conflict-free partial k-colorings.

    An i-swap colors an uncolored vertex with i and uncolors its color-i
    neighbors; each uncolored (neighbor, i) pair becomes tabu.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if init.n != g.n:
        raise ValueError("initial coloring length mismatch")
    if init.k != k:
        raise ValueError(f"initial coloring has k={init.k}, expected {k}")
    started = time.monotonic()
    n = g.n
    indptr, indices = g.csr
    color = init.assign.astype(np.int64) - 1  # uncolored becomes -1
    nbr_count = np.zeros((n, k), dtype=np.int32)
    if n:
        rows = np.repeat(np.arange(n), np.diff(indptr))
        cols = color[indices]
        mask = cols >= 0
        np.add.at(nbr_count, (rows[mask], cols[mask]), 1)
    penalty = int(np.count_nonzero(color == -1))
    tabu_until = np.zeros((n, k), dtype=np.int64)
    best_color = color.copy()

    _kernels.seed_rng(int(rng.integers(2**31 - 1)))
    is_dyn = isinstance(scheme, DynTenure)
    foo = (
        np.zeros(_kernels.FOO_SIZE, dtype=np.int64)
        if is_dyn
        else _foo_array(scheme, n, rng)
    )
    args = {
        "indptr": indptr,
        "indices": indices,
        "k": k,
        "color": color,
        "nbr_count": nbr_count,
        "extra": (),
        "tabu_until": tabu_until,
        "penalty": penalty,
        "best_penalty": penalty,
        "best_color": best_color,
        "is_dyn": is_dyn,
        "alpha": scheme.alpha if is_dyn else 0.0,
        "gamma_max": scheme.gamma_max,
        "foo": foo,
    }
    it, penalty, best_penalty, trace = _run_chunks(
        _kernels.partialcol_chunk, args, budget, started
    )
    status = (
        SearchStatus.LEGAL_FOUND if best_penalty == 0 else SearchStatus.BUDGET_EXHAUSTED
    )
    best = (best_color + 1).astype(np.int32)
    best[best_color == -1] = UNCOLORED
    outcome = SearchOutcome(
        status=status,
        best=PartialColoring(k, best),
        best_penalty=best_penalty,
        iterations=it,
        elapsed=time.monotonic() - started,
        best_trace=trace,
    )
    if collect_state:
        outcome.debug_state = {  # type: ignore[attr-defined]
            "color": color,
            "nbr_count": nbr_count,
            "penalty": penalty,
        }
    return outcome
