"""Iterative color-number reduction: DSATUR first solution, then repeated
fixed-k tabu search seeded by a configurable generator, with per-k
trajectory recording."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from .coloring import (
    CompleteColoring,
    PartialColoring,
    is_legal,
    penalty_complete,
    penalty_partial,
)
from .constructive import (
    dsatur,
    greedy_k_complete,
    greedy_k_partial,
    random_k,
    random_k_partial,
)
from .graph import Graph
from .recycle import RecycleConfig, recycle_complete, recycle_partial
from .tabu import (
    DynTenure,
    SearchBudget,
    SearchStatus,
    TenureScheme,
    partialcol_search,
    tabucol_search,
)

__all__ = ["KLevel", "RunRecord", "solve_vcol", "initial_penalty_curve"]

ENGINES = ("tabucol", "partialcol")
INIT_GENERATORS = ("recycle-star", "recycle-t", "greedy", "random")


@dataclass
class KLevel:
    """One k-level of the iterative scheme."""

    k: int
    initial_penalty: int
    legal_found: bool
    time_to_legal: Optional[float]  # seconds from run start; None if not found
    iterations: int
    elapsed: float  # time spent searching this level


@dataclass
class RunRecord:
    """Per-trial trajectory of the iterative scheme."""

    instance: str
    algorithm: str
    init: str
    seed: int
    levels: List[KLevel] = field(default_factory=list)
    best_k: int = 0
    best_coloring: Optional[CompleteColoring] = None
    dsatur_k: int = 0
    total_elapsed: float = 0.0

    def to_json(self) -> str:
        doc = {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "init": self.init,
            "seed": self.seed,
            "dsatur_k": self.dsatur_k,
            "best_k": self.best_k,
            "total_elapsed": self.total_elapsed,
            "levels": [
                {
                    "k": lv.k,
                    "initial_penalty": lv.initial_penalty,
                    "legal_found": lv.legal_found,
                    "time_to_legal": lv.time_to_legal,
                    "iterations": lv.iterations,
                    "elapsed": lv.elapsed,
                }
                for lv in self.levels
            ],
            "best_coloring": (
                self.best_coloring.assign.tolist()
                if self.best_coloring is not None
                else None
            ),
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        doc = json.loads(text)
        rec = cls(
            instance=doc["instance"],
            algorithm=doc["algorithm"],
            init=doc["init"],
            seed=doc["seed"],
            dsatur_k=doc["dsatur_k"],
            best_k=doc["best_k"],
            total_elapsed=doc["total_elapsed"],
        )
        rec.levels = [KLevel(**lv) for lv in doc["levels"]]
        if doc["best_coloring"] is not None:
            rec.best_coloring = CompleteColoring(
                rec.best_k, np.array(doc["best_coloring"], dtype=np.int32)
            )
        return rec


def _build_initial(
    g: Graph,
    engine: str,
    init: str,
    recycle_cfg: RecycleConfig,
    k: int,
    incumbent: CompleteColoring,
    rng: np.random.Generator,
) -> Union[CompleteColoring, PartialColoring]:
    if init in ("recycle-star", "recycle-t"):
        if engine == "tabucol":
            return recycle_complete(g, incumbent, recycle_cfg, rng)
        return recycle_partial(g, incumbent, recycle_cfg, rng)
    if init == "greedy":
        if engine == "tabucol":
            return greedy_k_complete(g, k, rng)
        return greedy_k_partial(g, k, rng)
    if init == "random":
        if engine == "tabucol":
            return random_k(g, k, rng)
        return random_k_partial(g, k, rng)
    raise ValueError(f"unknown init generator {init!r}")


def solve_vcol(
    g: Graph,
    engine: str = "tabucol",
    init: str = "recycle-star",
    recycle_t: int = 1,
    recolor: str = "random",
    scheme: Optional[TenureScheme] = None,
    time_limit: Optional[float] = 600.0,
    iter_cap: Optional[int] = None,
    seed: int = 0,
    instance: str = "",
) -> RunRecord:
    """Run the iterative scheme and return the trial's trajectory.

    The time budget is global across the run; `iter_cap` (if set) bounds
    iterations per k-level, which makes runs reproducible independent of
    wall clock. Every legal coloring recorded is re-verified against the
    graph before it is accepted.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if time_limit is None and iter_cap is None:
        raise ValueError("need a time limit or an iteration cap")
    if scheme is None:
        scheme = DynTenure()
    rng = np.random.default_rng(seed)
    started = time.monotonic()
    deadline = started + time_limit if time_limit is not None else None

    record = RunRecord(
        instance=instance, algorithm=engine, init=init, seed=seed
    )

    first = dsatur(g, rng)
    if not is_legal(g, first):
        raise AssertionError("constructive first solution is illegal")
    k = first.k
    record.dsatur_k = k
    # Penalty for the constructive level is 0 by convention: no generator ran.
    record.levels.append(
        KLevel(
            k=k,
            initial_penalty=0,
            legal_found=True,
            time_to_legal=time.monotonic() - started,
            iterations=0,
            elapsed=time.monotonic() - started,
        )
    )
    incumbent = first
    record.best_k = k
    record.best_coloring = first

    recycle_cfg = RecycleConfig(
        t=None if init == "recycle-star" else recycle_t,
        recolor=recolor,
    )

    while k > 1:
        k -= 1
        if deadline is not None and time.monotonic() >= deadline:
            break
        level_start = time.monotonic()
        sol = _build_initial(g, engine, init, recycle_cfg, k, incumbent, rng)
        if engine == "tabucol":
            init_penalty = penalty_complete(g, sol)
        else:
            init_penalty = penalty_partial(sol)
        remaining = None
        if deadline is not None:
            remaining = max(1e-3, deadline - time.monotonic())
        budget = SearchBudget(time_limit=remaining, max_iters=iter_cap)
        if engine == "tabucol":
            outcome = tabucol_search(g, k, sol, scheme, budget, rng)
        else:
            outcome = partialcol_search(g, k, sol, scheme, budget, rng)

        found = outcome.status == SearchStatus.LEGAL_FOUND
        now = time.monotonic()
        if found:
            best = outcome.best
            if isinstance(best, PartialColoring):
                best = CompleteColoring(k, best.assign)
            if not is_legal(g, best):
                raise AssertionError("engine reported an illegal legal coloring")
            incumbent = best
            record.best_k = k
            record.best_coloring = best
        record.levels.append(
            KLevel(
                k=k,
                initial_penalty=init_penalty,
                legal_found=found,
                time_to_legal=(now - started) if found else None,
                iterations=outcome.iterations,
                elapsed=now - level_start,
            )
        )
        if not found:
            break

    record.total_elapsed = time.monotonic() - started
    return record


def initial_penalty_curve(record: RunRecord) -> List[tuple[int, int]]:
    """(k, initial penalty) pairs; the constructive level counts as 0."""
    return [(lv.k, lv.initial_penalty) for lv in record.levels]
