"""Campaign runner: multi-trial seeded experiments over instance files,
with summary statistics and figure-data emission, plus Carter timetabling
conversion and instance statistics."""

from __future__ import annotations

import csv
import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .driver import RunRecord, solve_vcol
from .graph import DegreeStats, Graph, degree_stats, parse_dimacs, write_dimacs
from .tabu import DynTenure, FooTenure, TenureScheme

__all__ = [
    "CampaignConfig",
    "SummaryRow",
    "mix_seed",
    "run_campaign",
    "convert_carter",
    "instance_stats",
]

SUMMARY_FIELDS = [
    "instance",
    "algorithm",
    "tenure",
    "init",
    "trials",
    "min_k",
    "attain",
    "mean_dsatur_k",
    "mean_time_s",
]

_SEED_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def mix_seed(base_seed: int, trial: int) -> int:
    """Decorrelated per-trial seed: base XOR fixed-odd-multiplier mix."""
    return (base_seed ^ ((trial * _SEED_MIX) & _MASK64)) & _MASK64


@dataclass
class CampaignConfig:
    instances: List[str]
    algorithm: str = "tabucol"
    tenure: str = "dyn"
    init: str = "recycle-star"
    recycle_t: int = 1
    recolor: str = "random"
    trials: int = 50
    time_limit: Optional[float] = 600.0
    iter_cap: Optional[int] = None
    base_seed: int = 0
    jobs: int = 1
    outdir: Optional[str] = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.tenure not in ("dyn", "foo"):
            raise ValueError(f"unknown tenure scheme {self.tenure!r}")
        if self.time_limit is None and self.iter_cap is None:
            raise ValueError("campaign needs a time limit or an iteration cap")

    def scheme(self) -> TenureScheme:
        return DynTenure() if self.tenure == "dyn" else FooTenure()

    @classmethod
    def from_json(cls, text: str) -> "CampaignConfig":
        return cls(**json.loads(text))


@dataclass
class SummaryRow:
    instance: str
    min_k: int
    attain: int
    mean_dsatur_k: float
    mean_time_s: Optional[float]


def _run_trial(args: Tuple) -> RunRecord:
    path, cfg_dict, trial = args
    cfg = CampaignConfig(**cfg_dict)
    with open(path) as fh:
        g = parse_dimacs(fh.read())
    return solve_vcol(
        g,
        engine=cfg.algorithm,
        init=cfg.init,
        recycle_t=cfg.recycle_t,
        recolor=cfg.recolor,
        scheme=cfg.scheme(),
        time_limit=cfg.time_limit,
        iter_cap=cfg.iter_cap,
        seed=mix_seed(cfg.base_seed, trial),
        instance=Path(path).stem,
    )


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.6g}"


def summarize(records: Sequence[RunRecord], deterministic: bool) -> SummaryRow:
    """Aggregate one instance's trials; `deterministic` blanks wall-clock
    fields so iteration-capped campaigns reproduce byte-identical CSVs."""
    min_k = min(r.best_k for r in records)
    attaining = [r for r in records if r.best_k == min_k]
    times = [
        lv.time_to_legal
        for r in attaining
        for lv in r.levels
        if lv.k == min_k and lv.legal_found and lv.time_to_legal is not None
    ]
    mean_time = (
        None if deterministic or not times else sum(times) / len(times)
    )
    return SummaryRow(
        instance=records[0].instance,
        min_k=min_k,
        attain=len(attaining),
        mean_dsatur_k=sum(r.dsatur_k for r in records) / len(records),
        mean_time_s=mean_time,
    )


def _write_summary_csv(
    path: Path, cfg: CampaignConfig, rows: Sequence[SummaryRow]
) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SUMMARY_FIELDS)
        for row in rows:
            w.writerow(
                [
                    row.instance,
                    cfg.algorithm,
                    cfg.tenure,
                    cfg.init,
                    cfg.trials,
                    row.min_k,
                    row.attain,
                    _fmt(row.mean_dsatur_k),
                    _fmt(row.mean_time_s),
                ]
            )


def _write_penalty_curve(path: Path, records: Sequence[RunRecord]) -> None:
    by_k: Dict[int, List[int]] = {}
    for rec in records:
        for lv in rec.levels:
            by_k.setdefault(lv.k, []).append(lv.initial_penalty)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["k", "mean_initial_penalty", "stddev"])
        for k in sorted(by_k, reverse=True):
            vals = by_k[k]
            mean = sum(vals) / len(vals)
            sd = statistics.pstdev(vals) if len(vals) > 1 else 0.0
            w.writerow([k, _fmt(mean), _fmt(sd)])


def _write_trajectory(path: Path, records: Sequence[RunRecord]) -> None:
    by_k: Dict[int, List[float]] = {}
    for rec in records:
        for lv in rec.levels:
            if lv.legal_found and lv.time_to_legal is not None:
                by_k.setdefault(lv.k, []).append(lv.time_to_legal)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["elapsed_s", "k"])
        for k in sorted(by_k, reverse=True):
            vals = by_k[k]
            w.writerow([_fmt(sum(vals) / len(vals)), k])


def run_campaign(
    cfg: CampaignConfig,
) -> Tuple[Dict[str, List[RunRecord]], List[SummaryRow]]:
    """Execute all trials, optionally in parallel, and emit result files.

    Returns per-instance RunRecords plus one SummaryRow per instance.
    With an outdir set, writes per-trial JSON, `summary.csv`, and the
    penalty-curve / trajectory CSVs behind the figure data.
    """
    jobs = int(os.environ.get("RECOLOR_JOBS", cfg.jobs))
    cfg_dict = {
        k: v for k, v in cfg.__dict__.items() if k not in ("jobs", "outdir")
    }
    cfg_dict["jobs"] = 1
    tasks = [
        (path, cfg_dict, trial)
        for path in cfg.instances
        for trial in range(cfg.trials)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial, tasks))
    else:
        results = [_run_trial(t) for t in tasks]

    by_instance: Dict[str, List[RunRecord]] = {}
    for rec in results:
        by_instance.setdefault(rec.instance, []).append(rec)

    deterministic = cfg.time_limit is None
    rows = [summarize(recs, deterministic) for recs in by_instance.values()]

    if cfg.outdir is not None:
        outdir = Path(cfg.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, recs in by_instance.items():
            for i, rec in enumerate(recs):
                (outdir / f"trial_{name}_{i}.json").write_text(rec.to_json())
            _write_penalty_curve(outdir / f"penalty_curve_{name}.csv", recs)
            _write_trajectory(outdir / f"trajectory_{name}.csv", recs)
        _write_summary_csv(outdir / "summary.csv", cfg, rows)
    return by_instance, rows


def convert_carter(text: str) -> Graph:
    """Conflict graph from a Carter per-student file.

    Each line lists one student's exam identifiers; exams co-occurring on a
    line become adjacent. Exam ids are densely renumbered in sorted order.
    """
    students: List[List[int]] = []
    ids: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            exams = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"non-integer exam id at line {lineno}") from None
        students.append(exams)
        ids.update(exams)
    if not ids:
        raise ValueError("empty student file")
    index = {exam: i for i, exam in enumerate(sorted(ids))}
    edges = set()
    for exams in students:
        for i, a in enumerate(exams):
            for b in exams[i + 1:]:
                if a != b:
                    u, v = index[a], index[b]
                    edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(len(ids), edges)


def instance_stats(g: Graph) -> dict:
    """n, m, max degree, and degree CV for reporting."""
    stats: DegreeStats = degree_stats(g)
    return {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "mean_degree": stats.mean,
        "stddev_degree": stats.stddev,
        "degree_cv_percent": stats.cv,
    }
