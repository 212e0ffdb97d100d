"""Synthetic stand-ins for the benchmark-file calibrations.

Random G(n, p) graphs share the degree structure of the standard DSJC
instances, so these tests exercise the same measurement machinery as the
instance-gated acceptance criteria without requiring any external files.
"""

import numpy as np

from recolor import (
    DynTenure,
    RecycleConfig,
    SearchBudget,
    SearchStatus,
    dsatur,
    gnp_random_graph,
    greedy_k_complete,
    is_legal,
    penalty_complete,
    recycle_complete,
    tabucol_search,
)


def test_dsatur_mean_on_sparse_500():
    # G(500, 0.1) is distributed like DSJC500.1; DSATUR lands in the
    # mid-teens there with small spread.
    ks = []
    for seed in range(20):
        rng = np.random.default_rng(seed)
        g = gnp_random_graph(500, 0.1, rng)
        c = dsatur(g, rng)
        assert is_legal(g, c)
        ks.append(c.k)
    mean_k = sum(ks) / len(ks)
    assert 14.5 <= mean_k <= 17.0


def test_recycle_beats_greedy_initial_penalty_on_dense_graph():
    # Descend a few k-levels on a dense graph, then compare mean initial
    # penalties of the generators at the lowest legal level reached.
    rng = np.random.default_rng(500)
    g = gnp_random_graph(200, 0.5, rng)
    incumbent = dsatur(g, rng)
    start_k = incumbent.k
    levels = 0
    while levels < 5:
        k = incumbent.k - 1
        init = recycle_complete(g, incumbent, RecycleConfig(), rng)
        out = tabucol_search(
            g, k, init, DynTenure(), SearchBudget(max_iters=200_000), rng
        )
        if out.status != SearchStatus.LEGAL_FOUND:
            break
        incumbent = out.best
        levels += 1
    assert levels >= 3, f"descent stalled after {levels} levels from {start_k}"

    trials = 20
    k = incumbent.k - 1
    star = [
        penalty_complete(g, recycle_complete(g, incumbent, RecycleConfig(), rng))
        for _ in range(trials)
    ]
    gr = [penalty_complete(g, greedy_k_complete(g, k, rng)) for _ in range(trials)]
    m_star = sum(star) / trials
    m_gr = sum(gr) / trials
    assert m_star < m_gr
