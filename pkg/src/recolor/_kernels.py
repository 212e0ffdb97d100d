"""Numba kernels for the two tabu-search engines.

The kernels run a bounded number of iterations over persistent state
arrays; the Python wrappers in `tabu` call them in chunks so wall-clock
budgets can be enforced without timers in the hot loop.

Conventions inside the kernels: colors are 0-based, -1 marks an uncolored
vertex, and the Foo tenure state travels in an int64 array laid out as
[reactive value, window counter, window min, window max, window length,
increment, previous penalty, flat tolerance].
"""

import numpy as np
from numba import njit

HUGE = 1 << 60

FOO_VALUE = 0
FOO_COUNTER = 1
FOO_PMIN = 2
FOO_PMAX = 3
FOO_WINDOW = 4
FOO_INCREMENT = 5
FOO_PREV = 6
FOO_TOLERANCE = 7
FOO_SIZE = 8


@njit(cache=True)
def seed_rng(seed):
    np.random.seed(seed)


@njit(cache=True)
def _foo_update(foo, penalty):
    """Reactive tenure update; returns the current base tenure."""
    if penalty != foo[FOO_PREV] and foo[FOO_VALUE] > 0:
        foo[FOO_VALUE] -= 1
    foo[FOO_PREV] = penalty
    foo[FOO_COUNTER] += 1
    if penalty < foo[FOO_PMIN]:
        foo[FOO_PMIN] = penalty
    if penalty > foo[FOO_PMAX]:
        foo[FOO_PMAX] = penalty
    if foo[FOO_COUNTER] >= foo[FOO_WINDOW]:
        if foo[FOO_PMAX] - foo[FOO_PMIN] <= foo[FOO_TOLERANCE]:
            foo[FOO_VALUE] += foo[FOO_INCREMENT]
        foo[FOO_COUNTER] = 0
        foo[FOO_PMIN] = penalty
        foo[FOO_PMAX] = penalty
    return foo[FOO_VALUE]


@njit(cache=True)
def tabucol_chunk(
    indptr,
    indices,
    k,
    color,
    nbr_count,
    own,
    tabu_until,
    it,
    n_iters,
    penalty,
    best_penalty,
    best_color,
    is_dyn,
    alpha,
    gamma_max,
    foo,
):
    """Best-improvement 1-move search over conflicting vertices.

    Returns (iteration counter, penalty, best_penalty, stuck flag); stuck
    means no move exists (k == 1) and the caller should stop.
    """
    n = color.size
    for _ in range(n_iters):
        if penalty == 0:
            break

        n_c = 0
        adm_d = HUGE
        adm_v = -1
        adm_j = -1
        adm_ties = 0
        any_d = HUGE
        any_v = -1
        any_j = -1
        any_ties = 0
        for v in range(n):
            ov = own[v]
            if ov <= 0:
                continue
            n_c += 1
            cur = color[v]
            for j in range(k):
                if j == cur:
                    continue
                d = nbr_count[v, j] - ov
                if d < any_d:
                    any_d = d
                    any_v = v
                    any_j = j
                    any_ties = 1
                elif d == any_d:
                    any_ties += 1
                    if np.random.random() * any_ties < 1.0:
                        any_v = v
                        any_j = j
                tabu = tabu_until[v, j] > it
                if tabu and penalty + d >= best_penalty:
                    continue
                if d < adm_d:
                    adm_d = d
                    adm_v = v
                    adm_j = j
                    adm_ties = 1
                elif d == adm_d:
                    adm_ties += 1
                    if np.random.random() * adm_ties < 1.0:
                        adm_v = v
                        adm_j = j

        if any_v < 0:
            return it, penalty, best_penalty, True

        if adm_v >= 0:
            v = adm_v
            j = adm_j
            d = adm_d
        else:
            # Everything is tabu; escape with the best tabu move.
            v = any_v
            j = any_j
            d = any_d

        old = color[v]
        color[v] = j
        penalty += d
        for idx in range(indptr[v], indptr[v + 1]):
            u = indices[idx]
            nbr_count[u, old] -= 1
            nbr_count[u, j] += 1
            cu = color[u]
            if cu == old or cu == j:
                own[u] = nbr_count[u, cu]
        own[v] = nbr_count[v, j]

        if is_dyn:
            t = np.int64(alpha * n_c) + np.random.randint(0, gamma_max + 1)
        else:
            t = _foo_update(foo, penalty) + np.random.randint(0, gamma_max + 1)
        tabu_until[v, old] = it + 1 + t

        it += 1
        if penalty < best_penalty:
            best_penalty = penalty
            for x in range(n):
                best_color[x] = color[x]
    return it, penalty, best_penalty, False


@njit(cache=True)
def partialcol_chunk(
    indptr,
    indices,
    k,
    color,
    nbr_count,
    tabu_until,
    it,
    n_iters,
    penalty,
    best_penalty,
    best_color,
    is_dyn,
    alpha,
    gamma_max,
    foo,
):
    """Best-improvement i-swap search over uncolored vertices.

    A move colors an uncolored vertex and uncolors its same-colored
    neighbors; the conflict-free invariant is preserved by construction.
    """
    n = color.size
    for _ in range(n_iters):
        if penalty == 0:
            break

        adm_d = HUGE
        adm_u = -1
        adm_j = -1
        adm_ties = 0
        any_d = HUGE
        any_u = -1
        any_j = -1
        any_ties = 0
        for u in range(n):
            if color[u] != -1:
                continue
            for j in range(k):
                d = nbr_count[u, j] - 1
                if d < any_d:
                    any_d = d
                    any_u = u
                    any_j = j
                    any_ties = 1
                elif d == any_d:
                    any_ties += 1
                    if np.random.random() * any_ties < 1.0:
                        any_u = u
                        any_j = j
                tabu = tabu_until[u, j] > it
                if tabu and penalty + d >= best_penalty:
                    continue
                if d < adm_d:
                    adm_d = d
                    adm_u = u
                    adm_j = j
                    adm_ties = 1
                elif d == adm_d:
                    adm_ties += 1
                    if np.random.random() * adm_ties < 1.0:
                        adm_u = u
                        adm_j = j

        if any_u < 0:
            return it, penalty, best_penalty, True

        if adm_u >= 0:
            u = adm_u
            j = adm_j
            d = adm_d
        else:
            u = any_u
            j = any_j
            d = any_d

        color[u] = j
        penalty += d
        for idx in range(indptr[u], indptr[u + 1]):
            w = indices[idx]
            nbr_count[w, j] += 1

        if is_dyn:
            t = np.int64(alpha * penalty) + np.random.randint(0, gamma_max + 1)
        else:
            t = _foo_update(foo, penalty) + np.random.randint(0, gamma_max + 1)

        for idx in range(indptr[u], indptr[u + 1]):
            w = indices[idx]
            if color[w] == j:
                color[w] = -1
                tabu_until[w, j] = it + 1 + t
                for idx2 in range(indptr[w], indptr[w + 1]):
                    x = indices[idx2]
                    nbr_count[x, j] -= 1

        it += 1
        if penalty < best_penalty:
            best_penalty = penalty
            for x in range(n):
                best_color[x] = color[x]
    return it, penalty, best_penalty, False
