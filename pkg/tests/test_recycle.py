import numpy as np
import pytest

from recolor import (
    CompleteColoring,
    RecycleConfig,
    color_classes,
    dsatur,
    gnp_random_graph,
    is_conflict_free,
    least_selection_recolor,
    penalty_complete,
    penalty_partial,
    recycle_complete,
    recycle_partial,
    select_smallest_class,
)

from conftest import cycle_graph, edgeless, star_graph, triangle


def test_select_smallest_class():
    assert select_smallest_class(CompleteColoring(3, [1, 1, 1, 2, 3, 3])) == 2
    assert select_smallest_class(CompleteColoring(3, [1, 1, 2, 2, 3, 3])) == 1
    assert select_smallest_class(CompleteColoring(1, [1, 1])) == 1


def test_least_selection_recolor_examples():
    g = cycle_graph(4)  # vertex 0 adjacent to 1 and 3
    star = star_graph(3)
    assign = np.array([0, 1, 1, 2], dtype=np.int32)  # center uncolored
    assert least_selection_recolor(star, assign, 0, [1, 2, 3]) == 3
    assert least_selection_recolor(star, assign, 0, [1, 2]) == 2
    isolated = np.zeros(4, dtype=np.int32)
    assert least_selection_recolor(g, isolated, 0, [1, 2]) == 1


def test_recycle_complete_c5_least_selection(rng):
    g = cycle_graph(5)
    c = CompleteColoring(3, [1, 2, 1, 2, 3])
    # Exhaustive check of the two possible recolorings of the lone
    # smallest-class vertex: either surviving color conflicts exactly once.
    for col in (1, 2):
        trial = np.array([1, 2, 1, 2, col], dtype=np.int32)
        pen = sum(1 for u, v in g.edges() if trial[u] == trial[v])
        assert pen == 1

    out = recycle_complete(g, c, RecycleConfig(recolor="least"), rng)
    assert out.k == 2
    assert out.assign[:4].tolist() == [1, 2, 1, 2]
    assert penalty_complete(g, out) == 1
    assert penalty_complete(g, out) <= g.n * g.max_degree / (out.k * (out.k + 1))


def test_recycle_complete_empty_smallest_class(rng):
    g = triangle()
    # Color 3 declared but unused: nothing is recolored, penalty stays 0.
    c = CompleteColoring(3, [1, 2, 1])
    g2 = edgeless(3)
    out = recycle_complete(g2, c, RecycleConfig(), rng)
    assert out.k == 2
    assert penalty_complete(g2, out) == 0


def test_recycle_r_kplus1_degenerates_to_random(rng):
    # With t = k+1 every vertex is recolored uniformly over the k
    # surviving colors; check all k^n outcomes occur for a tiny case.
    g = edgeless(2)
    c = CompleteColoring(2, [1, 2])
    seen = set()
    for _ in range(300):
        out = recycle_complete(g, c, RecycleConfig(t=2), rng)
        assert out.k == 1
        seen.add(tuple(out.assign.tolist()))
    assert seen == {(1, 1)}

    g3 = edgeless(2)
    c3 = CompleteColoring(3, [1, 2, 3][:2])
    seen = set()
    for _ in range(400):
        out = recycle_complete(g3, c3, RecycleConfig(t=3), rng)
        seen.add(tuple(out.assign.tolist()))
    assert seen == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_recycle_partial_c5(rng):
    g = cycle_graph(5)
    c = CompleteColoring(3, [1, 2, 1, 2, 3])
    out = recycle_partial(g, c, RecycleConfig(), rng)
    assert out.k == 2
    assert penalty_partial(out) == 1
    assert is_conflict_free(g, out)
    assert penalty_partial(out) <= g.n / (out.k + 1)


def test_recycle_partial_all_classes(rng):
    g = cycle_graph(5)
    c = CompleteColoring(3, [1, 2, 1, 2, 3])
    out = recycle_partial(g, c, RecycleConfig(t=3), rng)
    assert penalty_partial(out) == 5


def test_recycle_errors(rng):
    g = triangle()
    illegal = CompleteColoring(3, [1, 1, 2])
    with pytest.raises(ValueError, match="not legal"):
        recycle_complete(g, illegal, RecycleConfig(), rng)
    legal = CompleteColoring(3, [1, 2, 3])
    with pytest.raises(ValueError, match="exceeds"):
        recycle_complete(g, legal, RecycleConfig(t=4), rng)
    single = CompleteColoring(1, [1])
    with pytest.raises(ValueError, match="at least 2"):
        recycle_complete(edgeless(1), single, RecycleConfig(), rng)


def _corpus(rng, count=60):
    for _ in range(count):
        n = int(rng.integers(10, 40))
        p = float(rng.choice([0.1, 0.3, 0.5]))
        g = gnp_random_graph(n, p, rng)
        c = dsatur(g, rng)
        if c.k >= 2:
            yield g, c


def test_proposition_bounds_on_random_corpus(rng):
    for g, c in _corpus(rng):
        k = c.k - 1
        bound_any = g.n * g.max_degree / (k + 1)
        bound_least = g.n * g.max_degree / (k * (k + 1))
        rand = recycle_complete(g, c, RecycleConfig(recolor="random"), rng)
        least = recycle_complete(g, c, RecycleConfig(recolor="least"), rng)
        part = recycle_partial(g, c, RecycleConfig(), rng)
        assert penalty_complete(g, rand) <= bound_any
        assert penalty_complete(g, least) <= bound_least
        assert penalty_partial(part) <= g.n / (k + 1)
        assert is_conflict_free(g, part)


def test_untouched_classes_preserved(rng):
    for g, c in _corpus(rng, count=20):
        eps = select_smallest_class(c)
        out = recycle_complete(g, c, RecycleConfig(), rng)
        for v in range(g.n):
            old = int(c.assign[v])
            if old != eps:
                expected = old if old < eps else old - 1
                assert int(out.assign[v]) == expected


def test_recycle_partial_keeps_other_classes(rng):
    for g, c in _corpus(rng, count=20):
        eps = select_smallest_class(c)
        out = recycle_partial(g, c, RecycleConfig(), rng)
        for v in range(g.n):
            old = int(c.assign[v])
            if old == eps:
                assert int(out.assign[v]) == 0
            else:
                expected = old if old < eps else old - 1
                assert int(out.assign[v]) == expected
