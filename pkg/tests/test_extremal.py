"""Extremal family constructions, avoidance counts, D_t, local-lemma checks."""

import random
from fractions import Fraction

import pytest

from treefam.counting import (
    count_at_least,
    count_matching_family,
    count_trees_containing,
)
from treefam.extremal import (
    balanced_forest,
    blocked_Dt,
    brute_force_max_t_intersecting,
    conjecture_scan,
    count_avoiding,
    example_closed_form,
    example_forest,
    family_F_ntj_size,
    lemma_notstar_check,
    line_graph_adjacency,
    llll_condition_check,
    min_pairwise_intersection,
    realize_stars_plus_edge,
    realize_threshold_family,
    realize_trivial_family,
    stars_plus_edge_size,
    trivial_family_size,
)
from treefam.trees import (
    Forest,
    Tree,
    cayley_count,
    is_d_star_like,
    iter_forests,
    sample_uniform_tree,
)


# -- construction sizes -------------------------------------------------------


def test_trivial_family_size():
    assert trivial_family_size(6, Forest(6, [(1, 2), (3, 4)])) == 144
    assert trivial_family_size(5, Forest(5, [(1, 2), (2, 3)])) == 15
    # matchings beat paths at the same edge count
    assert 144 >= trivial_family_size(6, Forest(6, [(1, 2), (2, 3)])) == 108
    with pytest.raises(ValueError):
        trivial_family_size(5, [(1, 2), (2, 3), (1, 3)])


def test_stars_plus_edge_size():
    assert stars_plus_edge_size(5) == 53
    assert stars_plus_edge_size(6) == 436
    with pytest.raises(ValueError):
        stars_plus_edge_size(2)


@pytest.mark.parametrize("n", [5, 6])
def test_stars_plus_edge_realization(n):
    masks = realize_stars_plus_edge(n)
    assert len(masks) == len(set(masks)) == stars_plus_edge_size(n)
    assert min_pairwise_intersection(masks) >= 1


def test_trivial_family_realization_is_t_intersecting():
    for n, t in ((5, 1), (5, 2), (6, 2), (6, 3)):
        f = balanced_forest(n, t)
        masks = realize_trivial_family(n, f)
        assert len(masks) == count_matching_family(n, t)
        assert min_pairwise_intersection(masks) >= t


def test_threshold_family_realization():
    """Any two members share >= 2(t+j) - (t+2j) = t edges of F, structurally."""
    n, t, j = 6, 2, 1
    f = balanced_forest(n, t + 2 * j)
    masks = realize_threshold_family(n, f, t + j)
    assert len(masks) == family_F_ntj_size(n, t, j)
    assert min_pairwise_intersection(masks) >= t


def test_family_spec_roundtrip_and_verify():
    from treefam.extremal import FamilySpec

    fs = FamilySpec("threshold", 6, 2, edges=[(1, 2), (2, 3), (4, 5), (5, 6)],
                    threshold=3)
    fs2 = FamilySpec.from_json(fs.to_json())
    ok, mpi, size = fs2.verify()
    assert ok and size == 117 and mpi >= 2

    ok, mpi, size = FamilySpec("stars_plus_edge", 5, 1).verify()
    assert ok and size == 53

    # explicit members: the claim is actually checked, not trusted
    two_paths = [[(1, 2), (2, 3), (3, 4)], [(1, 3), (2, 3), (2, 4)]]
    assert FamilySpec("explicit", 4, 1, members=two_paths).verify()[0]
    assert not FamilySpec("explicit", 4, 2, members=two_paths).verify()[0]

    with pytest.raises(ValueError):
        FamilySpec("mystery", 5, 1)
    with pytest.raises(ValueError):
        FamilySpec("trivial", 5, 1)  # no edges
    with pytest.raises(ValueError):
        FamilySpec("explicit", 4, 1, members=[[(1, 2)]]).realize()  # not spanning


# -- balanced forests ---------------------------------------------------------


def test_balanced_forest_shapes_and_sizes():
    assert balanced_forest(5, 0).edges == ()
    assert balanced_forest(9, 6).edges == (
        (1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9),
    )
    f = balanced_forest(7, 3)
    assert f.component_sizes() == (2, 2, 2)
    assert f.isolated_vertices() == (7,)
    # larger components first, on consecutive blocks
    f = balanced_forest(7, 4)
    assert f.component_sizes() == (3, 2, 2)
    assert f.edges[0:2] == ((1, 2), (2, 3))
    with pytest.raises(ValueError):
        balanced_forest(5, 5)


def test_balanced_forest_component_shapes():
    path = balanced_forest(8, 6, "path")
    star = balanced_forest(8, 6, "star")
    cat = balanced_forest(8, 6, "caterpillar")
    for f in (path, star, cat):
        assert f.component_sizes() == (4, 4)
        assert len(f.edges) == 6
    assert star.edges[:3] == ((1, 2), (1, 3), (1, 4))
    assert path.edges[:3] == ((1, 2), (2, 3), (3, 4))
    assert cat != path and cat != star
    with pytest.raises(ValueError):
        balanced_forest(8, 6, "wheel")


def test_family_F_ntj_reduces_to_trivial_at_j0():
    for n, t in ((6, 2), (7, 3), (12, 3)):
        assert family_F_ntj_size(n, t, 0) == count_matching_family(n, t)
    with pytest.raises(ValueError):
        family_F_ntj_size(6, 2, 2)  # t + 2j > n - 1


def test_family_F_ntj_matches_enumeration():
    n, t, j = 6, 2, 1
    f = balanced_forest(n, t + 2 * j)
    from treefam.counting import verify_by_enumeration

    oracle = verify_by_enumeration(
        n, lambda tr: len(tr.edge_set() & f.edge_set()) >= t + j
    )
    assert family_F_ntj_size(n, t, j) == oracle


# -- the even-t window --------------------------------------------------------


def test_example_closed_form_15_8():
    rep = example_closed_form(15, 8)
    assert rep.threshold_size == 74_631_375
    assert rep.trivial_paths_size == 61_509_375
    assert rep.quadratic == -48
    assert rep.threshold_larger


def test_example_forest_and_ie_agree():
    for n, t in ((15, 8), (18, 10)):
        rep = example_closed_form(n, t)
        f = example_forest(n, t)
        assert f.component_sizes() == (3,) * (t // 2 + 1)
        assert count_at_least(n, f, t + 1) == rep.threshold_size
        assert count_trees_containing(n, _paths_only(n, t)) == rep.trivial_paths_size


def _paths_only(n, t):
    """t/2 disjoint 3-vertex paths (the baseline construction)."""
    edges = []
    for i in range(t // 2):
        a = 3 * i + 1
        edges += [(a, a + 1), (a + 1, a + 2)]
    return Forest(n, edges)


def test_example_window_validation():
    with pytest.raises(ValueError):
        example_closed_form(15, 7)  # odd t
    with pytest.raises(ValueError):
        example_closed_form(14, 8)  # below 3(t+2)/2
    with pytest.raises(ValueError):
        example_closed_form(16, 8)  # not < 2t


def test_quadratic_negative_throughout_window():
    for t in (8, 10, 12, 14):
        for n in range(3 * (t + 2) // 2, 2 * t):
            assert example_closed_form(n, t).threshold_larger


# -- conjecture scans ----------------------------------------------------------


def test_scan_small_t_prefers_j0():
    rep = conjecture_scan(12, 3, 4)
    assert rep.best_j == 0
    assert rep.weak_consistent is True
    sizes = [r.size for r in rep.rows]
    assert sizes[0] == count_matching_family(12, 3)
    assert sum(r.winner for r in rep.rows) == 1


def test_scan_15_8_balanced_forests():
    # at (15, 8) no 8-matching exists; the balanced 8-edge forest is (3, 2^6)
    # and its trivial family still beats the j=1 threshold family
    rep = conjecture_scan(15, 8, 1)
    assert [r.size for r in rep.rows] == [145_800_000, 74_631_375]
    assert rep.best_j == 0
    assert rep.weak_consistent is None  # t > n/2: the flag does not apply


def test_scan_9_4_table():
    rep = conjecture_scan(9, 4, 2)
    assert len(rep.rows) == 3
    assert all(r.size > 0 for r in rep.rows)
    d = rep.to_dict()
    assert [row["j"] for row in d["rows"]] == [0, 1, 2]
    assert all(isinstance(row["size"], str) for row in d["rows"])


# -- avoidance counts -----------------------------------------------------------


def test_count_avoiding_star_blocks_everything():
    star = Forest(6, [(1, x) for x in range(2, 7)])
    assert count_avoiding(6, star, Forest(6)) == 0


def test_count_avoiding_t0_equals_f():
    p = Forest(6, [(1, 2), (2, 3)])
    assert count_avoiding(6, p, p) == count_trees_containing(6, p)


def test_count_avoiding_dual_paths_on_path6():
    path6 = Forest(6, [(i, i + 1) for i in range(1, 6)])
    ie = count_avoiding(6, path6, Forest(6), method="ie")
    en = count_avoiding(6, path6, Forest(6), method="enum")
    assert ie == en == 130


def test_count_avoiding_randomized_dual_paths():
    rng = random.Random(7)
    n = 6
    for _ in range(40):
        t0_edges = [e for e in sample_uniform_tree(n, rng.randrange(2**30)).edges
                    if rng.random() < 0.7]
        f_edges = [e for e in sample_uniform_tree(n, rng.randrange(2**30)).edges
                   if rng.random() < 0.4]
        t0, f = Forest(n, t0_edges), Forest(n, f_edges)
        assert count_avoiding(n, t0, f, "ie") == count_avoiding(n, t0, f, "enum")


def test_count_avoiding_validation():
    with pytest.raises(ValueError):
        count_avoiding(6, Forest(5, [(1, 2)]), Forest(6))
    with pytest.raises(ValueError):
        count_avoiding(6, Forest(6), Forest(6), method="magic")


# -- blocked count D_t ----------------------------------------------------------


def test_blocked_dt_n6():
    rep = blocked_Dt(6, 1)
    assert rep.value == 30
    assert rep.argmin_forest.edges == ((1, 2),)
    # witness recomputes to the reported value through the IE path
    assert count_avoiding(6, rep.argmin_tree, rep.argmin_forest) == 30
    # admissibility of the witness
    assert len(rep.argmin_forest) == 1
    from treefam.trees import intersection_size, is_star

    assert not is_star(rep.argmin_tree)
    assert intersection_size(rep.argmin_tree, rep.argmin_forest) < 1
    # context-only asymptotic bound: hypothesis unmet, bound < 1
    assert not rep.prop_hypothesis_met
    assert rep.prop_bound < 1


def test_blocked_dt_minimality_n5():
    """No admissible pair scores below the reported minimum (full recheck, n=5)."""
    rep = blocked_Dt(5, 1)
    from treefam.trees import enumerate_trees, intersection_size, is_star

    best = None
    for f_edges in iter_forests(5, max_edges=1, min_edges=1):
        f = Forest(5, f_edges)
        for t0 in enumerate_trees(5):
            if is_star(t0) or intersection_size(t0, f) >= 1:
                continue
            v = count_avoiding(5, t0, f)
            best = v if best is None else min(best, v)
    assert rep.value == best


def test_blocked_dt_n6_t2():
    rep = blocked_Dt(6, 2)
    assert rep.value == 9
    assert count_avoiding(6, rep.argmin_tree, rep.argmin_forest) == 9


def test_blocked_dt_higher_t():
    """D_t shrinks as t grows; witnesses keep recomputing exactly."""
    values = {}
    for t in (1, 2, 3, 4):
        rep = blocked_Dt(6, t)
        assert count_avoiding(6, rep.argmin_tree, rep.argmin_forest) == rep.value
        values[t] = rep.value
    assert values == {1: 30, 2: 9, 3: 3, 4: 1}
    assert all(v >= 0 for v in values.values())


def test_blocked_dt_validation():
    with pytest.raises(ValueError):
        blocked_Dt(6, 5)  # t > n-2 rejected
    from treefam.trees import CapExceeded

    with pytest.raises(CapExceeded):
        blocked_Dt(8, 1)


# -- local lemma ------------------------------------------------------------------


def test_llll_empty_event_set():
    rep = llll_condition_check([], [], [])
    assert rep.ok and rep.bound == 1


def test_llll_accepts_matching_line_graph():
    # p = 2/n, x = 4/n on an edgeless dependency graph: 2/n <= 4/n
    for n in (5, 7, 12, 64):
        m = 3
        rep = llll_condition_check(
            [Fraction(2, n)] * m, [Fraction(4, n)] * m, [[] for _ in range(m)]
        )
        assert rep.ok
        assert rep.bound == Fraction(n - 4, n) ** m


def test_llll_rejects_violating_degree():
    rep = llll_condition_check(
        [Fraction(1, 2)] * 3, [Fraction(1, 2)] * 3, [[1, 2], [0, 2], [0, 1]]
    )
    assert not rep.ok and rep.failing_index == 0


def test_llll_low_degree_line_graphs_pass_up_to_64():
    """p=2/n, x=4/n passes whenever line-graph degrees stay below n/6."""
    for n in (25, 36, 49, 64):
        # near-balanced forest of tiny paths: line-graph degrees stay <= 2
        f = balanced_forest(n, 2 * (n // 3))
        adj = line_graph_adjacency(f)
        assert max(len(a) for a in adj) <= 2
        m = len(f.edges)
        rep = llll_condition_check(
            [Fraction(2, n)] * m, [Fraction(4, n)] * m, adj
        )
        assert rep.ok


def test_llll_degree_just_below_n_sixth_boundary():
    """The checker evaluates the exact condition, not the rule of thumb.

    With p = 2/n, x = 4/n, the condition at a degree-d event is
    2/n <= (4/n)(1-4/n)^d, i.e. (1-4/n)^d >= 1/2.  Degrees just below n/6
    genuinely violate it around n = 25 and genuinely satisfy it from n = 36
    up, and the checker must report each case as it is.
    """

    def check(n, d):
        # one event of degree d among d+1 events (a star in the event graph)
        adj = [list(range(1, d + 1))] + [[0] for _ in range(d)]
        m = d + 1
        return llll_condition_check(
            [Fraction(2, n)] * m, [Fraction(4, n)] * m, adj
        ).ok

    assert not check(25, 4)  # 4 < 25/6, yet (21/25)^4 < 1/2
    assert check(36, 5)
    assert check(49, 8)
    assert check(64, 10)


def test_llll_input_validation():
    with pytest.raises(ValueError):
        llll_condition_check([Fraction(1, 2)], [Fraction(1, 1)], [[]])
    with pytest.raises(ValueError):
        llll_condition_check([2], [Fraction(1, 2)], [[]])
    with pytest.raises(ValueError):
        llll_condition_check([Fraction(1, 2)], [Fraction(1, 2)], [[], []])


# -- notstar avoidance bound -------------------------------------------------------


def test_notstar_check_on_matchings_n7():
    m3 = Forest(7, [(1, 2), (3, 4), (5, 6)])
    rep = lemma_notstar_check(7, m3)
    assert rep.avoid_count == 6125
    assert rep.rational_bound == Fraction(3 ** 6, 7)
    assert rep.rational_ok and rep.e4_ok and rep.llll_ok and rep.verdict


def test_notstar_empty_forest():
    rep = lemma_notstar_check(7, Forest(7))
    assert rep.avoid_count == cayley_count(7)
    assert rep.verdict


def test_notstar_rejects_6_star_like():
    path7 = Forest(7, [(i, i + 1) for i in range(1, 7)])
    assert is_d_star_like(path7, 6)
    with pytest.raises(ValueError, match="6-star-like"):
        lemma_notstar_check(7, path7)


def test_notstar_n8_exhaustive_sweep():
    """Every non-6-star-like forest with <= 4 edges passes at n = 8."""
    n = 8
    checked = 0
    for f_edges in iter_forests(n, 4):
        f = Forest(n, f_edges)
        if is_d_star_like(f, 6):
            continue
        rep = lemma_notstar_check(n, f)
        assert rep.verdict, f_edges
        checked += 1
    assert checked > 100


def test_notstar_beyond_enumeration_range():
    # the IE path is exact at any n; a 13-edge path is not 6-star-like at n=14
    path14 = Forest(14, [(i, i + 1) for i in range(1, 14)])
    rep = lemma_notstar_check(14, path14)
    assert rep.avoid_count == 7_025_473_163_526
    assert rep.verdict


# -- exact search --------------------------------------------------------------------


def test_brute_force_51():
    res, comp = brute_force_max_t_intersecting(5, 1)
    assert res.optimal and res.size == 53
    assert comp["stars_plus_edge"] == 53
    assert comp["trivial_matching"] == 50
    assert res.family.min_pairwise_intersection() >= 1


def test_brute_force_52():
    res, comp = brute_force_max_t_intersecting(5, 2)
    assert res.optimal and res.size == 20
    assert comp["trivial_matching"] == 20
    assert res.family.min_pairwise_intersection() >= 2


def test_brute_force_t_equals_nminus1():
    # t = n-1 forces identical trees, so the largest family is a single tree
    res, _ = brute_force_max_t_intersecting(4, 3)
    assert res.optimal and res.size == 1


def test_brute_force_cap():
    from treefam.trees import CapExceeded

    with pytest.raises(CapExceeded):
        brute_force_max_t_intersecting(7, 1)
