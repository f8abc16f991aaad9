"""Extremal and conjectured families of t-intersecting spanning trees.

Constructions and their exact sizes:

  * the trivial family: all trees containing a fixed t-edge forest, maximized
    by matchings at 2^t n^(n-t-2);
  * all stars plus all trees through one fixed edge, of size 2n^(n-3) + n - 2;
  * balanced forests F_{n,l} (components as equal as possible) and the
    threshold families "contains >= t+j of the t+2j edges of F_{n,t+2j}";
  * the even-t window 3(t+2)/2 <= n < 2t where the threshold family with
    t/2 + 1 disjoint 3-vertex paths beats the all-paths trivial family.

Also here: the blocked count D_t (trees containing F while avoiding a
non-star tree outside F, minimized over both), checked exactly at small n,
and the lopsided-local-lemma machinery that lower-bounds avoidance counts.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .counting import (
    DEFAULT_IE_CAP,
    count_at_least,
    count_trees_containing,
)
from .gamma import (
    DEFAULT_NODE_BUDGET,
    SearchResult,
    SimpleGraph,
    build_gamma,
    max_independent_set,
)
from .trees import (
    DEFAULT_ENUM_CAP,
    CapExceeded,
    Edge,
    Forest,
    Tree,
    cayley_count,
    edge,
    edges_to_mask,
    is_d_star_like,
    star_masks,
    tree_mask_array,
    tree_masks,
)

COMPONENT_SHAPES = ("path", "star", "caterpillar")


# -- family constructions ------------------------------------------------------


def trivial_family_size(n: int, f: Forest) -> int:
    """|T_n[F]| for a t-edge forest F: the trivially t-intersecting family."""
    if not isinstance(f, Forest):
        f = Forest(n, f)  # raises on cycles: non-forests rejected
    return count_trees_containing(n, f)


def stars_plus_edge_size(n: int) -> int:
    """2n^(n-3) + (n-2): all trees through one fixed edge plus all n stars.

    The two stars whose centre is an endpoint of the edge already contain it,
    hence the n - 2 (not n) star term.
    """
    if n < 3:
        raise ValueError(f"n={n} must be >= 3")
    return 2 * n ** (n - 3) + (n - 2)


def realize_stars_plus_edge(
    n: int, e: Edge = (1, 2), cap: int = DEFAULT_ENUM_CAP
) -> List[int]:
    """The stars-plus-fixed-edge family as tree bitmasks, ascending tree index."""
    import numpy as np

    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}", "enum_cap", cap)
    emask = edges_to_mask(n, [edge(*e)])
    arr = tree_mask_array(n)
    member = (arr & np.uint64(emask)) == np.uint64(emask)
    stars = set(star_masks(n))
    masks = tree_masks(n)
    return [m for m, keep in zip(masks, member) if keep or m in stars]


def realize_trivial_family(n: int, f: Forest, cap: int = DEFAULT_ENUM_CAP) -> List[int]:
    """T_n[F] as tree bitmasks, ascending tree index."""
    import numpy as np

    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}", "enum_cap", cap)
    fmask = np.uint64(edges_to_mask(n, f.edges))
    arr = tree_mask_array(n)
    masks = tree_masks(n)
    return [m for m, keep in zip(masks, (arr & fmask) == fmask) if keep]


def realize_threshold_family(
    n: int, s, m: int, cap: int = DEFAULT_ENUM_CAP
) -> List[int]:
    """Trees containing at least m edges of the edge set s, as bitmasks."""
    import numpy as np

    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}", "enum_cap", cap)
    edges = s.edges if isinstance(s, Forest) else [edge(*e) for e in s]
    arr = tree_mask_array(n)
    hits = np.zeros(len(arr), dtype=np.int64)
    for u, v in edges:
        b = np.uint64(edges_to_mask(n, [(u, v)]))
        hits += (arr & b) != 0
    masks = tree_masks(n)
    return [mk for mk, h in zip(masks, hits) if h >= m]


def min_pairwise_intersection(masks: Sequence[int]) -> Optional[int]:
    """Smallest edge overlap over all pairs of tree bitmasks (None if < 2)."""
    best = None
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            c = (mi & masks[j]).bit_count()
            if best is None or c < best:
                best = c
    return best


class FamilySpec:
    """A declarative family of spanning trees plus the intersection level it claims.

    kinds: "trivial" (all trees containing a forest), "stars_plus_edge",
    "threshold" (trees with >= m edges of an edge set), "explicit" (a literal
    member list).  realize() materializes the family as tree bitmasks at small
    n so the claim can be checked pair by pair.
    """

    __slots__ = ("kind", "n", "t", "edges", "threshold", "members")

    def __init__(self, kind, n, t, edges=None, threshold=None, members=None):
        if kind not in ("trivial", "stars_plus_edge", "threshold", "explicit"):
            raise ValueError(f"unknown family kind {kind!r}")
        self.kind = kind
        self.n = n
        self.t = t
        self.edges = tuple(edge(*e) for e in edges) if edges is not None else None
        self.threshold = threshold
        self.members = (
            tuple(tuple(edge(*e) for e in tr) for tr in members)
            if members is not None
            else None
        )
        if kind == "trivial" and self.edges is None:
            raise ValueError("trivial families need edges")
        if kind == "threshold" and (self.edges is None or threshold is None):
            raise ValueError("threshold families need edges and a threshold")
        if kind == "explicit" and self.members is None:
            raise ValueError("explicit families need members")

    def realize(self, cap: int = DEFAULT_ENUM_CAP) -> List[int]:
        if self.kind == "trivial":
            return realize_trivial_family(self.n, Forest(self.n, self.edges), cap)
        if self.kind == "stars_plus_edge":
            e = self.edges[0] if self.edges else (1, 2)
            return realize_stars_plus_edge(self.n, e, cap)
        if self.kind == "threshold":
            return realize_threshold_family(self.n, self.edges, self.threshold, cap)
        out = []
        for tr in self.members:
            Tree(self.n, tr)  # each member must be a spanning tree
            out.append(edges_to_mask(self.n, tr))
        return out

    def verify(self, cap: int = DEFAULT_ENUM_CAP) -> Tuple[bool, Optional[int], int]:
        """(claim holds, min pairwise intersection, size) at small n."""
        masks = self.realize(cap)
        mpi = min_pairwise_intersection(masks)
        return (mpi is None or mpi >= self.t), mpi, len(masks)

    def to_json(self) -> str:
        d = {"kind": self.kind, "n": self.n, "t": self.t}
        if self.edges is not None:
            d["edges"] = [list(e) for e in self.edges]
        if self.threshold is not None:
            d["threshold"] = self.threshold
        if self.members is not None:
            d["members"] = [[list(e) for e in tr] for tr in self.members]
        import json

        return json.dumps(d)

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        import json

        d = json.loads(text)
        return cls(
            d["kind"],
            int(d["n"]),
            int(d["t"]),
            edges=d.get("edges"),
            threshold=d.get("threshold"),
            members=d.get("members"),
        )


def _component_edges(block: Sequence[int], shape: str) -> List[Edge]:
    """Edges of one component on a consecutive label block, given its shape."""
    k = len(block)
    if k < 2:
        return []
    if shape == "path":
        return [edge(block[i], block[i + 1]) for i in range(k - 1)]
    if shape == "star":
        return [edge(block[0], x) for x in block[1:]]
    if shape == "caterpillar":
        # spine on the first ceil(k/2) labels, remaining labels attached to
        # spine vertices cyclically from the spine start
        h = (k + 1) // 2
        spine = block[:h]
        out = [edge(spine[i], spine[i + 1]) for i in range(h - 1)]
        for j, leaf in enumerate(block[h:]):
            out.append(edge(spine[j % h], leaf))
        return out
    raise ValueError(f"unknown component shape {shape!r}")


def balanced_forest(n: int, l: int, shape: str = "path") -> Forest:
    """The canonical forest on [n] with l edges and near-equal components.

    It has c = n - l components; n mod c of them have ceil(n/c) vertices and
    the rest floor(n/c).  Components live on consecutive label blocks, larger
    blocks first, each shaped per `shape` (paths by default).
    """
    if not (0 <= l <= n - 1):
        raise ValueError(f"l={l} out of range 0..{n - 1}")
    c = n - l
    big = n % c
    size_hi, size_lo = -(-n // c), n // c
    edges: List[Edge] = []
    start = 1
    for i in range(c):
        k = size_hi if i < big else size_lo
        block = list(range(start, start + k))
        edges.extend(_component_edges(block, shape))
        start += k
    return Forest(n, edges)


def example_forest(n: int, t: int) -> Forest:
    """t/2 + 1 disjoint 3-vertex paths on consecutive labels (t even)."""
    if t % 2 != 0 or t < 2:
        raise ValueError(f"t={t} must be a positive even integer")
    paths = t // 2 + 1
    if 3 * paths > n:
        raise ValueError(f"n={n} cannot host {paths} disjoint 3-vertex paths")
    edges: List[Edge] = []
    for i in range(paths):
        a = 3 * i + 1
        edges.extend([(a, a + 1), (a + 1, a + 2)])
    return Forest(n, edges)


def family_F_ntj_size(
    n: int,
    t: int,
    j: int,
    shape: str = "path",
    ie_cap: int = DEFAULT_IE_CAP,
) -> int:
    """Size of the threshold family: trees with >= t+j of the t+2j edges of
    the balanced forest F_{n, t+2j}.  At j = 0 this is the trivial family."""
    if t < 1 or j < 0:
        raise ValueError(f"need t >= 1 and j >= 0, got t={t}, j={j}")
    if t + 2 * j > n - 1:
        raise ValueError(f"t+2j = {t + 2 * j} exceeds n-1 = {n - 1}")
    f = balanced_forest(n, t + 2 * j, shape)
    if j == 0:
        return trivial_family_size(n, f)
    return count_at_least(n, f, t + j, ie_cap=ie_cap)


class ExampleReport:
    """Closed form vs baseline for the even-t window 3(t+2)/2 <= n < 2t."""

    __slots__ = (
        "n",
        "t",
        "threshold_size",
        "trivial_paths_size",
        "quadratic",
        "threshold_larger",
    )

    def __init__(self, n, t, threshold_size, trivial_paths_size, quadratic):
        self.n = n
        self.t = t
        self.threshold_size = threshold_size
        self.trivial_paths_size = trivial_paths_size
        self.quadratic = quadratic
        self.threshold_larger = quadratic < 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "threshold_size": str(self.threshold_size),
            "trivial_paths_size": str(self.trivial_paths_size),
            "quadratic": self.quadratic,
            "threshold_larger": self.threshold_larger,
        }


def example_closed_form(n: int, t: int) -> ExampleReport:
    """Closed-form size 3^(t/2) n^(n-t-4) (2nt + 4n - 3t - 3) of the family
    "trees with >= t+1 of the t+2 edges of t/2+1 disjoint 3-paths", against
    the all-paths trivial baseline 3^(t/2) n^(n-2-t).

    The threshold family wins exactly when n^2 - (4+2t)n + 3t + 3 < 0, which
    holds throughout the admissible window.
    """
    if t % 2 != 0 or t < 2:
        raise ValueError(f"t={t} must be a positive even integer")
    if not (3 * (t + 2) // 2 <= n < 2 * t):
        raise ValueError(
            f"(n,t)=({n},{t}) outside the window 3(t+2)/2 <= n < 2t"
        )
    threshold = 3 ** (t // 2) * n ** (n - t - 4) * (2 * n * t + 4 * n - 3 * t - 3)
    baseline = 3 ** (t // 2) * n ** (n - 2 - t)
    quad = n * n - (4 + 2 * t) * n + 3 * t + 3
    report = ExampleReport(n, t, threshold, baseline, quad)
    assert report.threshold_larger == (threshold > baseline)
    return report


class ScanRow:
    __slots__ = ("n", "t", "j", "size", "winner")

    def __init__(self, n, t, j, size, winner=False):
        self.n = n
        self.t = t
        self.j = j
        self.size = size
        self.winner = winner


class ScanReport:
    """Sizes of the threshold families F_{n,t,j} for j = 0..j_max."""

    __slots__ = ("n", "t", "shape", "rows", "best_j", "weak_consistent")

    def __init__(self, n, t, shape, rows, best_j, weak_consistent):
        self.n = n
        self.t = t
        self.shape = shape
        self.rows = rows
        self.best_j = best_j
        self.weak_consistent = weak_consistent

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "shape": self.shape,
            "rows": [
                {"j": r.j, "size": str(r.size), "winner": r.winner}
                for r in self.rows
            ],
            "best_j": self.best_j,
            "weak_consistent": self.weak_consistent,
        }


def conjecture_scan(
    n: int,
    t: int,
    j_max: int,
    shape: str = "path",
    ie_cap: int = DEFAULT_IE_CAP,
) -> ScanReport:
    """Tabulate |F_{n,t,j}| for j = 0..j_max and record the argmax.

    Ties resolve to the smallest j.  When t <= n/2, weak_consistent records
    whether j = 0 (the plain trivial family) wins, as expected for that range.
    """
    if t + 2 * j_max > n - 1:
        raise ValueError(f"t + 2*j_max = {t + 2 * j_max} exceeds n-1 = {n - 1}")
    rows = [
        ScanRow(n, t, j, family_F_ntj_size(n, t, j, shape, ie_cap))
        for j in range(j_max + 1)
    ]
    best = max(range(len(rows)), key=lambda i: (rows[i].size, -i))
    rows[best].winner = True
    weak = rows[best].j == 0 if 2 * t <= n else None
    return ScanReport(n, t, shape, rows, rows[best].j, weak)


# -- avoidance counts and the blocked quantity D_t -----------------------------


def count_avoiding(
    n: int,
    t0: Forest,
    f: Forest,
    method: str = "ie",
    ie_cap: int = DEFAULT_IE_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """|T_n[T_0; F]|: trees containing every edge of f and no edge of t0
    outside f.

    method "ie" runs inclusion-exclusion over subsets of t0 \\ f joined with
    f (cyclic unions contribute 0, any n); method "enum" recounts by scanning
    the full tree universe (n within the enumeration cap).  The two paths must
    agree; tests hold them to that.
    """
    from itertools import combinations

    if not isinstance(t0, Forest):
        t0 = Forest(n, t0)
    if not isinstance(f, Forest):
        f = Forest(n, f)
    if t0.n != n or f.n != n:
        raise ValueError("t0 and f must live on the same n")
    base = f.edges
    avoid = tuple(sorted(set(t0.edges) - set(base)))
    if method == "ie":
        if len(avoid) > ie_cap:
            raise CapExceeded(
                f"|t0 \\ f| = {len(avoid)} exceeds the IE cap {ie_cap}",
                "ie_cap",
                ie_cap,
            )
        total = 0
        for k in range(len(avoid) + 1):
            sign = -1 if k % 2 else 1
            for sub in combinations(avoid, k):
                total += sign * count_trees_containing(n, base + sub)
        return total
    if method == "enum":
        import numpy as np

        if n > enum_cap:
            raise CapExceeded(
                f"n={n} exceeds the enumeration cap {enum_cap}", "enum_cap", enum_cap
            )
        arr = tree_mask_array(n)
        fmask = np.uint64(edges_to_mask(n, base))
        amask = np.uint64(edges_to_mask(n, avoid))
        zero = np.uint64(0)
        return int(np.count_nonzero(((arr & fmask) == fmask) & ((arr & amask) == zero)))
    raise ValueError(f"unknown method {method!r} (want 'ie' or 'enum')")


class BlockedReport:
    """Exact D_t with argmin witnesses and the asymptotic-bound context."""

    __slots__ = (
        "n",
        "t",
        "value",
        "argmin_forest",
        "argmin_tree",
        "pairs_checked",
        "prop_hypothesis_met",
        "prop_bound",
    )

    def __init__(self, n, t, value, argmin_forest, argmin_tree, pairs_checked):
        self.n = n
        self.t = t
        self.value = value
        self.argmin_forest = argmin_forest
        self.argmin_tree = argmin_tree
        self.pairs_checked = pairs_checked
        # the proven bound n^(n-2t-17) needs n >= 2t + 110; report it for
        # context (it is < 1, hence vacuous, anywhere we can exhaust)
        self.prop_hypothesis_met = n >= 2 * t + 110
        e = n - 2 * t - 17
        self.prop_bound = Fraction(n) ** e

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "value": str(self.value),
            "argmin_forest": [list(e) for e in self.argmin_forest.edges],
            "argmin_tree": [list(e) for e in self.argmin_tree.edges],
            "pairs_checked": self.pairs_checked,
            "prop_hypothesis_met": self.prop_hypothesis_met,
            "prop_bound": f"{self.prop_bound.numerator}/{self.prop_bound.denominator}",
        }


def blocked_Dt(n: int, t: int, enum_cap: int = DEFAULT_ENUM_CAP) -> BlockedReport:
    """Exact D_t = min over t-edge forests F and non-star trees T_0 with
    |T_0 and F| < t of |T_n[T_0; F]|, by exhaustive double minimization.

    Ties resolve to the first pair in scan order (forests in lexicographic
    order, trees in tree-index order), which is the lowest canonical
    serialization.  Needs the full tree universe, so n is capped.
    """
    import numpy as np

    from .trees import iter_forests

    if n > min(enum_cap, 7):
        raise CapExceeded(
            f"blocked_Dt exhaustion needs n <= 7 (and within the enumeration "
            f"cap); got n={n}",
            "enum_cap",
            min(enum_cap, 7),
        )
    if not (1 <= t <= n - 2):
        raise ValueError(f"t={t} out of range 1..{n - 2}")
    arr = tree_mask_array(n)
    total = len(arr)
    star_set = set(star_masks(n))
    is_star_arr = np.array([m in star_set for m in tree_masks(n)])
    masks = tree_masks(n)
    best = None
    best_forest = None
    best_tree_idx = None
    pairs = 0
    u64 = np.uint64
    for f_edges in iter_forests(n, max_edges=t, min_edges=t):
        fmask = u64(edges_to_mask(n, f_edges))
        shared = arr & fmask
        pc = np.zeros(total, dtype=np.int64)
        rem = shared.copy()
        while rem.any():
            pc += (rem & u64(1)) != 0
            rem >>= u64(1)
        admissible = (~is_star_arr) & (pc < t)
        containing = arr[(arr & fmask) == fmask]
        avoids = (arr & ~fmask).astype(np.uint64)
        idxs = np.flatnonzero(admissible)
        pairs += len(idxs)
        # count, per admissible T0, trees >= F that miss T0 outside F
        chunk = 1024
        for s in range(0, len(idxs), chunk):
            sel = idxs[s : s + chunk]
            av = avoids[sel]
            zero = u64(0)
            counts = np.count_nonzero(
                (containing[None, :] & av[:, None]) == zero, axis=1
            )
            k = int(np.argmin(counts))
            val = int(counts[k])
            if best is None or val < best:
                best = val
                best_forest = f_edges
                best_tree_idx = int(sel[k])
    if best is None:
        raise ValueError(f"no admissible (F, T_0) pair at n={n}, t={t}")
    from .trees import mask_to_edges

    report = BlockedReport(
        n,
        t,
        best,
        Forest(n, best_forest),
        Tree(n, mask_to_edges(n, masks[best_tree_idx])),
        pairs,
    )
    return report


# -- lopsided local lemma ------------------------------------------------------


class LLLLReport:
    """Verdict of the lopsided-local-lemma hypothesis check plus its bound."""

    __slots__ = ("ok", "bound", "failing_index")

    def __init__(self, ok: bool, bound: Fraction, failing_index: Optional[int]):
        self.ok = ok
        self.bound = bound
        self.failing_index = failing_index

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "failing_index": self.failing_index,
        }


def llll_condition_check(
    p: Sequence, x: Sequence, adjacency: Sequence[Sequence[int]]
) -> LLLLReport:
    """Check p_i <= x_i * prod over neighbours j of (1 - x_j), for every event i.

    `adjacency` is the negative dependency graph as neighbour lists over event
    indices 0..N-1.  When the condition holds, all events fail simultaneously
    with probability at least prod(1 - x_i); that product is returned exactly
    (inputs are taken as rationals).
    """
    p = [Fraction(v) for v in p]
    x = [Fraction(v) for v in x]
    if len(p) != len(x) or len(p) != len(adjacency):
        raise ValueError("p, x, adjacency must have equal length")
    for i, xi in enumerate(x):
        if not (0 <= xi < 1):
            raise ValueError(f"x[{i}]={xi} outside [0, 1)")
    for i, pi in enumerate(p):
        if not (0 <= pi <= 1):
            raise ValueError(f"p[{i}]={pi} outside [0, 1]")
    failing = None
    for i in range(len(p)):
        rhs = x[i]
        for j in adjacency[i]:
            rhs *= 1 - x[j]
        if p[i] > rhs:
            failing = i
            break
    bound = Fraction(1)
    for xi in x:
        bound *= 1 - xi
    return LLLLReport(failing is None, bound, failing)


def line_graph_adjacency(f: Forest) -> List[List[int]]:
    """Line graph of a forest as neighbour lists over edge indices (sorted order)."""
    es = f.edges
    adj: List[List[int]] = [[] for _ in es]
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a in (c, d) or b in (c, d):
                adj[i].append(j)
                adj[j].append(i)
    return adj


class NotstarReport:
    """Avoidance-count lower bounds for a non-6-star-like forest T_0.

    Two independent comparisons are made (neither implies the other at finite
    n, since (1-4/n)^(n-1) < e^-4 < (1-4/n)^0):

      * rational_ok:  avoid_count >= (1 - 4/n)^(n-1) * n^(n-2), checked on
        cross-multiplied integers;
      * e4_ok:        avoid_count >= e^-4 * n^(n-2), checked against a
        30-digit decimal evaluation of e^-4.

    llll_ok reports whether the local-lemma hypothesis (p = 2/n, x = 4/n on
    the line graph of T_0) holds, i.e. whether the probabilistic route to the
    bound applies, not just the bound itself.
    """

    __slots__ = (
        "n",
        "avoid_count",
        "rational_ok",
        "rational_bound",
        "e4_ok",
        "e4_bound",
        "llll_ok",
        "verdict",
    )

    def __init__(self, n, avoid_count, rational_ok, rational_bound, e4_ok, e4_bound, llll_ok):
        self.n = n
        self.avoid_count = avoid_count
        self.rational_ok = rational_ok
        self.rational_bound = rational_bound
        self.e4_ok = e4_ok
        self.e4_bound = e4_bound
        self.llll_ok = llll_ok
        self.verdict = rational_ok and e4_ok

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "avoid_count": str(self.avoid_count),
            "rational_ok": self.rational_ok,
            "rational_bound": f"{self.rational_bound.numerator}/{self.rational_bound.denominator}",
            "e4_ok": self.e4_ok,
            "e4_bound": str(self.e4_bound),
            "llll_ok": self.llll_ok,
            "verdict": self.verdict,
        }


def lemma_notstar_check(
    n: int,
    t0: Forest,
    ie_cap: int = DEFAULT_IE_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> NotstarReport:
    """Verify the avoidance lower bounds for a non-6-star-like forest T_0.

    6-star-like inputs are rejected with the witness edge in the message.
    The avoid count is exact (inclusion-exclusion; cross-checked against the
    enumeration path when n is within the cap).
    """
    if n < 5:
        raise ValueError(f"n={n} must be >= 5")
    if not isinstance(t0, Forest):
        t0 = Forest(n, t0)
    if is_d_star_like(t0, 6):
        deg = t0.degrees()
        witness = max(t0.edges, key=lambda e: deg[e[0]] + deg[e[1]] - 2)
        raise ValueError(
            f"t0 is 6-star-like: edge {witness} meets "
            f"{deg[witness[0]] + deg[witness[1]] - 2} >= (n-1)/6 other edges"
        )
    empty = Forest(n)
    count = count_avoiding(n, t0, empty, method="ie", ie_cap=ie_cap)
    if n <= enum_cap:
        other = count_avoiding(n, t0, empty, method="enum", enum_cap=enum_cap)
        if other != count:
            raise AssertionError(
                f"avoidance paths disagree at n={n}: ie={count}, enum={other}"
            )
    rational_bound = Fraction((n - 4) ** (n - 1), n)  # (1-4/n)^(n-1) n^(n-2)
    rational_ok = count >= rational_bound
    with localcontext() as ctx:
        ctx.prec = 50
        e4 = (-Decimal(4)).exp()
        e4_bound = +(e4 * Decimal(cayley_count(n)))
        ctx.prec = 30
        e4_bound_30 = +e4_bound
        e4_ok = Decimal(count) >= e4_bound
    adj = line_graph_adjacency(t0)
    m = len(t0.edges)
    llll = llll_condition_check(
        [Fraction(2, n)] * m, [Fraction(4, n)] * m, adj
    )
    return NotstarReport(
        n, count, rational_ok, rational_bound, e4_ok, e4_bound_30, llll.ok
    )


# -- exact search over Gamma_t(K_n) -------------------------------------------


def brute_force_max_t_intersecting(
    n: int, t: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> Tuple[SearchResult, dict]:
    """Exact maximum t-intersecting family of spanning trees of K_n (n <= 6).

    Delegates to the branch-and-bound independent-set solver on Gamma_t(K_n);
    returns the search result plus a comparison against the construction
    sizes (matching-based trivial family; stars-plus-edge at t = 1).
    """
    if n > 6:
        raise CapExceeded(
            f"brute-force search is capped at n <= 6, got n={n}", "search_cap", 6
        )
    if not (1 <= t <= n - 1):
        raise ValueError(f"t={t} out of range 1..{n - 1}")
    gamma = build_gamma(SimpleGraph.complete(n), t)
    result = max_independent_set(gamma, budget=node_budget)
    comparison = {"found": result.size, "optimal": result.optimal}
    if t <= n // 2:
        comparison["trivial_matching"] = count_trees_containing(
            n, balanced_forest(n, t)
        )
    if t == 1:
        comparison["stars_plus_edge"] = stars_plus_edge_size(n)
    return result, comparison
