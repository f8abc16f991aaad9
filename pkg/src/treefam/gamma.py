"""Spanning-tree t-disjointness graphs of small graphs, and exact search on them.

Gamma_t(G) has one vertex per spanning tree of G; two trees are adjacent when
they share fewer than t edges, so pairwise t-intersecting families are exactly
the independent sets.  This module builds Gamma_t with bit-packed adjacency
rows, computes the tree packing number via the Tutte/Nash-Williams partition
minimum (with a search-found witness packing), and runs an exact
branch-and-bound (greedy colouring bound, degeneracy order, node budget) for
maximum cliques and maximum independent sets.
"""

from __future__ import annotations

import json
import struct
from typing import Iterable, Iterator, List, Optional, Tuple

from .trees import (
    CapExceeded,
    Edge,
    Tree,
    _DSU,
    all_edges,
    cayley_count,
    edge,
    edges_to_mask,
    mask_to_edges,
    tree_masks,
)

DEFAULT_GAMMA_CAP = 20000
DEFAULT_NODE_BUDGET = 10_000_000
_DUMP_MAGIC = b"GAMADJ01"


class SimpleGraph:
    """A simple graph on {1..n}: canonical sorted edge list, no loops/duplicates."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 1:
            raise ValueError(f"vertex count n={n} must be >= 1")
        es = sorted(edge(int(u), int(v)) for u, v in edges)
        for u, v in es:
            if not (1 <= u < v <= n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        for a, b in zip(es, es[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(es))

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={len(self.edges)})"

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, all_edges(n))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise ValueError("cycles need n >= 3")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def from_edge_list_text(cls, text: str, n: Optional[int] = None) -> "SimpleGraph":
        from .trees import parse_edge_list

        es = parse_edge_list(text)
        if n is None:
            n = max((v for _, v in es), default=1)
        return cls(n, es)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        dsu = _DSU(self.n)
        parts = self.n
        for u, v in self.edges:
            if dsu.union(u, v):
                parts -= 1
        return parts == 1


def enumerate_spanning_trees(
    g: SimpleGraph, cap: int = DEFAULT_GAMMA_CAP
) -> Iterator[Tree]:
    """All spanning trees of g, each exactly once, deterministic order.

    Recursive deletion-contraction on the first edge joining two contraction
    classes: the include branch (contract) comes first, then the exclude
    branch (delete), which is pruned when the edge is a bridge of the
    contracted graph.  Disconnected g yields nothing.  Raises CapExceeded
    lazily once more than `cap` trees have been produced.
    """
    if not g.is_connected():
        return
    if g.is_complete() and cayley_count(g.n) > cap:
        raise CapExceeded(
            f"K_{g.n} has {cayley_count(g.n)} spanning trees, over cap {cap}",
            "gamma_cap",
            cap,
        )
    n = g.n
    produced = 0

    def classes_connected(avail, dsu, nclasses):
        if nclasses == 1:
            return True
        probe = _DSU(n)
        merges = 0
        for u, v in avail:
            if probe.union(dsu.find(u), dsu.find(v)):
                merges += 1
                if merges == nclasses - 1:
                    return True
        return False

    def rec(avail, chosen, dsu, nclasses):
        nonlocal produced
        if nclasses == 1:
            produced += 1
            if produced > cap:
                raise CapExceeded(
                    f"spanning tree stream exceeded cap {cap}", "gamma_cap", cap
                )
            yield Tree(n, chosen)
            return
        # first edge crossing two classes; earlier edges are internal forever
        pick = None
        rest = []
        for i, (u, v) in enumerate(avail):
            if dsu.find(u) != dsu.find(v):
                pick = (u, v)
                rest = [e for e in avail[i + 1 :] if dsu.find(e[0]) != dsu.find(e[1])]
                break
        if pick is None:
            return
        u, v = pick
        # include (contract)
        sub = _DSU(n)
        sub.parent = dsu.parent[:]
        sub.size = dsu.size[:]
        sub.union(u, v)
        inc_avail = [e for e in rest if sub.find(e[0]) != sub.find(e[1])]
        yield from rec(inc_avail, chosen + [pick], sub, nclasses - 1)
        # exclude (delete) -- only if the remaining edges still connect everything
        if classes_connected(rest, dsu, nclasses):
            yield from rec(rest, chosen, dsu, nclasses)

    yield from rec(list(g.edges), [], _DSU(n), n)


# -- disjointness graph -------------------------------------------------------


def _popcount_rows(masks, t: int) -> List[int]:
    """Bit-packed adjacency rows: bit j of row i set iff trees i,j share < t edges."""
    V = len(masks)
    try:
        import numpy as np

        arr = np.array(masks, dtype=np.uint64)
        fits = max(masks, default=0) < (1 << 63)
    except (OverflowError, ValueError):
        fits = False
    if fits and V:
        np_t = np.uint64(t)
        c1 = np.uint64(0x5555555555555555)
        c2 = np.uint64(0x3333333333333333)
        c4 = np.uint64(0x0F0F0F0F0F0F0F0F)
        mul = np.uint64(0x0101010101010101)
        one, two, four, s56 = (np.uint64(k) for k in (1, 2, 4, 56))
        rows = []
        for i in range(V):
            x = arr & arr[i]
            x = x - ((x >> one) & c1)
            x = (x & c2) + ((x >> two) & c2)
            x = (x + (x >> four)) & c4
            pc = (x * mul) >> s56
            bits = pc < np_t
            bits[i] = False
            row = int.from_bytes(
                np.packbits(bits, bitorder="little").tobytes(), "little"
            )
            rows.append(row)
        return rows
    rows = [0] * V
    for i in range(V):
        mi = masks[i]
        row = rows[i]
        for j in range(i + 1, V):
            if (mi & masks[j]).bit_count() < t:
                row |= 1 << j
                rows[j] |= 1 << i
        rows[i] = row
    return rows


class DisjointnessGraph:
    """Gamma_t(g): vertices are spanning trees (edge bitmasks), adjacency = share < t.

    Vertex order is tree-index order when g is complete, otherwise the
    deletion-contraction enumeration order.
    """

    __slots__ = ("graph", "n", "t", "masks", "adj")

    def __init__(self, graph: SimpleGraph, t: int, masks, adj):
        self.graph = graph
        self.n = graph.n
        self.t = t
        self.masks = tuple(masks)
        self.adj = list(adj)

    @property
    def vertex_count(self) -> int:
        return len(self.masks)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def tree(self, i: int) -> Tree:
        return Tree(self.n, mask_to_edges(self.n, self.masks[i]))

    def complement_rows(self) -> List[int]:
        full = (1 << self.vertex_count) - 1
        return [(~r & full) & ~(1 << i) for i, r in enumerate(self.adj)]

    def summary(self) -> dict:
        degs = [r.bit_count() for r in self.adj]
        return {
            "n": self.n,
            "t": self.t,
            "vertices": self.vertex_count,
            "edges": self.edge_count(),
            "min_degree": min(degs, default=0),
            "max_degree": max(degs, default=0),
        }

    # -- binary adjacency dump -----------------------------------------------
    # Header: 8-byte magic "GAMADJ01", then n, t, vertex_count as little-endian
    # uint64; then vertex_count rows of ceil(vertex_count/8) bytes each,
    # little-endian bit order (bit j of row i = adjacency i~j).

    def save_adjacency(self, path: str) -> None:
        V = self.vertex_count
        row_bytes = (V + 7) // 8
        with open(path, "wb") as fh:
            fh.write(_DUMP_MAGIC)
            fh.write(struct.pack("<QQQ", self.n, self.t, V))
            for r in self.adj:
                fh.write(r.to_bytes(row_bytes, "little"))

    @staticmethod
    def load_adjacency(path: str) -> Tuple[int, int, List[int]]:
        """Read a dump back: returns (n, t, adjacency rows)."""
        with open(path, "rb") as fh:
            magic = fh.read(8)
            if magic != _DUMP_MAGIC:
                raise ValueError(f"bad magic {magic!r} in {path}")
            n, t, V = struct.unpack("<QQQ", fh.read(24))
            row_bytes = (V + 7) // 8
            rows = []
            for _ in range(V):
                rows.append(int.from_bytes(fh.read(row_bytes), "little"))
        return n, t, rows


def build_gamma(g: SimpleGraph, t: int, cap: int = DEFAULT_GAMMA_CAP) -> DisjointnessGraph:
    """Construct Gamma_t(g) with full bit-packed adjacency."""
    if not (1 <= t <= g.n - 1):
        raise ValueError(f"t={t} out of range 1..{g.n - 1}")
    if g.is_complete():
        total = cayley_count(g.n)
        if total > cap:
            raise CapExceeded(
                f"Gamma over K_{g.n} needs {total} vertices, over cap {cap}",
                "gamma_cap",
                cap,
            )
        masks = tree_masks(g.n)
    else:
        masks = [
            edges_to_mask(g.n, tr.edges) for tr in enumerate_spanning_trees(g, cap)
        ]
    return DisjointnessGraph(g, t, masks, _popcount_rows(masks, t))


class TreeFamily:
    """A set of spanning trees inside a DisjointnessGraph universe (bitmask members)."""

    __slots__ = ("gamma", "member_mask")

    def __init__(self, gamma: DisjointnessGraph, member_mask: int):
        self.gamma = gamma
        self.member_mask = member_mask

    @property
    def size(self) -> int:
        return self.member_mask.bit_count()

    def indices(self) -> List[int]:
        out = []
        m = self.member_mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def trees(self) -> List[Tree]:
        return [self.gamma.tree(i) for i in self.indices()]

    def min_pairwise_intersection(self) -> Optional[int]:
        """Smallest number of shared edges over all member pairs (None if < 2 members)."""
        idx = self.indices()
        masks = self.gamma.masks
        best = None
        for a in range(len(idx)):
            ma = masks[idx[a]]
            for b in range(a + 1, len(idx)):
                c = (ma & masks[idx[b]]).bit_count()
                if best is None or c < best:
                    best = c
        return best

    def is_independent(self) -> bool:
        """No two members adjacent in the disjointness graph."""
        for i in self.indices():
            if self.gamma.adj[i] & self.member_mask:
                return False
        return True

    def is_clique(self) -> bool:
        mm = self.member_mask
        for i in self.indices():
            if (self.gamma.adj[i] | 1 << i) & mm != mm:
                return False
        return True


class SearchResult:
    """Outcome of an exact family search: the family, optimality, node count."""

    __slots__ = ("family", "optimal", "nodes")

    def __init__(self, family: TreeFamily, optimal: bool, nodes: int):
        self.family = family
        self.optimal = optimal
        self.nodes = nodes

    @property
    def size(self) -> int:
        return self.family.size

    def __repr__(self):
        tag = "optimal" if self.optimal else "budget-exhausted"
        return f"SearchResult(size={self.size}, {tag}, nodes={self.nodes})"


class _BudgetExhausted(Exception):
    pass


def _degeneracy_order(adj: List[int]) -> List[int]:
    """Vertices in degeneracy order (minimum remaining degree, ties: lowest index)."""
    V = len(adj)
    remaining = (1 << V) - 1
    deg = [r.bit_count() for r in adj]
    order = []
    for _ in range(V):
        best = -1
        bd = V + 1
        m = remaining
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if deg[v] < bd:
                bd = deg[v]
                best = v
        order.append(best)
        remaining &= ~(1 << best)
        nb = adj[best] & remaining
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            deg[w] -= 1
    return order


def _greedy_clique(adj: List[int]) -> int:
    """Deterministic greedy clique (seed lower bound); returns a member bitmask."""
    V = len(adj)
    if V == 0:
        return 0
    start = max(range(V), key=lambda v: (adj[v].bit_count(), -v))
    clique = 1 << start
    cand = adj[start]
    while cand:
        best_v, best_sc = -1, -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            sc = (adj[v] & cand).bit_count()
            if sc > best_sc:
                best_sc, best_v = sc, v
        clique |= 1 << best_v
        cand &= adj[best_v]
    return clique


def _color_sort(P: int, adj: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy colouring of the candidate set; vertices with colour bounds ascending."""
    order: List[int] = []
    colors: List[int] = []
    color = 0
    work = P
    while work:
        color += 1
        q = work
        cmask = 0
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            cmask |= low
            q &= ~low
            q &= ~adj[v]
        work &= ~cmask
    return order, colors


def _max_clique_bitset(adj: List[int], budget: int) -> Tuple[int, bool, int]:
    """Exact maximum clique on bit-packed adjacency; returns (mask, optimal, nodes).

    Branch and bound in degeneracy order with a greedy-colouring upper bound;
    nodes are vertex expansions.  Deterministic: ties always resolve to the
    lowest vertex index.  Exceeding the node budget returns the best clique
    found so far with optimal=False.
    """
    V = len(adj)
    if V == 0:
        return 0, True, 0
    order = _degeneracy_order(adj)
    pos = [0] * V
    for newi, oldv in enumerate(order):
        pos[oldv] = newi
    radj = [0] * V
    for oldv in range(V):
        ni = pos[oldv]
        m = adj[oldv]
        rel = 0
        while m:
            low = m & -m
            rel |= 1 << pos[low.bit_length() - 1]
            m ^= low
        radj[ni] = rel
    seed = _greedy_clique(radj)
    best_mask = seed
    best_size = seed.bit_count()
    nodes = 0
    optimal = True

    # iterative branch and bound (depth equals clique size, so no recursion):
    # each frame is [size, rmask, local, order, colors, i] with i scanning the
    # coloured candidates from the highest bound downwards
    first_order, first_colors = _color_sort((1 << V) - 1, radj)
    stack = [[0, 0, (1 << V) - 1, first_order, first_colors, len(first_order) - 1]]
    try:
        while stack:
            frame = stack[-1]
            size, rmask = frame[0], frame[1]
            pushed = False
            i = frame[5]
            while i >= 0:
                if size + frame[4][i] <= best_size:
                    i = -1
                    break
                v = frame[3][i]
                vbit = 1 << v
                i -= 1
                if not (frame[2] & vbit):
                    continue
                nodes += 1
                if nodes > budget:
                    raise _BudgetExhausted
                frame[2] &= ~vbit
                p2 = frame[2] & radj[v]  # v is not its own neighbour
                if p2:
                    order2, colors2 = _color_sort(p2, radj)
                    frame[5] = i
                    stack.append(
                        [size + 1, rmask | vbit, p2, order2, colors2, len(order2) - 1]
                    )
                    pushed = True
                    break
                if size + 1 > best_size:
                    best_size = size + 1
                    best_mask = rmask | vbit
            if not pushed:
                frame[5] = i
                if i < 0:
                    stack.pop()
    except _BudgetExhausted:
        optimal = False
    # map back to original vertex labels
    out = 0
    m = best_mask
    while m:
        low = m & -m
        out |= 1 << order[low.bit_length() - 1]
        m ^= low
    return out, optimal, nodes


def max_clique(
    gamma: DisjointnessGraph, budget: int = DEFAULT_NODE_BUDGET
) -> SearchResult:
    """Maximum clique of Gamma_t (a family of pairwise <t-sharing trees)."""
    mask, optimal, nodes = _max_clique_bitset(gamma.adj, budget)
    fam = TreeFamily(gamma, mask)
    assert fam.is_clique()
    return SearchResult(fam, optimal, nodes)


def max_independent_set(
    gamma: DisjointnessGraph, budget: int = DEFAULT_NODE_BUDGET
) -> SearchResult:
    """Maximum independent set of Gamma_t = largest pairwise t-intersecting family."""
    mask, optimal, nodes = _max_clique_bitset(gamma.complement_rows(), budget)
    fam = TreeFamily(gamma, mask)
    assert fam.is_independent()
    return SearchResult(fam, optimal, nodes)


# -- tree packing (Tutte / Nash-Williams) -------------------------------------


def iter_set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Restricted-growth strings: block label of each of n items, a[0] = 0."""
    if n == 0:
        return
    a = [0] * n

    def rec(i, mx):
        if i == n:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


class PackingResult:
    """Packing number with both certificates: the witness trees (lower bound)
    and the minimizing partition (upper bound)."""

    __slots__ = ("number", "witness", "partition", "cross_edges")

    def __init__(self, number, witness, partition, cross_edges):
        self.number = number
        self.witness = witness
        self.partition = partition
        self.cross_edges = cross_edges

    def to_dict(self) -> dict:
        return {
            "packing": self.number,
            "witness": [[list(e) for e in t.edges] for t in self.witness],
            "partition": [list(b) for b in self.partition],
            "cross_edges": self.cross_edges,
        }


def _partition_minimum(g: SimpleGraph) -> Tuple[int, List[Tuple[int, ...]], int]:
    """min over partitions (k >= 2 blocks) of floor(cross/(k-1)), with argmin."""
    n = g.n
    best = None
    best_labels = None
    best_cross = None
    for labels in iter_set_partitions(n):
        k = max(labels) + 1
        if k < 2:
            continue
        cross = 0
        for u, v in g.edges:
            if labels[u - 1] != labels[v - 1]:
                cross += 1
        val = cross // (k - 1)
        if best is None or val < best:
            best, best_labels, best_cross = val, labels, cross
    blocks: dict = {}
    for i, lab in enumerate(best_labels):
        blocks.setdefault(lab, []).append(i + 1)
    return best, [tuple(b) for b in blocks.values()], best_cross


def _find_edge_disjoint_trees(g: SimpleGraph, l: int) -> Optional[List[Tree]]:
    """Backtracking search for l pairwise edge-disjoint spanning trees of g.

    Edges are processed in lexicographic order; each is assigned to one of the
    l forests (if it joins two of that forest's components) or skipped when
    enough edges remain.  Symmetry break: forest k may receive its first edge
    only after forest k-1 has one.  Prune: every forest must stay completable
    from the unprocessed edges.  Deterministic; first solution wins.
    """
    n = g.n
    m = len(g.edges)
    need = l * (n - 1)
    if m < need or l <= 0:
        return [] if l == 0 else None
    # suffix[i] = edges i..m-1, used for completability probes
    edges = list(g.edges)
    forests = [_DSU(n) for _ in range(l)]
    counts = [0] * l
    assignment: List[int] = []

    def completable(start: int) -> bool:
        rest = edges[start:]
        if sum(n - 1 - c for c in counts) > m - start:
            return False
        for f, c in zip(forests, counts):
            if c == n - 1:
                continue
            probe = _DSU(n)
            probe.parent = f.parent[:]
            probe.size = f.size[:]
            parts = n - c
            for u, v in rest:
                if probe.union(u, v):
                    parts -= 1
                    if parts == 1:
                        break
            if parts != 1:
                return False
        return True

    def rec(i: int) -> bool:
        if all(c == n - 1 for c in counts):
            return True
        if i == m or not completable(i):
            return False
        u, v = edges[i]
        first_empty = True
        for k in range(l):
            if counts[k] == 0:
                if not first_empty:
                    break  # symmetry: empty forests are interchangeable
                first_empty = False
            if counts[k] == n - 1:
                continue
            f = forests[k]
            ru, rv = f.find(u), f.find(v)
            if ru == rv:
                continue
            su, sv = f.size[ru], f.size[rv]
            f.parent[ru] = rv
            f.size[rv] = su + sv
            counts[k] += 1
            assignment.append(k)
            if rec(i + 1):
                return True
            assignment.pop()
            counts[k] -= 1
            f.size[rv] = sv
            f.parent[ru] = ru
        # skip this edge if the remainder can still supply everyone
        assignment.append(-1)
        if rec(i + 1):
            return True
        assignment.pop()
        return False

    if not rec(0):
        return None
    tree_edges: List[List[Edge]] = [[] for _ in range(l)]
    for e, k in zip(edges, assignment):
        if k >= 0:
            tree_edges[k].append(e)
    return [Tree(n, es) for es in tree_edges]


def packing_number(g: SimpleGraph) -> PackingResult:
    """Maximum number of pairwise edge-disjoint spanning trees of g.

    Computed as the Nash-Williams partition minimum (exhaustive over set
    partitions, so n <= 10), certified from below by an explicitly found
    packing of that many trees.
    """
    if g.n > 10:
        raise CapExceeded(
            f"partition enumeration needs n <= 10, got {g.n}", "packing_cap", 10
        )
    if not g.is_connected():
        dsu = _DSU(g.n)
        for u, v in g.edges:
            dsu.union(u, v)
        blocks: dict = {}
        for x in range(1, g.n + 1):
            blocks.setdefault(dsu.find(x), []).append(x)
        return PackingResult(0, [], [tuple(b) for b in blocks.values()], 0)
    bound, partition, cross = _partition_minimum(g)
    witness = _find_edge_disjoint_trees(g, bound)
    if witness is None:
        raise AssertionError(
            f"no packing of size {bound} found; partition bound must be wrong"
        )
    return PackingResult(bound, witness, partition, cross)
