"""Canonical labelled trees and forests on the vertex set {1, ..., n}.

Everything downstream (counting, spread checks, disjointness graphs) builds
on the representations here:

  * an edge is an ordered pair (u, v) with 1 <= u < v <= n;
  * a Forest stores a strictly sorted tuple of edges and is validated acyclic,
    so equal forests have equal (hashable) representations;
  * a Tree is a Forest with exactly n - 1 edges (hence connected);
  * the Prufer bijection (smallest-labelled-leaf deletion convention) gives a
    total order on the n^(n-2) spanning trees of K_n: the "tree index" of a
    tree is the base-n integer spelled by its code.

Bit-packed edge sets: the C(n,2) possible edges are numbered lexicographically
and a tree/forest becomes an int bitmask, which is what the bulk sweeps and
the disjointness-graph code operate on.
"""

from __future__ import annotations

import heapq
import json
import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Edge = Tuple[int, int]

DEFAULT_ENUM_CAP = 8


class CapExceeded(ValueError):
    """A configured combinatorial cap (enumeration, IE subsets, ...) was hit."""

    def __init__(self, message: str, cap_name: str, cap_value: int):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap_value = cap_value


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to the canonical (min, max) form."""
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


def _normalize_edges(n: int, edges: Iterable) -> Tuple[Edge, ...]:
    out = []
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        out.append(edge(u, v))
    out.sort()
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"duplicate edge {a}")
    return tuple(out)


class _DSU:
    """Union-find over 1..n, union by size, used for acyclicity/components."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False if already joined (a cycle)."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class Forest:
    """An acyclic edge set on {1, ..., n}, stored in canonical sorted form."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 1:
            raise ValueError(f"vertex count n={n} must be >= 1")
        es = _normalize_edges(n, edges)
        dsu = _DSU(n)
        for u, v in es:
            if not dsu.union(u, v):
                raise ValueError(f"edge set contains a cycle through ({u},{v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)

    def __setattr__(self, name, value):
        raise AttributeError("Forest is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Forest)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)})"

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def degrees(self) -> list:
        """Degree of every vertex, index 1..n (index 0 unused)."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def components(self) -> list:
        """Non-trivial connected components as sorted vertex tuples.

        Isolated vertices are not included; see isolated_vertices().
        Component order: by smallest member vertex.
        """
        dsu = _DSU(self.n)
        touched = set()
        for u, v in self.edges:
            dsu.union(u, v)
            touched.add(u)
            touched.add(v)
        groups = {}
        for x in sorted(touched):
            groups.setdefault(dsu.find(x), []).append(x)
        return [tuple(g) for g in sorted(groups.values())]

    def component_sizes(self) -> Tuple[int, ...]:
        """Sizes q_1, ..., q_m of the non-trivial components (each >= 2)."""
        return tuple(len(c) for c in self.components())

    def isolated_vertices(self) -> Tuple[int, ...]:
        touched = set()
        for u, v in self.edges:
            touched.add(u)
            touched.add(v)
        return tuple(x for x in range(1, self.n + 1) if x not in touched)

    # -- serialization ------------------------------------------------------

    def to_edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)

    def to_json_array(self) -> str:
        return json.dumps([[u, v] for u, v in self.edges])

    @classmethod
    def from_edge_list_text(cls, text: str, n: Optional[int] = None) -> "Forest":
        es = parse_edge_list(text)
        if n is None:
            n = max((v for _, v in es), default=1)
        return cls(n, es)

    @classmethod
    def from_json_array(cls, text: str, n: Optional[int] = None) -> "Forest":
        pairs = json.loads(text)
        es = [edge(int(u), int(v)) for u, v in pairs]
        if n is None:
            n = max((max(u, v) for u, v in es), default=1)
        return cls(n, es)


class Tree(Forest):
    """A spanning tree of K_n: an acyclic edge set with exactly n - 1 edges."""

    def __init__(self, n: int, edges: Iterable):
        if n < 2:
            raise ValueError(f"spanning trees need n >= 2, got n={n}")
        super().__init__(n, edges)
        if len(self.edges) != n - 1:
            raise ValueError(
                f"not a spanning tree: {len(self.edges)} edges on {n} vertices"
            )


def parse_edge_list(text: str) -> list:
    """Parse the whitespace edge-list format: one "u v" per line.

    Blank lines and lines starting with '#' are ignored.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        out.append(edge(int(parts[0]), int(parts[1])))
    return out


# -- module-level operation aliases -----------------------------------------


def components(f: Forest) -> list:
    """Connected components (non-trivial) of a forest; see Forest.components."""
    return f.components()


def intersection_size(a: Forest, b: Forest) -> int:
    """Number of common edges of two forests/trees on the same vertex set."""
    if a.n != b.n:
        raise ValueError(f"vertex counts differ: {a.n} != {b.n}")
    return len(a.edge_set() & b.edge_set())


def is_star(t: Tree) -> bool:
    """True iff some vertex has degree n - 1 (the tree is a star)."""
    return max(t.degrees()) == t.n - 1


def is_d_star_like(f: Forest, d) -> bool:
    """True iff some edge of f meets at least (n-1)/d other edges of f.

    Equivalently: the line graph of f has max degree >= (n-1)/d.  The
    comparison is exact (d may be a Fraction); larger d weakens the
    requirement, so the predicate is monotone in d.
    """
    d = Fraction(d)
    if d <= 0:
        raise ValueError("d must be positive")
    if not f.edges:
        return False
    deg = f.degrees()
    line_max = max(deg[u] + deg[v] - 2 for u, v in f.edges)
    return line_max * d >= f.n - 1


# -- Prufer bijection --------------------------------------------------------


def prufer_encode(t: Tree) -> Tuple[int, ...]:
    """Prufer code of a spanning tree, length n - 2.

    Convention: repeatedly delete the leaf with the smallest label and append
    its unique neighbour.
    """
    n = t.n
    if len(t.edges) != n - 1:
        raise ValueError("prufer_encode requires a spanning tree")
    if n == 2:
        return ()
    adj = [set() for _ in range(n + 1)]
    for u, v in t.edges:
        adj[u].add(v)
        adj[v].add(u)
    leaves = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        code.append(nb)
        adj[nb].discard(leaf)
        adj[leaf].clear()
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return tuple(code)


def _decode_edges(n: int, code: Sequence[int]) -> list:
    """O(n) Prufer decode to an edge list (inverse of smallest-leaf encode)."""
    degree = [1] * (n + 1)
    for c in code:
        degree[c] += 1
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for c in code:
        edges.append((leaf, c) if leaf < c else (c, leaf))
        degree[c] -= 1
        if degree[c] == 1 and c < ptr:
            leaf = c
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def prufer_decode(n: int, code: Sequence[int]) -> Tree:
    """The unique spanning tree whose Prufer code is `code`."""
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    code = tuple(int(c) for c in code)
    if len(code) != n - 2:
        raise ValueError(f"code length {len(code)} != n-2 = {n - 2}")
    for c in code:
        if not (1 <= c <= n):
            raise ValueError(f"code entry {c} out of range 1..{n}")
    return Tree(n, _decode_edges(n, code))


def tree_index(t: Tree) -> int:
    """Base-n integer of the Prufer code; a bijection T_n <-> [0, n^(n-2))."""
    n = t.n
    idx = 0
    for c in prufer_encode(t):
        idx = idx * n + (c - 1)
    return idx


def index_to_code(n: int, idx: int) -> Tuple[int, ...]:
    """Inverse of the base-n digit packing (most significant digit first)."""
    total = n ** (n - 2)
    if not (0 <= idx < total):
        raise ValueError(f"tree index {idx} out of range [0, {total})")
    code = []
    for _ in range(n - 2):
        idx, digit = divmod(idx, n)
        code.append(digit + 1)
    return tuple(reversed(code))


def tree_from_index(n: int, idx: int) -> Tree:
    return prufer_decode(n, index_to_code(n, idx))


def cayley_count(n: int) -> int:
    """n^(n-2), the number of labelled spanning trees of K_n."""
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    return n ** (n - 2)


def enumerate_trees(
    n: int,
    cap: int = DEFAULT_ENUM_CAP,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[Tree]:
    """All spanning trees of K_n in ascending tree-index order.

    `start`/`stop` select a tree-index interval, so iteration can be
    range-partitioned.  Refuses n above the enumeration cap.
    """
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    if n > cap:
        raise CapExceeded(
            f"n={n} exceeds the enumeration cap {cap}", "enum_cap", cap
        )
    total = cayley_count(n)
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise ValueError(f"bad index range [{start}, {stop}) for n={n}")
    if n == 2:
        if start == 0 and stop > 0:
            yield Tree(2, [(1, 2)])
        return
    for idx in range(start, stop):
        yield prufer_decode(n, index_to_code(n, idx))


def sample_uniform_tree(n: int, seed: int) -> Tree:
    """A uniformly random spanning tree of K_n from a seeded generator.

    Identical seed gives an identical tree (uniform Prufer code, decoded).
    """
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    rng = random.Random(seed)
    code = tuple(rng.randrange(1, n + 1) for _ in range(n - 2))
    return prufer_decode(n, code)


def sample_uniform_trees(n: int, seed: int, count: int) -> list:
    """`count` independent uniform spanning trees from one seeded stream."""
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        code = tuple(rng.randrange(1, n + 1) for _ in range(n - 2))
        out.append(prufer_decode(n, code))
    return out


# -- bit-packed edge sets ----------------------------------------------------


def edge_bit(n: int, u: int, v: int) -> int:
    """Lexicographic bit position of edge (u,v), u < v, in the C(n,2) order."""
    if u > v:
        u, v = v, u
    return (u - 1) * (2 * n - u) // 2 + (v - u - 1)


def all_edges(n: int) -> list:
    """All C(n,2) edges of K_n in lexicographic (= bit) order."""
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def edges_to_mask(n: int, edges: Iterable) -> int:
    mask = 0
    for u, v in edges:
        mask |= 1 << edge_bit(n, u, v)
    return mask


def mask_to_edges(n: int, mask: int) -> list:
    """Inverse of edges_to_mask (edges come out in lexicographic order)."""
    out = []
    for b, e in enumerate(all_edges(n)):
        if mask >> b & 1:
            out.append(e)
    return out


@lru_cache(maxsize=None)
def tree_masks(n: int) -> tuple:
    """Edge bitmasks of every spanning tree of K_n, indexed by tree index.

    Cached; cap enforcement is the caller's job (enumerate_trees applies it).
    """
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    if n == 2:
        return (1,)
    pos = [[0] * (n + 1) for _ in range(n + 1)]
    for u, v in all_edges(n):
        pos[u][v] = pos[v][u] = edge_bit(n, u, v)
    masks = []
    for code in product(range(1, n + 1), repeat=n - 2):
        mask = 0
        for a, b in _decode_edges(n, code):
            mask |= 1 << pos[a][b]
        masks.append(mask)
    return tuple(masks)


@lru_cache(maxsize=None)
def tree_mask_array(n: int):
    """tree_masks(n) as a numpy uint64 array (requires C(n,2) <= 64)."""
    import numpy as np

    if n * (n - 1) // 2 > 64:
        raise ValueError(f"edge masks for n={n} do not fit in 64 bits")
    return np.array(tree_masks(n), dtype=np.uint64)


@lru_cache(maxsize=None)
def star_masks(n: int) -> tuple:
    """Edge bitmasks of the n stars of K_n, in center order 1..n."""
    out = []
    for c in range(1, n + 1):
        out.append(edges_to_mask(n, (edge(c, x) for x in range(1, n + 1) if x != c)))
    return tuple(out)


# -- forest iteration --------------------------------------------------------


def iter_forests(
    n: int, max_edges: Optional[int] = None, min_edges: int = 0
) -> Iterator[Tuple[Edge, ...]]:
    """All forests on [n] with min_edges <= |E| <= max_edges, as edge tuples.

    Canonical order: depth-first over lexicographically increasing edge lists,
    a prefix before its extensions.  Includes the empty forest when
    min_edges == 0.
    """
    if max_edges is None:
        max_edges = n - 1
    max_edges = min(max_edges, n - 1 if n > 1 else 0)
    edges = all_edges(n)
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen = []

    def rec(start):
        if len(chosen) >= min_edges:
            yield tuple(chosen)
        if len(chosen) == max_edges:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            parent[ru] = rv
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            parent[ru] = ru

    yield from rec(0)


def iter_forests_with_count(
    n: int, max_edges: Optional[int] = None, min_edges: int = 0
) -> Iterator[Tuple[Tuple[Edge, ...], int]]:
    """Like iter_forests, but also yields |T_n[F]| for each forest F.

    The count is maintained incrementally from the component sizes (product
    of component sizes times n^(n-2-|F|)), so each forest costs O(1) beyond
    the iteration itself.
    """
    if max_edges is None:
        max_edges = n - 1
    max_edges = min(max_edges, n - 1 if n > 1 else 0)
    edges = all_edges(n)
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    npow = [n ** k for k in range(n - 1)]  # n^0 .. n^(n-2)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen = []

    def rec(start, prod):
        k = len(chosen)
        if k >= min_edges:
            e = n - 2 - k
            yield tuple(chosen), (prod * npow[e] if e >= 0 else prod // n)
        if k == max_edges:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            su, sv = size[ru], size[rv]
            parent[ru] = rv
            size[rv] = su + sv
            chosen.append(edges[i])
            yield from rec(i + 1, prod * (su + sv) // (su * sv))
            chosen.pop()
            parent[ru] = ru
            size[rv] = sv

    yield from rec(0, 1)
