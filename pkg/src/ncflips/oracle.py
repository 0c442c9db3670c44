"""Exhaustive configuration graphs of non-crossing spanning trees.

Trees are encoded as bitmasks over the ``n(n-1)/2`` edges in lexicographic
order.  The neighbours of a tree are generated without trial flips: after
removing a tree edge ``e`` the candidates are the edges across the cut
that cross nothing but (for the flip model) possibly ``e`` itself.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core import Edge, Tree, _crosses, check_same_instance, hull_path
from .flipmodel import FlipModel

TreeKey = int

DEFAULT_CAP = 10
DIAMETER_CAP = 8


class CapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"n={n} exceeds the oracle cap of {cap}")
        self.n = n
        self.cap = cap


def tree_count(n: int) -> int:
    """Number of non-crossing spanning trees on ``n`` points in convex position."""
    if n < 2:
        return 1
    return math.comb(3 * n - 3, n - 1) // (2 * n - 1)


class EdgeTable:
    """Bit layout and precomputed masks for one instance size."""

    def __init__(self, n: int):
        self.n = n
        self.edges = [Edge(a, b) for a in range(n) for b in range(a + 1, n)]
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.all_mask = (1 << len(self.edges)) - 1
        self.cross = [
            sum(1 << j for j, f in enumerate(self.edges) if _crosses(e.a, e.b, f.a, f.b))
            for e in self.edges
        ]
        self.at_vertex = [0] * n
        for i, (a, b) in enumerate(self.edges):
            self.at_vertex[a] |= 1 << i
            self.at_vertex[b] |= 1 << i
        self.incident = [
            (self.at_vertex[a] | self.at_vertex[b]) & ~(1 << i)
            for i, (a, b) in enumerate(self.edges)
        ]
        # cut[S]: edges with exactly one endpoint in the vertex set S
        cut = [0] * (1 << n)
        for s in range(1, 1 << n):
            low = s & -s
            cut[s] = cut[s ^ low] ^ self.at_vertex[low.bit_length() - 1]
        self.cut = cut

    def key(self, tree: Tree) -> TreeKey:
        return sum(1 << self.index[e] for e in tree.edges)

    def tree(self, key: TreeKey) -> Tree:
        return Tree(self.n, frozenset(self.edges[i] for i in _bits(key)))

    def neighbor_keys(self, key: TreeKey, model: FlipModel) -> list[TreeKey]:
        n = self.n
        edges = self.edges
        tree_ids = list(_bits(key))
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in tree_ids:
            a, b = edges[i]
            adj[a].append((b, i))
            adj[b].append((a, i))
        # subtree vertex mask below each tree edge, rooted at point 0
        order, parent_edge = [0], {0: -1}
        for v in order:
            for w, i in adj[v]:
                if w not in parent_edge:
                    parent_edge[w] = i
                    order.append(w)
        below = {}
        sub = [1 << v for v in range(n)]
        for v in reversed(order[1:]):
            i = parent_edge[v]
            below[i] = sub[v]
            a, b = edges[i]
            sub[a if b == v else b] |= sub[v]
        free = 0
        single: dict[int, int] = {}
        rest = self.all_mask & ~key
        for j in _bits(rest):
            c = self.cross[j] & key
            if c == 0:
                free |= 1 << j
            elif c & (c - 1) == 0:
                single[c] = single.get(c, 0) | (1 << j)
        out = []
        for i in tree_ids:
            bit = 1 << i
            if model is FlipModel.NCFLIP:
                cand = free
            else:
                cand = free | single.get(bit, 0)
            cand &= self.cut[below[i]]
            if model is FlipModel.ROTATION:
                cand &= self.incident[i]
            base = key ^ bit
            out.extend(base | (1 << j) for j in _bits(cand))
        return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def edge_table(n: int) -> EdgeTable:
    return EdgeTable(n)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(n, cap)


def _expand(args: tuple[int, str, list[TreeKey]]) -> list[list[TreeKey]]:
    n, model, keys = args
    table = edge_table(n)
    m = FlipModel(model)
    return [table.neighbor_keys(k, m) for k in keys]


def _expand_all(n: int, model: FlipModel, keys: list[TreeKey], jobs: int) -> list[list[TreeKey]]:
    """Neighbour lists of ``keys``, in order; split over ``jobs`` processes."""
    if jobs <= 1 or len(keys) < 2048:
        table = edge_table(n)
        return [table.neighbor_keys(k, model) for k in keys]
    size = -(-len(keys) // (4 * jobs))
    chunks = [(n, model.value, keys[i:i + size]) for i in range(0, len(keys), size)]
    out: list[list[TreeKey]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_expand, chunks):
            out.extend(part)
    return out


def enumerate_keys(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[TreeKey]:
    """All tree keys for ``n`` points, sorted."""
    if n < 3:
        raise ValueError("enumeration needs n >= 3")
    _check_cap(n, cap)
    table = edge_table(n)
    start = table.key(hull_path(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for nbrs in _expand_all(n, FlipModel.FLIP, frontier, jobs):
            for k in nbrs:
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = sorted(nxt)
    return sorted(seen)


def enumerate_trees(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> Iterator[Tree]:
    """Every non-crossing spanning tree on ``n`` points, in sorted key order.

    Enumeration is a breadth-first search of the flip graph from a hull
    path, which is connected.
    """
    keys = enumerate_keys(n, cap, jobs)
    table = edge_table(n)
    return (table.tree(k) for k in keys)


def neighbors(tree: Tree, model: FlipModel = FlipModel.FLIP) -> list[Tree]:
    """Trees one model-valid step away, sorted by key."""
    table = edge_table(tree.n)
    keys = sorted(set(table.neighbor_keys(table.key(tree), model)))
    return [table.tree(k) for k in keys]


@dataclass
class ConfigGraphStats:
    n: int
    model: FlipModel
    tree_count: int
    queried_distances: dict[tuple[TreeKey, TreeKey], int | None] = field(default_factory=dict)


class ConfigGraph:
    """Distance queries on the configuration graph of one instance and model.

    All three relations are symmetric (see :mod:`ncflips.flipmodel`), so
    distances come from a bidirectional breadth-first search.
    """

    def __init__(self, n: int, model: FlipModel = FlipModel.FLIP, cap: int = DEFAULT_CAP,
                 jobs: int = 1):
        if n < 3:
            raise ValueError("configuration graphs need n >= 3")
        _check_cap(n, cap)
        self.n = n
        self.model = model
        self.jobs = jobs
        self.table = edge_table(n)
        self.stats = ConfigGraphStats(n, model, tree_count(n))
        self._cache: dict[TreeKey, list[TreeKey]] = {}

    def _nbrs(self, keys: list[TreeKey]) -> list[list[TreeKey]]:
        todo = [k for k in keys if k not in self._cache]
        for k, nb in zip(todo, _expand_all(self.n, self.model, todo, self.jobs)):
            self._cache[k] = nb
        return [self._cache[k] for k in keys]

    def distance(self, t1: Tree, t2: Tree) -> int | None:
        """Exact flip distance, or ``None`` when ``t2`` is unreachable."""
        check_same_instance(t1, t2)
        if t1.n != self.n:
            raise ValueError(f"graph is for n={self.n}, trees have n={t1.n}")
        k1, k2 = self.table.key(t1), self.table.key(t2)
        d = self._bidirectional(k1, k2)
        self.stats.queried_distances[(k1, k2)] = d
        return d

    def _bidirectional(self, k1: TreeKey, k2: TreeKey) -> int | None:
        if k1 == k2:
            return 0
        dist = [{k1: 0}, {k2: 0}]
        frontier = [[k1], [k2]]
        while frontier[0] and frontier[1]:
            side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
            here, there = dist[side], dist[1 - side]
            best = None
            nxt = []
            layer = sorted(frontier[side])
            for k, nbrs in zip(layer, self._nbrs(layer)):
                for m in nbrs:
                    if m in there:
                        total = here[k] + 1 + there[m]
                        best = total if best is None else min(best, total)
                    if m not in here:
                        here[m] = here[k] + 1
                        nxt.append(m)
            if best is not None:
                return best
            frontier[side] = nxt
        return None


def flip_distance(t1: Tree, t2: Tree, model: FlipModel = FlipModel.FLIP,
                  cap: int = DEFAULT_CAP, jobs: int = 1) -> int | None:
    """Length of a shortest ``model`` flip sequence from ``t1`` to ``t2``."""
    return ConfigGraph(t1.n, model, cap, jobs).distance(t1, t2)


def _dihedral_images(n: int, key: TreeKey, table: EdgeTable) -> Iterable[TreeKey]:
    edges = [table.edges[i] for i in _bits(key)]
    for r in range(n):
        for flip in (False, True):
            out = 0
            for a, b in edges:
                if flip:
                    a, b = (r - a) % n, (r - b) % n
                else:
                    a, b = (a + r) % n, (b + r) % n
                out |= 1 << table.index[Edge.of(a, b)]
            yield out


def diameter(n: int, model: FlipModel = FlipModel.FLIP, cap: int = DIAMETER_CAP,
             jobs: int = 1) -> int | None:
    """Largest distance between two trees; ``None`` if the graph is disconnected.

    Eccentricity is invariant under rotations and reflections of the
    point set, so one breadth-first search per dihedral orbit suffices.
    """
    _check_cap(n, cap)
    table = edge_table(n)
    keys = enumerate_keys(n, max(cap, n), jobs)
    index = {k: i for i, k in enumerate(keys)}
    rows, cols = [], []
    for i, nbrs in enumerate(_expand_all(n, model, keys, jobs)):
        for m in nbrs:
            rows.append(i)
            cols.append(index[m])
    size = len(keys)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    reps = sorted({min(_dihedral_images(n, k, table)) for k in keys})
    best = 0
    for start in range(0, len(reps), 256):
        batch = [index[k] for k in reps[start:start + 256]]
        dist = shortest_path(graph, method="D", directed=True, unweighted=True, indices=batch)
        if np.isinf(dist).any():
            return None
        best = max(best, int(dist.max()))
    return best
