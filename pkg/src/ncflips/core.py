"""Cyclic-order combinatorics of points in convex position.

A point set in convex position is described by its size ``n`` alone: the
points are the indices ``0..n-1`` in counter-clockwise order.  Whether two
straight segments cross then depends only on how their endpoints interleave
along the cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class cached_property:
    """Compute-once attribute; unlike :func:`functools.cached_property` on
    Python 3.10 it takes no lock, which matters for millions of small trees.
    Safe on frozen dataclasses because it writes the instance ``__dict__``."""

    def __init__(self, fn):
        self.fn = fn
        self.name = fn.__name__
        self.__doc__ = fn.__doc__

    def __get__(self, obj, cls=None):
        if obj is None:
            return self
        value = self.fn(obj)
        obj.__dict__[self.name] = value
        return value


class Edge(NamedTuple):
    """Unordered pair of point indices, stored with ``a < b``."""

    a: int
    b: int

    @classmethod
    def of(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise ValueError(f"degenerate edge ({u}, {v})")
        return cls(u, v) if u < v else cls(v, u)

    def is_border(self, n: int) -> bool:
        return self.b - self.a == 1 or (self.a == 0 and self.b == n - 1)

    def is_chord(self, n: int) -> bool:
        return not self.is_border(n)

    def shares_endpoint(self, other: "Edge") -> bool:
        return self.a in other or self.b in other

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True)
class ConvexInstance:
    """``n`` points in convex position, identified with ``0..n-1``."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"instance needs at least one point, got n={self.n}")

    def check_edge(self, e: Edge) -> None:
        if not (0 <= e.a < e.b < self.n):
            raise IndexError(f"edge {tuple(e)} out of range for n={self.n}")

    def hull_pairs(self) -> list[Edge]:
        """The consecutive pairs ``(i, i+1 mod n)`` as edges, sorted."""
        if self.n < 2:
            return []
        if self.n == 2:
            return [Edge(0, 1)]
        return sorted(Edge.of(i, (i + 1) % self.n) for i in range(self.n))


def _crosses(a: int, b: int, c: int, d: int) -> bool:
    # a < b and c < d; no bounds checks
    if a == c or a == d or b == c or b == d:
        return False
    return (a < c < b) != (a < d < b)


def crossing(n: int, e1: Edge, e2: Edge) -> bool:
    """True iff the segments ``e1`` and ``e2`` cross in their interiors.

    >>> crossing(4, Edge(0, 2), Edge(1, 3))
    True
    >>> crossing(4, Edge(0, 2), Edge(0, 1))
    False
    """
    for e in (e1, e2):
        if not (0 <= e[0] < n and 0 <= e[1] < n):
            raise IndexError(f"edge {tuple(e)} out of range for n={n}")
    a, b = sorted(e1)
    c, d = sorted(e2)
    return _crosses(a, b, c, d)


class TreeError(ValueError):
    """An edge set is not a non-crossing spanning tree."""


class WrongEdgeCount(TreeError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} edges, got {got}")
        self.expected = expected
        self.got = got


class NotSpanning(TreeError):
    def __init__(self, component: list[int]):
        super().__init__(f"not spanning: component {component} is cut off from point 0")
        self.component = component


class HasCycle(NotSpanning):
    """With ``n - 1`` edges a cycle always leaves some point unreached."""

    def __init__(self, cycle: list[int], component: list[int]):
        TreeError.__init__(
            self, f"contains the cycle {cycle}; component {component} is cut off from point 0"
        )
        self.cycle = cycle
        self.component = component


class HasCrossing(TreeError):
    def __init__(self, e1: Edge, e2: Edge):
        super().__init__(f"edges {tuple(e1)} and {tuple(e2)} cross")
        self.e1 = e1
        self.e2 = e2


@dataclass(frozen=True)
class Tree:
    """A non-crossing spanning tree on ``n`` points in convex position.

    Instances are immutable.  Use :func:`validate_tree` to build one from
    untrusted input; the constructor itself does not check the invariants.
    """

    n: int
    edges: frozenset[Edge] = field(compare=True)

    @property
    def instance(self) -> ConvexInstance:
        return ConvexInstance(self.n)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def chords(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.sorted_edges if not e.is_border(self.n))

    @cached_property
    def border_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.sorted_edges if e.is_border(self.n))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        # edges are visited in sorted order, so every list comes out sorted
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.sorted_edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(map(tuple, adj))

    @cached_property
    def chord_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.chords:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(map(tuple, adj))

    @cached_property
    def hole_prefix(self) -> tuple[int, ...]:
        """``hole_prefix[i]`` counts the holes with low index below ``i``."""
        out = [0]
        n = self.n
        for i in range(n):
            gap = n >= 3 and Edge.of(i, (i + 1) % n) not in self.edges
            out.append(out[-1] + gap)
        return tuple(out)

    @cached_property
    def chord_degree_prefix(self) -> tuple[int, ...]:
        out = [0]
        for nbrs in self.chord_adjacency:
            out.append(out[-1] + len(nbrs))
        return tuple(out)

    @cached_property
    def degree_prefix(self) -> tuple[int, ...]:
        out = [0]
        for nbrs in self.adjacency:
            out.append(out[-1] + len(nbrs))
        return tuple(out)

    def __contains__(self, e: object) -> bool:
        return e in self.edges

    def __iter__(self):
        return iter(self.sorted_edges)

    def __len__(self) -> int:
        return len(self.edges)

    def has_pair(self, u: int, v: int) -> bool:
        return Edge.of(u, v) in self.edges

    def replace(self, remove: Edge, add: Edge) -> "Tree":
        """The edge set ``(T - remove) + add``, without any validity check."""
        return Tree(self.n, (self.edges - {remove}) | {add})

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of the unique tree path from ``u`` to ``v``."""
        parent = {u: u}
        stack = [u]
        adj = self.adjacency
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        return out[::-1]

    def path_edges(self, u: int, v: int) -> list[Edge]:
        p = self.path(u, v)
        return [Edge.of(x, y) for x, y in zip(p, p[1:])]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Tree":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError("tree JSON needs keys 'n' and 'edges'")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"'n' must be an integer, got {n!r}")
        pairs = []
        for item in data["edges"]:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise ValueError(f"malformed edge {item!r}")
            pairs.append(tuple(item))
        return validate_tree(n, pairs)

    @classmethod
    def loads(cls, text: str) -> "Tree":
        return cls.from_json(json.loads(text))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={[tuple(e) for e in self.sorted_edges]})"


def make_edges(n: int, pairs: Iterable) -> frozenset[Edge]:
    inst = ConvexInstance(n)
    out = set()
    for p in pairs:
        u, v = p
        e = Edge.of(int(u), int(v))
        inst.check_edge(e)
        out.add(e)
    return frozenset(out)


def validate_tree(n: int, pairs: Iterable) -> Tree:
    """Build a :class:`Tree`, or raise the first violated property.

    Checks run in the order: edge count, spanning, non-crossing.  With
    exactly ``n - 1`` edges, failing to span and containing a cycle are the
    same event; it is reported as :class:`HasCycle` (a :class:`NotSpanning`)
    carrying both a cycle and a cut-off component.

    >>> validate_tree(4, [(0, 3), (1, 2), (0, 2)]).chords
    (Edge(a=0, b=2),)
    """
    edges = make_edges(n, pairs)
    expected = max(n - 1, 0)
    if len(edges) != expected:
        raise WrongEdgeCount(expected, len(edges))

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    closing = None
    for e in sorted(edges):
        ra, rb = find(e.a), find(e.b)
        if ra == rb:
            closing = closing or e
        else:
            parent[ra] = rb
    if closing is not None:
        cycle = Tree(n, edges - {closing}).path(closing.a, closing.b)
        root = find(0)
        first_out = next(v for v in range(n) if find(v) != root)
        component = [v for v in range(n) if find(v) == find(first_out)]
        raise HasCycle(cycle, component)
    ordered = sorted(edges)
    for i, e in enumerate(ordered):
        for f in ordered[i + 1:]:
            if _crosses(e.a, e.b, f.a, f.b):
                raise HasCrossing(e, f)
    return Tree(n, edges)


def hull_path(n: int, missing: int | None = None) -> Tree:
    """The tree made of all consecutive pairs except ``(missing, missing+1)``.

    By default the missing pair is ``(n-1, 0)``.
    """
    if missing is None:
        missing = n - 1
    pairs = [(i, (i + 1) % n) for i in range(n) if i != missing % max(n, 1)]
    if n <= 2:
        pairs = [(0, 1)] if n == 2 else []
    return validate_tree(n, pairs)


class Hole(NamedTuple):
    """The consecutive pair ``(low, low + 1 mod n)``, missing from a tree."""

    low: int

    def pair(self, n: int) -> Edge:
        return Edge.of(self.low, (self.low + 1) % n)

    def high(self, n: int) -> int:
        return (self.low + 1) % n


def holes(tree: Tree) -> list[Hole]:
    """Consecutive pairs that are not tree edges, sorted by low index.

    For ``n >= 3`` there is always one more hole than there are chords.
    """
    n = tree.n
    if n < 3:
        return []
    return [Hole(i) for i in range(n) if Edge.of(i, (i + 1) % n) not in tree.edges]


@dataclass(frozen=True)
class SymmetricDifference:
    only_in_first: frozenset[Edge]
    only_in_second: frozenset[Edge]

    @property
    def delta(self) -> int:
        return len(self.only_in_first)


class InstanceMismatch(ValueError):
    def __init__(self, n1: int, n2: int):
        super().__init__(f"trees live on different instances (n={n1} vs n={n2})")
        self.n1 = n1
        self.n2 = n2


def check_same_instance(t1: Tree, t2: Tree) -> None:
    if t1.n != t2.n:
        raise InstanceMismatch(t1.n, t2.n)


def symmetric_difference(t1: Tree, t2: Tree) -> SymmetricDifference:
    check_same_instance(t1, t2)
    return SymmetricDifference(t1.edges - t2.edges, t2.edges - t1.edges)


def delta(t1: Tree, t2: Tree) -> int:
    return symmetric_difference(t1, t2).delta
