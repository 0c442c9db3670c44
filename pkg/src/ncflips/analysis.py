"""Structural views of a tree relative to another: sides, degrees, faces,
border paths, and the good / very good / tau-extremal classification.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .core import Edge, Hole, Tree, _crosses, holes
from .exact import le_tau


class AnalysisError(ValueError):
    pass


class NotAChord(AnalysisError):
    pass


class NotAHole(AnalysisError):
    pass


class NotNicePair(AnalysisError):
    pass


class NoChord(AnalysisError):
    pass


class NoChordInSide(AnalysisError):
    pass


def _arc_sum(prefix: tuple[int, ...], start: int, length: int) -> int:
    """Sum of the per-point values at ``start, start+1, ...`` (``length`` points)."""
    n = len(prefix) - 1
    if length <= 0:
        return 0
    end = start + length
    if end <= n:
        return prefix[end] - prefix[start]
    return prefix[n] - prefix[start] + prefix[end - n]


@dataclass(frozen=True)
class Side:
    """Closed cyclic arc ``start, start+1, ..., end`` cut off by ``chord``."""

    n: int
    chord: Edge
    start: int
    end: int

    @property
    def size(self) -> int:
        return (self.end - self.start) % self.n + 1

    def offset(self, p: int) -> int:
        return (p - self.start) % self.n

    def __contains__(self, p: int) -> bool:
        return (p - self.start) % self.n < self.size

    def points(self) -> list[int]:
        return [(self.start + i) % self.n for i in range(self.size)]

    def is_interior(self, p: int) -> bool:
        return 0 < (p - self.start) % self.n < self.size - 1

    def holds(self, e: Edge) -> bool:
        """Both endpoints of ``e`` lie in the side."""
        return e.a in self and e.b in self

    def holds_hole(self, h: Hole) -> bool:
        return (h.low - self.start) % self.n < self.size - 1

    def contains_side(self, other: "Side") -> bool:
        if other.start not in self or other.end not in self:
            return False
        return self.offset(other.start) <= self.offset(other.end)

    def sub_side(self, e: Edge) -> "Side":
        """The arc between the endpoints of ``e`` that stays inside this side."""
        if not self.holds(e):
            raise AnalysisError(f"{tuple(e)} does not lie in the side")
        u, v = e
        if self.offset(u) > self.offset(v):
            u, v = v, u
        return Side(self.n, e, u, v)

    def inside_for(self, v: int, w: int) -> bool:
        """Whether ``v`` is inside this side for the pair ``vw``."""
        if v not in self:
            return False
        return (v != self.chord.a and v != self.chord.b) or w in self

    def to_json(self) -> dict:
        return {"chord": list(self.chord), "start": self.start, "end": self.end}

    def __str__(self) -> str:
        return f"side[{self.start}..{self.end}] of {self.chord}"


def sides(n: int, chord: Edge) -> tuple[Side, Side]:
    """Both sides of ``chord``: the arc ``a..b`` first, then ``b..a``."""
    if chord.is_border(n):
        raise NotAChord(f"{tuple(chord)} is a border edge")
    return Side(n, chord, chord.a, chord.b), Side(n, chord, chord.b, chord.a)


def side_of(tree: Tree, chord: Edge, orientation: str = "inner") -> Side:
    """``orientation`` is ``"inner"`` for the arc ``a..b`` (with ``a < b``)
    and ``"outer"`` for the arc ``b..a`` that wraps past ``n-1``."""
    if chord not in tree.edges:
        raise NotAChord(f"{tuple(chord)} is not an edge of the tree")
    inner, outer = sides(tree.n, chord)
    if orientation == "inner":
        return inner
    if orientation == "outer":
        return outer
    raise ValueError(f"orientation must be 'inner' or 'outer', got {orientation!r}")


def holes_in_side(tree: Tree, side: Side) -> int:
    """``k_A``: holes of ``tree`` between consecutive points of the side."""
    return _arc_sum(tree.hole_prefix, side.start, side.size - 1)


def holes_of_side(tree: Tree, side: Side) -> list[Hole]:
    return [h for h in holes(tree) if side.holds_hole(h)]


def chords_in_side(tree: Tree, side: Side) -> list[Edge]:
    return [e for e in tree.chords if side.holds(e)]


def degree_of_side(side: Side, other: Tree, include_border: bool = False) -> int:
    """Chord endpoints of ``other`` inside ``side``, with multiplicity.

    An endpoint of the side's own chord only counts for edges that stay in
    the side.  With ``include_border`` the count runs over all edges of
    ``other`` rather than chords only.
    """
    if include_border:
        prefix, adj = other.degree_prefix, other.adjacency
    else:
        prefix, adj = other.chord_degree_prefix, other.chord_adjacency
    total = _arc_sum(prefix, (side.start + 1) % side.n, side.size - 2)
    for v in (side.start, side.end):
        total += sum(1 for w in adj[v] if w in side)
    return total


def crossing_chords(tree: Tree, e: Edge) -> list[Edge]:
    """Chords of ``tree`` crossing ``e``, sorted."""
    a, b = e
    return [f for f in tree.chords if _crosses(a, b, f.a, f.b)]


@dataclass(frozen=True)
class Face:
    hole: Hole
    boundary_chords: frozenset[Edge]
    boundary_border_edges: frozenset[Edge]
    cycle: tuple[int, ...]


def _next_on_face(tree: Tree, u: int, v: int) -> int:
    """Successor of the half-edge ``u -> v`` around the face on its left.

    The plane graph is the tree plus every consecutive pair.  Around ``v``
    the neighbours sorted by ``(w - v) mod n`` are in counter-clockwise
    order; the next vertex is the cyclic predecessor of ``u`` there.
    """
    n = tree.n
    back = (u - v) % n
    best, best_off = -1, -1
    top, top_off = -1, -1
    for w in (*tree.adjacency[v], (v + 1) % n, (v - 1) % n):
        off = (w - v) % n
        if best_off < off < back:
            best, best_off = w, off
        if off > top_off:
            top, top_off = w, off
    return best if best >= 0 else top


def face_of_hole(tree: Tree, hole: Hole) -> Face:
    """Face containing ``hole``, found by walking the plane graph of the
    tree with every hole filled, starting from the half-edge across the hole.
    """
    n = tree.n
    pair = hole.pair(n) if n >= 3 else None
    if pair is None or pair in tree.edges or not (0 <= hole.low < n):
        raise NotAHole(f"{hole} is not a hole of the tree")
    start = (hole.low, (hole.low + 1) % n)
    cycle = [start[0]]
    u, v = start
    chords, borders, gaps = set(), set(), 0
    while True:
        e = Edge.of(u, v)
        if e in tree.edges:
            (borders if e.is_border(n) else chords).add(e)
        else:
            gaps += 1
        cycle.append(v)
        u, v = v, _next_on_face(tree, u, v)
        if (u, v) == start:
            break
    if gaps != 1:
        raise AnalysisError(f"face of {hole} meets {gaps} holes")
    return Face(hole, frozenset(chords), frozenset(borders), tuple(cycle[:-1]))


def face_chords(tree: Tree, hole: Hole) -> list[Edge]:
    return sorted(face_of_hole(tree, hole).boundary_chords)


class BorderPath(NamedTuple):
    """Maximal run ``start, start+1, ..., end`` joined by border edges."""

    n: int
    start: int
    end: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.start, self.end

    @property
    def size(self) -> int:
        return (self.end - self.start) % self.n + 1

    def points(self) -> list[int]:
        return [(self.start + i) % self.n for i in range(self.size)]

    def __contains__(self, p: object) -> bool:
        return isinstance(p, int) and (p - self.start) % self.n < self.size

    def incident_holes(self) -> tuple[Hole, Hole]:
        """The holes just before ``start`` and just after ``end``."""
        return Hole((self.start - 1) % self.n), Hole(self.end)


def border_paths(tree: Tree) -> list[BorderPath]:
    """Border paths of ``tree``, sorted by start index."""
    n = tree.n
    hs = holes(tree)
    if not hs:
        return [BorderPath(n, 0, n - 1)] if n else []
    out = []
    for i, h in enumerate(hs):
        nxt = hs[(i + 1) % len(hs)]
        out.append(BorderPath(n, (h.low + 1) % n, nxt.low))
    return sorted(out, key=lambda p: p.start)


def incident_chord_endpoints(path: BorderPath, other: Tree, side: Side | None = None) -> int:
    """Chord endpoints of ``other`` on ``path``, with multiplicity.

    With ``side`` given, an endpoint only counts when it is inside the side
    for its chord.
    """
    total = 0
    adj = other.chord_adjacency
    for v in path.points():
        for w in adj[v]:
            if side is None or side.inside_for(v, w):
                total += 1
    return total


def is_internal(path: BorderPath, side: Side) -> bool:
    """All points of ``path`` lie in ``side`` and none is an endpoint of its chord."""
    return all(side.is_interior(p) for p in path.points())


def extra_path(tree: Tree, side: Side, other: Tree) -> BorderPath | None:
    """The border path of ``side`` incident to one more chord of ``other``
    than the minimum: an internal path meeting two chords, or a path through
    an endpoint of the side's chord meeting one.  At most one exists when
    the side is very good.
    """
    found = []
    for p in border_paths(tree):
        if not any(q in side for q in p.points()):
            continue
        count = incident_chord_endpoints(p, other, side)
        if is_internal(p, side):
            if count >= 2:
                found.append(p)
        elif count >= 1:
            found.append(p)
    if len(found) > 1:
        raise AnalysisError(f"several extra paths in {side}: {found}")
    return found[0] if found else None


class Classification(enum.Enum):
    PLAIN = "Plain"
    GOOD = "Good"
    VERY_GOOD = "VeryGood"


@dataclass(frozen=True)
class SideReport:
    k: int
    degree: int
    bad_holes: tuple[Hole, ...]
    classification: Classification

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "degree": self.degree,
            "bad_holes": [h.low for h in self.bad_holes],
            "classification": self.classification.value,
        }


def bad_holes(tree: Tree, side: Side, other: Tree) -> list[Hole]:
    """Holes of ``tree`` in ``side`` lying in a side of ``other`` strictly
    contained in ``side``."""
    size = side.size
    cover = [0] * (size + 1)
    for c in other.chords:
        if c == side.chord or not side.holds(c):
            continue
        lo, hi = sorted((side.offset(c.a), side.offset(c.b)))
        cover[lo] += 1
        cover[hi] -= 1
    out = []
    running = 0
    for off in range(size - 1):
        running += cover[off]
        p = (side.start + off) % side.n
        if running > 0 and tree.hole_prefix[p + 1] != tree.hole_prefix[p]:
            out.append(Hole(p))
    return sorted(out)


def is_bad_hole(side: Side, hole: Hole, other: Tree) -> bool:
    if not side.holds_hole(hole):
        raise AnalysisError(f"{hole} does not lie in {side}")
    lo = side.offset(hole.low)
    for c in other.chords:
        if c == side.chord or not side.holds(c):
            continue
        a, b = sorted((side.offset(c.a), side.offset(c.b)))
        if a <= lo < b:
            return True
    return False


def classify_side(tree: Tree, side: Side, other: Tree) -> SideReport:
    k = holes_in_side(tree, side)
    deg = degree_of_side(side, other)
    bad = tuple(bad_holes(tree, side, other))
    if bad:
        cls = Classification.PLAIN
    elif deg <= k:
        cls = Classification.VERY_GOOD
    else:
        cls = Classification.GOOD
    return SideReport(k, deg, bad, cls)


def is_nice_pair(t1: Tree, t2: Tree) -> bool:
    """Same border edges and no common chord."""
    return t1.border_edges == t2.border_edges and not set(t1.chords) & set(t2.chords)


def other_sides_within(tree: Tree, side: Side) -> Iterator[Side]:
    """Sides of chords of ``tree`` strictly contained in ``side``."""
    for c in tree.chords:
        if c != side.chord and side.holds(c):
            yield side.sub_side(c)


def is_tau_extremal(owner: Tree, side: Side, other: Tree) -> bool:
    if not le_tau(degree_of_side(side, other), holes_in_side(owner, side)):
        return False
    return not any(
        le_tau(degree_of_side(s, owner), holes_in_side(other, s))
        for s in other_sides_within(other, side)
    )


def find_tau_extremal(t1: Tree, t2: Tree) -> tuple[int, Side]:
    """A tau-extremal side, as ``(owner, side)`` with ``owner`` 0 for ``t1``.

    The descent starts at the smallest chord of ``t1`` on a side of degree
    at most ``2k``, and repeatedly moves into the violating sub-side of the
    other tree with the smallest start, swapping the roles of the trees.
    """
    if not is_nice_pair(t1, t2):
        raise NotNicePair("trees must share border edges and have no common chord")
    if not t1.chords:
        raise NoChord("the trees have no chords")
    trees = (t1, t2)
    e = t1.chords[0]
    start = [s for s in sides(t1.n, e) if degree_of_side(s, t2) <= 2 * holes_in_side(t1, s)]
    if not start:
        raise AnalysisError(f"neither side of {tuple(e)} has degree at most 2k")
    side = start[0]
    owner = 0
    while True:
        mine, other = trees[owner], trees[1 - owner]
        violators = [
            s
            for s in other_sides_within(other, side)
            if le_tau(degree_of_side(s, mine), holes_in_side(other, s))
        ]
        if not violators:
            break
        side = min(violators, key=lambda s: (s.start, s.size, s.chord))
        owner = 1 - owner
    if not is_tau_extremal(trees[owner], side, trees[1 - owner]):
        raise AnalysisError(f"descent ended on a side that is not tau-extremal: {side}")
    return owner, side


def inclusion_minimal_chord(tree: Tree, side: Side) -> Edge:
    """Smallest chord of ``tree`` in ``side`` whose sub-side has one hole.

    The side's own chord counts when it belongs to ``tree``.
    """
    found = [c for c in tree.chords if side.holds(c)]
    if not found:
        raise NoChordInSide(f"no chord of the tree lies in {side}")
    intervals = sorted(
        (tuple(sorted((side.offset(c.a), side.offset(c.b)))), c) for c in found
    )
    stack: list[tuple[int, int]] = []
    for (lo, hi), c in sorted(intervals, key=lambda x: (x[0][0], -x[0][1])):
        while stack and stack[-1][1] <= lo:
            stack.pop()
        if stack and hi > stack[-1][1]:
            raise AnalysisError(f"chords in {side} are not laminar at {tuple(c)}")
        stack.append((lo, hi))
    for c in found:
        if holes_in_side(tree, side.sub_side(c)) == 1:
            return c
    raise AnalysisError(f"no inclusion-minimal chord in {side}")
