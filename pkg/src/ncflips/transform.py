"""Flip sequences between non-crossing spanning trees.

:func:`transform` builds a sequence of length at most ``c * delta`` with
``c = (22 + sqrt 2) / 12``.  Both trees are modified: flips on the source
are logged forward, flips on the target are logged backward, and the
result is the forward log followed by the inverted backward log.

Each stage works on one instance at a time:

1. a chord common to both trees splits the instance into its two sides,
   which are solved independently;
2. a tree made of border edges only is reached from the other tree by
   adding its missing border edges one at a time;
3. a border edge present in only one tree is created in the other;
4. otherwise the pair is *nice* (same border edges, no common chord) and
   one round matches all the chords on a tau-extremal side.

All choices left open by the construction are resolved towards the
smallest edge, hole, or path start, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .analysis import (
    Classification,
    Side,
    bad_holes,
    border_paths,
    classify_side,
    crossing_chords,
    degree_of_side,
    face_chords,
    find_tau_extremal,
    holes_in_side,
    holes_of_side,
    inclusion_minimal_chord,
    is_internal,
)
from .core import Edge, Hole, Tree, _crosses, check_same_instance, holes, symmetric_difference
from .exact import within_c_bound, within_match_bound
from .flipmodel import FlipModel, FlipSequence, FlipStep, invert_steps, verify_sequence


class TransformError(RuntimeError):
    """An internal invariant failed; no sequence is emitted."""


class CertificationError(TransformError):
    def __init__(self, result: "CertifiedTransformation"):
        super().__init__(
            f"sequence of length {result.length} exceeds the bound for delta={result.delta}"
        )
        self.result = result


class PreconditionViolated(ValueError):
    pass


class NotVeryGood(PreconditionViolated):
    pass


@dataclass(frozen=True)
class CertifiedTransformation:
    sequence: FlipSequence
    delta: int
    bound_ok: bool

    @property
    def length(self) -> int:
        return len(self.sequence.steps)

    def certificate(self) -> dict:
        return {"delta": self.delta, "length": self.length, "bound_check": self.bound_ok}


@dataclass
class BilateralLog:
    forward_steps: list[FlipStep] = field(default_factory=list)
    backward_steps: list[FlipStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.forward_steps) + len(self.backward_steps)

    def stitched(self) -> list[FlipStep]:
        return self.forward_steps + invert_steps(self.backward_steps)


def _flip(tree: Tree, s: FlipStep) -> Tree:
    # unchecked: every emitted sequence is replayed in full by verify_sequence
    return tree.replace(s.remove, s.add)


# sub-instances


def _restrict(tree: Tree, points: Sequence[int]) -> Tree:
    """Induced tree on ``points`` (listed in cyclic order), relabelled ``0..m-1``."""
    index = {p: i for i, p in enumerate(points)}
    edges = frozenset(
        Edge.of(index[a], index[b]) for a, b in tree.edges if a in index and b in index
    )
    return Tree(len(points), edges)


def _lift(steps: Sequence[FlipStep], points: Sequence[int]) -> list[FlipStep]:
    return [
        FlipStep(Edge.of(points[r.a], points[r.b]), Edge.of(points[a.a], points[a.b]))
        for r, a in steps
    ]


def _arc(n: int, start: int, end: int) -> list[int]:
    return [(start + i) % n for i in range((end - start) % n + 1)]


def _split_at(t1: Tree, t2: Tree, chord: Edge, solve) -> list[FlipStep]:
    """Solve both sides of a common chord; the ``a..b`` side comes first."""
    out = []
    for pts in (_arc(t1.n, chord.a, chord.b), _arc(t1.n, chord.b, chord.a)):
        out += _lift(solve(_restrict(t1, pts), _restrict(t2, pts)), pts)
    return out


def _border_low(n: int, e: Edge) -> int:
    return e.a if e.b - e.a == 1 else n - 1


def _missing_border(t1: Tree, t2: Tree) -> list[Edge]:
    n = t1.n
    diff = set(t1.border_edges) ^ set(t2.border_edges)
    return sorted(diff, key=lambda e: _border_low(n, e))


def _cycle_edge(tree: Tree, add: Edge, target: Tree) -> Edge:
    """Edge to drop when ``add`` joins ``tree``: on the created cycle, not
    in ``target``, chords first, smallest first."""
    path = [e for e in tree.path_edges(add.a, add.b) if e not in target.edges]
    if not path:
        raise TransformError(f"the cycle through {tuple(add)} lies inside the target tree")
    return min(path, key=lambda e: (e.is_border(tree.n), e))


# the three local moves of a round


def fill_bad_hole(t1: Tree, t2: Tree, side: Side, hole: Hole) -> tuple[FlipStep, FlipStep]:
    """Fill a bad hole of ``side`` in both trees.

    In ``t1`` the smallest chord of the hole's face other than the side's
    chord is flipped; in ``t2`` the smallest face chord lying in the side.
    """
    if holes_in_side(t1, side) < 2:
        raise PreconditionViolated(f"{side} has fewer than two holes")
    if hole not in bad_holes(t1, side, t2):
        raise PreconditionViolated(f"{hole} is not a bad hole of {side}")
    pair = hole.pair(t1.n)
    c1 = [c for c in face_chords(t1, hole) if c != side.chord]
    c2 = [c for c in face_chords(t2, hole) if side.holds(c)]
    if not c1 or not c2:
        raise TransformError(f"bad hole {hole} of {side} cannot be filled")
    return FlipStep(c1[0], pair), FlipStep(c2[0], pair)


def remove_extra_crossing(t1: Tree, t2: Tree, side: Side) -> tuple[FlipStep, FlipStep]:
    """Fill a hole outside ``side`` in both trees, removing from ``t2`` a
    chord that crosses the side's chord."""
    report = classify_side(t1, side, t2)
    if report.classification is not Classification.GOOD:
        raise PreconditionViolated(f"{side} must be good but not very good, got {report}")
    e = side.chord
    for h in holes(t1):
        if side.holds_hole(h):
            continue
        c1 = [c for c in face_chords(t1, h) if c != e]
        if not c1:
            continue
        c2 = [c for c in face_chords(t2, h) if _crosses(e.a, e.b, c.a, c.b)]
        if not c2:
            continue
        pair = h.pair(t1.n)
        return FlipStep(c1[0], pair), FlipStep(c2[0], pair)
    raise TransformError(f"no hole outside {side} removes a crossing of {tuple(e)}")


def _match(x: Tree, y: Tree, side: Side, xs: list, ys: list) -> tuple[Tree, Tree]:
    """Make ``x`` and ``y`` agree on a very good side of ``x``.

    One level handles an inclusion-minimal chord ``e'`` of ``x`` in the side:
    while two or more chords of ``y`` cross ``e'``, a hole next to the
    unique hole ``h`` of ``e'`` is filled in both trees; then ``e'`` is
    created in ``y``.  The rest of the side is handled on the instance
    with the interior of ``e'`` contracted away.
    """
    report = classify_side(x, side, y)
    if report.classification is not Classification.VERY_GOOD:
        raise NotVeryGood(f"{side} is not very good: {report}")
    n = x.n
    e = side.chord
    ep = inclusion_minimal_chord(x, side)
    inner = side.sub_side(ep)
    (h,) = holes_of_side(x, inner)
    cross = crossing_chords(y, ep)
    while len(cross) >= 2:
        # an internal path next to h whose chords of y all cross e';
        # a path with a single such chord is preferred
        options = []
        for p in border_paths(x):
            if h not in p.incident_holes() or not is_internal(p, side):
                continue
            touching = [c for c in y.chords if c.a in p or c.b in p]
            if touching and all(c in cross for c in touching):
                options.append((len(touching) > 1, p.start, p, touching))
        if not options:
            raise TransformError(f"no border path to fill next to {h} in {side}")
        _, _, p, touching = min(options, key=lambda o: o[:2])
        h2 = next(q for q in p.incident_holes() if q != h)
        if not side.holds_hole(h2):
            raise TransformError(f"hole {h2} next to {h} leaves {side}")
        pair = h2.pair(n)
        on_face = [c for c in touching if c in face_chords(y, h2)]
        if not on_face:
            raise TransformError(f"no chord next to {h} bounds the face of {h2}")
        yc = on_face[0]
        xc = [c for c in face_chords(x, h2) if c != ep]
        if not xc:
            raise TransformError(f"the face of {h2} has no chord to flip")
        xc.sort(key=lambda c: (c == e, c))
        sx, sy = FlipStep(xc[0], pair), FlipStep(yc, pair)
        x, y = _flip(x, sx), _flip(y, sy)
        xs.append(sx)
        ys.append(sy)
        cross = crossing_chords(y, ep)
    if cross:
        e1 = cross[0]
    else:
        on_cycle = [c for c in y.path_edges(ep.a, ep.b) if c.is_chord(n)]
        if not on_cycle:
            raise TransformError(f"no chord of the other tree closes a cycle with {tuple(ep)}")
        e1 = min(on_cycle, key=lambda c: (not _crosses(e.a, e.b, c.a, c.b), c))
    sy = FlipStep(e1, ep)
    y = _flip(y, sy)
    ys.append(sy)
    if ep == e or e not in x.edges:
        return x, y
    pts = [p for p in range(n) if not inner.is_interior(p)]
    index = {p: i for i, p in enumerate(pts)}
    x2, y2 = _restrict(x, pts), _restrict(y, pts)
    side2 = Side(len(pts), Edge.of(index[e.a], index[e.b]), index[side.start], index[side.end])
    sub_x: list[FlipStep] = []
    sub_y: list[FlipStep] = []
    _match(x2, y2, side2, sub_x, sub_y)
    for s in _lift(sub_x, pts):
        x = _flip(x, s)
        xs.append(s)
    for s in _lift(sub_y, pts):
        y = _flip(y, s)
        ys.append(s)
    return x, y


def match_very_good_side(t1: Tree, t2: Tree, side: Side) -> tuple[BilateralLog, int]:
    """Make both trees agree on ``side`` using at most ``5/3 * k`` flips.

    Returns the flips applied to each tree and the number ``k`` of chord
    pairs matched.
    """
    k = holes_in_side(t1, side)
    log = BilateralLog()
    _match(t1, t2, side, log.forward_steps, log.backward_steps)
    if not within_match_bound(len(log), k):
        raise TransformError(f"matching {side} took {len(log)} flips for k={k}")
    return log, k


def _round(x: Tree, y: Tree, side: Side) -> tuple[Tree, Tree, list[FlipStep], list[FlipStep]]:
    xs: list[FlipStep] = []
    ys: list[FlipStep] = []
    while True:
        bad = bad_holes(x, side, y)
        if not bad:
            break
        sx, sy = fill_bad_hole(x, y, side, bad[0])
        x, y = _flip(x, sx), _flip(y, sy)
        xs.append(sx)
        ys.append(sy)
    k = holes_in_side(x, side)
    while degree_of_side(side, y) > k:
        sx, sy = remove_extra_crossing(x, y, side)
        x, y = _flip(x, sx), _flip(y, sy)
        xs.append(sx)
        ys.append(sy)
    log, _ = match_very_good_side(x, y, side)
    for s in log.forward_steps:
        x = _flip(x, s)
    for s in log.backward_steps:
        y = _flip(y, s)
    return x, y, xs + log.forward_steps, ys + log.backward_steps


def _solve(t1: Tree, t2: Tree) -> list[FlipStep]:
    if t1.n <= _MEMO_MAX_N:
        return list(_solve_small(t1, t2))
    return _solve_uncached(t1, t2)


# sub-instances on few points recur constantly after splitting at common chords
_MEMO_MAX_N = 8


@lru_cache(maxsize=1 << 17)
def _solve_small(t1: Tree, t2: Tree) -> tuple[FlipStep, ...]:
    return tuple(_solve_uncached(t1, t2))


def _solve_uncached(t1: Tree, t2: Tree) -> list[FlipStep]:
    fwd: list[FlipStep] = []
    bwd: list[FlipStep] = []
    a, b = t1, t2
    n = a.n
    while a.edges != b.edges:
        common = set(a.chords) & set(b.chords)
        if common:
            fwd += _split_at(a, b, min(common), _solve)
            break
        if not a.chords or not b.chords:
            # one tree is a hull path: add its border edges to the other
            flat, other = (a, b) if not a.chords else (b, a)
            for g in flat.border_edges:
                if g in other.edges:
                    continue
                s = FlipStep(_cycle_edge(other, g, flat), g)
                other = _flip(other, s)
                (bwd if flat is a else fwd).append(s)
            break
        missing = _missing_border(a, b)
        if missing:
            g = missing[0]
            if g in b.edges:
                s = FlipStep(_cycle_edge(a, g, b), g)
                a = _flip(a, s)
                fwd.append(s)
            else:
                s = FlipStep(_cycle_edge(b, g, a), g)
                b = _flip(b, s)
                bwd.append(s)
            continue
        owner, side = find_tau_extremal(a, b)
        if owner == 0:
            a, b, xs, ys = _round(a, b, side)
            fwd += xs
            bwd += ys
        else:
            b, a, xs, ys = _round(b, a, side)
            bwd += xs
            fwd += ys
    if n < 3 and fwd:
        raise TransformError("degenerate instance produced flips")
    return fwd + invert_steps(bwd)


def transform(t1: Tree, t2: Tree) -> CertifiedTransformation:
    """A verified flip sequence from ``t1`` to ``t2`` of length at most
    ``(22 + sqrt 2) / 12 * delta``.

    The whole sequence is replayed and the bound is checked in exact
    integer arithmetic before anything is returned.
    """
    check_same_instance(t1, t2)
    d = symmetric_difference(t1, t2).delta
    steps = _solve(t1, t2)
    seq = FlipSequence(FlipModel.FLIP, t1, tuple(steps))
    check = verify_sequence(seq, t2)
    if not check:
        raise TransformError(
            f"constructed sequence fails at step {check.failed_index}: {check.reason}"
        )
    result = CertifiedTransformation(seq, d, within_c_bound(len(steps), d))
    if not result.bound_ok:
        raise CertificationError(result)
    return result


# baselines


def _nc_solve(t1: Tree, t2: Tree) -> list[FlipStep]:
    fwd: list[FlipStep] = []
    bwd: list[FlipStep] = []
    a, b = t1, t2
    while a.edges != b.edges:
        common = set(a.chords) & set(b.chords)
        if common:
            fwd += _split_at(a, b, min(common), _nc_solve)
            break
        missing = _missing_border(a, b)
        if missing:
            g = missing[0]
            if g in b.edges:
                s = FlipStep(_cycle_edge(a, g, b), g)
                a = _flip(a, s)
                fwd.append(s)
            else:
                s = FlipStep(_cycle_edge(b, g, a), g)
                b = _flip(b, s)
                bwd.append(s)
            continue
        # same border edges: flatten both onto the hull path missing the last hole
        for h in holes(a)[:-1]:
            g = h.pair(a.n)
            chords = [c for c in a.path_edges(g.a, g.b) if c.is_chord(a.n)]
            s = FlipStep(min(chords), g)
            a = _flip(a, s)
            fwd.append(s)
        for h in holes(b)[:-1]:
            g = h.pair(b.n)
            chords = [c for c in b.path_edges(g.a, g.b) if c.is_chord(b.n)]
            s = FlipStep(min(chords), g)
            b = _flip(b, s)
            bwd.append(s)
    return fwd + invert_steps(bwd)


def transform_border_projection(t1: Tree, t2: Tree) -> FlipSequence:
    """A non-crossing flip sequence of length at most ``2 * delta``.

    Chords are pushed onto the border: both trees are flattened to the same
    hull path and the target's half is replayed backwards.
    """
    check_same_instance(t1, t2)
    seq = FlipSequence(FlipModel.NCFLIP, t1, tuple(_nc_solve(t1, t2)))
    check = verify_sequence(seq, t2)
    if not check:
        raise TransformError(
            f"projection sequence fails at step {check.failed_index}: {check.reason}"
        )
    if len(seq) > 2 * symmetric_difference(t1, t2).delta:
        raise TransformError("projection sequence longer than 2 delta")
    return seq


def matroid_exchange(t1: Tree, t2: Tree) -> list[FlipStep]:
    """Basis exchange: exactly ``delta`` steps, ignoring crossings.

    Each edge of ``t1 - t2`` in sorted order is swapped for the smallest
    edge of ``t2 - t1`` that reconnects the two components.
    """
    check_same_instance(t1, t2)
    current = set(t1.edges)
    incoming = sorted(t2.edges - t1.edges)
    steps = []
    for e in sorted(t1.edges - t2.edges):
        current.discard(e)
        adj: dict[int, list[int]] = {}
        for u, v in current:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen = {e.a}
        stack = [e.a]
        while stack:
            u = stack.pop()
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        f = next(f for f in incoming if (f.a in seen) != (f.b in seen))
        incoming.remove(f)
        current.add(f)
        steps.append(FlipStep(e, f))
    return steps
