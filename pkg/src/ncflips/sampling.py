"""Seeded random trees, drawn by random walks in the flip graph."""

from __future__ import annotations

import random

from .analysis import _next_on_face
from .core import Edge, Tree, hull_path
from .flipmodel import FlipStep, _side_of_removal


def _face_points(tree: Tree, u: int, v: int) -> set[int]:
    """Vertices of the face left of ``u -> v`` in the tree plus all consecutive pairs."""
    out = {u}
    a, b = u, v
    while True:
        out.add(b)
        a, b = b, _next_on_face(tree, a, b)
        if (a, b) == (u, v):
            return out


def random_flip(tree: Tree, rng: random.Random) -> FlipStep | None:
    """A random valid flip, or ``None`` when the drawn edge has no partner.

    The removed edge is uniform.  The added edge joins two points of the
    face freed by the removal, one on each side of the cut, so it crosses
    nothing that remains.
    """
    n = tree.n
    e = rng.choice(tree.sorted_edges)
    face = _face_points(tree, e.a, e.b)
    if not e.is_border(n):
        face |= _face_points(tree, e.b, e.a)
    elif (e.b - e.a) % n != 1:
        face = _face_points(tree, e.b, e.a)
    left = _side_of_removal(tree, e)
    ins = sorted(p for p in face if p in left)
    outs = sorted(p for p in face if p not in left)
    pairs = len(ins) * len(outs)
    if pairs <= 1:
        return None
    while True:
        f = Edge.of(rng.choice(ins), rng.choice(outs))
        if f != e:
            return FlipStep(e, f)


def random_walk_tree(n: int, steps: int, rng: random.Random, start: Tree | None = None) -> Tree:
    tree = start if start is not None else hull_path(n, rng.randrange(n))
    for _ in range(steps):
        s = random_flip(tree, rng)
        if s is not None:
            tree = tree.replace(*s)
    return tree


def random_tree(n: int, rng: random.Random) -> Tree:
    return random_walk_tree(n, 3 * n, rng)


def random_pair(n: int, rng: random.Random) -> tuple[Tree, Tree]:
    return random_tree(n, rng), random_tree(n, rng)
