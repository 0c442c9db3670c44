"""Lower-bound families and the ten-point example with flip distance 10.

Each family glues ``k`` copies of a small gadget.  Copy ``i+1`` shares two
consecutive points with copy ``i`` and its fresh points are inserted in the
hull arc between them, so consecutive copies are mirror images of each
other along the global cyclic order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import Edge, Tree, validate_tree
from .flipmodel import FlipModel, FlipSequence, FlipStep

Label = str


@dataclass(frozen=True)
class GadgetSpec:
    """A gadget pair ``(T1, T1')`` written with point labels.

    ``base_order`` lists the labels in cyclic order and starts with the two
    labels glued to the previous copy, ``v1`` then the rest of the hull up
    to ``v2``.  ``glue`` names the two labels of this copy that become
    ``v1`` and ``v2`` of the next copy.
    """

    base_order: tuple[Label, ...]
    t1_edges: tuple[tuple[Label, Label], ...]
    t1p_edges: tuple[tuple[Label, Label], ...]
    glue: tuple[Label, Label]
    moves: tuple[tuple[tuple[Label, Label], tuple[Label, Label]], ...] = ()
    model: FlipModel = FlipModel.FLIP

    def pair(self) -> tuple[Tree, Tree]:
        index = {lab: i for i, lab in enumerate(self.base_order)}
        n = len(self.base_order)
        t1 = validate_tree(n, [(index[u], index[v]) for u, v in self.t1_edges])
        t2 = validate_tree(n, [(index[u], index[v]) for u, v in self.t1p_edges])
        return t1, t2


NC_GADGET = GadgetSpec(
    base_order=("v1", "v3", "v4", "v2"),
    t1_edges=(("v1", "v2"), ("v3", "v4"), ("v1", "v4")),
    t1p_edges=(("v1", "v2"), ("v3", "v4"), ("v2", "v3")),
    glue=("v3", "v4"),
    model=FlipModel.NCFLIP,
)

_FLIP_ORDER = ("v1", "v3", "v4", "v7", "v8", "v6", "v5", "v2")
_FLIP_T1P = (
    ("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v7", "v8"),
    ("v2", "v4"), ("v4", "v5"), ("v5", "v7"),
)

FLIP_GADGET = GadgetSpec(
    base_order=_FLIP_ORDER,
    t1_edges=(
        ("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v7", "v8"),
        ("v3", "v8"), ("v1", "v8"), ("v1", "v6"),
    ),
    t1p_edges=_FLIP_T1P,
    glue=("v8", "v7"),
    moves=(
        (("v6", "v1"), ("v2", "v5")),
        (("v3", "v8"), ("v4", "v7")),
        (("v1", "v8"), ("v4", "v5")),
        (("v2", "v5"), ("v2", "v4")),
        (("v4", "v7"), ("v5", "v7")),
    ),
)

# As published, the third and fifth moves have their removed edges swapped:
# v3v8 -> v4v5 shares no endpoint, and v5v7 would cross v3v8.  The gadget
# replays the corrected order below; this tuple keeps the literal list.
ROTATION_PUBLISHED_MOVES = (
    (("v1", "v6"), ("v1", "v5")),
    (("v3", "v6"), ("v3", "v5")),
    (("v3", "v5"), ("v5", "v8")),
    (("v5", "v8"), ("v5", "v7")),
    (("v3", "v8"), ("v4", "v5")),
    (("v1", "v5"), ("v1", "v4")),
    (("v1", "v4"), ("v2", "v4")),
)

ROTATION_GADGET = GadgetSpec(
    base_order=_FLIP_ORDER,
    t1_edges=(
        ("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v7", "v8"),
        ("v3", "v8"), ("v3", "v6"), ("v1", "v6"),
    ),
    t1p_edges=_FLIP_T1P,
    glue=("v8", "v7"),
    moves=(
        (("v1", "v6"), ("v1", "v5")),
        (("v3", "v6"), ("v3", "v5")),
        (("v3", "v8"), ("v5", "v8")),
        (("v5", "v8"), ("v5", "v7")),
        (("v3", "v5"), ("v4", "v5")),
        (("v1", "v5"), ("v1", "v4")),
        (("v1", "v4"), ("v2", "v4")),
    ),
    model=FlipModel.ROTATION,
)


def glued_layout(spec: GadgetSpec, k: int) -> tuple[int, list[dict[Label, int]]]:
    """Global size and, per copy, the map from labels to point indices."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    first, *fresh, last = spec.base_order
    # global cyclic order as (copy, label); glued points keep their first name
    order: list[tuple[int, Label]] = [(0, lab) for lab in spec.base_order]
    alias: dict[tuple[int, Label], tuple[int, Label]] = {}
    for i in range(1, k):
        g1, g2 = spec.glue
        alias[(i, first)] = alias.get((i - 1, g1), (i - 1, g1))
        alias[(i, last)] = alias.get((i - 1, g2), (i - 1, g2))
        p1 = order.index(alias[(i, first)])
        p2 = order.index(alias[(i, last)])
        new = [(i, lab) for lab in fresh]
        # going from v1 to v2 of the new copy, its fresh points appear in base order
        if (p1 + 1) % len(order) == p2:
            order[p1 + 1:p1 + 1] = new
        elif (p2 + 1) % len(order) == p1:
            order[p2 + 1:p2 + 1] = new[::-1]
        else:
            raise AssertionError("glued points are not consecutive")
    position = {item: j for j, item in enumerate(order)}
    maps = []
    for i in range(k):
        maps.append(
            {lab: position[alias.get((i, lab), (i, lab))] for lab in spec.base_order}
        )
    return len(order), maps


def glue(spec: GadgetSpec, k: int) -> tuple[Tree, Tree]:
    n, maps = glued_layout(spec, k)
    e1, e2 = set(), set()
    for m in maps:
        e1 |= {Edge.of(m[u], m[v]) for u, v in spec.t1_edges}
        e2 |= {Edge.of(m[u], m[v]) for u, v in spec.t1p_edges}
    return validate_tree(n, e1), validate_tree(n, e2)


def nc_family(k: int) -> tuple[Tree, Tree]:
    """Pair on ``2k + 2`` points at distance ``2k`` for non-crossing flips."""
    return glue(NC_GADGET, k)


def flip_family(k: int) -> tuple[Tree, Tree]:
    """Pair on ``6k + 2`` points with ``delta = 3k``."""
    return glue(FLIP_GADGET, k)


def rotation_family(k: int) -> tuple[Tree, Tree]:
    """As :func:`flip_family` with ``v1v8`` replaced by ``v3v6`` in the first tree."""
    return glue(ROTATION_GADGET, k)


def family_sequence(spec: GadgetSpec, k: int) -> FlipSequence:
    """The gadget's explicit moves replayed copy by copy."""
    n, maps = glued_layout(spec, k)
    start, _ = glue(spec, k)
    steps = [
        FlipStep(Edge.of(m[r[0]], m[r[1]]), Edge.of(m[a[0]], m[a[1]]))
        for m in maps
        for r, a in spec.moves
    ]
    return FlipSequence(spec.model, start, tuple(steps))


def flip_family_sequence(k: int) -> FlipSequence:
    return family_sequence(FLIP_GADGET, k)


def rotation_family_sequence(k: int) -> FlipSequence:
    return family_sequence(ROTATION_GADGET, k)


def published_rotation_sequence(k: int = 1) -> FlipSequence:
    """The rotation moves exactly as originally listed; this does not verify."""
    return family_sequence(replace(ROTATION_GADGET, moves=ROTATION_PUBLISHED_MOVES), k)


HERNANDO_ORDER = ("a1", "a2", "a4", "a5", "a6", "b1", "b6", "b5", "b4", "b2")
HERNANDO_BLACK = (
    ("a1", "a2"), ("b6", "b1"), ("a1", "a4"), ("a1", "a5"), ("a1", "a6"),
    ("a1", "b1"), ("b1", "b2"), ("b1", "b4"), ("b1", "b5"),
)
HERNANDO_RED = (
    ("a1", "a2"), ("b6", "b1"), ("b6", "a4"), ("b6", "a5"), ("b6", "a6"),
    ("a2", "b2"), ("a2", "b4"), ("a2", "b5"), ("a2", "b6"),
)


def hernando_example() -> tuple[Tree, Tree]:
    """Two trees on ten points whose flip distance is 10."""
    index = {lab: i for i, lab in enumerate(HERNANDO_ORDER)}
    black = validate_tree(10, [(index[u], index[v]) for u, v in HERNANDO_BLACK])
    red = validate_tree(10, [(index[u], index[v]) for u, v in HERNANDO_RED])
    return black, red


FAMILIES = {
    "flip": flip_family,
    "ncflip": nc_family,
    "rotation": rotation_family,
}
