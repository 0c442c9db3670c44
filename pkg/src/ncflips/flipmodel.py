"""Flip relations between non-crossing spanning trees.

Three models are supported:

* ``FLIP``: remove an edge, add another; the result must be a
  non-crossing spanning tree.  The added edge may cross the removed one.
* ``NCFLIP``: a flip whose added edge crosses no edge of the tree before
  the flip, the removed edge included.
* ``ROTATION``: a flip whose removed and added edges share an endpoint.

The non-crossing relation is symmetric: if ``f`` crosses nothing in ``T``
then ``e`` crosses nothing in ``T - e + f``, because ``T - e + f`` is
contained in ``T + f``.  All three models can therefore be inverted.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import Edge, Tree, _crosses, check_same_instance, make_edges


class FlipModel(enum.Enum):
    FLIP = "flip"
    NCFLIP = "ncflip"
    ROTATION = "rotation"


class FlipStep(NamedTuple):
    remove: Edge
    add: Edge

    def inverse(self) -> "FlipStep":
        return FlipStep(self.add, self.remove)

    def to_json(self) -> dict:
        return {"remove": list(self.remove), "add": list(self.add)}

    def __str__(self) -> str:
        return f"{self.remove} ~> {self.add}"


def step(remove: tuple[int, int], add: tuple[int, int]) -> FlipStep:
    return FlipStep(Edge.of(*remove), Edge.of(*add))


class FlipError(ValueError):
    """A step cannot be applied to a tree under a model."""


class EdgeNotPresent(FlipError):
    pass


class EdgeAlreadyPresent(FlipError):
    pass


class ResultDisconnected(FlipError):
    """The added edge does not reconnect the two components, so the
    result is disconnected and contains a cycle."""


ResultCyclic = ResultDisconnected


class ResultHasCrossing(FlipError):
    def __init__(self, added: Edge, other: Edge):
        super().__init__(f"added edge {tuple(added)} crosses {tuple(other)}")
        self.added = added
        self.other = other


class ModelViolation(FlipError):
    def __init__(self, model: FlipModel, constraint: str):
        super().__init__(f"{model.value}: {constraint}")
        self.model = model
        self.constraint = constraint


def _side_of_removal(tree: Tree, remove: Edge) -> set[int]:
    """Vertices on the ``remove.a`` side of ``tree - remove``."""
    adj = tree.adjacency
    seen = {remove.a}
    stack = [remove.a]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and not (x == remove.a and y == remove.b):
                seen.add(y)
                stack.append(y)
    return seen


def apply_step(tree: Tree, s: FlipStep, model: FlipModel = FlipModel.FLIP) -> Tree:
    """Apply ``s`` to ``tree`` after checking every constraint of ``model``."""
    remove, add = s
    n = tree.n
    for e in (remove, add):
        if not (0 <= e.a < e.b < n):
            raise IndexError(f"edge {tuple(e)} out of range for n={n}")
    if remove not in tree.edges:
        raise EdgeNotPresent(f"{tuple(remove)} is not an edge of the tree")
    if add in tree.edges:
        raise EdgeAlreadyPresent(f"{tuple(add)} is already an edge of the tree")
    component = _side_of_removal(tree, remove)
    if (add.a in component) == (add.b in component):
        raise ResultDisconnected(
            f"{tuple(add)} does not reconnect the tree after removing {tuple(remove)}"
        )
    a, b = add
    for e in tree.sorted_edges:
        if e != remove and _crosses(a, b, e.a, e.b):
            raise ResultHasCrossing(add, e)
    if model is FlipModel.NCFLIP and _crosses(a, b, remove.a, remove.b):
        raise ModelViolation(model, f"added edge {tuple(add)} crosses removed edge {tuple(remove)}")
    if model is FlipModel.ROTATION and not remove.shares_endpoint(add):
        raise ModelViolation(model, f"{tuple(remove)} and {tuple(add)} share no endpoint")
    return tree.replace(remove, add)


def is_valid_step(tree: Tree, s: FlipStep, model: FlipModel = FlipModel.FLIP) -> bool:
    try:
        apply_step(tree, s, model)
    except FlipError:
        return False
    return True


@dataclass(frozen=True)
class FlipSequence:
    model: FlipModel
    start: Tree
    steps: tuple[FlipStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def trees(self) -> list[Tree]:
        """Every intermediate tree, start and end included."""
        out = [self.start]
        for s in self.steps:
            out.append(apply_step(out[-1], s, self.model))
        return out

    def final(self) -> Tree:
        return self.trees()[-1]

    def to_json(self) -> dict:
        return {
            "model": self.model.value,
            "start": self.start.to_json(),
            "steps": [s.to_json() for s in self.steps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "FlipSequence":
        if not isinstance(data, dict) or not {"model", "start", "steps"} <= data.keys():
            raise ValueError("sequence JSON needs keys 'model', 'start' and 'steps'")
        model = FlipModel(data["model"])
        start = Tree.from_json(data["start"])
        steps = []
        for item in data["steps"]:
            (remove,) = make_edges(start.n, [item["remove"]])
            (add,) = make_edges(start.n, [item["add"]])
            steps.append(FlipStep(remove, add))
        return cls(model, start, tuple(steps))

    @classmethod
    def loads(cls, text: str) -> "FlipSequence":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class Verification:
    """Outcome of :func:`verify_sequence`; truthy iff the sequence is valid."""

    ok: bool
    failed_index: int | None = None
    reason: str = ""
    tree_at_failure: Tree | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_sequence(seq: FlipSequence, target: Tree | None = None) -> Verification:
    """Replay ``seq`` and compare the final tree with ``target``, if given.

    On failure the first bad step index and the tree it was applied to are
    reported; a correct replay that ends elsewhere reports index ``len(seq)``.
    """
    if target is not None:
        check_same_instance(seq.start, target)
    tree = seq.start
    for i, s in enumerate(seq.steps):
        try:
            tree = apply_step(tree, s, seq.model)
        except (FlipError, IndexError) as exc:
            return Verification(False, i, f"{type(exc).__name__}: {exc}", tree)
    if target is not None and tree != target:
        return Verification(False, len(seq.steps), "final tree differs from target", tree)
    return Verification(True)


def invert_sequence(seq: FlipSequence) -> FlipSequence:
    """The reverse sequence, from the final tree back to the start."""
    return FlipSequence(
        seq.model, seq.final(), tuple(s.inverse() for s in reversed(seq.steps))
    )


def invert_steps(steps: Sequence[FlipStep]) -> list[FlipStep]:
    return [s.inverse() for s in reversed(steps)]
