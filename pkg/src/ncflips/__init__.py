"""Flip sequences between non-crossing spanning trees of convex point sets."""

from .core import (
    ConvexInstance,
    Edge,
    HasCrossing,
    HasCycle,
    Hole,
    NotSpanning,
    SymmetricDifference,
    Tree,
    TreeError,
    WrongEdgeCount,
    crossing,
    delta,
    holes,
    hull_path,
    symmetric_difference,
    validate_tree,
)
from .flipmodel import (
    FlipModel,
    FlipSequence,
    FlipStep,
    apply_step,
    invert_sequence,
    verify_sequence,
)
from .transform import (
    CertifiedTransformation,
    matroid_exchange,
    transform,
    transform_border_projection,
)

__all__ = [
    "ConvexInstance",
    "Edge",
    "HasCrossing",
    "HasCycle",
    "Hole",
    "NotSpanning",
    "SymmetricDifference",
    "Tree",
    "TreeError",
    "WrongEdgeCount",
    "crossing",
    "delta",
    "holes",
    "hull_path",
    "symmetric_difference",
    "validate_tree",
    "FlipModel",
    "FlipSequence",
    "FlipStep",
    "apply_step",
    "invert_sequence",
    "verify_sequence",
    "CertifiedTransformation",
    "matroid_exchange",
    "transform",
    "transform_border_projection",
]
