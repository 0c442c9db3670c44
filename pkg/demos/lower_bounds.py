"""Exact distances on the small members of the three lower-bound families."""

from ncflips.core import delta
from ncflips.families import flip_family, nc_family, rotation_family
from ncflips.flipmodel import FlipModel
from ncflips.oracle import flip_distance

rows = [
    ("flip", flip_family(1), FlipModel.FLIP),
    ("rotation", rotation_family(1), FlipModel.ROTATION),
    *((f"ncflip k={k}", nc_family(k), FlipModel.NCFLIP) for k in (1, 2, 3)),
]
for name, (t1, t2), model in rows:
    d = flip_distance(t1, t2, model)
    print(f"{name:>12}  n={t1.n:<2}  delta={delta(t1, t2)}  distance={d}")
