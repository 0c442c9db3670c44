"""Certify a flip sequence between two trees and check it against the exact distance."""

from ncflips import oracle
from ncflips.families import flip_family
from ncflips.transform import transform

t1, t2 = flip_family(1)
result = transform(t1, t2)
print("certificate:", result.certificate())
for i, s in enumerate(result.sequence.steps, 1):
    print(f"  {i}. remove {tuple(s.remove)}  add {tuple(s.add)}")
print("exact flip distance:", oracle.flip_distance(t1, t2))
