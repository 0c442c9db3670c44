"""Write SVG frames of a certified sequence for the ten-point example."""

import sys
from pathlib import Path

from ncflips.families import hernando_example
from ncflips.render import render_sequence
from ncflips.transform import transform

out = Path(sys.argv[1] if len(sys.argv) > 1 else "hernando_frames")
out.mkdir(exist_ok=True)
result = transform(*hernando_example())
for i, svg in enumerate(render_sequence(result.sequence)):
    (out / f"frame_{i:03d}.svg").write_text(svg)
print(f"{result.length} flips for delta {result.delta}; frames in {out}/")
