"""
Breaking the drawing order
==========================

Four ways to scramble the order in which a sketch was drawn. Every one of them
keeps the same set of points; they differ in how much of the stroke structure
survives.
"""

from pathlib import Path

from strokelab import permute
from strokelab.dataio import SyntheticSource, synth_class_names, synth_generate
from strokelab.permute import PermKind, PermutationSpec, compose
from strokelab.render import write_svg
from strokelab.sketch import strokes_of

OUT = Path(__file__).parent / "out" / "permutations"

items = list(synth_generate(SyntheticSource(n_classes=10, per_class=1, seed=0)))
print(synth_class_names())
sketch = items[0]
print(sketch.sketch_id, len(sketch.sketch), "points in", len(strokes_of(sketch.sketch)), "strokes")
write_svg(OUT / "original.svg", sketch.sketch, title="original")

for kind in PermKind:
    if kind == PermKind.NONE:
        continue
    spec = PermutationSpec(kind, seed=1)
    out = permute.apply(spec, sketch.sketch, sketch.sketch_id)
    moved = (out.coords != sketch.sketch.coords).any(axis=1).sum()
    print(f"{kind.value:<22} {moved:>3} of {len(out)} points moved, stroke lengths {[len(s) for s in strokes_of(out)]}")
    write_svg(OUT / f"{kind.value}.svg", out, title=kind.value)

# the randomness is keyed by (seed, sketch id, epoch), not by dataset position
spec = PermutationSpec(PermKind.INTER_STROKE, seed=1)
again = permute.apply(spec, sketch.sketch, sketch.sketch_id)
next_epoch = permute.apply(spec, sketch.sketch, sketch.sketch_id, epoch=1)
print("same epoch identical:", again == permute.apply(spec, sketch.sketch, sketch.sketch_id))
print("next epoch differs:", next_epoch != again)

# permutations chain: shuffle whole strokes, then scramble inside each one
both = compose(PermutationSpec(PermKind.STROKE_SHUFFLE, seed=2), PermutationSpec(PermKind.INTRA_STROKE, seed=3))
print(both.label)
write_svg(OUT / "shuffle_then_intra.svg", permute.apply(both, sketch.sketch, sketch.sketch_id), title=both.label)
print("svgs in", OUT)
