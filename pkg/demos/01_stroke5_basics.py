"""
Stroke-5 sketches: frames, normalization, padding
=================================================

"""

from pathlib import Path

import numpy as np

from strokelab.render import write_svg
from strokelab.sketch import (
    Stroke5Sequence,
    abs_to_rel,
    denormalize,
    normalize_absolute,
    normalize_relative,
    pad_or_truncate,
    rel_to_abs,
    strokes_of,
)

OUT = Path(__file__).parent / "out"

# a little house: a square body, then a roof, drawn as two strokes
body = [[0, 0], [40, 0], [40, 30], [0, 30], [0, 0]]
roof = [[0, 30], [20, 50], [40, 30]]
house = Stroke5Sequence.from_strokes([body, roof])
print(house.pen_index)  # 0 drawing, 1 end of stroke, 2 end of sketch
print([(sp.start, sp.end) for sp in strokes_of(house)])

# offsets: row 0 keeps the absolute start, later rows step from point to point
rel = abs_to_rel(house)
print(rel.coords[:4])
assert np.allclose(rel_to_abs(rel).coords, house.coords)

# relative min-max: offsets shrink to [-1, 1], the origin row is left alone
r = normalize_relative(rel)
print("offset scale", r.norm.scale, "max |offset|", np.abs(r.coords[1:]).max())

# absolute: centroid at 0, farthest point on the unit circle
a = normalize_absolute(house)
print("center", a.norm.center, "radius", a.norm.scale)
print("max radius now", np.sqrt((a.coords**2).sum(1)).max())
assert np.allclose(denormalize(a).coords, house.coords)

# batches are padded with end-of-sketch rows; the mask marks the real points
padded, mask = pad_or_truncate(house, 12)
print(mask.astype(int), padded.pen_index[-3:])
short, _ = pad_or_truncate(house, 5)
print("truncated pens", short.pen_index)  # last kept point becomes end of sketch

write_svg(OUT / "house.svg", house, title="house")
print("wrote", OUT / "house.svg")
