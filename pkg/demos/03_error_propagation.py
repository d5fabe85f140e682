"""
Why offsets drift
=================

A decoder that predicts offsets has its errors summed up when the sketch is
rebuilt, so the error at point ``i`` carries every mistake before it. With
independent per-step noise of size sigma the squared error grows like
``(i + 1) * sigma**2``. Predicting positions directly keeps it flat.
"""

import numpy as np

from strokelab.batching import frame_coords, relative_scale
from strokelab.dataio import SyntheticSource, synth_generate
from strokelab.metrics import per_position_error
from strokelab.sketch import Frame, normalize_absolute

sigma = 0.02
rng = np.random.default_rng(0)
raws = [it.sketch for it in synth_generate(SyntheticSource(n_classes=10, per_class=200, seed=1))]

rel_preds, abs_preds = [], []
for raw in raws:
    r = normalize_absolute(raw).norm.scale
    s = relative_scale(raw)
    # noise of size sigma per step, measured in the normalized absolute frame
    step = rng.normal(0, sigma, size=(len(raw), 2))
    step[0] *= r
    step[1:] *= r / s
    rel_preds.append(frame_coords(raw, Frame.RELATIVE) + step)
    abs_preds.append(frame_coords(raw, Frame.ABSOLUTE) + rng.normal(0, sigma, size=(len(raw), 2)))

rel_curve = per_position_error(rel_preds, raws, Frame.RELATIVE)
abs_curve = per_position_error(abs_preds, raws, Frame.ABSOLUTE)

print(" pos  count   offsets  (i+1)s^2  positions")
for i in range(0, len(rel_curve.mean), 2):
    print(f"{i:>4} {rel_curve.count[i]:>6} {rel_curve.mean[i]:9.5f} {(i + 1) * sigma**2:9.5f} {abs_curve.mean[i]:10.5f}")

# the tail has few sketches, so its estimates are noisy
print("length histogram:", np.flatnonzero(rel_curve.length_hist).min(), "to", len(rel_curve.length_hist) - 1, "points")
