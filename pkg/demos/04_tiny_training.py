"""
A small end-to-end run
======================

Train a reconstruction autoencoder for a few epochs on the synthetic shapes,
score it, and then check whether its encoder helps a one-epoch classifier.
Takes a few seconds on one core.
"""

from strokelab.dataio import DatasetSpec, SyntheticSource, load_dataset, split
from strokelab.models import DecoderVariant, ModelConfig, SketchTransformer, param_count
from strokelab.training import TrainConfig, evaluate, finetune_transfer, train_model

spec = DatasetSpec(SyntheticSource(n_classes=10, per_class=100, seed=0))
data = split(load_dataset(spec), spec)
print(len(data.train), "train", len(data.test), "test")

tcfg = TrainConfig(epochs=5, batch_size=32)
cfg = ModelConfig(decoder_variant=DecoderVariant.NAR_NOCA, d_model=32, heads=4, max_len=32)
model = SketchTransformer(cfg, seed=0)
print(param_count(model), "parameters")

losses = train_model(model, data.train, tcfg, seed=0)
print("epoch losses", [round(x, 4) for x in losses])
print(evaluate(model, data.test, tcfg))

# the AR decoder is trained on the true history but at test time sees its own outputs
ar = SketchTransformer(cfg.replace(decoder_variant=DecoderVariant.AR), seed=0)
train_model(ar, data.train, tcfg, seed=0)
res = evaluate(ar, data.test, tcfg)
print(f"AR teacher-forced {res['mse_point_tf']:.4f}, free-running {res['mse_point']:.4f}")

pre = finetune_transfer(model.encoder_state(), cfg, 10, data.train, data.test, tcfg, seed=0)
ref = finetune_transfer(None, cfg, 10, data.train, data.test, tcfg, seed=0)
print(f"one-epoch classifier: pretrained encoder {pre:.3f}, from scratch {ref:.3f}")
