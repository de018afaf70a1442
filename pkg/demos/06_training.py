"""Train a small relational model, checkpoint it, and resume.

A couple of thousand curves keep this under a minute; the desk recipe uses 40 000.
Each curve gives one training example whose context length is drawn per step.
"""

import tempfile
from pathlib import Path

import numpy as np

from fxtf import checkpoint, models, training

out = Path(tempfile.mkdtemp(prefix="fxtf_demo_train_"))
cfg = training.TrainConfig(
    n_curves=1600,
    batch_size=32,
    lr=1e-3,
    window_lr_mult=10.0,
    model=models.ModelConfig(d_model=32, n_heads=4, n_layers=2, variant="relational", learned_window=True),
)
model, report = training.train(cfg, out)
first, last = np.mean(report.losses[:10]), np.mean(report.losses[-10:])
print(f"{cfg.n_steps} steps in {report.wall_clock:.1f}s; mean loss of first/last 10 steps {first:.3f} -> {last:.3f}")
print("learned window:", report.window)
print("run directory:", sorted(p.name for p in out.iterdir()))

loaded, state, stored = checkpoint.load(out / "checkpoint.fxtf")
print("checkpoint holds", len(loaded.named_params()), "parameter tensors; Adam step", state.step)

# Resuming with a longer recipe continues from the stored optimizer state.
longer = training.TrainConfig(**{**cfg.__dict__, "n_curves": 1920})
_, report2 = training.train(longer, out, resume=True)
print(f"resumed to {len(report2.losses)} steps; final loss {report2.losses[-1]:.3f}")
