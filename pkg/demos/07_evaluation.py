"""Autoregressive rollout, MSE tables and the optimal-uncertainty row.

A model extrapolates 10 steps, feeding its own predictions back as context.
An oracle that knows the true continuation shows what perfect looks like;
the GP posterior gives the best achievable uncertainty on RBF curves.
"""

import numpy as np

from fxtf import evaluation, models

ecfg = evaluation.EvalConfig(n_test_curves=60)
test = evaluation.test_curves(ecfg)
print("class counts:", {c: sum(k.cls == c for k in test) for c in ("lin", "sine", "rbf")})

truths = np.stack([c.latent_ys for c in test])
oracle = evaluation.OraclePredictor(truths)
preds, stds = evaluation.rollout_batch(oracle, np.stack([c.ys[:20] for c in test]), 10)
print(f"oracle: max |error| {np.abs(preds - truths[:, 20:]).max():.1e}, max std {stds.max():.1e}")

gp = [evaluation.gp_posterior_std(3.0, 20, t) for t in range(1, 11)]
print("GP predictive std by step:", np.round(gp, 3), f"mean {np.mean(gp):.3f}")
print("optimal uncertainty row:", evaluation.optimal_uncertainty())

# An untrained model shows the table layout; see 08 for trained ones.
entries = [
    evaluation.ModelEntry(name, 0, evaluation.ModelPredictor(models.FunctionTransformer(models.PRESETS[name])), None)
    for name in ("desk-1d", "desk-relational")
]
rep = evaluation.evaluate(entries, ecfg, test)
for name, row in rep["mse"].items():
    print(f"{name:<16} MSE", {k: round(v["mean"], 3) for k, v in row["summary"].items()})
print("models without native uncertainty:", rep["no_uncertainty"])
