"""Relational tokens: the model only ever sees differences between values.

A context y_1..y_N becomes tokens (i, j, y_i - y_j) for i < j, plus query
tokens (i, N+1, 0). The model predicts the row y_next - y_i; adding y_i back
gives N estimates of y_next whose median is the prediction and whose spread
is the uncertainty.
"""

import numpy as np

from fxtf import codec

ys = np.array([0.0, 0.5, 0.9, 1.2])
rel = codec.encode_input(ys)
print("tokens (i, j, s):")
print(rel.tokens)
print("query tokens at", rel.query_indices.tolist())

row = codec.target_row(ys, 1.4)
print("\ntarget row for y_next=1.4:", row)
exact = codec.readout(row, ys)
print("readout of the exact row: point", exact.point_estimate, "std", exact.uncertainty)

noisy = codec.readout(row + np.array([0.05, -0.02, 0.1, 0.0, 0.0]), ys)
print("readout of a perturbed row: estimates", noisy.estimates.round(3), "point", noisy.point_estimate, f"std {noisy.uncertainty:.3f}")

# Shifting every value leaves the tokens unchanged (up to rounding): the model cannot tell.
print("\ntokens invariant to adding 10:", np.allclose(codec.encode_input(ys + 10).tokens, rel.tokens, atol=1e-12))
