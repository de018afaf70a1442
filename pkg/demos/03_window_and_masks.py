"""The learned attention window and the causal gates built from it.

F(d) = sigmoid(a - d/b) / sigmoid(a) is 1 at distance 0 and decays with
distance; a sets roughly how far the plateau extends (in units of b) and b
how soft the edge is.
"""

import torch

from fxtf import gating

d = torch.arange(0, 11, dtype=torch.float64)
for a, b in ((5.0, 2.0), (2.0, 1.0), (3.2, 0.5)):
    print(f"a={a} b={b}:", " ".join(f"{v:.2f}" for v in gating.window_fn(d, a, b)))

win = gating.WindowParams(2.0, 1.0)
print("\n1-d gate for x = 1..4 (rows attend to columns at or left of them):")
print(gating.build_gate_1d(torch.arange(1, 5), win, dtype=torch.float64).detach().numpy().round(3))

print("\nbare causal mask, strict reading (no self attention):")
print(gating.build_gate_1d(torch.arange(1, 5), None, strict=True).numpy())

pairs = torch.tensor([(1, 2), (1, 3), (2, 3), (1, 4)])
print("\nrelational gate over matrix cells", pairs.tolist())
print(gating.build_gate_rel(pairs, win, dtype=torch.float64).detach().numpy().round(3))

# Gradients reach the unconstrained window parameters.
g = gating.build_gate_1d(torch.arange(1, 6), win, dtype=torch.float32).sum()
g.backward()
print("\nd(sum of gate)/d raw_a, raw_b:", win.raw_a.grad.item(), win.raw_b.grad.item())
