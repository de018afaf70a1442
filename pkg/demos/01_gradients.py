"""Differentiable building blocks and how they are checked.

Every op in fxtf.autograd is a plain function over torch tensors. Here we
compare the analytic gradient of each against central finite differences in
float64, then look at how a zero gate removes a key from attention.
"""

import torch

from fxtf import autograd as ag

torch.manual_seed(0)
x = torch.randn(4, 6, dtype=torch.float64, requires_grad=True)
scale = torch.randn(6, dtype=torch.float64, requires_grad=True)
shift = torch.randn(6, dtype=torch.float64, requires_grad=True)


def loss():
    h = ag.gelu(ag.layer_norm(x, scale, shift))
    return ag.mse_loss(h, torch.zeros_like(h))


analytic = torch.autograd.grad(loss(), [x, scale, shift])
for name, t, g in zip(("x", "scale", "shift"), (x, scale, shift), analytic):
    numeric = ag.finite_difference_grad(loss, t)
    print(f"d loss / d {name:<5}  relative error {ag.max_relative_error(g, numeric):.2e}")

# A gate of 0 gives exactly zero attention weight, whatever the logit.
logits = torch.tensor([[3.0, 1.0, 50.0]], dtype=torch.float64)
gate = torch.tensor([[1.0, 0.5, 0.0]], dtype=torch.float64)
print("gated softmax:", ag.softmax_gated(logits, gate).tolist())

# One Adam step on a toy quadratic.
w = torch.tensor([1.0, -2.0], requires_grad=True)
state = ag.AdamState.for_params({"w": w}, lr=0.1)
for _ in range(3):
    w.grad = None
    ag.backward((w**2).sum())
    ag.adam_step({"w": w}, state)
print("w after 3 Adam steps:", w.detach().tolist())
