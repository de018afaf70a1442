"""The two transformer variants and the properties their gates guarantee.

Both are the same pre-norm transformer without positional encodings; the
only source of order is the gate built from token coordinates. That makes
outputs equivariant to shuffling the token set, and masked tokens invisible.
"""

import numpy as np
import torch

from fxtf import codec, models

rng = np.random.default_rng(0)
ys = rng.normal(size=8)

for name in ("desk-1d-window", "desk-relational-window"):
    cfg = models.PRESETS[name]
    net = models.FunctionTransformer(cfg)
    n_params = sum(p.numel() for p in net.parameters())
    toks = models.tokens_1d(ys) if cfg.variant == "1d" else codec.encode_input(ys).tokens
    t = torch.as_tensor(toks, dtype=torch.float32)
    perm = torch.as_tensor(rng.permutation(len(t)))
    with torch.no_grad():
        dev = (net(t[perm]) - net(t)[perm]).abs().max().item()
    print(f"{name}: {n_params} parameters, {len(t)} tokens, shuffle deviation {dev:.1e}")

net = models.FunctionTransformer(models.PRESETS["desk-relational"])
with torch.no_grad():
    print("untrained similarity row:", models.forward_rel(net, codec.encode_input(ys)).numpy().round(3))
    # The 1-d model's token at x=3 cannot see x=5..8: changing them changes nothing there.
    net1 = models.FunctionTransformer(models.PRESETS["desk-1d"])
    a = torch.as_tensor(models.tokens_1d(ys), dtype=torch.float32)
    b = a.clone()
    b[4:, 1] += 100.0
    print("output at x=3 unchanged by later tokens:", torch.equal(net1(a)[2], net1(b)[2]))
