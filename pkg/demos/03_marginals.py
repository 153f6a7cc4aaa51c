# %% [markdown]
# # Marginals
#
# Projecting the distribution on any direction u gives the spectral measure of
# u.A in the state, smeared by a Gaussian of variance 2 eps |u|^2.

# %%
import numpy as np

from qwigner import auto_spec, compute_wigner_grid, make, marginal
from qwigner.grid import smeared_spectral_marginal

ex = make("random-pair")
spec = auto_spec(ex.tuple, 256, 0.01)
g = compute_wigner_grid(ex.tuple, ex.state, spec)

for k in range(8):
    u = np.array([np.cos(k * np.pi / 8), np.sin(k * np.pi / 8)])
    t, dens = marginal(g, u)
    ref = smeared_spectral_marginal(ex.tuple, ex.state, u, 0.01, t)
    print(f"angle {k}/8 pi   L1 = {np.sum(np.abs(dens - ref)) * (t[1] - t[0]):.2e}")

# %% [markdown]
# Multilinear slab interpolation is cheaper to reason about but loses
# accuracy on oblique directions.

# %%
u = np.array([1.0, 1.0]) / np.sqrt(2)
for order in (1, 3):
    t, dens = marginal(g, u, order=order)
    ref = smeared_spectral_marginal(ex.tuple, ex.state, u, 0.01, t)
    print(order, np.sum(np.abs(dens - ref)) * (t[1] - t[0]))
