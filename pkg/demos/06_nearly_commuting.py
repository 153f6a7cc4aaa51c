# %% [markdown]
# # Nearly commuting pairs
#
# Perturbing five commuting points couples pairs of eigenvalues; the singular
# set approaches the ellipses of the compressed 2x2 problems.

# %%
import numpy as np

from qwigner import make
from qwigner.geometry import eigenvalue_curves, nearly_commuting_ellipses

for eps in (0.05, 0.025, 0.0125):
    rep = nearly_commuting_ellipses(*make("nearly-commuting", eps_prime=eps).tuple.ops, 4000)
    print(f"eps' = {eps:<7} Hausdorff distance {rep.hausdorff:.2e}")

# %% [markdown]
# Eigenvalue curves of A1 cos t + A2 sin t show the avoided crossings.

# %%
A = make("nearly-commuting").tuple
t = np.linspace(0, np.pi, 721)
c = eigenvalue_curves(*A.ops, t)
gaps = np.diff(c.sorted_values, axis=1)
k = np.argmin(gaps.min(axis=1))
print("smallest gap", gaps[k].min(), "at t =", t[k])
