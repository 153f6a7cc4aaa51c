# %% [markdown]
# # Dihedral symmetry
#
# A pair transforming like the plane representation of D_p gives a Wigner
# function that rotates with the state.  The twirl produces such pairs.

# %%
import numpy as np

from qwigner import auto_spec, compute_wigner_grid
from qwigner.catalog import dihedral_multiplet, twirl_rank
from qwigner.core import random_state
from qwigner.grid import interpolate

print([twirl_rank(p) for p in range(3, 9)])

ex = dihedral_multiplet(5)
rho = random_state(5, np.random.default_rng(0))
u, R = ex.extra["group"][2]
spec = auto_spec(ex.tuple, 256, 0.01, pad=0.3)
g0 = compute_wigner_grid(ex.tuple, rho, spec)
g1 = compute_wigner_grid(ex.tuple, u @ rho @ u.T, spec)
err = np.abs(g1.values - interpolate(g0, spec.points() @ R)).max()
print("covariance error / peak", err / g0.peak)

# %% [markdown]
# With rho = I/p the function itself has the full polygon symmetry.

# %%
gs = compute_wigner_grid(ex.tuple, ex.state, spec)
print(np.abs(gs.values - interpolate(gs, spec.points() @ R)).max() / gs.peak)
