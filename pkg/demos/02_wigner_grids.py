# %% [markdown]
# # Regularized Wigner functions on a grid
#
# The distribution itself is singular, so we sample W_eps = W * G_eps, with
# G_eps the Gaussian whose Fourier transform is exp(-eps |xi|^2).  Damping
# plus an FFT gives the grid.

# %%
from pathlib import Path

import numpy as np

from qwigner import GridSpec, compute_wigner_grid, emit, make, negativity_report
from qwigner.catalog import qubit2_gaussian_reference, qubit3_radial, regular_part

out = Path(__file__).resolve().with_name("out")
out.mkdir(exist_ok=True)

# %% [markdown]
# Qubit, two Pauli matrices: strongly negative inside the unit disc.

# %%
ex = make("pauli2")
g = compute_wigner_grid(ex.tuple, ex.state, GridSpec([-2, -2], [2, 2], 256, 0.01))
print(negativity_report(g))
print("mass", g.total_mass())
emit(g, out / "pauli2.pgm", "pgm-slice")
emit(g, out / "pauli2.csv")

# %% [markdown]
# Radial cut compared with the Gaussian-regularized Hankel integral and, for
# small eps, with the regular part -1 / (2 pi (1 - r^2)^(3/2)).

# %%
x = g.spec.axes()[0]
j = np.searchsorted(x, 0)
row = g.values[j:, j]
r = np.hypot(x[j:], x[j])
for k in range(0, 60, 12):
    print(f"r={r[k]:.3f}  grid={row[k]: .5f}  reference={qubit2_gaussian_reference(r[k], 0.01): .5f}")

g3 = compute_wigner_grid(ex.tuple, ex.state, GridSpec([-1.5, -1.5], [1.5, 1.5], 256, 1e-3))
x = g3.spec.axes()[0]
j = np.searchsorted(x, 0)
for k in (0, 20, 40):
    rr = np.hypot(x[j + k], x[j])
    print(f"eps=1e-3 r={rr:.3f}  grid={g3.values[j + k, j]: .4f}  regular part={regular_part(rr): .4f}")

# %% [markdown]
# Pauli triple: the distribution lives on the unit sphere.

# %%
ex = make("pauli3")
g = compute_wigner_grid(ex.tuple, ex.state, GridSpec([-2] * 3, [2] * 3, 64, 0.02))
s = np.linalg.norm(g.spec.points(), axis=-1)
sel = (s > 0.5) & (s < 1.5)
print("max error vs closed form", np.abs(g.values[sel] - 0.5 * qubit3_radial(s[sel], 0.02)).max(), "peak", g.peak)
emit(g, out / "pauli3_slice.pgm", "pgm-slice", slice_axis=2)
