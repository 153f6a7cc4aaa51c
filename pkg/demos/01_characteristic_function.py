# %% [markdown]
# # Characteristic function of an operator tuple
#
# For Hermitian A = (A_1, ..., A_n) and a state rho, the Fourier transform of
# the Wigner distribution is tr rho exp(i xi.A).  One eigendecomposition of
# xi.A gives it exactly.

# %%
import numpy as np
import scipy.linalg

from qwigner import char_function, char_function_many, make, pencil

ex = make("pauli3")
xi = np.array([0.3, -1.2, 0.7])
print("W^(xi)        ", char_function(ex.tuple, ex.state, xi))
print("cos |xi|      ", np.cos(np.linalg.norm(xi)))

# %% [markdown]
# Cross-check against a matrix exponential on a random pair.

# %%
ex = make("random-pair")
rng = np.random.default_rng(1)
for xi in rng.standard_normal((3, 2)):
    m = np.tensordot(xi, ex.tuple.ops, axes=1)
    print(char_function(ex.tuple, ex.state, xi), np.trace(ex.state @ scipy.linalg.expm(1j * m)))

# %% [markdown]
# Homogeneity of the pencil spectrum, and the bound |W^| <= 1 on a batch.

# %%
pe, pl = pencil(ex.tuple, [1.0, 2.0]), pencil(ex.tuple, [10.0, 20.0])
print(pl.eigenvalues / pe.eigenvalues)
vals = char_function_many(ex.tuple, ex.state, 5 * rng.standard_normal((1000, 2)))
print("max |W^|", np.abs(vals).max())
