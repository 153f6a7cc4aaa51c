# %% [markdown]
# # Mixed moments of positive matrices
#
# For two positive semidefinite matrices every Weyl-ordered mixed moment has a
# nonnegative trace.  Three rank-one projections already break the analogue.

# %%
import numpy as np

from qwigner.moments import bmv_mixed_moment, bmv_triple_counterexample

print("tr(ABC + CBA) =", bmv_triple_counterexample())

rng = np.random.default_rng(0)
worst = np.inf
for _ in range(50):
    ops = []
    for _ in range(2):
        x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        p = x @ x.conj().T
        ops.append(p / np.linalg.norm(p, 2))
    worst = min(worst, min(bmv_mixed_moment(*ops, n, R - n) for R in range(11) for n in range(R + 1)))
print("smallest mixed moment over 50 pairs", worst)
