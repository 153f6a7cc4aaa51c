# %% [markdown]
# # Joint numerical range and singular support
#
# Singularities sit at expectation tuples of eigenvectors of u.A with simple
# eigenvalues.  Two published examples have polynomial descriptions.

# %%
from pathlib import Path

import numpy as np

from qwigner import jnr_boundary, make, singular_set
from qwigner.geometry import emit_points, polynomial_residual, sphere_directions, strict_convexity_probe

out = Path(__file__).resolve().with_name("out")
out.mkdir(exist_ok=True)

ex = make("dual-counterexample")
s = singular_set(ex.tuple, 400)
print(len(s), "points, max |g| =", polynomial_residual(s.a, "gpoly"))
emit_points(s, out / "dual_counterexample.csv")

# %% [markdown]
# The zero set of g also holds the line (a1, 0, 0); far points of it stay away
# from the sampled set.

# %%
for a1 in (-2.0, 2.0):
    print(a1, np.min(np.linalg.norm(s.a - [a1, 0, 0], axis=1)))

# %% [markdown]
# The heart pair: quartic boundary and one flat piece, where the top
# eigenvalue of u.A is double.

# %%
ex = make("heart")
s = singular_set(ex.tuple, 2000)
print("max quartic residual", polynomial_residual(s.a, "heart_quartic"))
rep = strict_convexity_probe(ex.tuple, sphere_directions(2, 360))
print("directions with double top eigenvalue", rep.flagged)
# direction (1, 0) faces the flat edge, so its supporting point is left as nan
b = jnr_boundary(ex.tuple, sphere_directions(2, 8))
print(np.round(b.points, 4))
