# %% [markdown]
# # Weyl-ordered moments and informational completeness
#
# Moments of the distribution are the symmetrized operator products M^r.  Their
# span decides whether rho can be recovered from its Wigner function.

# %%
import numpy as np

from qwigner import MomentTable, check_multinomial, commutator_orthogonality, make, validate_tuple, weyl_span_dimension
from qwigner.core import PAULI, random_hermitian
from qwigner.moments import normal_complete, weyl_moment_bruteforce

rng = np.random.default_rng(0)
A = validate_tuple([random_hermitian(3, rng) for _ in range(3)])
table = MomentTable(A, 5)
print("recursion vs permutations", np.abs(table[(2, 1, 2)] - weyl_moment_bruteforce(A, (2, 1, 2))).max())
xi = rng.standard_normal(3)
print("multinomial residual R=5", check_multinomial(A, xi, 5, table))

# %% [markdown]
# For a pair the commutator is orthogonal to every moment, so pairs are never
# informationally complete: the span stops at d(d+1)/2.

# %%
for d in (3, 4, 5, 6):
    pair = validate_tuple([random_hermitian(d, rng) for _ in range(2)])
    print(d, weyl_span_dimension(pair), d * (d + 1) // 2, d * d)
pair = make("random-pair").tuple
print("commutator overlap", commutator_orthogonality(*pair.ops))
print("Pauli triple", weyl_span_dimension(validate_tuple(PAULI)))

# %% [markdown]
# Real symmetric triples commute with complex conjugation and stay below d(d+1)/2.

# %%
for _ in range(3):
    t = validate_tuple([random_hermitian(3, rng, real=True) for _ in range(3)])
    print("real triple", weyl_span_dimension(t))

# %% [markdown]
# Normally ordered moments A1^p A2^q, by contrast, are complete unless an
# eigenvector of A1 is orthogonal to one of A2.

# %%
print(normal_complete(*pair.ops))
