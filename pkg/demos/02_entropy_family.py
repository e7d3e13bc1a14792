"""One distribution, three entropies, and the bridge between two of them."""

import math

import numpy as np

from qentropy import (
    make_dist,
    q_exp,
    renyi_entropy,
    renyi_tsallis_bridge,
    shannon_entropy,
    tsallis_entropy,
)

p = make_dist([0.25, 0.75])
print("p =", p.weights)
print()
print("shannon:", shannon_entropy(p))
for q in (0.5, 1.0, 2.0, 3.0):
    print(f"q={q}:  tsallis {tsallis_entropy(p, q):.6f}   renyi {renyi_entropy(p, q):.6f}")

# the two families share their exponential: exp(renyi) == exp_q(tsallis)
print()
lhs, rhs = renyi_tsallis_bridge(p, 2.0)
print("exp(renyi_2) =", lhs)
print("exp_2(tsallis_2) =", rhs)
assert math.isclose(lhs, rhs, rel_tol=1e-12)
assert rhs == q_exp(tsallis_entropy(p, 2.0), 2.0)

# entropy tops out on the uniform distribution, at ln_q(n)
u = make_dist(np.full(4, 0.25))
print()
print("uniform H_2:", tsallis_entropy(u, 2.0), " skewed H_2:",
      tsallis_entropy(make_dist([0.7, 0.1, 0.1, 0.1]), 2.0))
