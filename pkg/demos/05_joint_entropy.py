"""Joint tables: marginals, the chain rule, and the leave-one-out bound."""

import math

import numpy as np

from qentropy import (
    JointDist,
    chain_rule_decomposition,
    conditioning_reduces_entropy_check,
    han_sandwich,
    marginal,
    tsallis_conditional_entropy,
    tsallis_joint_entropy,
)

cells = np.array([[0.10, 0.20], [0.30, 0.40]])
j = JointDist(cells)
q = 2.0

print("joint table:\n", cells)
print("marginal over rows:   ", marginal(j, (0,)).cells)
print("marginal over columns:", marginal(j, (1,)).cells)

# chain rule is exact at every index: joint = first + conditional remainder
terms = chain_rule_decomposition(j, (0, 1), q)
joint = tsallis_joint_entropy(j, q)
print()
print(f"H_{q}(joint) = {joint:.6f} = {terms[0]:.6f} + {terms[1]:.6f}")
assert math.isclose(joint, math.fsum(terms), rel_tol=1e-12)

# conditioning cannot raise entropy once q >= 1
cond, marg = conditioning_reduces_entropy_check(j, q)
print(f"H_{q}(row | column) = {cond:.6f} <= H_{q}(row) = {marg:.6f}")
assert cond <= marg + 1e-12

explicit = tsallis_conditional_entropy(j, (0,), (1,), q)
assert math.isclose(cond, explicit, rel_tol=1e-12)

# three binary coordinates: joint entropy vs leave-one-out average
cells3 = np.full((2, 2, 2), 0.125)
rep = han_sandwich(JointDist(cells3), q)
print()
print(f"uniform 3-cube: {rep.lower:.4f} <= H_{q} = {rep.value:.4f} <= {rep.upper:.4f}")
