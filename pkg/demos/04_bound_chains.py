"""The bound reports: every inequality ships as lower <= value <= upper.

Each op returns a BoundReport so the slack on both sides is visible, not
just a boolean.
"""

from qentropy import (
    cartwright_field,
    make_dist,
    refined_maxent_bounds,
    tightest_constants,
    tsallis_cross_entropy_sandwich,
    tsallis_entropy,
)


def show(name, rep):
    ok = "ok" if rep.holds() else "VIOLATED"
    print(f"{name}: {rep.lower:.6f} <= {rep.value:.6f} <= {rep.upper:.6f}   [{ok}]")
    print(f"    slack: {rep.lower_slack:.6f} below, {rep.upper_slack:.6f} above")


# how far a distribution sits below the entropy maximum, bounded both ways
r = make_dist([0.25, 0.75])
rep = refined_maxent_bounds(r, 2.0)
show("maxent gap   ", rep)
print("    check: value =", tsallis_entropy(make_dist([0.5, 0.5]), 2.0) - tsallis_entropy(r, 2.0))

# arithmetic vs geometric mean, variance-pinned from both sides
print()
show("am-gm gap    ", cartwright_field([1.0, 4.0], make_dist([0.5, 0.5])))

# cross-entropy gap with curvature constants fitted to the actual supports
print()
p = make_dist([0.5, 0.5])
rr = make_dist([0.25, 0.75])
dr = tightest_constants(p, rr, 2.0)
print(f"curvature range on ({dr.interval[0]:.4f}, {dr.interval[1]:.4f}): "
      f"m={dr.m:.6f} M={dr.M:.6f}")
show("cross-entropy", tsallis_cross_entropy_sandwich(p, rr, 2.0, dr.m, dr.M))
