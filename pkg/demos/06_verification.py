"""Drive the randomized checker from Python instead of the command line.

Every registered claim gets hammered with seeded random distributions; a
report says how many trials ran and the worst normalized residual seen.
Identical seed and config means byte-identical reports, on any machine.
"""

from qentropy import REGISTRY, get_case, run_case, run_registry

print(f"{len(REGISTRY)} registered cases:")
for cid, case in REGISTRY.items():
    print(f"  {cid:10s} {case.description}")

# one case, small run
print()
rep = run_case("cor3.1", trials=500, seed=7)
print("cor3.1 x 500 trials:", "clean" if rep.violations == 0 else "violated")
print("  worst residual:", rep.worst_violation)
print("  witness:", rep.worst_witness)
print("  json:", rep.to_json_line())

# a case holds only on part of the index range; outside it the checker
# refuses unless explicitly overridden, and then only reports what it saw
case = get_case("thm5.1")
print()
print("thm5.1 admits q=0.5:", case.admits(0.5))
forced = run_case("thm5.1", trials=200, seed=7, q_grid=(0.5,), override_hypothesis=True)
print("forced run in_hypothesis:", forced.in_hypothesis,
      " violations:", forced.violations)

# the short version of the full sweep
print()
for rep in run_registry(trials=100, seed=42):
    flag = "" if rep.violations == 0 else "  <-- violated"
    print(f"  {rep.case:10s} worst {rep.worst_violation:.2e}{flag}")
