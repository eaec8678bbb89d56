"""Bounded decision by exhaustive countermodel search.

A sequent holds at a world when satisfying every antecedent member
forces some succedent member.  The decision procedure enumerates all
models of the chosen logic's frame class up to a world bound; once the
bound covers n^|closure|, a fruitless search settles validity outright.
"""

from mvmodal import (
    Countermodel,
    LogicId,
    decide,
    filtration_bound,
    lukasiewicz_signature,
    parse_sequent,
    render_model,
)

sig = lukasiewicz_signature(3)

goal = parse_sequent("(Box p, 3) -> (p, 3)", sig)
print("goal:", "(Box p, 3) -> (p, 3)")

print("\nin mv-K a single dead-end world already refutes it:")
outcome = decide(sig, (), goal, LogicId.MV_K, bound=1)
assert isinstance(outcome, Countermodel)
print(f"  countermodel at world {outcome.world}:")
for line in render_model(outcome.model).splitlines():
    print("   ", line)

print("\nin mv-T (reflexive models) the same sequent survives the search:")
print(" ", decide(sig, (), goal, LogicId.MV_T, bound=3))
print("  filtration bound here would be",
      filtration_bound((), goal, 3), "worlds")

print("\nhypotheses constrain the models that count:")
sigma = (parse_sequent("-> (p, 3)", sig),)
print("  with p globally 3:", decide(sig, sigma, goal, LogicId.MV_K, bound=2))

small = parse_sequent("(p, 2) -> (p, 2)", sig)
print("\na goal whose closure is one formula is decided completely at bound 3:")
print(" ", decide(sig, (), small, LogicId.MV_K, bound=3))
