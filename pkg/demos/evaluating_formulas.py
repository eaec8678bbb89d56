"""Evaluating modal formulas over a three-valued Kripke model.

Truth values are the labels 1 < 2 < 3.  Necessity takes the minimum of a
formula's value over the accessible worlds, possibility the maximum; at
a world with no successors they fall back to 3 and 1 respectively.
"""

from mvmodal import (
    Box,
    Diamond,
    KripkeModel,
    Var,
    evaluate,
    lukasiewicz_signature,
    parse_formula,
)

sig = lukasiewicz_signature(3)
p, q = Var("p"), Var("q")

# world 0 sees worlds 1 and 2; world 2 is a dead end
model = KripkeModel(
    3,
    edges={(0, 1), (0, 2), (1, 1)},
    vals={(0, "p"): 1, (1, "p"): 2, (2, "p"): 3, (1, "q"): 3},
)

print("model: 0 -> {1, 2}, 1 -> {1}, 2 -> {}")
for world in model.worlds:
    print(f"  world {world}: p = {model.value(world, 'p')}, "
          f"q = {model.value(world, 'q')}")

print("\nmodal operators aggregate over successors:")
for formula in (Box(p), Diamond(p), Box(Diamond(p))):
    values = [evaluate(sig, model, w, formula) for w in model.worlds]
    print(f"  {formula}: {values}   (per world)")

print("\nat the dead end, Box p is 3 and Dia p is 1:")
print(f"  Box p at 2 = {evaluate(sig, model, 2, Box(p))}")
print(f"  Dia p at 2 = {evaluate(sig, model, 2, Diamond(p))}")

print("\nconnectives come from truth tables; imp is the 3-valued implication:")
f = parse_formula("imp(p, Box q)", sig)
print(f"  imp(p, Box q) at 0 = {evaluate(sig, model, 0, f)}")
