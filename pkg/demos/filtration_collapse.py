"""Collapsing a model through a set of formulas while preserving values.

Worlds that agree on every formula of a subformula-closed set fall into
one class.  The filtered model keeps each formula's value at every world
and stays inside the logic's frame class, which is what makes bounded
countermodel search complete.
"""

import random

from mvmodal import (
    Box,
    LogicId,
    Var,
    filter_model,
    lukasiewicz_signature,
    render_model,
    subformula_closure,
    verify_filtration,
)
from mvmodal.sampling import random_model

sig = lukasiewicz_signature(3)
p = Var("p")
phi = subformula_closure({Box(p)})

rng = random.Random(3)
model = random_model(rng, ["p"], 3, 6, LogicId.MV_S4.frame_class)
print(f"a random preordered model with {model.world_count} worlds:")
for line in render_model(model).splitlines():
    print("  ", line)

filtered = filter_model(sig, model, phi, LogicId.MV_S4)
print(f"\nfiltering through {{Box p, p}} leaves "
      f"{filtered.model.world_count} class(es):")
for idx, members in enumerate(filtered.classes):
    print(f"   class {idx}: worlds {members}")
for line in render_model(filtered.model).splitlines():
    print("  ", line)

report = verify_filtration(sig, model, phi, LogicId.MV_S4)
print("\nvalue preservation and frame membership:", report)
