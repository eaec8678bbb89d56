"""Embedding many-valued intuitionistic logic into the preorder modal logic.

Intuitionistic interpretations are preordered models with valuations
that grow along the relation; compound formulas take the infimum over
the future of the truth-table value.  Inserting a necessity operator
before every subformula turns intuitionistic evaluation into plain
modal evaluation on the same model.
"""

import random

from mvmodal import (
    FrameClass,
    KripkeModel,
    Var,
    evaluate,
    eval_mvil,
    godel_translate,
    godel_translate_optimized,
    hat_model,
    lukasiewicz_signature,
    render_formula,
    parse_formula,
)
from mvmodal.core import make_signature, lukasiewicz_implication, max_connective
from mvmodal.sampling import random_model

sig = lukasiewicz_signature(3)
p, q = Var("p"), Var("q")

f = parse_formula("imp(p, imp(q, p))", sig)
print("translation inserts Box before every subformula:")
print(f"   {render_formula(f)}  becomes  {render_formula(godel_translate(f))}")

sig_or = make_signature(3, [lukasiewicz_implication(3), max_connective(3)])
g = parse_formula("or(p, q)", sig_or)
print("\nmonotone connectives keep their value locally, so their box is dropped:")
print(f"   {render_formula(g)}  becomes  "
      f"{render_formula(godel_translate_optimized(g, sig_or))}")

print("\nthe hat model replaces each value by the value of its boxed form;")
print("on it, intuitionistic and translated modal evaluation coincide:")
rng = random.Random(9)
model = random_model(rng, ["p", "q"], 3, 4, FrameClass.PREORDER)
hat = hat_model(sig, model)
for world in model.worlds:
    left = eval_mvil(sig, hat, world, f)
    right = evaluate(sig, model, world, godel_translate(f))
    print(f"   world {world}: intuitionistic {left} == modal {right}")
    assert left == right

print("\nan interpretation is its own hat model (values are already minima):")
interp = KripkeModel(2, {(0, 0), (1, 1), (0, 1)},
                     {(0, "p"): 1, (1, "p"): 3})
print("   hat(M) == M:", hat_model(sig, interp) == interp)
