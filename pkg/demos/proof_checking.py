"""Checking derivations in the labelled sequent calculus.

A derivation is a numbered list of sequents, each justified by an axiom,
a rule applied to earlier steps, or a hypothesis.  The checker verifies
every step's exact shape and reports the first violation.
"""

from mvmodal import check_derivation, lukasiewicz_signature, render_proof
from mvmodal.core import Var
from mvmodal.derivations import box_below_diamond, box_modus_ponens_lukasiewicz
from mvmodal.parser import parse_proof

sig = lukasiewicz_signature(3)

print("derivation of (Box p, 2) -> (Dia p, 2), (Dia p, 3):\n")
small = box_below_diamond(Var("p"), 2, 3)
print(render_proof(small))
print("checker verdict:", check_derivation(small, sig) or "accepted")

print("\nthe boxed-implication composite runs through dead-end reasoning,")
print("top-label forcing, and a chain of cuts:")
big = box_modus_ponens_lukasiewicz()
print(f"  {len(big.steps)} steps, conclusion:",
      "(Box imp(p, q), 3), (Box p, 3) -> (Box q, 3)")
print("  checker verdict:", check_derivation(big, sig) or "accepted")

print("\nscripts are plain text; a wrong label is pinpointed:")
script = render_proof(small).replace("(Dia p, 2), (Dia p, 3)",
                                     "(Dia p, 1), (Dia p, 3)")
broken = parse_proof(script, sig)
violation = check_derivation(broken, sig)
print(f"  {violation}")
