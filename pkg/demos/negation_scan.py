"""Exactly one negation table makes Box and Dia De Morgan duals.

The scan enumerates every unary truth table and keeps those under which
neg Box neg evaluates as Dia and neg Dia neg as Box on every small
model.  Only the order-reversing table survives.
"""

from mvmodal import duality_holds, reversal_negation, uniqueness_scan

for n in (2, 3):
    survivors = uniqueness_scan(n, bound=2)
    print(f"n = {n}: {n ** n} candidate tables, "
          f"{len(survivors)} survive the scan")
    for table in survivors:
        mapping = ", ".join(f"{k} -> {v}" for k, v in enumerate(table, 1))
        print(f"   {mapping}")
    assert survivors == (reversal_negation(n),)

print("\nwhy the identity table fails at n = 3:")
report = duality_holds((1, 2, 3), 3, bound=2)
w = report.witness
print(f"   on a model with {w.model.world_count} world(s), "
      f"world {w.world} gives the {w.side} claim value {w.label} "
      "on one side only")

print("\nsingle-world models already do most of the work: the dead end pins")
print("the endpoint images and the looping world forces an involution:")
for table in uniqueness_scan(3, bound=1):
    print(f"   surviving table {table}")
