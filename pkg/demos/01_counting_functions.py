"""How many m-Arf functions does an orbifold carry, and of which types?

A function is pinned down by its values on a standard basis. The cone values
are forced, so only the 2g handle values are free: m^(2g) functions in all,
provided the orbifold lifts to level m at all.
"""

from higher_arf.signature import Signature, admissible_types, count_arf_functions, liftability_failure

cases = [Signature(0, (5, 5, 5)), Signature(0, (2, 3, 7)), Signature(1, (5,)), Signature(2), Signature(2, (5, 5))]

for sig in cases:
    print(f"\n{sig}  chi = {sig.euler_characteristic()}")
    for m in range(1, 7):
        why = liftability_failure(sig, m)
        if why:
            print(f"  m={m}: no lift ({why})")
            continue
        deltas = [t.delta for t in admissible_types(sig, m)]
        print(f"  m={m}: {count_arf_functions(sig, m):5d} functions, invariants {deltas}")

print("\n(2,3,7) lifts only at m = 1: every larger m shares a factor with 2, 3 or 7 or fails the congruence.")
