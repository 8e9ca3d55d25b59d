"""From a Fuchsian group to an m-Arf function and back.

Build a sequential set for (1: 5), lift it to G_4 with chosen handle levels,
and measure the rules an m-Arf function must satisfy on sampled curves.
Then show what goes wrong if the cone generator sits at the wrong level.
"""

from higher_arf import Signature, make_signature
from higher_arf.covering import level
from higher_arf.errors import RelationFailed
from higher_arf.fuchsian import canonical_lift_product_check, is_sequential, lift_with_levels, verify_arf_axioms

sig, m = Signature(1, (5,)), 4
V = make_signature(sig)
print("sequential:", is_sequential(V), " relation residual %.2e" % V.relation_residual())

L = lift_with_levels(V, m, [1], [2])
print("measured generator levels:", [level(x) for x in L.generators()])
report = verify_arf_axioms(L, samples=100, seed=0)
for c in report.checks:
    print(f"  rule {c.rule}: {c.samples} samples, {c.failures} failures, {c.skipped} skipped")
print("read off as a function:", L.arf_function())

for wrong in (0, 1, 2):
    try:
        lift_with_levels(V, m, [1], [2], [wrong])
    except RelationFailed as exc:
        print(f"cone level {wrong}: {exc}")

for orders in [(5, 5, 5), (3, 3, 3, 3), (2, 3, 3, 5, 7)]:
    W = make_signature(Signature(0, orders))
    print(f"{orders}: canonical lifts multiply to level {canonical_lift_product_check(W)}")
