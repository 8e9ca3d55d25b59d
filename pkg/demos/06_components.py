"""Connected components of the moduli space at fixed level.

One component per admissible invariant, each of dimension 6g - 6 + 2r.
With brute_force=True the orbit sizes are counted as a cross-check.
"""

from higher_arf import Signature
from higher_arf.moduli import components

for sig, m in [(Signature(2), 2), (Signature(1, (5,)), 4), (Signature(0, (5, 5, 5)), 2), (Signature(3), 4)]:
    report = components(sig, m, brute_force=True)
    print(f"{sig} at level {m}: {len(report.components)} component(s)")
    for c in report.components:
        print(f"   delta={c.delta}  dim={c.teich_dimension}  functions={c.orbit_size}  rep={c.representative}")
