"""A few Moebius maps, their fixed points and what the classification says."""

import math

from higher_arf.moebius import (
    MoebiusTransformation,
    axes_intersect,
    classify,
    hyperbolic_along,
    rotation_about,
    translation,
)

maps = {
    "diag(2, 1/2)": MoebiusTransformation(2, 0, 0, 0.5),
    "z + 1": translation(1),
    "quarter turn about i": rotation_about(1j, math.pi / 2),
    "shift 1 from -1 to 1": hyperbolic_along(-1, 1, 1.0),
}
for name, M in maps.items():
    print(f"{name:22s} trace {abs(M.trace):.4f}  ->  {classify(M)}")

a = hyperbolic_along(-1, 1, 1.0)
b = hyperbolic_along(0, 5, 0.5)
c = hyperbolic_along(2, 3, 0.5)
print("\naxes (-1,1) and (0,5) cross:", axes_intersect(a, b))
print("axes (-1,1) and (2,3) cross:", axes_intersect(a, c))
