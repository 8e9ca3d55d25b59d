"""Levels in the universal cover.

Each Moebius map has a Z-worth of lifts to the universal cover, told apart
by their level. The canonical lift sits at level 0. A few facts to watch:

* conjugation does not change the level;
* inverting negates it, except that a half turn at level k inverts to -k-1;
* lifts of hyperbolics with crossing axes add their levels;
* a rotation by 2 pi / p at level n has p-th power u^(p n + 1).
"""

import math
import random

from higher_arf.covering import canonical_lift, level, lift_at_level
from higher_arf.moebius import rotation_about
from higher_arf.sampling import random_crossing_pair, random_element

rng = random.Random(0)
X = lift_at_level(random_element(rng), 2)
Y = lift_at_level(random_element(rng), -1)
print("level of X:", level(X), " of Y X Y^-1:", level(X.conjugate_by(Y)), " of X^-1:", level(X.inverse()))

H = canonical_lift(rotation_about(1j, math.pi))
print("half turn at level 0, its inverse at level", level(H.inverse()))

a, b = random_crossing_pair(rng)
print("crossing axes, levels 1 and 2 multiply to level", level(lift_at_level(a, 1) @ lift_at_level(b, 2)))

C = rotation_about(0.5 + 2j, 2 * math.pi / 5)
for n in range(3):
    print(f"order 5 rotation at level {n}: fifth power has level {level(lift_at_level(C, n) ** 5)}")
print("so at level m the fifth power is trivial exactly when 5 n + 1 = 0 mod m")
