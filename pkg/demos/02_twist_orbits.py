"""Twists shuffle functions around; the invariant is all that survives.

We push every function of (2: -) at level 2 and of (1: 5) at level 4 through
the twist moves, group them into orbits, and compare with the invariant.
Then we bring one function to its normal form and replay the twist word.
"""

from higher_arf.arf import from_state
from higher_arf.mcg import apply_word, classify_orbits, normal_form
from higher_arf.signature import Signature

for sig, m in [(Signature(2), 2), (Signature(1, (5,)), 4), (Signature(2, (5, 5)), 3)]:
    print(f"{sig} at level {m}:")
    for o in classify_orbits(sig, m):
        print(f"  invariant {o.delta}: {o.size} functions, e.g. state {o.representative}")

sig, m = Signature(2), 2
f = from_state(sig, m, (1, 1, 0, 1))
g, word = normal_form(f)
print(f"\nnormal form of {f.state}: {g.state} via {' '.join(map(str, word)) or 'nothing'}")
assert apply_word(f, word) == g
print("replaying the word reproduces it")
