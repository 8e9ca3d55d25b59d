"""Generalised Dehn twists acting on Arf-function value tuples.

States are the interleaved tuples ``(alpha_1, beta_1, ..., alpha_g, beta_g)``
of residues mod ``m``; cone values are fixed by the signature, so the state
space is exactly ``(Z/m)^{2g}``.

Moves (1-based indices, as in the usual list of generalised Dehn twists)::

    T1      alpha_1 += beta_1
    T2      beta_1 -= alpha_1 + alpha_2 + 1,  beta_2 -= alpha_1 + alpha_2 + 1
    T3      (alpha_g, beta_g) -> (-beta_g, alpha_g - gamma_{g+1} - 1)
    T4(k)   swap handle k with handle k+1
    T5(k)   swap cone values k, k+1 of equal order (identity on states)

For a closed surface (``r = 0``) there is no ``c_{g+1}``; T3 is then taken
with ``gamma_{g+1} = -1``, i.e. the twist around a regular point viewed as a
cone point of order 1. Without it the handle rotation is missing and the
T1/T2/T4 orbits split the parity classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .arf import ArfFunction, arf_invariant, enumerate_all, forced_gamma, from_state
from .errors import (
    BudgetExceeded,
    ClassificationMismatch,
    NormalFormUnreachable,
    NotApplicable,
)
from .signature import ArfType, Signature, admissible_types

DEFAULT_BUDGET = 10 ** 7

State = tuple[int, ...]


@dataclass(frozen=True)
class TwistMove:
    kind: str
    k: int | None = None
    inverse: bool = False

    def __post_init__(self):
        if self.kind not in ("T1", "T2", "T3", "T4", "T5"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind in ("T4", "T5") and self.k is None:
            raise ValueError(f"{self.kind} needs an index")

    def inverted(self) -> "TwistMove":
        if self.kind in ("T4", "T5"):
            return self
        return TwistMove(self.kind, self.k, not self.inverse)

    def __str__(self):
        s = self.kind if self.k is None else f"{self.kind}({self.k})"
        return s + "^-1" if self.inverse else s

    @classmethod
    def parse(cls, text: str) -> "TwistMove":
        inverse = text.endswith("^-1")
        body = text[:-3] if inverse else text
        if "(" in body:
            kind, k = body.rstrip(")").split("(")
            return cls(kind, int(k), inverse)
        return cls(body, None, inverse)


def check_applicable(sig: Signature, t: TwistMove):
    g, r = sig.genus, sig.r
    n = g + r
    if t.kind == "T1" and g < 1:
        raise NotApplicable("T1 needs genus >= 1")
    if t.kind == "T2" and g < 2:
        raise NotApplicable("T2 needs genus >= 2")
    if t.kind == "T3" and g < 1:
        raise NotApplicable("T3 needs genus >= 1")
    if t.kind == "T4" and not (g >= 2 and 1 <= t.k <= g - 1):
        raise NotApplicable(f"T4({t.k}) needs 1 <= k <= g-1 = {g - 1}")
    if t.kind == "T5":
        if not (g + 1 <= t.k <= n - 1):
            raise NotApplicable(f"T5({t.k}) needs g+1 <= k <= n-1")
        if sig.orders[t.k - g - 1] != sig.orders[t.k - g]:
            raise NotApplicable(f"T5({t.k}) swaps cone points of different orders")


def applicable_moves(sig: Signature) -> list[TwistMove]:
    g, r = sig.genus, sig.r
    moves = []
    if g >= 1:
        moves += [TwistMove("T1"), TwistMove("T1", inverse=True)]
    if g >= 2:
        moves += [TwistMove("T2"), TwistMove("T2", inverse=True)]
    if g >= 1:
        moves += [TwistMove("T3"), TwistMove("T3", inverse=True)]
    moves += [TwistMove("T4", k) for k in range(1, g)]
    moves += [
        TwistMove("T5", k)
        for k in range(g + 1, g + r)
        if sig.orders[k - g - 1] == sig.orders[k - g]
    ]
    return moves


def _state_map(g: int, m: int, gamma1: int, t: TwistMove) -> Callable[[State], State]:
    if t.kind == "T1":
        sign = -1 if t.inverse else 1

        def f(s):
            return ((s[0] + sign * s[1]) % m,) + s[1:]
    elif t.kind == "T2":
        sign = 1 if t.inverse else -1

        def f(s):
            shift = sign * (s[0] + s[2] + 1)
            return (s[0], (s[1] + shift) % m, s[2], (s[3] + shift) % m) + s[4:]
    elif t.kind == "T3":
        i = 2 * g - 2
        if t.inverse:
            def f(s):
                a, b = s[i], s[i + 1]
                return s[:i] + ((b + gamma1 + 1) % m, (-a) % m)
        else:
            def f(s):
                a, b = s[i], s[i + 1]
                return s[:i] + ((-b) % m, (a - gamma1 - 1) % m)
    elif t.kind == "T4":
        i = 2 * (t.k - 1)

        def f(s):
            return s[:i] + s[i + 2:i + 4] + s[i:i + 2] + s[i + 4:]
    else:
        def f(s):
            return s
    return f


def _gamma1(sig: Signature, m: int) -> int:
    gamma = forced_gamma(sig, m)
    return gamma[0] if gamma else -1


@lru_cache(maxsize=256)
def _move_table(sig: Signature, m: int) -> tuple[tuple[TwistMove, Callable[[State], State]], ...]:
    gamma1 = _gamma1(sig, m)
    return tuple((t, _state_map(sig.genus, m, gamma1, t)) for t in applicable_moves(sig))


def apply_twist(f: ArfFunction, t: TwistMove) -> ArfFunction:
    check_applicable(f.signature, t)
    action = _state_map(f.genus, f.m, _gamma1(f.signature, f.m), t)
    return f.with_state(action(f.state))


def apply_word(f: ArfFunction, word: Iterable[TwistMove]) -> ArfFunction:
    for t in word:
        f = apply_twist(f, t)
    return f


def _check_budget(sig: Signature, m: int, budget: int):
    size = m ** (2 * sig.genus)
    if size > budget:
        raise BudgetExceeded(f"state space has {size} states, budget is {budget}")


def _bfs(start: State, table, target: State | None = None):
    parent: dict[State, tuple[State, TwistMove] | None] = {start: None}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if s == target:
            break
        for t, action in table:
            nxt = action(s)
            if nxt not in parent:
                parent[nxt] = (s, t)
                queue.append(nxt)
    return parent


def orbit(f: ArfFunction, budget: int = DEFAULT_BUDGET) -> frozenset[State]:
    _check_budget(f.signature, f.m, budget)
    return frozenset(_bfs(f.state, _move_table(f.signature, f.m)))


@dataclass(frozen=True)
class OrbitInfo:
    type: ArfType
    size: int
    representative: State

    @property
    def delta(self) -> int:
        return self.type.delta


def classify_orbits(sig: Signature, m: int, budget: int = DEFAULT_BUDGET) -> list[OrbitInfo]:
    """Partition all states into orbits; one entry per orbit, in lexicographic order."""
    _check_budget(sig, m, budget)
    table = _move_table(sig, m)
    seen: set[State] = set()
    result = []
    for f in enumerate_all(sig, m):
        if f.state in seen:
            continue
        orb = _bfs(f.state, table)
        seen.update(orb)
        deltas = {arf_invariant(f.with_state(s)) for s in orb}
        if len(deltas) != 1:
            raise ClassificationMismatch(f"orbit of {f.state} carries several invariants {deltas}")
        result.append(OrbitInfo(ArfType(sig, deltas.pop()), len(orb), f.state))
    expected = {t.delta for t in admissible_types(sig, m)}
    found = [o.delta for o in result]
    if sorted(found) != sorted(expected):
        raise ClassificationMismatch(f"orbit invariants {found} != admissible {sorted(expected)}")
    return result


def normal_state(genus: int, m: int, delta: int) -> State:
    """Normal-form basis values of the orbit with invariant ``delta``."""
    if genus == 0:
        return ()
    if genus == 1:
        return (delta % m, 0)
    return (0, (1 - delta) % m) + (1 % m,) * (2 * genus - 2)


def normal_form_state(f: ArfFunction) -> State:
    return normal_state(f.genus, f.m, arf_invariant(f))


def normal_form(f: ArfFunction, budget: int = DEFAULT_BUDGET) -> tuple[ArfFunction, list[TwistMove]]:
    """Normal-form representative of ``f``'s orbit and a word of moves reaching it."""
    target = normal_form_state(f)
    if f.state == target:
        return f, []
    _check_budget(f.signature, f.m, budget)
    parent = _bfs(f.state, _move_table(f.signature, f.m), target)
    if target not in parent:
        raise NormalFormUnreachable(f"{target} is not in the orbit of {f.state}")
    word = []
    s = target
    while parent[s] is not None:
        s, t = parent[s]
        word.append(t)
    word.reverse()
    image = apply_word(f, word)
    if image.state != target:
        raise NormalFormUnreachable("witness word does not reproduce the normal form")
    return image, word


def normal_form_of_state(sig: Signature, m: int, state: State, budget: int = DEFAULT_BUDGET):
    return normal_form(from_state(sig, m, state), budget)
