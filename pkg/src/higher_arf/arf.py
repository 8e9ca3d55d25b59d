"""m-Arf functions stored by their values on a standard basis.

A function on a signature ``(g: p_1..p_r)`` is determined by the free residues
``alpha_i = sigma(a_i)``, ``beta_i = sigma(b_i)``; the cone values
``gamma_j = sigma(c_{g+j})`` are forced by ``p_j * gamma_j + 1 = 0 (mod m)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .errors import LengthMismatch, NotLiftable
from .signature import (
    ArfType,
    Signature,
    elliptic_level,
    genus_one_bound,
    liftability_failure,
)


@dataclass(frozen=True)
class ArfFunction:
    signature: Signature
    m: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]

    @property
    def genus(self) -> int:
        return self.signature.genus

    @property
    def state(self) -> tuple[int, ...]:
        """Interleaved tuple ``(alpha_1, beta_1, ..., alpha_g, beta_g)``."""
        return tuple(x for pair in zip(self.alpha, self.beta) for x in pair)

    def with_state(self, state: Sequence[int]) -> "ArfFunction":
        m = self.m
        return ArfFunction(
            self.signature, m,
            tuple(x % m for x in state[0::2]),
            tuple(x % m for x in state[1::2]),
            self.gamma,
        )

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "m": self.m,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "gamma": list(self.gamma),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ArfFunction":
        f = new_arf(Signature.from_json(data["signature"]), int(data["m"]), data["alpha"], data["beta"])
        if list(f.gamma) != [int(x) % f.m for x in data.get("gamma", f.gamma)]:
            raise ValueError("gamma values are inconsistent with the signature")
        return f


def forced_gamma(sig: Signature, m: int) -> tuple[int, ...]:
    failure = liftability_failure(sig, m)
    if failure is not None:
        raise NotLiftable(f"{sig} does not lift to level {m} ({failure})")
    gamma = tuple(elliptic_level(p, m) for p in sig.orders)
    assert (sum(gamma) - (2 - 2 * sig.genus - sig.r)) % m == 0
    return gamma


def new_arf(sig: Signature, m: int, alphas: Sequence[int], betas: Sequence[int]) -> ArfFunction:
    gamma = forced_gamma(sig, m)
    if len(alphas) != sig.genus or len(betas) != sig.genus:
        raise LengthMismatch(
            f"expected {sig.genus} alpha and beta values, got {len(alphas)} and {len(betas)}"
        )
    return ArfFunction(
        sig, m,
        tuple(int(a) % m for a in alphas),
        tuple(int(b) % m for b in betas),
        gamma,
    )


def from_state(sig: Signature, m: int, state: Sequence[int]) -> ArfFunction:
    return new_arf(sig, m, list(state[0::2]), list(state[1::2]))


def arf_invariant(f: ArfFunction) -> int:
    g, m = f.genus, f.m
    if g == 0:
        return 0
    if g == 1:
        return gcd(genus_one_bound(f.signature, m), f.alpha[0], f.beta[0])
    if m % 2:
        return 0
    # parity is basis independent, so the stored basis is as good as any
    return sum((1 - a) * (1 - b) for a, b in zip(f.alpha, f.beta)) % 2


def type_of(f: ArfFunction) -> ArfType:
    return ArfType(f.signature, arf_invariant(f))


def enumerate_all(sig: Signature, m: int) -> Iterator[ArfFunction]:
    """All ``m**(2g)`` functions, lexicographic in the interleaved state."""
    gamma = forced_gamma(sig, m)
    for state in itertools.product(range(m), repeat=2 * sig.genus):
        yield ArfFunction(sig, m, state[0::2], state[1::2], gamma)


def difference(f1: ArfFunction, f2: ArfFunction) -> tuple[int, ...]:
    """``f1 - f2`` on the basis, an element of ``(Z/m)^{2g}``."""
    if f1.signature != f2.signature or f1.m != f2.m:
        raise ValueError("functions live on different signatures or levels")
    return tuple((x - y) % f1.m for x, y in zip(f1.state, f2.state))


def translate(f: ArfFunction, vector: Sequence[int]) -> ArfFunction:
    if len(vector) != 2 * f.genus:
        raise LengthMismatch("translation vector has the wrong length")
    return f.with_state([x + v for x, v in zip(f.state, vector)])
