"""Orbifold signatures, liftability congruences and admissible Arf types.

Everything here is exact: integers and :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterable

from .errors import NotCoprime, NotHyperbolic


@dataclass(frozen=True)
class Signature:
    """Co-compact orbifold signature ``(g: p_1, ..., p_r)``.

    Equality is order-sensitive since the standard basis is ordered;
    use :meth:`canonical` to deduplicate.
    """

    genus: int
    orders: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(p) for p in self.orders))
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        for p in self.orders:
            if p < 2:
                raise ValueError(f"cone orders must be >= 2, got {p}")

    @property
    def r(self) -> int:
        return len(self.orders)

    def euler_characteristic(self) -> Fraction:
        return 2 - 2 * self.genus - sum((1 - Fraction(1, p) for p in self.orders), Fraction(0))

    def canonical(self) -> "Signature":
        return Signature(self.genus, tuple(sorted(self.orders)))

    def teich_dimension(self) -> int:
        return 6 * self.genus - 6 + 2 * self.r

    def to_json(self) -> dict:
        return {"genus": self.genus, "orders": list(self.orders)}

    @classmethod
    def from_json(cls, data: dict) -> "Signature":
        return cls(int(data["genus"]), tuple(data.get("orders", ())))

    def __str__(self):
        body = ",".join(map(str, self.orders)) if self.orders else "—"
        return f"({self.genus}: {body})"


@dataclass(frozen=True)
class ArfType:
    signature: Signature
    delta: int

    def to_json(self) -> dict:
        return {**self.signature.to_json(), "delta": self.delta}

    @classmethod
    def from_json(cls, data: dict) -> "ArfType":
        return cls(Signature.from_json(data), int(data["delta"]))


def _check_level(m: int):
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")


def is_hyperbolic(sig: Signature) -> bool:
    return sig.euler_characteristic() < 0


def _require_hyperbolic(sig: Signature):
    if not is_hyperbolic(sig):
        raise NotHyperbolic(f"{sig} has Euler characteristic {sig.euler_characteristic()} >= 0")


def elliptic_level(p: int, m: int) -> int:
    """The unique ``n`` in ``Z/m`` with ``p*n + 1 = 0 (mod m)``."""
    _check_level(m)
    if gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) = {gcd(p, m)}: the order-{p} rotation has no lift to G_{m}")
    if m == 1:
        return 0
    return (-pow(p, -1, m)) % m


def liftability_failure(sig: Signature, m: int) -> str | None:
    """Why ``sig`` does not lift to level ``m``: ``"gcd"``, ``"congruence"`` or None."""
    _require_hyperbolic(sig)
    _check_level(m)
    if any(gcd(p, m) != 1 for p in sig.orders):
        return "gcd"
    P = prod(sig.orders)
    value = P * (sum((Fraction(1, p) for p in sig.orders), Fraction(0)) - (2 * sig.genus - 2) - sig.r)
    assert value.denominator == 1
    if value.numerator % m != 0:
        return "congruence"
    return None


def liftable(sig: Signature, m: int) -> bool:
    return liftability_failure(sig, m) is None


def liftable_by_residues(sig: Signature, m: int) -> bool:
    """Second route: ``sum elliptic_level(p_i) = (2-2g) - r (mod m)``."""
    _require_hyperbolic(sig)
    try:
        total = sum(elliptic_level(p, m) for p in sig.orders)
    except NotCoprime:
        return False
    return (total - (2 - 2 * sig.genus - sig.r)) % m == 0


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def genus_one_bound(sig: Signature, m: int) -> int:
    """``gcd(m, p_1 - 1, ..., p_r - 1)``; equals ``m`` when there are no cone points."""
    return gcd(m, *(p - 1 for p in sig.orders))


def admissible_types(sig: Signature, m: int) -> list[ArfType]:
    _require_hyperbolic(sig)
    if not liftable(sig, m):
        return []
    g = sig.genus
    if g == 0:
        deltas: Iterable[int] = [0]
    elif g == 1:
        deltas = divisors(genus_one_bound(sig, m))
    elif m % 2 == 0:
        deltas = [0, 1]
    else:
        deltas = [0]
    return [ArfType(sig, d) for d in deltas]


def count_arf_functions(sig: Signature, m: int) -> int:
    return m ** (2 * sig.genus) if liftable(sig, m) else 0
