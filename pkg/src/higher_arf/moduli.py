"""Connected components of moduli spaces of hyperbolic GQHSS with fixed level."""

from __future__ import annotations

from dataclasses import dataclass, field

from .mcg import DEFAULT_BUDGET, classify_orbits, normal_state
from .errors import ClassificationMismatch
from .signature import Signature, admissible_types, _require_hyperbolic


@dataclass(frozen=True)
class Component:
    delta: int
    teich_dimension: int
    representative: tuple[tuple[int, ...], tuple[int, ...]]
    orbit_size: int | None = None

    def to_json(self) -> dict:
        out = {
            "delta": self.delta,
            "teich_dimension": self.teich_dimension,
            "representative": {"alpha": list(self.representative[0]), "beta": list(self.representative[1])},
        }
        if self.orbit_size is not None:
            out["orbit_size"] = self.orbit_size
        return out


@dataclass(frozen=True)
class ComponentReport:
    signature: Signature
    m: int
    components: list[Component] = field(default_factory=list)

    @property
    def liftable(self) -> bool:
        return bool(self.components)

    def sizes(self) -> list[int]:
        return sorted(c.orbit_size for c in self.components if c.orbit_size is not None)

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "m": self.m,
            "components": [c.to_json() for c in self.components],
        }


def components(sig: Signature, m: int, brute_force: bool = False, budget: int = DEFAULT_BUDGET) -> ComponentReport:
    """One component per admissible type; orbit sizes by enumeration when asked."""
    _require_hyperbolic(sig)
    dim = sig.teich_dimension()
    types = admissible_types(sig, m)
    sizes: dict[int, int] = {}
    if brute_force and types:
        orbits = classify_orbits(sig, m, budget)
        sizes = {o.delta: o.size for o in orbits}
        if sorted(sizes) != sorted(t.delta for t in types) or sum(sizes.values()) != m ** (2 * sig.genus):
            raise ClassificationMismatch(f"orbits {sizes} disagree with the types of {sig} at level {m}")
    out = []
    for t in types:
        state = normal_state(sig.genus, m, t.delta)
        out.append(Component(t.delta, dim, (state[0::2], state[1::2]), sizes.get(t.delta)))
    return ComponentReport(sig, m, out)
