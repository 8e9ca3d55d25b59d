"""The universal cover of PSL(2,R) and its finite quotients G_m.

An element of the universal cover is an increasing homeomorphism ``F`` of the
real line with ``F(t + 2 pi) = F(t) + 2 pi`` that lifts the boundary-circle
action of a Moebius map. Boundary points of the half-plane are turned into
angles with the Cayley map centred at an interior point ``z0`` (default ``i``)::

    theta(x) = arg((x - z0) / (x - conj(z0)))

so that increasing ``x`` runs counter-clockwise. The disk model of ``M`` is
``w -> (A w + B) / (conj(B) w + conj(A))``; with ``q = B / A`` every lift is

    F(t) = t + c + 2 Arg(1 + q exp(-i t))

for a constant ``c``. ``Arg(1 + q e^{-it})`` never leaves ``(-pi/2, pi/2)``
since ``|q| < 1``, so no unwrapping is needed. An element is stored as its base
matrix and the anchor ``F(0)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ModulusMismatch, NumericallyAmbiguous
from .moebius import (
    Elliptic,
    Identity,
    MoebiusTransformation,
    classify,
)

TWO_PI = 2 * math.pi
IDENTITY_TOL = 1e-6
RESIDUAL_TOL = 0.1
TIE_TOL = 1e-6
ORDER2_TOL = 1e-9


def _cayley(center: complex) -> np.ndarray:
    return np.array([[1, -center], [1, -center.conjugate()]], dtype=complex)


def _disk_matrix(M: MoebiusTransformation, center: complex) -> np.ndarray:
    K = _cayley(center)
    return K @ np.array([[M.a, M.b], [M.c, M.d]], dtype=complex) @ np.linalg.inv(K)


def _q(M: MoebiusTransformation, center: complex) -> complex:
    D = _disk_matrix(M, center)
    return complex(D[0, 1] / D[0, 0])


def chart_angle(x: float, center: complex = 1j) -> float:
    """Boundary point -> angle in ``[0, 2 pi)`` in the chart centred at ``center``."""
    if math.isinf(x):
        return 0.0
    return cmath.phase((x - center) / (x - center.conjugate())) % TWO_PI


def _circle_image(M: MoebiusTransformation, theta: float, center: complex) -> float:
    D = _disk_matrix(M, center)
    w = cmath.exp(1j * theta)
    return cmath.phase((D[0, 0] * w + D[0, 1]) / (D[1, 0] * w + D[1, 1])) % TWO_PI


def _bend(q: complex, theta: float) -> float:
    return 2 * cmath.phase(1 + q * cmath.exp(-1j * theta))


@dataclass(frozen=True)
class LiftedElement:
    """Element of the universal cover (``modulus == 0``) or of ``G_m``."""

    base: MoebiusTransformation
    anchor: float
    modulus: int = 0
    center: complex = 1j

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be >= 0")
        if self.modulus:
            period = TWO_PI * self.modulus
            object.__setattr__(self, "anchor", math.fmod(self.anchor, period) % period)

    # the lifted circle map
    def _q(self) -> complex:
        return _q(self.base, self.center)

    def __call__(self, theta: float) -> float:
        q = self._q()
        return theta + self.anchor - _bend(q, 0.0) + _bend(q, theta)

    def _check(self, other: "LiftedElement"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"moduli {self.modulus} and {other.modulus} differ")
        if self.center != other.center:
            raise ValueError("elements are expressed in different charts; use rechart first")

    def __matmul__(self, other: "LiftedElement") -> "LiftedElement":
        self._check(other)
        return LiftedElement(self.base @ other.base, self(other.anchor), self.modulus, self.center)

    def inverse(self) -> "LiftedElement":
        inv = self.base.inverse()
        theta0 = _circle_image(inv, 0.0, self.center)
        k = round(self(theta0) / TWO_PI)
        return LiftedElement(inv, theta0 - TWO_PI * k, self.modulus, self.center)

    def __pow__(self, n: int) -> "LiftedElement":
        result = central(0, self.modulus, self.center)
        step = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result @ step
        return result

    def conjugate_by(self, g: "LiftedElement") -> "LiftedElement":
        return g @ self @ g.inverse()

    def shift_level(self, k: int) -> "LiftedElement":
        return LiftedElement(self.base, self.anchor + TWO_PI * k, self.modulus, self.center)

    def with_modulus(self, m: int) -> "LiftedElement":
        """Image under the projection to ``G_m`` (only from the universal cover)."""
        if self.modulus not in (0, m):
            raise ModulusMismatch("can only project from the universal cover")
        return LiftedElement(self.base, self.anchor, m, self.center)

    def is_identity(self, tol: float = IDENTITY_TOL) -> bool:
        return self.base.is_close(MoebiusTransformation.identity(), tol) and level(self) == 0

    def level(self):
        return level(self)


def multiply(e1: LiftedElement, e2: LiftedElement) -> LiftedElement:
    return e1 @ e2


def invert(e: LiftedElement) -> LiftedElement:
    return e.inverse()


def power(e: LiftedElement, n: int) -> LiftedElement:
    return e ** n


def shift_level(e: LiftedElement, k: int) -> LiftedElement:
    return e.shift_level(k)


@dataclass(frozen=True)
class CentralElement:
    """``u^k`` where ``u`` is the full turn."""

    exponent: int

    def lifted(self, modulus: int = 0, center: complex = 1j) -> LiftedElement:
        return central(self.exponent, modulus, center)


def central(k: int, modulus: int = 0, center: complex = 1j) -> LiftedElement:
    return LiftedElement(MoebiusTransformation.identity(), TWO_PI * k, modulus, center)


def any_lift(M: MoebiusTransformation, modulus: int = 0, center: complex = 1j) -> LiftedElement:
    return LiftedElement(M, _circle_image(M, 0.0, center), modulus, center)


def _raw_level(e: LiftedElement) -> int:
    """Integer level of ``e`` read as an element of the universal cover."""
    M = e.base
    if M.is_close(MoebiusTransformation.identity(), IDENTITY_TOL):
        return round(e.anchor / TWO_PI)
    cls = classify(M)
    if isinstance(cls, Identity):
        return round(e.anchor / TWO_PI)
    if isinstance(cls, Elliptic):
        return _elliptic_level(e, cls)
    fixed = cls.attracting if cls.kind == "hyperbolic" else cls.fixed
    theta = chart_angle(fixed, e.center)
    ratio = (e(theta) - theta) / TWO_PI
    k = round(ratio)
    if abs(ratio - k) >= RESIDUAL_TOL:
        raise NumericallyAmbiguous(f"fixed point moved by {ratio} turns")
    return k


def _elliptic_level(e: LiftedElement, cls: Elliptic) -> int:
    # move the fixed point to the chart centre: the lift becomes a rigid rotation
    z, z0 = cls.fixed, e.center
    s = z0.imag / z.imag
    T = MoebiusTransformation(s, z0.real - s * z.real, 0, 1)
    rot = e.conjugate_by(any_lift(T, e.modulus, e.center))
    xi = rot.anchor  # shifting by 2 pi m only shifts k by m
    if abs(cls.angle - math.pi) < ORDER2_TOL:
        return round((xi - math.pi) / TWO_PI)
    x = xi / TWO_PI - 0.5
    k = math.ceil(x)
    if abs(x - round(x)) < TIE_TOL:
        raise NumericallyAmbiguous(f"rotation {xi} is within {TIE_TOL} of a level boundary")
    return k


def level(e: LiftedElement) -> int:
    """Level in ``Z`` (universal cover) or residue in ``range(m)`` (``G_m``)."""
    k = _raw_level(e)
    return k % e.modulus if e.modulus else k


def canonical_lift(M: MoebiusTransformation, m: int = 0, center: complex = 1j) -> LiftedElement:
    """The unique lift at level 0."""
    e = any_lift(M, 0, center)
    return e.shift_level(-_raw_level(e)).with_modulus(m) if m else e.shift_level(-_raw_level(e))


def lift_at_level(M: MoebiusTransformation, k: int, m: int = 0, center: complex = 1j) -> LiftedElement:
    return canonical_lift(M, 0, center).shift_level(k).with_modulus(m) if m else (
        canonical_lift(M, 0, center).shift_level(k)
    )


def rechart(e: LiftedElement, center: complex) -> LiftedElement:
    """Express ``e`` in the Cayley chart centred at ``center``.

    The chart change ``h`` is a circle map; the new lift is ``h~ F h~^-1``
    for any lift ``h~``, which does not depend on that choice.
    """
    if center == e.center:
        return e
    K1, K2 = _cayley(e.center), _cayley(center)
    H = K2 @ np.linalg.inv(K1)
    H = H / cmath.sqrt(np.linalg.det(H))
    qh = complex(H[0, 1] / H[0, 0])
    ch = 2 * cmath.phase(H[0, 0])

    def h(t):
        return t + ch + _bend(qh, t)

    Hi = np.linalg.inv(H)
    t = cmath.phase((Hi[0, 0] + Hi[0, 1]) / (Hi[1, 0] + Hi[1, 1]))
    t -= TWO_PI * round(h(t) / TWO_PI)
    return LiftedElement(e.base, h(e(t)), e.modulus, center)
