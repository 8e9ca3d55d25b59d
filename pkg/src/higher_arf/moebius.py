"""Arithmetic and classification in G = PSL(2,R) acting on the upper half-plane.

Boundary points are floats, with ``math.inf`` for the point at infinity.
Interior points are complex numbers with positive imaginary part.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import Degenerate, Infinite, NotHyperbolic, SharedAxis

EPS = 1e-9  # parabolic band on |trace| around 2
EQ_TOL = 1e-7
INF = math.inf


class MoebiusTransformation:
    """Real unimodular matrix ``[[a, b], [c, d]]`` up to sign.

    The sign is fixed so the first entry of ``(a, b, c)`` that is not
    negligible is positive. Composition is ``M1 @ M2`` (apply ``M2`` first).
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = float(a), float(b), float(c), float(d)
        det = a * d - b * c
        if not det > 0 or not math.isfinite(det):
            raise Degenerate(f"matrix has determinant {det}")
        s = math.sqrt(det)
        a, b, c, d = a / s, b / s, c / s, d / s
        scale = max(abs(a), abs(b), abs(c), abs(d))
        for x in (a, b, c):
            if abs(x) > 1e-12 * scale:
                if x < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> "MoebiusTransformation":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "MoebiusTransformation") -> "MoebiusTransformation":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MoebiusTransformation(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "MoebiusTransformation":
        return MoebiusTransformation(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "MoebiusTransformation":
        result = MoebiusTransformation.identity()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result @ base
        return result

    def conjugate_by(self, g: "MoebiusTransformation") -> "MoebiusTransformation":
        """``g M g^-1``."""
        return g @ self @ g.inverse()

    def __call__(self, z):
        a, b, c, d = self.entries
        if isinstance(z, float) and math.isinf(z):
            return INF if c == 0 else a / c
        den = c * z + d
        if den == 0:
            return INF
        return (a * z + b) / den

    @property
    def trace(self) -> float:
        return self.a + self.d

    def distance(self, other: "MoebiusTransformation") -> float:
        """Entrywise max-distance between the two matrices, minimised over sign."""
        p = max(abs(x - y) for x, y in zip(self.entries, other.entries))
        q = max(abs(x + y) for x, y in zip(self.entries, other.entries))
        return min(p, q)

    def is_close(self, other: "MoebiusTransformation", tol: float = EQ_TOL) -> bool:
        return self.distance(other) < tol

    def __eq__(self, other):
        if not isinstance(other, MoebiusTransformation):
            return NotImplemented
        return self.is_close(other)

    __hash__ = None

    def __repr__(self):
        return "MoebiusTransformation(%.12g, %.12g, %.12g, %.12g)" % self.entries


# element classes ---------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    kind = "identity"


@dataclass(frozen=True)
class Hyperbolic:
    attracting: float
    repelling: float
    shift: float
    kind = "hyperbolic"


@dataclass(frozen=True)
class Parabolic:
    fixed: float
    positive: bool
    kind = "parabolic"


@dataclass(frozen=True)
class Elliptic:
    fixed: complex
    angle: float
    kind = "elliptic"


ElementClass = Identity | Hyperbolic | Parabolic | Elliptic


def _fixed_points(M: MoebiusTransformation) -> tuple[float, float]:
    """Real roots of ``c x^2 + (d - a) x - b = 0``; infinity when ``c = 0``."""
    a, b, c, d = M.entries
    disc = max((a + d) ** 2 - 4.0, 0.0)
    sq = math.sqrt(disc)
    if c == 0.0:
        return INF, (b / (d - a) if d != a else INF)
    # numerically stable quadratic roots
    u = a - d
    q = u + math.copysign(sq, u) if u != 0 else sq
    x1 = q / (2 * c)
    x2 = -2 * b / q if q != 0 else x1
    return x1, x2


def _multiplier(M: MoebiusTransformation, x: float) -> float:
    a, b, c, d = M.entries
    if math.isinf(x):
        return (d / a) ** 2 if a != 0 else INF
    return 1.0 / (c * x + d) ** 2


def classify(M: MoebiusTransformation) -> ElementClass:
    a, b, c, d = M.entries
    t = abs(a + d)
    if t > 2 + EPS:
        x1, x2 = _fixed_points(M)
        if _multiplier(M, x1) < 1:
            att, rep = x1, x2
        else:
            att, rep = x2, x1
        return Hyperbolic(att, rep, 2 * math.acosh(t / 2))
    if t >= 2 - EPS:
        if max(abs(a - d), abs(b), abs(c)) < EPS and abs(abs(a) - 1) < EPS:
            return Identity()
        s = 1.0 if a + d > 0 else -1.0
        a, b, c, d = s * a, s * b, s * c, s * d
        if abs(c) <= EPS * max(1.0, abs(b)):
            return Parabolic(INF, b > 0)
        return Parabolic((a - d) / (2 * c), c < 0)
    root = math.sqrt(4 - t * t)
    z = complex(a - d, math.copysign(root, c)) / (2 * c)
    angle = (-2 * cmath.phase(c * z + d)) % (2 * math.pi)
    return Elliptic(z, angle)


def kind(M: MoebiusTransformation) -> str:
    return classify(M).kind


def translation(x: float) -> MoebiusTransformation:
    return MoebiusTransformation(1, x, 0, 1)


def dilation(lam: float) -> MoebiusTransformation:
    """``z -> lam * z``."""
    s = math.sqrt(lam)
    return MoebiusTransformation(s, 0, 0, 1 / s)


def sl2_rotation(x: complex, phi: float) -> tuple[float, float, float, float]:
    """SL(2,R) matrix of the counter-clockwise rotation by ``phi`` about ``x``.

    Unlike :class:`MoebiusTransformation` this keeps the SL(2) sign, whose
    trace is ``2 cos(phi / 2)``.
    """
    if not x.imag > 0:
        raise ValueError(f"{x} is not in the upper half-plane")
    co, si = math.cos(phi / 2), math.sin(phi / 2)
    u, v = x.real, x.imag
    # S = [[sqrt v, u / sqrt v], [0, 1 / sqrt v]] maps i to x
    # S R S^-1 with R = [[co, si], [-si, co]]
    return (
        co - si * u / v,
        si * (v + u * u / v),
        -si / v,
        co + si * u / v,
    )


def rotation_about(x: complex, phi: float) -> MoebiusTransformation:
    return MoebiusTransformation(*sl2_rotation(x, phi))


def hyperbolic_along(p: float, q: float, shift: float) -> MoebiusTransformation:
    """Hyperbolic element with repelling point ``p``, attracting ``q``, given shift."""
    lam = math.exp(shift)
    return dilation(lam).conjugate_by(to_zero_infinity(p, q).inverse())


def to_zero_infinity(p: float, q: float) -> MoebiusTransformation:
    """Orientation-preserving map sending ``p`` to 0 and ``q`` to infinity."""
    if math.isinf(q):
        return translation(-p)
    if math.isinf(p):
        return MoebiusTransformation(0, -1, 1, -q)
    if q > p:
        return MoebiusTransformation(1, -p, -1, q)
    return MoebiusTransformation(1, -p, 1, -q)


def boundary_fixed_points(M: MoebiusTransformation) -> tuple[float, float]:
    cls = classify(M)
    if not isinstance(cls, Hyperbolic):
        raise NotHyperbolic(f"{M} is {cls.kind}")
    return cls.attracting, cls.repelling


def _circle_angle(x: float) -> float:
    """Angle of a boundary point under the Cayley map ``z -> (z-i)/(z+i)``."""
    if math.isinf(x):
        return 0.0
    return (2 * math.atan2(-1.0, x)) % (2 * math.pi)


def axes_intersect(M1: MoebiusTransformation, M2: MoebiusTransformation) -> bool:
    """True iff the two axes cross in the open half-plane."""
    p = [_circle_angle(x) for x in boundary_fixed_points(M1)]
    q = [_circle_angle(x) for x in boundary_fixed_points(M2)]
    if _same_pair(p, q):
        raise SharedAxis("the two elements have the same axis")
    lo, hi = sorted(p)
    inside = [lo < y < hi for y in q]
    return inside[0] != inside[1]


def _same_pair(p, q, tol=1e-10):
    def close(x, y):
        d = abs(x - y) % (2 * math.pi)
        return min(d, 2 * math.pi - d) < tol
    return (close(p[0], q[0]) and close(p[1], q[1])) or (close(p[0], q[1]) and close(p[1], q[0]))


def is_positive(M: MoebiusTransformation) -> bool:
    cls = classify(M)
    if isinstance(cls, Hyperbolic):
        if math.isinf(cls.attracting) or math.isinf(cls.repelling):
            raise Infinite("hyperbolic element has a fixed point at infinity")
        return cls.attracting < cls.repelling
    if isinstance(cls, Parabolic):
        return cls.positive
    raise ValueError(f"positivity is defined for hyperbolic and parabolic elements, got {cls.kind}")


def normalizer_sending_to_infinity(xi: float) -> MoebiusTransformation:
    """Orientation-preserving ``A`` with ``A(xi) = infinity``."""
    if math.isinf(xi):
        return MoebiusTransformation.identity()
    return MoebiusTransformation(0, -1, 1, -xi)


def hyperbolic_distance(z: complex, w: complex) -> float:
    return math.acosh(1 + abs(z - w) ** 2 / (2 * z.imag * w.imag))


def axis_midpoint(M: MoebiusTransformation) -> complex:
    """Top point of the axis (the point closest to infinity along it)."""
    att, rep = boundary_fixed_points(M)
    if math.isinf(att) or math.isinf(rep):
        raise Infinite("axis is a vertical line")
    return complex((att + rep) / 2, abs(att - rep) / 2)
