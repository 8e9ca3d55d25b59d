"""Random group elements for property checks and demos."""

from __future__ import annotations

import math
import random

from .moebius import MoebiusTransformation, axes_intersect, hyperbolic_along, rotation_about, translation


def random_point(rng: random.Random) -> complex:
    return complex(rng.uniform(-3, 3), math.exp(rng.uniform(-1.5, 1.5)))


def random_boundary(rng: random.Random) -> float:
    return rng.uniform(-5, 5)


def random_hyperbolic(rng: random.Random) -> MoebiusTransformation:
    p, q = random_boundary(rng), random_boundary(rng)
    while abs(p - q) < 1e-3:
        q = random_boundary(rng)
    return hyperbolic_along(p, q, rng.uniform(0.1, 3.0))


def random_elliptic(rng: random.Random, avoid_half_turn: bool = True) -> MoebiusTransformation:
    phi = rng.uniform(0.05, 2 * math.pi - 0.05)
    if avoid_half_turn and abs(phi - math.pi) < 1e-3:
        phi += 0.01
    return rotation_about(random_point(rng), phi)


def random_parabolic(rng: random.Random) -> MoebiusTransformation:
    shear = translation(rng.choice([-1, 1]) * rng.uniform(0.1, 3.0))
    return shear.conjugate_by(rotation_about(random_point(rng), rng.uniform(0, 2 * math.pi)))


def random_element(rng: random.Random) -> MoebiusTransformation:
    """Hyperbolic, elliptic or parabolic with probabilities 0.4 / 0.4 / 0.2."""
    u = rng.random()
    if u < 0.4:
        return random_hyperbolic(rng)
    if u < 0.8:
        return random_elliptic(rng)
    return random_parabolic(rng)


def random_crossing_pair(rng: random.Random) -> tuple[MoebiusTransformation, MoebiusTransformation]:
    while True:
        a, b = random_hyperbolic(rng), random_hyperbolic(rng)
        if axes_intersect(a, b):
            return a, b
