import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from higher_arf.errors import Degenerate, Infinite, NotHyperbolic, SharedAxis
from higher_arf.moebius import (
    Elliptic,
    Hyperbolic,
    Identity,
    MoebiusTransformation as M,
    Parabolic,
    axes_intersect,
    axis_midpoint,
    boundary_fixed_points,
    classify,
    dilation,
    hyperbolic_along,
    hyperbolic_distance,
    is_positive,
    kind,
    normalizer_sending_to_infinity,
    rotation_about,
    sl2_rotation,
    to_zero_infinity,
    translation,
)
from higher_arf.sampling import random_element

I = M.identity()


def test_normalisation_and_sign():
    X = M(2, 0, 0, 2)
    assert X == I
    assert M(-1, -2, 0, -1) == M(1, 2, 0, 1)
    assert abs(M(3, 1, 2, 1).trace) == pytest.approx(4)
    with pytest.raises(Degenerate):
        M(1, 1, 1, 1)
    with pytest.raises(Degenerate):
        M(0, 1, 1, 0)  # det < 0 is orientation reversing


def test_group_operations():
    a, b = M(2, 1, 1, 1), M(1, 3, 0, 1)
    assert (a @ a.inverse()) == I
    assert a ** 3 == a @ a @ a
    assert a ** -2 == (a.inverse() @ a.inverse())
    assert b.conjugate_by(a) == a @ b @ a.inverse()
    z = 0.3 + 0.7j
    assert (a @ b)(z) == pytest.approx(a(b(z)))
    assert a(math.inf) == pytest.approx(2.0)
    with pytest.raises(TypeError):
        hash(a)


def test_classification_examples():
    assert isinstance(classify(I), Identity)
    h = classify(M(2, 0, 0, 0.5))
    assert isinstance(h, Hyperbolic)
    assert h.shift == pytest.approx(math.log(4))
    assert h.attracting == math.inf and h.repelling == pytest.approx(0)
    assert classify(translation(1)) == Parabolic(math.inf, True)
    assert classify(translation(-1)) == Parabolic(math.inf, False)
    e = classify(rotation_about(1j, math.pi / 2))
    assert isinstance(e, Elliptic)
    assert e.fixed == pytest.approx(1j) and e.angle == pytest.approx(math.pi / 2)
    assert kind(M(0, -1, 1, 0)) == "elliptic"


def test_rotation_sign_and_direction():
    a, b, c, d = sl2_rotation(0.5 + 2j, 2 * math.pi / 3)
    assert a + d == pytest.approx(2 * math.cos(math.pi / 3))
    R = rotation_about(1j, 0.4)
    # counter-clockwise: the derivative at the fixed point is exp(i phi)
    eps = 1e-7
    w = (R(1j + eps) - 1j) / eps
    assert math.atan2(w.imag, w.real) == pytest.approx(0.4, abs=1e-5)


@settings(max_examples=60)
@given(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.05, 4))
def test_hyperbolic_along(p, q, shift):
    if abs(p - q) < 1e-2:
        return
    h = classify(hyperbolic_along(p, q, shift))
    assert h.repelling == pytest.approx(p, abs=1e-7)
    assert h.attracting == pytest.approx(q, abs=1e-7)
    assert h.shift == pytest.approx(shift, rel=1e-7)


def test_to_zero_infinity():
    for p, q in [(1.0, 3.0), (3.0, -1.0), (math.inf, 2.0), (2.0, math.inf)]:
        T = to_zero_infinity(p, q)
        assert abs(T(p)) < 1e-12 if not math.isinf(p) else abs(T(p)) < 1e-12
        assert math.isinf(T(q)) or abs(T(q)) > 1e12


def test_axes_and_positivity():
    a = hyperbolic_along(-1, 1, 1.0)
    b = hyperbolic_along(0, 5, 1.0)
    c = hyperbolic_along(2, 3, 1.0)
    assert axes_intersect(a, b) and axes_intersect(b, a)
    assert not axes_intersect(a, c)
    with pytest.raises(SharedAxis):
        axes_intersect(a, hyperbolic_along(1, -1, 0.5))
    with pytest.raises(NotHyperbolic):
        boundary_fixed_points(translation(1))
    assert not is_positive(a)
    assert is_positive(a.inverse())
    assert is_positive(translation(1))
    with pytest.raises(Infinite):
        is_positive(dilation(2))
    with pytest.raises(ValueError):
        is_positive(rotation_about(1j, 1))


def test_geometry_helpers():
    assert hyperbolic_distance(1j, 2j) == pytest.approx(math.log(2))
    assert axis_midpoint(hyperbolic_along(-1, 3, 1)) == pytest.approx(1 + 2j)
    N = normalizer_sending_to_infinity(0.7)
    assert abs(N(0.7 + 1e-12j)) > 1e9


def test_random_elements_have_consistent_classes():
    rng = random.Random(1)
    for _ in range(200):
        X = random_element(rng)
        cls = classify(X)
        t = abs(X.trace)
        if isinstance(cls, Hyperbolic):
            assert t > 2
            assert X(cls.attracting) == pytest.approx(cls.attracting, abs=1e-6)
        elif isinstance(cls, Elliptic):
            assert t < 2
            assert X(cls.fixed) == pytest.approx(cls.fixed, abs=1e-9)
            assert 2 * math.cos(cls.angle / 2) == pytest.approx(t if cls.angle < math.pi else -t, abs=1e-9)
