from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from higher_arf.errors import NotCoprime, NotHyperbolic
from higher_arf.signature import (
    ArfType,
    Signature,
    admissible_types,
    count_arf_functions,
    divisors,
    elliptic_level,
    is_hyperbolic,
    liftability_failure,
    liftable,
    liftable_by_residues,
)


def test_euler_characteristic_is_exact():
    assert Signature(0, (2, 3, 7)).euler_characteristic() == Fraction(-1, 42)
    assert Signature(2).euler_characteristic() == -2
    assert Signature(1, (5,)).euler_characteristic() == Fraction(-4, 5)


@pytest.mark.parametrize("sig,expected", [
    (Signature(0, (2, 3, 7)), True),
    (Signature(0, (2, 3, 6)), False),
    (Signature(0, (2, 3, 5)), False),
    (Signature(1), False),
    (Signature(1, (2,)), True),
    (Signature(2), True),
])
def test_hyperbolicity(sig, expected):
    assert is_hyperbolic(sig) is expected


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(-1)
    with pytest.raises(ValueError):
        Signature(0, (1, 5, 5))


def test_signature_json_roundtrip():
    sig = Signature(2, (5, 5))
    assert Signature.from_json(sig.to_json()) == sig
    t = ArfType(sig, 1)
    assert ArfType.from_json(t.to_json()) == t
    assert str(Signature(2)) == "(2: —)"


def test_elliptic_level_examples():
    assert elliptic_level(5, 2) == 1
    assert elliptic_level(5, 4) == 3
    assert elliptic_level(3, 2) == 1
    assert elliptic_level(7, 1) == 0
    with pytest.raises(NotCoprime):
        elliptic_level(2, 4)


@given(st.integers(2, 40), st.integers(1, 60))
def test_elliptic_level_solves_congruence(p, m):
    if gcd(p, m) != 1:
        with pytest.raises(NotCoprime):
            elliptic_level(p, m)
        return
    n = elliptic_level(p, m)
    assert 0 <= n < m
    assert (p * n + 1) % m == 0


def test_liftability_examples():
    assert liftable(Signature(0, (5, 5, 5)), 2)
    assert liftability_failure(Signature(0, (2, 3, 7)), 2) == "gcd"
    assert liftability_failure(Signature(0, (5, 5, 5)), 3) == "congruence"
    assert liftable(Signature(2), 1)
    with pytest.raises(NotHyperbolic):
        liftable(Signature(0, (2, 3, 5)), 2)


@given(st.integers(0, 3), st.lists(st.integers(2, 9), max_size=4), st.integers(1, 30))
def test_two_liftability_routes_agree(g, orders, m):
    sig = Signature(g, tuple(orders))
    if not is_hyperbolic(sig):
        return
    assert liftable(sig, m) == liftable_by_residues(sig, m)


def test_admissible_types():
    deltas = lambda sig, m: [t.delta for t in admissible_types(sig, m)]
    assert deltas(Signature(0, (5, 5, 5)), 2) == [0]
    assert deltas(Signature(1, (5,)), 4) == [1, 2, 4]
    assert deltas(Signature(1, (5,)), 2) == [1, 2]
    assert deltas(Signature(2), 2) == [0, 1]
    assert deltas(Signature(2, (5, 5)), 3) == [0]
    assert deltas(Signature(0, (2, 3, 7)), 2) == []


def test_counts():
    assert count_arf_functions(Signature(4), 3) == 3 ** 8
    assert count_arf_functions(Signature(0, (2, 3, 7)), 2) == 0
    assert count_arf_functions(Signature(0, (5, 5, 5)), 2) == 1


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_teich_dimension():
    assert Signature(2).teich_dimension() == 6
    assert Signature(1, (5,)).teich_dimension() == 2
    assert Signature(0, (5, 5, 5)).teich_dimension() == 0
