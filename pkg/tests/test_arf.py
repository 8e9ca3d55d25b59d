import pytest
from hypothesis import given, strategies as st

from higher_arf.arf import (
    ArfFunction,
    arf_invariant,
    difference,
    enumerate_all,
    forced_gamma,
    from_state,
    new_arf,
    translate,
    type_of,
)
from higher_arf.errors import LengthMismatch, NotLiftable
from higher_arf.signature import Signature, admissible_types

S15 = Signature(1, (5,))
S2 = Signature(2)


def test_gamma_is_forced():
    assert forced_gamma(S15, 4) == (3,)
    assert forced_gamma(Signature(0, (5, 5, 5)), 2) == (1, 1, 1)
    with pytest.raises(NotLiftable):
        forced_gamma(Signature(0, (2, 3, 7)), 2)


def test_new_arf_reduces_and_checks_lengths():
    f = new_arf(S15, 4, [5], [-1])
    assert f.alpha == (1,) and f.beta == (3,) and f.gamma == (3,)
    with pytest.raises(LengthMismatch):
        new_arf(S15, 4, [0, 0], [0])


def test_state_is_interleaved():
    sig = Signature(2, (5, 5))
    f = new_arf(sig, 3, [1, 2], [0, 1])
    assert f.state == (1, 0, 2, 1)
    assert from_state(sig, 3, f.state) == f


def test_json_roundtrip():
    f = new_arf(Signature(2, (5, 5)), 3, [1, 2], [0, 1])
    assert ArfFunction.from_json(f.to_json()) == f


def test_invariant_examples():
    # gcd rule in genus one, parity in higher genus
    assert arf_invariant(new_arf(S15, 4, [0], [0])) == 4
    assert arf_invariant(new_arf(S15, 4, [2], [0])) == 2
    assert arf_invariant(new_arf(S15, 4, [0], [1])) == 1
    assert arf_invariant(new_arf(S2, 2, [0, 0], [0, 0])) == 0
    assert arf_invariant(new_arf(S2, 2, [0, 1], [0, 1])) == 1
    assert arf_invariant(new_arf(Signature(2, (5, 5)), 3, [1, 2], [2, 2])) == 0
    assert arf_invariant(new_arf(Signature(0, (5, 5, 5)), 2, [], [])) == 0


@pytest.mark.parametrize("sig,m", [(S2, 2), (S15, 2), (S15, 4), (Signature(0, (5, 5, 5)), 2)])
def test_every_admissible_type_is_realised(sig, m):
    seen = {type_of(f) for f in enumerate_all(sig, m)}
    assert seen == set(admissible_types(sig, m))


def test_enumeration_is_lexicographic():
    states = [f.state for f in enumerate_all(Signature(2, (5, 5)), 3)]
    assert states == sorted(states)
    assert len(states) == len(set(states)) == 81


@given(st.lists(st.integers(0, 5), min_size=8, max_size=8), st.lists(st.integers(0, 5), min_size=8, max_size=8))
def test_functions_form_an_affine_space(s1, s2):
    S4 = Signature(4)
    f1, f2 = from_state(S4, 6, s1), from_state(S4, 6, s2)
    assert translate(f2, difference(f1, f2)) == f1
