"""Twist moves and orbit enumeration.

Orbit sizes are cross-checked against a union-find over all states, which
shares no code with the breadth-first search in the library.
"""

import itertools

import pytest

from higher_arf.arf import arf_invariant, enumerate_all, from_state, new_arf
from higher_arf.errors import BudgetExceeded, NotApplicable
from higher_arf.mcg import (
    TwistMove,
    applicable_moves,
    apply_twist,
    apply_word,
    classify_orbits,
    normal_form,
    normal_form_of_state,
    orbit,
)
from higher_arf.signature import Signature


def union_find_orbits(sig, m):
    funcs = list(enumerate_all(sig, m))
    index = {f.state: i for i, f in enumerate(funcs)}
    parent = list(range(len(funcs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for f in funcs:
        for t in applicable_moves(sig):
            a, b = find(index[f.state]), find(index[apply_twist(f, t).state])
            parent[a] = b
    groups = {}
    for f in funcs:
        groups.setdefault(find(index[f.state]), []).append(f)
    return sorted((arf_invariant(g[0]), len(g)) for g in groups.values())


def test_move_formulas_genus_two():
    sig = Signature(2, (5, 5))
    f = new_arf(sig, 3, [1, 2], [2, 1])
    assert apply_twist(f, TwistMove("T1")).state == (0, 2, 2, 1)
    # beta_1 and beta_2 both drop by alpha_1 + alpha_2 + 1 = 4
    assert apply_twist(f, TwistMove("T2")).state == (1, 1, 2, 0)
    assert apply_twist(f, TwistMove("T4", 1)).state == (2, 1, 1, 2)
    assert apply_twist(f, TwistMove("T5", 3)).state == f.state


def test_t3_uses_first_cone_value():
    f = new_arf(Signature(1, (5,)), 4, [0], [2])
    # gamma = 3: (a, b) -> (-b, a - gamma - 1)
    assert apply_twist(f, TwistMove("T3")).state == (2, 0)


def test_move_parsing_roundtrip():
    for text in ["T1", "T2^-1", "T4(2)", "T5(3)", "T3^-1"]:
        assert str(TwistMove.parse(text)) == text


def test_inapplicable_moves_raise():
    f = new_arf(Signature(1, (5,)), 2, [0], [0])
    with pytest.raises(NotApplicable):
        apply_twist(f, TwistMove("T2"))
    with pytest.raises(NotApplicable):
        apply_twist(f, TwistMove("T4", 1))
    g = new_arf(Signature(1, (3, 5)), 2, [0], [0])
    with pytest.raises(NotApplicable):
        apply_twist(g, TwistMove("T5", 2))


BATTERY = [
    (Signature(2), 2),
    (Signature(1, (5,)), 2),
    (Signature(1, (5,)), 4),
    (Signature(2, (5, 5)), 3),
    (Signature(1, (5, 5)), 4),
    (Signature(3), 2),
    (Signature(4), 3),
]


@pytest.mark.parametrize("sig,m", BATTERY)
def test_orbits_match_union_find(sig, m):
    bfs = sorted((o.delta, o.size) for o in classify_orbits(sig, m))
    assert bfs == union_find_orbits(sig, m)


def test_expected_orbit_sizes():
    sizes = lambda sig, m: sorted((o.delta, o.size) for o in classify_orbits(sig, m))
    assert sizes(Signature(2), 2) == [(0, 10), (1, 6)]
    assert sizes(Signature(1, (5,)), 4) == [(1, 12), (2, 3), (4, 1)]
    assert sizes(Signature(3), 2) == [(0, 36), (1, 28)]


def test_closed_surface_needs_the_handle_rotation():
    # without T3 the remaining moves split the even class of (2: -) at m = 2
    sig, m = Signature(2), 2
    moves = [t for t in applicable_moves(sig) if t.kind != "T3"]
    f = new_arf(sig, m, [0, 0], [0, 0])
    seen, todo = {f.state}, [f]
    while todo:
        g = todo.pop()
        for t in moves:
            h = apply_twist(g, t)
            if h.state not in seen:
                seen.add(h.state)
                todo.append(h)
    assert len(seen) < 10 == len(orbit(f))


def test_normal_form_examples():
    sig = Signature(1, (5,))
    g, word = normal_form(new_arf(sig, 4, [0], [2]))
    assert g.state == (2, 0) and [str(t) for t in word] == ["T3"]
    g, word = normal_form(new_arf(sig, 4, [2], [0]))
    assert word == []
    g, word = normal_form_of_state(Signature(2), 2, (1, 1, 1, 1))
    assert g.state == (0, 1, 1, 1)


@pytest.mark.parametrize("sig,m", [(Signature(2), 2), (Signature(1, (5,)), 4), (Signature(2, (5, 5)), 3)])
def test_normal_form_word_replays(sig, m):
    for state in itertools.islice(itertools.product(range(m), repeat=2 * sig.genus), 0, None, 3):
        f = from_state(sig, m, state)
        g, word = normal_form(f)
        assert apply_word(f, word) == g
        assert arf_invariant(g) == arf_invariant(f)


def test_budget():
    f = new_arf(Signature(4), 3, [1, 1, 1, 1], [0, 0, 0, 0])
    with pytest.raises(BudgetExceeded):
        normal_form(f, budget=100)
    with pytest.raises(BudgetExceeded):
        classify_orbits(Signature(4), 3, budget=6560)
