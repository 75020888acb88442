"""Move legality and application."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromatic_nim.colorings import BeattyScheme, EvilScheme, ExplicitScheme, RationalScheme
from chromatic_nim.engine import (
    GreenMove,
    NimMove,
    apply_move,
    as_position,
    is_green_position,
    iter_green_targets,
    legal_moves,
    move_from_dict,
    move_to_dict,
    position_from_dict,
    position_to_dict,
    total_tokens,
)
from chromatic_nim.errors import HeightLimitExceeded, IllegalMove
from chromatic_nim.quadratic import QuadraticIrrational

PHI2_SCHEME = BeattyScheme(QuadraticIrrational(3, 1, 5, 2))


def test_as_position_validation():
    assert as_position([4, 2]) == (4, 2)
    assert as_position((0,)) == (0,)
    with pytest.raises(ValueError):
        as_position([])
    with pytest.raises(ValueError):
        as_position([3, -1])
    with pytest.raises(ValueError):
        as_position([3, True])
    with pytest.raises(ValueError):
        as_position([3, 1.5])
    with pytest.raises(HeightLimitExceeded):
        as_position([10**7], max_height=10**6)


def test_green_position_detection():
    # reds for the golden-square slope start 2, 5, 7
    assert is_green_position(PHI2_SCHEME, (4, 3))
    assert is_green_position(PHI2_SCHEME, (0, 0))
    assert is_green_position(PHI2_SCHEME, (1, 0))
    assert not is_green_position(PHI2_SCHEME, (4, 2))
    assert not is_green_position(PHI2_SCHEME, (5, 5))


def test_green_targets_are_dominated_and_exclude_self():
    targets = list(iter_green_targets((1, 2)))
    assert targets == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]


def test_legal_move_counts():
    # not green: one nim move per heap per lower height
    assert len(legal_moves(PHI2_SCHEME, (4, 2))) == 6
    # green: every dominated target except staying put
    assert len(legal_moves(PHI2_SCHEME, (4, 3))) == 5 * 4 - 1
    assert legal_moves(PHI2_SCHEME, (0, 0)) == []


def test_legal_moves_shapes():
    moves = legal_moves(PHI2_SCHEME, (4, 2))
    assert all(isinstance(m, NimMove) for m in moves)
    moves = legal_moves(PHI2_SCHEME, (1, 1))
    assert all(isinstance(m, GreenMove) for m in moves)


def test_apply_nim_move():
    assert apply_move(PHI2_SCHEME, (4, 2), NimMove(0, 1)) == (1, 2)
    assert apply_move(PHI2_SCHEME, (4, 2), NimMove(1, 0)) == (4, 0)


def test_apply_green_move():
    assert apply_move(PHI2_SCHEME, (4, 3), GreenMove((0, 0))) == (0, 0)
    assert apply_move(PHI2_SCHEME, (4, 3), GreenMove((2, 3))) == (2, 3)


def test_apply_move_error_codes():
    cases = [
        ((4, 2), NimMove(5, 0), "bad-heap"),
        ((4, 2), NimMove(0, 4), "not-lower"),
        ((4, 2), NimMove(0, 9), "not-lower"),
        ((4, 3), GreenMove((0,)), "bad-shape"),
        ((4, 3), GreenMove((0, -1)), "bad-shape"),
        ((4, 3), GreenMove((5, 0)), "not-dominated"),
        ((4, 3), GreenMove((4, 3)), "no-removal"),
        ((4, 2), GreenMove((0, 0)), "not-green"),
        ((4, 2), "pass", "bad-move"),
    ]
    for pos, move, code in cases:
        with pytest.raises(IllegalMove) as err:
            apply_move(PHI2_SCHEME, pos, move)
        assert err.value.code == code


def test_move_wire_round_trip():
    for move in (NimMove(0, 1), NimMove(3, 0), GreenMove((0, 0)), GreenMove((2, 1, 0))):
        assert move_from_dict(move_to_dict(move)) == move
    assert move_to_dict(NimMove(0, 1)) == {"nim": {"heap": 0, "to": 1}}
    assert move_to_dict(GreenMove((0, 0))) == {"green": {"to": [0, 0]}}


def test_move_from_dict_rejects_junk():
    for bad in (
        {},
        {"nim": {"heap": 0}},
        {"nim": {"heap": "0", "to": 1}},
        {"green": {"to": 3}},
        {"nim": {"heap": 0, "to": 1}, "green": {"to": [0]}},
        [1, 2],
        "nim",
    ):
        with pytest.raises(ValueError):
            move_from_dict(bad)


def test_position_wire_round_trip():
    assert position_to_dict((4, 2)) == {"heaps": [4, 2]}
    assert position_from_dict({"heaps": [4, 2]}) == (4, 2)
    with pytest.raises(ValueError):
        position_from_dict({"piles": [4, 2]})


@settings(max_examples=120)
@given(
    heaps=st.lists(st.integers(0, 12), min_size=1, max_size=3),
    scheme=st.sampled_from(
        [PHI2_SCHEME, EvilScheme(), RationalScheme(3, 2), ExplicitScheme("RG", "GR")]
    ),
)
def test_every_legal_move_removes_tokens(heaps, scheme):
    pos = as_position(heaps)
    for move in legal_moves(scheme, pos):
        after = apply_move(scheme, pos, move)
        assert total_tokens(after) < total_tokens(pos)
        assert all(t >= 0 for t in after)
        if isinstance(move, NimMove):
            untouched = [h for i, h in enumerate(pos) if i != move.heap]
            assert [h for i, h in enumerate(after) if i != move.heap] == untouched


@given(heaps=st.lists(st.integers(0, 8), min_size=1, max_size=3))
def test_terminal_iff_no_moves(heaps):
    pos = as_position(heaps)
    assert (legal_moves(EvilScheme(), pos) == []) == (total_tokens(pos) == 0)
