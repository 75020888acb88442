"""Positions, move descriptors, legality and move application.

A position is a tuple of heap heights. Nim moves (lower one heap) are always
available. When no heap height sits on a red level the position is green and
any componentwise-dominated strictly-smaller target may be reached in one
move, including wiping every heap to zero.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from .colorings import ColoringScheme
from .errors import HeightLimitExceeded, IllegalMove

DEFAULT_MAX_HEIGHT = 10**6

Position = tuple[int, ...]


@dataclass(frozen=True)
class NimMove:
    """Lower heap ``heap`` (0-based) to height ``to``."""

    heap: int
    to: int


@dataclass(frozen=True)
class GreenMove:
    """Jump to the dominated target position ``to``."""

    to: tuple[int, ...]


Move = NimMove | GreenMove


def as_position(heaps: Sequence[int], max_height: int = DEFAULT_MAX_HEIGHT) -> Position:
    """Validate heap heights and return them as a tuple."""
    pos = tuple(heaps)
    if len(pos) < 1:
        raise ValueError("a position needs at least one heap")
    for h in pos:
        if not isinstance(h, int) or isinstance(h, bool) or h < 0:
            raise ValueError("heap heights must be non-negative integers")
        if h > max_height:
            raise HeightLimitExceeded(f"heap height {h} exceeds the bound {max_height}")
    return pos


def total_tokens(pos: Sequence[int]) -> int:
    return sum(pos)


def is_green_position(scheme: ColoringScheme, pos: Sequence[int]) -> bool:
    """True when no heap height is a red level (empty heaps count as green)."""
    return all(h == 0 or not scheme.is_red(h) for h in pos)


def iter_green_targets(pos: Position) -> Iterator[tuple[int, ...]]:
    """All componentwise-dominated targets except the position itself, in lexicographic order."""
    for target in itertools.product(*(range(h + 1) for h in pos)):
        if target != pos:
            yield target


def iter_legal_moves(scheme: ColoringScheme, pos: Position) -> Iterator[Move]:
    if not any(pos):
        return
    if is_green_position(scheme, pos):
        for target in iter_green_targets(pos):
            yield GreenMove(target)
    else:
        for heap, height in enumerate(pos):
            for to in range(height):
                yield NimMove(heap, to)


def legal_moves(scheme: ColoringScheme, pos: Sequence[int]) -> list[Move]:
    """Every legal move, ordered by heap then target (green targets lexicographic)."""
    return list(iter_legal_moves(scheme, as_position(pos)))


def apply_move(scheme: ColoringScheme, pos: Sequence[int], move: Move) -> Position:
    """Apply a move after validating it; raises IllegalMove with a reason code."""
    position = as_position(pos)
    if isinstance(move, NimMove):
        if not 0 <= move.heap < len(position):
            raise IllegalMove("bad-heap", f"no heap {move.heap} in a {len(position)}-heap position")
        if not 0 <= move.to < position[move.heap]:
            raise IllegalMove(
                "not-lower",
                f"heap {move.heap} has height {position[move.heap]}; target must be in 0..{position[move.heap] - 1}",
            )
        return position[: move.heap] + (move.to,) + position[move.heap + 1 :]
    if isinstance(move, GreenMove):
        target = tuple(move.to)
        if len(target) != len(position) or any(
            not isinstance(t, int) or isinstance(t, bool) or t < 0 for t in target
        ):
            raise IllegalMove("bad-shape", "target must list one non-negative height per heap")
        if any(t > h for t, h in zip(target, position)):
            raise IllegalMove("not-dominated", "every target height must be at most the current one")
        if target == position:
            raise IllegalMove("no-removal", "a move must remove at least one token")
        if not is_green_position(scheme, position):
            raise IllegalMove("not-green", "green moves need every heap height on a green level")
        return target
    raise IllegalMove("bad-move", f"unrecognized move {move!r}")


def move_to_dict(move: Move) -> dict[str, Any]:
    if isinstance(move, NimMove):
        return {"nim": {"heap": move.heap, "to": move.to}}
    return {"green": {"to": list(move.to)}}


def move_from_dict(data: Any) -> Move:
    if isinstance(data, dict) and set(data) == {"nim"}:
        body = data["nim"]
        if isinstance(body, dict) and isinstance(body.get("heap"), int) and isinstance(body.get("to"), int):
            return NimMove(body["heap"], body["to"])
    if isinstance(data, dict) and set(data) == {"green"}:
        body = data["green"]
        if isinstance(body, dict) and isinstance(body.get("to"), list):
            return GreenMove(tuple(body["to"]))
    raise ValueError(f"unrecognized move payload: {data!r}")


def position_to_dict(pos: Sequence[int]) -> dict[str, Any]:
    return {"heaps": list(pos)}


def position_from_dict(data: Any) -> Position:
    if not isinstance(data, dict) or not isinstance(data.get("heaps"), list):
        raise ValueError("a position is encoded as {\"heaps\": [...]}")
    return as_position(data["heaps"])
