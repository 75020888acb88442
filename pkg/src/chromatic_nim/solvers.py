"""Backend selection shared by the CLI and the HTTP service.

The closed forms answer instantly at any height, so they are preferred
whenever their preconditions hold; the memoized oracle remains available
both as an explicit override and as the fallback for schemes no closed
form covers.
"""

from __future__ import annotations

from collections.abc import Sequence

from . import strategies
from .colorings import BeattyScheme, ColoringScheme, Dominance, EvilScheme, IntegerScheme, domination
from .engine import DEFAULT_MAX_HEIGHT, Move, NimMove, as_position
from .errors import NotApplicable
from .oracle import GameStatus, oracle_for
from .strategies import PPositionPair


def solve(
    scheme: ColoringScheme,
    heaps: Sequence[int],
    *,
    force_oracle: bool = False,
    max_height: int = DEFAULT_MAX_HEIGHT,
) -> tuple[str, GameStatus, list[Move]]:
    """Status plus winning moves: one prescribed move from a closed form,
    or the full list from the oracle."""
    pos = as_position(heaps, max_height)
    if not force_oracle:
        adv = strategies.advice(scheme, pos)
        if adv is not None:
            name = "green-dominated" if _dominance_of(scheme, pos) is Dominance.GREEN else "red-dominated"
            return name, adv.status, [adv.move] if adv.move is not None else []
    oracle = oracle_for(scheme, max_height)
    moves = oracle.winning_moves(pos)
    return "oracle", GameStatus.N if moves else GameStatus.P, moves


def _dominance_of(scheme: ColoringScheme, pos: Sequence[int]) -> Dominance:
    hint = scheme.dominance_hint()
    if hint is not None:
        return hint
    return domination(scheme, max(max(pos), 1)).kind


def fallback_smallest_removal(pos: Sequence[int]) -> Move | None:
    """One token off the lowest-indexed nonzero heap; None when terminal."""
    for heap, height in enumerate(pos):
        if height > 0:
            return NimMove(heap, height - 1)
    return None


def fallback_tallest_minus_one(pos: Sequence[int]) -> Move | None:
    """One token off the tallest heap (lowest index on ties); None when terminal."""
    tall = max(range(len(pos)), key=lambda i: (pos[i], -i))
    if pos[tall] == 0:
        return None
    return NimMove(tall, pos[tall] - 1)


def engine_reply(
    scheme: ColoringScheme,
    heaps: Sequence[int],
    *,
    force_oracle: bool = False,
    max_height: int = DEFAULT_MAX_HEIGHT,
    fallback=fallback_smallest_removal,
) -> Move:
    """The engine's move: a winning move when one exists, else the fallback."""
    _, status, moves = solve(scheme, heaps, force_oracle=force_oracle, max_height=max_height)
    if status is GameStatus.N and moves:
        return moves[0]
    move = fallback(tuple(heaps))
    if move is None:
        raise ValueError("no move from the empty position")
    return move


STRATEGY_NAMES = (
    "auto",
    "oracle",
    "beatty",
    "integer",
    "green-dominated",
    "red-dominated",
    "evil-mex",
    "evil-closed",
)


def _resolve_auto(scheme: ColoringScheme, horizon: int) -> str:
    if isinstance(scheme, BeattyScheme) and scheme.beta.compare(2) > 0:
        return "beatty"
    if isinstance(scheme, IntegerScheme):
        return "integer"
    if isinstance(scheme, EvilScheme):
        return "evil-closed"
    kind = scheme.dominance_hint() or domination(scheme, max(horizon, 1)).kind
    if kind is Dominance.GREEN:
        return "green-dominated"
    if kind is Dominance.RED:
        return "red-dominated"
    return "oracle"


def p_pairs(
    scheme: ColoringScheme,
    *,
    count: int | None = None,
    limit: int | None = None,
    strategy: str = "auto",
    max_height: int = DEFAULT_MAX_HEIGHT,
) -> tuple[str, list[PPositionPair]]:
    """P-position pairs by count or by height limit, with backend dispatch.

    Exactly one of count/limit must be given. Returns the resolved backend
    name along with the pairs, ordered by their lower coordinate.
    """
    if (count is None) == (limit is None):
        raise ValueError("give exactly one of count or limit")
    if count is not None and count < 0:
        raise ValueError("count must be non-negative")
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    if strategy not in STRATEGY_NAMES:
        raise ValueError(f"unknown strategy {strategy!r}")
    horizon = limit if limit is not None else 4 * (count or 1) + 8
    name = _resolve_auto(scheme, horizon) if strategy == "auto" else strategy

    if name == "beatty":
        if not isinstance(scheme, BeattyScheme):
            raise NotApplicable("beatty pairs need a beatty scheme")
        beta = scheme.beta
        if count is not None:
            return name, [strategies.beatty_nth(beta, n) for n in range(count)]
        return name, strategies.beatty_pairs_upto(beta, limit)
    if name == "integer":
        if not isinstance(scheme, IntegerScheme):
            raise NotApplicable("integer pairs need an integer scheme")
        if count is not None:
            return name, [strategies.integer_pair(scheme.beta, m) for m in range(count)]
        return name, strategies.integer_pairs_upto(scheme.beta, limit)
    if name in ("evil-mex", "evil-closed"):
        if not isinstance(scheme, EvilScheme):
            raise NotApplicable("evil pairs need the evil scheme")
        use_mex = name == "evil-mex"
        make = strategies.evil_nth_mex if use_mex else strategies.evil_nth_closed
        if count is not None:
            return name, [make(n) for n in range(count)]
        return name, strategies.evil_pairs_upto(limit, use_mex=use_mex)
    if name == "green-dominated":
        if count is not None:
            return name, [strategies.green_dominated_nth(scheme, i) for i in range(count)]
        return name, strategies.green_dominated_pairs_upto(scheme, limit)
    if name == "red-dominated":
        if count is not None:
            pairs = _grow_until(lambda h: strategies.red_dominated_p_positions(scheme, h), count)
            return name, pairs[:count]
        return name, strategies.red_dominated_p_positions(scheme, limit)
    # oracle
    if count is not None:
        pairs = _grow_until(lambda h: _oracle_pairs(scheme, h, max_height), count)
        return name, pairs[:count]
    return name, _oracle_pairs(scheme, limit, max_height)


def _oracle_pairs(scheme: ColoringScheme, limit: int, max_height: int) -> list[PPositionPair]:
    cells = oracle_for(scheme, max_height).p_positions_upto(limit)
    seen: list[tuple[int, int]] = []
    for a, b in cells:
        if a <= b:
            seen.append((a, b))
    seen.sort()
    return [PPositionPair(i, a, b) for i, (a, b) in enumerate(seen)]


def _grow_until(pairs_upto, count: int) -> list[PPositionPair]:
    horizon = max(4 * count, 8)
    while True:
        pairs = pairs_upto(horizon)
        if len(pairs) >= count:
            return pairs
        horizon *= 2
