"""Brute-force ground truth by backward induction.

Everything the closed-form strategies claim is checked against this module.
Statuses exploit one shortcut that is itself forced by the rules: a nonzero
green position always has the move to the all-zero position, which is a loss
for the opponent, so every nonzero green position is a win for the mover.
Grundy values get no such shortcut and enumerate the full dominated box.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections.abc import Iterator, Sequence
from enum import Enum

from .colorings import ColoringScheme
from .engine import (
    DEFAULT_MAX_HEIGHT,
    GreenMove,
    Move,
    NimMove,
    Position,
    as_position,
    iter_green_targets,
    position_to_dict,
)
from .numbers import mex


class GameStatus(Enum):
    P = "P"  # previous player wins: every move loses
    N = "N"  # next player wins: some move reaches a P position


class Oracle:
    """Memoized solver for one scheme; results are cached across calls."""

    def __init__(self, scheme: ColoringScheme, max_height: int = DEFAULT_MAX_HEIGHT) -> None:
        self.scheme = scheme
        self.max_height = max_height
        self._red: dict[int, bool] = {}
        self._status: dict[Position, GameStatus] = {}
        self._grundy: dict[Position, int] = {}

    def _is_red(self, level: int) -> bool:
        cached = self._red.get(level)
        if cached is None:
            cached = self._red[level] = self.scheme.is_red(level)
        return cached

    def _is_green_pos(self, pos: Position) -> bool:
        return all(h == 0 or not self._is_red(h) for h in pos)

    def _quick_status(self, pos: Position) -> GameStatus | None:
        if not any(pos):
            return GameStatus.P
        if self._is_green_pos(pos):
            return GameStatus.N
        return None

    @staticmethod
    def _nim_successors(pos: Position) -> list[Position]:
        seen = set()
        for heap, height in enumerate(pos):
            for to in range(height):
                seen.add(tuple(sorted(pos[:heap] + (to,) + pos[heap + 1 :])))
        return sorted(seen)

    def status(self, heaps: Sequence[int]) -> GameStatus:
        """P/N status of the position (symmetric in the heaps)."""
        root = tuple(sorted(as_position(heaps, self.max_height)))
        memo = self._status
        if root in memo:
            return memo[root]
        # Iterative depth-first evaluation; totals strictly decrease along
        # Nim chains so there are no cycles, but chains can be long.
        stack: list[list] = [[root, None, 0]]
        while stack:
            frame = stack[-1]
            key, succs, idx = frame
            if key in memo:
                stack.pop()
                continue
            if succs is None:
                quick = self._quick_status(key)
                if quick is not None:
                    memo[key] = quick
                    stack.pop()
                    continue
                succs = frame[1] = self._nim_successors(key)
            verdict = None
            while idx < len(succs):
                st = memo.get(succs[idx])
                if st is None:
                    quick = self._quick_status(succs[idx])
                    if quick is not None:
                        memo[succs[idx]] = quick
                        st = quick
                if st is None:
                    break
                if st is GameStatus.P:
                    verdict = GameStatus.N
                    break
                idx += 1
            frame[2] = idx
            if verdict is not None:
                memo[key] = verdict
                stack.pop()
            elif idx >= len(succs):
                memo[key] = GameStatus.P
                stack.pop()
            else:
                stack.append([succs[idx], None, 0])
        return memo[root]

    def winning_moves(self, heaps: Sequence[int]) -> list[Move]:
        """All moves to P positions: Nim moves by (heap, target), green targets lexicographic."""
        pos = as_position(heaps, self.max_height)
        if not any(pos):
            return []
        moves: list[Move] = []
        if self._is_green_pos(pos):
            for target in iter_green_targets(pos):
                if self.status(target) is GameStatus.P:
                    moves.append(GreenMove(target))
        else:
            for heap, height in enumerate(pos):
                for to in range(height):
                    target = pos[:heap] + (to,) + pos[heap + 1 :]
                    if self.status(target) is GameStatus.P:
                        moves.append(NimMove(heap, to))
        return moves

    def _sorted_box(self, key: Position) -> Iterator[Position]:
        """All ascending tuples m with m[i] <= key[i]; key must be ascending."""
        k = len(key)

        def rec(i: int, lo: int, acc: list[int]) -> Iterator[Position]:
            if i == k:
                yield tuple(acc)
                return
            for v in range(lo, key[i] + 1):
                acc.append(v)
                yield from rec(i + 1, v, acc)
                acc.pop()

        yield from rec(0, 0, [])

    def grundy(self, heaps: Sequence[int]) -> int:
        """Nim value: mex over the values of every option."""
        root = tuple(sorted(as_position(heaps, self.max_height)))
        memo = self._grundy
        if root in memo:
            return memo[root]
        # A multiset reaches exactly the multisets dominated by it after
        # sorting both, so the DP can run on sorted tuples in sum order.
        cells = [c for c in self._sorted_box(root) if c not in memo]
        cells.sort(key=lambda c: (sum(c), c))
        for cell in cells:
            if not any(cell):
                memo[cell] = 0
                continue
            if self._is_green_pos(cell):
                options = {memo[q] for q in self._sorted_box(cell) if q != cell}
            else:
                options = set()
                for heap, height in enumerate(cell):
                    for to in range(height):
                        options.add(memo[tuple(sorted(cell[:heap] + (to,) + cell[heap + 1 :]))])
            memo[cell] = mex(options)
        return memo[root]

    def p_positions_upto(self, limit: int, heaps_count: int = 2) -> list[Position]:
        """Every P position in the box [0, limit]^heaps_count, lexicographic.

        Runs a single sweep with one "already saw a P" flag per Nim ray, so
        each cell costs O(heaps_count).
        """
        if limit < 0:
            raise ValueError("limit must be non-negative")
        if heaps_count < 1:
            raise ValueError("need at least one heap")
        as_position((limit,) * heaps_count, self.max_height)
        red = [False] * (limit + 1)
        for level in range(1, limit + 1):
            red[level] = self._is_red(level)
        flags: dict[tuple[int, Position], bool] = {}
        result: list[Position] = []
        for cell in itertools.product(range(limit + 1), repeat=heaps_count):
            if not any(cell):
                is_p = True
            elif all(h == 0 or not red[h] for h in cell):
                is_p = False
            else:
                is_p = not any(
                    flags.get((j, cell[:j] + cell[j + 1 :])) for j in range(heaps_count)
                )
            if is_p:
                result.append(cell)
                for j in range(heaps_count):
                    flags[(j, cell[:j] + cell[j + 1 :])] = True
        return result


_oracles: dict[tuple[str, int], Oracle] = {}


def oracle_for(scheme: ColoringScheme, max_height: int = DEFAULT_MAX_HEIGHT) -> Oracle:
    """Shared per-scheme oracle so memoized work is reused across callers."""
    key = (scheme.key, max_height)
    oracle = _oracles.get(key)
    if oracle is None:
        oracle = _oracles[key] = Oracle(scheme, max_height)
    return oracle


def pairs_to_csv(scheme: ColoringScheme, pairs: Sequence[tuple[int, int]]) -> str:
    """Two-heap P positions as CSV with a scheme_id,a,b header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["scheme_id", "a", "b"])
    scheme_id = scheme.key
    for a, b in pairs:
        writer.writerow([scheme_id, a, b])
    return buf.getvalue()


def positions_to_json(positions: Sequence[Sequence[int]]) -> str:
    """Positions as a JSON array in the wire encoding."""
    return json.dumps([position_to_dict(pos) for pos in positions])
