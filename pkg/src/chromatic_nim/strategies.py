"""Closed-form P positions and winning-move advice for two-heap games.

Each function implements a proven characterization for one family of
schemes and refuses (NotApplicable) outside its preconditions. All of them
work on arbitrarily large integers; none falls back to brute force.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .colorings import ColoringScheme, Dominance, domination
from .engine import GreenMove, Move, NimMove, as_position
from .errors import NotApplicable
from .numbers import is_dopey, is_evil
from .oracle import GameStatus
from .quadratic import QuadraticIrrational, complement_slope


@dataclass(frozen=True)
class PPositionPair:
    """The n-th two-heap P position, stored with a <= b."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError("pairs are stored low-high")

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class StrategyAdvice:
    """Status claim plus, for N positions, one prescribed winning move."""

    status: GameStatus
    move: Move | None = None


def _require_two_heaps(pos: Sequence[int]) -> tuple[int, int]:
    if len(pos) != 2:
        raise NotApplicable("closed forms cover two-heap positions only")
    return pos[0], pos[1]


def _require_beatty_slope(beta: QuadraticIrrational) -> None:
    if beta.is_rational:
        raise NotApplicable("the two-sequence form needs an irrational slope")
    if beta.compare(2) <= 0:
        raise NotApplicable("the two-sequence form needs a slope above 2")


def beatty_nth(beta: QuadraticIrrational, n: int) -> PPositionPair:
    """(floor(alpha*n), floor(beta*n)) for irrational beta > 2."""
    _require_beatty_slope(beta)
    if n < 0:
        raise ValueError("index must be non-negative")
    return PPositionPair(n, complement_slope(beta).floor_mul(n), beta.floor_mul(n))


def beatty_is_p(beta: QuadraticIrrational, x: int, y: int) -> bool:
    """Whether {x, y} is one of the Beatty pairs, including (0, 0)."""
    _require_beatty_slope(beta)
    if x < 0 or y < 0:
        raise ValueError("heights must be non-negative")
    if x == y:
        return x == 0
    lo, hi = sorted((x, y))
    if lo == 0:
        return False
    n = beta.inverse().floor_mul(hi + 1)
    if n < 1 or beta.floor_mul(n) != hi:
        return False
    return complement_slope(beta).floor_mul(n) == lo


def beatty_pairs_upto(beta: QuadraticIrrational, limit: int) -> list[PPositionPair]:
    """All Beatty pairs with both coordinates at most limit."""
    _require_beatty_slope(beta)
    if limit < 0:
        raise ValueError("limit must be non-negative")
    alpha = complement_slope(beta)
    pairs = [PPositionPair(0, 0, 0)]
    n = 1
    while True:
        b = beta.floor_mul(n)
        if b > limit:
            return pairs
        pairs.append(PPositionPair(n, alpha.floor_mul(n), b))
        n += 1


def _check_integer_slope(beta: int) -> None:
    if not isinstance(beta, int) or isinstance(beta, bool) or beta < 2:
        raise ValueError("integer slope must be an integer >= 2")


def integer_nth(beta: int, n: int, t: int) -> PPositionPair:
    """The pair (beta*n + t, beta*((beta-1)*n + t)) for n >= 0, 1 <= t < beta.

    (n, t) -> (beta-1)*n + t enumerates the positive integers, so the pair
    index below is that value and the b coordinates sweep the multiples of
    beta exactly once while the a coordinates sweep the non-multiples.
    """
    _check_integer_slope(beta)
    if n < 0:
        raise ValueError("index must be non-negative")
    if not 1 <= t <= beta - 1:
        raise ValueError("offset must satisfy 1 <= t <= beta - 1")
    m = (beta - 1) * n + t
    return PPositionPair(m, beta * n + t, beta * m)


def integer_pair(beta: int, m: int) -> PPositionPair:
    """The m-th integer-slope pair; m == 0 gives (0, 0)."""
    _check_integer_slope(beta)
    if m < 0:
        raise ValueError("index must be non-negative")
    if m == 0:
        return PPositionPair(0, 0, 0)
    n, t = divmod(m - 1, beta - 1)
    return integer_nth(beta, n, t + 1)


def integer_is_p(beta: int, x: int, y: int) -> bool:
    _check_integer_slope(beta)
    if x < 0 or y < 0:
        raise ValueError("heights must be non-negative")
    if x == y:
        return x == 0
    lo, hi = sorted((x, y))
    if hi % beta:
        return False
    return integer_pair(beta, hi // beta).a == lo


def integer_pairs_upto(beta: int, limit: int) -> list[PPositionPair]:
    _check_integer_slope(beta)
    if limit < 0:
        raise ValueError("limit must be non-negative")
    pairs = [PPositionPair(0, 0, 0)]
    m = 1
    while beta * m <= limit:
        pairs.append(integer_pair(beta, m))
        m += 1
    return pairs


def _dominance(scheme: ColoringScheme, horizon: int) -> Dominance:
    hint = scheme.dominance_hint()
    if hint is not None:
        return hint
    return domination(scheme, max(horizon, 1)).kind


def _require_green_dominated(scheme: ColoringScheme, horizon: int) -> None:
    if _dominance(scheme, horizon) is not Dominance.GREEN:
        raise NotApplicable("scheme is not green-dominated on the needed horizon")


def green_dominated_nth(scheme: ColoringScheme, index: int) -> PPositionPair:
    """Pair the index-th green level with the index-th red level."""
    if index < 0:
        raise ValueError("index must be non-negative")
    if index == 0:
        return PPositionPair(0, 0, 0)
    b = scheme.nth_red(index)
    _require_green_dominated(scheme, b)
    return PPositionPair(index, scheme.nth_green(index), b)


def green_dominated_pairs_upto(scheme: ColoringScheme, limit: int) -> list[PPositionPair]:
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit >= 1:
        _require_green_dominated(scheme, limit)
    pairs = [PPositionPair(0, 0, 0)]
    for index in range(1, scheme.red_count_upto(limit) + 1):
        pairs.append(PPositionPair(index, scheme.nth_green(index), scheme.nth_red(index)))
    return pairs


def green_dominated_advice(scheme: ColoringScheme, heaps: Sequence[int]) -> StrategyAdvice:
    """Status and prescribed move on a green-dominated scheme.

    An empty heap counts as green-topped with zero green tokens. A heap of
    positive height h topped by color c holds exactly count_c(h) tokens of
    that color, and h is the count_c(h)-th level of color c.
    """
    x, y = _require_two_heaps(as_position(heaps))
    _require_green_dominated(scheme, max(x, y, 1))

    def red_topped(h: int) -> bool:
        return h > 0 and scheme.is_red(h)

    if red_topped(x) and red_topped(y):
        # Both heights are red levels; match the taller heap's reds to the
        # shorter heap's count by turning the taller heap green.
        tall = 0 if x >= y else 1
        short = 1 - tall
        r = scheme.red_count_upto((x, y)[short])
        return StrategyAdvice(GameStatus.N, NimMove(tall, scheme.nth_green(r)))
    if not red_topped(x) and not red_topped(y):
        if x == 0 and y == 0:
            return StrategyAdvice(GameStatus.P)
        return StrategyAdvice(GameStatus.N, GreenMove((0, 0)))
    red_heap = 0 if red_topped(x) else 1
    green_heap = 1 - red_heap
    r = scheme.red_count_upto((x, y)[red_heap])
    g = scheme.green_count_upto((x, y)[green_heap])
    if r == g:
        return StrategyAdvice(GameStatus.P)
    if r > g:
        to = scheme.nth_red(g) if g >= 1 else 0
        return StrategyAdvice(GameStatus.N, NimMove(red_heap, to))
    to = scheme.nth_green(r) if r >= 1 else 0
    return StrategyAdvice(GameStatus.N, NimMove(green_heap, to))


def lgd_probe(scheme: ColoringScheme, level: int) -> int | None:
    """Smallest green level k from which [k, level] re-indexes green-dominated.

    Within the window every prefix ending at a red level must hold at least
    as many greens as reds. Returns None when no green origin works, which
    makes (level, level) a P position of a red-dominated game.
    """
    if not scheme.is_red(level):
        raise ValueError("probe a red level")
    for k in range(1, level):
        if scheme.is_red(k):
            continue
        greens = reds = 0
        ok = True
        for cursor in range(k, level + 1):
            if scheme.is_red(cursor):
                reds += 1
                if greens < reds:
                    ok = False
                    break
            else:
                greens += 1
        if ok:
            return k
    return None


def red_dominated_p_positions(scheme: ColoringScheme, limit: int) -> list[PPositionPair]:
    """One bottom-up scan pairing each level on a red-dominated scheme.

    Red levels met outside a window pair with themselves. The first green
    level opens a window that pairs its i-th green with its i-th red; when a
    red arrives with no green left to match, that red pairs with itself and
    the scan restarts there, as if the level were the bottom of a new game.
    """
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit >= 1 and _dominance(scheme, limit) is not Dominance.RED:
        raise NotApplicable("scheme is not red-dominated on the needed horizon")
    raw: list[tuple[int, int]] = [(0, 0)]
    in_window = False
    greens: list[int] = []
    matched = 0
    for level in range(1, limit + 1):
        red = scheme.is_red(level)
        if not in_window:
            if red:
                raw.append((level, level))
            else:
                in_window = True
                greens = [level]
                matched = 0
        elif not red:
            greens.append(level)
        elif len(greens) > matched:
            raw.append((greens[matched], level))
            matched += 1
        else:
            raw.append((level, level))
            in_window = False
    return [PPositionPair(i, a, b) for i, (a, b) in enumerate(raw)]


def red_dominated_advice(scheme: ColoringScheme, heaps: Sequence[int]) -> StrategyAdvice:
    """Status and one winning move from the scan pairs on a red-dominated scheme."""
    x, y = _require_two_heaps(as_position(heaps))
    if x == 0 and y == 0:
        return StrategyAdvice(GameStatus.P)
    pairs = red_dominated_p_positions(scheme, max(x, y))
    pset = {p.as_tuple() for p in pairs}
    if (min(x, y), max(x, y)) in pset:
        return StrategyAdvice(GameStatus.P)
    if all(h == 0 or not scheme.is_red(h) for h in (x, y)):
        return StrategyAdvice(GameStatus.N, GreenMove((0, 0)))
    for heap, height in enumerate((x, y)):
        other = (x, y)[1 - heap]
        for to in range(height):
            lo, hi = (to, other) if to <= other else (other, to)
            if (lo, hi) in pset:
                return StrategyAdvice(GameStatus.N, NimMove(heap, to))
    raise AssertionError("red-dominated N position with no winning Nim move")


def advice(scheme: ColoringScheme, heaps: Sequence[int]) -> StrategyAdvice | None:
    """Dispatch to the applicable closed form, or None when there is none."""
    pos = as_position(heaps)
    if len(pos) != 2:
        return None
    kind = _dominance(scheme, max(max(pos), 1))
    if kind is Dominance.GREEN:
        return green_dominated_advice(scheme, pos)
    if kind is Dominance.RED:
        return red_dominated_advice(scheme, pos)
    return None


class _EvilPairCache:
    """Incrementally materialized mex recursion for the evil scheme."""

    def __init__(self) -> None:
        self.pairs: list[tuple[int, int]] = [(0, 0)]
        self.used: set[int] = {0}
        self.next_mex = 1

    def extend_to(self, n: int) -> None:
        while len(self.pairs) <= n:
            while self.next_mex in self.used:
                self.next_mex += 1
            a = self.next_mex
            b = a + 1
            while not is_evil(b) or b in self.used:
                b += 1
            self.pairs.append((a, b))
            self.used.update((a, b))


_evil_cache = _EvilPairCache()


def evil_nth_mex(n: int) -> PPositionPair:
    """The n-th evil-scheme pair via the mex recursion.

    a_n is the smallest integer unused by earlier pairs and b_n the smallest
    unused evil number above it.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    _evil_cache.extend_to(n)
    return PPositionPair(n, *_evil_cache.pairs[n])


def evil_nth_closed(n: int) -> PPositionPair:
    """The n-th evil-scheme pair in closed form, big-integer friendly.

    b_n is 2n when n is evil and 2n+1 otherwise; a_n trails it by 2 when n
    is vile, else by 1 (n evil) or 3 (n odious).
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return PPositionPair(0, 0, 0)
    b = 2 * n + (0 if is_evil(n) else 1)
    if is_dopey(n):
        a = b - 1 if is_evil(n) else b - 3
    else:
        a = b - 2
    return PPositionPair(n, a, b)


def evil_pairs_upto(limit: int, use_mex: bool = False) -> list[PPositionPair]:
    """All evil-scheme pairs with both coordinates at most limit."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    make = evil_nth_mex if use_mex else evil_nth_closed
    pairs = []
    n = 0
    while True:
        pair = make(n)
        if pair.b > limit:
            return pairs
        pairs.append(pair)
        n += 1
