"""Level colorings: which stack heights count as red.

A coloring scheme assigns every positive level either red or green. Red
levels are the "Nim-like" ones: a heap whose height sits on a red level can
only be played with ordinary Nim moves, while positions with no red height
at all unlock the free green move. Levels are 1-based throughout.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Any, ClassVar

from .errors import ColorUnavailable
from .numbers import is_evil, is_odious, nth_evil, nth_odious
from .quadratic import QuadraticIrrational, complement_slope


class Color(Enum):
    RED = "R"
    GREEN = "G"


class Dominance(Enum):
    GREEN = "green-dominated"
    RED = "red-dominated"
    NEITHER = "neither"


@dataclass(frozen=True)
class DominationClass:
    """Classification of a scheme over the levels 1..horizon."""

    kind: Dominance
    horizon: int


def _check_level(level: int) -> None:
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        raise ValueError("levels are 1-based positive integers")


def _check_index(index: int) -> None:
    if not isinstance(index, int) or isinstance(index, bool) or index < 1:
        raise ValueError("color indices are 1-based positive integers")


class ColoringScheme(ABC):
    """Shared behaviour for every scheme kind."""

    kind: ClassVar[str]

    def color(self, level: int) -> Color:
        return Color.RED if self.is_red(level) else Color.GREEN

    def is_red(self, level: int) -> bool:
        _check_level(level)
        return self._red(level)

    def is_green(self, level: int) -> bool:
        return not self.is_red(level)

    @abstractmethod
    def _red(self, level: int) -> bool:
        """Red test for an already validated level."""

    @abstractmethod
    def nth_red(self, index: int) -> int:
        """Level of the index-th red token counted from the bottom."""

    @abstractmethod
    def nth_green(self, index: int) -> int:
        """Level of the index-th green token counted from the bottom."""

    @abstractmethod
    def red_count_upto(self, level: int) -> int:
        """Number of red levels in 1..level (level >= 0)."""

    def green_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        return level - self.red_count_upto(level)

    def dominance_hint(self) -> Dominance | None:
        """Structural domination class when one is known for every horizon."""
        return None

    @abstractmethod
    def to_dict(self) -> dict[str, Any]:
        """JSON-ready description of the scheme."""

    @property
    def key(self) -> str:
        """Canonical JSON encoding, usable as a cache key."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def __str__(self) -> str:
        return self.key


@dataclass(frozen=True)
class BeattyScheme(ColoringScheme):
    """Red levels are the floors of the positive multiples of an irrational slope."""

    beta: QuadraticIrrational
    kind: ClassVar[str] = "beatty"

    def __post_init__(self) -> None:
        if self.beta.is_rational:
            raise ValueError("slope must be irrational; use the rational or integer kinds otherwise")
        if self.beta.compare(1) <= 0:
            raise ValueError("slope must exceed 1")

    @cached_property
    def _alpha(self) -> QuadraticIrrational:
        return complement_slope(self.beta)

    @cached_property
    def _inv_beta(self) -> QuadraticIrrational:
        return self.beta.inverse()

    def _red(self, level: int) -> bool:
        # floor(beta * n) == level has at most one candidate n.
        n = self._inv_beta.floor_mul(level + 1)
        return n >= 1 and self.beta.floor_mul(n) == level

    def nth_red(self, index: int) -> int:
        _check_index(index)
        return self.beta.floor_mul(index)

    def nth_green(self, index: int) -> int:
        # The complement of one Beatty sequence is the Beatty sequence of
        # the conjugate slope.
        _check_index(index)
        return self._alpha.floor_mul(index)

    def red_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        return self._inv_beta.floor_mul(level + 1)

    def dominance_hint(self) -> Dominance | None:
        cmp = self.beta.compare(2)
        return Dominance.GREEN if cmp > 0 else Dominance.RED

    def to_dict(self) -> dict[str, Any]:
        b = self.beta
        return {"kind": self.kind, "p": b.p, "q": b.q, "d": b.d, "r": b.r}


@dataclass(frozen=True)
class IntegerScheme(ColoringScheme):
    """Red levels are the positive multiples of an integer beta >= 2."""

    beta: int
    kind: ClassVar[str] = "integer"

    def __post_init__(self) -> None:
        if not isinstance(self.beta, int) or isinstance(self.beta, bool) or self.beta < 2:
            raise ValueError("integer slope must be an integer >= 2")

    def _red(self, level: int) -> bool:
        return level % self.beta == 0

    def nth_red(self, index: int) -> int:
        _check_index(index)
        return self.beta * index

    def nth_green(self, index: int) -> int:
        _check_index(index)
        return index + (index - 1) // (self.beta - 1)

    def red_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        return level // self.beta

    def dominance_hint(self) -> Dominance | None:
        return Dominance.GREEN

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "beta": self.beta}


@dataclass(frozen=True)
class RationalScheme(ColoringScheme):
    """Red levels are floor(p*n/q) for n >= 1, with p/q > 1 in lowest terms."""

    p: int
    q: int
    kind: ClassVar[str] = "rational"

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int) or q < 1 or p <= q:
            raise ValueError("need integers p > q >= 1")
        g = gcd(p, q)
        if g > 1:
            object.__setattr__(self, "p", p // g)
            object.__setattr__(self, "q", q // g)

    def _red(self, level: int) -> bool:
        n = ((level + 1) * self.q - 1) // self.p
        return n >= 1 and (self.p * n) // self.q == level

    def nth_red(self, index: int) -> int:
        _check_index(index)
        return (self.p * index) // self.q

    def nth_green(self, index: int) -> int:
        _check_index(index)
        # green_count_upto climbs by at most one per level; bisect for the
        # first level reaching the target count.
        lo, hi = 1, 2
        while self.green_count_upto(hi) < index:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if self.green_count_upto(mid) >= index:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def red_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        return ((level + 1) * self.q - 1) // self.p

    def dominance_hint(self) -> Dominance | None:
        # The n-th red level floor(p*n/q) clears 2n exactly when p/q >= 2,
        # which pins the domination class for every horizon.
        return Dominance.GREEN if self.p >= 2 * self.q else Dominance.RED

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "p": self.p, "q": self.q}


@dataclass(frozen=True)
class EvilScheme(ColoringScheme):
    """Red levels are the evil numbers, green levels the odious ones."""

    kind: ClassVar[str] = "evil"

    def _red(self, level: int) -> bool:
        return is_evil(level)

    def nth_red(self, index: int) -> int:
        _check_index(index)
        # Skip 0, the only non-positive evil number.
        return nth_evil(index)

    def nth_green(self, index: int) -> int:
        _check_index(index)
        return nth_odious(index - 1)

    def red_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        if level == 0:
            return 0
        # Each pair {2k, 2k+1} holds exactly one evil number.
        evils = (level + 1) // 2
        if level % 2 == 0 and is_evil(level):
            evils += 1
        return evils - 1

    def dominance_hint(self) -> Dominance | None:
        # nth_green(i) <= 2(i-1)+1 < 2i <= nth_red(i) for every i.
        return Dominance.GREEN

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind}


def _check_bitmap(bitmap: str, name: str) -> None:
    if not isinstance(bitmap, str) or any(c not in "RG" for c in bitmap):
        raise ValueError(f"{name} must be a string over the letters R and G")


@dataclass(frozen=True)
class ExplicitScheme(ColoringScheme):
    """A literal prefix of colors followed by a repeating tail."""

    prefix: str
    period: str
    kind: ClassVar[str] = "explicit"

    def __post_init__(self) -> None:
        _check_bitmap(self.prefix, "prefix")
        _check_bitmap(self.period, "period")
        if len(self.period) < 1:
            raise ValueError("period must be non-empty")

    @cached_property
    def _prefix_red_levels(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.prefix) if c == "R")

    @cached_property
    def _period_red_offsets(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.period) if c == "R")

    @cached_property
    def _prefix_red_counts(self) -> tuple[int, ...]:
        counts = [0]
        for c in self.prefix:
            counts.append(counts[-1] + (c == "R"))
        return tuple(counts)

    @cached_property
    def _period_red_counts(self) -> tuple[int, ...]:
        counts = [0]
        for c in self.period:
            counts.append(counts[-1] + (c == "R"))
        return tuple(counts)

    def _red(self, level: int) -> bool:
        if level <= len(self.prefix):
            return self.prefix[level - 1] == "R"
        return self.period[(level - len(self.prefix) - 1) % len(self.period)] == "R"

    def red_count_upto(self, level: int) -> int:
        if level < 0:
            raise ValueError("level must be non-negative")
        if level <= len(self.prefix):
            return self._prefix_red_counts[level]
        beyond = level - len(self.prefix)
        full, rem = divmod(beyond, len(self.period))
        return (
            self._prefix_red_counts[-1]
            + full * self._period_red_counts[-1]
            + self._period_red_counts[rem]
        )

    def _nth_of(self, index: int, prefix_levels: tuple[int, ...], offsets: tuple[int, ...], label: str) -> int:
        _check_index(index)
        if index <= len(prefix_levels):
            return prefix_levels[index - 1]
        remaining = index - len(prefix_levels)
        if not offsets:
            raise ColorUnavailable(f"scheme has only {len(prefix_levels)} {label} levels")
        full, idx = divmod(remaining - 1, len(offsets))
        return len(self.prefix) + full * len(self.period) + offsets[idx]

    def nth_red(self, index: int) -> int:
        return self._nth_of(index, self._prefix_red_levels, self._period_red_offsets, "red")

    def nth_green(self, index: int) -> int:
        prefix_greens = tuple(i + 1 for i, c in enumerate(self.prefix) if c == "G")
        green_offsets = tuple(i + 1 for i, c in enumerate(self.period) if c == "G")
        return self._nth_of(index, prefix_greens, green_offsets, "green")

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "prefix": self.prefix, "period": self.period}


def beatty_membership(beta: QuadraticIrrational, m: int) -> bool:
    """Whether m >= 1 equals floor(beta * n) for some n >= 1.

    Since beta > 1 the interval [m/beta, (m+1)/beta) holds at most one
    integer, so one floor computation nominates the only candidate.
    """
    if beta.is_rational:
        raise ValueError("membership test requires an irrational slope")
    if beta.compare(1) <= 0:
        raise ValueError("slope must exceed 1")
    _check_level(m)
    n = beta.inverse().floor_mul(m + 1)
    return n >= 1 and beta.floor_mul(n) == m


def domination(scheme: ColoringScheme, horizon: int) -> DominationClass:
    """Classify the scheme on levels 1..horizon.

    Green-dominated means every red level sees at least as many greens
    strictly below it (counting multiplicity); red-dominated is the mirror
    statement.  The first level already rules one side out, so at most one
    side survives.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    reds = greens = 0
    green_ok = red_ok = True
    for level in range(1, horizon + 1):
        if scheme.is_red(level):
            reds += 1
            if greens < reds:
                green_ok = False
        else:
            greens += 1
            if reds < greens:
                red_ok = False
        if not green_ok and not red_ok:
            break
    if green_ok:
        kind = Dominance.GREEN
    elif red_ok:
        kind = Dominance.RED
    else:
        kind = Dominance.NEITHER
    return DominationClass(kind, horizon)


def scheme_to_dict(scheme: ColoringScheme) -> dict[str, Any]:
    return scheme.to_dict()


def scheme_from_dict(data: Any) -> ColoringScheme:
    """Build a scheme from its JSON dictionary form."""
    if not isinstance(data, dict):
        raise ValueError("scheme must be a JSON object")
    kind = data.get("kind")
    try:
        if kind == "beatty":
            beta = QuadraticIrrational(
                _as_int(data, "p"), _as_int(data, "q"), _as_int(data, "d"), _as_int(data, "r")
            )
            return BeattyScheme(beta)
        if kind == "integer":
            return IntegerScheme(_as_int(data, "beta"))
        if kind == "rational":
            return RationalScheme(_as_int(data, "p"), _as_int(data, "q"))
        if kind == "evil":
            return EvilScheme()
        if kind == "explicit":
            prefix = data.get("prefix", "")
            period = data.get("period")
            if not isinstance(period, str):
                raise ValueError("explicit scheme needs a period string")
            return ExplicitScheme(prefix, period)
    except ValueError as exc:
        raise ValueError(f"invalid {kind} scheme: {exc}") from exc
    raise ValueError(f"unknown scheme kind: {kind!r}")


def _as_int(data: dict[str, Any], field: str) -> int:
    value = data.get(field)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"field {field!r} must be an integer")
    return value


def scheme_to_json(scheme: ColoringScheme) -> str:
    return scheme.key


def scheme_from_json(text: str) -> ColoringScheme:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"scheme is not valid JSON: {exc}") from exc
    return scheme_from_dict(data)
