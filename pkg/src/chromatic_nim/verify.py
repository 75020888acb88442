"""Strategy-versus-oracle equivalence checks and randomized fuzzing.

A verification compares what a closed form claims about every two-heap
position up to a horizon against backward-induction ground truth, and
records each disagreement. Reports are plain data so they can be frozen
into tests or rendered by the CLI.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any

from . import strategies
from .colorings import (
    BeattyScheme,
    ColoringScheme,
    Dominance,
    EvilScheme,
    ExplicitScheme,
    IntegerScheme,
    domination,
)
from .engine import apply_move
from .errors import NotApplicable
from .oracle import GameStatus, Oracle

STRATEGIES = ("beatty", "integer", "green-dominated", "red-dominated", "evil-mex", "evil-closed")


@dataclass(frozen=True)
class Mismatch:
    position: tuple[int, int]
    expected: str
    got: str


@dataclass
class VerificationReport:
    scheme_id: str
    strategy: str
    horizon: int
    mismatches: list[Mismatch] = field(default_factory=list)
    error: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        return {
            "scheme_id": self.scheme_id,
            "strategy": self.strategy,
            "horizon": self.horizon,
            "passed": self.passed,
            "error": self.error,
            "mismatches": [
                {"position": list(m.position), "expected": m.expected, "got": m.got}
                for m in self.mismatches
            ],
            "elapsed": self.elapsed,
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        detail = f"error: {self.error}" if self.error else f"mismatches: {len(self.mismatches)}"
        return (
            f"{verdict} strategy={self.strategy} horizon={self.horizon} "
            f"{detail} elapsed={self.elapsed:.3f}s scheme={self.scheme_id}"
        )


def _claimed_pairs(scheme: ColoringScheme, strategy: str, horizon: int) -> list[strategies.PPositionPair]:
    if strategy == "beatty":
        if not isinstance(scheme, BeattyScheme):
            raise NotApplicable("beatty strategy needs a beatty scheme")
        return strategies.beatty_pairs_upto(scheme.beta, horizon)
    if strategy == "integer":
        if not isinstance(scheme, IntegerScheme):
            raise NotApplicable("integer strategy needs an integer scheme")
        return strategies.integer_pairs_upto(scheme.beta, horizon)
    if strategy in ("evil-mex", "evil-closed"):
        if not isinstance(scheme, EvilScheme):
            raise NotApplicable("evil strategies need the evil scheme")
        return strategies.evil_pairs_upto(horizon, use_mex=strategy == "evil-mex")
    if strategy == "red-dominated":
        return strategies.red_dominated_p_positions(scheme, horizon)
    raise ValueError(f"unknown strategy {strategy!r}")


def verify(scheme: ColoringScheme, strategy: str, horizon: int) -> VerificationReport:
    """Compare one strategy with the oracle on all positions up to horizon."""
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    report = VerificationReport(scheme.key, strategy, horizon)
    started = time.perf_counter()
    oracle = Oracle(scheme)
    p_set = set(oracle.p_positions_upto(horizon))
    try:
        if strategy == "green-dominated":
            _verify_advice(scheme, horizon, p_set, report)
        else:
            claimed = {
                cell
                for pair in _claimed_pairs(scheme, strategy, horizon)
                for cell in ((pair.a, pair.b), (pair.b, pair.a))
            }
            for cell in sorted(claimed - p_set):
                report.mismatches.append(Mismatch(cell, "N", "P"))
            for cell in sorted(p_set - claimed):
                report.mismatches.append(Mismatch(cell, "P", "N"))
    except NotApplicable as exc:
        report.error = str(exc)
    report.elapsed = time.perf_counter() - started
    return report


def _verify_advice(
    scheme: ColoringScheme,
    horizon: int,
    p_set: set[tuple[int, ...]],
    report: VerificationReport,
) -> None:
    if horizon >= 1 and domination(scheme, horizon).kind is not Dominance.GREEN:
        raise NotApplicable("scheme is not green-dominated on the needed horizon")
    for x in range(horizon + 1):
        for y in range(horizon + 1):
            adv = strategies.green_dominated_advice(scheme, (x, y))
            truth = "P" if (x, y) in p_set else "N"
            if adv.status.value != truth:
                report.mismatches.append(Mismatch((x, y), truth, adv.status.value))
                continue
            if adv.move is not None:
                target = apply_move(scheme, (x, y), adv.move)
                if target not in p_set:
                    report.mismatches.append(Mismatch((x, y), "move to P", f"move to {target}"))


def random_explicit_scheme(rng: random.Random) -> ExplicitScheme:
    """A random explicit scheme with a short prefix and a period of 4..16."""
    green_bias = rng.uniform(0.15, 0.85)

    def letters(n: int) -> str:
        return "".join("G" if rng.random() < green_bias else "R" for _ in range(n))

    prefix = letters(rng.randint(0, 8))
    period = letters(rng.randint(4, 16))
    return ExplicitScheme(prefix, period)


def fuzz_dominated(
    count: int,
    horizon: int,
    seed: int,
    kinds: tuple[Dominance, ...] = (Dominance.GREEN, Dominance.RED),
) -> list[VerificationReport]:
    """Verify `count` random explicit schemes that land in the wanted classes.

    Green-dominated schemes get the advice check, red-dominated ones the
    scan check. Reports are deterministic for a given seed (elapsed aside).
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = random.Random(seed)
    reports: list[VerificationReport] = []
    while len(reports) < count:
        scheme = random_explicit_scheme(rng)
        kind = domination(scheme, max(horizon, 1)).kind
        if kind not in kinds or kind is Dominance.NEITHER:
            continue
        strategy = "green-dominated" if kind is Dominance.GREEN else "red-dominated"
        reports.append(verify(scheme, strategy, horizon))
    return reports
