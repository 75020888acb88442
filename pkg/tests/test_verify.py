"""The strategy checker itself: clean passes, precondition errors, fuzzing."""

import random

import pytest

from chromatic_nim import strategies
from chromatic_nim.colorings import (
    BeattyScheme,
    Dominance,
    EvilScheme,
    ExplicitScheme,
    IntegerScheme,
    RationalScheme,
    domination,
)
from chromatic_nim.quadratic import QuadraticIrrational
from chromatic_nim.strategies import PPositionPair
from chromatic_nim.verify import (
    STRATEGIES,
    VerificationReport,
    fuzz_dominated,
    random_explicit_scheme,
    verify,
)

PHI2 = QuadraticIrrational(3, 1, 5, 2)


@pytest.mark.parametrize(
    "scheme,strategy",
    [
        (BeattyScheme(PHI2), "beatty"),
        (BeattyScheme(QuadraticIrrational(2, 1, 2)), "beatty"),
        (IntegerScheme(2), "integer"),
        (IntegerScheme(5), "integer"),
        (EvilScheme(), "evil-mex"),
        (EvilScheme(), "evil-closed"),
        (BeattyScheme(PHI2), "green-dominated"),
        (EvilScheme(), "green-dominated"),
        (IntegerScheme(3), "green-dominated"),
        (RationalScheme(3, 2), "red-dominated"),
        (RationalScheme(4, 3), "red-dominated"),
        (BeattyScheme(QuadraticIrrational(1, 1, 5, 2)), "red-dominated"),
    ],
    ids=lambda v: v if isinstance(v, str) else v.key,
)
def test_correct_strategies_verify_cleanly(scheme, strategy):
    report = verify(scheme, strategy, 35)
    assert report.passed, report.summary()
    assert report.mismatches == []
    assert report.error is None
    assert report.summary().startswith("PASS")


def test_kind_mismatch_is_reported_not_raised():
    report = verify(IntegerScheme(2), "beatty", 20)
    assert not report.passed
    assert report.error is not None
    assert report.summary().startswith("FAIL")


def test_not_dominated_scheme_fails_green_check():
    report = verify(ExplicitScheme("RG", "GR"), "green-dominated", 10)
    assert not report.passed
    assert report.error is not None


def test_unknown_strategy_raises():
    with pytest.raises(ValueError):
        verify(EvilScheme(), "astrology", 10)


def test_wrong_claims_become_mismatches(monkeypatch):
    honest = strategies.evil_pairs_upto

    def wrong_pairs(limit, use_mex=False):
        pairs = honest(limit, use_mex=use_mex)
        # corrupt one pair to force a disagreement
        pairs[1] = PPositionPair(1, 1, 4)
        return pairs

    monkeypatch.setattr(strategies, "evil_pairs_upto", wrong_pairs)
    report = verify(EvilScheme(), "evil-closed", 12)
    assert not report.passed
    positions = {m.position for m in report.mismatches}
    # the bogus pair shows up as a wrong P claim, the dropped one as a miss
    assert (1, 4) in positions
    assert (1, 3) in positions


def test_report_serialization():
    report = verify(EvilScheme(), "evil-closed", 15)
    data = report.to_dict()
    assert data["passed"] is True
    assert data["strategy"] == "evil-closed"
    assert data["horizon"] == 15
    assert data["mismatches"] == []


def test_random_explicit_scheme_is_deterministic_per_seed():
    a = random_explicit_scheme(random.Random(7))
    b = random_explicit_scheme(random.Random(7))
    assert a == b


def test_fuzz_returns_requested_count_and_matches_kind():
    reports = fuzz_dominated(6, 18, seed=3, kinds=(Dominance.GREEN,))
    assert len(reports) == 6
    assert all(r.passed for r in reports)
    assert all(r.strategy == "green-dominated" for r in reports)

    reports = fuzz_dominated(6, 18, seed=4, kinds=(Dominance.RED,))
    assert all(r.strategy == "red-dominated" for r in reports)
    assert all(r.passed for r in reports)


def test_fuzz_is_deterministic():
    def fingerprint(reports):
        return [(r.scheme_id, r.strategy, r.horizon, len(r.mismatches), r.error) for r in reports]

    first = fuzz_dominated(5, 15, seed=11)
    second = fuzz_dominated(5, 15, seed=11)
    assert fingerprint(first) == fingerprint(second)
    assert fingerprint(first) != fingerprint(fuzz_dominated(5, 15, seed=12))


def test_fuzz_schemes_really_have_the_requested_dominance():
    for report in fuzz_dominated(5, 20, seed=5, kinds=(Dominance.RED,)):
        import json

        from chromatic_nim.colorings import scheme_from_dict

        scheme = scheme_from_dict(json.loads(report.scheme_id))
        assert domination(scheme, 20).kind is Dominance.RED


def test_strategy_name_tuple():
    assert set(STRATEGIES) == {
        "beatty",
        "integer",
        "green-dominated",
        "red-dominated",
        "evil-mex",
        "evil-closed",
    }
