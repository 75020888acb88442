"""Binary digit-sum helpers: parity classes, the running excess, closed forms."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromatic_nim.numbers import (
    chi,
    is_dopey,
    is_evil,
    is_odious,
    is_vile,
    mex,
    next_evil,
    nth_evil,
    nth_odious,
    tau,
    tau_range,
    tau_values,
)


def test_evil_numbers_up_to_fifteen():
    assert [n for n in range(16) if is_evil(n)] == [0, 3, 5, 6, 9, 10, 12, 15]


def test_odious_numbers_up_to_fifteen():
    assert [n for n in range(16) if is_odious(n)] == [1, 2, 4, 7, 8, 11, 13, 14]


def test_evil_odious_partition():
    for n in range(2000):
        assert is_evil(n) != is_odious(n)


def test_vile_dopey_by_trailing_zeros():
    # vile: evenly many trailing zero bits
    assert [n for n in range(1, 17) if is_vile(n)] == [1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16]
    assert [n for n in range(1, 17) if is_dopey(n)] == [2, 6, 8, 10, 14]


def test_parity_helpers_reject_bad_input():
    with pytest.raises(ValueError):
        is_evil(-1)
    with pytest.raises(ValueError):
        is_odious(-3)
    with pytest.raises(ValueError):
        is_vile(0)
    with pytest.raises(ValueError):
        is_dopey(-2)


def test_large_prime_power_is_evil_and_vile():
    q = 17509**17509
    assert is_evil(q)
    assert is_vile(q)


def test_mex_examples():
    assert mex([]) == 0
    assert mex([0, 1, 2]) == 3
    assert mex([1, 2, 5]) == 0
    assert mex({0, 2, 3}) == 1
    assert mex([0, 0, 1, 3]) == 2


def test_tau_small_table():
    assert [tau(k) for k in range(8)] == [-1, 0, 1, 0, 1, 0, -1, 0]


def test_tau_range_splits():
    for k in range(1, 200):
        assert tau(k) == tau(k - 1) + tau_range(k, k)


def test_tau_values_matches_direct():
    vals = list(tau_values(300))
    assert len(vals) == 301
    assert vals == [tau(k) for k in range(301)]


def test_tau_stays_within_unit_band():
    assert all(-1 <= v <= 1 for v in tau_values(100_000))


def test_chi_first_values():
    assert [chi(k) for k in range(1, 9)] == [1, 2, 1, 2, 1, 0, 1, 2]


def test_chi_classifies_by_parity():
    for k in range(1, 4000):
        expected = 1 if k % 2 else (2 if is_odious(k) else 0)
        assert chi(k) == expected


def test_chi_rejects_zero():
    with pytest.raises(ValueError):
        chi(0)


def test_next_evil():
    assert next_evil(0) == 3
    assert next_evil(3) == 5
    assert next_evil(4) == 5
    assert next_evil(6) == 9


def test_nth_evil_against_enumeration():
    evils = [n for n in range(6000) if is_evil(n)]
    for i, value in enumerate(evils[:2500]):
        assert nth_evil(i) == value


def test_nth_odious_against_enumeration():
    odious = [n for n in range(6000) if is_odious(n)]
    for i, value in enumerate(odious[:2500]):
        assert nth_odious(i) == value


@given(st.integers(0, 10**12))
def test_nth_evil_lands_on_evil(i):
    assert is_evil(nth_evil(i))
    assert is_odious(nth_odious(i))


@given(st.integers(0, 10**9))
def test_nth_sequences_strictly_increase(i):
    assert nth_evil(i) < nth_evil(i + 1)
    assert nth_odious(i) < nth_odious(i + 1)
