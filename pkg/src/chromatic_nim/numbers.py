"""Binary-digit parities and the counting helpers built on them.

An integer is evil when its binary expansion has an even number of ones and
odious otherwise; it is vile when it ends in an even number of zeros and
dopey otherwise (so every positive integer gets one label from each pair).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def is_evil(n: int) -> bool:
    """True when n >= 0 has an even number of one bits."""
    if n < 0:
        raise ValueError("parity labels are defined for non-negative integers")
    return n.bit_count() % 2 == 0


def is_odious(n: int) -> bool:
    """True when n >= 0 has an odd number of one bits."""
    return not is_evil(n)


def is_vile(n: int) -> bool:
    """True when n >= 1 ends in an even number of binary zeros."""
    if n < 1:
        raise ValueError("trailing-zero labels are defined for positive integers")
    trailing = (n & -n).bit_length() - 1
    return trailing % 2 == 0


def is_dopey(n: int) -> bool:
    """True when n >= 1 ends in an odd number of binary zeros."""
    return not is_vile(n)


def mex(values: Iterable[int]) -> int:
    """Minimum excludant: the smallest non-negative integer not in values."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


def tau_range(lo: int, hi: int) -> int:
    """Number of odious minus number of evil integers in {lo, ..., hi}."""
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    balance = 0
    for n in range(lo, hi + 1):
        balance += 1 if n.bit_count() % 2 else -1
    return balance


def tau(k: int) -> int:
    """Odious-minus-evil balance of {0, ..., k}."""
    return tau_range(0, k)


def tau_values(limit: int) -> Iterator[int]:
    """Yield tau(0), tau(1), ..., tau(limit) as one running scan."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    balance = 0
    for n in range(limit + 1):
        balance += 1 if n.bit_count() % 2 else -1
        yield balance


def chi(k: int) -> int:
    """Number of green moves gained on a stack of height k, i.e. tau(k) + 1."""
    if k < 1:
        raise ValueError("stack height must be positive")
    return tau(k) + 1


def next_evil(m: int) -> int:
    """Smallest evil integer strictly greater than m >= 0."""
    if m < 0:
        raise ValueError("need m >= 0")
    c = m + 1
    # At most two consecutive integers share a bit-count parity.
    while c.bit_count() % 2:
        c += 1
    return c


def nth_evil(i: int) -> int:
    """The i-th evil number, 0-indexed from nth_evil(0) == 0.

    Exactly one of {2i, 2i+1} is evil, and 2i has the bit-count parity of i.
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    return 2 * i + (1 if is_odious(i) else 0)


def nth_odious(i: int) -> int:
    """The i-th odious number, 0-indexed from nth_odious(0) == 1."""
    if i < 0:
        raise ValueError("index must be non-negative")
    return 2 * i + (1 if is_evil(i) else 0)
