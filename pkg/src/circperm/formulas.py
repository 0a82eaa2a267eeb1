"""Closed forms, recurrences and position-stratified counts.

``u(n)`` below always means the number of circular permutations on ``[n]``
avoiding the pattern in question.  The three 4-letter families are keyed by
their usual representatives 1234, 1324 and 1342; every other 4-letter
pattern is sent to one of them through rotation and reversal.
"""
import math
from dataclasses import dataclass

from .enumerator import AvoiderCount
from .model import InvalidInputError, Pattern, UnsupportedPatternError, cyclic_rotations, reversal

__all__ = [
    "GrowthConstant",
    "FAMILIES",
    "binom",
    "fib",
    "count_1324_closed",
    "count_1324_recurrence",
    "count_1324_recurrence_as_printed",
    "count_1342_closed",
    "count_1342_recurrence",
    "count_1234_closed",
    "count_1234_recurrence",
    "stratified_1324",
    "stratified_1342",
    "stratified_1234",
    "family_of",
    "closed_form",
    "recurrence",
    "stratified",
    "count_for_pattern",
    "growth_constant",
    "nth_root",
]

PHI = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class GrowthConstant:
    value: float
    description: str


def binom(a, b):
    """``C(a, b)``, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def fib(m):
    """Fibonacci number with ``F(1) = F(2) = 1``."""
    if m < 1:
        raise InvalidInputError("Fibonacci index must be >= 1")
    a, b = 1, 1
    for _ in range(m - 1):
        a, b = b, a + b
    return a


def _check_n(n):
    if n < 1:
        raise InvalidInputError("n must be >= 1")


def count_1324_closed(n):
    _check_n(n)
    return 1 if n == 1 else fib(2 * n - 3)


def count_1324_recurrence(n):
    """``u(n) = u(n-1) + sum(u(n-k) for k in 1..n-2)`` with ``u(1) = u(2) = 1``.

    The first term is the case where ``n-1`` and ``n`` are adjacent; the sum
    runs over the non-adjacent positions ``k``.
    """
    _check_n(n)
    u = [0, 1, 1]
    for m in range(3, n + 1):
        u.append(u[m - 1] + sum(u[m - k] for k in range(1, m - 1)))
    return u[n]


def count_1324_recurrence_as_printed(n):
    """The recurrence with the sum running to ``n-1``; overcounts from ``n = 3`` on."""
    _check_n(n)
    u = [0, 1, 1]
    for m in range(3, n + 1):
        u.append(u[m - 1] + sum(u[m - k] for k in range(1, m)))
    return u[n]


def count_1342_closed(n):
    _check_n(n)
    return 2 ** (n - 1) - (n - 1)


def count_1342_recurrence(n):
    _check_n(n)
    u = 1
    for m in range(3, n + 1):
        u = u + 2 ** (m - 2) - 1
    return u


def count_1234_closed(n):
    _check_n(n)
    return 2 ** n + 1 - 2 * n - binom(n, 3)


def count_1234_recurrence(n):
    _check_n(n)
    u = 1
    for m in range(3, n + 1):
        u = u + 2 ** (m - 1) - m - binom(m - 2, 2)
    return u


def _check_stratum(n, k, n_min):
    if n < n_min:
        raise InvalidInputError(f"stratified count needs n >= {n_min}")
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"position {k} outside 1..{n - 1}")


def stratified_1324(n, k):
    """Avoiders of 1324 on ``[n]`` with ``n-1`` at position ``k``."""
    _check_stratum(n, k, 3)
    if k <= n - 2:
        return count_1324_closed(n - k)
    return count_1324_closed(n - 1)


def stratified_1342(n, k):
    """Avoiders of 1342 on ``[n]`` with ``n-1`` at position ``k``.

    For ``k = n-1`` the prefix is forced to ``1..n-2`` and the count is 1,
    which is also what ``2**(n-k-1)`` gives there.
    """
    _check_stratum(n, k, 4)
    if k == 1:
        return count_1342_closed(n - 1)
    if k <= n - 2:
        return 2 ** (n - k - 1)
    return 1


def stratified_1234(n, k):
    _check_stratum(n, k, 4)
    if k == 1:
        return count_1234_closed(n - 1)
    if k == 2:
        return 2 ** (n - 3)
    return 2 ** (n - 1 - k) + binom(n - 2, k - 1) - n + k


FAMILIES = {
    Pattern("1234"): (count_1234_closed, count_1234_recurrence, stratified_1234),
    Pattern("1324"): (count_1324_closed, count_1324_recurrence, stratified_1324),
    Pattern("1342"): (count_1342_closed, count_1342_recurrence, stratified_1342),
}

_GROWTH = {
    Pattern("1234"): GrowthConstant(2.0, "two"),
    Pattern("1324"): GrowthConstant(PHI ** 2, "phi-squared"),
    Pattern("1342"): GrowthConstant(2.0, "two"),
}


def family_of(p):
    """The representative 1234, 1324 or 1342 whose rotation/reversal class holds ``p``."""
    p = Pattern(p)
    if len(p) != 4:
        raise UnsupportedPatternError(f"{p} is not a 4-letter pattern")
    for q in cyclic_rotations(p) + cyclic_rotations(reversal(p)):
        if q in FAMILIES:
            return q
    raise AssertionError(f"{p} matched no family")  # unreachable: the 3 classes cover S4


def closed_form(p, n):
    if len(Pattern(p)) == 3:
        _check_n(n)
        return 1
    return FAMILIES[family_of(p)][0](n)


def recurrence(p, n):
    if len(Pattern(p)) == 3:
        _check_n(n)
        return 1
    return FAMILIES[family_of(p)][1](n)


def stratified(p, n, k):
    return FAMILIES[family_of(p)][2](n, k)


def count_for_pattern(n, p):
    """Closed-form avoider count for any pattern of length 3 or 4.

    Length 3 gives 1: only the identity avoids the 132 class and only the
    reverse identity avoids the 123 class.
    """
    p = Pattern(p)
    if len(p) not in (3, 4):
        raise UnsupportedPatternError(f"no closed form for patterns of length {len(p)}")
    return AvoiderCount(n, frozenset([p]), closed_form(p, n), "formula")


def growth_constant(p):
    return _GROWTH[family_of(p)]


def nth_root(u, n):
    """``u ** (1/n)`` for a large exact integer ``u``, in double precision."""
    if u <= 0:
        raise InvalidInputError("nth_root needs a positive integer")
    return math.exp(math.log(u) / n)

