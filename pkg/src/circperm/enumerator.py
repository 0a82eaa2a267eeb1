"""Exhaustive generation of circular permutations and brute-force avoider counts.

Canonical words are produced with ``n`` fixed in the last slot and the
letters ``1..n-1`` permuted in lexicographic order.  Containment is decided
in batches: every word is a row of an integer array, and for each choice of
``k`` positions the relative order of the selected letters is encoded as a
bit mask of pairwise comparisons, then looked up in the set of masks of the
forbidden patterns.  No formula from :mod:`circperm.formulas` is consulted.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial

import numpy as np

from .model import CircularPermutation, InvalidInputError, Pattern, cyclic_rotations

__all__ = [
    "AvoiderCount",
    "PositionStratum",
    "iter_circular_perms",
    "circular_perm_array",
    "linear_perm_array",
    "contains_mask",
    "avoidance_mask",
    "count_avoiders",
    "list_avoiders",
    "count_avoiders_at_position",
    "count_avoiders_by_position",
    "count_linear_avoiders",
    "list_linear_avoiders",
]

METHODS = ("brute", "formula", "recurrence", "bijection-image")


@dataclass(frozen=True)
class AvoiderCount:
    n: int
    patterns: frozenset
    count: int
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidInputError(f"unknown method {self.method!r}")

    def __int__(self):
        return self.count


@dataclass(frozen=True)
class PositionStratum:
    k: int
    count: int


def _as_patterns(ps):
    if isinstance(ps, (Pattern, str)):
        ps = [ps]
    return frozenset(Pattern(p) for p in ps)


def _check_n(n):
    if n < 1:
        raise InvalidInputError("n must be >= 1")


def iter_circular_perms(n, prefix=()):
    """Yield canonical words on ``[n]`` in lexicographic order.

    ``prefix`` restricts the stream to words starting with those letters,
    which partitions the full stream for parallel consumption.
    """
    _check_n(n)
    prefix = tuple(prefix)
    rest = sorted(set(range(1, n)) - set(prefix))
    if len(prefix) + len(rest) != n - 1:
        raise InvalidInputError(f"prefix {prefix} is not drawn from 1..{n - 1}")
    for tail in permutations(rest):
        yield CircularPermutation(prefix + tail + (n,))


def _perm_rows(letters, prefix, suffix):
    body = np.array(list(permutations(letters)), dtype=np.int8)
    body = body.reshape(len(body), len(letters))
    m = len(body)
    parts = []
    if prefix:
        parts.append(np.broadcast_to(np.array(prefix, dtype=np.int8), (m, len(prefix))))
    parts.append(body)
    if suffix:
        parts.append(np.broadcast_to(np.array(suffix, dtype=np.int8), (m, len(suffix))))
    return np.ascontiguousarray(np.hstack(parts))


def circular_perm_array(n, prefix=()):
    """All canonical words on ``[n]`` (optionally with a fixed prefix) as rows, lex order."""
    _check_n(n)
    prefix = tuple(prefix)
    rest = sorted(set(range(1, n)) - set(prefix))
    return _perm_rows(rest, prefix, (n,))


def linear_perm_array(n, prefix=()):
    """All linear permutations of ``[n]`` as rows, lex order."""
    _check_n(n)
    prefix = tuple(prefix)
    rest = sorted(set(range(1, n + 1)) - set(prefix))
    return _perm_rows(rest, prefix, ())


def _order_code(p):
    """Bit mask of pairwise comparisons ``p[i] < p[j]`` for ``i < j``."""
    code = 0
    for bit, (i, j) in enumerate(combinations(range(len(p)), 2)):
        if p[i] < p[j]:
            code |= 1 << bit
    return code


def contains_mask(rows, patterns):
    """Boolean vector: row ``r`` linearly contains at least one of ``patterns``."""
    rows = np.asarray(rows)
    m, n = rows.shape
    hit = np.zeros(m, dtype=bool)
    by_length = {}
    for p in patterns:
        by_length.setdefault(len(p), set()).add(_order_code(p))
    less = {}
    for k, codes in by_length.items():
        if k > n:
            continue
        if k == 1:
            hit[:] = True
            continue
        pairs = list(combinations(range(k), 2))
        table = None
        if len(pairs) <= 21:
            table = np.zeros(1 << len(pairs), dtype=bool)
            table[list(codes)] = True
        else:
            code_arr = np.array(sorted(codes), dtype=np.int64)
        dtype = np.uint8 if len(pairs) <= 8 else (np.uint32 if len(pairs) <= 32 else np.uint64)
        for idx in combinations(range(n), k):
            code = np.zeros(m, dtype=dtype)
            for bit, (a, b) in enumerate(pairs):
                key = (idx[a], idx[b])
                if key not in less:
                    less[key] = rows[:, key[0]] < rows[:, key[1]]
                code |= less[key].astype(dtype) << dtype(bit)
            if table is not None:
                hit |= table[code]
            else:
                hit |= np.isin(code.astype(np.int64), code_arr)
    return hit


def _circular_forbidden(ps):
    return {q for p in ps for q in cyclic_rotations(p)}


def avoidance_mask(rows, ps, circular=True):
    """Boolean vector: row avoids every pattern in ``ps`` (circularly by default)."""
    ps = _as_patterns(ps)
    forbidden = _circular_forbidden(ps) if circular else ps
    return ~contains_mask(rows, forbidden)


def _count_chunk(args):
    n, ps, prefix, circular = args
    rows = circular_perm_array(n, prefix) if circular else linear_perm_array(n, prefix)
    return int(avoidance_mask(rows, ps, circular=circular).sum())


def _prefixes(n, circular):
    top = n - 1 if circular else n
    if top <= 1:
        return [()]
    return [(a,) for a in range(1, top + 1)]


def _parallel_count(n, ps, circular, workers):
    jobs = [(n, ps, pre, circular) for pre in _prefixes(n, circular)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_chunk, jobs))
    return sum(map(_count_chunk, jobs))


def count_avoiders(n, ps, workers=None):
    """Count circular permutations on ``[n]`` avoiding every pattern in ``ps``.

    With ``workers > 1`` the stream is split by first letter and counted in
    separate processes; the partial counts are summed.
    """
    _check_n(n)
    ps = _as_patterns(ps)
    count = _parallel_count(n, ps, True, workers)
    return AvoiderCount(n, ps, count, "brute")


def list_avoiders(n, ps):
    """The avoiders on ``[n]`` as canonical words, in lexicographic order."""
    _check_n(n)
    rows = circular_perm_array(n)
    keep = avoidance_mask(rows, ps)
    return [CircularPermutation(r) for r in rows[keep].tolist()]


def count_avoiders_by_position(n, ps):
    """Brute-force strata: ``{k: count}`` with ``k`` the position of ``n - 1``."""
    if n < 3:
        raise InvalidInputError("stratification needs n >= 3")
    rows = circular_perm_array(n)
    keep = avoidance_mask(rows, ps)
    pos = np.argmax(rows == n - 1, axis=1) + 1
    return {k: int((keep & (pos == k)).sum()) for k in range(1, n)}


def count_avoiders_at_position(n, ps, k):
    """Brute-force count of avoiders whose letter ``n - 1`` sits at position ``k``."""
    if n < 3:
        raise InvalidInputError("stratification needs n >= 3")
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"position {k} outside 1..{n - 1}")
    rows = circular_perm_array(n)
    rows = rows[rows[:, k - 1] == n - 1]
    return PositionStratum(k, int(avoidance_mask(rows, ps).sum()))


def count_linear_avoiders(n, ps, workers=None):
    """Count linear permutations of ``[n]`` avoiding every pattern in ``ps`` classically."""
    _check_n(n)
    ps = _as_patterns(ps)
    return AvoiderCount(n, ps, _parallel_count(n, ps, False, workers), "brute")


def list_linear_avoiders(n, ps):
    _check_n(n)
    rows = linear_perm_array(n)
    keep = avoidance_mask(rows, ps, circular=False)
    return [tuple(r) for r in rows[keep].tolist()]


def total(n):
    """Number of circular permutations on ``[n]``."""
    return factorial(n - 1)
