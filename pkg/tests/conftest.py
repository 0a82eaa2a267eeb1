from itertools import combinations, permutations

import pytest


def naive_reduce(word):
    """Rank each letter by counting smaller letters; no sorting."""
    return tuple(1 + sum(b < a for b in word) for a in word)


def naive_circular_occurrences(word, pattern):
    """Set of (start, positions) read by walking clockwise from every start.

    Offsets are taken strictly inside one revolution, so each position set
    is read once per admissible start.  1-based positions.
    """
    n, k = len(word), len(pattern)
    found = set()
    if k > n:
        return found
    pattern = tuple(pattern)
    for s in range(n):
        for offs in combinations(range(1, n), k - 1):
            idx = (s,) + tuple((s + o) % n for o in offs)
            if naive_reduce([word[i] for i in idx]) == pattern:
                found.add((s + 1, tuple(i + 1 for i in idx)))
    return found


def canonical_words(n):
    for body in permutations(range(1, n)):
        yield body + (n,)


@pytest.fixture
def all_patterns_upto4():
    return [p for k in range(1, 5) for p in permutations(range(1, k + 1))]
