"""Permutations, patterns and circular containment.

A circular permutation on ``[n]`` is stored as its canonical linear word,
the rotation that ends in ``n``.  Patterns are reduced words (permutations
of ``[k]``).  All positions exposed by this module are 1-based.
"""
from dataclasses import dataclass
from itertools import combinations, permutations

__all__ = [
    "InvalidInputError",
    "UnsupportedPatternError",
    "Pattern",
    "CircularPermutation",
    "OccurrenceWitness",
    "PatternClass",
    "parse_pattern",
    "parse_word",
    "reduce",
    "canonicalize",
    "cyclic_rotations",
    "reversal",
    "pattern_classes",
    "contains_linear",
    "contains_circular",
    "contains_circular_by_rotation_scan",
    "contains_circular_by_pattern_rotations",
    "occurrences_circular",
    "count_occurrences_circular",
]


class InvalidInputError(ValueError):
    """Input violates a documented precondition."""


class UnsupportedPatternError(ValueError):
    """No closed form is known for the requested pattern."""


def _is_perm_of_range(letters):
    return sorted(letters) == list(range(1, len(letters) + 1))


class Pattern(tuple):
    """A reduced word, i.e. a permutation of ``1..k`` with ``k >= 1``."""

    def __new__(cls, letters):
        if isinstance(letters, str):
            return parse_pattern(letters)
        letters = tuple(int(a) for a in letters)
        if not letters:
            raise InvalidInputError("empty pattern")
        if not _is_perm_of_range(letters):
            raise InvalidInputError(f"{letters} is not a permutation of 1..{len(letters)}")
        return super().__new__(cls, letters)

    @property
    def k(self):
        return len(self)

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Pattern({str(self)!r})"


class CircularPermutation(tuple):
    """Canonical word of a circular permutation: a permutation of ``1..n`` ending in ``n``.

    Use :func:`canonicalize` to build one from an arbitrary rotation.
    """

    def __new__(cls, word):
        word = tuple(int(a) for a in word)
        if not word:
            raise InvalidInputError("empty circular permutation")
        if not _is_perm_of_range(word):
            raise InvalidInputError(f"{word} is not a permutation of 1..{len(word)}")
        if word[-1] != len(word):
            raise InvalidInputError(f"{word} does not end in {len(word)}; canonicalize it first")
        return super().__new__(cls, word)

    @property
    def n(self):
        return len(self)

    @property
    def word(self):
        return tuple(self)

    def position(self, letter):
        """1-based position of ``letter`` in the canonical word."""
        return self.index(letter) + 1

    def __repr__(self):
        return f"CircularPermutation({tuple(self)!r})"


@dataclass(frozen=True)
class OccurrenceWitness:
    """An occurrence: ``positions`` in clockwise order, beginning at ``start``."""

    start: int
    positions: tuple


@dataclass(frozen=True)
class PatternClass:
    representative: Pattern
    rotation_orbit: frozenset
    reversal_partner_representative: Pattern

    @property
    def self_reverse(self):
        return self.representative == self.reversal_partner_representative


def parse_pattern(text):
    """Parse ``"1324"`` (digit form, k <= 9) or ``"1,3,2,4"`` into a :class:`Pattern`."""
    text = text.strip()
    if "," in text:
        parts = [t for t in text.split(",") if t.strip()]
        try:
            return Pattern(int(t) for t in parts)
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse pattern {text!r}") from exc
    if not text.isdigit():
        raise InvalidInputError(f"cannot parse pattern {text!r}")
    if len(text) > 9:
        raise InvalidInputError("patterns longer than 9 letters need the comma-delimited form")
    return Pattern(int(ch) for ch in text)


def parse_word(text):
    """Parse a word given as a digit string, or separated by commas or spaces."""
    text = text.strip()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        return tuple(int(t) for t in parts)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse word {text!r}") from exc


def reduce(word):
    """Replace the smallest letter by 1, the next smallest by 2, and so on.

    >>> reduce((7, 2, 9))
    Pattern('213')
    """
    word = tuple(word)
    if not word:
        raise InvalidInputError("cannot reduce an empty word")
    if len(set(word)) != len(word):
        raise InvalidInputError(f"{word} has repeated letters")
    rank = {a: i for i, a in enumerate(sorted(word), start=1)}
    return Pattern(rank[a] for a in word)


def canonicalize(arrangement):
    """Rotate an arrangement of ``1..n`` so that ``n`` comes last."""
    arrangement = tuple(arrangement)
    if not arrangement or not _is_perm_of_range(arrangement):
        raise InvalidInputError(f"{arrangement} is not a permutation of 1..{len(arrangement)}")
    i = arrangement.index(len(arrangement))
    return CircularPermutation(arrangement[i + 1:] + arrangement[:i + 1])


def cyclic_rotations(p):
    """The ``k`` word rotations of ``p``, starting with ``p`` itself."""
    p = Pattern(p)
    return [Pattern(p[i:] + p[:i]) for i in range(len(p))]


def reversal(p):
    return Pattern(tuple(p)[::-1])


def pattern_classes(k):
    """Partition all ``k!`` patterns into rotation orbits.

    Orbits are listed by their lexicographically least member.  Each entry
    also names the representative of the orbit holding the reversals.
    """
    if k < 1:
        raise InvalidInputError("k must be >= 1")
    orbit_of = {}
    for letters in permutations(range(1, k + 1)):
        p = Pattern(letters)
        if p not in orbit_of:
            orbit = frozenset(cyclic_rotations(p))
            for q in orbit:
                orbit_of[q] = orbit
    classes = []
    for orbit in sorted(set(orbit_of.values()), key=min):
        rep = min(orbit)
        partner = min(orbit_of[reversal(rep)])
        classes.append(PatternClass(rep, orbit, partner))
    return classes


def contains_linear(word, p):
    """True iff some subsequence of ``word`` reduces to ``p``."""
    word = tuple(word)
    p = tuple(p)
    k = len(p)
    if k > len(word):
        return False
    # order[i] = index into p of the i-th smallest pattern letter
    order = sorted(range(k), key=p.__getitem__)
    for idx in combinations(range(len(word)), k):
        vals = [word[i] for i in idx]
        if all(vals[order[i]] < vals[order[i + 1]] for i in range(k - 1)):
            return True
    return False


def contains_circular_by_rotation_scan(c, p):
    """Scan all ``n`` linearizations of ``c`` for a linear copy of ``p``."""
    w = tuple(c)
    return any(contains_linear(w[i:] + w[:i], p) for i in range(len(w)))


def contains_circular_by_pattern_rotations(c, p):
    """Check the canonical word for a linear copy of any rotation of ``p``."""
    w = tuple(c)
    return any(contains_linear(w, q) for q in cyclic_rotations(p))


def contains_circular(c, p):
    """True iff ``c`` contains ``p`` in clockwise order within one revolution."""
    return contains_circular_by_pattern_rotations(c, p)


def occurrences_circular(c, p):
    """Yield every :class:`OccurrenceWitness` of ``p`` in ``c``.

    A position set spans at most one revolution from any of its members, so
    every start is admissible, including the full cycle when ``k == n``.
    """
    w = tuple(c)
    p = Pattern(p)
    k = len(p)
    if k > len(w):
        return
    for idx in combinations(range(len(w)), k):
        for s in range(k):
            cyc = idx[s:] + idx[:s]
            if reduce(w[i] for i in cyc) == p:
                yield OccurrenceWitness(cyc[0] + 1, tuple(i + 1 for i in cyc))
                # no pattern equals a nontrivial rotation of itself
                break


def count_occurrences_circular(c, p):
    return sum(1 for _ in occurrences_circular(c, p))
