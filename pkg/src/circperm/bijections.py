"""Constructive maps between bit words and avoiding permutations.

* :func:`prop1_bits_to_perm` / :func:`prop1_perm_to_bits`: bit strings of
  length ``n-1`` and linear permutations of ``[n]`` avoiding 213 and 231.
* :func:`g_decompose` / :func:`g_compose` and :func:`thm1_decompose` /
  :func:`thm1_compose`: the matching recursive splits of Fibonacci words and
  1324-avoiders, glued together by :func:`fib_word_to_1324`.
* :func:`thm2_word_to_perm` / :func:`thm2_perm_to_word`: 0-1 words of length
  ``n-1`` without exactly one 1, and 1342-avoiders on ``[n]``.
* :func:`validate_structure_1342` and :func:`validate_structure_1234`:
  the structural characterizations of avoiders by the position of ``n-1``.

Bit words are tuples of ints.  Validators return ``None`` on failure.
"""
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .model import (
    CircularPermutation,
    InvalidInputError,
    Pattern,
    contains_circular,
    contains_linear,
    reduce,
)

__all__ = [
    "GBranch",
    "Decomposition1324",
    "Decomposition1342",
    "Structure1234",
    "as_bits",
    "is_fib_word",
    "is_a_word",
    "prop1_bits_to_perm",
    "prop1_perm_to_bits",
    "fib_words",
    "g_words",
    "g_decompose",
    "g_compose",
    "thm1_decompose",
    "thm1_compose",
    "fib_word_to_1324",
    "avoider_1324_to_fib_word",
    "a_words",
    "thm2_word_to_perm",
    "thm2_perm_to_word",
    "validate_structure_1342",
    "validate_structure_1234",
]

P213 = Pattern("213")
P231 = Pattern("231")
P1324 = Pattern("1324")
P1342 = Pattern("1342")


def as_bits(bits):
    """Coerce ``"0110"`` or an iterable of 0/1 into a tuple of ints."""
    if isinstance(bits, str):
        bits = bits.strip()
        if any(ch not in "01" for ch in bits):
            raise InvalidInputError(f"{bits!r} is not a 0-1 string")
        return tuple(int(ch) for ch in bits)
    bits = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in bits):
        raise InvalidInputError(f"{bits} is not a 0-1 sequence")
    return bits


# -- 213/231-avoiding linear permutations ------------------------------------

def prop1_bits_to_perm(bits, letters=None):
    """Build a {213, 231}-avoider left to right from ``bits``.

    Bit 1 takes the largest unused letter, bit 0 the smallest; the last
    letter is whatever remains.  ``letters`` defaults to ``1..len(bits)+1``.

    >>> prop1_bits_to_perm((0, 1, 1, 1, 0, 1, 0))
    (1, 8, 7, 6, 2, 5, 3, 4)
    """
    bits = as_bits(bits)
    pool = sorted(letters) if letters is not None else list(range(1, len(bits) + 2))
    if len(pool) != len(bits) + 1:
        raise InvalidInputError(f"{len(bits)} bits need {len(bits) + 1} letters, got {len(pool)}")
    lo, hi = 0, len(pool) - 1
    out = []
    for b in bits:
        if b:
            out.append(pool[hi])
            hi -= 1
        else:
            out.append(pool[lo])
            lo += 1
    out.append(pool[lo])
    return tuple(out)


def prop1_perm_to_bits(word):
    """Inverse of :func:`prop1_bits_to_perm`; ``word`` may use any distinct letters."""
    word = tuple(word)
    if not word:
        raise InvalidInputError("empty word")
    if contains_linear(word, P213) or contains_linear(word, P231):
        raise InvalidInputError(f"{word} contains 213 or 231")
    w = reduce(word)
    hi = len(w)
    bits = []
    for a in w[:-1]:
        if a == hi:
            bits.append(1)
            hi -= 1
        else:
            bits.append(0)
    return tuple(bits)


# -- Fibonacci words and 1324-avoiders ----------------------------------------

def is_fib_word(bits):
    bits = tuple(bits)
    if bits and bits[0] != 0:
        return False
    return all(not (a and b) for a, b in zip(bits, bits[1:]))


def fib_words(m):
    """Words of length ``m-1`` starting with 0 (unless empty) with no ``11``, lex order."""
    if m < 1:
        raise InvalidInputError("index must be >= 1")
    length = m - 1
    if length == 0:
        return [()]
    words = [(0,)]
    for _ in range(length - 1):
        words = [w + (b,) for w in words for b in (0, 1) if not (b and w[-1])]
    return words


def g_words(n):
    """The Fibonacci words indexed by ``2n-3``, one per 1324-avoider on ``[n]``."""
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    return fib_words(2 * n - 3)


@dataclass(frozen=True)
class GBranch:
    """One step of the Fibonacci word recursion.

    ``branch`` is ``"01"`` (remainder indexed by ``n-1``) or ``"00"`` with
    ``k`` the number of ``10`` pairs stripped (remainder indexed by ``n-1-k``).
    """

    n: int
    branch: str
    k: Optional[int]
    remainder: tuple

    @property
    def child_n(self):
        return self.n - 1 if self.branch == "01" else self.n - 1 - self.k


def _check_g_word(w, n):
    if n < 2 or len(w) != 2 * n - 4 or not is_fib_word(w):
        raise InvalidInputError(f"{w} is not a Fibonacci word of length {2 * n - 4}")


def g_decompose(w, n):
    """Split a nonempty word of length ``2n-4`` by its leading block.

    Words starting ``01`` lose that prefix.  Words starting ``00`` lose it
    and the maximal run of ``10`` pairs right after it.  Lengths are even,
    so the remainder is empty or starts with 0.
    """
    w = as_bits(w)
    if n < 3:
        raise InvalidInputError("g_decompose needs n >= 3")
    _check_g_word(w, n)
    if w[:2] == (0, 1):
        return GBranch(n, "01", None, w[2:])
    k = 0
    i = 2
    while w[i:i + 2] == (1, 0):
        k += 1
        i += 2
    return GBranch(n, "00", k, w[i:])


def g_compose(branch):
    n = branch.n
    _check_g_word(branch.remainder, branch.child_n)
    if branch.branch == "01":
        w = (0, 1) + branch.remainder
    else:
        w = (0, 0) + (1, 0) * branch.k + branch.remainder
    _check_g_word(w, n)
    return w


@dataclass(frozen=True)
class Decomposition1324:
    n: int
    k: int
    child: CircularPermutation


def thm1_decompose(c):
    """Strip a 1324-avoider on ``[n]`` down to a smaller avoider.

    With ``n-1`` at position ``k <= n-2`` the first ``k`` letters are
    ``n-k, ..., n-1``; they are removed and ``n`` is relabelled ``n-k``.
    With ``k = n-1`` the final ``n`` is removed.
    """
    c = CircularPermutation(c)
    n = c.n
    if n < 3:
        raise InvalidInputError("thm1_decompose needs n >= 3")
    if contains_circular(c, P1324):
        raise InvalidInputError(f"{c} contains 1324")
    k = c.position(n - 1)
    if k == n - 1:
        return Decomposition1324(n, k, CircularPermutation(c[:-1]))
    assert c[:k] == tuple(range(n - k, n)), c
    return Decomposition1324(n, k, CircularPermutation(c[k:-1] + (n - k,)))


def thm1_compose(d):
    n, k, child = d.n, d.k, CircularPermutation(d.child)
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"position {k} outside 1..{n - 1}")
    if k == n - 1:
        if child.n != n - 1:
            raise InvalidInputError("child must live on [n-1]")
        return CircularPermutation(child + (n,))
    if child.n != n - k:
        raise InvalidInputError("child must live on [n-k]")
    return CircularPermutation(tuple(range(n - k, n)) + child[:-1] + (n,))


def fib_word_to_1324(w, n):
    """Map a word of :func:`g_words` ``(n)`` to a 1324-avoider on ``[n]``.

    The ``01`` branch pairs with ``n-1`` sitting just before ``n``; the
    ``00`` branch with ``k`` stripped pairs pairs with position ``k + 1``.
    """
    w = as_bits(w)
    _check_g_word(w, n)
    if n == 2:
        return CircularPermutation((1, 2))
    br = g_decompose(w, n)
    child = fib_word_to_1324(br.remainder, br.child_n)
    k = n - 1 if br.branch == "01" else br.k + 1
    return thm1_compose(Decomposition1324(n, k, child))


def avoider_1324_to_fib_word(c):
    c = CircularPermutation(c)
    n = c.n
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if n == 2:
        return ()
    d = thm1_decompose(c)
    rest = avoider_1324_to_fib_word(d.child)
    if d.k == n - 1:
        return g_compose(GBranch(n, "01", None, rest))
    return g_compose(GBranch(n, "00", d.k - 1, rest))


# -- words without exactly one 1, and 1342-avoiders ---------------------------

def is_a_word(bits):
    return sum(bits) != 1


def a_words(m):
    """0-1 words of length ``m`` whose number of 1s is not exactly one, lex order."""
    if m < 0:
        raise InvalidInputError("length must be >= 0")
    return [w for w in product((0, 1), repeat=m) if sum(w) != 1]


def thm2_word_to_perm(u):
    """Map a word of length ``n-1`` without exactly one 1 to a 1342-avoider on ``[n]``.

    A leading 0 places ``n-1`` first and recurses on the rest.  A leading 1
    sets ``k`` to the position of the next 1, then ``j`` to the position of
    the following 1 counted after position ``k`` (``n-k`` if there is none).
    The prefix is ``j..j+k-2``; the letters below it follow in increasing
    order at the end, and the letters above it are arranged from the bits
    after position ``k+j`` as a 213/231-avoider.
    """
    u = as_bits(u)
    if not is_a_word(u):
        raise InvalidInputError(f"{u} has exactly one 1")
    n = len(u) + 1
    if n == 1:
        return CircularPermutation((1,))
    if u[0] == 0:
        child = thm2_word_to_perm(u[1:])
        return CircularPermutation((n - 1,) + child[:-1] + (n,))
    k = u.index(1, 1) + 1
    tail = u[k:]
    j = tail.index(1) + 1 if 1 in tail else n - k
    w1 = tuple(range(j, j + k - 1))
    w3 = tuple(range(1, j))
    upper = range(j + k - 1, n - 1)
    w2 = prop1_bits_to_perm(u[k + j:], letters=upper) if len(upper) else ()
    return CircularPermutation(w1 + (n - 1,) + w2 + w3 + (n,))


def thm2_perm_to_word(c):
    c = CircularPermutation(c)
    n = c.n
    if contains_circular(c, P1342):
        raise InvalidInputError(f"{c} contains 1342")
    if n == 1:
        return ()
    k = c.position(n - 1)
    if k == 1:
        child = CircularPermutation(c[1:-1] + (n - 1,))
        return (0,) + thm2_perm_to_word(child)
    d = validate_structure_1342(c)
    assert d is not None, c
    head = (1,) + (0,) * (k - 2) + (1,)
    if not d.w2:
        return head + (0,) * (n - 1 - k)
    return head + (0,) * (d.j - 1) + (1,) + prop1_perm_to_bits(d.w2)


@dataclass(frozen=True)
class Decomposition1342:
    """``c = w1 + (n-1,) + w2 + w3 + (n,)`` with ``n-1`` at position ``k``."""

    n: int
    k: int
    j: int
    w1: tuple
    w2: tuple
    w3: tuple


def validate_structure_1342(c):
    """Check the shape forced on a 1342-avoider with ``n-1`` at position ``k >= 2``.

    ``w1`` must be an increasing run of consecutive letters starting at
    ``j``; the letters after ``n-1`` must be those above ``w1`` (a 213- and
    231-avoiding word ``w2``) followed by ``1..j-1`` in increasing order.
    Returns the decomposition, or ``None``.
    """
    c = CircularPermutation(c)
    n = c.n
    k = c.position(n - 1)
    if k < 2:
        return None
    w1 = c[:k - 1]
    j = w1[0]
    if w1 != tuple(range(j, j + k - 1)):
        return None
    middle = c[k:-1]
    split = 0
    while split < len(middle) and middle[split] > w1[-1]:
        split += 1
    w2, w3 = middle[:split], middle[split:]
    if w3 != tuple(range(1, j)):
        return None
    if w2 and (contains_linear(w2, P213) or contains_linear(w2, P231)):
        return None
    return Decomposition1342(n, k, j, w1, w2, w3)


@dataclass(frozen=True)
class Structure1234:
    """Shape of a 1234-avoider with ``n-1`` at position ``k >= 2``.

    For ``k = 2`` only ``a`` (the first letter) is set.  For ``k >= 3``,
    ``m`` and ``M`` are the extremes of the prefix, ``A`` its other letters,
    and ``B``, ``C``, ``D`` the letters after ``n-1`` below ``m``, between
    ``m`` and ``M``, and above ``M``.
    """

    n: int
    k: int
    tail: tuple
    a: Optional[int] = None
    m: Optional[int] = None
    M: Optional[int] = None
    A: frozenset = frozenset()
    B: frozenset = frozenset()
    C: frozenset = frozenset()
    D: frozenset = frozenset()

    @property
    def K(self):
        return len(self.A)


def _decreasing(seq):
    return all(x > y for x, y in zip(seq, seq[1:]))


def _decreasing_within(tail, letters):
    return _decreasing([x for x in tail if x in letters])


def validate_structure_1234(c):
    """Check the shape forced on a 1234-avoider with ``n-1`` at position ``k >= 2``.

    ``k = 2``: the tail letters above ``a`` decrease, and so do those below.
    ``k >= 3``: the prefix decreases (an increasing pair in it would close a
    1234 with ``n-1`` and ``n``); if ``C`` is nonempty the whole tail
    decreases, otherwise the ``B`` letters and the ``D`` letters each do.
    Returns the structure, or ``None``.
    """
    c = CircularPermutation(c)
    n = c.n
    k = c.position(n - 1)
    if k < 2:
        return None
    tail = c[k:-1]
    if k == 2:
        a = c[0]
        if not (_decreasing_within(tail, range(a + 1, n)) and _decreasing_within(tail, range(1, a))):
            return None
        return Structure1234(n, k, tail, a=a)
    w1 = c[:k - 1]
    if not _decreasing(w1):
        return None
    m, M = min(w1), max(w1)
    A = frozenset(w1) - {m, M}
    B = frozenset(range(1, m))
    C = frozenset(range(m + 1, M)) - A
    D = frozenset(range(M + 1, n - 1))
    if C:
        ok = _decreasing(tail)
    else:
        ok = _decreasing_within(tail, B) and _decreasing_within(tail, D)
    if not ok:
        return None
    return Structure1234(n, k, tail, m=m, M=M, A=A, B=B, C=C, D=D)
