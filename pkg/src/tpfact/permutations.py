"""Permutations of 1..n with reduced-word machinery.

One-line notation throughout: Permutation((4, 3, 1, 2)) maps 1 to 4.
Composition is function composition, (w1 * w2)(i) = w1(w2(i)); right
multiplication by the simple transposition s_i swaps positions i, i+1
of the one-line word.
"""

from __future__ import annotations

from .errors import IndexOutOfRange, ValidationError
from .linalg import Matrix

_words_cache = {}


class Permutation:
    __slots__ = ("oneline",)

    def __init__(self, oneline):
        oneline = tuple(int(a) for a in oneline)
        if sorted(oneline) != list(range(1, len(oneline) + 1)):
            raise ValidationError(f"{oneline} is not a permutation of 1..{len(oneline)}")
        self.oneline = oneline

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n, i):
        """The simple transposition s_i in S_n."""
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"simple reflection index {i} outside [1, {n - 1}]")
        line = list(range(1, n + 1))
        line[i - 1], line[i] = line[i], line[i - 1]
        return cls(line)

    @classmethod
    def longest_element(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def from_word(cls, n, word):
        """Product s_{i1} ... s_{im} of simple transpositions."""
        line = list(range(1, n + 1))
        for i in word:
            if not 1 <= i <= n - 1:
                raise IndexOutOfRange(f"letter {i} outside [1, {n - 1}]")
            line[i - 1], line[i] = line[i], line[i - 1]
        return cls(line)

    @classmethod
    def from_string(cls, text):
        """Parse "4312" (single digits) or "10,3,1,2,...,4" forms."""
        text = text.strip()
        if "," in text:
            return cls(int(p) for p in text.split(","))
        if not text.isdigit():
            raise ValidationError(f"bad permutation literal {text!r}")
        return cls(int(ch) for ch in text)

    @property
    def n(self):
        return len(self.oneline)

    def __call__(self, i):
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"argument {i} outside [1, {self.n}]")
        return self.oneline[i - 1]

    def apply(self, indices):
        """Image of a set of indices, as a sorted tuple."""
        return tuple(sorted(self.oneline[i - 1] for i in indices))

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValidationError("cannot compose permutations of different sizes")
        return Permutation(self.oneline[b - 1] for b in other.oneline)

    def inverse(self):
        inv = [0] * self.n
        for i, a in enumerate(self.oneline, start=1):
            inv[a - 1] = i
        return Permutation(inv)

    def length(self):
        """Number of inversions."""
        line = self.oneline
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n)
                   if line[i] > line[j])

    def right_descents(self):
        line = self.oneline
        return [i for i in range(1, self.n) if line[i - 1] > line[i]]

    def reduced_words(self):
        """All reduced words, as a frozenset of tuples of letters.

        Depth-first search through length-decreasing simple reflections;
        memoized, so repeated queries across a session are cheap.
        """
        cached = _words_cache.get(self.oneline)
        if cached is not None:
            return cached
        if self.length() == 0:
            words = frozenset({()})
        else:
            words = set()
            for i in self.right_descents():
                shorter = self * Permutation.simple(self.n, i)
                for word in shorter.reduced_words():
                    words.add(word + (i,))
            words = frozenset(words)
        _words_cache[self.oneline] = words
        return words

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.oneline == other.oneline

    def __hash__(self):
        return hash(self.oneline)

    def __repr__(self):
        return f"Permutation({self.oneline})"

    def __str__(self):
        if self.n <= 9:
            return "".join(str(a) for a in self.oneline)
        return ",".join(str(a) for a in self.oneline)


def is_reduced(word, w):
    """Does the word multiply out to w with no cancellation?"""
    word = tuple(word)
    return Permutation.from_word(w.n, word) == w and len(word) == w.length()


def weak_order_leq(wp, w):
    """Left weak order: wp precedes w iff lengths add along wp^-1 w."""
    if wp.n != w.n:
        raise ValidationError("permutations must have the same size")
    return w.length() == wp.length() + (wp.inverse() * w).length()


def signed_representative(w):
    """Signed permutation matrix representing w in the general linear group.

    Start from the 0/1 matrix with entry 1 at (w(j), j); an entry turns
    into -1 when the number of nonzero entries strictly below and
    strictly to its left is odd.
    """
    n = w.n
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        i = w(j)
        below_left = sum(1 for jp in range(1, j) if w(jp) > i)
        rows[i - 1][j - 1] = -1 if below_left % 2 else 1
    return Matrix(rows)


def all_permutations(n):
    """All of S_n, in lexicographic one-line order."""
    from itertools import permutations as iperm
    return [Permutation(p) for p in iperm(range(1, n + 1))]
