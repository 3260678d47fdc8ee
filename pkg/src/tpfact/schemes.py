"""Factorization schemes and their double pseudoline arrangements.

A scheme over GL_n is a word in symbols of three kinds: e<i> (an
unbarred letter, a crossing of the E-family at level i), f<i> (a barred
letter, an F-crossing at level i), and h<j> (a circled letter, a bullet
on the jth horizontal line).  The e-subword must be a reduced word for
some permutation v, the f-subword a reduced word for some u, and the
h-indices a permutation of 1..n; the pair (u, v) is the type of the
scheme.

The arrangement drawn from a scheme has the E-pseudolines labelled 1..n
bottom-up at the left border and the F-pseudolines labelled 1..n
bottom-up at the right border.  Level-j crossings split the strip
between the jth and (j+1)st horizontal lines into chambers; together
with the bottom and top chambers there are l+1 of them, where l is the
length of the word.  Each chamber C carries the pair (I(C), J(C)):
the labels of the F-lines, respectively E-lines, that run below it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (BadHPart, BadToken, MoveNotApplicable, NotReducedE,
                     NotReducedF)
from .permutations import Permutation, is_reduced

E, F, H = "E", "F", "H"

_TOKEN_RE = re.compile(r"([efh])(\d+)$")


@dataclass(frozen=True)
class SchemeSymbol:
    kind: str  # one of E, F, H
    index: int

    @classmethod
    def parse(cls, token):
        m = _TOKEN_RE.match(token)
        if not m:
            raise BadToken(f"bad scheme token {token!r}")
        kind = {"e": E, "f": F, "h": H}[m.group(1)]
        return cls(kind, int(m.group(2)))

    @property
    def token(self):
        return f"{self.kind.lower()}{self.index}"


@dataclass(frozen=True)
class FactorizationScheme:
    """A validated scheme word over GL_n."""

    n: int
    word: tuple

    @classmethod
    def make(cls, n, word):
        word = tuple(word)
        scheme = cls(n, word)
        scheme.validate()
        return scheme

    def validate(self):
        n = self.n
        h_indices = []
        for sym in self.word:
            if sym.kind == H:
                if not 1 <= sym.index <= n:
                    raise BadHPart(f"h-index {sym.index} outside [1, {n}]")
                h_indices.append(sym.index)
            else:
                if not 1 <= sym.index <= n - 1:
                    raise BadToken(
                        f"{sym.token} has level outside [1, {n - 1}] for n={n}")
        if sorted(h_indices) != list(range(1, n + 1)):
            raise BadHPart(
                f"h-part {h_indices} is not a permutation of 1..{n}")
        e_word = self.e_subword
        if not is_reduced(e_word, Permutation.from_word(n, e_word)):
            raise NotReducedE(f"e-subword {e_word} is not reduced")
        f_word = self.f_subword
        if not is_reduced(f_word, Permutation.from_word(n, f_word)):
            raise NotReducedF(f"f-subword {f_word} is not reduced")

    @property
    def length(self):
        return len(self.word)

    @property
    def e_subword(self):
        return tuple(s.index for s in self.word if s.kind == E)

    @property
    def f_subword(self):
        return tuple(s.index for s in self.word if s.kind == F)

    @property
    def h_order(self):
        return tuple(s.index for s in self.word if s.kind == H)

    @property
    def u(self):
        return Permutation.from_word(self.n, self.f_subword)

    @property
    def v(self):
        return Permutation.from_word(self.n, self.e_subword)

    @property
    def cell_type(self):
        return (self.u, self.v)

    def symbol(self, position):
        """1-based access into the word."""
        if not 1 <= position <= self.length:
            raise BadToken(f"position {position} outside [1, {self.length}]")
        return self.word[position - 1]

    def h_position(self, line):
        """Word position of the bullet on the given horizontal line."""
        for p, sym in enumerate(self.word, start=1):
            if sym.kind == H and sym.index == line:
                return p
        raise BadHPart(f"no h{line} in scheme")

    def __str__(self):
        return " ".join(s.token for s in self.word)


def parse_scheme(text):
    """Parse a whitespace-separated token string into a scheme.

    The size n is read off the h-part, which must be a permutation of
    1..n; e/f levels are then checked against it.
    """
    tokens = text.split()
    if not tokens:
        raise BadToken("empty scheme")
    symbols = [SchemeSymbol.parse(t) for t in tokens]
    n = sum(1 for s in symbols if s.kind == H)
    if n == 0:
        raise BadHPart("scheme has no h-part")
    return FactorizationScheme.make(n, symbols)


# ---------------------------------------------------------------------------
# arrangements


@dataclass(frozen=True)
class Chamber:
    """A chamber of the double arrangement.

    start/end are word positions bounding its horizontal extent, with 0
    for the left border and l+1 for the right border.  left_kind and
    right_kind are the kinds of the bounding crossings; the borders act
    as a fictitious E-crossing on the left and F-crossing on the right.
    row_set is I(C) (F-lines below), col_set is J(C) (E-lines below).
    """

    level: int
    start: int
    end: int
    left_kind: str
    right_kind: str
    row_set: tuple
    col_set: tuple

    @property
    def type(self):
        return self.left_kind + self.right_kind

    @property
    def sets(self):
        return (self.row_set, self.col_set)


class Arrangement:
    """The double pseudoline arrangement of a scheme.

    e_states[p] / f_states[p] give, for each word position p in 0..l,
    the tuple of line labels at heights 1..n after the first p symbols.
    E-lines start as 1..n on the left; F-lines end as 1..n on the right.
    """

    def __init__(self, scheme):
        self.scheme = scheme
        self.n = scheme.n
        l = scheme.length
        states = [tuple(range(1, self.n + 1))]
        for sym in scheme.word:
            cur = list(states[-1])
            if sym.kind == E:
                i = sym.index
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
            states.append(tuple(cur))
        self.e_states = states
        rstates = [tuple(range(1, self.n + 1))]
        for sym in reversed(scheme.word):
            cur = list(rstates[-1])
            if sym.kind == F:
                i = sym.index
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
            rstates.append(tuple(cur))
        self.f_states = rstates[::-1]
        self.chambers = self._build_chambers()
        self._by_level = {}
        for c in self.chambers:
            self._by_level.setdefault(c.level, []).append(c)

    def _build_chambers(self):
        scheme = self.scheme
        l = scheme.length
        chambers = []
        full = tuple(range(1, self.n + 1))
        chambers.append(Chamber(0, 0, l + 1, E, F, (), ()))
        for level in range(1, self.n):
            cuts = [p for p in range(1, l + 1)
                    if scheme.word[p - 1].kind in (E, F)
                    and scheme.word[p - 1].index == level]
            bounds = [0] + cuts + [l + 1]
            for a, b in zip(bounds, bounds[1:]):
                left_kind = E if a == 0 else scheme.word[a - 1].kind
                right_kind = F if b == l + 1 else scheme.word[b - 1].kind
                row_set = tuple(sorted(self.f_states[a][:level]))
                col_set = tuple(sorted(self.e_states[a][:level]))
                chambers.append(
                    Chamber(level, a, b, left_kind, right_kind, row_set, col_set))
        chambers.append(Chamber(self.n, 0, l + 1, E, F, full, full))
        return chambers

    def chambers_at_level(self, level):
        return list(self._by_level.get(level, []))

    def chamber_spanning(self, level, position):
        """The level chamber whose open span contains the given position."""
        for c in self._by_level[level]:
            if c.start < position < c.end:
                return c
        raise KeyError((level, position))

    def crossing_lines(self, position):
        """Labels of the two pseudolines meeting at an E/F crossing."""
        sym = self.scheme.word[position - 1]
        i = sym.index
        if sym.kind == E:
            state = self.e_states[position - 1]
        elif sym.kind == F:
            state = self.f_states[position - 1]
        else:
            raise BadToken(f"position {position} holds {sym.token}, not a crossing")
        return (state[i - 1], state[i])

    def e_line_through_bullet(self, position):
        """Label of the E-line running through the bullet at this position."""
        sym = self.scheme.word[position - 1]
        if sym.kind != H:
            raise BadToken(f"position {position} holds {sym.token}, not a bullet")
        return self.e_states[position][sym.index - 1]

    def f_line_through_bullet(self, position):
        sym = self.scheme.word[position - 1]
        if sym.kind != H:
            raise BadToken(f"position {position} holds {sym.token}, not a bullet")
        return self.f_states[position][sym.index - 1]


def build_arrangement(scheme):
    return Arrangement(scheme)


def chamber_minor_family(scheme):
    """The minors attached to a scheme: (u I(C), v^-1 J(C)) per chamber.

    The bottom chamber is skipped (its minor is the constant 1); the
    remaining l chambers are listed by level and then left to right.
    """
    arr = build_arrangement(scheme)
    u = scheme.u
    vinv = scheme.v.inverse()
    family = []
    for c in arr.chambers:
        if c.level == 0:
            continue
        family.append((u.apply(c.row_set), vinv.apply(c.col_set)))
    return family


def isotopy_key(scheme):
    """Sorted multiset of chamber set pairs; equal keys mean isotopic."""
    arr = build_arrangement(scheme)
    return tuple(sorted(c.sets for c in arr.chambers))


# ---------------------------------------------------------------------------
# moves

TRIVIAL2, BRAID3, MIXED2 = "trivial2", "braid3", "mixed2"


@dataclass(frozen=True)
class Move:
    kind: str
    position: int  # 1-based position of the leftmost symbol involved


def _trivial2_ok(a, b):
    if a.kind == H or b.kind == H:
        return not (a.kind == H and b.kind == H and a.index == b.index)
    if a.kind == b.kind:
        return abs(a.index - b.index) >= 2
    return a.index != b.index


def _braid3_ok(a, b, c):
    return (a.kind == c.kind and a.kind in (E, F) and b.kind == a.kind
            and a.index == c.index and abs(a.index - b.index) == 1)


def _mixed2_ok(a, b):
    return {a.kind, b.kind} == {E, F} and a.index == b.index


def apply_move(scheme, move):
    """Apply a move, returning a new scheme of the same type."""
    word = list(scheme.word)
    p = move.position
    if move.kind == TRIVIAL2:
        if not (1 <= p <= len(word) - 1 and _trivial2_ok(word[p - 1], word[p])):
            raise MoveNotApplicable(f"trivial2 at {p} does not apply")
        word[p - 1], word[p] = word[p], word[p - 1]
    elif move.kind == MIXED2:
        if not (1 <= p <= len(word) - 1 and _mixed2_ok(word[p - 1], word[p])):
            raise MoveNotApplicable(f"mixed2 at {p} does not apply")
        word[p - 1], word[p] = word[p], word[p - 1]
    elif move.kind == BRAID3:
        if not (1 <= p <= len(word) - 2
                and _braid3_ok(word[p - 1], word[p], word[p + 1])):
            raise MoveNotApplicable(f"braid3 at {p} does not apply")
        a, b = word[p - 1], word[p]
        word[p - 1], word[p], word[p + 1] = b, a, b
    else:
        raise MoveNotApplicable(f"unknown move kind {move.kind!r}")
    return FactorizationScheme(scheme.n, tuple(word))


def available_moves(scheme):
    word = scheme.word
    moves = []
    for p in range(1, len(word)):
        a, b = word[p - 1], word[p]
        if _trivial2_ok(a, b):
            moves.append(Move(TRIVIAL2, p))
        if _mixed2_ok(a, b):
            moves.append(Move(MIXED2, p))
    for p in range(1, len(word) - 1):
        if _braid3_ok(word[p - 1], word[p], word[p + 1]):
            moves.append(Move(BRAID3, p))
    return moves


# ---------------------------------------------------------------------------
# isotopy type enumeration


@dataclass(frozen=True)
class IsotopyNode:
    key: tuple
    family: tuple  # chamber minor family, sorted
    scheme: FactorizationScheme


class IsotopyGraph:
    """Isotopy classes of schemes of one type, with move adjacency."""

    def __init__(self, nodes, edges):
        self.nodes = nodes  # list of IsotopyNode, sorted by key
        self.edges = edges  # set of (i, j) index pairs, i < j
        self._index = {node.key: k for k, node in enumerate(nodes)}

    def index_of(self, key):
        return self._index[key]

    def neighbors(self, k):
        out = set()
        for i, j in self.edges:
            if i == k:
                out.add(j)
            elif j == k:
                out.add(i)
        return out

    def is_connected(self):
        if not self.nodes:
            return True
        seen = {0}
        frontier = [0]
        while frontier:
            k = frontier.pop()
            for m in self.neighbors(k):
                if m not in seen:
                    seen.add(m)
                    frontier.append(m)
        return len(seen) == len(self.nodes)


def seed_scheme(u, v):
    """Some scheme of type (u, v): e-part, then f-part, then h1..hn."""
    n = u.n
    e_word = min(v.reduced_words())
    f_word = min(u.reduced_words())
    word = ([SchemeSymbol(E, i) for i in e_word]
            + [SchemeSymbol(F, i) for i in f_word]
            + [SchemeSymbol(H, j) for j in range(1, n + 1)])
    return FactorizationScheme.make(n, word)


def enumerate_isotopy_types(u, v):
    """Breadth-first search of the move graph, quotiented by isotopy.

    Walks every scheme of type (u, v) reachable by trivial2, braid3 and
    mixed2 moves; braid3/mixed2 steps that land in a different isotopy
    class contribute the graph's edges.
    """
    if u.n != v.n:
        raise BadToken("u and v must have the same size")
    start = seed_scheme(u, v)
    word_keys = {}
    key_info = {}
    edges = set()

    def key_of(scheme):
        key = word_keys.get(scheme.word)
        if key is None:
            key = isotopy_key(scheme)
            word_keys[scheme.word] = key
            if key not in key_info:
                key_info[key] = (sorted(chamber_minor_family(scheme)), scheme)
        return key

    key_of(start)
    frontier = [start]
    while frontier:
        scheme = frontier.pop()
        key = word_keys[scheme.word]
        for move in available_moves(scheme):
            neighbor = apply_move(scheme, move)
            fresh = neighbor.word not in word_keys
            nkey = key_of(neighbor)
            if move.kind in (BRAID3, MIXED2) and nkey != key:
                edges.add(frozenset((key, nkey)))
            if fresh:
                frontier.append(neighbor)
    nodes = [IsotopyNode(key, tuple(fam), sch)
             for key, (fam, sch) in sorted(key_info.items())]
    index = {node.key: k for k, node in enumerate(nodes)}
    edge_idx = {tuple(sorted((index[a], index[b]))) for a, b in
                (tuple(e) for e in edges)}
    return IsotopyGraph(nodes, edge_idx)
