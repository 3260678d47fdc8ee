"""Recovering factorization parameters from chamber minors.

All formulas here evaluate minors of the twisted matrix x' at the
unmodified chamber sets (I(C), J(C)) of the scheme's arrangement.

For a parameter sitting on the bullet of line i the answer is the
ratio Pi_i / Pi_{i-1}, where Pi_i multiplies the FE-chambers of level
i and divides by the EF-chambers.

For a parameter at an E- or F-crossing of level i, look at the four
big chambers of the crossing's own pseudoline family around it: above
(level i+1), below (level i-1), left and right (level i).  Each big
chamber contributes a Laurent monomial taken from one of its two ends;
which end is dictated by the bullets of lines i+1 (for the upper pair
above/left) and i (for the lower pair below/right): a bullet to the
right of the crossing selects the left-end monomial and vice versa.
The parameter is then (above * below) / (left * right).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroMinor, ZeroParameter
from .linalg import minor
from .schemes import E, F, H, build_arrangement
from .twist import twist


@dataclass(frozen=True)
class BigChamber:
    """Maximal crossing-free interval of one pseudoline family."""

    kind: str  # E or F
    level: int
    start: int
    end: int


def big_chambers(arrangement, kind, level):
    """Big chambers of the given family at one level, left to right."""
    scheme = arrangement.scheme
    l = scheme.length
    cuts = [p for p in range(1, l + 1)
            if scheme.word[p - 1].kind == kind
            and scheme.word[p - 1].index == level]
    bounds = [0] + cuts + [l + 1]
    return [BigChamber(kind, level, a, b) for a, b in zip(bounds, bounds[1:])]


def chamber_minor(xprime, chamber):
    """Evaluate Delta_{I(C), J(C)} at x', insisting it is nonzero."""
    value = minor(xprime, chamber.row_set, chamber.col_set)
    if value == 0:
        raise ZeroMinor(
            f"chamber minor at level {chamber.level}, span "
            f"({chamber.start}, {chamber.end}) vanishes")
    return value


def pi_monomial(arrangement, xprime, level):
    """The level monomial Pi_level(x'); Pi_0 is 1."""
    if level == 0:
        return Fraction(1)
    value = Fraction(1)
    for c in arrangement.chambers_at_level(level):
        if c.type == "FE":
            value *= chamber_minor(xprime, c)
        elif c.type == "EF":
            value /= chamber_minor(xprime, c)
    return value


def big_chamber_monomial(arrangement, xprime, big, side):
    """The left- or right-end Laurent monomial of a big chamber.

    Taking the right end: start from the minor of the small chamber
    finishing at the big chamber's right boundary, then for every small
    chamber of the same level strictly to the right multiply when its
    type is (other kind)(own kind) and divide when it is the reverse.
    The starting minor is replaced by 1 when an E-family big chamber
    reaches the right border; mirror everything for the left end, with
    the exemption there applying to the F-family at the left border.
    """
    own, other = big.kind, (E if big.kind == F else F)
    small = arrangement.chambers_at_level(big.level)
    value = Fraction(1)
    if side == "right":
        anchor = next(c for c in small if c.end == big.end)
        if not (own == E and anchor.end == arrangement.scheme.length + 1):
            value *= chamber_minor(xprime, anchor)
        for c in small:
            if c.start >= big.end:
                if c.type == other + own:
                    value *= chamber_minor(xprime, c)
                elif c.type == own + other:
                    value /= chamber_minor(xprime, c)
    elif side == "left":
        anchor = next(c for c in small if c.start == big.start)
        if not (own == F and anchor.start == 0):
            value *= chamber_minor(xprime, anchor)
        for c in small:
            if c.end <= big.start:
                if c.type == own + other:
                    value *= chamber_minor(xprime, c)
                elif c.type == other + own:
                    value /= chamber_minor(xprime, c)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return value


def _surrounding_big_chambers(arrangement, position):
    """Above, below, left, right big chambers of a crossing."""
    sym = arrangement.scheme.word[position - 1]
    level = sym.index
    above = next(b for b in big_chambers(arrangement, sym.kind, level + 1)
                 if b.start < position < b.end)
    below = next(b for b in big_chambers(arrangement, sym.kind, level - 1)
                 if b.start < position < b.end)
    same = big_chambers(arrangement, sym.kind, level)
    left = next(b for b in same if b.end == position)
    right = next(b for b in same if b.start == position)
    return above, below, left, right


def solve(scheme, x):
    """Invert the product map: parameters of x along the scheme.

    x must lie in the double cell of the scheme's type and be generic
    enough that every chamber minor of its twist is nonzero, which
    holds on the whole image of the product map over nonzero
    parameters.
    """
    u, v = scheme.cell_type
    xprime = twist(x, u, v)
    arrangement = build_arrangement(scheme)
    values = []
    for position, sym in enumerate(scheme.word, start=1):
        if sym.kind == H:
            t = (pi_monomial(arrangement, xprime, sym.index)
                 / pi_monomial(arrangement, xprime, sym.index - 1))
        else:
            above, below, left, right = _surrounding_big_chambers(
                arrangement, position)
            upper_side = ("left" if scheme.h_position(sym.index + 1) > position
                          else "right")
            lower_side = ("left" if scheme.h_position(sym.index) > position
                          else "right")
            t = (big_chamber_monomial(arrangement, xprime, above, upper_side)
                 * big_chamber_monomial(arrangement, xprime, below, lower_side)
                 / big_chamber_monomial(arrangement, xprime, left, upper_side)
                 / big_chamber_monomial(arrangement, xprime, right, lower_side))
        if t == 0:
            raise ZeroParameter(f"parameter at position {position} came out zero")
        values.append(t)
    return values


def chamber_values_from_parameters(scheme, values):
    """Chamber minors of the twist, straight from the parameters.

    Each chamber minor of x' is the inverse of a product of parameters:
    an E-crossing contributes when it sits at or beyond the chamber's
    right end and exactly one of its two lines runs below the chamber;
    an F-crossing mirrors that on the left; a bullet beyond the right
    end contributes when its E-line runs below the chamber, a bullet
    before the left end when its F-line does, and a bullet inside the
    chamber's span when its own line lies below the chamber's level.
    Returns a dict mapping each chamber to the value.
    """
    values = [Fraction(r) for r in values]
    arrangement = build_arrangement(scheme)
    out = {}
    for chamber in arrangement.chambers:
        selected = []
        for position, sym in enumerate(scheme.word, start=1):
            if sym.kind == H:
                if position >= chamber.end:
                    hit = (arrangement.e_line_through_bullet(position)
                           in chamber.col_set)
                elif position <= chamber.start:
                    hit = (arrangement.f_line_through_bullet(position)
                           in chamber.row_set)
                else:
                    hit = sym.index <= chamber.level
            elif sym.kind == E:
                hit = (position >= chamber.end
                       and sum(a in chamber.col_set
                               for a in arrangement.crossing_lines(position)) == 1)
            else:
                hit = (position <= chamber.start
                       and sum(a in chamber.row_set
                               for a in arrangement.crossing_lines(position)) == 1)
            if hit:
                selected.append(position)
        product = Fraction(1)
        for position in selected:
            if values[position - 1] == 0:
                raise ZeroParameter(
                    f"parameter at position {position} is zero but required")
            product *= values[position - 1]
        out[chamber] = 1 / product
    return out
