"""Products of elementary Jacobi matrices along a scheme.

An e<i> symbol with parameter t contributes I + t E_{i,i+1}, an f<i>
symbol I + t E_{i+1,i}, and an h<j> symbol the diagonal matrix that
multiplies the jth coordinate by t (so its parameter must be nonzero).
The product map sends a parameter vector to the product of these
factors in word order.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch, BadToken, ZeroDiagonal
from .linalg import Matrix
from .schemes import E, F, H, FactorizationScheme, SchemeSymbol


def elementary(n, symbol, t):
    """The elementary Jacobi matrix of one scheme symbol."""
    t = Fraction(t)
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    i = symbol.index
    if symbol.kind == E:
        if not 1 <= i <= n - 1:
            raise BadToken(f"{symbol.token} invalid for n={n}")
        rows[i - 1][i] = t
    elif symbol.kind == F:
        if not 1 <= i <= n - 1:
            raise BadToken(f"{symbol.token} invalid for n={n}")
        rows[i][i - 1] = t
    elif symbol.kind == H:
        if not 1 <= i <= n:
            raise BadToken(f"{symbol.token} invalid for n={n}")
        if t == 0:
            raise ZeroDiagonal(f"{symbol.token} requires a nonzero parameter")
        rows[i - 1][i - 1] = t
    else:
        raise BadToken(f"unknown symbol kind {symbol.kind!r}")
    return Matrix(rows)


def product(scheme, values):
    """Multiply out the scheme at the given parameter vector."""
    values = [Fraction(v) for v in values]
    if len(values) != scheme.length:
        raise ArityMismatch(
            f"{len(values)} parameters for a length-{scheme.length} scheme")
    result = Matrix.identity(scheme.n)
    for sym, t in zip(scheme.word, values):
        result = result * elementary(scheme.n, sym, t)
    return result


def commute_h(scheme, values, position):
    """Swap an adjacent pair involving a circled symbol, fixing the product.

    position is 1-based and names the left member of the pair.  The
    parameter updates follow the commutation rules: pushing h<j> left
    through e<i> divides the e-parameter by the h-parameter when j = i
    and multiplies it when j = i+1, and the other way around for f<i>;
    the symmetric rules apply when pushing h<j> right.  Pairs whose
    indices do not interact commute with no parameter change.
    """
    values = [Fraction(v) for v in values]
    if len(values) != scheme.length:
        raise ArityMismatch(
            f"{len(values)} parameters for a length-{scheme.length} scheme")
    if not 1 <= position <= scheme.length - 1:
        raise BadToken(f"position {position} has no right neighbor")
    a_sym = scheme.word[position - 1]
    b_sym = scheme.word[position]
    a, b = values[position - 1], values[position]
    if (a_sym.kind == H and a == 0) or (b_sym.kind == H and b == 0):
        raise ZeroDiagonal("circled symbols require nonzero parameters")

    if a_sym.kind == H and b_sym.kind == H:
        new_a, new_b = b, a
    elif a_sym.kind in (E, F) and b_sym.kind == H:
        i, j = a_sym.index, b_sym.index
        if j == i:
            moved = a / b if a_sym.kind == E else a * b
        elif j == i + 1:
            moved = a * b if a_sym.kind == E else a / b
        else:
            moved = a
        new_a, new_b = b, moved
    elif a_sym.kind == H and b_sym.kind in (E, F):
        j, i = a_sym.index, b_sym.index
        if j == i:
            moved = b * a if b_sym.kind == E else b / a
        elif j == i + 1:
            moved = b / a if b_sym.kind == E else b * a
        else:
            moved = b
        new_a, new_b = moved, a
    else:
        raise BadToken(
            f"pair ({a_sym.token}, {b_sym.token}) has no circled symbol")

    word = list(scheme.word)
    word[position - 1], word[position] = b_sym, a_sym
    values[position - 1], values[position] = new_a, new_b
    return FactorizationScheme(scheme.n, tuple(word)), values
