"""The twist map between double cells.

For x in the double cell of (u, v) the twisted matrix is

    x' = d0 [x^T ubar]_+ ubar^T (x^T)^{-1} vibar [vibar^T x^T]_- d0^{-1}

where ubar and vibar are the signed representatives of u and v^{-1},
d0 alternates +1, -1 on the diagonal, and [z]_- , [z]_+ are the unit
lower and unit upper factors of the Gaussian decomposition of z.  The
twist lands in the double cell of (u^{-1}, v^{-1}) and is inverted by
the twist for that cell; it preserves total nonnegativity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bruhat import double_cell_of
from .errors import DecompositionFailure, NotInG0, WrongCell
from .linalg import Matrix, inverse, ldu_decompose
from .permutations import Permutation, signed_representative


def alternating_diagonal(n):
    return Matrix.diagonal([(-1) ** i for i in range(n)])


@dataclass(frozen=True)
class TwistContext:
    """Fixed ingredients of the twist for one double cell."""

    u: Permutation
    v: Permutation
    ubar: Matrix = field(init=False)
    vibar: Matrix = field(init=False)
    d0: Matrix = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "ubar", signed_representative(self.u))
        object.__setattr__(self, "vibar",
                           signed_representative(self.v.inverse()))
        object.__setattr__(self, "d0", alternating_diagonal(self.u.n))


def _unit_upper_factor(z):
    try:
        _, _, upper = ldu_decompose(z)
    except NotInG0 as exc:
        raise DecompositionFailure(f"no Gaussian decomposition: {exc}") from exc
    return upper

def _unit_lower_factor(z):
    try:
        lower, _, _ = ldu_decompose(z)
    except NotInG0 as exc:
        raise DecompositionFailure(f"no Gaussian decomposition: {exc}") from exc
    return lower


def twist(x, u, v):
    """Twist x, which must lie in the double cell of (u, v)."""
    cell = double_cell_of(x)
    if cell != (u, v):
        raise WrongCell(
            f"matrix lies in the double cell of ({cell[0]}, {cell[1]}), "
            f"not ({u}, {v})")
    ctx = TwistContext(u, v)
    xt = x.transpose()
    left = _unit_upper_factor(xt * ctx.ubar)
    right = _unit_lower_factor(ctx.vibar.transpose() * xt)
    middle = ctx.ubar.transpose() * inverse(xt) * ctx.vibar
    return ctx.d0 * left * middle * right * inverse(ctx.d0)


def twist_roundtrip(x, u, v):
    """Apply the twist and then the twist of the image cell."""
    return twist(twist(x, u, v), u.inverse(), v.inverse())
