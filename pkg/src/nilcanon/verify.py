"""The independent oracle: everything the constructors emit is re-derived here.

Jordan type comes from ranks of powers alone; a matrix supported on the
block layout of mu lies in the dense orbit exactly when its Jordan type is
mu.  F-stability is membership in the fixed points of the twisted
Frobenius x -> (q-th powers of) the anti-diagonal transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotNilpotent, NotSupported, ShapeMismatch
from .orbitstruct import Partition, block_layout


@dataclass(frozen=True)
class Certificate:
    """Verification report; every field is recomputable from the matrix."""

    jordan_type: Partition
    f_symmetric: bool
    supported: bool
    lie_condition: Optional[bool] = None
    lie_type: Optional[str] = None
    f_stable: Optional[bool] = None
    q: Optional[int] = None
    dense_orbit: Optional[bool] = None

    def to_json(self):
        out = {
            "jordan_type": list(self.jordan_type.parts),
            "f_symmetric": self.f_symmetric,
            "supported": self.supported,
        }
        if self.lie_condition is not None:
            out["lie_condition"] = self.lie_condition
            out["lie_type"] = self.lie_type
        if self.f_stable is not None:
            out["f_stable"] = self.f_stable
            out["q"] = self.q
        if self.dense_orbit is not None:
            out["dense_orbit"] = self.dense_orbit
        return out


def jordan_type(x):
    """Partition of Jordan block sizes, from the rank sequence of powers.

    The number of blocks of size >= k equals rank(x^{k-1}) - rank(x^k).
    Raises NotNilpotent when x^n != 0.
    """
    n = x.rows
    ranks = [n]
    p = x
    for _ in range(n):
        r = p.rank()
        ranks.append(r)
        if r == 0:
            break
        p = p * x
    if ranks[-1] != 0:
        raise NotNilpotent("matrix is not nilpotent")
    diffs = [ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]
    # diffs[k-1] = number of blocks of size >= k; its conjugate is the type
    parts = []
    for size in range(len(diffs), 0, -1):
        parts.extend([size] * (diffs[size - 1] - (diffs[size] if size < len(diffs) else 0)))
    return Partition(tuple(sorted(parts, reverse=True)))


def is_f_symmetric(x):
    return x.antidiag_transpose() == x


def supported_on(x, layout):
    """True when every nonzero entry of x sits inside a layout block."""
    allowed = layout.position_set()
    for i in range(x.rows):
        for j in range(x.cols):
            if x.entries[i][j] and (i + 1, j + 1) not in allowed:
                return False
    return True


def in_dense_orbit(x, mu):
    """True iff a layout-supported x has Jordan type exactly mu."""
    layout = block_layout(mu)
    if x.rows != mu.n or x.cols != mu.n:
        raise NotSupported(f"matrix is {x.rows}x{x.cols}, layout wants {mu.n}")
    if not supported_on(x, layout):
        raise NotSupported("matrix has entries outside the block layout")
    try:
        return jordan_type(x) == mu
    except NotNilpotent:
        return False


def satisfies_lie_condition(x, m):
    """Exact test of x^T m + m x = 0."""
    if x.rows != x.cols or (x.rows, x.cols) != (m.rows, m.cols):
        raise ShapeMismatch("condition needs square matrices of equal size")
    return (x.transpose() * m + m * x).is_zero()


def is_F_stable(x, q):
    """Fixed by the twisted map: q-th powers composed with the anti-diagonal flip."""
    from .springer import frobenius_apply, unitary_frobenius

    return frobenius_apply(unitary_frobenius(q), x, side="lie") == x


def certify(x, mu, *, lie_m=None, lie_type=None, q=None):
    """Full certificate for a constructed representative."""
    layout = block_layout(mu)
    jt = jordan_type(x)
    cert = dict(
        jordan_type=jt,
        f_symmetric=is_f_symmetric(x),
        supported=supported_on(x, layout),
        dense_orbit=(jt == mu),
    )
    if lie_m is not None:
        cert["lie_condition"] = satisfies_lie_condition(x, lie_m)
        cert["lie_type"] = lie_type
    if q is not None:
        cert["f_stable"] = is_F_stable(x, q)
        cert["q"] = q
    return Certificate(**cert)
