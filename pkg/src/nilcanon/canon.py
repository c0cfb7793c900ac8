"""Canonical representatives: symmetric, F-stable, symplectic and orthogonal.

The symmetric form places a fixed 0/1 pattern in every block of the layout:

* J-chain: the central square block is the anti-diagonal identity J, and
  each outer pair carries [0 | J] (zero columns on the left).  These blocks
  compose to full rank in every characteristic.
* I-chain: a pair of inner dimension h inside outer dimension w >= h gets
  an anti-diagonal run split between the bottom-left and top-right corners.
  When h is odd and w > h the middle row must carry two ones; the pair
  composite then contains the entry 1 + 1, which is why such partitions
  admit no symmetric form in characteristic 2.

The F-stable variant replaces the doubled middle entries by a generator
"a" of F_{q^2} over F_q and its q-th power on the mirrored block; the
composite picks up a + a^q, the trace, which is arranged to be nonzero.

All constructors certify their output through the verify oracle and refuse
to return an uncertified matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import verify as _verify
from .errors import (
    BadPartition,
    CharacteristicTwo,
    FieldTooSmall,
    NotGeneric,
    SymmetricFormImpossible,
    TypeA,
)
from .exactfield import frobenius_q, quadratic_ext, rationals, trace_to_base
from .matrixcore import Mat
from .orbitstruct import LieType, Partition, block_layout, is_bad

VARIANT_SYMMETRIC = "symmetric"
VARIANT_F_STABLE = "f_stable"
VARIANT_SYMPLECTIC = "symplectic"
VARIANT_ORTHOGONAL = "orthogonal"


@dataclass(frozen=True)
class CanonicalForm:
    matrix: Mat
    mu: Partition
    lie_type: LieType
    variant: str
    certificate: object


@dataclass(frozen=True)
class StructureForm:
    """The bilinear form matrix fixing the classical algebra inside gl_n."""

    m: Mat
    lie_type: LieType


# ---------------------------------------------------------------------------
# block patterns (0-based local coordinates, dict position -> value tag)
#
# Value tags are integers 0/1 or the strings "alpha" / "alphaq", resolved at
# materialisation time.
# ---------------------------------------------------------------------------


def _i_pattern(h, w):
    """Symmetric pattern for an I-pair block of shape h x w (h <= w)."""
    ones = {}
    if h == 0:
        return ones
    if h == w:
        for i in range(h):
            ones[(i, h - 1 - i)] = 1
        return ones
    if h % 2 == 0:
        for k in range(1, h // 2 + 1):  # bottom-left run
            ones[(h - k, k - 1)] = 1
        for t in range(1, h // 2 + 1):  # top-right run
            ones[(h // 2 - t, w - h // 2 + t - 1)] = 1
        return ones
    m = (h + 1) // 2
    cstar = w + 1 - m
    for k in range(1, m + 1):  # bottom-left run, ending at the middle (m,m)
        ones[(h - k, k - 1)] = 1
    ones[(m - 1, cstar - 1)] = 1  # second middle-row entry
    for t in range(1, m):  # top-right run
        ones[(m - 1 - t, cstar - 1 + t)] = 1
    return ones


def _i_pattern_unitary(h, w):
    """F-stable variant: the doubled middle entry becomes the generator."""
    ones = dict(_i_pattern(h, w))
    if h % 2 == 1 and h < w:
        m = (h + 1) // 2
        cstar = w + 1 - m
        ones[(m - 1, cstar - 1)] = "alpha"
    return ones


def _i_pattern_asymmetric(h, w):
    """All-characteristics 0/1 pattern (not f-symmetric for odd h < w)."""
    ones = dict(_i_pattern(h, w))
    if h % 2 == 1 and h < w:
        m = (h + 1) // 2
        del ones[(m - 1, m - 1)]  # keep the (m, c*) entry only
    return ones


def _i_pattern_asymmetric_mirror(h, w):
    """The 180-degree rotation of the asymmetric pattern, used on the B side."""
    base = _i_pattern_asymmetric(h, w)
    if h % 2 == 0 or h == w:
        return base
    return {(h - 1 - i, w - 1 - j): v for (i, j), v in base.items()}


def _j_pattern(h, w):
    """[0 | J_h]: zero columns on the left, anti-diagonal ones on the right."""
    return {(i, w - 1 - i): 1 for i in range(h)}


def _mirror_tag(v):
    return "alphaq" if v == "alpha" else ("alpha" if v == "alphaq" else v)


def _grid_for_layout(layout, kind):
    """Ambient dict (row, col) 0-based -> tag, for one of the three variants.

    kind: "symmetric" | "unitary" | "asymmetric".
    """
    grid = {}

    def place_std(block, pattern):
        r0, c0 = block.row_range[0] - 1, block.col_range[0] - 1
        for (i, j), v in pattern.items():
            grid[(r0 + i, c0 + j)] = v

    def place_mirror(block, pattern, h, w):
        # pattern is in f-pullback coordinates: local (i, j) of the paired
        # A block corresponds to ambient (row0 + w-1-j, col0 + h-1-i) here
        r0, c0 = block.row_range[0] - 1, block.col_range[0] - 1
        for (i, j), v in pattern.items():
            grid[(r0 + w - 1 - j, c0 + h - 1 - i)] = _mirror_tag(v)

    for chain_name in ("I", "J"):
        chain = layout.chain(chain_name)
        for b in chain:
            if b.side == "C":
                place_std(b, {(i, b.width - 1 - i): 1 for i in range(b.width)})
                continue
            h, w = (b.shape if b.side == "A" else (b.width, b.height))
            if chain_name == "J":
                a_pat = _j_pattern(h, w)
                b_pat = a_pat
            elif kind == "symmetric":
                a_pat = _i_pattern(h, w)
                b_pat = a_pat
            elif kind == "unitary":
                a_pat = _i_pattern_unitary(h, w)
                b_pat = a_pat
            else:
                a_pat = _i_pattern_asymmetric(h, w)
                b_pat = _i_pattern_asymmetric_mirror(h, w)
            if b.side == "A":
                place_std(b, a_pat)
            else:
                place_mirror(b, b_pat, h, w)
    return grid


def _materialize(field, n, grid, alpha=None):
    rows = [[field.zero()] * n for _ in range(n)]
    one = field.one()
    for (i, j), v in grid.items():
        if v == "alpha":
            rows[i][j] = alpha
        elif v == "alphaq":
            rows[i][j] = frobenius_q(alpha)
        elif v == 1:
            rows[i][j] = one
        elif v == -1:
            rows[i][j] = -one
        else:
            rows[i][j] = field.from_int(v)
    return Mat(field, rows)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def structure_matrix(lie_type, field=None):
    """The bilinear form: [[0, J_l], [-J_l, 0]] for C, J_n for B and D."""
    if lie_type.letter == "A":
        raise TypeA("type A carries no bilinear form")
    field = field or rationals()
    n = lie_type.ambient_dim
    if lie_type.letter == "C":
        l = lie_type.rank
        z, o = field.zero(), field.one()
        rows = [[z] * n for _ in range(n)]
        for i in range(l):
            rows[i][n - 1 - i] = o
            rows[l + i][l - 1 - i] = -o
        return StructureForm(Mat(field, rows), lie_type)
    return StructureForm(Mat.antidiag_identity(field, n), lie_type)


def canonical_gl(mu, field):
    """The symmetric 0/1 canonical form for the orbit of mu in gl_n.

    Deterministic: identical inputs give an identical matrix.  Raises
    SymmetricFormImpossible when certification fails, which happens exactly
    for the characteristic-2 obstructions; the matrix is never emitted with
    a wrong certificate.
    """
    layout = block_layout(mu)
    grid = _grid_for_layout(layout, "symmetric")
    x = _materialize(field, mu.n, grid)
    cert = _verify.certify(x, mu)
    if cert.jordan_type == mu:
        assert cert.f_symmetric and cert.supported
        return CanonicalForm(x, mu, LieType("A"), VARIANT_SYMMETRIC, cert)
    fallback = _search_symmetric(mu, layout, field)
    if fallback is not None:
        cert = _verify.certify(fallback, mu)
        return CanonicalForm(fallback, mu, LieType("A"), VARIANT_SYMMETRIC, cert)
    raise SymmetricFormImpossible(
        f"no f-symmetric 0/1 representative of {mu} exists over {field!r} "
        f"(standard pattern gives Jordan type {cert.jordan_type})"
    )


_SEARCH_BIT_BUDGET = 20


def _search_symmetric(mu, layout, field):
    """Bounded exhaustive search over f-symmetric 0/1 supports on the layout.

    Free positions are the A-side blocks plus half of the central block;
    the B side is forced by symmetry.  Deterministic: positions are tried
    in a fixed order and the first certified assignment wins.
    """
    n = mu.n
    free = []
    for b in layout.blocks:
        if b.side == "A":
            free.extend((i - 1, j - 1) for (i, j) in b.positions())
        elif b.side == "C":
            for (i, j) in b.positions():
                mi, mj = n + 1 - j, n + 1 - i
                if (i, j) <= (mi, mj):
                    free.append((i - 1, j - 1))
    if len(free) > _SEARCH_BIT_BUDGET:
        return None
    for bits in range(1 << len(free)):
        grid = {}
        for t, (i, j) in enumerate(free):
            if bits >> t & 1:
                grid[(i, j)] = 1
                grid[(n - 1 - j, n - 1 - i)] = 1
        x = _materialize(field, n, grid)
        if _verify.supported_on(x, layout) and _verify.is_f_symmetric(x):
            if _verify.jordan_type(x) == mu:  # strictly upper, always nilpotent
                return x
    return None


def unitary_alpha(field):
    """Deterministic generator of F_{q^2} with nonzero trace to F_q."""
    alpha = field.gen()
    q = field.q_subfield_order
    if trace_to_base(alpha):
        return alpha
    for c in field.base.elements():
        cand = alpha + field.from_base(c)
        if trace_to_base(cand):
            return cand
    raise AssertionError("no trace-nonzero generator; impossible")


def canonical_unitary_nilpotent(mu, q):
    """The F-stable form over F_{q^2}: fixed by q-th powers composed with
    the anti-diagonal flip, valid in every characteristic.

    When no I-chain block has an odd row count this is the symmetric 0/1
    form read over F_{q^2}.
    """
    field = quadratic_ext(q)
    layout = block_layout(mu)
    alpha = unitary_alpha(field)
    grid = _grid_for_layout(layout, "unitary")
    x = _materialize(field, mu.n, grid, alpha=alpha)
    cert = _verify.certify(x, mu, q=q)
    if not (cert.jordan_type == mu and cert.f_stable and cert.supported):
        raise AssertionError(
            f"F-stable construction failed certification for {mu}, q={q}: {cert}"
        )
    return CanonicalForm(x, mu, LieType("A"), VARIANT_F_STABLE, cert)


def asymmetric_nilpotent(mu, field):
    """A 0/1 layout-supported representative valid in every characteristic.

    Not f-symmetric in general; this is the fallback the finite general
    linear groups use when characteristic 2 blocks the symmetric form.
    """
    layout = block_layout(mu)
    grid = _grid_for_layout(layout, "asymmetric")
    x = _materialize(field, mu.n, grid)
    cert = _verify.certify(x, mu)
    if cert.jordan_type != mu or not cert.supported:
        raise AssertionError(f"asymmetric construction failed for {mu}: {cert}")
    return CanonicalForm(x, mu, LieType("A"), VARIANT_SYMMETRIC, cert)


def canonical_classical(mu, lie_type, field):
    """Representative satisfying x^T M + M x = 0 for the type's form M.

    Type C rescales the bottom-right quadrant of the symmetric form to -1.
    Types B and D first replace the central block by identity blocks along
    the anti-diagonal with split signs (possible exactly when mu is good),
    then negate every B-side block.
    """
    if lie_type.letter == "A":
        raise TypeA("use canonical_gl for type A")
    lie_type.check_n(mu.n)
    bad, witness = is_bad(mu, lie_type)
    if bad:
        raise BadPartition(
            f"{mu} is not the Jordan type of any type-{lie_type.letter} orbit "
            f"(part {witness} has odd multiplicity)",
            witness=witness,
        )
    if field.characteristic == 2:
        raise CharacteristicTwo("classical adjustments need 2 invertible")
    layout = block_layout(mu)
    grid = dict(_grid_for_layout(layout, "symmetric"))
    n = mu.n
    if lie_type.letter == "C":
        l = lie_type.rank
        for (i, j), v in list(grid.items()):
            if i >= l:  # bottom-right quadrant rows (0-based)
                grid[(i, j)] = -v
    else:
        _reform_central_block(grid, layout)
        for b in layout.blocks:
            if b.side == "B":
                for (i, j) in b.positions():
                    if (i - 1, j - 1) in grid:
                        grid[(i - 1, j - 1)] = -grid[(i - 1, j - 1)]
    x = _materialize(field, n, grid)
    m = structure_matrix(lie_type, field).m
    cert = _verify.certify(x, mu, lie_m=m, lie_type=str(lie_type))
    if not (cert.jordan_type == mu and cert.lie_condition and cert.supported):
        raise AssertionError(f"classical construction failed for {mu}, {lie_type}: {cert}")
    variant = VARIANT_SYMPLECTIC if lie_type.letter == "C" else VARIANT_ORTHOGONAL
    return CanonicalForm(x, mu, lie_type, variant, cert)


def _reform_central_block(grid, layout):
    """Replace J in the central block by per-group reversed identity blocks
    with split signs, so the block negates under the anti-diagonal flip.

    Column group r of the central k1 x k1 block covers columns
    (k_{r+1}, k_r]; its size k_r - k_{r+1} is even for good partitions.
    """
    central = next((b for b in layout.blocks if b.side == "C"), None)
    if central is None:
        return
    k = layout.k_seq
    k1 = k[0]
    r0, c0 = central.row_range[0] - 1, central.col_range[0] - 1
    for (i, j) in list(grid):
        if r0 <= i < r0 + k1 and c0 <= j < c0 + k1:
            del grid[(i, j)]
    kk = list(k) + [0]
    for r in range(len(k)):
        hi, lo = kk[r], kk[r + 1]
        g = hi - lo
        for c in range(lo + 1, hi + 1):  # 1-based local column
            row = k1 - hi - lo + c  # 1-based local row
            sign = 1 if (c - lo) <= g // 2 else -1
            grid[(r0 + row - 1, c0 + c - 1)] = sign


def generic_representative(mu, field, seed):
    """A layout-supported matrix certified to lie in the dense orbit.

    Entries are drawn deterministically from the seed; on certification
    failure the seed is incremented, and FieldTooSmall is raised once the
    retry budget runs out (small prime fields may lack generic points).
    """
    layout = block_layout(mu)
    n = mu.n
    positions = sorted(layout.position_set())
    budget = 40
    for attempt in range(budget):
        rng = random.Random((seed + attempt) * 0x9E3779B1 + 7)
        rows = [[field.zero()] * n for _ in range(n)]
        for (i, j) in positions:
            if field.order is None:
                rows[i - 1][j - 1] = field.from_int(rng.randint(1, max(17, 2 * n * n)))
            elif field.order < 2 * n * n:
                # small fields: zeros must stay reachable or some orbits
                # have no sampleable generic point at all
                rows[i - 1][j - 1] = field.element_by_index(rng.randrange(field.order))
            else:
                rows[i - 1][j - 1] = field.element_by_index(rng.randrange(1, field.order))
        x = Mat(field, rows)
        if not positions:
            return x  # empty layout: the zero matrix is the orbit
        if _verify.in_dense_orbit(x, mu):
            return x
    raise FieldTooSmall(
        f"no generic representative of {mu} over {field!r} after {budget} seeds"
    )


def symmetrize(x, layout):
    """Run the elimination schedule on a generic x; the result must equal
    the symmetric canonical form exactly.  See symmetrize_with_script."""
    return symmetrize_with_script(x, layout)[0]


def symmetrize_with_script(x, layout):
    """Eliminate a generic layout-supported matrix into the canonical form.

    Every step is an elementary conjugation whose off-diagonal entries sit
    at weight-0 positions, so each intermediate matrix stays in the orbit
    and on the layout.  Returns (matrix, script); the script replays from
    the input to the output.  Raises NotGeneric when a pivot vanishes and
    CharacteristicTwo over fields where the odd fix-up step is impossible.
    """
    from ._elimination import Eliminator

    if x.field.characteristic == 2:
        raise CharacteristicTwo("the symmetrisation schedule divides by 2")
    if not _verify.supported_on(x, layout):
        raise NotGeneric("input is not supported on the block layout")
    eng = Eliminator(x, layout)
    result, script = eng.run()
    return result, script
