"""Dense exact matrices over one field, plus the elementary-conjugation calculus.

Matrices are immutable values: every operation returns a fresh Mat.  The
anti-diagonal transpose f (entry (i,j) -> entry (n+1-j, n+1-i)) is the
symmetry all canonical forms are phrased in; "symmetric" downstream always
means fixed by f.

Rank over the rationals clears denominators row by row and then runs
fraction-free (Bareiss) elimination, which keeps intermediate integers small
on the generic representatives produced elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, NotSquare, ShapeMismatch, Singular, ZeroScale
from .exactfield import rationals


class Mat:
    """Immutable dense matrix; entries all live in .field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ShapeMismatch("matrices must have at least one row and column")
        w = len(entries[0])
        if any(len(r) != w for r in entries):
            raise ShapeMismatch("ragged rows")
        self.field = field
        self.rows = len(entries)
        self.cols = w
        self.entries = entries

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zeros(field, rows, cols):
        z = field.zero()
        return Mat(field, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero(), field.one()
        return Mat(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def antidiag_identity(field, n):
        """J_n: ones on the anti-diagonal, zeros elsewhere."""
        z, o = field.zero(), field.one()
        return Mat(field, [[o if i + j == n - 1 else z for j in range(n)] for i in range(n)])

    @staticmethod
    def from_int_rows(field, rows):
        return Mat(field, [[field.from_int(v) for v in row] for row in rows])

    # -- basics -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and other.field == self.field
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"Mat[{body}]"

    def _check_same_field(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(not v for row in self.entries for v in row)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition needs equal shapes")
        return Mat(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("subtraction needs equal shapes")
        return Mat(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return Mat(self.field, [[-v for v in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        z = self.field.zero()
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if a]
            orow = []
            for col in bt:
                acc = z
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return Mat(self.field, out)

    def scale(self, scalar):
        return Mat(self.field, [[scalar * v for v in row] for row in self.entries])

    def power(self, k):
        if not self.is_square():
            raise NotSquare("powers need a square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Mat.identity(self.field, self.rows)
        base = self
        while k > 0:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self):
        return Mat(self.field, zip(*self.entries))

    def antidiag_transpose(self):
        """The involution f: entry (i,j) of the result is entry (n-1-j, n-1-i)."""
        if not self.is_square():
            raise NotSquare("f needs a square matrix")
        n = self.rows
        return Mat(
            self.field,
            [[self.entries[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)],
        )

    # -- rank and inverse -------------------------------------------------------

    def rank(self):
        if self.field == rationals():
            return _rank_bareiss(self.entries)
        return _rank_gauss(self.field, self.entries)

    def _is_upper_triangular(self):
        return all(
            not self.entries[i][j] for i in range(self.rows) for j in range(i)
        )

    def inverse(self):
        if not self.is_square():
            raise NotSquare("inverse needs a square matrix")
        n = self.rows
        F = self.field
        if self._is_upper_triangular():
            return self._inverse_upper()
        aug = [list(self.entries[i]) + [F.one() if j == i else F.zero() for j in range(n)]
               for i in range(n)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if aug[i][c]), None)
            if piv is None:
                raise Singular("matrix is singular")
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = F.one() / aug[r][c]
            aug[r] = [v * inv for v in aug[r]]
            for i in range(n):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            r += 1
        return Mat(F, [row[n:] for row in aug])

    def _inverse_upper(self):
        """Back substitution; diagonal must be invertible."""
        n = self.rows
        F = self.field
        e = self.entries
        diag = []
        for i in range(n):
            if not e[i][i]:
                raise Singular("matrix is singular")
            diag.append(F.one() / e[i][i])
        inv = [[F.zero()] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = diag[j]
            for i in range(j - 1, -1, -1):
                acc = F.zero()
                for k in range(i + 1, j + 1):
                    if e[i][k] and inv[k][j]:
                        acc = acc + e[i][k] * inv[k][j]
                if acc:
                    inv[i][j] = -diag[i] * acc
        return Mat(F, inv)


def _rank_gauss(field, entries):
    m = [list(row) for row in entries]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one() / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _rank_bareiss(entries):
    # clear denominators per row (rank-invariant), then fraction-free elimination
    m = []
    for row in entries:
        den = 1
        for v in row:
            den = den * v.denominator // _gcd(den, v.denominator)
        m.append([int(v * den) for v in row])
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for k in range(cols - 1, c - 1, -1):
                m[i][k] = (m[i][k] * m[r][c] - m[i][c] * m[r][k]) // prev
        prev = m[r][c]
        r += 1
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a) or 1


# ---------------------------------------------------------------------------
# elementary conjugations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ElementaryOp:
    """One elementary row operation, applied to a matrix by conjugation.

    Indices are 1-based ambient row numbers.  kind is one of:
      "swap"  -- exchange rows i and j          (l = permutation matrix)
      "scale" -- multiply row i by lam, lam != 0 (l = diag(..., lam, ...))
      "add"   -- add lam times row j to row i    (l = I + lam * e_ij)
    Conjugation l*x*l^{-1} performs the row operation together with the
    inverse operation on the matching columns.
    """

    kind: str
    i: int
    j: int = 0
    lam: object = None

    def __str__(self):
        if self.kind == "swap":
            return f"swap r{self.i} r{self.j}"
        if self.kind == "scale":
            return f"scale r{self.i} by {self.lam}"
        return f"add {self.lam}*r{self.j} to r{self.i}"


def elementary_conjugate(x, op):
    """Return l * x * l^{-1} for the elementary matrix l named by op."""
    if not x.is_square():
        raise NotSquare("conjugation needs a square matrix")
    n = x.rows
    m = [list(row) for row in x.entries]
    i, j = op.i - 1, op.j - 1
    if op.kind == "swap":
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
    elif op.kind == "scale":
        lam = op.lam
        if not lam:
            raise ZeroScale("scaling by zero is not invertible")
        inv = x.field.one() / lam
        m[i] = [lam * v for v in m[i]]
        for row in m:
            row[i] = row[i] * inv
    elif op.kind == "add":
        lam = op.lam
        if i == j:
            raise ValueError("add needs two distinct rows")
        # x (I - lam e_ij): column j loses lam * column i
        for row in m:
            row[j] = row[j] - lam * row[i]
        # (I + lam e_ij) (...): row i gains lam * row j
        m[i] = [a + lam * b for a, b in zip(m[i], m[j])]
    else:
        raise ValueError(f"unknown elementary op {op.kind!r}")
    return Mat(x.field, m)


# module-level aliases mirroring the operation vocabulary

def mat_mul(a, b):
    return a * b


def mat_add(a, b):
    return a + b


def mat_scale(a, scalar):
    return a.scale(scalar)


def mat_pow(a, k):
    return a.power(k)


def mat_transpose(a):
    return a.transpose()


def antidiag_transpose(a):
    return a.antidiag_transpose()


def mat_rank(a):
    return a.rank()


def mat_inverse(a):
    return a.inverse()
