"""Springer morphisms, Frobenius endomorphisms, and finite-group membership.

For the general linear group the shift u -> u - 1 maps unipotent elements
to nilpotent ones; for the symplectic and orthogonal groups the Cayley map
u -> (u-1)(u+1)^{-1} does the same away from characteristic 2.  The
twisted (unitary) Frobenius acts on the group by g -> J F_q(g^{-T}) J and
on the Lie algebra by x -> J F_q(x^T) J; its group fixed points are the
finite unitary groups.  The map

    u -> (u - 1)(alpha - alpha^q u)^{-1},     alpha in F_{q^2} \\ F_q,

with inverse x -> (1 + alpha^q x)^{-1}(alpha x + 1), commutes with the
twisted Frobenius pair, so F-stable nilpotent representatives pull back to
unipotent representatives inside the finite unitary group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlphaInBaseField,
    CharacteristicTwo,
    NotNilpotent,
    NotUnipotent,
    Singular,
    WrongField,
)
from .exactfield import frobenius_q, galois_field
from .matrixcore import Mat
from .orbitstruct import LieType


@dataclass(frozen=True)
class FrobeniusSpec:
    """kind "standard" raises entries to the q-th power; kind "unitary"
    composes that with inverse-antitranspose (group) or antitranspose (Lie).
    negated_lie selects the variant Lie action x -> -J F_q(x^T) J."""

    kind: str
    q: int
    negated_lie: bool = False


def standard_frobenius(q):
    return FrobeniusSpec("standard", q)


def unitary_frobenius(q, negated_lie=False):
    return FrobeniusSpec("unitary", q, negated_lie)


def _entrywise_power(m, q):
    F = m.field
    if getattr(F, "q_subfield_order", None) == q:
        frob = F.frobenius
        return Mat(F, [[frob(v) for v in row] for row in m.entries])
    return Mat(F, [[v**q for v in row] for row in m.entries])


def _flip_conjugate(m):
    """J m J for the anti-diagonal identity J: a 180-degree index rotation."""
    n = m.rows
    e = m.entries
    return Mat(m.field, [[e[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)])


def _check_unipotent(u):
    i = Mat.identity(u.field, u.rows)
    if not (u - i).power(u.rows).is_zero():
        raise NotUnipotent("matrix is not unipotent")


def _check_nilpotent(x):
    if not x.power(x.rows).is_zero():
        raise NotNilpotent("matrix is not nilpotent")


def springer_gl(u):
    """u - 1; the inverse of springer_gl_inv."""
    _check_unipotent(u)
    return u - Mat.identity(u.field, u.rows)


def springer_gl_inv(x):
    """x + 1."""
    _check_nilpotent(x)
    return x + Mat.identity(x.field, x.rows)


def cayley(u):
    """(u - 1)(u + 1)^{-1}; needs 2 invertible."""
    if u.field.characteristic == 2:
        raise CharacteristicTwo("Cayley map needs 2 invertible")
    _check_unipotent(u)
    i = Mat.identity(u.field, u.rows)
    return (u - i) * (u + i).inverse()


def cayley_inv(x):
    """(1 + x)(1 - x)^{-1}."""
    if x.field.characteristic == 2:
        raise CharacteristicTwo("Cayley map needs 2 invertible")
    _check_nilpotent(x)
    i = Mat.identity(x.field, x.rows)
    return (i + x) * (i - x).inverse()


def _check_alpha(alpha):
    F = getattr(alpha, "field", None)
    if F is None or getattr(F, "q_subfield_order", None) is None:
        raise WrongField("alpha must live in a quadratic extension F_{q^2}")
    if frobenius_q(alpha) == alpha:
        raise AlphaInBaseField("alpha lies in F_q; pick a generator outside it")
    return F


def unitary_springer(u, alpha):
    """(u - 1)(alpha - alpha^q u)^{-1}, unipotent -> nilpotent."""
    _check_alpha(alpha)
    _check_unipotent(u)
    F = u.field
    i = Mat.identity(F, u.rows)
    denom = i.scale(alpha) - u.scale(frobenius_q(alpha))
    return (u - i) * denom.inverse()


def unitary_springer_inv(x, alpha):
    """(1 + alpha^q x)^{-1}(alpha x + 1), nilpotent -> unipotent."""
    _check_alpha(alpha)
    _check_nilpotent(x)
    F = x.field
    i = Mat.identity(F, x.rows)
    return (i + x.scale(frobenius_q(alpha))).inverse() * (x.scale(alpha) + i)


def frobenius_apply(spec, m, side):
    """Apply the Frobenius endomorphism on the group or Lie-algebra side."""
    if side not in ("group", "lie"):
        raise ValueError("side must be 'group' or 'lie'")
    if spec.kind == "standard":
        if side == "group":
            _invertible_or_raise(m)
        return _entrywise_power(m, spec.q)
    if spec.kind != "unitary":
        raise ValueError(f"unknown Frobenius kind {spec.kind!r}")
    F = m.field
    if getattr(F, "q_subfield_order", None) != spec.q:
        raise WrongField(f"matrix field is not F_{{q^2}} for q={spec.q}")
    if side == "group":
        return _flip_conjugate(_entrywise_power(m.inverse().transpose(), spec.q))
    out = _flip_conjugate(_entrywise_power(m.transpose(), spec.q))
    return -out if spec.negated_lie else out


def _invertible_or_raise(m):
    try:
        m.inverse()
    except Exception as exc:
        raise Singular("group-side Frobenius needs an invertible matrix") from exc


def is_group_fixed(spec, g):
    """Membership in GL_n(F_q) or GU_n(F_q): fixed by the group Frobenius."""
    return frobenius_apply(spec, g, "group") == g


@dataclass(frozen=True)
class GroupTarget:
    """Which finite group a unipotent representative should land in."""

    kind: str  # "GL" | "GU" | "Sp" | "SO"
    q: int
    lie_type: LieType = None

    @staticmethod
    def gl(q):
        return GroupTarget("GL", q)

    @staticmethod
    def gu(q):
        return GroupTarget("GU", q)

    @staticmethod
    def classical(lie_type, q):
        kind = "Sp" if lie_type.letter == "C" else "SO"
        return GroupTarget(kind, q, lie_type)


def unipotent_representative(mu, target):
    """Certified unipotent representative of the class mu in the target group.

    GL uses x + 1 on the symmetric form (or the asymmetric layout form when
    characteristic 2 blocks symmetry); GU pulls the F-stable form back
    through the twisted Springer map; Sp/SO apply the inverse Cayley map to
    the adjusted classical form.
    """
    from . import verify as _verify
    from .canon import (
        asymmetric_nilpotent,
        canonical_classical,
        canonical_gl,
        canonical_unitary_nilpotent,
        unitary_alpha,
    )
    from .errors import SymmetricFormImpossible

    if target.kind == "GL":
        field = galois_field(target.q)
        try:
            x = canonical_gl(mu, field).matrix
        except SymmetricFormImpossible:
            x = asymmetric_nilpotent(mu, field).matrix
        u = springer_gl_inv(x)
        spec = standard_frobenius(target.q)
    elif target.kind == "GU":
        cf = canonical_unitary_nilpotent(mu, target.q)
        alpha = unitary_alpha(cf.matrix.field)
        u = unitary_springer_inv(cf.matrix, alpha)
        spec = unitary_frobenius(target.q)
        x = cf.matrix
    else:
        field = galois_field(target.q)
        cf = canonical_classical(mu, target.lie_type, field)
        u = cayley_inv(cf.matrix)
        spec = standard_frobenius(target.q)
        x = cf.matrix
    _check_unipotent(u)
    if not is_group_fixed(spec, u):
        raise AssertionError(f"representative for {mu} not fixed by the Frobenius")
    i = Mat.identity(u.field, u.rows)
    if _verify.jordan_type(u - i) != mu:
        raise AssertionError(f"unipotent representative for {mu} has wrong type")
    return u
