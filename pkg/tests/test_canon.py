import random

import pytest

from nilcanon.canon import (
    asymmetric_nilpotent,
    canonical_classical,
    canonical_gl,
    canonical_unitary_nilpotent,
    generic_representative,
    structure_matrix,
    symmetrize,
    symmetrize_with_script,
    unitary_alpha,
)
from nilcanon.errors import (
    BadPartition,
    CharacteristicTwo,
    NotGeneric,
    SymmetricFormImpossible,
    TypeA,
)
from nilcanon.exactfield import frobenius_q, prime_field, quadratic_ext, rationals
from nilcanon.matrixcore import Mat, elementary_conjugate
from nilcanon.orbitstruct import LieType, Partition, block_layout, enumerate_partitions, is_bad
from nilcanon.verify import jordan_type, satisfies_lie_condition

Q = rationals()


def _ones(m):
    return {(i + 1, j + 1) for i in range(m.rows) for j in range(m.cols) if m.entries[i][j]}


# -- symmetric form -----------------------------------------------------------


def test_gl_31_fixture():
    cf = canonical_gl(Partition((3, 1)), Q)
    assert _ones(cf.matrix) == {(1, 2), (1, 3), (2, 4), (3, 4)}
    assert cf.certificate.jordan_type.parts == (3, 1)


def test_gl_442_fixture():
    cf = canonical_gl(Partition((4, 4, 2)), Q)
    assert _ones(cf.matrix) == {(1, 5), (2, 4), (3, 8), (4, 7), (5, 6), (6, 10), (7, 9)}


def test_gl_single_row_and_column():
    n = 6
    cf = canonical_gl(Partition((n,)), Q)
    assert _ones(cf.matrix) == {(i, i + 1) for i in range(1, n)}
    cf = canonical_gl(Partition((1,) * 4), Q)
    assert cf.matrix.is_zero()


def test_gl_deterministic():
    a = canonical_gl(Partition((5, 3, 1)), Q).matrix
    b = canonical_gl(Partition((5, 3, 1)), Q).matrix
    assert a == b


def test_gl_char2_failure_is_detected():
    with pytest.raises(SymmetricFormImpossible):
        canonical_gl(Partition((3, 1)), prime_field(2))


def test_gl_char2_good_partitions_still_work():
    F2 = prime_field(2)
    for parts in [(4, 4, 2), (2, 2), (3, 3), (2,), (1, 1, 1)]:
        cf = canonical_gl(Partition(parts), F2)
        assert cf.certificate.jordan_type.parts == parts


@pytest.mark.parametrize("field", [Q, prime_field(3), prime_field(5)], ids=["Q", "F3", "F5"])
def test_gl_certified_small(field):
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            cf = canonical_gl(mu, field)
            c = cf.certificate
            assert c.jordan_type == mu and c.f_symmetric and c.supported
            one, zero = field.one(), field.zero()
            assert all(v in (one, zero) for row in cf.matrix.entries for v in row)


# -- F-stable form -----------------------------------------------------------


def test_unitary_31_q2():
    cf = canonical_unitary_nilpotent(Partition((3, 1)), 2)
    F = cf.matrix.field
    assert cf.certificate.f_stable and cf.certificate.jordan_type.parts == (3, 1)
    # the squared matrix has trace(alpha) != 0 in its corner
    sq = cf.matrix.power(2)
    assert sq.entries[0][3]


def test_unitary_is_plain_embedding_without_odd_row_blocks():
    for parts, q in [((4, 4, 2), 3), ((2,), 5), ((3, 3), 2)]:
        mu = Partition(parts)
        cf = canonical_unitary_nilpotent(mu, q)
        F = cf.matrix.field
        sym = {(i, j) for (i, j) in _ones(cf.matrix)}
        ref = canonical_gl(mu, Q).matrix
        assert sym == _ones(ref)
        one, zero = F.one(), F.zero()
        assert all(v in (one, zero) for row in cf.matrix.entries for v in row)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_unitary_certified(q):
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            cf = canonical_unitary_nilpotent(mu, q)
            assert cf.certificate.f_stable and cf.certificate.jordan_type == mu


def test_unitary_alpha_has_nonzero_trace():
    for q in (2, 3, 4, 5, 9):
        F = quadratic_ext(q)
        a = unitary_alpha(F)
        assert frobenius_q(a) != a
        assert a + frobenius_q(a) != F.zero()


def test_asymmetric_form_works_in_char2():
    F2 = prime_field(2)
    for parts in [(3, 1), (3, 1, 1), (5, 1), (4, 3, 1)]:
        cf = asymmetric_nilpotent(Partition(parts), F2)
        assert cf.certificate.jordan_type.parts == parts


# -- classical forms -----------------------------------------------------------


def test_structure_matrices():
    c1 = structure_matrix(LieType("C", 1), Q).m
    assert c1 == Mat.from_int_rows(Q, [[0, 1], [-1, 0]])
    assert structure_matrix(LieType("D", 2), Q).m == Mat.antidiag_identity(Q, 4)
    assert structure_matrix(LieType("B", 1), Q).m == Mat.antidiag_identity(Q, 3)
    with pytest.raises(TypeA):
        structure_matrix(LieType("A"))


def test_classical_fixtures():
    cf = canonical_classical(Partition((2,)), LieType("C", 1), Q)
    assert cf.matrix == Mat.from_int_rows(Q, [[0, 1], [0, 0]])
    cf = canonical_classical(Partition((3,)), LieType("B", 1), Q)
    assert cf.matrix == Mat.from_int_rows(Q, [[0, 1, 0], [0, 0, -1], [0, 0, 0]])
    with pytest.raises(BadPartition) as exc:
        canonical_classical(Partition((3, 1)), LieType("C", 2), Q)
    assert exc.value.witness == 3


def test_classical_very_even_representative():
    cf = canonical_classical(Partition((2, 2)), LieType("D", 2), Q)
    assert cf.certificate.jordan_type.parts == (2, 2)
    assert cf.certificate.lie_condition


def test_classical_rejects_char2():
    with pytest.raises(CharacteristicTwo):
        canonical_classical(Partition((2, 2)), LieType("C", 2), prime_field(2))


@pytest.mark.parametrize("field", [Q, prime_field(3), prime_field(5)], ids=["Q", "F3", "F5"])
def test_classical_certified_small(field):
    for n in range(2, 9):
        for letter in ("B", "C", "D"):
            try:
                lt = LieType.for_n(letter, n)
            except Exception:
                continue
            m = structure_matrix(lt, field).m
            for mu in enumerate_partitions(n):
                bad, witness = is_bad(mu, lt)
                if bad:
                    with pytest.raises(BadPartition):
                        canonical_classical(mu, lt, field)
                    continue
                cf = canonical_classical(mu, lt, field)
                assert cf.certificate.jordan_type == mu
                assert satisfies_lie_condition(cf.matrix, m)
                vals = {v for row in cf.matrix.entries for v in row}
                assert vals <= {field.zero(), field.one(), -field.one()}


# -- generic representatives and the elimination cross-check ------------------


def test_generic_31_dense_condition():
    x = generic_representative(Partition((3, 1)), Q, seed=4)
    e = x.entries
    assert e[0][1] * e[1][3] + e[0][2] * e[2][3] != 0


def test_generic_trivial_cases():
    assert generic_representative(Partition((1, 1)), Q, 0).is_zero()
    x = generic_representative(Partition((4,)), Q, 0)
    assert all(x.entries[i][i + 1] for i in range(3))


def test_generic_deterministic():
    a = generic_representative(Partition((4, 2)), Q, seed=9)
    b = generic_representative(Partition((4, 2)), Q, seed=9)
    assert a == b


def test_symmetrize_idempotent_on_canonical_output():
    for parts in [(3, 1), (4, 4, 2), (5, 3, 1)]:
        mu = Partition(parts)
        lay = block_layout(mu)
        target = canonical_gl(mu, Q).matrix
        assert symmetrize(target, lay) == target


def test_symmetrize_31_reaches_remark_matrix():
    mu = Partition((3, 1))
    x = generic_representative(mu, Q, seed=0)
    y = symmetrize(x, block_layout(mu))
    assert y == canonical_gl(mu, Q).matrix


def test_symmetrize_442_walkthrough():
    mu = Partition((4, 4, 2))
    x = generic_representative(mu, Q, seed=1)
    y, script = symmetrize_with_script(x, block_layout(mu))
    assert y == canonical_gl(mu, Q).matrix
    assert script  # auditable log
    # replaying the script reproduces the output exactly
    z = x
    for op in script:
        z = elementary_conjugate(z, op)
    assert z == y


def test_symmetrize_rejects_degenerate_input():
    mu = Partition((3, 1))
    lay = block_layout(mu)
    with pytest.raises(NotGeneric):
        symmetrize(Mat.zeros(Q, 4, 4), lay)
    with pytest.raises(NotGeneric):
        symmetrize(Mat.identity(Q, 4), lay)


def test_symmetrize_rejects_char2():
    mu = Partition((2,))
    with pytest.raises(CharacteristicTwo):
        symmetrize(Mat.from_int_rows(prime_field(2), [[0, 1], [0, 0]]), block_layout(mu))


def test_symmetrize_stays_in_orbit_along_the_script():
    mu = Partition((5, 3, 1))
    lay = block_layout(mu)
    x = generic_representative(mu, Q, seed=11)
    _, script = symmetrize_with_script(x, lay)
    z = x
    for op in script:
        z = elementary_conjugate(z, op)
        assert jordan_type(z) == mu
