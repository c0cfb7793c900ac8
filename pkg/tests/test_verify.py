import random

import pytest

from helpers import all_upper_01, chain_composites_maximal, jordan_oracle
from nilcanon.canon import canonical_gl, generic_representative, structure_matrix
from nilcanon.errors import NotNilpotent, NotSupported
from nilcanon.exactfield import prime_field, quadratic_ext, rationals
from nilcanon.matrixcore import Mat
from nilcanon.orbitstruct import LieType, Partition, block_layout, enumerate_partitions
from nilcanon.verify import (
    in_dense_orbit,
    is_F_stable,
    is_f_symmetric,
    jordan_type,
    satisfies_lie_condition,
    supported_on,
)

Q = rationals()
F2 = prime_field(2)


def _sym31(field):
    return Mat.from_int_rows(field, [[0, 1, 1, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]])


def test_jordan_fixtures():
    assert jordan_type(Mat.zeros(Q, 4, 4)).parts == (1, 1, 1, 1)
    n = 5
    jb = Mat.from_int_rows(Q, [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])
    assert jordan_type(jb).parts == (5,)
    assert jordan_type(_sym31(Q)).parts == (3, 1)
    assert jordan_type(_sym31(F2)).parts == (2, 2)


def test_jordan_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        jordan_type(Mat.identity(Q, 3))


@pytest.mark.parametrize("field", [Q, F2], ids=["Q", "F2"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_jordan_matches_kernel_oracle(field, n):
    for m in all_upper_01(n, field):
        assert jordan_type(m).parts == jordan_oracle(m)


def test_dense_orbit_fixtures():
    assert in_dense_orbit(canonical_gl(Partition((4, 4, 2)), Q).matrix, Partition((4, 4, 2)))
    assert not in_dense_orbit(_sym31(F2), Partition((3, 1)))
    assert in_dense_orbit(Mat.zeros(Q, 3, 3), Partition((1, 1, 1)))
    with pytest.raises(NotSupported):
        in_dense_orbit(Mat.identity(Q, 4), Partition((3, 1)))


def test_symmetry_and_support():
    x = _sym31(Q)
    lay = block_layout(Partition((3, 1)))
    assert is_f_symmetric(x) and supported_on(x, lay)
    t = x.transpose()
    assert is_f_symmetric(t)
    assert not supported_on(t, lay)
    z = Mat.zeros(Q, 4, 4)
    assert is_f_symmetric(z) and supported_on(z, lay)


def test_lie_condition():
    z = Mat.zeros(Q, 4, 4)
    assert satisfies_lie_condition(z, Mat.antidiag_identity(Q, 4))
    c1 = structure_matrix(LieType("C", 1), Q).m
    x = Mat.from_int_rows(Q, [[0, 1], [0, 0]])
    assert satisfies_lie_condition(x, c1)
    # the unadjusted symmetric (3,1) form is not orthogonal
    assert not satisfies_lie_condition(_sym31(Q), Mat.antidiag_identity(Q, 4))


def test_f_stability():
    F4 = quadratic_ext(2)
    assert is_F_stable(_sym31(F4), 2)  # f-symmetric 0/1 matrix
    a = F4.gen()
    x = Mat(F4, [[F4.zero(), a], [F4.zero(), F4.zero()]])
    assert not is_F_stable(x, 2)  # (1,2) is f-fixed, needs a^q = a


def test_composite_rank_criterion_cross_check():
    rng = random.Random(41)
    for n in range(2, 10):
        for mu in enumerate_partitions(n):
            lay = block_layout(mu)
            for trial in range(5):
                x = generic_representative(mu, Q, seed=100 * trial + 7)
                assert jordan_type(x) == mu
                assert chain_composites_maximal(x, lay)
            # a degenerate point: zero out everything, type collapses
            if lay.blocks:
                z = Mat.zeros(Q, n, n)
                assert (jordan_type(z) == mu) == chain_composites_maximal(z, lay)


def test_rank_sequence_convexity():
    # rank(x^k) = sum max(mu_i - k, 0) is convex and weakly decreasing
    for parts in [(4, 4, 2), (3, 1), (5, 3, 1)]:
        mu = Partition(parts)
        x = canonical_gl(mu, Q).matrix
        ranks = [mu.n]
        p = x
        while ranks[-1]:
            ranks.append(p.rank())
            p = p * x
        for a, b in zip(ranks, ranks[1:]):
            assert b <= a
        for a, b, c in zip(ranks, ranks[1:], ranks[2:]):
            assert a - b >= b - c
