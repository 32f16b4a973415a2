import random
from fractions import Fraction

import pytest

from omegacalc.linalg import (
    GF,
    QQ,
    Field,
    LinAlgError,
    Mat,
    cokernel_projection,
    column_echelon,
    direct_sum,
    factor_through_surjection,
    image_basis,
    inverse,
    kernel_basis,
    kronecker,
    preimage_basis,
    quotient_maps,
    rank,
    solve,
    subspace_intersection,
    subspace_leq,
    swap_matrix,
)


def rand_mat(field, rows, cols, rng, lo=-3, hi=3):
    if rows == 0 or cols == 0:
        return Mat.zeros(field, rows, cols)
    return Mat(field, [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def test_kernel_of_row_vector():
    k = kernel_basis(Mat(QQ, [[1, 1]]))
    assert k.columns() == [[Fraction(1), Fraction(-1)]]


def test_kernel_of_identity_is_empty():
    assert kernel_basis(Mat.identity(QQ, 3)).cols == 0


def test_kernel_of_truncated_poly_multiplication():
    # columns e0e0, e0e1, e1e0, e1e1 map to e0, e1, e1, 0
    m = Mat(QQ, [[1, 0, 0, 0], [0, 1, 1, 0]])
    k = kernel_basis(m)
    assert k.columns() == [
        [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
    ]


def test_cokernel_of_zero_map():
    q, dim = cokernel_projection(Mat.zeros(QQ, 3, 1))
    assert dim == 3 and q == Mat.identity(QQ, 3)


def test_cokernel_of_identity():
    _, dim = cokernel_projection(Mat.identity(QQ, 2))
    assert dim == 0


def test_cokernel_kills_first_coordinate():
    m = Mat(QQ, [[1, 0], [0, 0]])
    q, dim = cokernel_projection(m)
    assert dim == 1 and (q * m).is_zero()
    assert q.data[0] == [Fraction(0), Fraction(1)]


def test_cokernel_annihilates_image_basis():
    rng = random.Random(7)
    for _ in range(25):
        m = rand_mat(QQ, rng.randint(1, 5), rng.randint(1, 5), rng)
        q, dim = cokernel_projection(m)
        assert dim == m.rows - rank(m)
        assert (q * image_basis(m)).is_zero()
        assert rank(q) == dim


def test_kron_of_identities():
    assert kronecker(Mat.identity(QQ, 2), Mat.identity(QQ, 3)) == Mat.identity(QQ, 6)


def test_solve_identity():
    b = Mat(QQ, [[3], [5]])
    assert solve(Mat.identity(QQ, 2), b) == b


def test_solve_no_solution():
    assert solve(Mat(QQ, [[1, 1], [1, 1]]), Mat(QQ, [[1], [2]])) is None


def test_rank_kron_multiplicative():
    m = Mat(QQ, [[1, 1]])
    n = Mat(QQ, [[2], [0]])
    assert rank(kronecker(m, n)) == 1 == rank(m) * rank(n)


@pytest.mark.parametrize("field", [QQ, GF(2), GF(5)])
def test_rank_nullity_random(field):
    rng = random.Random(11)
    for _ in range(30):
        m = rand_mat(field, rng.randint(0, 5), rng.randint(0, 5), rng, 0 if field.p else -3, (field.p - 1) if field.p else 3)
        assert rank(m) + kernel_basis(m).cols == m.cols


def test_echelon_idempotent():
    rng = random.Random(13)
    for _ in range(25):
        m = rand_mat(QQ, rng.randint(1, 5), rng.randint(1, 5), rng)
        e = column_echelon(m)
        assert column_echelon(e) == e
        k = kernel_basis(m)
        assert column_echelon(k) == k


def test_subspace_equality_is_matrix_equality():
    a = Mat(QQ, [[1, 0], [1, 1], [0, 2]])
    b = Mat(QQ, [[2, 1], [3, 2], [2, 2]])  # same column space
    assert image_basis(a) == image_basis(b)


def test_gfp_matches_integer_arithmetic():
    f = GF(7)
    rng = random.Random(3)
    for _ in range(10):
        a = rand_mat(f, 3, 3, rng, 0, 6)
        b = rand_mat(f, 3, 3, rng, 0, 6)
        prod = a * b
        for i in range(3):
            for j in range(3):
                expected = sum(a.data[i][k] * b.data[k][j] for k in range(3)) % 7
                assert prod.data[i][j] == expected


def test_prime_field_rejects_composite():
    with pytest.raises(LinAlgError):
        Field(6)


def test_scalar_strings():
    assert QQ.format(Fraction(-3, 4)) == "-3/4"
    assert QQ.format(Fraction(5)) == "5"
    assert QQ.parse("7/2") == Fraction(7, 2)
    f5 = GF(5)
    assert f5.format(f5.coerce(-1)) == "4"
    assert f5.parse("3") == 3


def test_inverse_round_trip():
    f = GF(5)
    m = Mat(f, [[1, 2], [3, 4]])
    assert inverse(m) * m == Mat.identity(f, 2)
    with pytest.raises(LinAlgError):
        inverse(Mat(QQ, [[1, 1], [1, 1]]))


def test_quotient_maps_section():
    sub = image_basis(Mat(QQ, [[1], [1], [0]]))
    q, s = quotient_maps(sub, 3)
    assert q * s == Mat.identity(QQ, 2)
    assert (q * sub).is_zero()


def test_direct_sum_shapes():
    d = direct_sum(Mat.identity(QQ, 2), Mat(QQ, [[1, 2]]))
    assert (d.rows, d.cols) == (3, 4)
    assert rank(d) == 3


def test_swap_matrix_is_inverse_pair():
    s = swap_matrix(QQ, 2, 3)
    t = swap_matrix(QQ, 3, 2)
    assert t * s == Mat.identity(QQ, 6)


def test_preimage_and_intersection():
    f = Mat(QQ, [[1, 0], [0, 0]])
    sub = Mat.zeros(QQ, 2, 0)
    pre = preimage_basis(f, sub)  # kernel of f
    assert pre == kernel_basis(f)
    a = image_basis(Mat(QQ, [[1, 0], [0, 1], [0, 0]]))
    b = image_basis(Mat(QQ, [[0, 0], [1, 0], [0, 1]]))
    inter = subspace_intersection(a, b)
    assert inter.cols == 1
    assert subspace_leq(inter, a) and subspace_leq(inter, b)


def test_factor_through_surjection():
    q = Mat(QQ, [[1, 0, 1], [0, 1, 0]])
    rhs = Mat(QQ, [[2, 3, 2]])
    x = factor_through_surjection(rhs, q)
    assert x is not None and x * q == rhs
    assert factor_through_surjection(Mat(QQ, [[1, 0, 0]]), q) is None


def test_field_mismatch_rejected():
    with pytest.raises(LinAlgError):
        Mat(QQ, [[1]]) * Mat(GF(2), [[1]])
