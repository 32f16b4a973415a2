from omegacalc.algebra import AlgMap
from omegacalc.bimodule import (
    BimodMap,
    Bimodule,
    bimod_cokernel,
    bimod_kernel,
    bimodule_axiom_report,
    bimodule_hom_dim,
    extend_bimodule,
    field_algebra,
    free_bimodule,
    generated_sub_bimodule,
    regular_bimodule,
    restrict_bimodule,
    saturate_subspace,
    tensor_over_algebra,
    tensor_square_bimodule,
    zero_bimodule,
)
from omegacalc.fodc import universal_calculus
from omegacalc.linalg import QQ, Mat, is_invertible, kronecker, solve


def unit_embedding(alg):
    field = alg.field
    qa = field_algebra(field)
    col = Mat.zeros(field, alg.dim, 1)
    for i, v in enumerate(alg.unit):
        col.data[i][0] = v
    return AlgMap(qa, alg, col)


def test_free_bimodule_dims(qx2, qz2):
    assert free_bimodule(qx2, 1, qx2).dim == 4
    qa = field_algebra(QQ)
    plain = free_bimodule(qa, 3, qa)
    assert plain.dim == 3
    assert bimodule_axiom_report(qa, qa, 3, plain.left_mat, plain.right_mat) == []
    fz = free_bimodule(qz2, 1, qz2)
    assert fz.dim == 4
    assert bimodule_axiom_report(qz2, qz2, 4, fz.left_mat, fz.right_mat) == []


def test_free_bimodule_actions_are_outer(qz2):
    fz = free_bimodule(qz2, 1, qz2)
    assert fz.left_mat == kronecker(qz2.mult_mat, Mat.identity(QQ, 2))
    assert fz.right_mat == kronecker(Mat.identity(QQ, 2), qz2.mult_mat)


def test_middle_associativity_violation_detected(qx2):
    # right action twisted to disagree with the left one
    bad_right = tensor_square_bimodule(qx2).left_mat
    report = bimodule_axiom_report(qx2, qx2, 4, tensor_square_bimodule(qx2).left_mat, bad_right)
    assert report


def test_tensor_cancels_the_algebra(qx2):
    # A (x)_A M = M via the split coequalizer
    u = universal_calculus(qx2)
    reg = regular_bimodule(qx2)
    t, q = tensor_over_algebra(reg, u.omega)
    assert t.dim == u.omega.dim
    # the splitting 1 (x) unit (x) 1 composed with q is invertible
    unit_col = Mat.zeros(QQ, 2, 1)
    unit_col.data[0][0] = QQ.one()
    split = q * kronecker(unit_col, Mat.identity(QQ, u.dim))
    assert is_invertible(split)


def test_tensor_with_square_gives_m_tensor_a(qx2):
    # M (x)_A (A (x) A) = M (x) A
    u = universal_calculus(qx2)
    sq = tensor_square_bimodule(qx2)
    t, _ = tensor_over_algebra(u.omega, sq)
    assert t.dim == u.omega.dim * qx2.dim


def test_omega_tensor_omega_dim(qx2):
    u = universal_calculus(qx2)
    t, _ = tensor_over_algebra(u.omega, u.omega)
    assert t.dim == 2  # n (n-1)^2 with n = 2


def test_tensor_assoc_dims_and_comparison(qx2):
    from omegacalc.linalg import factor_through_surjection

    u = universal_calculus(qx2)
    m = u.omega
    mm, q_inner = tensor_over_algebra(m, m)
    left, q_left = tensor_over_algebra(mm, m)
    right, q_right = tensor_over_algebra(m, mm)
    assert left.dim == right.dim
    # both sides are quotients of m (x) m (x) m; the comparison is invertible
    i_m = Mat.identity(QQ, m.dim)
    q1 = q_left * kronecker(q_inner, i_m)
    q2 = q_right * kronecker(i_m, q_inner)
    comp = factor_through_surjection(q2, q1)
    assert comp is not None and is_invertible(comp)


def test_kernel_of_identity_is_zero(qx2):
    reg = regular_bimodule(qx2)
    k, _ = bimod_kernel(BimodMap(reg, reg, Mat.identity(QQ, 2)))
    assert k.dim == 0


def test_kernel_of_multiplication_is_universal(qx2):
    sq = tensor_square_bimodule(qx2)
    reg = regular_bimodule(qx2)
    k, incl = bimod_kernel(BimodMap(sq, reg, qx2.mult_mat))
    assert k.dim == 2
    assert incl.matrix == universal_calculus(qx2).iota


def test_cokernel_of_zero_map(qx2):
    reg = regular_bimodule(qx2)
    z = zero_bimodule(qx2, qx2)
    c, proj = bimod_cokernel(BimodMap(z, reg, Mat.zeros(QQ, 2, 0), check=False))
    assert c.dim == 2 and is_invertible(proj.matrix)


def test_generated_sub_trivial_cases(qx2):
    sq = tensor_square_bimodule(qx2)
    empty, _ = generated_sub_bimodule(sq, [])
    assert empty.dim == 0
    full, _ = generated_sub_bimodule(sq, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert full.dim == 4


def test_generated_sub_x_tensor_x(qx2):
    u = universal_calculus(qx2)
    # x (x) x in omega coordinates
    v = solve(u.iota, Mat(QQ, [[0], [0], [0], [1]]))
    sub, _ = generated_sub_bimodule(u.omega, [v.column(0)])
    assert sub.dim == 1


def test_restrict_along_identity(qx2):
    reg = regular_bimodule(qx2)
    r = restrict_bimodule(qx2.identity_map(), qx2.identity_map(), reg)
    assert r.left_mat == reg.left_mat and r.right_mat == reg.right_mat


def test_restrict_to_base_field(qx2):
    reg = regular_bimodule(qx2)
    unit = unit_embedding(qx2)
    r = restrict_bimodule(unit, unit, reg)
    qa = field_algebra(QQ)
    assert r.dim == 2
    assert bimodule_axiom_report(qa, qa, 2, r.left_mat, r.right_mat) == []


def test_restrict_universal_along_y_to_x2(qy2, qx4):
    f = AlgMap(qy2, qx4, Mat(QQ, [[1, 0], [0, 0], [0, 1], [0, 0]]))
    omega = universal_calculus(qx4).omega
    r = restrict_bimodule(f, f, omega)
    assert bimodule_axiom_report(qy2, qy2, r.dim, r.left_mat, r.right_mat) == []


def test_extend_along_identity_is_isomorphic(qx2):
    reg = regular_bimodule(qx2)
    ext, _ = extend_bimodule(qx2.identity_map(), qx2.identity_map(), reg)
    assert ext.dim == reg.dim


def test_extend_trivial_module_gives_square(qx2):
    qa = field_algebra(QQ)
    unit = unit_embedding(qx2)
    ext, _ = extend_bimodule(unit, unit, regular_bimodule(qa))
    assert ext.dim == qx2.dim ** 2


def test_hom_adjunction_dimension_identity(qy2, qx4):
    f = AlgMap(qy2, qx4, Mat(QQ, [[1, 0], [0, 0], [0, 1], [0, 0]]))
    u_y = universal_calculus(qy2)
    pairs = [
        (regular_bimodule(qy2), regular_bimodule(qx4)),
        (u_y.omega, regular_bimodule(qx4)),
        (regular_bimodule(qy2), universal_calculus(qx4).omega),
        (u_y.omega, universal_calculus(qx4).omega),
    ]
    for m, n in pairs:
        ext, _ = extend_bimodule(f, f, m)
        lhs = bimodule_hom_dim(ext, n)
        rhs = bimodule_hom_dim(m, restrict_bimodule(f, f, n))
        assert lhs == rhs


def test_saturation_stabilizes_within_dim_rounds(qx3):
    u = universal_calculus(qx3)
    basis = Mat.identity(QQ, u.dim)
    sat = saturate_subspace(u.omega, Mat.from_cols(QQ, [basis.column(0)], rows=u.dim))
    assert sat.cols <= u.dim


def test_tensor_assoc_mixed_algebras(qy2, qx4):
    # (M (x)_B N) (x)_Q P vs M (x)_B (N (x)_Q P) with three different algebras
    from omegacalc.linalg import factor_through_surjection

    f = AlgMap(qy2, qx4, Mat(QQ, [[1, 0], [0, 0], [0, 1], [0, 0]]))
    qa = field_algebra(QQ)
    # M = B as an (A, B)-bimodule via f
    m = Bimodule(
        qy2, qx4, 4,
        qx4.mult_mat * kronecker(f.matrix, Mat.identity(QQ, 4)),
        qx4.mult_mat,
    )
    # N = B as a (B, Q)-bimodule, P = Q^2 as a (Q, Q)-bimodule
    n = Bimodule(qx4, qa, 4, qx4.mult_mat, Mat.identity(QQ, 4))
    p = free_bimodule(qa, 2, qa)
    mn, q_mn = tensor_over_algebra(m, n)
    left, q_left = tensor_over_algebra(mn, p)
    np_, q_np = tensor_over_algebra(n, p)
    right, q_right = tensor_over_algebra(m, np_)
    assert left.dim == right.dim
    q1 = q_left * kronecker(q_mn, Mat.identity(QQ, p.dim))
    q2 = q_right * kronecker(Mat.identity(QQ, m.dim), q_np)
    comp = factor_through_surjection(q2, q1)
    assert comp is not None and is_invertible(comp)


def test_tensor_cancels_on_the_right(qx2):
    # M (x)_A A = M via the splitting 1 (x) unit
    u = universal_calculus(qx2)
    reg = regular_bimodule(qx2)
    t, q = tensor_over_algebra(u.omega, reg)
    assert t.dim == u.omega.dim
    unit_col = Mat.zeros(QQ, 2, 1)
    unit_col.data[0][0] = QQ.one()
    split = q * kronecker(Mat.identity(QQ, u.dim), unit_col)
    assert is_invertible(split)
