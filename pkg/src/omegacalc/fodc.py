"""First-order differential calculi and the universal calculus.

A calculus on A is an A-A bimodule Omega with a differential d: A -> Omega
satisfying the Leibniz rule and generated as a left module by dA.  The
universal calculus is the kernel of the multiplication A(x)A -> A with
iota(d(a)) = 1(x)a - a(x)1; every calculus is one of its quotients, and the
lattice of quotients matches the lattice of action-closed subspaces.
"""

from __future__ import annotations

from .algebra import Algebra, AxiomError
from .bimodule import (
    BimodMap,
    Bimodule,
    bimodule_axiom_report,
    bimodule_hom_basis,
    field_algebra,
    quotient_bimodule,
    saturate_subspace,
    sub_bimodule,
    tensor_over_algebra,
    tensor_square_bimodule,
    zero_bimodule,
)
from .linalg import (
    LinAlgError,
    Mat,
    image_basis,
    kernel_basis,
    kronecker,
    rank,
    solve,
)


class PreconditionError(ValueError):
    """An operation was invoked outside its stated precondition."""


class FodcReport:
    """Outcome of the calculus axiom check.

    classification is one of "not_generalized", "generalized_only", "fodc".
    The three surjectivity variants are reported separately; they provably
    agree whenever Leibniz holds, and the checker asserts that agreement.
    """

    def __init__(self, leibniz, left_surjective, right_surjective,
                 two_sided_surjective, d_kills_unit, witnesses):
        self.leibniz = leibniz
        self.left_surjective = left_surjective
        self.right_surjective = right_surjective
        self.two_sided_surjective = two_sided_surjective
        self.d_kills_unit = d_kills_unit
        self.witnesses = witnesses
        if not leibniz:
            self.classification = "not_generalized"
        elif left_surjective:
            self.classification = "fodc"
        else:
            self.classification = "generalized_only"

    def as_dict(self):
        return {
            "classification": self.classification,
            "leibniz": self.leibniz,
            "left_surjective": self.left_surjective,
            "right_surjective": self.right_surjective,
            "two_sided_surjective": self.two_sided_surjective,
            "d_kills_unit": self.d_kills_unit,
            "witnesses": list(self.witnesses),
        }


def leibniz_defect(a: Algebra, omega: Bimodule, d: Mat) -> Mat:
    """d m - (d . 1 + 1 . d) as a matrix A(x)A -> Omega; zero iff Leibniz holds."""
    i_n = Mat.identity(a.field, a.dim)
    d_right = omega.right_mat * kronecker(d, i_n)
    d_left = omega.left_mat * kronecker(i_n, d)
    return d * a.mult_mat - (d_right + d_left)


def check_fodc(a: Algebra, omega: Bimodule, d: Mat) -> FodcReport:
    """Classify (Omega, d) as fodc / generalized-only / not even generalized."""
    if omega.left_alg != a or omega.right_alg != a:
        raise LinAlgError("omega must be an A-A bimodule over the given algebra")
    if (d.rows, d.cols) != (omega.dim, a.dim):
        raise LinAlgError("differential has wrong shape")
    witnesses = []
    i_n = Mat.identity(a.field, a.dim)
    defect = leibniz_defect(a, omega, d)
    leibniz = defect.is_zero()
    if not leibniz:
        n = a.dim
        for col in range(defect.cols):
            if any(v != a.field.zero() for v in defect.column(col)):
                witnesses.append(f"Leibniz fails on e{col // n} (x) e{col % n}")
                break
    one_d = omega.left_mat * kronecker(i_n, d)
    d_one = omega.right_mat * kronecker(d, i_n)
    two_sided = omega.left_mat * kronecker(i_n, omega.right_mat * kronecker(d, i_n))
    left_surj = rank(one_d) == omega.dim
    right_surj = rank(d_one) == omega.dim
    two_surj = rank(two_sided) == omega.dim
    if leibniz and not (left_surj == right_surj == two_surj):
        raise AssertionError(
            "surjectivity variants disagree under Leibniz; engine inconsistency"
        )
    if not left_surj:
        witnesses.append(
            f"dA generates a left submodule of dimension {rank(one_d)} < {omega.dim}"
        )
    d_unit = d * a.unit_mat
    if not d_unit.is_zero():
        witnesses.append("d(1) != 0")
    return FodcReport(leibniz, left_surj, right_surj, two_surj, d_unit.is_zero(), witnesses)


class FirstOrderCalculus:
    """A bimodule with a differential passing the full calculus check."""

    def __init__(self, alg: Algebra, omega: Bimodule, d: Mat, check=True):
        self.alg = alg
        self.omega = omega
        self.d = d
        if check:
            report = check_fodc(alg, omega, d)
            if report.classification != "fodc":
                raise AxiomError(
                    [f"not a first-order calculus ({report.classification})"]
                    + report.witnesses
                )

    @property
    def dim(self) -> int:
        return self.omega.dim

    def __repr__(self):
        return f"FirstOrderCalculus(dim={self.dim} over algebra of dim {self.alg.dim})"


class GeneralizedCalculus:
    """Leibniz only; surjectivity not required."""

    def __init__(self, alg: Algebra, omega: Bimodule, d: Mat, check=True):
        self.alg = alg
        self.omega = omega
        self.d = d
        if check:
            report = check_fodc(alg, omega, d)
            if not report.leibniz:
                raise AxiomError(["Leibniz rule fails"] + report.witnesses)

    @property
    def dim(self) -> int:
        return self.omega.dim


class UniversalCalculus(FirstOrderCalculus):
    """ker(m) with iota d = (i (x) 1) - (1 (x) i), plus the standard splitting.

    iota embeds Omega into A(x)A and retraction = (1 . d) satisfies
    retraction iota = id; the right-action composite satisfies
    (d . 1) iota = -id.  Both are stored because later constructions move
    between Omega and A(x)A constantly.
    """

    def __init__(self, alg: Algebra, omega: Bimodule, d: Mat, iota: Mat, retraction: Mat):
        super().__init__(alg, omega, d, check=True)
        self.iota = iota
        self.retraction = retraction


def universal_calculus(a: Algebra) -> UniversalCalculus:
    f = a.field
    i_n = Mat.identity(f, a.dim)
    iota = kernel_basis(a.mult_mat)
    sq = tensor_square_bimodule(a)
    lm = solve(iota, sq.left_mat * kronecker(i_n, iota))
    rm = solve(iota, sq.right_mat * kronecker(iota, i_n))
    if lm is None or rm is None:
        raise AssertionError("kernel of multiplication is not action-closed")
    omega = Bimodule(a, a, iota.cols, lm, rm, check=False)
    d0 = kronecker(a.unit_mat, i_n) - kronecker(i_n, a.unit_mat)
    d = solve(iota, d0)
    if d is None:
        raise AssertionError("universal differential does not factor through the kernel")
    retraction = lm * kronecker(i_n, d)
    if retraction * iota != Mat.identity(f, iota.cols):
        raise AssertionError("retraction identity (1 . d) iota = id fails")
    if rm * kronecker(d, i_n) * iota != -Mat.identity(f, iota.cols):
        raise AssertionError("split identity (d . 1) iota = -id fails")
    return UniversalCalculus(a, omega, d, iota, retraction)


def zero_calculus(a: Algebra) -> FirstOrderCalculus:
    return FirstOrderCalculus(
        a, zero_bimodule(a, a), Mat.zeros(a.field, 0, a.dim), check=False
    )


def induced_map(u: UniversalCalculus, target: FirstOrderCalculus) -> BimodMap:
    """The unique calculus morphism from the universal calculus.

    f = (1 . d_target) iota; existence and the universal property f d_u = d
    are verified, surjectivity is asserted, and uniqueness is certified by
    checking that no nonzero bimodule map kills d_u.
    """
    if target.alg != u.alg:
        raise LinAlgError("calculi over different algebras")
    report = check_fodc(target.alg, target.omega, target.d)
    if report.classification != "fodc":
        raise PreconditionError("target fails the calculus axioms: " + "; ".join(report.witnesses))
    a = u.alg
    i_n = Mat.identity(a.field, a.dim)
    f_mat = target.omega.left_mat * kronecker(i_n, target.d) * u.iota
    f = BimodMap(u.omega, target.omega, f_mat, check=True)
    if f_mat * u.d != target.d:
        raise AssertionError("induced map does not intertwine the differentials")
    if rank(f_mat) != target.dim:
        raise AssertionError("induced map from the universal calculus is not surjective")
    return f


def induced_map_is_unique(u: UniversalCalculus, target: FirstOrderCalculus) -> bool:
    """No nonzero bimodule map Omega_u -> target kills d_u (0-dim solution space)."""
    hom = bimodule_hom_basis(u.omega, target.omega)
    if not hom:
        return True
    f = u.alg.field
    cols = []
    for h in hom:
        hd = h * u.d
        cols.append([hd.data[i][j] for i in range(hd.rows) for j in range(hd.cols)])
    sys = Mat.from_cols(f, cols, rows=target.dim * u.alg.dim)
    return kernel_basis(sys).cols == 0


def quotient_calculus(c: FirstOrderCalculus, sub_basis: Mat) -> tuple[FirstOrderCalculus, BimodMap]:
    """Quotient of a calculus by an action-closed subspace, with the projection.

    The quotient basis is the echelon complement of the subspace, so repeated
    quotients are reproducible.
    """
    basis = image_basis(sub_basis)
    quo, proj, _s = quotient_bimodule(c.omega, basis)
    d_new = proj.matrix * c.d
    result = FirstOrderCalculus(c.alg, quo, d_new, check=True)
    return result, BimodMap(c.omega, result.omega, proj.matrix, check=False)


def kernel_from_universal(u: UniversalCalculus, c: FirstOrderCalculus) -> Mat:
    """Canonical basis of ker(Omega_u -> c), the subobject classifying c."""
    return kernel_basis(induced_map(u, c).matrix)


def calculus_morphism_exists(u: UniversalCalculus, src: FirstOrderCalculus,
                             dst: FirstOrderCalculus) -> bool:
    """Calc morphisms src -> dst over one algebra exist iff ker(src) <= ker(dst)."""
    from .linalg import subspace_leq

    return subspace_leq(kernel_from_universal(u, src), kernel_from_universal(u, dst))


def calculus_morphism(u: UniversalCalculus, src: FirstOrderCalculus,
                      dst: FirstOrderCalculus) -> Mat | None:
    """The unique morphism matrix src -> dst when it exists, else None."""
    from .linalg import factor_through_surjection

    f_src = induced_map(u, src).matrix
    f_dst = induced_map(u, dst).matrix
    return factor_through_surjection(f_dst, f_src)


def sub_calculus_correspondence(a: Algebra, family: list[Mat]) -> list[dict]:
    """Round-trip each sub-bimodule N through coker and back through ker."""
    u = universal_calculus(a)
    out = []
    for n_basis in family:
        n_canonical = image_basis(n_basis)
        calc, proj = quotient_calculus(u, n_canonical)
        back = kernel_basis(proj.matrix)
        out.append({
            "sub_dim": n_canonical.cols,
            "calculus_dim": calc.dim,
            "roundtrip_equal": back == n_canonical,
            "calculus": calc,
            "sub": n_canonical,
        })
    return out


def enumerate_action_closed_subspaces(m: Bimodule, max_generators: int = 2) -> list[Mat]:
    """A deterministic family of action-closed subspaces of m.

    Over a prime field with few enough vectors the enumeration is exhaustive
    over all spans of nonzero vectors; otherwise it saturates every subset of
    canonical basis vectors of size <= max_generators.  Always contains 0 and
    the full space; results are deduplicated canonical bases.
    """
    from itertools import combinations, product

    f = m.field
    found: dict = {}

    def record(basis: Mat):
        closed = saturate_subspace(m, basis) if basis.cols else basis
        key = (closed.cols, tuple(tuple(f.format(x) for x in row) for row in closed.data))
        found.setdefault(key, closed)

    zero = Mat.zeros(f, m.dim, 0)
    found[(0, tuple(tuple() for _ in range(m.dim)))] = zero
    record(Mat.identity(f, m.dim))
    if not f.is_rational and (f.p ** m.dim - 1) <= 15:
        vectors = [v for v in product(range(f.p), repeat=m.dim) if any(v)]
        for r in range(1, len(vectors) + 1):
            for subset in combinations(vectors, r):
                span = image_basis(Mat.from_cols(f, [list(v) for v in subset], rows=m.dim))
                witness_free = True
                for i in range(m.left_alg.dim):
                    e_i = Mat.zeros(f, m.left_alg.dim, 1)
                    e_i.data[i][0] = f.one()
                    if solve(span, m.left_mat * kronecker(e_i, span)) is None:
                        witness_free = False
                        break
                if witness_free:
                    for j in range(m.right_alg.dim):
                        e_j = Mat.zeros(f, m.right_alg.dim, 1)
                        e_j.data[j][0] = f.one()
                        if solve(span, m.right_mat * kronecker(span, e_j)) is None:
                            witness_free = False
                            break
                if witness_free:
                    key = (span.cols, tuple(tuple(f.format(x) for x in row) for row in span.data))
                    found.setdefault(key, span)
    else:
        basis_vectors = [Mat.identity(f, m.dim).column(i) for i in range(m.dim)]
        indices = range(m.dim)
        for r in range(1, max_generators + 1):
            for subset in combinations(indices, r):
                cols = [basis_vectors[i] for i in subset]
                record(Mat.from_cols(f, cols, rows=m.dim))
        # diagonal directions catch the subspaces missed by pure basis spans
        for i, j in combinations(indices, 2):
            for sign in (f.one(), f.neg(f.one())):
                vec = [f.zero()] * m.dim
                vec[i] = f.one()
                vec[j] = sign
                record(Mat.from_cols(f, [vec], rows=m.dim))
    return [found[k] for k in sorted(found.keys(), key=lambda t: (t[0], t[1]))]


def kernel_counit_comparison(u: UniversalCalculus, left_module: Bimodule) -> dict:
    """ker(mu_M: A(x)M -> M) vs Omega_u (x)_A M, with the explicit inverse pair.

    left_module is an (A, field) bimodule.  Returns both dimensions and the
    two comparison matrices; "invertible" certifies they are mutually inverse.
    """
    a = u.alg
    f = a.field
    if left_module.left_alg != a:
        raise LinAlgError("module is not over the calculus algebra")
    mu = left_module.left_mat
    k_basis = kernel_basis(mu)
    t_mod, q = tensor_over_algebra(u.omega, left_module)
    i_m = Mat.identity(f, left_module.dim)
    g_rhs = kronecker(Mat.identity(f, a.dim), mu) * kronecker(u.iota, i_m)
    from .linalg import factor_through_surjection

    g = factor_through_surjection(g_rhs, q)
    if g is None:
        raise AssertionError("comparison map does not descend to the tensor product")
    t_map = q * kronecker(u.d, i_m) * k_basis
    s_raw = solve(k_basis, g)
    if s_raw is None:
        raise AssertionError("comparison does not land in the kernel of the action")
    # with iota d(a) = 1 (x) a - a (x) 1 the raw pair composes to -id, so the
    # inverse of t is -s
    s_map = -s_raw
    invertible = (
        s_map * t_map == Mat.identity(f, k_basis.cols)
        and t_map * s_map == Mat.identity(f, t_mod.dim)
    )
    return {
        "kernel_dim": k_basis.cols,
        "tensor_dim": t_mod.dim,
        "to_tensor": t_map,
        "to_kernel": s_map,
        "invertible": invertible,
    }
