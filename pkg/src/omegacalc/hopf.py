"""Bimonoids (bialgebras), Hopf-module structure on the universal calculus,
and bicovariance of quotient calculi.

Coactions are plain matrices into tensor product spaces: lambda: M -> A(x)M
and rho: M -> M(x)A.  The canonical coactions on A(x)A apply the
comultiplication to both legs and multiply the outer (resp. inner) halves;
the universal calculus inherits them by restricting through its inclusion,
which is simultaneously the composite formulas of the construction (the
left one up to the sign of the splitting (d . 1) iota = -id).
Antipodes are never needed and are not modeled.
"""

from __future__ import annotations

from .algebra import Algebra, AxiomError
from .bimodule import Bimodule
from .fodc import (
    FirstOrderCalculus,
    PreconditionError,
    UniversalCalculus,
    induced_map,
    universal_calculus,
)
from .linalg import (
    LinAlgError,
    Mat,
    factor_through_surjection,
    kernel_basis,
    kronecker,
    solve,
    subspace_leq,
    swap_matrix,
)


def bimonoid_axiom_report(a: Algebra, comult: Mat, counit: Mat) -> list[str]:
    """Coassociativity, counit laws, and the algebra-map conditions."""
    n = a.dim
    f = a.field
    if (comult.rows, comult.cols) != (n * n, n):
        raise LinAlgError("comultiplication has wrong shape")
    if (counit.rows, counit.cols) != (1, n):
        raise LinAlgError("counit has wrong shape")
    i_n = Mat.identity(f, n)
    report = []
    if kronecker(comult, i_n) * comult != kronecker(i_n, comult) * comult:
        for j in range(n):
            lhs = (kronecker(comult, i_n) * comult).column(j)
            rhs = (kronecker(i_n, comult) * comult).column(j)
            if lhs != rhs:
                report.append(f"coassociativity fails on e{j}")
    if kronecker(counit, i_n) * comult != i_n:
        report.append("left counit law fails")
    if kronecker(i_n, counit) * comult != i_n:
        report.append("right counit law fails")
    mid = kronecker(i_n, kronecker(swap_matrix(f, n, n), i_n))
    mult_aa = kronecker(a.mult_mat, a.mult_mat) * mid
    if comult * a.mult_mat != mult_aa * kronecker(comult, comult):
        report.append("comultiplication is not an algebra map")
    if comult * a.unit_mat != kronecker(a.unit_mat, a.unit_mat):
        report.append("comultiplication does not preserve the unit")
    if counit * a.mult_mat != kronecker(counit, counit):
        report.append("counit is not an algebra map")
    if counit * a.unit_mat != Mat.identity(f, 1):
        report.append("counit does not preserve the unit")
    return report


class Bimonoid:
    """An algebra with compatible comultiplication and counit."""

    def __init__(self, alg: Algebra, comult: Mat, counit: Mat, check=True):
        self.alg = alg
        self.comult = comult
        self.counit = counit
        if check:
            report = bimonoid_axiom_report(alg, comult, counit)
            if report:
                raise AxiomError(report)

    def __repr__(self):
        return f"Bimonoid(dim={self.alg.dim})"


def check_bimonoid(a: Algebra, comult: Mat, counit: Mat) -> list[str]:
    return bimonoid_axiom_report(a, comult, counit)


def group_like_bimonoid(group_alg: Algebra) -> Bimonoid:
    """Delta(g) = g (x) g, eps(g) = 1 on a group algebra basis."""
    n = group_alg.dim
    f = group_alg.field
    comult = Mat.zeros(f, n * n, n)
    one = f.one()
    for g in range(n):
        comult.data[g * n + g][g] = one
    counit = Mat(f, [[one] * n])
    return Bimonoid(group_alg, comult, counit)


def regular_coactions(h: Bimonoid) -> tuple[Mat, Mat]:
    """The canonical coactions of A(x)A: left and right codiagonals."""
    a = h.alg
    n = a.dim
    f = a.field
    i_n = Mat.identity(f, n)
    i_nn = Mat.identity(f, n * n)
    mid = kronecker(i_n, kronecker(swap_matrix(f, n, n), i_n))
    lam = kronecker(a.mult_mat, i_nn) * mid * kronecker(h.comult, h.comult)
    rho = kronecker(i_nn, a.mult_mat) * mid * kronecker(h.comult, h.comult)
    return lam, rho


def check_hopf_module(h: Bimonoid, m: Bimodule, lam: Mat, rho: Mat) -> list[str]:
    """Every violated Hopf-module axiom, by name.

    The two compatibility clauses pair each coaction with the opposite-side
    action through the comultiplication; the same-side pairings hold for all
    the canonical structures and are reported as well.
    """
    a = h.alg
    n = a.dim
    f = a.field
    dim = m.dim
    if m.left_alg != a or m.right_alg != a:
        raise LinAlgError("Hopf module must be an A-A bimodule over the bimonoid")
    if (lam.rows, lam.cols) != (n * dim, dim):
        raise LinAlgError("left coaction has wrong shape")
    if (rho.rows, rho.cols) != (dim * n, dim):
        raise LinAlgError("right coaction has wrong shape")
    i_n = Mat.identity(f, n)
    i_m = Mat.identity(f, dim)
    report = []
    if kronecker(h.comult, i_m) * lam != kronecker(i_n, lam) * lam:
        report.append("left coaction coassociativity fails")
    if kronecker(h.counit, i_m) * lam != i_m:
        report.append("left coaction counit law fails")
    if kronecker(i_m, h.comult) * rho != kronecker(rho, i_n) * rho:
        report.append("right coaction coassociativity fails")
    if kronecker(i_m, h.counit) * rho != i_m:
        report.append("right coaction counit law fails")
    if kronecker(i_n, rho) * lam != kronecker(lam, i_n) * rho:
        report.append("left and right coactions do not commute")
    l_mat, r_mat = m.left_mat, m.right_mat
    delta = h.comult
    # lambda(x . b) = x_(-1) b_(1) (x) x_(0) . b_(2)
    shuffle_ma = kronecker(i_n, kronecker(swap_matrix(f, dim, n), i_n))
    if lam * r_mat != kronecker(a.mult_mat, r_mat) * shuffle_ma * kronecker(lam, delta):
        report.append("left coaction is not a map of right modules")
    # rho(a . x) = a_(1) . x_(0) (x) a_(2) x_(1)
    shuffle_am = kronecker(i_n, kronecker(swap_matrix(f, n, dim), i_n))
    if rho * l_mat != kronecker(l_mat, a.mult_mat) * shuffle_am * kronecker(delta, rho):
        report.append("right coaction is not a map of left modules")
    # same-side diagonals, as engine self-checks
    shuffle_aa_m = kronecker(i_n, kronecker(swap_matrix(f, n, n), i_m))
    if lam * l_mat != kronecker(a.mult_mat, l_mat) * shuffle_aa_m * kronecker(delta, lam):
        report.append("left coaction is not a map of left modules")
    shuffle_m_aa = kronecker(i_m, kronecker(swap_matrix(f, n, n), i_n))
    if rho * r_mat != kronecker(r_mat, a.mult_mat) * shuffle_m_aa * kronecker(rho, delta):
        report.append("right coaction is not a map of right modules")
    return report


class HopfCalculus:
    """A calculus together with compatible coactions (a Hopf calculus)."""

    def __init__(self, calculus: FirstOrderCalculus, lam: Mat, rho: Mat):
        self.calculus = calculus
        self.lam = lam
        self.rho = rho

    @property
    def dim(self):
        return self.calculus.dim


def d_comodule_report(h: Bimonoid, calc: FirstOrderCalculus, lam: Mat, rho: Mat) -> list[str]:
    """d intertwines the coactions with the comultiplication (two identities)."""
    n = h.alg.dim
    i_n = Mat.identity(h.alg.field, n)
    report = []
    if lam * calc.d != kronecker(i_n, calc.d) * h.comult:
        report.append("d is not a left comodule map")
    if rho * calc.d != kronecker(calc.d, i_n) * h.comult:
        report.append("d is not a right comodule map")
    return report


def universal_coactions(h: Bimonoid, u: UniversalCalculus | None = None) -> HopfCalculus:
    """The Hopf structure on the universal calculus of a bimonoid.

    The coactions are the restrictions of the canonical A(x)A coactions
    through iota; the retraction composites reproduce them exactly (the left
    one with the sign carried by (d . 1) iota = -id), and all Hopf-module
    and d-comodule axioms are verified before returning.
    """
    report = bimonoid_axiom_report(h.alg, h.comult, h.counit)
    if report:
        raise PreconditionError("; ".join(report))
    a = h.alg
    u = u or universal_calculus(a)
    n = a.dim
    f = a.field
    i_n = Mat.identity(f, n)
    lam_reg, rho_reg = regular_coactions(h)
    lam = solve(kronecker(i_n, u.iota), lam_reg * u.iota)
    rho = solve(kronecker(u.iota, i_n), rho_reg * u.iota)
    if lam is None or rho is None:
        raise AssertionError("canonical coactions do not restrict to the kernel")
    # composite formulas from the construction
    if rho != kronecker(u.retraction, i_n) * rho_reg * u.iota:
        raise AssertionError("right coaction differs from its defining composite")
    d_dot_one = u.omega.right_mat * kronecker(u.d, i_n)
    if lam != -(kronecker(i_n, d_dot_one) * lam_reg * u.iota):
        raise AssertionError("left coaction differs from its defining composite (sign)")
    axioms = check_hopf_module(h, u.omega, lam, rho)
    if axioms:
        raise AssertionError("universal Hopf module fails axioms: " + "; ".join(axioms))
    d_rep = d_comodule_report(h, u, lam, rho)
    if d_rep:
        raise AssertionError("; ".join(d_rep))
    return HopfCalculus(u, lam, rho)


def bicovariance_check(h: Bimonoid, c: FirstOrderCalculus) -> dict:
    """Is ker(Omega_u -> c) a subcomodule for both canonical coactions?

    When it is, the quotient coactions are returned and the full Hopf
    calculus axioms are verified on the quotient.
    """
    u = universal_calculus(h.alg)
    hopf_u = universal_coactions(h, u)
    n = h.alg.dim
    f = h.alg.field
    i_n = Mat.identity(f, n)
    proj = induced_map(u, c).matrix
    nker = kernel_basis(proj)
    witnesses = []
    if nker.cols:
        if not subspace_leq(hopf_u.lam * nker, kronecker(i_n, nker)):
            witnesses.append("left coaction moves the defining subobject out of A (x) N")
        if not subspace_leq(hopf_u.rho * nker, kronecker(nker, i_n)):
            witnesses.append("right coaction moves the defining subobject out of N (x) A")
    if witnesses:
        return {"bicovariant": False, "witnesses": witnesses}
    lam_c = factor_through_surjection(kronecker(i_n, proj) * hopf_u.lam, proj)
    rho_c = factor_through_surjection(kronecker(proj, i_n) * hopf_u.rho, proj)
    if lam_c is None or rho_c is None:
        raise AssertionError("coactions fail to descend despite the subcomodule check")
    axioms = check_hopf_module(h, c.omega, lam_c, rho_c)
    d_rep = d_comodule_report(h, c, lam_c, rho_c)
    return {
        "bicovariant": True,
        "witnesses": [],
        "lam": lam_c,
        "rho": rho_c,
        "quotient_axioms": axioms,
        "d_comodule": d_rep,
        "hopf_calculus_ok": not axioms and not d_rep,
    }
