"""A-B bimodules with explicit action tensors, and their standard constructions.

Actions are kept as matrices: left_mat: A(x)M -> M and right_mat: M(x)B -> M
in the fixed row-major tensor basis.  Left modules and right modules are the
special cases where one side is the base field viewed as a 1-dimensional
algebra, so a single type covers all three notions.
"""

from __future__ import annotations

from .algebra import Algebra, AlgMap, AxiomError, build_truncated_poly
from .linalg import (
    LinAlgError,
    Mat,
    image_basis,
    kernel_basis,
    kronecker,
    quotient_maps,
    rank,
    solve,
    _rref_sparse,
)


def field_algebra(field) -> Algebra:
    """The base field as the unit algebra (1-dimensional)."""
    return build_truncated_poly(field, 1, var="t")


def bimodule_axiom_report(a: Algebra, b: Algebra, dim: int, left_mat: Mat, right_mat: Mat) -> list[str]:
    report = []
    f = a.field
    i_m = Mat.identity(f, dim)
    i_na = Mat.identity(f, a.dim)
    i_nb = Mat.identity(f, b.dim)
    if (left_mat.rows, left_mat.cols) != (dim, a.dim * dim):
        raise LinAlgError("left action matrix has wrong shape")
    if (right_mat.rows, right_mat.cols) != (dim, dim * b.dim):
        raise LinAlgError("right action matrix has wrong shape")
    if left_mat * kronecker(a.mult_mat, i_m) != left_mat * kronecker(i_na, left_mat):
        report.append("left action not associative")
    if left_mat * kronecker(a.unit_mat, i_m) != i_m:
        report.append("left action not unital")
    if right_mat * kronecker(right_mat, i_nb) != right_mat * kronecker(i_m, b.mult_mat):
        report.append("right action not associative")
    if right_mat * kronecker(i_m, b.unit_mat) != i_m:
        report.append("right action not unital")
    if left_mat * kronecker(i_na, right_mat) != right_mat * kronecker(left_mat, i_nb):
        report.append("left and right actions do not commute (middle associativity)")
    return report


class Bimodule:
    """An (A, B)-bimodule on a finite-dimensional space."""

    def __init__(self, left_alg: Algebra, right_alg: Algebra, dim: int,
                 left_mat: Mat, right_mat: Mat, check=True):
        if left_alg.field != right_alg.field:
            raise LinAlgError("bimodule algebras over different fields")
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.field = left_alg.field
        self.dim = dim
        self.left_mat = left_mat
        self.right_mat = right_mat
        if check:
            report = bimodule_axiom_report(left_alg, right_alg, dim, left_mat, right_mat)
            if report:
                raise AxiomError(report)

    @staticmethod
    def from_tensors(left_alg: Algebra, right_alg: Algebra, dim: int, left, right, check=True) -> "Bimodule":
        """left[i][u] = coords of e_i.x_u, right[u][j] = coords of x_u.e_j."""
        f = left_alg.field
        lm = Mat.zeros(f, dim, left_alg.dim * dim)
        for i in range(left_alg.dim):
            for u in range(dim):
                for v, x in enumerate(left[i][u]):
                    lm.data[v][i * dim + u] = f.coerce(x)
        rm = Mat.zeros(f, dim, dim * right_alg.dim)
        for u in range(dim):
            for j in range(right_alg.dim):
                for v, x in enumerate(right[u][j]):
                    rm.data[v][u * right_alg.dim + j] = f.coerce(x)
        return Bimodule(left_alg, right_alg, dim, lm, rm, check=check)

    def left_action_coords(self, i: int, u: int) -> list:
        return self.left_mat.column(i * self.dim + u)

    def right_action_coords(self, u: int, j: int) -> list:
        return self.right_mat.column(u * self.right_alg.dim + j)

    def left_tensor(self):
        return [
            [self.left_action_coords(i, u) for u in range(self.dim)]
            for i in range(self.left_alg.dim)
        ]

    def right_tensor(self):
        return [
            [self.right_action_coords(u, j) for j in range(self.right_alg.dim)]
            for u in range(self.dim)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, Bimodule)
            and self.left_alg == other.left_alg
            and self.right_alg == other.right_alg
            and self.dim == other.dim
            and self.left_mat == other.left_mat
            and self.right_mat == other.right_mat
        )

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over ({self.left_alg.dim}, {self.right_alg.dim}))"


class BimodMap:
    """Morphism of (A, B)-bimodules."""

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Mat, check=True):
        if source.left_alg != target.left_alg or source.right_alg != target.right_alg:
            raise LinAlgError("bimodule morphism between different algebra pairs")
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise LinAlgError("morphism matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            report = bimod_map_report(self)
            if report:
                raise AxiomError(report)

    def __repr__(self):
        return f"BimodMap({self.source.dim} -> {self.target.dim})"


def bimod_map_report(f: BimodMap) -> list[str]:
    report = []
    na = f.source.left_alg.dim
    nb = f.source.right_alg.dim
    fld = f.source.field
    if f.matrix * f.source.left_mat != f.target.left_mat * kronecker(Mat.identity(fld, na), f.matrix):
        report.append("does not commute with the left action")
    if f.matrix * f.source.right_mat != f.target.right_mat * kronecker(f.matrix, Mat.identity(fld, nb)):
        report.append("does not commute with the right action")
    return report


# ---------------------------------------------------------------------------
# standard bimodules
# ---------------------------------------------------------------------------

def regular_bimodule(a: Algebra) -> Bimodule:
    """A acting on itself on both sides."""
    return Bimodule(a, a, a.dim, a.mult_mat, a.mult_mat, check=False)


def tensor_square_bimodule(a: Algebra) -> Bimodule:
    """A(x)A with outer actions m(x)1 and 1(x)m."""
    i_n = Mat.identity(a.field, a.dim)
    return Bimodule(
        a, a, a.dim * a.dim,
        kronecker(a.mult_mat, i_n),
        kronecker(i_n, a.mult_mat),
        check=False,
    )


def free_bimodule(a: Algebra, d: int, b: Algebra) -> Bimodule:
    """The free bimodule A(x)k^d(x)B on a d-dimensional space."""
    f = a.field
    dim = a.dim * d * b.dim
    i_rest = Mat.identity(f, d * b.dim)
    left = kronecker(a.mult_mat, i_rest)
    right = kronecker(Mat.identity(f, a.dim * d), b.mult_mat)
    return Bimodule(a, b, dim, left, right, check=False)


def zero_bimodule(a: Algebra, b: Algebra) -> Bimodule:
    f = a.field
    return Bimodule(a, b, 0, Mat.zeros(f, 0, 0), Mat.zeros(f, 0, 0), check=False)


# ---------------------------------------------------------------------------
# sub/quotient machinery
# ---------------------------------------------------------------------------

def action_closed(m: Bimodule, basis: Mat) -> str | None:
    """None if col(basis) is closed under both actions, else a witness string."""
    f = m.field
    for i in range(m.left_alg.dim):
        e_i = Mat.zeros(f, m.left_alg.dim, 1)
        e_i.data[i][0] = f.one()
        moved = m.left_mat * kronecker(e_i, basis)
        if solve(basis, moved) is None:
            return f"left action of e{i} leaves the subspace"
    for j in range(m.right_alg.dim):
        e_j = Mat.zeros(f, m.right_alg.dim, 1)
        e_j.data[j][0] = f.one()
        moved = m.right_mat * kronecker(basis, e_j)
        if solve(basis, moved) is None:
            return f"right action of e{j} leaves the subspace"
    return None


def sub_bimodule(m: Bimodule, basis: Mat, check=True) -> tuple[Bimodule, BimodMap]:
    """The sub-bimodule on an action-closed subspace, with its inclusion."""
    if check:
        witness = action_closed(m, basis)
        if witness is not None:
            raise LinAlgError(f"subspace is not action-closed: {witness}")
    f = m.field
    i_na = Mat.identity(f, m.left_alg.dim)
    i_nb = Mat.identity(f, m.right_alg.dim)
    lm = solve(basis, m.left_mat * kronecker(i_na, basis))
    rm = solve(basis, m.right_mat * kronecker(basis, i_nb))
    sub = Bimodule(m.left_alg, m.right_alg, basis.cols, lm, rm, check=False)
    return sub, BimodMap(sub, m, basis, check=False)


def quotient_bimodule(m: Bimodule, sub_canonical: Mat) -> tuple[Bimodule, BimodMap, Mat]:
    """Quotient by an action-closed subspace: (quotient, projection, section)."""
    witness = action_closed(m, sub_canonical)
    if witness is not None:
        raise LinAlgError(f"subspace is not action-closed: {witness}")
    f = m.field
    q, s = quotient_maps(sub_canonical, m.dim)
    i_na = Mat.identity(f, m.left_alg.dim)
    i_nb = Mat.identity(f, m.right_alg.dim)
    lm = q * m.left_mat * kronecker(i_na, s)
    rm = q * m.right_mat * kronecker(s, i_nb)
    quo = Bimodule(m.left_alg, m.right_alg, q.rows, lm, rm, check=False)
    return quo, BimodMap(m, quo, q, check=False), s


def bimod_kernel(f: BimodMap) -> tuple[Bimodule, BimodMap]:
    basis = kernel_basis(f.matrix)
    return sub_bimodule(f.source, basis, check=False)


def bimod_cokernel(f: BimodMap) -> tuple[Bimodule, BimodMap]:
    quo, proj, _s = quotient_bimodule(f.target, image_basis(f.matrix))
    return quo, proj


def generated_sub_bimodule(m: Bimodule, gens: list[list]) -> tuple[Bimodule, BimodMap]:
    """Smallest action-closed subspace containing the generators.

    Saturation applies all left basis actions, then all right ones, and
    repeats until the dimension stabilizes (at most dim(M) rounds).
    """
    basis = saturate_subspace(m, gens)
    return sub_bimodule(m, basis, check=False)


def saturate_subspace(m: Bimodule, gens) -> Mat:
    f = m.field
    if isinstance(gens, Mat):
        current = image_basis(gens)
    else:
        for g in gens:
            if len(g) != m.dim:
                raise LinAlgError("generator has wrong dimension")
        current = image_basis(Mat.from_cols(f, [list(g) for g in gens], rows=m.dim))
    while True:
        pieces = [current]
        for i in range(m.left_alg.dim):
            e_i = Mat.zeros(f, m.left_alg.dim, 1)
            e_i.data[i][0] = f.one()
            pieces.append(m.left_mat * kronecker(e_i, current))
        for j in range(m.right_alg.dim):
            e_j = Mat.zeros(f, m.right_alg.dim, 1)
            e_j.data[j][0] = f.one()
            pieces.append(m.right_mat * kronecker(current, e_j))
        bigger = image_basis(Mat.hstack_all(f, pieces, m.dim))
        if bigger.cols == current.cols:
            return current
        current = bigger


# ---------------------------------------------------------------------------
# tensor product over an algebra
# ---------------------------------------------------------------------------

def tensor_over_algebra(m: Bimodule, n: Bimodule) -> tuple[Bimodule, Mat]:
    """M (x)_B N as the cokernel of (nu_M (x) 1 - 1 (x) mu_N), with its quotient map."""
    if m.right_alg != n.left_alg:
        raise LinAlgError("tensor product over mismatched algebras")
    f = m.field
    i_m = Mat.identity(f, m.dim)
    i_n = Mat.identity(f, n.dim)
    rel = kronecker(m.right_mat, i_n) - kronecker(i_m, n.left_mat)
    q, s = quotient_maps(image_basis(rel), m.dim * n.dim)
    i_na = Mat.identity(f, m.left_alg.dim)
    i_nc = Mat.identity(f, n.right_alg.dim)
    lm = q * kronecker(m.left_mat, i_n) * kronecker(i_na, s)
    rm = q * kronecker(i_m, n.right_mat) * kronecker(s, i_nc)
    t = Bimodule(m.left_alg, n.right_alg, q.rows, lm, rm, check=False)
    return t, q


def restrict_bimodule(f: AlgMap, g: AlgMap, m: Bimodule) -> Bimodule:
    """Restriction of scalars along f: A -> B and g: A' -> B'."""
    if f.target != m.left_alg or g.target != m.right_alg:
        raise LinAlgError("restriction maps do not land in the acting algebras")
    i_m = Mat.identity(m.field, m.dim)
    return Bimodule(
        f.source, g.source, m.dim,
        m.left_mat * kronecker(f.matrix, i_m),
        m.right_mat * kronecker(i_m, g.matrix),
        check=False,
    )


def extend_bimodule(f: AlgMap, g: AlgMap, m: Bimodule) -> tuple[Bimodule, Mat]:
    """Extension of scalars (B (x)_A M) (x)_A' B'; also returns the quotient
    map from B (x) M (x) B'."""
    if f.source != m.left_alg or g.source != m.right_alg:
        raise LinAlgError("extension maps do not start at the acting algebras")
    b, bp = f.target, g.target
    fld = m.field
    # B as a (B, A)-bimodule via f, B' as an (A', B')-bimodule via g
    b_bimod = Bimodule(
        b, m.left_alg, b.dim,
        b.mult_mat,
        b.mult_mat * kronecker(Mat.identity(fld, b.dim), f.matrix),
        check=False,
    )
    bp_bimod = Bimodule(
        m.right_alg, bp, bp.dim,
        bp.mult_mat * kronecker(g.matrix, Mat.identity(fld, bp.dim)),
        bp.mult_mat,
        check=False,
    )
    t1, q1 = tensor_over_algebra(b_bimod, m)
    t2, q2 = tensor_over_algebra(t1, bp_bimod)
    q_total = q2 * kronecker(q1, Mat.identity(fld, bp.dim))
    return t2, q_total


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------

def bimodule_hom_basis(m: Bimodule, n: Bimodule) -> list[Mat]:
    """Basis of the space of bimodule maps M -> N (canonical order)."""
    if m.left_alg != n.left_alg or m.right_alg != n.right_alg:
        raise LinAlgError("hom between bimodules over different algebra pairs")
    f = m.field
    zero = f.zero()
    na, nb = m.left_alg.dim, m.right_alg.dim
    mm, mn = m.dim, n.dim
    rows: list[dict] = []
    # h . l_M = l_N . (1 (x) h), unknown h indexed row-major (w * mm + x)
    for w in range(mn):
        for i in range(na):
            for u in range(mm):
                row: dict[int, object] = {}
                for x in range(mm):
                    c = m.left_mat.data[x][i * mm + u]
                    if c != zero:
                        row[w * mm + x] = f.add(row.get(w * mm + x, zero), c)
                for y in range(mn):
                    c = n.left_mat.data[w][i * mn + y]
                    if c != zero:
                        key = y * mm + u
                        row[key] = f.sub(row.get(key, zero), c)
                row = {k: v for k, v in row.items() if v != zero}
                if row:
                    rows.append(row)
    # h . r_M = r_N . (h (x) 1)
    for w in range(mn):
        for u in range(mm):
            for j in range(nb):
                row = {}
                for x in range(mm):
                    c = m.right_mat.data[x][u * nb + j]
                    if c != zero:
                        row[w * mm + x] = f.add(row.get(w * mm + x, zero), c)
                for y in range(mn):
                    c = n.right_mat.data[w][y * nb + j]
                    if c != zero:
                        key = y * mm + u
                        row[key] = f.sub(row.get(key, zero), c)
                row = {k: v for k, v in row.items() if v != zero}
                if row:
                    rows.append(row)
    nunk = mn * mm
    prows, pcols = _rref_sparse(f, rows, nunk)
    pivot_of = {c: r for c, r in zip(pcols, prows)}
    free = [c for c in range(nunk) if c not in pivot_of]
    basis = []
    for fc in free:
        vec = [zero] * nunk
        vec[fc] = f.one()
        for pc, row in zip(pcols, prows):
            coeff = row.get(fc)
            if coeff is not None:
                vec[pc] = f.neg(coeff)
        h = Mat.zeros(f, mn, mm)
        for w in range(mn):
            for x in range(mm):
                h.data[w][x] = vec[w * mm + x]
        basis.append(h)
    return basis


def bimodule_hom_dim(m: Bimodule, n: Bimodule) -> int:
    return len(bimodule_hom_basis(m, n))
