"""Finite-dimensional unital associative algebras given by structure constants.

An algebra is the data (field, dim, basis labels, structure tensor, unit
coordinates) with e_i * e_j = sum_k c[i][j][k] e_k.  The structure tensor is
the single source of truth; all axiom checks are matrix identities on the
multiplication matrix m: A(x)A -> A.
"""

from __future__ import annotations

from .linalg import (
    Field,
    LinAlgError,
    Mat,
    kronecker,
    swap_matrix,
)


class AxiomError(ValueError):
    """Raised when typed construction meets data violating the axioms."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report) if report else "axiom violation")


def _mult_matrix(field: Field, dim: int, mult) -> Mat:
    """Multiplication as a matrix A(x)A -> A, column (i*dim+j) = coords of e_i e_j."""
    m = Mat.zeros(field, dim, dim * dim)
    for i in range(dim):
        for j in range(dim):
            coords = mult[i][j]
            if len(coords) != dim:
                raise LinAlgError("structure tensor shape mismatch")
            for k in range(dim):
                m.data[k][i * dim + j] = field.coerce(coords[k])
    return m


def algebra_axiom_report(field: Field, dim: int, mult, unit) -> list[str]:
    """Every violated monoid axiom, with a witnessing triple or unit index."""
    report = []
    try:
        m = _mult_matrix(field, dim, mult)
    except (LinAlgError, IndexError, TypeError) as exc:
        raise LinAlgError(f"bad structure data: {exc}") from exc
    if len(unit) != dim:
        raise LinAlgError("unit vector has wrong length")
    u = Mat.col_vector(field, unit)
    i_n = Mat.identity(field, dim)
    assoc_l = m * kronecker(m, i_n)
    assoc_r = m * kronecker(i_n, m)
    if assoc_l != assoc_r:
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    col = (i * dim + j) * dim + k
                    if assoc_l.column(col) != assoc_r.column(col):
                        report.append(
                            f"associativity fails at (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"
                        )
    left_unit = m * kronecker(u, i_n)
    right_unit = m * kronecker(i_n, u)
    for name, got in (("left", left_unit), ("right", right_unit)):
        if got != i_n:
            for j in range(dim):
                if got.column(j) != i_n.column(j):
                    report.append(f"{name} unit law fails at e{j}")
    return report


class Algebra:
    """A monoid in the category of finite-dimensional vector spaces."""

    def __init__(self, field: Field, dim: int, mult, unit, basis_labels=None, check=True):
        self.field = field
        self.dim = dim
        self.mult = [
            [[field.coerce(x) for x in mult[i][j]] for j in range(dim)]
            for i in range(dim)
        ]
        self.unit = [field.coerce(x) for x in unit]
        self.basis_labels = list(basis_labels) if basis_labels else [f"e{i}" for i in range(dim)]
        if len(self.basis_labels) != dim:
            raise LinAlgError("basis label count mismatch")
        self.mult_mat = _mult_matrix(field, dim, self.mult)
        self.unit_mat = Mat.col_vector(field, self.unit)
        if check:
            report = algebra_axiom_report(field, dim, self.mult, self.unit)
            if report:
                raise AxiomError(report)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __repr__(self):
        return f"Algebra(dim={self.dim} over {self.field})"

    def identity_map(self) -> "AlgMap":
        return AlgMap(self, self, Mat.identity(self.field, self.dim))

    def multiply(self, x: list, y: list) -> list:
        xv = Mat.col_vector(self.field, x)
        yv = Mat.col_vector(self.field, y)
        return (self.mult_mat * kronecker(xv, yv)).column(0)


def check_algebra(field: Field, dim: int, mult, unit) -> list[str]:
    """Diagnostic report on raw structure data; empty iff the data is a monoid."""
    return algebra_axiom_report(field, dim, mult, unit)


def is_commutative(a: Algebra) -> bool:
    return a.mult_mat * swap_matrix(a.field, a.dim, a.dim) == a.mult_mat


def commutativity_witness(a: Algebra):
    """A pair (i, j) with e_i e_j != e_j e_i, or None."""
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.mult[i][j] != a.mult[j][i]:
                return (i, j)
    return None


def opposite(a: Algebra) -> Algebra:
    mult = [[a.mult[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return Algebra(a.field, a.dim, mult, a.unit, [lb + "^op" for lb in a.basis_labels])


class AlgMap:
    """Algebra morphism; matrix[k][i] = coefficient of target e_k in f(e_i)."""

    def __init__(self, source: Algebra, target: Algebra, matrix: Mat, check=True):
        if source.field != target.field:
            raise LinAlgError("field mismatch between source and target")
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise LinAlgError("morphism matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            report = alg_map_report(self)
            if report:
                raise AxiomError(report)

    def compose(self, inner: "AlgMap") -> "AlgMap":
        if inner.target is not self.source and inner.target != self.source:
            raise LinAlgError("composition mismatch")
        return AlgMap(inner.source, self.target, self.matrix * inner.matrix, check=False)

    def __repr__(self):
        return f"AlgMap({self.source.dim} -> {self.target.dim})"


def alg_map_report(f: AlgMap) -> list[str]:
    """Multiplicativity/unit failures of f with basis witnesses."""
    report = []
    lhs = f.target.mult_mat * kronecker(f.matrix, f.matrix)
    rhs = f.matrix * f.source.mult_mat
    if lhs != rhs:
        n = f.source.dim
        for i in range(n):
            for j in range(n):
                if lhs.column(i * n + j) != rhs.column(i * n + j):
                    report.append(f"multiplicativity fails at f(e{i} e{j}) != f(e{i}) f(e{j})")
    if f.matrix * f.source.unit_mat != f.target.unit_mat:
        report.append("unit is not preserved")
    return report


def check_alg_map(source: Algebra, target: Algebra, matrix: Mat) -> list[str]:
    return alg_map_report(AlgMap(source, target, matrix, check=False))


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_truncated_poly(field: Field, n: int, var: str = "x") -> Algebra:
    """field[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise LinAlgError("dimension must be at least 1")
    zero, one = field.zero(), field.one()
    mult = [
        [
            [one if k == i + j else zero for k in range(n)] if i + j < n else [zero] * n
            for j in range(n)
        ]
        for i in range(n)
    ]
    unit = [one] + [zero] * (n - 1)
    labels = ["1"] + [var if e == 1 else f"{var}^{e}" for e in range(1, n)]
    return Algebra(field, n, mult, unit, labels)


def _check_group_table(table: list[list[int]]) -> int:
    """Validate a Cayley table (rows/cols permutations, identity, associativity).

    Returns the index of the identity element.
    """
    n = len(table)
    idx = set(range(n))
    for row in table:
        if len(row) != n or set(row) != idx:
            raise LinAlgError("Cayley table rows must be permutations")
    for j in range(n):
        if {table[i][j] for i in range(n)} != idx:
            raise LinAlgError("Cayley table columns must be permutations")
    identity = None
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise LinAlgError("Cayley table has no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise LinAlgError(f"Cayley table not associative at ({i},{j},{k})")
    return identity


def build_group_algebra(field: Field, cayley_table: list[list[int]], labels=None) -> Algebra:
    """Group algebra of a finite group given by its multiplication table."""
    identity = _check_group_table(cayley_table)
    n = len(cayley_table)
    zero, one = field.zero(), field.one()
    mult = [
        [[one if k == cayley_table[i][j] else zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    unit = [one if i == identity else zero for i in range(n)]
    labels = labels or [f"g{i}" for i in range(n)]
    return Algebra(field, n, mult, unit, labels)


def build_matrix_algebra(field: Field, k: int) -> Algebra:
    """Full matrix algebra M_k with basis E_ab ordered row-major (a*k+b)."""
    n = k * k
    zero, one = field.zero(), field.one()
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for a in range(k):
        for b in range(k):
            for c in range(k):
                for d in range(k):
                    if b == c:
                        mult[a * k + b][c * k + d][a * k + d] = one
    unit = [one if a == b else zero for a in range(k) for b in range(k)]
    labels = [f"E{a}{b}" for a in range(k) for b in range(k)]
    return Algebra(field, n, mult, unit, labels)


def build_square_zero(a: Algebra, m) -> Algebra:
    """The square-zero extension A (+) M: (a,m)(a',m') = (aa', a m' + m a')."""
    from .bimodule import Bimodule  # local import to avoid a cycle

    if not isinstance(m, Bimodule):
        raise LinAlgError("second argument must be a bimodule")
    if m.left_alg != a or m.right_alg != a:
        raise LinAlgError("bimodule must be an A-A bimodule over the given algebra")
    field = a.field
    n, d = a.dim, m.dim
    dim = n + d
    zero = field.zero()
    mult = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            coords = a.mult[i][j]
            for k in range(n):
                mult[i][j][k] = coords[k]
    for i in range(n):
        for u in range(d):
            coords = m.left_action_coords(i, u)
            for v in range(d):
                mult[i][n + u][n + v] = coords[v]
    for u in range(d):
        for j in range(n):
            coords = m.right_action_coords(u, j)
            for v in range(d):
                mult[n + u][j][n + v] = coords[v]
    unit = list(a.unit) + [zero] * d
    labels = list(a.basis_labels) + [f"m{u}" for u in range(d)]
    return Algebra(field, dim, mult, unit, labels)
