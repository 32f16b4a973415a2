"""The Kaehler calculus of a commutative algebra.

Realized as the quotient of the universal calculus by the image of
(d . 1) - (1 . d) swap on A(x)A, which forces a . db = db . a; the result is
the classical module of Kaehler differentials together with its universal
derivation.  Only the symmetric swap braiding is supported.
"""

from __future__ import annotations

from .algebra import Algebra, commutativity_witness, is_commutative
from .bimodule import Bimodule, saturate_subspace
from .fodc import (
    FirstOrderCalculus,
    PreconditionError,
    UniversalCalculus,
    quotient_calculus,
    universal_calculus,
)
from .linalg import Mat, image_basis, kronecker, swap_matrix


def kahler_relations(u: UniversalCalculus) -> Mat:
    """The centrality relations: the sub-bimodule generated by the image of
    (d . 1) - (1 . d) swap on A(x)A.

    The coequalizer lives in bimodules, so the plain image is closed up under
    both actions (for dim >= 3 it is not action-closed on its own).
    """
    a = u.alg
    i_n = Mat.identity(a.field, a.dim)
    d_one = u.omega.right_mat * kronecker(u.d, i_n)
    one_d = u.omega.left_mat * kronecker(i_n, u.d)
    rel = d_one - one_d * swap_matrix(a.field, a.dim, a.dim)
    return saturate_subspace(u.omega, image_basis(rel))


def kahler_calculus(a: Algebra, u: UniversalCalculus | None = None) -> FirstOrderCalculus:
    """The central quotient of the universal calculus of a commutative algebra."""
    if not is_commutative(a):
        i, j = commutativity_witness(a)
        raise PreconditionError(
            f"algebra is not commutative: e{i}*e{j} != e{j}*e{i}"
        )
    u = u or universal_calculus(a)
    relations = kahler_relations(u)
    calc, _proj = quotient_calculus(u, relations)
    if not centrality_check(calc.omega):
        raise AssertionError("Kaehler quotient is not a central bimodule")
    return calc


def centrality_check(m: Bimodule) -> bool:
    """Left and right actions agree through the swap (central bimodule)."""
    if m.left_alg != m.right_alg or not is_commutative(m.left_alg):
        raise PreconditionError("centrality needs equal commutative acting algebras")
    n = m.left_alg.dim
    f = m.field
    swap_ma = swap_matrix(f, m.dim, n)  # M (x) A -> A (x) M
    swap_am = swap_matrix(f, n, m.dim)  # A (x) M -> M (x) A
    return (
        m.right_mat == m.left_mat * swap_ma
        and m.left_mat == m.right_mat * swap_am
    )
