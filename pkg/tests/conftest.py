from __future__ import annotations

from itertools import permutations

import pytest

from omegacalc.algebra import (
    build_group_algebra,
    build_matrix_algebra,
    build_truncated_poly,
)
from omegacalc.bimodule import field_algebra
from omegacalc.linalg import GF, QQ


def s3_cayley_table():
    perms = list(permutations([0, 1, 2]))
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    return [[perms.index(compose(p, q)) for q in perms] for p in perms]


@pytest.fixture(scope="session")
def qq_alg():
    return field_algebra(QQ)


@pytest.fixture(scope="session")
def qx2():
    return build_truncated_poly(QQ, 2)


@pytest.fixture(scope="session")
def qx3():
    return build_truncated_poly(QQ, 3)


@pytest.fixture(scope="session")
def qx4():
    return build_truncated_poly(QQ, 4)


@pytest.fixture(scope="session")
def qy2():
    return build_truncated_poly(QQ, 2, var="y")


@pytest.fixture(scope="session")
def f2x2():
    return build_truncated_poly(GF(2), 2)


@pytest.fixture(scope="session")
def f3x3():
    return build_truncated_poly(GF(3), 3)


@pytest.fixture(scope="session")
def qz2():
    return build_group_algebra(QQ, [[0, 1], [1, 0]])


@pytest.fixture(scope="session")
def qz3():
    return build_group_algebra(QQ, [[0, 1, 2], [1, 2, 0], [2, 0, 1]])


@pytest.fixture(scope="session")
def qs3():
    return build_group_algebra(QQ, s3_cayley_table())


@pytest.fixture(scope="session")
def m2q():
    return build_matrix_algebra(QQ, 2)
