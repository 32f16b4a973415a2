#!/usr/bin/env python3
"""Regenerate the shipped fixture corpus from the library builders."""

from itertools import permutations
from pathlib import Path

from omegacalc.algebra import (
    build_group_algebra,
    build_matrix_algebra,
    build_truncated_poly,
)
from omegacalc.hopf import group_like_bimonoid
from omegacalc.io import algebra_to_json, dump_json
from omegacalc.linalg import GF, QQ

OUT = Path(__file__).resolve().parent.parent / "src" / "omegacalc" / "fixtures"


def s3_table():
    perms = list(permutations([0, 1, 2]))
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    return [[perms.index(compose(p, q)) for q in perms] for p in perms]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    plain = {
        "q": build_truncated_poly(QQ, 1),
        "qx2": build_truncated_poly(QQ, 2),
        "qx3": build_truncated_poly(QQ, 3),
        "qx4": build_truncated_poly(QQ, 4),
        "f2x2": build_truncated_poly(GF(2), 2),
        "f3x3": build_truncated_poly(GF(3), 3),
        "m2q": build_matrix_algebra(QQ, 2),
        "qs3": build_group_algebra(
            QQ, s3_table(), labels=["e", "r", "r2", "s", "sr", "sr2"][:6]
        ),
    }
    grouplike = {
        "qz2": build_group_algebra(QQ, [[0, 1], [1, 0]], labels=["e", "g"]),
        "qz3": build_group_algebra(
            QQ, [[0, 1, 2], [1, 2, 0], [2, 0, 1]], labels=["e", "g", "g2"]
        ),
    }
    for name, alg in plain.items():
        (OUT / f"{name}.json").write_text(dump_json(algebra_to_json(alg)))
    for name, alg in grouplike.items():
        h = group_like_bimonoid(alg)
        (OUT / f"{name}.json").write_text(
            dump_json(algebra_to_json(alg, comult=h.comult, counit=h.counit))
        )
    qy2 = build_truncated_poly(QQ, 2, var="y")
    qx4 = build_truncated_poly(QQ, 4)
    morphism = {
        "source": algebra_to_json(qy2),
        "target": algebra_to_json(qx4),
        "matrix": [["1", "0"], ["0", "0"], ["0", "1"], ["0", "0"]],
    }
    (OUT / "y_to_x2.json").write_text(dump_json(morphism))
    print(f"wrote {len(plain) + len(grouplike) + 1} fixtures to {OUT}")


if __name__ == "__main__":
    main()
