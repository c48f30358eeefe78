#!/usr/bin/env python3
"""Regenerate the committed fixture documents from the package's fixtures.

Run from the repository root:  python fixtures/regen.py
"""

from fractions import Fraction
from pathlib import Path

from supermalcev import (
    GradedLinearMap,
    Tensor2,
    adjoint_representation,
    regular_bimodule,
)
from supermalcev import fixtures
from supermalcev.serialize import AlgebraDocument, serialize

HERE = Path(__file__).resolve().parent


def main():
    sl2 = fixtures.sl2()
    zorn = fixtures.zorn_split_octonions()
    rb = fixtures.rb_sl2_nilpotent()

    docs = {
        "sl2.json": AlgebraDocument(sl2),
        "split_octonions.json": AlgebraDocument(fixtures.split_octonions()),
        "zorn_octonions.json": AlgebraDocument(zorn),
        "heisenberg11.json": AlgebraDocument(fixtures.heisenberg_1_1()),
        "pre_malcev11.json": AlgebraDocument(fixtures.pre_malcev_1_1()),
        "pre_lie_sl2.json": AlgebraDocument(fixtures.pre_lie_sl2()),
        "sl2_rb.json": AlgebraDocument(
            sl2, linear_map=rb, linear_map_domain="algebra"),
        "sl2_adjoint.json": AlgebraDocument(
            sl2, representation=adjoint_representation(sl2)),
        "sl2_adjoint_rb.json": AlgebraDocument(
            sl2, representation=adjoint_representation(sl2),
            linear_map=rb, linear_map_domain="module"),
        "zorn_regular_rb.json": AlgebraDocument(
            zorn, bimodule=regular_bimodule(zorn),
            linear_map=GradedLinearMap(
                zorn.space, zorn.space,
                tuple(tuple(Fraction(1) if (i, j) == (2, 3) else Fraction(0)
                            for j in range(8)) for i in range(8)),
                0),
            linear_map_domain="module"),
        "sl2_r_zero.json": AlgebraDocument(
            sl2, tensor2=Tensor2.zero(sl2.space)),
        # h /\ e: a nonzero skew solution of the MYBE on sl(2)
        "sl2_r_solution.json": AlgebraDocument(
            sl2, tensor2=Tensor2(sl2.space, (
                (0, 1, 0), (-1, 0, 0), (0, 0, 0)))),
        # h /\ f + e /\ f: skew but not a solution
        "sl2_r_nonsolution.json": AlgebraDocument(
            sl2, tensor2=Tensor2(sl2.space, (
                (0, 0, 1), (0, 0, 1), (-1, -1, 0)))),
        "abelian22_r.json": AlgebraDocument(
            fixtures.zero_algebra(2, 2),
            tensor2=Tensor2(fixtures.zero_algebra(2, 2).space, (
                (0, 1, 0, 0), (-1, 0, 0, 0),
                (0, 0, 1, 0), (0, 0, 0, 1)))),
        "broken_premalcev.json": AlgebraDocument(
            fixtures.random_product(fixtures.heisenberg_1_1().space, seed=7)),
    }
    for name, doc in docs.items():
        (HERE / name).write_text(serialize(doc), encoding="utf-8")
        print("wrote", name)


if __name__ == "__main__":
    main()
