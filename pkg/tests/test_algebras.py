"""Checker tests against independent brute-force oracles.

The oracles below only ever touch raw structure-constant tables; they
share no evaluation code with the library.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supermalcev import (
    ParityViolation,
    SuperSpace,
    Superalgebra,
    check_left_alternative,
    check_malcev,
    check_pre_alternative,
    check_pre_malcev,
    check_right_alternative,
    commutator_superalgebra,
    pre_malcev_from_pre_alternative,
    sum_pre_alternative,
)
from supermalcev import fixtures

Z = Fraction(0)


# -- oracle helpers (raw-table arithmetic only) ---------------------------


def naive_mul(table, x, y):
    n = len(table)
    out = [Z] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * table[i][j][k]
    return out


def basis(n, i):
    v = [Z] * n
    v[i] = Fraction(1)
    return v


def vec_add(a, b, factor=Fraction(1)):
    return [x + factor * y for x, y in zip(a, b)]


def is_zero(v):
    return all(x == 0 for x in v)


def sgn(p, q):
    return -1 if (p % 2) and (q % 2) else 1


def naive_bracket(table, par, x, y):
    px = next((par[i] for i, c in enumerate(x) if c != 0), 0)
    py = next((par[j] for j, c in enumerate(y) if c != 0), 0)
    return vec_add(naive_mul(table, x, y), naive_mul(table, y, x), Fraction(-sgn(px, py)))


def oracle_left_alternative_failures(A):
    table, par = A.table("mul"), A.space.parities()
    n = A.space.dim
    bad = set()
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        as1 = vec_add(naive_mul(table, naive_mul(table, x, y), z),
                      naive_mul(table, x, naive_mul(table, y, z)), Fraction(-1))
        as2 = vec_add(naive_mul(table, naive_mul(table, y, x), z),
                      naive_mul(table, y, naive_mul(table, x, z)), Fraction(-1))
        if not is_zero(vec_add(as1, as2, Fraction(sgn(par[i], par[j])))):
            bad.add((i, j, k))
    return bad


def oracle_right_alternative_failures(A):
    table, par = A.table("mul"), A.space.parities()
    n = A.space.dim
    bad = set()
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        as1 = vec_add(naive_mul(table, naive_mul(table, x, y), z),
                      naive_mul(table, x, naive_mul(table, y, z)), Fraction(-1))
        as2 = vec_add(naive_mul(table, naive_mul(table, x, z), y),
                      naive_mul(table, x, naive_mul(table, z, y)), Fraction(-1))
        if not is_zero(vec_add(as1, as2, Fraction(sgn(par[j], par[k])))):
            bad.add((i, j, k))
    return bad


def oracle_malcev_failures(A):
    """Quadruples violating Def (ii); pairs violating anticommutativity."""
    table, par = A.table("mul"), A.space.parities()
    n = A.space.dim
    bad_pairs = set()
    for i, j in itertools.product(range(n), repeat=2):
        x, y = basis(n, i), basis(n, j)
        if not is_zero(vec_add(naive_mul(table, x, y), naive_mul(table, y, x),
                               Fraction(sgn(par[i], par[j])))):
            bad_pairs.add((i, j))
    bad_quads = set()
    for i, j, k, l in itertools.product(range(n), repeat=4):
        x, y, z, t = basis(n, i), basis(n, j), basis(n, k), basis(n, l)
        br = lambda a, b: naive_mul(table, a, b)
        lhs = [Fraction(sgn(par[j], par[k])) * c for c in br(br(x, z), br(y, t))]
        rhs = br(br(br(x, y), z), t)
        rhs = vec_add(rhs, br(br(br(y, z), t), x),
                      Fraction(sgn(par[i], par[j] + par[k] + par[l])))
        rhs = vec_add(rhs, br(br(br(z, t), x), y),
                      Fraction(sgn(par[i] + par[j], par[k] + par[l])))
        rhs = vec_add(rhs, br(br(br(t, x), y), z),
                      Fraction(sgn(par[l], par[i] + par[j] + par[k])))
        if not is_zero(vec_add(lhs, rhs, Fraction(-1))):
            bad_quads.add((i, j, k, l))
    return bad_pairs, bad_quads


def oracle_pm_expanded(A, i, j, k, l):
    """The ten-term expansion of the pre-Malcev identity (no brackets)."""
    table, par = A.table("mul"), A.space.parities()
    n = A.space.dim
    x, y, z, t = basis(n, i), basis(n, j), basis(n, k), basis(n, l)
    m = lambda a, b: naive_mul(table, a, b)
    px, py, pz = par[i], par[j], par[k]
    total = [Z] * n
    total = vec_add(total, m(m(y, z), m(x, t)), Fraction(sgn(px, py + pz)))
    total = vec_add(total, m(m(z, y), m(x, t)), Fraction(-sgn(px, py + pz) * sgn(py, pz)))
    total = vec_add(total, m(m(m(x, y), z), t))
    total = vec_add(total, m(m(m(y, x), z), t), Fraction(-sgn(px, py)))
    total = vec_add(total, m(m(z, m(x, y)), t), Fraction(-sgn(px + py, pz)))
    total = vec_add(total, m(m(z, m(y, x)), t), Fraction(sgn(px, py) * sgn(px + py, pz)))
    total = vec_add(total, m(y, m(m(x, z), t)), Fraction(sgn(px, py)))
    total = vec_add(total, m(y, m(m(z, x), t)), Fraction(-sgn(px, py + pz)))
    total = vec_add(total, m(x, m(y, m(z, t))), Fraction(-1))
    total = vec_add(total, m(z, m(x, m(y, t))), Fraction(sgn(pz, px + py)))
    return total


def oracle_pre_malcev_failures(A):
    n = A.space.dim
    return {
        q for q in itertools.product(range(n), repeat=4)
        if not is_zero(oracle_pm_expanded(A, *q))
    }


def oracle_pre_alternative_failures(A):
    prec, succ = A.table("prec"), A.table("succ")
    par = A.space.parities()
    n = A.space.dim
    p = lambda a, b: naive_mul(prec, a, b)
    s = lambda a, b: naive_mul(succ, a, b)
    star = lambda a, b: vec_add(p(a, b), s(a, b))
    bad = set()
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis(n, i), basis(n, j), basis(n, k)
        sxy, syz = Fraction(sgn(par[i], par[j])), Fraction(sgn(par[j], par[k]))
        r1 = vec_add(s(star(x, y), z), s(x, s(y, z)), Fraction(-1))
        r1 = vec_add(r1, s(star(y, x), z), sxy)
        r1 = vec_add(r1, s(y, s(x, z)), -sxy)
        r2 = vec_add(p(p(x, y), z), p(x, star(y, z)), Fraction(-1))
        r2 = vec_add(r2, p(p(x, z), y), syz)
        r2 = vec_add(r2, p(x, star(z, y)), -syz)
        r3 = vec_add(p(s(x, y), z), s(x, p(y, z)), Fraction(-1))
        r3 = vec_add(r3, p(p(y, x), z), sxy)
        r3 = vec_add(r3, p(y, star(x, z)), -sxy)
        r4 = vec_add(p(s(x, y), z), s(x, p(y, z)), Fraction(-1))
        r4 = vec_add(r4, s(star(x, z), y), syz)
        r4 = vec_add(r4, s(x, s(z, y)), -syz)
        for q, res in enumerate((r1, r2, r3, r4)):
            if not is_zero(res):
                bad.add((q, i, j, k))
    return bad


# -- mul ------------------------------------------------------------------


def test_mul_zero_algebra():
    A = fixtures.zero_algebra(2, 0)
    assert A.mul(A.space.basis_vector(0), A.space.basis_vector(1)).is_zero()


def test_mul_table_lookup():
    space = SuperSpace(3, 0)
    A = Superalgebra.from_entries(space, {"mul": {(0, 1, 2): 1}})
    product = A.mul(space.basis_vector(0), space.basis_vector(1))
    assert product.coords == (Z, Z, Fraction(1))


def test_mul_unknown_product_and_space_mismatch():
    A = fixtures.sl2()
    with pytest.raises(KeyError):
        A.mul(A.space.basis_vector(0), A.space.basis_vector(1), product="star")
    with pytest.raises(ValueError):
        A.mul(SuperSpace(2, 0).zero(), A.space.basis_vector(0))


@settings(max_examples=40)
@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                min_size=3, max_size=3),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                min_size=3, max_size=3))
def test_mul_bilinear_matches_oracle(xs, ys):
    A = fixtures.sl2()
    x, y = A.space.vector(xs), A.space.vector(ys)
    assert list(A.mul(x, y).coords) == naive_mul(A.table("mul"), x.coords, y.coords)
    two_x = 2 * x
    three_y = 3 * y
    assert A.mul(two_x, three_y).coords == (6 * A.mul(x, y)).coords


def test_parity_homogeneity_enforced_at_construction():
    space = SuperSpace(1, 1)
    with pytest.raises(ParityViolation):
        Superalgebra.from_entries(space, {"mul": {(0, 0, 1): 1}})


# -- alternativity ---------------------------------------------------------


def test_alternative_zero_algebra():
    A = fixtures.zero_algebra(2, 1)
    assert check_left_alternative(A).ok
    assert check_right_alternative(A).ok


def test_split_octonions_alternative_oracle():
    A = fixtures.split_octonions()
    assert oracle_left_alternative_failures(A) == set()
    assert oracle_right_alternative_failures(A) == set()
    left, right = check_left_alternative(A), check_right_alternative(A)
    assert left.ok and right.ok
    assert left.checked_tuples == right.checked_tuples == 512


def test_split_octonions_not_associative():
    # the checkers must not be vacuous: octonions associate nowhere near fully
    A = fixtures.split_octonions()
    table = A.table("mul")
    n = A.space.dim
    assoc_failures = sum(
        1 for i, j, k in itertools.product(range(n), repeat=3)
        if not is_zero(vec_add(
            naive_mul(table, naive_mul(table, basis(n, i), basis(n, j)), basis(n, k)),
            naive_mul(table, basis(n, i), naive_mul(table, basis(n, j), basis(n, k))),
            Fraction(-1)))
    )
    assert assoc_failures > 0


def test_non_alternative_counterexample_matches_oracle():
    space = SuperSpace(2, 0)
    A = Superalgebra.from_entries(space, {"mul": {(0, 0, 1): 1, (1, 1, 0): 1}})
    bad = oracle_left_alternative_failures(A)
    assert bad  # e.g. as(e1,e1,e2) + as(e1,e1,e2) = -2 e1*e1 != 0
    report = check_left_alternative(A, witness_limit=100)
    assert {w[0] for w in report.witnesses} == bad
    assert report.violation_count == len(bad)


def test_zorn_octonions_alternative():
    A = fixtures.zorn_split_octonions()
    assert check_left_alternative(A).ok and check_right_alternative(A).ok
    assert oracle_left_alternative_failures(A) == set()


# -- Malcev -----------------------------------------------------------------


def test_malcev_zero_bracket():
    assert check_malcev(fixtures.zero_algebra(3, 1)).ok


def test_sl2_malcev_oracle():
    A = fixtures.sl2()
    pairs, quads = oracle_malcev_failures(A)
    assert pairs == set() and quads == set()
    report = check_malcev(A)
    assert report.ok
    assert report.checked_tuples == 81


def test_octonion_commutator_is_malcev():
    C = commutator_superalgebra(fixtures.split_octonions())
    pairs, quads = oracle_malcev_failures(C)
    assert pairs == set() and quads == set()
    assert check_malcev(C).ok


def test_super_fixtures_malcev():
    for A in (fixtures.heisenberg_1_1(), fixtures.affine_1_1()):
        pairs, quads = oracle_malcev_failures(A)
        assert pairs == set() and quads == set()
        assert check_malcev(A).ok


def test_malcev_checker_witnesses_match_oracle():
    A = fixtures.random_product(SuperSpace(1, 1), seed=11)
    pairs, quads = oracle_malcev_failures(A)
    report = check_malcev(A, witness_limit=10 ** 6)
    got_pairs = {w[0] for w in report.witnesses if len(w[0]) == 2}
    got_quads = {w[0] for w in report.witnesses if len(w[0]) == 4}
    assert got_pairs == pairs
    assert got_quads == quads
    assert not report.ok


# -- pre-Malcev --------------------------------------------------------------


def test_pre_malcev_zero_product():
    assert check_pre_malcev(fixtures.zero_algebra(2, 2)).ok


def test_pre_malcev_from_rb_product_oracle():
    # product x.y = [R(x), y] built from a Rota-Baxter map on sl(2)
    A = fixtures.pre_lie_sl2()
    assert oracle_pre_malcev_failures(A) == set()
    assert check_pre_malcev(A).ok


def test_pre_malcev_1_1_oracle():
    A = fixtures.pre_malcev_1_1()
    assert oracle_pre_malcev_failures(A) == set()
    assert check_pre_malcev(A).ok


def test_random_product_fails_pre_malcev_with_oracle_witnesses():
    A = fixtures.random_product(SuperSpace(1, 1), seed=5)
    bad = oracle_pre_malcev_failures(A)
    assert bad  # generic tables violate the identity
    report = check_pre_malcev(A, witness_limit=10 ** 6)
    assert {w[0] for w in report.witnesses} == bad


# -- pre-alternative ---------------------------------------------------------


def test_pre_alternative_zero_products():
    space = SuperSpace(2, 1)
    A = Superalgebra.from_entries(space, {"prec": {}, "succ": {}})
    assert check_pre_alternative(A).ok


def test_pre_alternative_requires_both_products():
    with pytest.raises(KeyError):
        check_pre_alternative(fixtures.sl2())


def test_rb_split_zorn_pre_alternative_oracle():
    # x prec y = x * R(y), x succ y = R(x) * y for a Rota-Baxter map R
    Zalg = fixtures.zorn_split_octonions()
    table = Zalg.table("mul")
    n = Zalg.space.dim
    rmat = [[Z] * n for _ in range(n)]
    rmat[2][3] = Fraction(1)  # x2 -> x1 block of the Zorn basis
    prec = {}
    succ = {}
    for i in range(n):
        for j in range(n):
            rj = [rmat[k][j] for k in range(n)]
            ri = [rmat[k][i] for k in range(n)]
            for k, c in enumerate(naive_mul(table, basis(n, i), rj)):
                if c:
                    prec[(i, j, k)] = c
            for k, c in enumerate(naive_mul(table, ri, basis(n, j))):
                if c:
                    succ[(i, j, k)] = c
    A = Superalgebra.from_entries(Zalg.space, {"prec": prec, "succ": succ})
    assert oracle_pre_alternative_failures(A) == set()
    assert check_pre_alternative(A).ok


def test_succ_only_octonions_fail_pre_alternative():
    Zalg = fixtures.zorn_split_octonions()
    n = Zalg.space.dim
    table = Zalg.table("mul")
    succ = {
        (i, j, k): table[i][j][k]
        for i, j, k in itertools.product(range(n), repeat=3)
        if table[i][j][k] != 0
    }
    A = Superalgebra.from_entries(Zalg.space, {"prec": {}, "succ": succ})
    bad = oracle_pre_alternative_failures(A)
    assert bad
    report = check_pre_alternative(A, witness_limit=10 ** 6)
    assert {w[0] for w in report.witnesses} == bad


# -- functors ----------------------------------------------------------------


def test_commutator_of_commutative_product_is_zero():
    space = SuperSpace(2, 0)
    A = Superalgebra.from_entries(space, {"mul": {(0, 1, 0): 1, (1, 0, 0): 1}})
    C = commutator_superalgebra(A)
    assert all(c == 0 for plane in C.table("mul") for row in plane for c in row)


def test_commutator_entrywise_formula():
    A = fixtures.random_product(SuperSpace(1, 1), seed=3)
    C = commutator_superalgebra(A)
    table, ctable = A.table("mul"), C.table("mul")
    par = A.space.parities()
    n = A.space.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        assert ctable[i][j][k] == table[i][j][k] - sgn(par[i], par[j]) * table[j][i][k]


def test_commutator_of_pre_malcev_is_malcev():
    for P in (fixtures.pre_lie_sl2(), fixtures.pre_malcev_1_1()):
        assert check_malcev(commutator_superalgebra(P)).ok


def test_sum_pre_alternative_trivial_cases():
    space = SuperSpace(1, 1)
    A = Superalgebra.from_entries(space, {"prec": {}, "succ": {}})
    S = sum_pre_alternative(A)
    assert all(c == 0 for plane in S.table("mul") for row in plane for c in row)
    # prec = 0, succ = an alternative product: the sum is succ verbatim
    g = fixtures.grassmann_1_1()
    succ_entries = {
        (i, j, k): g.table("mul")[i][j][k]
        for i, j, k in itertools.product(range(2), repeat=3)
        if g.table("mul")[i][j][k] != 0
    }
    A = Superalgebra.from_entries(space, {"prec": {}, "succ": succ_entries})
    assert sum_pre_alternative(A).table("mul") == g.table("mul")


def test_diagram_commutes_tablewise():
    # sum-then-commutator equals derived-product-then-commutator, exactly
    Zalg = fixtures.zorn_split_octonions()
    table = Zalg.table("mul")
    n = Zalg.space.dim
    rmat = [[Z] * n for _ in range(n)]
    rmat[5][6] = Fraction(-1)
    prec, succ = {}, {}
    for i in range(n):
        for j in range(n):
            rj = [rmat[k][j] for k in range(n)]
            ri = [rmat[k][i] for k in range(n)]
            for k, c in enumerate(naive_mul(table, basis(n, i), rj)):
                if c:
                    prec[(i, j, k)] = c
            for k, c in enumerate(naive_mul(table, ri, basis(n, j))):
                if c:
                    succ[(i, j, k)] = c
    A = Superalgebra.from_entries(Zalg.space, {"prec": prec, "succ": succ})
    assert check_pre_alternative(A).ok
    path1 = commutator_superalgebra(sum_pre_alternative(A))
    path2 = commutator_superalgebra(pre_malcev_from_pre_alternative(A))
    assert path1.table("mul") == path2.table("mul")


def test_reports_are_deterministic():
    A = fixtures.random_product(SuperSpace(1, 1), seed=5)
    assert check_pre_malcev(A) == check_pre_malcev(A)
    assert check_malcev(A) == check_malcev(A)


def test_witness_cap_and_exact_count():
    A = fixtures.random_product(SuperSpace(2, 2), seed=1)
    capped = check_pre_malcev(A, witness_limit=4)
    full = check_pre_malcev(A, witness_limit=10 ** 6)
    assert len(capped.witnesses) == 4
    assert capped.violation_count == full.violation_count == len(full.witnesses)
    assert capped.violation_count > 4
