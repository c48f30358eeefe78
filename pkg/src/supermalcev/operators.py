"""Super O-operators, Rota-Baxter operators, bilinear forms, and the
constructions that turn them into pre-Malcev / pre-alternative structures.

An O-operator candidate is just an even graded linear map T together with
its context (a Malcev representation or an alternative bimodule); there is
no wrapper type.  Constructions validate their precondition and raise
``IdentityViolation`` carrying the offending report instead of returning a
broken algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .graded import (
    GradedLinearMap,
    GradedVector,
    SuperSpace,
    koszul_sign,
    vector_from_sparse,
)
from .algebras import (
    DEFAULT_WITNESS_LIMIT,
    Sparse,
    Superalgebra,
    ViolationReport,
    _add_scaled,
    _WitnessCollector,
)
from .reps import Bimodule, Representation

ZERO = Fraction(0)
ONE = Fraction(1)


class IdentityViolation(Exception):
    """A construction's precondition failed; carries the failing report."""

    def __init__(self, report: ViolationReport):
        self.report = report
        super().__init__(
            f"{report.identity}: {report.violation_count} violation(s) over "
            f"{report.checked_tuples} tuples"
        )


def _require_even(T: GradedLinearMap, col: _WitnessCollector) -> bool:
    if T.parity != 0:
        col.preconditions.append("operator candidate is not even")
        return False
    return True


def _apply_T(T: GradedLinearMap, v: Mapping[int, Fraction]) -> Sparse:
    return T.apply_sparse(v)


def check_o_operator_malcev(T: GradedLinearMap, R: Representation,
                            witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ViolationReport:
    """[T(a), T(b)] = T(rho(T(a))b - (-1)^{|a||b|} rho(T(b))a) on basis pairs of V."""
    col = _WitnessCollector("o-operator", witness_limit)
    if not _require_even(T, col):
        return col.report()
    A = R.algebra
    V = R.space
    n = V.dim
    par = V.parities()
    timg = [_apply_T(T, {j: ONE}) for j in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        col.tick()
        lhs = A.mul_sparse(timg[i], timg[j])
        inner = R.act_sparse(timg[i], {j: ONE})
        _add_scaled(inner, R.act_sparse(timg[j], {i: ONE}),
                    Fraction(-koszul_sign(par[i], par[j])))
        res = lhs
        _add_scaled(res, _apply_T(T, inner), Fraction(-1))
        if res:
            col.add((i, j), vector_from_sparse(A.space, res))
    return col.report()


def check_o_operator_alternative(T: GradedLinearMap, B: Bimodule,
                                 witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ViolationReport:
    """T(a) * T(b) = T(l(T(a))b + r(T(b))a) on basis pairs of V."""
    col = _WitnessCollector("o-operator-alternative", witness_limit)
    if not _require_even(T, col):
        return col.report()
    A = B.algebra
    n = B.space.dim
    timg = [_apply_T(T, {j: ONE}) for j in range(n)]

    def act(maps: tuple[GradedLinearMap, ...], coords: Sparse, v: Sparse) -> Sparse:
        out: Sparse = {}
        for k, c in coords.items():
            _add_scaled(out, maps[k].apply_sparse(v), c)
        return out

    for i, j in itertools.product(range(n), repeat=2):
        col.tick()
        lhs = A.mul_sparse(timg[i], timg[j])
        inner = act(B.left, timg[i], {j: ONE})
        _add_scaled(inner, act(B.right, timg[j], {i: ONE}), ONE)
        res = lhs
        _add_scaled(res, _apply_T(T, inner), Fraction(-1))
        if res:
            col.add((i, j), vector_from_sparse(A.space, res))
    return col.report()


def check_rota_baxter(Rop: GradedLinearMap, A: Superalgebra,
                      sign_variant: bool = False, product: str = "mul",
                      witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ViolationReport:
    """Weight-zero Rota-Baxter identity on basis pairs.

    Default: [Rx, Ry] = R([Rx, y] + [x, Ry]), the adjoint specialization of
    the O-operator identity.  With ``sign_variant`` the second summand
    carries the Koszul factor (-1)^{|x||y|}; the two variants differ only
    when both arguments are odd.
    """
    name = "rota-baxter-signed" if sign_variant else "rota-baxter"
    col = _WitnessCollector(name, witness_limit)
    if not _require_even(Rop, col):
        return col.report()
    n = A.space.dim
    par = A.space.parities()
    rimg = [_apply_T(Rop, {i: ONE}) for i in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        col.tick()
        lhs = A.mul_sparse(rimg[i], rimg[j], product)
        inner = A.mul_sparse(rimg[i], {j: ONE}, product)
        s = Fraction(koszul_sign(par[i], par[j])) if sign_variant else ONE
        _add_scaled(inner, A.mul_sparse({i: ONE}, rimg[j], product), s)
        res = lhs
        _add_scaled(res, _apply_T(Rop, inner), Fraction(-1))
        if res:
            col.add((i, j), vector_from_sparse(A.space, res))
    return col.report()


# -- constructions into pre-Malcev / pre-alternative ---------------------


def _table_from_products(space: SuperSpace, product_of: Mapping[str, object]) -> Superalgebra:
    return Superalgebra.from_entries(space, product_of)


def pre_malcev_from_o_operator(T: GradedLinearMap, R: Representation) -> Superalgebra:
    """a.b = rho(T(a))b on V; requires T to be a super O-operator."""
    report = check_o_operator_malcev(T, R)
    if not report.ok:
        raise IdentityViolation(report)
    n = R.space.dim
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        ti = _apply_T(T, {i: ONE})
        for j in range(n):
            for k, c in R.act_sparse(ti, {j: ONE}).items():
                entries[(i, j, k)] = c
    return _table_from_products(R.space, {"mul": entries})


@dataclass(frozen=True)
class ImageStructure:
    """Pre-Malcev structure induced on T(V) inside A.

    ``embedding`` sends the image basis into A; the image algebra's product
    is T(a).T(b) = T(a.b) for any preimages a, b (well-definedness has been
    verified on kernel generators before this object is built).
    """

    algebra: Superalgebra
    embedding: GradedLinearMap
    preimage_indices: tuple[int, ...]


def induced_structure_on_image(T: GradedLinearMap, R: Representation) -> ImageStructure:
    """Push the O-operator product forward to T(V), checking first that a
    rank-deficient T still gives a well-defined product."""
    product = pre_malcev_from_o_operator(T, R)  # validates the precondition
    n = R.space.dim
    col = _WitnessCollector("image-well-defined")
    kernel = _linalg.nullspace(T.matrix, n)
    for kv in kernel:
        kv_sparse = {i: c for i, c in enumerate(kv) if c != 0}
        for j in range(n):
            col.tick()
            # a . k with T(k) = 0: T(a.k) must vanish (k.a vanishes already
            # because the product reads the algebra through T).
            prod = product.mul_sparse({j: ONE}, kv_sparse)
            res = _apply_T(T, prod)
            if res:
                col.add((j,), vector_from_sparse(R.algebra.space, res))
    if col.count:
        raise IdentityViolation(col.report())

    # homogeneous image basis: pivot columns of T, parity block by block
    _, pivots = _linalg.rref(T.matrix)
    even_piv = tuple(p for p in pivots if R.space.parity(p) == 0)
    odd_piv = tuple(p for p in pivots if R.space.parity(p) == 1)
    ordered = even_piv + odd_piv
    image_space = SuperSpace(
        len(even_piv), len(odd_piv),
        tuple(f"t{p + 1}" for p in ordered),
    )
    cols = [tuple(T.matrix[r][p] for r in range(R.algebra.space.dim)) for p in ordered]
    if ordered:
        # coordinates inside A: solve the (tall) system  [cols] x = vector
        basis_mat = tuple(zip(*cols))
        gram = _linalg.mat_mul(_linalg.transpose(basis_mat), basis_mat)
    entries: dict[tuple[int, int, int], Fraction] = {}
    for a, pa in enumerate(ordered):
        for b, pb in enumerate(ordered):
            img = _apply_T(T, product.mul_sparse({pa: ONE}, {pb: ONE}))
            if not img:
                continue
            vec = [ZERO] * R.algebra.space.dim
            for idx, c in img.items():
                vec[idx] = c
            rhs = _linalg.mat_vec(_linalg.transpose(basis_mat), vec)
            coords = _linalg.solve(gram, rhs)
            for k, c in enumerate(coords):
                if c != 0:
                    entries[(a, b, k)] = c
    algebra = _table_from_products(image_space, {"mul": entries})
    embedding = GradedLinearMap(
        image_space, R.algebra.space,
        tuple(tuple(col[r] for col in cols) for r in range(R.algebra.space.dim)),
        0,
    ) if ordered else GradedLinearMap.zero(image_space, R.algebra.space)
    return ImageStructure(algebra, embedding, ordered)


def compatible_pre_malcev_from_invertible_oop(T: GradedLinearMap,
                                              R: Representation) -> Superalgebra:
    """x.y = T(rho(x) T^{-1}(y)) on A itself; requires invertible T."""
    report = check_o_operator_malcev(T, R)
    if not report.ok:
        raise IdentityViolation(report)
    if not T.is_invertible():
        raise ValueError("singular operator: no compatible structure")
    tinv = T.inverse()
    A = R.algebra
    n = A.space.dim
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(n):
            inner = R.act_sparse({i: ONE}, tinv.apply_sparse({j: ONE}))
            for k, c in _apply_T(T, inner).items():
                entries[(i, j, k)] = c
    return _table_from_products(A.space, {"mul": entries})


def pre_malcev_from_rota_baxter(Rop: GradedLinearMap, A: Superalgebra,
                                product: str = "mul") -> Superalgebra:
    """x.y = [R(x), y]; requires the (default-variant) Rota-Baxter identity."""
    report = check_rota_baxter(Rop, A, product=product)
    if not report.ok:
        raise IdentityViolation(report)
    n = A.space.dim
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        ri = _apply_T(Rop, {i: ONE})
        for j in range(n):
            for k, c in A.mul_sparse(ri, {j: ONE}, product).items():
                entries[(i, j, k)] = c
    return _table_from_products(A.space, {"mul": entries})


def pre_malcev_from_invertible_rota_baxter(Rop: GradedLinearMap, A: Superalgebra,
                                           product: str = "mul") -> Superalgebra:
    """The compatible structure x.y = R([x, R^{-1}(y)]) for invertible R."""
    report = check_rota_baxter(Rop, A, product=product)
    if not report.ok:
        raise IdentityViolation(report)
    if not Rop.is_invertible():
        raise ValueError("singular Rota-Baxter operator")
    rinv = Rop.inverse()
    n = A.space.dim
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(n):
            inner = A.mul_sparse({i: ONE}, rinv.apply_sparse({j: ONE}), product)
            for k, c in _apply_T(Rop, inner).items():
                entries[(i, j, k)] = c
    return _table_from_products(A.space, {"mul": entries})


def pre_alternative_from_o_operator(T: GradedLinearMap, B: Bimodule) -> Superalgebra:
    """a succ b = l(T(a))b, a prec b = r(T(b))a on V."""
    report = check_o_operator_alternative(T, B)
    if not report.ok:
        raise IdentityViolation(report)
    n = B.space.dim
    succ: dict[tuple[int, int, int], Fraction] = {}
    prec: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        ti = _apply_T(T, {i: ONE})
        for j in range(n):
            out: Sparse = {}
            for k, c in ti.items():
                _add_scaled(out, B.left[k].apply_sparse({j: ONE}), c)
            for k, c in out.items():
                succ[(i, j, k)] = c
    for j in range(n):
        tj = _apply_T(T, {j: ONE})
        for i in range(n):
            out = {}
            for k, c in tj.items():
                _add_scaled(out, B.right[k].apply_sparse({i: ONE}), c)
            for k, c in out.items():
                prec[(i, j, k)] = c
    return _table_from_products(B.space, {"prec": prec, "succ": succ})


# -- bilinear forms -------------------------------------------------------


@dataclass(frozen=True)
class BilinearForm:
    """A parity-0 bilinear form as the matrix omega[i][j] = omega(b_i, b_j)."""

    space: SuperSpace
    matrix: _linalg.Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", _linalg.freeze(self.matrix))
        n = self.space.dim
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("form matrix shape mismatch")

    def is_even(self) -> bool:
        return all(
            self.matrix[i][j] == 0
            for i in range(self.space.dim)
            for j in range(self.space.dim)
            if self.space.parity(i) != self.space.parity(j)
        )

    def value(self, x: GradedVector, y: GradedVector) -> Fraction:
        return sum(
            (xi * self.matrix[i][j] * yj
             for i, xi in enumerate(x.coords) if xi != 0
             for j, yj in enumerate(y.coords) if yj != 0),
            start=ZERO,
        )

    def value_sparse(self, xs: Mapping[int, Fraction], ys: Mapping[int, Fraction]) -> Fraction:
        return sum(
            (xi * self.matrix[i][j] * yj for i, xi in xs.items() for j, yj in ys.items()),
            start=ZERO,
        )


@dataclass(frozen=True)
class FormFlags:
    supersymmetric: bool
    skew_supersymmetric: bool
    nondegenerate: bool
    invariant: bool


def classify_form(omega: BilinearForm, A: Superalgebra,
                  product: str = "mul") -> FormFlags:
    """Exact flags: (skew-)supersymmetry, nondegeneracy, invariance."""
    n = A.space.dim
    par = A.space.parities()
    sym = all(
        omega.matrix[i][j] == koszul_sign(par[i], par[j]) * omega.matrix[j][i]
        for i in range(n) for j in range(n)
    )
    skew = all(
        omega.matrix[i][j] == -koszul_sign(par[i], par[j]) * omega.matrix[j][i]
        for i in range(n) for j in range(n)
    )
    nondeg = _linalg.determinant(omega.matrix) != 0
    invariant = True
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = omega.value_sparse(A.mul_basis(i, j, product), {k: ONE})
        rhs = omega.value_sparse({i: ONE}, A.mul_basis(j, k, product))
        if lhs != rhs:
            invariant = False
            break
    return FormFlags(sym, skew, nondeg, invariant)


def check_symplectic(omega: BilinearForm, A: Superalgebra, product: str = "mul",
                     witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ViolationReport:
    """Super two-cocycle condition: the cyclic graded sum
    (-1)^{|x||z|} w(x,[y,z]) + (-1)^{|y||x|} w(y,[z,x]) + (-1)^{|z||y|} w(z,[x,y])
    vanishes on all homogeneous basis triples.

    Preconditions (skew-supersymmetric, nondegenerate) are reported as flag
    failures rather than witnesses.  Witness leftovers are scalars.
    """
    col = _WitnessCollector("symplectic", witness_limit)
    flags = classify_form(omega, A, product)
    if not flags.skew_supersymmetric:
        col.preconditions.append("form is not skew-supersymmetric")
    if not flags.nondegenerate:
        col.preconditions.append("form is degenerate")
    n = A.space.dim
    par = A.space.parities()
    for i, j, k in itertools.product(range(n), repeat=3):
        col.tick()
        total = koszul_sign(par[i], par[k]) * omega.value_sparse(
            {i: ONE}, A.mul_basis(j, k, product))
        total += koszul_sign(par[j], par[i]) * omega.value_sparse(
            {j: ONE}, A.mul_basis(k, i, product))
        total += koszul_sign(par[k], par[j]) * omega.value_sparse(
            {k: ONE}, A.mul_basis(i, j, product))
        if total != 0:
            col.add((i, j, k), total)
    return col.report()


def pre_malcev_from_symplectic(omega: BilinearForm, A: Superalgebra,
                               product: str = "mul") -> Superalgebra:
    """The compatible product defined by
    w(x.y, z) = (-1)^{|x|(|y|+|z|)} w(y, [z, x]), solved row by row against
    the nondegenerate form."""
    report = check_symplectic(omega, A, product)
    if not report.ok:
        raise IdentityViolation(report)
    n = A.space.dim
    par = A.space.parities()
    # (omega^T) u = rhs with rhs_k = sign * w(b_j, [b_k, b_i])
    omega_t = _linalg.transpose(omega.matrix)
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(n):
            rhs = tuple(
                Fraction(koszul_sign(par[i], par[j] + par[k]))
                * omega.value_sparse({j: ONE}, A.mul_basis(k, i, product))
                for k in range(n)
            )
            coords = _linalg.solve(omega_t, rhs)
            for k, c in enumerate(coords):
                if c != 0:
                    entries[(i, j, k)] = c
    return _table_from_products(A.space, {"mul": entries})


# -- grid search (test/example utility, not a stability guarantee) --------


def _parity_zero_support(space: SuperSpace) -> tuple[tuple[int, int], ...]:
    n = space.dim
    return tuple(
        (i, j) for i in range(n) for j in range(n)
        if space.parity(i) == space.parity(j)
    )


def search_operators(check, builder, space_pairs: Sequence[tuple[int, int]],
                     values: Iterable[int], limit: int | None = None):
    """Exhaustive search over integer matrices supported on ``space_pairs``.

    ``builder`` turns an entry assignment into a candidate map; ``check``
    returns True when the candidate satisfies the identity.  Results come
    back in deterministic (lexicographic) order.
    """
    values = tuple(values)
    found = []
    for combo in itertools.product(values, repeat=len(space_pairs)):
        candidate = builder(dict(zip(space_pairs, combo)))
        if check(candidate):
            found.append(candidate)
            if limit is not None and len(found) >= limit:
                break
    return found


def _map_from_entries(domain: SuperSpace, codomain: SuperSpace,
                      entries: Mapping[tuple[int, int], int]) -> GradedLinearMap:
    rows = [[ZERO] * domain.dim for _ in range(codomain.dim)]
    for (i, j), v in entries.items():
        rows[i][j] = Fraction(v)
    return GradedLinearMap(domain, codomain, tuple(tuple(r) for r in rows), 0)


def search_rota_baxter(A: Superalgebra, values: Iterable[int] = range(-2, 3),
                       support: Sequence[tuple[int, int]] | None = None,
                       product: str = "mul",
                       limit: int | None = None) -> list[GradedLinearMap]:
    """All even integer-matrix Rota-Baxter operators with entries drawn from
    ``values`` on the given support (default: every parity-0 position)."""
    if support is None:
        support = _parity_zero_support(A.space)
    n = A.space.dim
    rows = A._rows(product)

    def quick_check(entries: dict[tuple[int, int], int]) -> bool:
        cols: list[dict[int, Fraction]] = [dict() for _ in range(n)]
        for (i, j), v in entries.items():
            if v:
                cols[j][i] = Fraction(v)

        def apply_r(vec: Sparse) -> Sparse:
            out: Sparse = {}
            for j, c in vec.items():
                _add_scaled(out, cols[j], c)
            return out

        for i in range(n):
            ri = cols[i]
            for j in range(n):
                lhs = A.mul_sparse(ri, cols[j], product)
                inner = A.mul_sparse(ri, {j: ONE}, product)
                _add_scaled(inner, A.mul_sparse({i: ONE}, cols[j], product), ONE)
                _add_scaled(lhs, apply_r(inner), Fraction(-1))
                if lhs:
                    return False
        return True

    found = []
    for combo in itertools.product(tuple(values), repeat=len(support)):
        entries = dict(zip(support, combo))
        if quick_check(entries):
            found.append(_map_from_entries(A.space, A.space, entries))
            if limit is not None and len(found) >= limit:
                break
    return found


def _default_support(A_space: SuperSpace, V: SuperSpace) -> tuple[tuple[int, int], ...]:
    return tuple(
        (i, j) for i in range(A_space.dim) for j in range(V.dim)
        if A_space.parity(i) == V.parity(j)
    )


def _columns_from_entries(ncols: int, entries: Mapping[tuple[int, int], int]) -> list[Sparse]:
    cols: list[Sparse] = [dict() for _ in range(ncols)]
    for (i, j), v in entries.items():
        if v:
            cols[j][i] = Fraction(v)
    return cols


def _action_columns(maps: tuple[GradedLinearMap, ...]) -> list[list[Sparse]]:
    """action_cols[i][j] = sparse column j of the map for basis element i."""
    out = []
    for m in maps:
        ncols = m.domain.dim
        cols = [dict() for _ in range(ncols)]
        for r, row in enumerate(m.matrix):
            for c, val in enumerate(row):
                if val != 0:
                    cols[c][r] = val
        out.append(cols)
    return out


def search_o_operators_malcev(R: Representation,
                              values: Iterable[int] = range(-2, 3),
                              support: Sequence[tuple[int, int]] | None = None,
                              limit: int | None = None) -> list[GradedLinearMap]:
    """All even integer-matrix O-operators V -> A for the representation R."""
    V, A = R.space, R.algebra
    if support is None:
        support = _default_support(A.space, V)
    n = V.dim
    par = V.parities()
    rho_cols = _action_columns(R.action)

    def act(a_coords: Sparse, j: int) -> Sparse:
        out: Sparse = {}
        for k, c in a_coords.items():
            _add_scaled(out, rho_cols[k][j], c)
        return out

    found = []
    for combo in itertools.product(tuple(values), repeat=len(support)):
        entries = dict(zip(support, combo))
        cols = _columns_from_entries(n, entries)
        ok = True
        for i in range(n):
            for j in range(n):
                res = A.mul_sparse(cols[i], cols[j])
                inner = act(cols[i], j)
                _add_scaled(inner, act(cols[j], i),
                            Fraction(-koszul_sign(par[i], par[j])))
                for jj, c in inner.items():
                    _add_scaled(res, cols[jj], -c)
                if res:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(_map_from_entries(V, A.space, entries))
            if limit is not None and len(found) >= limit:
                break
    return found


def search_o_operators_alternative(B: Bimodule,
                                   values: Iterable[int] = range(-2, 3),
                                   support: Sequence[tuple[int, int]] | None = None,
                                   limit: int | None = None) -> list[GradedLinearMap]:
    V, A = B.space, B.algebra
    if support is None:
        support = _default_support(A.space, V)
    n = V.dim
    left_cols = _action_columns(B.left)
    right_cols = _action_columns(B.right)

    def act(cols_table, a_coords: Sparse, j: int) -> Sparse:
        out: Sparse = {}
        for k, c in a_coords.items():
            _add_scaled(out, cols_table[k][j], c)
        return out

    found = []
    for combo in itertools.product(tuple(values), repeat=len(support)):
        entries = dict(zip(support, combo))
        cols = _columns_from_entries(n, entries)
        ok = True
        for i in range(n):
            for j in range(n):
                res = A.mul_sparse(cols[i], cols[j])
                inner = act(left_cols, cols[i], j)
                _add_scaled(inner, act(right_cols, cols[j], i), ONE)
                for jj, c in inner.items():
                    _add_scaled(res, cols[jj], -c)
                if res:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(_map_from_entries(V, A.space, entries))
            if limit is not None and len(found) >= limit:
                break
    return found
