"""The super Malcev Yang-Baxter equation (MYBE) engine.

Tensor side: for r = sum_i x_i (x) y_i with |r| = 0 the left-hand side
[r12,r13] + [r12,r23] + [r13,r23] is computed as a sparse 3-tensor from
the three graded commutator sums; r solves the MYBE iff it vanishes.

Operator side: a skew-supersymmetric even r is regarded as a map A* -> A
and solves the MYBE iff that map is a super O-operator for the coadjoint
representation.  The two sides share no code path; their agreement is a
theorem that the test suite asserts over a corpus of solutions and
non-solutions, never assumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .graded import (
    GradedLinearMap,
    Tensor2,
    Tensor3,
    direct_sum,
    koszul_sign,
    sigma,
)
from .algebras import (
    DEFAULT_WITNESS_LIMIT,
    Superalgebra,
    ViolationReport,
    _WitnessCollector,
    check_pre_malcev,
)
from .reps import (
    Representation,
    coadjoint_representation,
    dual_representation,
    left_multiplication_representation,
    semidirect_malcev,
)
from .operators import BilinearForm, IdentityViolation, classify_form, check_o_operator_malcev

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class MybeCandidate:
    """An even 2-tensor over a Malcev superalgebra, to be tested against
    the MYBE.  Skew-supersymmetry is checked on demand, not enforced."""

    algebra: Superalgebra
    r: Tensor2

    def __post_init__(self):
        if self.r.space.dim != self.algebra.space.dim:
            raise ValueError("tensor does not live over the algebra's space")
        if self.r.parity != 0:
            raise ValueError("only even candidates are supported (|r| = 0)")


def mybe_lhs(c: MybeCandidate, product: str = "mul") -> Tensor3:
    """[r12,r13] + [r12,r23] + [r13,r23] as an exact sparse 3-tensor.

    Writing r = sum r[a][b] b_a (x) b_b, the three graded sums are

      [r12,r13] = sum (-1)^{|b_c||b_b|} [b_a,b_c] (x) b_b (x) b_d,
      [r12,r23] = sum                    b_a (x) [b_b,b_c] (x) b_d,
      [r13,r23] = sum (-1)^{|b_a||b_c|} b_a (x) b_c (x) [b_b,b_d],

    summed over pairs of entries (a,b), (c,d) of r.  The Koszul factors
    are the ones forced by the graded tensor-product multiplication for
    an even r (for the middle sum the factor of the first one cancels
    against moving the bracket's arguments back into place).
    """
    A = c.algebra
    space = A.space
    entries = c.r.sparse()
    out: dict[tuple[int, int, int], Fraction] = {}

    def accumulate(key: tuple[int, int, int], val: Fraction):
        cur = out.get(key, ZERO) + val
        if cur == 0:
            out.pop(key, None)
        else:
            out[key] = cur

    for (a, b), rab in entries.items():
        pb = space.parity(b)
        pa = space.parity(a)
        for (cc, d), rcd in entries.items():
            coeff = rab * rcd
            s12 = koszul_sign(space.parity(cc), pb)
            # [r12, r13]: [b_a, b_c] (x) b_b (x) b_d
            for k, v in A.bracket_basis(a, cc, product).items():
                accumulate((k, b, d), s12 * coeff * v)
            # [r12, r23]: b_a (x) [b_b, b_c] (x) b_d
            for k, v in A.bracket_basis(b, cc, product).items():
                accumulate((a, k, d), coeff * v)
            # [r13, r23]: b_a (x) b_c (x) [b_b, b_d]
            s13 = koszul_sign(pa, space.parity(cc))
            for k, v in A.bracket_basis(b, d, product).items():
                accumulate((a, cc, k), s13 * coeff * v)
    return Tensor3(space, out)


def r_as_map(c: MybeCandidate) -> GradedLinearMap:
    """The even map A* -> A determined by the pairing identity; with the
    basis conventions used here its matrix is minus the transpose of the
    coefficient matrix (image of b_j* has coefficients -coeffs[j][i])."""
    n = c.algebra.space.dim
    coeffs = c.r.coeffs
    rows = tuple(
        tuple(-coeffs[j][i] for j in range(n)) for i in range(n)
    )
    return GradedLinearMap(
        c.algebra.space.dual(), c.algebra.space, rows, c.r.parity
    )


def check_operator_form(c: MybeCandidate, product: str = "mul",
                        witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ViolationReport:
    """[r(x*), r(y*)] = r(ad*(r(x*))y* - (-1)^{|x*||y*|} ad*(r(y*))x*)
    over all homogeneous dual-basis pairs.

    Preconditions: r skew-supersymmetric (flagged otherwise).  This is the
    O-operator identity of the r-map for the coadjoint representation and
    reuses that checker; it never touches the tensor-form code.
    """
    if not c.r.is_skew_supersymmetric():
        col = _WitnessCollector("operator-form", witness_limit)
        col.preconditions.append("r is not skew-supersymmetric")
        return col.report()
    coad = coadjoint_representation(c.algebra, product)
    inner = check_o_operator_malcev(r_as_map(c), coad, witness_limit)
    return ViolationReport(
        "operator-form",
        inner.witnesses,
        inner.violation_count,
        inner.checked_tuples,
        inner.precondition_failures,
    )


def pre_malcev_on_dual_from_r(c: MybeCandidate, product: str = "mul") -> Superalgebra:
    """x*.y* = ad*(r(x*))(y*) on the dual space; requires the operator form."""
    report = check_operator_form(c, product)
    if not report.ok:
        raise IdentityViolation(report)
    coad = coadjoint_representation(c.algebra, product)
    rmap = r_as_map(c)
    n = c.algebra.space.dim
    entries: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        ri = rmap.apply_sparse({i: ONE})
        for j in range(n):
            for k, v in coad.act_sparse(ri, {j: ONE}).items():
                entries[(i, j, k)] = v
    return Superalgebra.from_entries(c.algebra.space.dual(), {"mul": entries})


def r_from_o_operator(T: GradedLinearMap, R: Representation) -> MybeCandidate:
    """Embed T: V -> A as an element of A (x) V* inside the double
    A x|_{rho*} V* and return r = T - sigma(T).

    The embedding follows Hom(V, A) ~ A (x) V*:
    T = sum_alpha T(v_alpha) (x) v_alpha*.  The returned candidate is
    skew-supersymmetric by construction; it solves the MYBE in the double
    iff T is a super O-operator for (V, rho) (tested, not assumed).
    """
    if T.parity != 0:
        raise ValueError("only even operator candidates embed into the double")
    rho_star = dual_representation(R)
    double = semidirect_malcev(rho_star)
    total, emb_a, emb_v = direct_sum(R.algebra.space, rho_star.space)
    n = total.dim
    coeffs = [[ZERO] * n for _ in range(n)]
    for alpha in range(R.space.dim):
        for p in range(R.algebra.space.dim):
            val = T.matrix[p][alpha]
            if val != 0:
                coeffs[emb_a[p]][emb_v[alpha]] = val
    t_emb = Tensor2(total, tuple(tuple(row) for row in coeffs), 0)
    r = t_emb - sigma(t_emb)
    return MybeCandidate(double, r)


def canonical_r(P: Superalgebra, product: str = "mul") -> MybeCandidate:
    """The canonical MYBE solution attached to a pre-Malcev superalgebra:
    the identity map, seen as an O-operator for the left-multiplication
    representation of the sub-adjacent Malcev superalgebra, embedded in
    the double.  Coefficientwise
    r = sum_i (e_i (x) e_i* - e_i* (x) e_i) + sum_j (f_j (x) f_j* + f_j* (x) f_j).
    """
    report = check_pre_malcev(P, product)
    if not report.ok:
        raise IdentityViolation(report)
    L = left_multiplication_representation(P, product)
    return r_from_o_operator(GradedLinearMap.identity(P.space), L)


def symplectic_from_r(c: MybeCandidate) -> BilinearForm:
    """omega(x, y) = <r^{-1}(x), y> for invertible skew-supersymmetric r."""
    if not c.r.is_skew_supersymmetric():
        raise ValueError("r is not skew-supersymmetric")
    rmap = r_as_map(c)
    if not rmap.is_invertible():
        raise ValueError("singular r: no symplectic form")
    inv = _linalg.invert(rmap.matrix)
    return BilinearForm(c.algebra.space, _linalg.transpose(inv))


def rb_from_invariant_form(c: MybeCandidate, B: BilinearForm,
                           product: str = "mul") -> GradedLinearMap:
    """r-tilde = (r as map) composed with phi, <phi(x), y> = B(x, y).

    B must be supersymmetric, nondegenerate, and invariant; r must be
    skew-supersymmetric.  The result is a Rota-Baxter operator (default,
    unsigned variant) exactly when r solves the MYBE.
    """
    flags = classify_form(B, c.algebra, product)
    failing = []
    if not flags.supersymmetric:
        failing.append("supersymmetric")
    if not flags.nondegenerate:
        failing.append("nondegenerate")
    if not flags.invariant:
        failing.append("invariant")
    if failing:
        raise ValueError(f"form fails flags: {', '.join(failing)}")
    if not c.r.is_skew_supersymmetric():
        raise ValueError("r is not skew-supersymmetric")
    phi = _linalg.transpose(B.matrix)
    rmap = r_as_map(c)
    return GradedLinearMap(
        c.algebra.space, c.algebra.space,
        _linalg.mat_mul(rmap.matrix, phi), 0,
    )
