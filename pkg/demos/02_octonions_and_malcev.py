#!/usr/bin/env python3
# Split octonions via Cayley-Dickson doubling: an alternative algebra whose
# commutator is a Malcev algebra that is not a Lie algebra.

import itertools
from fractions import Fraction

from supermalcev import (
    check_left_alternative,
    check_malcev,
    check_right_alternative,
    commutator_superalgebra,
)
from supermalcev import fixtures

O = fixtures.split_octonions()
print("split octonions: dim", O.space.dim)

left = check_left_alternative(O)
right = check_right_alternative(O)
print(f"left alternative: {left.ok} ({left.checked_tuples} triples)")
print(f"right alternative: {right.ok} ({right.checked_tuples} triples)")

# Octonions are not associative; alternativity is the surviving fragment.
n = O.space.dim
one = Fraction(1)
assoc_failures = sum(
    1 for i, j, k in itertools.product(range(n), repeat=3)
    if O.mul_sparse(O.mul_basis(i, j), {k: one}) != O.mul_sparse({i: one}, O.mul_basis(j, k))
)
print("associativity fails on", assoc_failures, "of", n ** 3, "basis triples")

# The commutator bracket is Malcev (4096 quadruples, exact arithmetic).
C = commutator_superalgebra(O)
report = check_malcev(C)
print(f"commutator bracket Malcev: {report.ok} ({report.checked_tuples} quadruples)")

# ... but not Lie: the Jacobi identity already fails on basis triples.
def jacobi(i, j, k):
    t1 = C.mul_sparse(C.mul_basis(i, j), {k: one})
    t2 = C.mul_sparse(C.mul_basis(k, i), {j: one})
    t3 = C.mul_sparse(C.mul_basis(j, k), {i: one})
    total = dict(t1)
    for term in (t2, t3):
        for idx, c in term.items():
            total[idx] = total.get(idx, 0) + c
    return {idx: c for idx, c in total.items() if c != 0}

jacobi_failures = sum(
    1 for i, j, k in itertools.product(range(n), repeat=3) if jacobi(i, j, k)
)
print("Jacobi identity fails on", jacobi_failures, "basis triples (Malcev, not Lie)")

# A broken table is pinpointed by the violation report.
from supermalcev import SuperSpace, Superalgebra

bad = Superalgebra.from_entries(SuperSpace(2, 0), {"mul": {(0, 0, 1): 1, (1, 1, 0): 1}})
report = check_left_alternative(bad)
print("\nbroken 2-dim table:", "ok" if report.ok else
      f"{report.violation_count} violations, first witness {report.witnesses[0][0]}")

# The same story in the Zorn vector-matrix presentation.
Z = fixtures.zorn_split_octonions()
print("\nZorn basis:", Z.space.labels)
print("alternative:", check_left_alternative(Z).ok and check_right_alternative(Z).ok)
print("commutator Malcev:", check_malcev(commutator_superalgebra(Z)).ok)
