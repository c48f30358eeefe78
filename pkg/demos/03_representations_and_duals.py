#!/usr/bin/env python3
# Representations and bimodules: adjoint and coadjoint actions, the
# semidirect-product criterion, and duals with their Koszul signs.

from supermalcev import (
    Representation,
    adjoint_representation,
    check_alternative_bimodule,
    check_malcev,
    check_malcev_representation,
    coadjoint_representation,
    dual_representation,
    regular_bimodule,
    rep_from_bimodule,
    semidirect_malcev,
    commutator_superalgebra,
)
from supermalcev import fixtures

sl2 = fixtures.sl2()
ad = adjoint_representation(sl2)
print("sl(2) adjoint representation passes:", check_malcev_representation(ad).ok)

def show(matrix):
    return [[str(c) for c in row] for row in matrix]

# The coadjoint matrices are minus the transposes in the purely even case.
coad = coadjoint_representation(sl2)
print("ad(h) matrix:  ", show(ad.action[0].matrix))
print("ad*(h) matrix: ", show(coad.action[0].matrix))
print("coadjoint passes:", check_malcev_representation(coad).ok)

# An action is a representation exactly when the semidirect bracket is
# Malcev; a seeded random action fails on both sides at once.
sd = semidirect_malcev(ad)
print("\nsl(2) x sl(2) semidirect bracket is Malcev:", check_malcev(sd).ok)
maps = fixtures.random_action_maps(sl2, sl2.space, seed=4)
bad = Representation(sl2, sl2.space, maps)
print("seeded action: representation check =",
      check_malcev_representation(bad).ok,
      "/ semidirect Malcev =", check_malcev(semidirect_malcev(bad)).ok)

# A 1|1 example: the Heisenberg superalgebra [f,f] = e.
heis = fixtures.heisenberg_1_1()
ad_h = adjoint_representation(heis)
print("\nHeisenberg 1|1 adjoint passes:", check_malcev_representation(ad_h).ok)
dual = dual_representation(ad_h)
print("its dual passes too:", check_malcev_representation(dual).ok)
print("dual action of f (odd, note the sign):", show(dual.action[1].matrix))

# Alternative side: the regular bimodule of the split octonions.
Z = fixtures.zorn_split_octonions()
reg = regular_bimodule(Z)
print("\noctonion regular bimodule passes:", check_alternative_bimodule(reg).ok)
induced = rep_from_bimodule(reg)
adC = adjoint_representation(commutator_superalgebra(Z))
print("l - (-1)^{|x||v|} r equals the adjoint of the commutator:",
      all(a.matrix == b.matrix for a, b in zip(induced.action, adC.action)))
