"""Reversibility witnesses, the cancellative quotient and indecomposables."""

from powsemi import (CycloNum, Monomial, MonomialSemigroup, RootOfUnity, indecomposables, quotient,
                     reversibility_witness)

F1 = Monomial.of(RootOfUnity(3, 1), 2)
F2 = Monomial.of(RootOfUnity(4, 1), 3)
w = reversibility_witness(F1, F2)
print(f"F1 = {F1}, F2 = {F2}")
print(f"    X = {w.x}, Y = {w.y}, X o F1 = Y o F2 = {w.value}")

S = MonomialSemigroup([Monomial.of(RootOfUnity(6, 1), 2), Monomial.of(RootOfUnity(4, 1), 3)])
q = quotient(S)
print(f"quotient: P2 = {sorted(q.P2)}, image generators {[str(g) for g in q.image.generators]}")

units = [CycloNum.rational(1), CycloNum.rational(2)]
print("indecomposables of U x N with U = <2>, N = <2>:")
for e in indecomposables(units, [2], 4):
    print(f"    {e}")
