"""
Checking identities with honest polynomials
===========================================

Each F[L] and each Jacobi-Trudi determinant can be expanded as a
polynomial in a few variables.  Those expansions share no code with
straightening, so agreement is an independent check.
"""

from quasischur import (
    F_poly,
    compositions,
    expansion_poly,
    is_symmetric_poly,
    jacobi_trudi_poly,
    schur_poly,
    schur_to_F,
    straighten,
)

nvars = 4
print("F[2,1] in 3 variables:", F_poly((2, 1), 3))

# sum of F over tableaux equals the determinant
shape = (3, 2)
print(expansion_poly(schur_to_F(shape), nvars) == schur_poly(shape, nvars))

# a single F is usually not symmetric
print(is_symmetric_poly(F_poly((1, 2), 3)))

# straightening agrees with the determinant for every composition of 5
for L in compositions(5):
    value = straighten(L)
    expected = 0 if value.is_zero else schur_poly(value.shape, nvars) * value.sign
    assert jacobi_trudi_poly(L, nvars) == expected, L
print("all compositions of 5 agree")
