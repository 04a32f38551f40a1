#!/usr/bin/env python3
"""Algebras whose squaring operator has no eigenvectors at all.

Whenever a field admits an irreducible polynomial of odd degree d > 1, the
quotient of F[t]/(f) by its constant line (under the product
x o y = (x - pi x)(y - pi y)) is a commutative algebra with no idempotent,
no absolute nilpotent, and no eigenvector whatsoever.  This script builds
the two desk-scale instances and verifies emptiness with exact engines.
"""

from quadalg import (
    Polynomial,
    PrimeField,
    Rationals,
    build_system,
    classify_spectrum,
    counterexample_algebra,
    solve_exact_dim2,
    solve_exhaustive,
)

Q = Rationals()
F3 = PrimeField(3)


def show_table(A, name):
    print(f"{name}: dim {A.dim} over {A.field!r}")
    for i in range(A.dim):
        for k in range(A.dim):
            ei = tuple(A.field.one() if j == i else A.field.zero() for j in range(A.dim))
            ek = tuple(A.field.one() if j == k else A.field.zero() for j in range(A.dim))
            print(f"  e{i+1} * e{k+1} = {A.multiply(ei, ek)}")


# over the rationals: t^3 - 2 (no rational cube root of 2)
A = counterexample_algebra(Q, Polynomial(Q, [-2, 0, 0, 1]))
show_table(A, "QQ quotient of Q[t]/(t^3 - 2)")
res = solve_exact_dim2(A)
print("rational eigen-directions found:", len(res.solutions))
print("spectrum report:", classify_spectrum(A).description.value)
print()

# over GF(3): t^3 - t - 1 (irreducible cubic)
B = counterexample_algebra(F3, Polynomial(F3, [-1, -1, 0, 1]))
show_table(B, "GF(3) quotient of GF(3)[t]/(t^3 - t - 1)")
sols = solve_exhaustive(build_system(B))
print("projective solutions over GF(3):", [s.coords for s in sols], "(trivial only)")
print("spectrum report:", classify_spectrum(B).description.value)
