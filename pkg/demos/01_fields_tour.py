#!/usr/bin/env python3
"""Tour of the coefficient field backends.

All five field kinds expose one interface: scalars are plain immutable
values and the field object supplies the arithmetic, so every algorithm in
the library runs unchanged over exact rationals, finite fields, floats,
or truncated Laurent series.
"""

from fractions import Fraction

from quadalg import (
    ExtensionField,
    LaurentSeries,
    Polynomial,
    PrimeField,
    Rationals,
    Reals,
    eisenstein_irreducible,
    finite_field,
    poly_has_root,
)

Q = Rationals()
print("rationals:      1/3 + 1/6 =", Q.add(Fraction(1, 3), Fraction(1, 6)))

F3 = PrimeField(3)
print("GF(3):          2 * 2 =", F3.mul(2, 2))

F27 = ExtensionField(F3, [-1, -1, 0, 1])  # t^3 - t - 1, irreducible over GF(3)
t = F27.gen()
print("GF(27):         t^2 * t =", F27.mul(F27.mul(t, t), t), " (t^3 reduces to t + 1)")

R = Reals(1e-10)
print("reals:          0.1 + 0.2 == 0.3 up to tolerance:", R.eq(R.add(0.1, 0.2), 0.3))

# root finding drives the field-class results downstream: a^3 - 2 has no
# rational root, and a^q - a + 1 cannot vanish over GF(q)
print()
print("a^3 - 2 over QQ has a root:", poly_has_root(Polynomial(Q, [-2, 0, 0, 1]))[0])
F9 = finite_field(9)
witness = Polynomial(F9, [1, -1] + [0] * 7 + [1], var="a")  # a^9 - a + 1
print("a^9 - a + 1 over GF(9) has a root:", poly_has_root(witness)[0])

# Eisenstein certifies irreducibility of integer polynomials
print()
print("t^3 - 2 Eisenstein at 2:", eisenstein_irreducible(Polynomial(Q, [-2, 0, 0, 1]), 2))
print("t^5 + 6t + 3 Eisenstein at 3:", eisenstein_irreducible(Polynomial(Q, [3, 6, 0, 0, 0, 1]), 3))

# Laurent series: the valuation reads off the leading exponent
L = LaurentSeries(Q, 16)
a = L.series(2, [1, 1])  # t^2 (1 + t)
print()
print("nu(t^2 + t^3) =", L.valuation(a))
print("nu(1 / (t^2 + t^3)) =", L.valuation(L.inv(a)))
