#!/usr/bin/env python3
"""Truncated Laurent series: valuation, residue splitting, and perturbations.

The series field F((t)) carries a non-Archimedean valuation read off the
leading exponent.  Its valuation ring (series without poles) splits as
constants plus the ideal of positive-valuation tails; that splitting is
what lets an "infinitesimal" quadratic perturbation eps_j = t deform an
eigenvector system without disturbing its trivial solution or the
Jacobian there.
"""

import random

from quadalg import (
    LaurentSeries,
    Polynomial,
    Rationals,
    StructureTensor,
    build_system,
    counterexample_algebra,
    perturb_system,
    trivial_jacobian_check,
)

Q = Rationals()
L = LaurentSeries(Q, 16)

a = L.series(0, [5, 2, 0, 1])  # 5 + 2t + t^3
const, tail = L.residue_decompose(a)
print("5 + 2t + t^3  splits as  constant", const, " +  tail", tail)
print("tail valuation offset:", L.valuation(tail))

b = L.series(-1, [1, 1])  # t^-1 (1 + t): a pole, outside the valuation ring
try:
    L.residue_decompose(b)
except Exception as exc:
    print("t^-1 + 1 is not regular:", exc)

print()
rng = random.Random(3)
ok = 0
for _ in range(200):
    s = L.series(rng.randint(0, 3), [Q.random(rng) for _ in range(4)])
    c, t_ = L.residue_decompose(s)
    ok += L.add(L.embed(c), t_) == s
print(f"round trip constant + tail == original: {ok}/200")

# perturb the rational quotient algebra's system by eps_j = t
print()
base = counterexample_algebra(Q, Polynomial(Q, [-2, 0, 0, 1]))
alpha = [[[L.embed(v) for v in row] for row in plane] for plane in base.alpha]
S = build_system(StructureTensor(L, alpha))
P = perturb_system(S, [L.gen(), L.gen()], [(L.one(), L.zero()), (L.zero(), L.one())])
trivial = (L.zero(), L.zero(), L.one())
print("trivial solution survives eps = t:", all(L.is_zero(v) for v in P.evaluate(trivial)))
print("Jacobian at the origin still -I:  ", trivial_jacobian_check(P))
