#!/usr/bin/env python3
"""Exhaustive spectra over finite fields and the four-way trichotomy.

Over any field, the eigenvalue set of a squaring operator is forced into
one of four shapes by rescaling: empty, {0}, everything but 0, or the whole
field.  Membership of 0 and 1 (absolute nilpotents and idempotents) decides
which.  Finite fields make this checkable by brute force.
"""

import random
from collections import Counter

from quadalg import (
    PrimeField,
    classify_spectrum,
    random_structure_tensor,
    zero_algebra,
)
from quadalg.algebra import eigenvalue_set

F5 = PrimeField(5)

Z = zero_algebra(F5, 2)
print("zero multiplication:     sigma =", sorted(eigenvalue_set(Z)),
      "->", classify_spectrum(Z).description.value)

from quadalg import StructureTensor

D = StructureTensor(F5, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
print("diagonal idempotents:    sigma =", sorted(eigenvalue_set(D)),
      "->", classify_spectrum(D).description.value)

M = StructureTensor(F5, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]])
print("idempotent + nilpotent:  sigma =", sorted(eigenvalue_set(M)),
      "->", classify_spectrum(M).description.value)

print()
print("census of 300 random commutative algebras over GF(5), n = 2:")
rng = random.Random(12)
census = Counter()
for _ in range(300):
    A = random_structure_tensor(F5, 2, rng)
    rep = classify_spectrum(A)
    census[rep.description.value] += 1
    # the full eigenvalue set never escapes the four allowed shapes
    sigma = eigenvalue_set(A)
    assert sigma in (set(), {0}, {1, 2, 3, 4}, {0, 1, 2, 3, 4})
for desc, count in sorted(census.items()):
    print(f"  {desc:12s} {count}")
