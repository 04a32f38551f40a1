#!/usr/bin/env python3
"""Counting projective solutions over growing finite fields.

The eigenvector system of an n-dimensional algebra is n quadrics in P^n;
when its solution set over the algebraic closure is finite, the solution
count (with multiplicity) is exactly 2^n.  Counting distinct points over
F_{p^k} for k = 1..4 gives a cheap probe: counts above 2^n certify a
positive-dimensional solution set, bounded counts are consistent with a
generic (finite) one.  A random quadratic perturbation usually cuts a
degenerate system back down to finitely many solutions.
"""

import random

from quadalg import (
    PrimeField,
    SolveConfig,
    StructureTensor,
    build_system,
    draw_perturbation,
    genericity_probe,
    perturb_system,
    zero_algebra,
)

F5 = PrimeField(5)
cfg = SolveConfig(k_max=4)


def report(tag, probe):
    counts = ", ".join(f"k={k}: {c}" for k, c in sorted(probe.counts.items()))
    print(f"{tag}: bound 2^n = {probe.bound}; {counts} -> {probe.verdict.value}")


# a single idempotent line: two solutions at every level
report("1-dim unit algebra   ", genericity_probe(StructureTensor(F5, [[[1]]]), cfg))

# four isolated solutions, saturating the bound 2^2 = 4
D = StructureTensor(F5, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
report("diagonal idempotents ", genericity_probe(D, cfg))

# the zero algebra carries a whole line of nilpotents: counts grow like q
Z = zero_algebra(F5, 2)
report("zero multiplication  ", genericity_probe(Z, cfg))

# perturbing the degenerate system restores finiteness for most draws
print()
print("perturbing the zero algebra, seeds 0..9:")
S = build_system(Z)
for seed in range(10):
    rng = random.Random(seed)
    eps, phis = draw_perturbation(F5, 2, rng)
    probe = genericity_probe(perturb_system(S, eps, phis), SolveConfig(k_max=3))
    report(f"  seed {seed}            ", probe)
