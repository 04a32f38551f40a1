"""Vectorized exhaustive enumeration over small finite fields.

Field elements are addressed by integer index: for GF(p) the index is the
residue itself, for GF(p^k) it is sum(c_i * p^i) over the coefficient tuple.
Index 0 is zero and index 1 is one in both cases.  Multiplication uses
discrete log/antilog tables against a fixed generator; addition works on a
precomputed digit table.  Points of P^n are enumerated in canonical order
(leftmost-nonzero-is-1, grouped by lead position, tails in mixed radix with
the leftmost free digit most significant), matching the scalar enumeration
in the solver module.
"""

from functools import lru_cache

import numpy as np

from .fields import ExtensionField, PrimeField

_CHUNK = 1 << 20
_MAX_ORDER = 1 << 16


def supports(F):
    """True when the index backend can handle this field."""
    if isinstance(F, PrimeField):
        return F.p <= _MAX_ORDER
    return (
        isinstance(F, ExtensionField)
        and isinstance(F.base, PrimeField)
        and F.order <= _MAX_ORDER
    )


class _PrimeOps:
    def __init__(self, p):
        self.p = p

    def mul(self, a, b):
        return (a * b) % self.p

    def mul_scalar(self, c, a):
        return (c * a) % self.p

    def add(self, a, b):
        return (a + b) % self.p


class _ExtOps:
    def __init__(self, F):
        q = F.order
        p = F.base.p
        k = F.degree
        gen = F.scalar_from_index(_find_generator(F))
        exp = np.empty(q - 1, dtype=np.int64)
        acc = F.one()
        for e in range(q - 1):
            exp[e] = F.scalar_index(acc)
            acc = F.mul(acc, gen)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        digits = np.empty((q, k), dtype=np.int64)
        for i in range(k):
            digits[:, i] = (idx // p**i) % p
        self.q = q
        self.p = p
        self.exp = exp
        self.log = log
        self.digits = digits
        self.p_pows = np.array([p**i for i in range(k)], dtype=np.int64)

    def mul(self, a, b):
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def mul_scalar(self, c, a):
        if c == 0:
            return np.zeros_like(a)
        out = self.exp[(self.log[c] + self.log[a]) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def add(self, a, b):
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.p_pows


def _find_generator(F):
    q = F.order
    for idx in range(2, q):
        g = F.scalar_from_index(idx)
        acc = g
        order = 1
        while acc != F.one():
            acc = F.mul(acc, g)
            order += 1
        if order == q - 1:
            return idx
    raise RuntimeError("no generator found (not a field?)")


@lru_cache(maxsize=32)
def _ops_cached(F):
    if isinstance(F, PrimeField):
        return _PrimeOps(F.p)
    return _ExtOps(F)


def solve_system(F, n, forms_idx):
    """Index rows (length n+1) of all projective solutions, in canonical order."""
    ops = _ops_cached(F)
    q = F.order
    rows = []
    for lead in range(n + 1):
        m = n - lead
        count = q**m
        for start in range(0, count, _CHUNK):
            vals = np.arange(start, min(start + _CHUNK, count), dtype=np.int64)
            coords = []
            for pos in range(n + 1):
                if pos < lead:
                    coords.append(np.zeros(len(vals), dtype=np.int64))
                elif pos == lead:
                    coords.append(np.ones(len(vals), dtype=np.int64))
                else:
                    t = pos - lead - 1
                    coords.append((vals // q ** (m - 1 - t)) % q)
            mask = np.ones(len(vals), dtype=bool)
            for form in forms_idx:
                acc = np.zeros(len(vals), dtype=np.int64)
                for (i, k), cidx in form.items():
                    term = ops.mul(coords[i], coords[k])
                    acc = ops.add(acc, ops.mul_scalar(cidx, term))
                mask &= acc == 0
                if not mask.any():
                    break
            for r in np.nonzero(mask)[0]:
                rows.append(tuple(int(coords[pos][r]) for pos in range(n + 1)))
    return rows
