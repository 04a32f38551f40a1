"""System builder, solution engines, extension counting, genericity probe."""

import random
from fractions import Fraction

import pytest

from quadalg import (
    BudgetExceeded,
    GenericityVerdict,
    LaurentSeries,
    Polynomial,
    PrimeField,
    QuadraticSystem,
    Rationals,
    Reals,
    SearchExhausted,
    SolveConfig,
    StructureTensor,
    UnsupportedField,
    ValuationViolation,
    WrongDimension,
    build_system,
    count_solutions_extension,
    counterexample_algebra,
    eigencheck,
    finite_field,
    genericity_probe,
    perturb_system,
    random_structure_tensor,
    solve_exact_dim2,
    solve_exhaustive,
    solve_real,
    trivial_jacobian_check,
    unit_eigenpair,
    zero_algebra,
)
from quadalg import solver
from quadalg.solver import draw_perturbation, normalize_point, projective_points

Q = Rationals()
F3 = PrimeField(3)
F5 = PrimeField(5)
R = Reals()


def f3_counterexample():
    return counterexample_algebra(F3, Polynomial(F3, [-1, -1, 0, 1]))


def q_counterexample():
    return counterexample_algebra(Q, Polynomial(Q, [-2, 0, 0, 1]))


def complex_algebra():
    return StructureTensor(R, [[[1.0, 0.0], [0.0, 1.0]], [[0.0, 1.0], [-1.0, 0.0]]])


def diagonal_f5():
    return StructureTensor(F5, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])


# ---------------------------------------------------------------------------
# system construction
# ---------------------------------------------------------------------------


def test_trivial_point_annihilates_every_system():
    rng = random.Random(31)
    for F in (Q, F5):
        for _ in range(10):
            A = random_structure_tensor(F, 3, rng)
            S = build_system(A)
            pt = (F.zero(),) * 3 + (F.one(),)
            assert all(F.is_zero(v) for v in S.evaluate(pt))


def test_eigenpairs_annihilate_the_system():
    D = StructureTensor(
        Q, [[[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]],
            [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]]
    )
    S = build_system(D)
    for x in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))):
        lam = eigencheck(D, x)
        assert all(Q.is_zero(v) for v in S.evaluate(x + (lam,)))


def test_complex_idempotent_point():
    S = build_system(complex_algebra())
    vals = S.evaluate((1.0, 0.0, 1.0))
    assert all(abs(v) < 1e-12 for v in vals)


def test_evaluate_agrees_with_tensor_route():
    rng = random.Random(37)
    for F in (Q, F5):
        A = random_structure_tensor(F, 3, rng, commutative=False)
        S = build_system(A)
        eps, phis = draw_perturbation(F, 3, rng)
        P = perturb_system(S, eps, phis)
        for _ in range(25):
            pt = tuple(F.random(rng) for _ in range(4))
            assert S.evaluate(pt) == S.residual_via_tensor(pt)
            assert P.evaluate(pt) == P.residual_via_tensor(pt)


# ---------------------------------------------------------------------------
# Jacobian at the trivial solution
# ---------------------------------------------------------------------------


def test_jacobian_minus_identity_over_q_and_f5():
    rng = random.Random(41)
    for F in (Q, F5):
        for _ in range(10):
            A = random_structure_tensor(F, 3, rng)
            assert trivial_jacobian_check(build_system(A))


def test_jacobian_minus_identity_survives_perturbation():
    rng = random.Random(43)
    A = random_structure_tensor(F5, 2, rng)
    S = build_system(A)
    eps, phis = draw_perturbation(F5, 2, rng)
    assert trivial_jacobian_check(perturb_system(S, eps, phis))


def test_jacobian_check_detects_a_broken_system():
    # drop the -lambda*xi_j terms: the Jacobian at the origin becomes zero
    A = diagonal_f5()
    S = build_system(A)
    broken = QuadraticSystem(
        F5, 2, [{k: v for k, v in f.items() if k[1] != 2} for f in S.forms]
    )
    assert not trivial_jacobian_check(broken)


# ---------------------------------------------------------------------------
# exhaustive engine
# ---------------------------------------------------------------------------


def test_exhaustive_counterexample_only_trivial():
    sols = solve_exhaustive(build_system(f3_counterexample()))
    assert len(sols) == 1 and sols[0].trivial
    assert sols[0].coords == (0, 0, 1)


def test_exhaustive_zero_algebra_solution_plane():
    sols = solve_exhaustive(build_system(zero_algebra(F3, 2)))
    assert {s.coords for s in sols} == {(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 1, 0), (0, 0, 1)}


def test_exhaustive_one_dimensional_over_f5():
    A = StructureTensor(F5, [[[1]]])
    sols = solve_exhaustive(build_system(A))
    assert {s.coords for s in sols} == {(0, 1), (1, 1)}


def test_exhaustive_is_duplicate_free_and_verified():
    rng = random.Random(47)
    for _ in range(10):
        A = random_structure_tensor(F5, 2, rng)
        S = build_system(A)
        sols = solve_exhaustive(S)
        coords = [s.coords for s in sols]
        assert len(coords) == len(set(coords))
        assert all(S.is_solution(c) for c in coords)
        assert sum(1 for s in sols if s.trivial) == 1


def test_exhaustive_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        solve_exhaustive(build_system(zero_algebra(F5, 3)), SolveConfig(enumeration_budget=10))


def test_exhaustive_rejects_infinite_fields():
    with pytest.raises(UnsupportedField):
        solve_exhaustive(build_system(zero_algebra(Q, 2)))


def test_fast_and_pure_paths_agree(monkeypatch):
    F25 = finite_field(25)
    rng = random.Random(53)
    alpha = [
        [[F25.random(rng) for _ in range(2)] for _ in range(2)] for _ in range(2)
    ]
    A = StructureTensor(F25, alpha)
    S = build_system(A)
    monkeypatch.setattr(solver, "FAST_PATH_THRESHOLD", 10**9)
    pure = [s.coords for s in solve_exhaustive(S)]
    monkeypatch.setattr(solver, "FAST_PATH_THRESHOLD", 0)
    fast = [s.coords for s in solve_exhaustive(S)]
    assert pure == fast


def test_scaling_invariance_of_solutions():
    rng = random.Random(59)
    for _ in range(10):
        A = random_structure_tensor(F5, 2, rng)
        c = rng.randrange(1, 5)
        S_a = build_system(A)
        S_ca = build_system(A.scale(c))
        sols_a = {s.coords for s in solve_exhaustive(S_a)}
        sols_ca = {s.coords for s in solve_exhaustive(S_ca)}
        mapped = {
            normalize_point(F5, s[:2] + (F5.mul(c, s[2]),)) for s in sols_a
        }
        assert mapped == sols_ca


def test_projective_point_enumeration_is_canonical():
    pts = list(projective_points(F3, 2))
    assert len(pts) == 13
    assert len(set(pts)) == 13
    for pt in pts:
        lead = next(i for i, c in enumerate(pt) if c != 0)
        assert pt[lead] == 1


# ---------------------------------------------------------------------------
# exact dimension-2 engine
# ---------------------------------------------------------------------------


def test_exact2_counterexample_has_no_rational_direction():
    res = solve_exact_dim2(q_counterexample())
    assert res.solutions == () and not res.infinite_family


def test_exact2_diagonal_directions():
    D = StructureTensor(
        Q, [[[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]],
            [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]]
    )
    res = solve_exact_dim2(D)
    assert not res.infinite_family
    got = {s.coords for s in res.solutions}
    one, zero = Fraction(1), Fraction(0)
    assert got == {(one, zero, one), (zero, one, one), (one, one, one)}


def test_exact2_zero_algebra_infinite_family():
    res = solve_exact_dim2(zero_algebra(Q, 2))
    assert res.infinite_family
    assert all(s.lam == 0 for s in res.solutions)


def test_exact2_engine_guards():
    with pytest.raises(UnsupportedField):
        solve_exact_dim2(zero_algebra(F3, 2))
    with pytest.raises(WrongDimension):
        solve_exact_dim2(zero_algebra(Q, 3))


def test_exact2_agrees_with_exhaustive_mod_p():
    rng = random.Random(61)
    p = 7
    Fp = PrimeField(p)
    for _ in range(15):
        ints = [[[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)] for _ in range(2)]
        A = StructureTensor(Q, [[[Fraction(v) for v in r] for r in pl] for pl in ints])
        res = solve_exact_dim2(A)
        if res.infinite_family:
            continue
        B = StructureTensor(Fp, [[[v % p for v in r] for r in pl] for pl in ints])
        fin = {s.coords for s in solve_exhaustive(build_system(B))}
        for s in res.solutions:
            # solutions are normalized with a leading 1, so denominators are
            # units mod p unless p divides one; skip those rare cases
            try:
                reduced = tuple(
                    (c.numerator * pow(c.denominator, -1, p)) % p for c in s.coords
                )
            except ValueError:
                continue
            assert normalize_point(Fp, reduced) in fin


# ---------------------------------------------------------------------------
# real engine
# ---------------------------------------------------------------------------


def test_real_engine_finds_complex_idempotent():
    sol = solve_real(complex_algebra())
    assert sol.residual <= 1e-9
    x, lam = unit_eigenpair(complex_algebra(), sol)
    assert lam == pytest.approx(1.0, abs=1e-7)
    assert abs(x[0]) == pytest.approx(1.0, abs=1e-7)


def test_real_engine_zero_algebra():
    sol = solve_real(zero_algebra(R, 4))
    x, lam = unit_eigenpair(zero_algebra(R, 4), sol)
    assert lam == pytest.approx(0.0, abs=1e-9)


def test_real_engine_lambda_is_rayleigh_value():
    rng = random.Random(67)
    import numpy as np

    for trial in range(10):
        A = random_structure_tensor(R, 3, rng)
        sol = solve_real(A, SolveConfig(seed=trial))
        x, lam = unit_eigenpair(A, sol)
        v = A.square(tuple(map(float, x)))
        assert lam == pytest.approx(float(np.dot(v, x)), abs=1e-7)


def test_real_engine_exhausts_when_budget_is_too_small():
    rng = random.Random(89)
    A = random_structure_tensor(R, 5, rng)
    with pytest.raises(SearchExhausted):
        solve_real(A, SolveConfig(residual_tol=1e-15, max_restarts=1, max_newton_iter=1))


def test_real_engine_rejects_exact_fields():
    with pytest.raises(UnsupportedField):
        solve_real(zero_algebra(Q, 2))


# ---------------------------------------------------------------------------
# extension counting, with an independent cubic-count oracle for n = 2
# ---------------------------------------------------------------------------


def cubic_count_oracle(A, E):
    """1 + number of eigen-directions, counted through the proportionality cubic.

    Embeds the 2-dimensional tensor into the finite field E and sweeps
    P^1(E); independent of the enumeration engine under test.
    """
    emb = E.embed if hasattr(E, "embed") else (lambda a: a)
    al = [[[emb(a) for a in row] for row in plane] for plane in A.alpha]
    q1 = (al[0][0][0], E.add(al[0][1][0], al[1][0][0]), al[1][1][0])
    q2 = (al[0][0][1], E.add(al[0][1][1], al[1][0][1]), al[1][1][1])
    c3 = E.neg(q2[0])
    c2 = E.sub(q1[0], q2[1])
    c1 = E.sub(q1[1], q2[2])
    c0 = E.sub(q1[2], E.zero())
    if all(E.is_zero(c) for c in (c0, c1, c2, c3)):
        return 1 + E.order + 1
    count = 1  # trivial solution
    if E.is_zero(c3):
        count += 1  # direction (1 : 0)
    for u in E.elements():
        u2 = E.mul(u, u)
        val = E.add(
            E.add(E.mul(c3, E.mul(u2, u)), E.mul(c2, u2)), E.add(E.mul(c1, u), c0)
        )
        if E.is_zero(val):
            count += 1
    return count


def test_extension_counts_one_dimensional():
    A = StructureTensor(F5, [[[1]]])
    for k in (1, 2, 3):
        assert count_solutions_extension(A, k) == 2


def test_extension_counts_counterexample_frozen():
    B = f3_counterexample()
    got = {k: count_solutions_extension(B, k) for k in (1, 2, 3)}
    assert got == {1: 1, 2: 1, 3: 4}
    for k in (1, 2, 3):
        E = finite_field(3**k)
        assert got[k] == cubic_count_oracle(B, E)


def test_extension_counts_match_cubic_oracle_random():
    rng = random.Random(71)
    for _ in range(8):
        A = random_structure_tensor(F5, 2, rng)
        for k in (1, 2):
            E = finite_field(5**k)
            assert count_solutions_extension(A, k) == cubic_count_oracle(A, E)


def test_extension_counts_require_prime_base():
    with pytest.raises(UnsupportedField):
        count_solutions_extension(zero_algebra(finite_field(4), 2), 2)


def test_counts_monotone_along_divisibility():
    rng = random.Random(73)
    for _ in range(6):
        A = random_structure_tensor(F5, 2, rng)
        counts = genericity_probe(A).counts
        assert counts[1] >= 1
        assert counts[1] <= counts[2] <= counts[4]
        assert counts[1] <= counts[3]


def test_probe_zero_algebra_positive_dimensional():
    probe = genericity_probe(zero_algebra(F3, 2))
    assert probe.counts == {1: 5, 2: 11, 3: 29, 4: 83}
    assert probe.verdict is GenericityVerdict.LIKELY_POSITIVE_DIMENSIONAL


def test_probe_one_dimensional_generic():
    probe = genericity_probe(StructureTensor(F5, [[[1]]]))
    assert probe.counts == {1: 2, 2: 2, 3: 2, 4: 2}
    assert probe.verdict is GenericityVerdict.LIKELY_GENERIC


def test_probe_diagonal_generic_at_bound():
    probe = genericity_probe(diagonal_f5())
    assert probe.counts == {1: 4, 2: 4, 3: 4, 4: 4}
    assert probe.verdict is GenericityVerdict.LIKELY_GENERIC
    assert probe.bound == 4


# ---------------------------------------------------------------------------
# perturbation
# ---------------------------------------------------------------------------


def test_zero_perturbation_is_identity():
    A = diagonal_f5()
    S = build_system(A)
    P = perturb_system(S, [0, 0], [(0, 0), (0, 0)])
    assert P.forms == S.forms


def test_laurent_perturbation_specializes_back():
    L = LaurentSeries(Q, 16)
    base = q_counterexample()
    alpha = [[[L.embed(a) for a in row] for row in plane] for plane in base.alpha]
    A = StructureTensor(L, alpha)
    S = build_system(A)
    t = L.gen()
    phis = [
        (L.one(), L.zero()),
        (L.zero(), L.one()),
    ]
    P = perturb_system(S, [t, t], phis)
    # the trivial solution survives and the Jacobian stays -I
    assert all(L.is_zero(v) for v in P.evaluate((L.zero(), L.zero(), L.one())))
    assert trivial_jacobian_check(P)
    # setting t = 0 (the constant part) recovers the unperturbed values
    rng = random.Random(79)
    Sq = build_system(base)
    for _ in range(20):
        pt_q = tuple(Q.random(rng) for _ in range(3))
        pt_l = tuple(L.embed(c) for c in pt_q)
        vals_q = Sq.evaluate(pt_q)
        for vq, vl in zip(vals_q, P.evaluate(pt_l)):
            const, _tail = L.residue_decompose(vl)
            assert const == vq


def test_perturbation_valuation_guards():
    L = LaurentSeries(Q, 16)
    A = StructureTensor(L, [[[L.one()]]])
    S = build_system(A)
    with pytest.raises(ValuationViolation):
        perturb_system(S, [L.one()], [(L.one(),)])  # eps is a unit, not in the ideal
    with pytest.raises(ValuationViolation):
        perturb_system(S, [L.gen()], [(L.series(-1, [1]),)])  # phi has a pole


def test_random_perturbation_mostly_generic_over_f5():
    Z = zero_algebra(F5, 2)
    S = build_system(Z)
    cfg = SolveConfig(k_max=3)
    generic = 0
    draws = 40
    for seed in range(draws):
        rng = random.Random(seed)
        eps, phis = draw_perturbation(F5, 2, rng)
        probe = genericity_probe(perturb_system(S, eps, phis), cfg)
        if probe.verdict is GenericityVerdict.LIKELY_GENERIC:
            generic += 1
    assert generic >= 0.9 * draws


def test_draw_perturbation_laurent_valuations():
    L = LaurentSeries(Q, 16)
    rng = random.Random(83)
    eps, phis = draw_perturbation(L, 3, rng)
    for e in eps:
        assert L.is_zero(e) or L.valuation(e) >= 1
    for phi in phis:
        for c in phi:
            assert L.is_zero(c) or L.valuation(c) >= 0
