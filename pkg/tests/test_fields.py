"""Field backends: axioms, polynomial utilities, Laurent valuation machinery."""

import random
from fractions import Fraction

import pytest

from quadalg import (
    DivisionByZero,
    ExtensionField,
    FieldMismatch,
    LaurentSeries,
    NotInValuationRing,
    NotIntegerCoefficients,
    Polynomial,
    PrimeField,
    Rationals,
    Reals,
    ReducibleModulus,
    ZeroSeries,
    eisenstein_irreducible,
    field_arith,
    field_from_json,
    field_to_json,
    finite_field,
    laurent_valuation,
    poly_has_root,
    polynomial_roots,
    residue_decompose,
)

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F27 = ExtensionField(F3, [-1, -1, 0, 1])  # t^3 - t - 1


def naive_eval(F, coeffs, a):
    """Power-sum evaluation, independent of the Horner routine under test."""
    acc = F.zero()
    for i, c in enumerate(coeffs):
        term = c
        for _ in range(i):
            term = F.mul(term, a)
        acc = F.add(acc, term)
    return acc


# ---------------------------------------------------------------------------
# arithmetic and axioms
# ---------------------------------------------------------------------------


def test_rational_add():
    assert field_arith(Q, "add", Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)


def test_prime_mul_wraps():
    assert field_arith(F3, "mul", 2, 2) == 1


def test_extension_mul_reduces_by_modulus():
    t = F27.gen()
    t2 = F27.mul(t, t)
    # t^3 = t + 1 under the modulus
    assert field_arith(F27, "mul", t2, t) == (1, 1, 0)


def test_field_mismatch_detected():
    with pytest.raises(FieldMismatch):
        field_arith(F3, "add", 1, Fraction(1, 2))
    with pytest.raises(FieldMismatch):
        field_arith(Q, "mul", Fraction(1), 7)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(Q, "div", Fraction(1), Fraction(0))
    with pytest.raises(DivisionByZero):
        field_arith(F5, "inv", 0)
    L = LaurentSeries(Q)
    with pytest.raises(DivisionByZero):
        L.inv(L.zero())


@pytest.mark.parametrize(
    "F", [Q, F5, F27, finite_field(4), LaurentSeries(Q)], ids=lambda F: repr(F)
)
def test_field_axioms_random_triples(F):
    rng = random.Random(20240907)
    zero, one = F.zero(), F.one()
    for _ in range(1000):
        a, b, c = F.random(rng), F.random(rng), F.random(rng)
        assert F.eq(F.add(a, b), F.add(b, a))
        assert F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
        assert F.eq(F.mul(a, b), F.mul(b, a))
        assert F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
        assert F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
        assert F.eq(F.add(a, zero), a)
        assert F.eq(F.mul(a, one), a)
        assert F.eq(F.add(a, F.neg(a)), zero)
        if not F.is_zero(a):
            assert F.eq(F.mul(a, F.inv(a)), one)
            assert F.eq(F.div(b, a), F.mul(b, F.inv(a)))


def test_reals_equality_tolerance():
    R = Reals(1e-10)
    assert R.eq(1.0, 1.0 + 1e-12)
    assert not R.eq(1.0, 1.0 + 1e-8)
    assert not R.is_exact


def test_extension_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        ExtensionField(F3, [-1, 0, 1])  # t^2 - 1 = (t-1)(t+1)


def test_extension_characteristic_and_order():
    assert F27.characteristic == 3
    assert F27.order == 27
    assert len(list(F27.elements())) == 27


def test_scalar_index_round_trip():
    for i in range(27):
        assert F27.scalar_index(F27.scalar_from_index(i)) == i


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------


def test_root_witness_cubic_over_f3():
    f = Polynomial(F3, [1, -1, 0, 1], var="a")  # a^3 - a + 1
    assert poly_has_root(f) == (False, None)


def test_root_witness_cube_root_of_two():
    f = Polynomial(Q, [-2, 0, 0, 1], var="a")
    assert poly_has_root(f) == (False, None)


def test_root_witness_square_minus_one():
    f = Polynomial(Q, [-1, 0, 1], var="a")
    has, root = poly_has_root(f)
    assert has and f(root) == 0


def test_root_witness_char_two_variant():
    f = Polynomial(F2, [1, 0, -1, 1], var="a")  # a^3 - a^2 + 1
    assert poly_has_root(f) == (False, None)


@pytest.mark.parametrize("F", [F3, F5, finite_field(4), finite_field(9)], ids=repr)
def test_finite_root_search_matches_naive_evaluation(F):
    rng = random.Random(7)
    for _ in range(25):
        coeffs = [F.random(rng) for _ in range(rng.randint(1, 5))]
        if all(F.is_zero(c) for c in coeffs):
            coeffs.append(F.one())
        f = Polynomial(F, coeffs)
        expected = sorted(
            (a for a in F.elements() if F.is_zero(naive_eval(F, f.coeffs, a))),
            key=F.scalar_index,
        )
        assert sorted(polynomial_roots(f), key=F.scalar_index) == expected


def test_rational_roots_with_denominators():
    # (2x - 1)(3x + 2)(x - 5) has roots 1/2, -2/3, 5
    f = Polynomial(Q, [Fraction(1)])
    for r in (Fraction(1, 2), Fraction(-2, 3), Fraction(5)):
        f = f * Polynomial(Q, [-r, Fraction(1)])
    assert set(polynomial_roots(f)) == {Fraction(1, 2), Fraction(-2, 3), Fraction(5)}


# ---------------------------------------------------------------------------
# Eisenstein
# ---------------------------------------------------------------------------


def test_eisenstein_cube_root_of_two():
    assert eisenstein_irreducible(Polynomial(Q, [-2, 0, 0, 1]), 2) is True


def test_eisenstein_fails_on_square_minus_one():
    assert eisenstein_irreducible(Polynomial(Q, [-1, 0, 1]), 2) is False


def test_eisenstein_quintic():
    # t^5 + 6t + 3: constant 3, middle 6 divisible by 3, 9 does not divide 3
    assert eisenstein_irreducible(Polynomial(Q, [3, 6, 0, 0, 0, 1]), 3) is True


def test_eisenstein_rejects_fractions():
    with pytest.raises(NotIntegerCoefficients):
        eisenstein_irreducible(Polynomial(Q, [Fraction(1, 2), Fraction(1)]), 2)


# ---------------------------------------------------------------------------
# Laurent series
# ---------------------------------------------------------------------------

L = LaurentSeries(Q, 16)


def test_valuation_of_leading_exponent():
    assert laurent_valuation(L, L.series(2, [1, 1])) == 2


def test_valuation_of_regular_constant():
    assert laurent_valuation(L, L.series(0, [3, 1])) == 0


def test_valuation_additive_under_product():
    a = L.series(1, [1, 1])
    b = L.series(-1, [2, 0, 1])
    ab = L.mul(a, b)
    assert laurent_valuation(L, ab) == 0
    # (1+t)(2+t^2) = 2 + 2t + t^2 + t^3
    assert ab == L.series(0, [2, 2, 1, 1])


def test_valuation_of_zero_raises():
    with pytest.raises(ZeroSeries):
        laurent_valuation(L, L.zero())


def test_residue_decompose_examples():
    const, tail = residue_decompose(L, L.series(0, [5, 2, 0, 1]))
    assert const == Fraction(5)
    assert tail == L.series(1, [2, 0, 1])
    const, tail = residue_decompose(L, L.series(2, [1]))
    assert const == 0 and tail == L.series(2, [1])


def test_residue_decompose_rejects_poles():
    with pytest.raises(NotInValuationRing):
        residue_decompose(L, L.series(-1, [1]))


def test_residue_decompose_round_trip_random():
    rng = random.Random(99)
    for _ in range(100):
        a = L.series(rng.randint(0, 3), [Q.random(rng) for _ in range(rng.randint(1, 5))])
        const, tail = residue_decompose(L, a)
        assert L.add(L.embed(const), tail) == a
        if not L.is_zero(tail):
            assert laurent_valuation(L, tail) >= 1
        if not Q.is_zero(const):
            assert laurent_valuation(L, L.embed(const)) == 0


def test_laurent_truncation_on_multiply():
    prec = 4
    Ls = LaurentSeries(Q, prec)
    a = Ls.series(0, [1, 1, 1, 1])
    sq = Ls.mul(a, a)
    assert len(sq[1]) <= prec


# ---------------------------------------------------------------------------
# construction helpers and serialization
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("q,char", [(2, 2), (3, 3), (4, 2), (5, 5), (7, 7), (8, 2), (9, 3)])
def test_finite_field_constructor(q, char):
    F = finite_field(q)
    assert F.order == q
    assert F.characteristic == char
    assert len(set(map(F.scalar_index, F.elements()))) == q


def test_finite_field_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        finite_field(6)


@pytest.mark.parametrize(
    "F",
    [Q, F3, F27, Reals(), Reals(1e-6), LaurentSeries(Q, 8), LaurentSeries(F5)],
    ids=lambda F: repr(F),
)
def test_descriptor_json_round_trip(F):
    assert field_from_json(field_to_json(F)) == F


def test_rational_scalar_serialization():
    assert Q.scalar_to_json(Fraction(-3, 7)) == "-3/7"
    assert Q.scalar_from_json("-3/7") == Fraction(-3, 7)
    assert Q.scalar_from_json(5) == Fraction(5)


def test_ext_descriptor_reduces_mod_p():
    F = field_from_json({"kind": "ext", "p": 3, "modulus": [-1, -1, 0, 1]})
    assert F == F27


def test_laurent_scalar_serialization_round_trip():
    a = L.series(-2, [1, 0, 3])
    assert L.scalar_from_json(L.scalar_to_json(a)) == a
    assert L.scalar_to_json(L.zero()) == {"nu": 0, "coeffs": []}
