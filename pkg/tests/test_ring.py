"""Ring-level tests: exact arithmetic, quantum combinatorics, specializations,
canonical text form."""

import random

import pytest

from qjones.ring import (
    CLASSICAL,
    LaurentPoly,
    ONE,
    SET_T,
    ZERO,
    aug,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
    specialize,
)


def q(e):
    return LaurentPoly.q_power(e)


def random_poly(rng, max_terms=6, span=6, with_s=True, with_t=True):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (
            rng.randint(-span, span),
            rng.randint(-span, span) if with_s else 0,
            rng.randint(-span, span) if with_t else 0,
        )
        terms[key] = rng.randint(-9, 9)
    return LaurentPoly(terms)


# ----------------------------------------------------------------------
# canonical form and ring axioms


def test_zero_coefficients_never_stored():
    p = LaurentPoly({(1, 0, 0): 1, (2, 0, 0): 0})
    assert p.term_count == 1
    assert (p - p).term_count == 0
    assert not (p - p)


def test_equal_polynomials_have_identical_term_maps_and_hashes():
    a = q(2) + q(-2) + ONE
    b = ONE + q(-2) + q(2)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_ring_axioms_on_random_triples():
    rng = random.Random(20240811)
    for _ in range(60):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        assert a * ZERO == ZERO


def test_units_are_exactly_signed_monomials():
    assert LaurentPoly.monomial(1, e_q=3, e_s=-2).is_unit()
    assert LaurentPoly.monomial(-1, e_t=5).is_unit()
    assert not LaurentPoly.monomial(2, e_q=1).is_unit()
    assert not (q(1) + q(-1)).is_unit()
    assert not ZERO.is_unit()
    u = LaurentPoly.monomial(-1, e_q=2, e_s=1)
    assert u * u.unit_inverse() == ONE


def test_power_and_unit_inverse():
    p = q(1) + q(-1)
    assert p ** 0 == ONE
    assert p ** 2 == p * p
    assert q(3) ** -2 == q(-6)
    with pytest.raises(ArithmeticError):
        (q(1) + ONE) ** -1


def test_exact_division():
    a = q(1) + q(-1)
    b = quantum_int(3)
    assert (a * b).exact_div(a) == b
    assert (a * b).exact_div(b) == a
    assert ZERO.exact_div(a) == ZERO
    with pytest.raises(ArithmeticError):
        (a + ONE).exact_div(a)
    with pytest.raises(ZeroDivisionError):
        a.exact_div(ZERO)


def test_exact_division_random_products():
    rng = random.Random(7)
    checked = 0
    while checked < 30:
        a, b = random_poly(rng), random_poly(rng)
        if not a or not b:
            continue
        assert (a * b).exact_div(a) == b
        checked += 1


# ----------------------------------------------------------------------
# quantum combinatorics


def test_quantum_int_small_values():
    assert quantum_int(1) == ONE
    assert quantum_int(2) == q(1) + q(-1)
    # expansion of the degree-4 telescoping quotient, frozen from a one-off
    # long-division check
    assert quantum_int(4) == q(3) + q(1) + q(-1) + q(-3)


def test_quantum_int_edge_cases():
    assert quantum_int(0) == ZERO
    with pytest.raises(ValueError):
        quantum_int(-1)


def test_quantum_factorial_values():
    assert quantum_factorial(0) == ONE
    assert quantum_factorial(2) == q(1) + q(-1)
    # (q + q^-1)(q^2 + 1 + q^-2), expanded and frozen
    assert quantum_factorial(3) == LaurentPoly(
        {(3, 0, 0): 1, (1, 0, 0): 2, (-1, 0, 0): 2, (-3, 0, 0): 1}
    )


def test_quantum_binomial_values():
    for k in range(7):
        assert quantum_binomial(k, 0) == ONE
    assert quantum_binomial(2, 1) == quantum_int(2)
    # [4]! / ([2]! [2]!), exact division done in a one-off check
    assert quantum_binomial(4, 2) == LaurentPoly(
        {(4, 0, 0): 1, (2, 0, 0): 1, (0, 0, 0): 2, (-2, 0, 0): 1, (-4, 0, 0): 1}
    )


def test_quantum_binomial_rejects_bad_arguments():
    with pytest.raises(ValueError):
        quantum_binomial(2, 3)
    with pytest.raises(ValueError):
        quantum_binomial(-1, 0)


def test_quantum_binomial_symmetry_and_factorial_identity():
    for k in range(9):
        for l in range(k + 1):
            b = quantum_binomial(k, l)
            assert b == quantum_binomial(k, k - l)
            assert b * quantum_factorial(l) * quantum_factorial(k - l) == quantum_factorial(k)


# ----------------------------------------------------------------------
# specializations


def test_specialization_examples():
    s_times_qinv = LaurentPoly.monomial(1, e_q=-1, e_s=1)
    assert specialize(s_times_qinv, aug(2)) == q(1)
    assert specialize(LaurentPoly.t_power(2), SET_T) == q(-4)
    assert specialize(q(1) + q(-1), CLASSICAL) == LaurentPoly.integer(2)


def test_specializations_are_ring_morphisms():
    rng = random.Random(99)
    morphisms = [aug(0), aug(1), aug(3), SET_T]
    for phi in morphisms:
        for _ in range(25):
            a, b = random_poly(rng), random_poly(rng)
            assert phi.apply(a + b) == phi.apply(a) + phi.apply(b)
            assert phi.apply(a * b) == phi.apply(a) * phi.apply(b)
    for _ in range(25):
        a, b = random_poly(rng, with_t=False), random_poly(rng, with_t=False)
        assert CLASSICAL.apply(a + b) == CLASSICAL.apply(a) + CLASSICAL.apply(b)
        assert CLASSICAL.apply(a * b) == CLASSICAL.apply(a) * CLASSICAL.apply(b)


def test_aug_fixes_s_free_polynomials():
    rng = random.Random(5)
    for _ in range(20):
        p = random_poly(rng, with_s=False)
        assert aug(4).apply(p) == p


def test_classical_counts_quantum_integers():
    for i in range(11):
        assert CLASSICAL.apply(quantum_int(i)).as_int() == i


def test_classical_rejects_t():
    with pytest.raises(ValueError):
        CLASSICAL.apply(LaurentPoly.t_power(1))


def test_set_t_examples():
    # t -> -q^{-2}: odd powers flip sign
    assert SET_T.apply(LaurentPoly.t_power(1)) == LaurentPoly.monomial(-1, e_q=-2)
    assert SET_T.apply(LaurentPoly.t_power(-3)) == LaurentPoly.monomial(-1, e_q=6)


def test_aug_rejects_negative_parameter():
    with pytest.raises(ValueError):
        aug(-1)


# ----------------------------------------------------------------------
# canonical text form


def test_render_examples():
    assert ZERO.render() == "0"
    anchor = q(-1) + q(-3) + q(-5) - q(-9)
    assert anchor.render() == "q^-1 + q^-3 + q^-5 - q^-9"
    mixed = q(3) + LaurentPoly.monomial(1, e_q=-1, e_s=2) - q(-9)
    # descending lex on (e_q, e_s, e_t)
    assert mixed.render() == "q^3 + s^2*q^-1 - q^-9"
    assert LaurentPoly.monomial(-3, e_q=2).render() == "-3*q^2"
    assert LaurentPoly.integer(5).render() == "5"


def test_render_parse_round_trip_random():
    rng = random.Random(2718)
    for _ in range(60):
        p = random_poly(rng)
        assert LaurentPoly.parse(p.render()) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        LaurentPoly.parse("q^")
    with pytest.raises(ValueError):
        LaurentPoly.parse("x + 1")
    with pytest.raises(ValueError):
        LaurentPoly.parse("")


def test_as_int():
    assert ZERO.as_int() == 0
    assert LaurentPoly.integer(-7).as_int() == -7
    with pytest.raises(ArithmeticError):
        q(1).as_int()
