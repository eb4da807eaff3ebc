import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratpow.closure import (
    integral_closure_power,
    is_integrally_closed,
    is_nu_star_always_integral,
    jumping_denominator,
    monomial_in_rational_power,
    rational_power,
    search_box,
)
from ratpow.errors import UndefinedOperation
from ratpow.monomial import MonomialIdeal, VariableContext, contains, ideal_power, ideal_product, minimal_elements, monomial_in

from .conftest import ideal, ideals

F = Fraction
I_X2 = ideal("x", (2,))
J_EX = ideal("y z", (2, 0), (1, 1))


def in_closure_by_definition(I, a, k, r_max=4):
    """x^a in closure(I^k) witnessed by x^(ra) in I^(kr) for some r <= r_max."""
    return any(monomial_in(ideal_power(I, k * r), tuple(r * x for x in a)) for r in range(1, r_max + 1))


class TestMembership:
    def test_examples(self):
        assert monomial_in_rational_power(I_X2, (1,), F(1, 2))
        assert monomial_in_rational_power(J_EX, (3, 0), F(3, 2))
        assert not monomial_in_rational_power(J_EX, (0, 0), F(1, 3))
        assert monomial_in_rational_power(J_EX, (0, 0), 0)

    def test_zero_ideal(self):
        Z = MonomialIdeal.zero(VariableContext.of("x"))
        assert not monomial_in_rational_power(Z, (5,), F(1, 2))

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            monomial_in_rational_power(I_X2, (1,), -1)


class TestClosurePower:
    def test_examples(self):
        assert integral_closure_power(ideal("x y", (2, 0), (0, 2)), 1).generators == ((2, 0), (1, 1), (0, 2))
        assert integral_closure_power(I_X2, 3).generators == ((6,),)

    def test_two_generator_example_against_vertex_formula(self):
        # nu*_(a1, a2) = min((a1 + a2) / 2, a1) for (y^2, yz)
        box = [a for a in itertools.product(range(7), repeat=2) if min(F(a[0] + a[1], 2), a[0]) >= 2]
        expected = minimal_elements(box)
        assert expected == ((4, 0), (3, 1), (2, 2))
        assert integral_closure_power(J_EX, 2).generators == expected

    def test_conventions(self):
        assert integral_closure_power(J_EX, 0).is_unit
        assert integral_closure_power(MonomialIdeal.zero(J_EX.context), 2).is_zero
        assert integral_closure_power(MonomialIdeal.unit(J_EX.context), 2).is_unit

    @pytest.mark.parametrize("I", [J_EX, ideal("x y", (2, 0), (0, 3)), ideal("x y z", (1, 1, 0), (0, 2, 1)), I_X2])
    @pytest.mark.parametrize("k", [1, 2])
    def test_against_definition(self, I, k):
        C = integral_closure_power(I, k)
        for g in C.generators:
            assert in_closure_by_definition(I, g, k)
        for a in itertools.product(*(range(b + 1) for b in search_box(I, F(k)))):
            if not monomial_in(C, a):
                assert not in_closure_by_definition(I, a, k)


class TestRationalPower:
    def test_examples(self):
        assert rational_power(I_X2, F(1, 2)).result.generators == ((1,),)
        assert rational_power(J_EX, F(3, 2)).result.generators == ((3, 0), (2, 1))
        assert rational_power(J_EX, 0).result.is_unit
        with pytest.raises(ValueError):
            rational_power(J_EX, F(-1, 2))

    def test_string_exponent(self):
        assert rational_power(J_EX, "3/2").exponent == F(3, 2)


class TestJumpingDenominator:
    def test_examples(self):
        assert jumping_denominator(I_X2) == 2
        assert jumping_denominator(J_EX) == 2
        assert jumping_denominator(ideal("x y z", (1, 1, 0), (0, 1, 1))) == 1
        with pytest.raises(UndefinedOperation):
            jumping_denominator(MonomialIdeal.zero(VariableContext.of("x")))

    def test_integrality(self):
        c = is_nu_star_always_integral(I_X2)
        assert not c and c.witness == (F(1, 2),)
        assert is_nu_star_always_integral(ideal("x y z", (1, 1, 0), (0, 1, 1)))
        c = is_nu_star_always_integral(ideal("x y", (2, 0), (0, 2)))
        assert not c and c.witness == (F(1, 2), F(1, 2))

    def test_integrally_closed(self):
        assert not is_integrally_closed(ideal("x y", (2, 0), (0, 2)))
        assert is_integrally_closed(ideal("x", (1,)))
        assert is_integrally_closed(ideal("x y", (2, 0), (1, 1), (0, 2)))


@settings(max_examples=30, deadline=None)
@given(ideals(max_exp=3))
def test_closure_invariants(I):
    c = [integral_closure_power(I, k) for k in range(5)]
    assert integral_closure_power(c[1], 1) == c[1]
    for k in range(1, 4):
        assert contains(c[k], c[k + 1])
    for k, l in itertools.product(range(1, 3), repeat=2):
        assert contains(c[k + l], ideal_product(c[k], c[l]))
    # enlarged box gives the same generators
    for k in (1, 2, 3):
        assert integral_closure_power(I, k, pad=2) == c[k]


@settings(max_examples=25, deadline=None)
@given(ideals(max_exp=3))
def test_rational_power_staircase(I):
    e = jumping_denominator(I)
    grid = [F(t, 3 * e) for t in range(9 * e + 1)]
    previous = None
    for u in grid:
        R = rational_power(I, u).result
        snapped = F(-(-u.numerator * e // u.denominator), e)  # ceil(u e) / e
        assert R == rational_power(I, snapped).result
        if previous is not None:
            assert contains(previous, R)
        previous = R


@settings(max_examples=25, deadline=None)
@given(ideals(max_exp=2), st.sampled_from([F(1, 2), F(2, 3), F(1), F(3, 2), F(2)]))
def test_box_scan_agrees_with_simplex(I, u):
    R = rational_power(I, u).result
    for a in itertools.product(*(range(b + 2) for b in search_box(I, u))):
        assert monomial_in(R, a) == monomial_in_rational_power(I, a, u)


@settings(max_examples=20, deadline=None)
@given(ideals(max_exp=2), st.integers(1, 2))
def test_power_certificate(I, k):
    e = jumping_denominator(I)
    big = integral_closure_power(I, k * e)
    for g in integral_closure_power(I, k).generators:
        assert monomial_in(big, tuple(e * x for x in g))
