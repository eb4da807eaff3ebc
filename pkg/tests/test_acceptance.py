"""Acceptance criteria; the terminal summary prints one PASS/FAIL line per criterion."""
import itertools
import random
import time
from fractions import Fraction

import pytest

from ratpow.closure import (
    integral_closure_power,
    is_nu_star_always_integral,
    jumping_denominator,
    rational_power,
    search_box,
)
from ratpow.expansion import verify_integer_expansion, verify_rational_expansion
from ratpow.homology import (
    betti_table,
    check_depth_reg_bounds,
    check_tor_vanishing_certificates,
    depth_and_reg,
    verify_depth_reg_theorem,
)
from ratpow.lp import fm_membership_oracle, nu_star
from ratpow.monomial import ExponentMatrix, VariableContext, embed, external_sum, ideal_product, ideal_sum, monomial_in
from ratpow.textio import parse_monomial

from .conftest import ideal, random_ideal

F = Fraction
XYZ = ("x", "y", "z")
UV = ("u", "v")
I_EX = ideal("x", (2,))
J_EX = ideal("y z", (2, 0), (1, 1))
EDGE = ideal("x y z", (1, 1, 0), (0, 1, 1))
CTX = VariableContext.of("x y z")

# every random ideal used below, for the Betti invariants of criterion 9
SUITE = []


def monos(*texts):
    return {parse_monomial(t, CTX) for t in texts}


def rnd_ideal(rng, names, **kw):
    I = random_ideal(rng, names, **kw)
    SUITE.append(I)
    return I


@pytest.mark.acceptance(1, "worked example: closure of (I+J)^2, expansion, denominators")
def test_criterion_1_worked_example():
    start = time.perf_counter()
    rep = verify_integer_expansion(I_EX, J_EX, 2)
    assert set(rep.left.generators) == monos(
        "y^2z^2", "y^3z", "xy^2z", "x^2yz", "y^4", "xy^3", "x^2y^2", "x^3y", "x^4")
    assert set(rep.right.generators) == monos("x^4", "y^2z^2", "y^3z", "y^4", "x^2yz", "x^2y^2")
    assert jumping_denominator(I_EX) == jumping_denominator(J_EX) == 2

    S, _ = external_sum(I_EX, J_EX)
    ctx = S.context

    def prod(u, w):
        return ideal_product(embed(rational_power(I_EX, u).result, ctx, 0),
                             embed(rational_power(J_EX, w).result, ctx, 1))

    for g in monos("xy^3", "xy^2z"):
        assert monomial_in(prod(F(1, 2), F(3, 2)), g)
    assert monomial_in(prod(F(3, 2), F(1, 2)), parse_monomial("x^3y", CTX))
    assert time.perf_counter() - start < 5


@pytest.mark.acceptance(2, "closure of a sum differs from the sum of closures")
def test_criterion_2_intro_example():
    I, J = ideal("x", (2,)), ideal("y", (2,))
    S, _ = external_sum(I, J)
    assert monomial_in(integral_closure_power(S, 1), (1, 1))
    assert not monomial_in(S, (1, 1))
    ctx = S.context
    sum_of_closures = ideal_sum(embed(integral_closure_power(I, 1), ctx, 0), embed(integral_closure_power(J, 1), ctx, 1))
    assert not monomial_in(sum_of_closures, (1, 1))


@pytest.mark.acceptance(3, "rational expansion is exact on 20 random pairs")
def test_criterion_3_rational_expansion():
    rng = random.Random(2023)
    start = time.perf_counter()
    for _ in range(20):
        I, J = rnd_ideal(rng, XYZ), rnd_ideal(rng, UV)
        for u in (F(1, 2), F(1), F(3, 2), F(2), F(7, 3)):
            rep = verify_rational_expansion(I, J, u)
            assert rep.equal, (I, J, u, rep.missing)
    assert time.perf_counter() - start < 600


@pytest.mark.acceptance(4, "integer expansion: equal under integrality, golden failure otherwise")
def test_criterion_4_integer_expansion():
    rng = random.Random(4)
    for _ in range(5):
        J = rnd_ideal(rng, UV)
        for k in (1, 2, 3):
            rep = verify_integer_expansion(EDGE, J, k)
            assert rep.theorem_applies and rep.equal, (J, k)
    rep = verify_integer_expansion(I_EX, J_EX, 2)
    assert not rep.equal and set(rep.missing) == monos("xy^3", "xy^2z", "x^3y")


@pytest.mark.acceptance(5, "integrality criterion agrees with brute-force LP values")
def test_criterion_5_integrality_cross_validation():
    rng = random.Random(5)
    for _ in range(30):
        I = rnd_ideal(rng, XYZ)
        M = ExponentMatrix.from_ideal(I)
        B = 3 * max(max(g) for g in I.generators)
        brute = all(nu_star(M, a).value.denominator == 1 for a in itertools.product(range(B + 1), repeat=3))
        assert bool(is_nu_star_always_integral(I)) == brute, I


@pytest.mark.acceptance(6, "closure generators match the Fourier-Motzkin oracle on the search box")
def test_criterion_6_oracle_equivalence():
    rng = random.Random(6)
    for _ in range(10):
        I = rnd_ideal(rng, XYZ)
        M = ExponentMatrix.from_ideal(I)
        for k in (1, 2, 3):
            C = integral_closure_power(I, k)
            box = search_box(I, F(k))
            for a in itertools.product(*(range(b + 1) for b in box)):
                assert monomial_in(C, a) == fm_membership_oracle(M, a, k), (I, k, a)


@pytest.mark.acceptance(7, "Tor-vanishing containment certificates on 20 random ideals")
def test_criterion_7_tor_certificates():
    rng = random.Random(7)
    for _ in range(20):
        I = rnd_ideal(rng, XYZ)
        cert = check_tor_vanishing_certificates(I, 3, 2)
        assert cert.all_true, (I, cert.to_dict())
        assert set(cert.delta) == set(cert.maximal) == {2, 3}
        assert len(cert.corollary) == 6


@pytest.mark.acceptance(8, "depth and regularity of closures of powers of I + J")
def test_criterion_8_depth_reg():
    start = time.perf_counter()
    rep = verify_depth_reg_theorem(EDGE, ideal("u v", (2, 0), (1, 1)), 2)
    assert [r.k for r in rep.rows] == [1, 2] and rep.all_equal
    rng = random.Random(8)
    for _ in range(5):
        I, J = rnd_ideal(rng, XYZ, max_exp=2), rnd_ideal(rng, UV, max_exp=2)
        bounds = check_depth_reg_bounds(I, J, 2)
        assert all(r.bounds_hold for r in bounds.rows), (I, J, bounds.to_dict())
    assert time.perf_counter() - start < 900


@pytest.mark.acceptance(9, "Betti tables by hand and Auslander-Buchsbaum on the random suite")
def test_criterion_9_betti_sanity():
    assert betti_table(ideal("x y", (2, 0), (1, 1))).as_dict() == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    assert betti_table(EDGE).as_dict() == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    rng = random.Random(9)
    pool = list(SUITE) or [random_ideal(rng, XYZ) for _ in range(20)]
    assert len(pool) >= 20
    for I in pool:
        inv = depth_and_reg(I)
        table = inv.betti.as_dict()
        assert 0 <= inv.depth <= I.n and inv.depth + inv.projective_dimension == I.n
        assert table[0, 0] == 1 and all(i > 0 or j == 0 for i, j in table)
        by_degree = {}
        for g in I.generators:
            by_degree[sum(g)] = by_degree.get(sum(g), 0) + 1
        assert {j: v for (i, j), v in table.items() if i == 1} == by_degree
