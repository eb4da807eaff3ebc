"""Integral closures of powers and rational powers of monomial ideals.

Membership rests on the LP criterion ``x^a in I_u  <=>  nu*_a(I) >= u``.
Whole ideals are found by scanning the box ``a_i <= ceil(u * max_j M_ij)``,
which contains every minimal generator of ``I_u``.  Inside the box, ``nu*_a``
is evaluated as ``min_z a . z`` over the dual vertices in exact integer
arithmetic (vertices are scaled by their common denominator).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, UndefinedOperation
from .lp import dual_vertices, nu_star, scaled_vertex_matrix, vertex_denominator
from .monomial import ExponentMatrix, MonomialIdeal


@dataclass(frozen=True)
class RationalPowerIdeal:
    base: MonomialIdeal
    exponent: Fraction
    result: MonomialIdeal


@dataclass(frozen=True)
class IntegralityCertificate:
    integral: bool
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self):
        return self.integral


def as_fraction(u) -> Fraction:
    if isinstance(u, str):
        return Fraction(u.strip())
    return Fraction(u)


def exponent_matrix(I: MonomialIdeal) -> ExponentMatrix:
    return ExponentMatrix.from_ideal(I)


def nu_star_value(I: MonomialIdeal, a: Sequence[int]) -> Fraction:
    return nu_star(exponent_matrix(I), a).value


def monomial_in_rational_power(I: MonomialIdeal, a: Sequence[int], u) -> bool:
    u = as_fraction(u)
    if u < 0:
        raise ValueError(f"rational power exponent must be nonnegative, got {u}")
    if len(a) != I.n:
        raise DimensionMismatch(f"exponent of length {len(a)} in a ring with {I.n} variables")
    if u == 0 or I.is_unit:
        return True
    if I.is_zero:
        return False
    return nu_star_value(I, a) >= u


def search_box(I: MonomialIdeal, u: Fraction, pad: int = 0) -> tuple[int, ...]:
    """Per-variable upper bound ``ceil(u * max_j M_ij) + pad`` on generator exponents."""
    return tuple(math.ceil(u * c) + pad for c in exponent_matrix(I).column_max())


def _box_points(bounds: Sequence[int]) -> np.ndarray:
    grids = np.indices(tuple(b + 1 for b in bounds), dtype=np.int64)
    return grids.reshape(len(bounds), -1).T


def _minimal_in_box(mask: np.ndarray) -> np.ndarray:
    """Points of an up-closed boolean box array with no lower neighbour inside it."""
    minimal = mask.copy()
    for axis in range(mask.ndim):
        below = np.zeros_like(mask)
        src = [slice(None)] * mask.ndim
        dst = [slice(None)] * mask.ndim
        src[axis] = slice(None, -1)
        dst[axis] = slice(1, None)
        below[tuple(dst)] = mask[tuple(src)]
        minimal &= ~below
    return np.argwhere(minimal)


def rational_power(I: MonomialIdeal, u, *, pad: int = 0) -> RationalPowerIdeal:
    """The rational power ``I_u = {x^a : nu*_a(I) >= u}``."""
    u = as_fraction(u)
    if u < 0:
        raise ValueError(f"rational power exponent must be nonnegative, got {u}")
    ctx = I.context
    if u == 0 or I.is_unit:
        return RationalPowerIdeal(I, u, MonomialIdeal.unit(ctx))
    if I.is_zero:
        return RationalPowerIdeal(I, u, MonomialIdeal.zero(ctx))
    V, D = scaled_vertex_matrix(dual_vertices(exponent_matrix(I)))
    bounds = search_box(I, u, pad)
    points = _box_points(bounds)
    values = (points @ V.T).min(axis=1)
    # nu* = values / D >= p / q
    mask = values * u.denominator >= u.numerator * D
    gens = _minimal_in_box(mask.reshape(tuple(b + 1 for b in bounds)))
    result = MonomialIdeal(ctx, tuple(sorted((tuple(int(x) for x in g) for g in gens), reverse=True)))
    return RationalPowerIdeal(I, u, result)


def integral_closure_power(I: MonomialIdeal, k: int, *, pad: int = 0) -> MonomialIdeal:
    """Minimal generators of the integral closure of ``I^k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return rational_power(I, k, pad=pad).result


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return integral_closure_power(I, 1)


def jumping_denominator(I: MonomialIdeal) -> int:
    """An integer e with ``nu*_a(I) in (1/e) Z`` for all integral a, so ``I_u = I_{ceil(ue)/e}``."""
    if I.is_zero:
        raise UndefinedOperation("jumping denominator of the zero ideal is undefined")
    if I.is_unit:
        return 1
    return vertex_denominator(dual_vertices(exponent_matrix(I)))


def is_nu_star_always_integral(I: MonomialIdeal) -> IntegralityCertificate:
    """Whether ``nu*_a(I)`` is an integer for every integral ``a >= 0``.

    Decided by integrality of the dual vertices; on failure the first
    non-integral vertex is returned as the witness.
    """
    if I.is_zero:
        raise UndefinedOperation("integrality test of the zero ideal is undefined")
    if I.is_unit:
        return IntegralityCertificate(True)
    for z in dual_vertices(exponent_matrix(I)):
        if any(x.denominator != 1 for x in z):
            return IntegralityCertificate(False, z)
    return IntegralityCertificate(True)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    if I.is_zero or I.is_unit:
        return True
    return integral_closure(I).generators == I.generators
