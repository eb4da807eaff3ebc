"""Exact rational linear programming for exponent matrices.

For an exponent matrix ``M`` (n x m) and ``a`` in N^n the primal problem is

    maximize 1 . y   subject to  M y <= a,  y >= 0

and its dual is

    minimize a . z   subject to  M^T z >= 1,  z >= 0.

Both have the same optimum, written ``nu*_a``.  Three independent routes are
provided: a Bland-rule simplex (:func:`nu_star`), the minimum of ``a . z``
over the vertices of the dual polyhedron (:func:`dual_vertices`), and a
Fourier-Motzkin projection used as a membership oracle
(:func:`fm_membership_oracle`).  No floating point is used.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidMatrix
from .linalg import solve_square
from .monomial import ExponentMatrix

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


def _check_matrix(M: ExponentMatrix) -> None:
    for j, col in enumerate(M.columns):
        if not any(col):
            raise InvalidMatrix(f"column {j} of the exponent matrix is zero")


def _check_point(M: ExponentMatrix, a: Sequence[int]) -> None:
    if len(a) != M.n:
        raise DimensionMismatch(f"point of length {len(a)} for a matrix with {M.n} rows")
    if any(x < 0 for x in a):
        raise ValueError("the right-hand side a must be nonnegative")


def _dump(tableau, rhs, cost, basis):
    for row, b, v in zip(tableau, rhs, basis):
        log.debug("  x%-3d | %s | %s", v, " ".join(f"{str(x):>6}" for x in row), b)
    log.debug("  obj  | %s |", " ".join(f"{str(x):>6}" for x in cost))


def nu_star(M: ExponentMatrix, a: Sequence[int]) -> LPSolution:
    """Exact optimum of the primal/dual pair with certifying primal and dual points."""
    _check_matrix(M)
    _check_point(M, a)
    n, m = M.n, M.m
    if m == 0:
        # no generators: primal is the empty maximization, dual has no constraints
        return LPSolution(Fraction(0), (), (Fraction(0),) * n)
    # columns 0..m-1 are y, m..m+n-1 are the slacks
    tableau = [[Fraction(M.columns[j][i]) for j in range(m)] + [Fraction(int(i == k)) for k in range(n)]
               for i in range(n)]
    rhs = [Fraction(x) for x in a]
    basis = list(range(m, m + n))
    cost = [Fraction(1)] * m + [Fraction(0)] * n  # reduced costs
    value = Fraction(0)
    while True:
        if log.isEnabledFor(logging.DEBUG):
            _dump(tableau, rhs, cost, basis)
        entering = next((j for j in range(m + n) if cost[j] > 0), None)
        if entering is None:
            break
        best = None
        for i in range(n):
            if tableau[i][entering] > 0:
                key = (rhs[i] / tableau[i][entering], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # pragma: no cover - excluded by the nonzero-column check
            raise InvalidMatrix("unbounded primal problem")
        r = best[1]
        piv = tableau[r][entering]
        tableau[r] = [x / piv for x in tableau[r]]
        rhs[r] /= piv
        for i in range(n):
            f = tableau[i][entering]
            if i != r and f != 0:
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[r])]
                rhs[i] -= f * rhs[r]
        f = cost[entering]
        cost = [x - f * y for x, y in zip(cost, tableau[r])]
        value += f * rhs[r]
        basis[r] = entering
    y = [Fraction(0)] * m
    for i, v in enumerate(basis):
        if v < m:
            y[v] = rhs[i]
    z = tuple(-cost[m + i] for i in range(n))
    return LPSolution(value, tuple(y), z)


def dual_vertices(M: ExponentMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices of ``{z >= 0 : M^T z >= 1}``, sorted.

    Exhaustive over n-subsets of the n + m constraints: each subset is solved
    as an equality system and feasible solutions are kept.
    """
    _check_matrix(M)
    return _dual_vertices(M.columns, M.n)


@lru_cache(maxsize=512)
def _dual_vertices(columns, n):
    # constraint rows as (normal, rhs): g . z >= 1 then z_i >= 0
    constraints = [(tuple(c), 1) for c in columns]
    constraints += [(tuple(int(i == k) for k in range(n)), 0) for i in range(n)]
    found = set()
    for subset in combinations(range(len(constraints)), n):
        A = [constraints[s][0] for s in subset]
        b = [constraints[s][1] for s in subset]
        z = solve_square(A, b)
        if z is None or any(x < 0 for x in z):
            continue
        if all(sum(c_i * z_i for c_i, z_i in zip(c, z)) >= 1 for c in columns):
            found.add(tuple(z))
    return tuple(sorted(found))


def vertex_denominator(vertices) -> int:
    """Least common multiple of the denominators of all vertex coordinates."""
    return lcm(1, *(x.denominator for v in vertices for x in v))


def envelope_value(vertices, a: Sequence[int]) -> Fraction:
    """``min_z a . z`` over the given dual vertices."""
    return min(sum((Fraction(x) * ai for x, ai in zip(z, a)), Fraction(0)) for z in vertices)


def scaled_vertex_matrix(vertices) -> tuple[np.ndarray, int]:
    """Integer matrix ``D * V`` (one vertex per row) and the common denominator ``D``."""
    D = vertex_denominator(vertices)
    V = np.array([[int(x * D) for x in v] for v in vertices], dtype=np.int64)
    return V, D


# -- Fourier-Motzkin oracle ------------------------------------------------------
#
# Rows are integer vectors r over (y_1..y_m, a_1..a_n, t) encoding
#     r . (y, a, t) <= 0.
# The y variables are eliminated once per matrix; what remains is a finite
# list of inequalities in (a, t) that decides membership for every a and t.

def _normalize(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    return tuple(x // g for x in row) if g > 1 else tuple(row)


@lru_cache(maxsize=512)
def _fm_projection(columns, n):
    m = len(columns)
    width = m + n + 1
    rows = set()
    for i in range(n):
        # sum_j M_ij y_j - a_i <= 0
        rows.add(tuple([columns[j][i] for j in range(m)] + [-int(k == i) for k in range(n)] + [0]))
    for j in range(m):
        rows.add(tuple(-int(k == j) for k in range(m)) + (0,) * (n + 1))
    # t - sum_j y_j <= 0
    rows.add(tuple([-1] * m + [0] * n + [1]))
    for var in range(m):
        pos = [r for r in rows if r[var] > 0]
        neg = [r for r in rows if r[var] < 0]
        new = {r for r in rows if r[var] == 0}
        for p in pos:
            for q in neg:
                cp, cq = p[var], -q[var]
                combined = tuple(cq * x + cp * y for x, y in zip(p, q))
                if any(combined):
                    new.add(_normalize(combined))
        rows = new
    # y-free rows: d . a + e t <= 0
    return tuple(sorted(tuple(r[m:width]) for r in rows))


def fm_membership_oracle(M: ExponentMatrix, a: Sequence[int], threshold) -> bool:
    """Is ``{M y <= a, y >= 0, 1 . y >= threshold}`` nonempty?

    Decided by Fourier-Motzkin elimination of y; shares no code with the
    simplex or vertex routes.
    """
    _check_matrix(M)
    _check_point(M, a)
    t = Fraction(threshold)
    if M.m == 0:
        return t <= 0
    for row in _fm_projection(M.columns, M.n):
        *d, e = row
        if sum(di * ai for di, ai in zip(d, a)) + e * t > 0:
            return False
    return True
