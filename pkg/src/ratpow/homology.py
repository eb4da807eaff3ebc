"""Graded Betti numbers, depth and regularity of monomial quotients.

Betti numbers are computed over Q from the upper Koszul simplicial complexes

    K^a(I) = {F subset of supp(a) : x^(a - F) in I},

using ``beta_{i,a}(I) = dim H~_{i-1}(K^a(I))``.  Only multidegrees in the lcm
lattice of the minimal generators can carry nonzero Betti numbers, so those
are the only ones examined.  Homology ranks come from fraction-free
elimination on the simplicial boundary matrices.

This module also checks the filtration identities, Betti splittings and
Tor-vanishing certificates for integral closures of powers, and compares
depth/regularity of ``S / closure((I+J)^k)`` with the min/max formulas in
terms of the two factors.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian

import numpy as np

from .closure import integral_closure_power, is_nu_star_always_integral
from .errors import HypothesisViolation, PreconditionError, UndefinedOperation
from .linalg import bareiss_rank
from .monomial import (
    MonomialIdeal,
    contains,
    delta_star,
    embed,
    external_sum,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    maximal_ideal_power_times,
    minimal_elements,
)

_CHUNK = 4096


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` keyed by (homological degree, internal degree)."""

    entries: tuple[tuple[tuple[int, int], int], ...]
    n: int
    subject: str = "S/I"

    @classmethod
    def from_dict(cls, d, n, subject="S/I") -> BettiTable:
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)), n, subject)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.as_dict().get(key, 0)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension + 1 if self.entries else 0)
        for (i, _), v in self.entries:
            out[i] += v
        return out

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j), _ in self.entries)

    def render(self) -> str:
        """Macaulay2-style grid: columns are i, rows are j - i."""
        if not self.entries:
            return "0\n"
        d = self.as_dict()
        cols = range(self.projective_dimension + 1)
        rows = range(min(j - i for i, j in d), self.regularity + 1)
        totals = self.totals()
        cells = {(r, i): str(d[i, i + r]) if (i, i + r) in d else "." for r in rows for i in cols}
        w = max([len(str(i)) for i in cols] + [len(str(t)) for t in totals] + [len(c) for c in cells.values()])
        label_w = max(len("total:"), *(len(f"{r}:") for r in rows))
        lines = [" " * label_w + " " + " ".join(f"{i:>{w}}" for i in cols),
                 f"{'total:':>{label_w}} " + " ".join(f"{t:>{w}}" for t in totals)]
        for r in rows:
            lines.append(f"{f'{r}:':>{label_w}} " + " ".join(f"{cells[r, i]:>{w}}" for i in cols))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "n": self.n,
            "entries": [{"i": i, "j": j, "beta": v} for (i, j), v in self.entries],
        }


@dataclass(frozen=True)
class InvariantReport:
    depth: int
    regularity: int
    projective_dimension: int
    betti: BettiTable

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
            "betti": self.betti.to_dict(),
        }


# -- Betti numbers ------------------------------------------------------------------

def _lcm_lattice(G: np.ndarray) -> np.ndarray:
    n = G.shape[1]
    values = [sorted({0} | set(G[:, i].tolist())) for i in range(n)]
    candidates = np.array(list(_cartesian(*values)), dtype=np.int64).reshape(-1, n)
    keep = []
    for start in range(0, len(candidates), _CHUNK):
        C = candidates[start:start + _CHUNK]
        divides = np.all(G[None, :, :] <= C[:, None, :], axis=2)
        lcms = np.where(divides[:, :, None], G[None, :, :], 0).max(axis=1)
        ok = divides.any(axis=1) & np.all(lcms == C, axis=1)
        keep.append(C[ok])
    return np.concatenate(keep) if keep else np.empty((0, n), dtype=np.int64)


def _faces(G: np.ndarray, a: np.ndarray) -> list[int]:
    """Faces of K^a as bitmasks over supp(a)-indices (bit p = p-th support variable)."""
    supp = np.flatnonzero(a)
    k = len(supp)
    masks = np.arange(1 << k)
    shifts = np.zeros((1 << k, len(a)), dtype=np.int64)
    for p, var in enumerate(supp):
        shifts[:, var] = (masks >> p) & 1
    pts = a[None, :] - shifts
    member = np.any(np.all(G[None, :, :] <= pts[:, None, :], axis=2), axis=1)
    return masks[member].tolist()


def _reduced_homology(faces: list[int]) -> dict[int, int]:
    """dim H~_d for each d, keyed by face size s = d + 1."""
    face_set = set(faces)
    verts = {b for f in faces for b in range(f.bit_length()) if f >> b & 1}
    # a cone over any vertex is acyclic
    for v in verts:
        if all((f | (1 << v)) in face_set for f in faces):
            return {}
    by_size = defaultdict(list)
    for f in faces:
        by_size[bin(f).count("1")].append(f)
    top = max(by_size)
    ranks = {0: 0, top + 1: 0}
    for s in range(1, top + 1):
        index = {f: r for r, f in enumerate(by_size[s - 1])}
        mat = [[0] * len(by_size[s]) for _ in by_size[s - 1]]
        for c, f in enumerate(by_size[s]):
            sign, pos = 1, 0
            for b in range(f.bit_length()):
                if f >> b & 1:
                    mat[index[f & ~(1 << b)]][c] = sign if pos % 2 == 0 else -sign
                    pos += 1
        ranks[s] = bareiss_rank(mat) if mat and mat[0] else 0
    out = {}
    for s in range(0, top + 1):
        h = len(by_size[s]) - ranks[s] - ranks[s + 1]
        if h:
            out[s] = h
    return out


def multigraded_betti(I: MonomialIdeal) -> dict[tuple[int, ...], dict[int, int]]:
    """``beta_{i,a}(I)`` of the ideal (not the quotient) for every multidegree a."""
    if I.is_zero:
        return {}
    G = I.array()
    out = {}
    for a in _lcm_lattice(G):
        h = _reduced_homology(_faces(G, a))
        if h:
            out[tuple(int(x) for x in a)] = h
    return out


@lru_cache(maxsize=256)
def _ideal_graded(I: MonomialIdeal) -> tuple:
    table = defaultdict(int)
    for a, h in multigraded_betti(I).items():
        for i, v in h.items():
            table[i, sum(a)] += v
    return tuple(sorted(table.items()))


def ideal_betti_table(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of I as an S-module."""
    return BettiTable.from_dict(dict(_ideal_graded(I)), I.n, "I")


def betti_table(I: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of S/I.

    Conventions: S/0 = S has only ``beta_{0,0} = 1``; S/S = 0 has the empty table.
    """
    if I.is_unit:
        return BettiTable((), I.n)
    d = {(0, 0): 1}
    for (i, j), v in _ideal_graded(I):
        d[i + 1, j] = v
    return BettiTable.from_dict(d, I.n)


def depth_and_reg(I: MonomialIdeal) -> InvariantReport:
    if I.is_unit:
        raise UndefinedOperation("S/S is the zero module; depth and regularity are undefined")
    table = betti_table(I)
    pd = table.projective_dimension
    return InvariantReport(I.n - pd, table.regularity, pd, table)


# -- filtrations and splittings ---------------------------------------------------------

def _closures(I: MonomialIdeal, kmax: int) -> list[MonomialIdeal]:
    return [integral_closure_power(I, k) for k in range(kmax + 1)]


def partial_sum_ideal(I: MonomialIdeal, J: MonomialIdeal, k: int, t: int) -> MonomialIdeal:
    """``P_{k,t} = sum_{l=0..t} closure(I^(k-l)) * closure(J^l)`` in the juxtaposed ring."""
    if not 0 <= t <= k:
        raise ValueError(f"t={t} outside [0, {k}]")
    ctx = I.context.juxtapose(J.context)
    gens = []
    for l in range(t + 1):
        term = ideal_product(embed(integral_closure_power(I, k - l), ctx, 0),
                             embed(integral_closure_power(J, l), ctx, I.n))
        gens.extend(term.generators)
    return MonomialIdeal(ctx, minimal_elements(gens))


@dataclass(frozen=True)
class FiltrationReport:
    k: int
    sum_identity: dict = field(default_factory=dict)           # t -> (a) holds
    intersection_identity: dict = field(default_factory=dict)  # t -> (b) holds

    @property
    def holds(self) -> bool:
        return all(self.sum_identity.values()) and all(self.intersection_identity.values())

    def __bool__(self):
        return self.holds


def verify_filtration_identities(I: MonomialIdeal, J: MonomialIdeal, k: int) -> FiltrationReport:
    """Check ``P_{k,t} = P_{k,t-1} + closure(I^(k-t)) closure(J^t)`` and
    ``P_{k,t-1} ∩ closure(I^(k-t)) closure(J^t) = closure(I^(k-t+1)) closure(J^t)``
    for ``1 <= t <= k`` by direct computation."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ctx = I.context.juxtapose(J.context)
    cI, cJ = _closures(I, k), _closures(J, k)
    term = lambda p, q: ideal_product(embed(cI[p], ctx, 0), embed(cJ[q], ctx, I.n))  # noqa: E731
    sums, inters = {}, {}
    for t in range(1, k + 1):
        prev, cur = partial_sum_ideal(I, J, k, t - 1), partial_sum_ideal(I, J, k, t)
        T = term(k - t, t)
        sums[t] = cur.generators == ideal_sum(prev, T).generators
        inters[t] = ideal_intersection(prev, T).generators == term(k - t + 1, t).generators
    return FiltrationReport(k, sums, inters)


def is_betti_splitting(P: MonomialIdeal, I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Whether ``beta_{i,j}(P) = beta_{i,j}(I) + beta_{i,j}(J) + beta_{i-1,j}(I ∩ J)`` for all i, j."""
    if ideal_sum(I, J).generators != P.generators:
        raise PreconditionError("P is not I + J")
    bP = ideal_betti_table(P).as_dict()
    bI = ideal_betti_table(I).as_dict()
    bJ = ideal_betti_table(J).as_dict()
    bK = ideal_betti_table(ideal_intersection(I, J)).as_dict()
    keys = set(bP) | set(bI) | set(bJ) | {(i + 1, j) for i, j in bK}
    return all(
        bP.get((i, j), 0) == bI.get((i, j), 0) + bJ.get((i, j), 0) + bK.get((i - 1, j), 0)
        for i, j in keys
    )


@dataclass(frozen=True)
class TorCertificates:
    """Containment certificates behind Tor-vanishing of ``{closure(I^k)}``.

    ``delta[k]``: delta*(closure(I^k)) ⊆ closure(I^(k-1));
    ``maximal[k]``: closure(I^k) ⊆ m * closure(I^(k-1));
    ``corollary[k, e]``: closure(I^(k+e)) ⊆ m^e * closure(I^k).
    """

    delta: dict
    maximal: dict
    corollary: dict

    @property
    def all_true(self) -> bool:
        return all(self.delta.values()) and all(self.maximal.values()) and all(self.corollary.values())

    def to_dict(self) -> dict:
        return {
            "delta": {str(k): v for k, v in self.delta.items()},
            "maximal": {str(k): v for k, v in self.maximal.items()},
            "corollary": {f"{k},{e}": v for (k, e), v in self.corollary.items()},
            "all_true": self.all_true,
        }


def check_tor_vanishing_certificates(I: MonomialIdeal, k_max: int, e_max: int) -> TorCertificates:
    if k_max < 2 or e_max < 1:
        raise ValueError("need k_max >= 2 and e_max >= 1")
    if I.is_zero or I.is_unit:
        raise PreconditionError("ideal must be proper and nonzero")
    c = _closures(I, k_max + e_max)
    delta, maximal, corollary = {}, {}, {}
    for k in range(2, k_max + 1):
        delta[k] = contains(c[k - 1], delta_star(c[k]))
        maximal[k] = contains(maximal_ideal_power_times(c[k - 1], 1), c[k])
    for k in range(1, k_max + 1):
        for e in range(1, e_max + 1):
            corollary[k, e] = contains(maximal_ideal_power_times(c[k], e), c[k + e])
    return TorCertificates(delta, maximal, corollary)


# -- depth and regularity of closures of powers of I + J -------------------------------------

@dataclass(frozen=True)
class DepthRegRow:
    k: int
    depth: int
    depth_formula: int
    reg: int
    reg_formula: int

    @property
    def equal(self) -> bool:
        return self.depth == self.depth_formula and self.reg == self.reg_formula

    @property
    def bounds_hold(self) -> bool:
        return self.depth >= self.depth_formula and self.reg <= self.reg_formula

    def to_dict(self) -> dict:
        return {"k": self.k, "depth": self.depth, "depth_formula": self.depth_formula,
                "reg": self.reg, "reg_formula": self.reg_formula, "equal": self.equal,
                "bounds_hold": self.bounds_hold}


def depth_reg_formula(I: MonomialIdeal, J: MonomialIdeal, k: int) -> tuple[int, int]:
    """min/max over ``i in [1, k-1]``, ``j in [1, k]`` of the combined depths and regularities
    of ``A/closure(I^p)`` and ``B/closure(J^q)``."""
    inv_I = {p: depth_and_reg(integral_closure_power(I, p)) for p in range(1, k + 1)}
    inv_J = {q: depth_and_reg(integral_closure_power(J, q)) for q in range(1, k + 1)}
    depths, regs = [], []
    for i in range(1, k):
        depths.append(inv_I[k - i].depth + inv_J[i].depth + 1)
        regs.append(inv_I[k - i].regularity + inv_J[i].regularity + 1)
    for j in range(1, k + 1):
        depths.append(inv_I[k - j + 1].depth + inv_J[j].depth)
        regs.append(inv_I[k - j + 1].regularity + inv_J[j].regularity)
    return min(depths), max(regs)


def compare_depth_reg(I: MonomialIdeal, J: MonomialIdeal, k: int) -> DepthRegRow:
    """Direct depth/reg of ``S/closure((I+J)^k)`` next to the formula values."""
    if k < 1:
        raise ValueError("k must be at least 1")
    for X in (I, J):
        if X.is_zero or X.is_unit:
            raise PreconditionError("I and J must be proper and nonzero")
    S, _ = external_sum(I, J)
    direct = depth_and_reg(integral_closure_power(S, k))
    d, r = depth_reg_formula(I, J, k)
    return DepthRegRow(k, direct.depth, d, direct.regularity, r)


@dataclass(frozen=True)
class DepthRegReport:
    rows: tuple[DepthRegRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows)

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows], "all_equal": self.all_equal}


def verify_depth_reg_theorem(I: MonomialIdeal, J: MonomialIdeal, k_max: int) -> DepthRegReport:
    """Compare both sides for ``k = 1..k_max``; requires ``nu*_a(I)`` integral for all a."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    cert = is_nu_star_always_integral(I)
    if not cert:
        raise HypothesisViolation("nu*_a(I) is not always integral", witness=cert.witness)
    return DepthRegReport(tuple(compare_depth_reg(I, J, k) for k in range(1, k_max + 1)))


def check_depth_reg_bounds(I: MonomialIdeal, J: MonomialIdeal, k_max: int) -> DepthRegReport:
    """Same comparison without the integrality hypothesis (only the inequalities are expected)."""
    return DepthRegReport(tuple(compare_depth_reg(I, J, k) for k in range(1, k_max + 1)))
