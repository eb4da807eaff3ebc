"""Binomial expansions for ideals in disjoint sets of variables.

For ``I`` in ``k[X]`` and ``J`` in ``k[Y]`` the rational powers of ``I + J``
split as a finite sum of products ``I_w * J_{u-w}``; for integral closures
of ordinary powers the classical sum over ``w`` in ``{0, ..., k}`` may miss
generators unless ``nu*_a(I)`` is always integral.  This module builds both
right-hand sides, compares them with the directly computed left-hand side,
and carries the squarefree/symbolic-power checks.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

from .closure import (
    as_fraction,
    integral_closure_power,
    is_nu_star_always_integral,
    jumping_denominator,
    rational_power,
)
from .errors import PreconditionError, TheoremViolation
from .monomial import (
    Exponent,
    MonomialIdeal,
    embed,
    external_sum,
    format_monomial,
    ideal_intersection,
    ideal_power,
    ideal_product,
    minimal_elements,
    monomial_in,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpansionReport:
    kind: str  # "rational" or "integer"
    exponent: Fraction
    left: MonomialIdeal
    right: MonomialIdeal
    missing: tuple[Exponent, ...]
    terms: tuple[tuple[Fraction, MonomialIdeal], ...]
    theorem_applies: bool
    witness: tuple[Fraction, ...] | None = None

    @property
    def equal(self) -> bool:
        return not self.missing

    @property
    def violation(self) -> bool:
        """Equality is guaranteed but failed: an internal defect."""
        return self.theorem_applies and not self.equal

    def to_dict(self) -> dict:
        ctx = self.left.context
        fmt = lambda gens: [format_monomial(g, ctx) for g in gens]  # noqa: E731
        return {
            "kind": self.kind,
            "exponent": str(self.exponent),
            "left": fmt(self.left.generators),
            "right": fmt(self.right.generators),
            "equal": self.equal,
            "missing": fmt(self.missing),
            "theorem_applies": self.theorem_applies,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
            "terms": [{"omega": str(w), "generators": fmt(t.generators)} for w, t in self.terms],
        }


def _denominator(I: MonomialIdeal) -> int:
    return 1 if I.is_zero else jumping_denominator(I)


def omega_grid(I: MonomialIdeal, J: MonomialIdeal, u, refine: int = 1) -> list[Fraction]:
    """Split points ``w`` in ``[0, u]`` that realise every distinct product ``I_w J_{u-w}``.

    Multiples of ``1/L`` (``L = lcm(e, f) * refine``) together with their
    reflections ``u - t/L``; the reflections matter when ``u`` is not itself
    a multiple of ``1/L``, e.g. the term ``I_u * J_0``.
    """
    u = as_fraction(u)
    L = lcm(_denominator(I), _denominator(J)) * refine
    steps = [Fraction(t, L) for t in range(int(u * L) + 1)]
    return sorted(set(steps) | {u - s for s in steps})


def expansion_terms(I: MonomialIdeal, J: MonomialIdeal, u, refine: int = 1) -> list[tuple[Fraction, MonomialIdeal]]:
    """``(w, I_w * J_{u-w})`` for every grid point, each term in the juxtaposed ring."""
    u = as_fraction(u)
    if u < 0:
        raise ValueError("u must be nonnegative")
    ctx = I.context.juxtapose(J.context)
    terms = []
    for w in omega_grid(I, J, u, refine):
        left = embed(rational_power(I, w).result, ctx, 0)
        right = embed(rational_power(J, u - w).result, ctx, I.n)
        terms.append((w, ideal_product(left, right)))
    return terms


def _sum_terms(ctx, terms) -> MonomialIdeal:
    gens = [g for _, t in terms for g in t.generators]
    return MonomialIdeal(ctx, minimal_elements(gens))


def expansion_rational(I: MonomialIdeal, J: MonomialIdeal, u, refine: int = 1) -> MonomialIdeal:
    """``sum_w I_w * J_{u-w}`` over rational ``0 <= w <= u``."""
    ctx = I.context.juxtapose(J.context)
    return _sum_terms(ctx, expansion_terms(I, J, u, refine))


def integer_expansion_terms(I: MonomialIdeal, J: MonomialIdeal, k: int) -> list[tuple[Fraction, MonomialIdeal]]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = I.context.juxtapose(J.context)
    return [
        (Fraction(l), ideal_product(embed(integral_closure_power(I, l), ctx, 0),
                                    embed(integral_closure_power(J, k - l), ctx, I.n)))
        for l in range(k + 1)
    ]


def expansion_integer(I: MonomialIdeal, J: MonomialIdeal, k: int) -> MonomialIdeal:
    """``sum_{l=0..k} closure(I^l) * closure(J^(k-l))``."""
    ctx = I.context.juxtapose(J.context)
    return _sum_terms(ctx, integer_expansion_terms(I, J, k))


def _compare(kind, u, left, terms, applies, witness, strict) -> ExpansionReport:
    right = _sum_terms(left.context, terms)
    extra = [g for g in right.generators if not monomial_in(left, g)]
    if extra:
        raise TheoremViolation(f"{kind} expansion is not contained in the closure: {extra}")
    missing = tuple(g for g in left.generators if not monomial_in(right, g))
    report = ExpansionReport(kind, u, left, right, missing, tuple(terms), applies, witness)
    if report.violation:
        log.error("%s expansion at %s failed where equality is proved; missing %s", kind, u, missing)
        if strict:
            raise TheoremViolation(f"{kind} expansion at {u} is missing {missing}")
    return report


def verify_rational_expansion(I: MonomialIdeal, J: MonomialIdeal, u, *, refine: int = 1,
                              strict: bool = False) -> ExpansionReport:
    """Compare ``(I+J)_u`` with the finite sum of ``I_w * J_{u-w}``."""
    u = as_fraction(u)
    S, _ = external_sum(I, J)
    left = rational_power(S, u).result
    return _compare("rational", u, left, expansion_terms(I, J, u, refine), True, None, strict)


def verify_integer_expansion(I: MonomialIdeal, J: MonomialIdeal, k: int, *,
                             strict: bool = False) -> ExpansionReport:
    """Compare ``closure((I+J)^k)`` with ``sum_l closure(I^l) * closure(J^(k-l))``.

    Equality is only guaranteed when ``nu*_a(I)`` is always integral; otherwise
    the report lists the generators missing from the right-hand side.
    """
    S, _ = external_sum(I, J)
    left = integral_closure_power(S, k)
    cert = is_nu_star_always_integral(I) if not I.is_zero else None
    applies = bool(cert) if cert is not None else True
    witness = cert.witness if cert is not None else None
    return _compare("integer", Fraction(k), left, integer_expansion_terms(I, J, k), applies, witness, strict)


# -- squarefree ideals and symbolic powers ------------------------------------------

def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise PreconditionError("ideal is not squarefree")
    if I.is_zero or I.is_unit:
        raise PreconditionError("ideal must be proper and nonzero")


def minimal_primes_squarefree(I: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal vertex covers of the generator supports, as tuples of variable indices."""
    _require_squarefree(I)
    edges = [frozenset(i for i, x in enumerate(g) if x) for g in I.generators]
    used = sorted(set().union(*edges))
    covers: list[frozenset] = []
    for size in range(1, len(used) + 1):
        for C in combinations(used, size):
            C = frozenset(C)
            if any(c <= C for c in covers):
                continue
            if all(C & e for e in edges):
                covers.append(C)
    return sorted((tuple(sorted(c)) for c in covers), key=lambda c: (len(c), c))


def prime_of(context, indices) -> MonomialIdeal:
    return MonomialIdeal.from_generators(context, [context.unit_vector(i) for i in indices])


def symbolic_power_squarefree(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)``: intersection of the k-th powers of the minimal primes."""
    _require_squarefree(I)
    if k < 1:
        raise ValueError("k must be positive")
    result = None
    for C in minimal_primes_squarefree(I):
        Pk = ideal_power(prime_of(I.context, C), k)
        result = Pk if result is None else ideal_intersection(result, Pk)
    return result


@dataclass(frozen=True)
class CorollaryCheck:
    """Bounded certificate: claims are only made for ``k <= bound``."""

    squarefree: bool
    bound: int
    symbolic_equals_closure: dict = field(default_factory=dict)
    powers_equal_symbolic: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return (self.squarefree and all(self.symbolic_equals_closure.values())
                and all(self.powers_equal_symbolic.values()))

    @property
    def label(self) -> str:
        return f"verified up to K={self.bound}"

    def to_dict(self) -> dict:
        return {
            "squarefree": self.squarefree,
            "bound": self.bound,
            "label": self.label,
            "symbolic_equals_closure": {str(k): v for k, v in self.symbolic_equals_closure.items()},
            "powers_equal_symbolic": {str(k): v for k, v in self.powers_equal_symbolic.items()},
            "all_hold": self.all_hold,
        }


def check_corollary_hypotheses(I: MonomialIdeal, K: int) -> CorollaryCheck:
    if K < 1:
        raise ValueError("bound K must be at least 1")
    if I.is_zero or I.is_unit or not I.is_squarefree():
        return CorollaryCheck(False, K)
    sym_closure, pow_sym = {}, {}
    for k in range(1, K + 1):
        sym = symbolic_power_squarefree(I, k)
        sym_closure[k] = sym.generators == integral_closure_power(I, k).generators
        pow_sym[k] = ideal_power(I, k).generators == sym.generators
    return CorollaryCheck(True, K, sym_closure, pow_sym)
