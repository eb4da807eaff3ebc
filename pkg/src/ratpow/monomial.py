"""Monomials, monomial ideals and their exact arithmetic.

A monomial ideal is stored as its unique minimal generating set, a tuple of
exponent vectors kept in descending lexicographic order (so ``x^4`` comes
before ``x^2*y`` in ``k[x, y]``).  The zero ideal has no generators and the
unit ideal has the single zero vector.  Every operation returns a new
ideal; nothing is mutated after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Sequence

import numpy as np

from .errors import ContextMismatch, DimensionMismatch, UndefinedOperation

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class VariableContext:
    names: tuple[str, ...]
    block_split: int | None = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be nonempty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.block_split is not None and not 0 < self.block_split < len(names):
            raise ValueError(f"block split {self.block_split} outside (0, {len(names)})")

    @classmethod
    def of(cls, *names: str) -> VariableContext:
        if len(names) == 1 and " " in names[0]:
            names = tuple(names[0].split())
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def juxtapose(self, other: VariableContext) -> VariableContext:
        """Context ``self.names + other.names`` with the block boundary recorded."""
        overlap = set(self.names) & set(other.names)
        if overlap:
            raise ContextMismatch(f"contexts share variables {sorted(overlap)}")
        return VariableContext(self.names + other.names, block_split=self.n)

    def same_variables(self, other: VariableContext) -> bool:
        return self.names == other.names

    def unit_vector(self, i: int) -> Exponent:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def zero_vector(self) -> Exponent:
        return (0,) * self.n


def default_context(n: int) -> VariableContext:
    return VariableContext(tuple(f"x{i + 1}" for i in range(n)))


def _check_lengths(vectors: Sequence[Exponent], n: int | None = None) -> int | None:
    lengths = {len(v) for v in vectors}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionMismatch(f"exponent vectors of mixed lengths {sorted(lengths)}")
    return lengths.pop() if lengths else None


def minimal_elements(vectors: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Componentwise-minimal elements of a finite set of vectors, canonically ordered."""
    uniq = {tuple(int(x) for x in v) for v in vectors}
    if not uniq:
        return ()
    n = _check_lengths(list(uniq))
    if any(x < 0 for v in uniq for x in v):
        raise ValueError("exponents must be nonnegative")
    if n == 0:
        return ((),)
    # A vector can only be divided by one of strictly smaller degree, so a
    # single pass in degree order against the kept set suffices.
    ordered = sorted(uniq, key=lambda v: (sum(v), v))
    kept = np.empty((len(ordered), n), dtype=np.int64)
    count = 0
    for v in ordered:
        arr = np.asarray(v, dtype=np.int64)
        if count and np.any(np.all(kept[:count] <= arr, axis=1)):
            continue
        kept[count] = arr
        count += 1
    return tuple(sorted((tuple(int(x) for x in row) for row in kept[:count]), reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Use :func:`minimalize` or the classmethods to build one; the raw
    constructor trusts that ``generators`` is already a canonical antichain.
    """

    context: VariableContext
    generators: tuple[Exponent, ...]

    @classmethod
    def from_generators(cls, context: VariableContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        gens = [tuple(g) for g in gens]
        _check_lengths(gens, context.n)
        return cls(context, minimal_elements(gens))

    @classmethod
    def zero(cls, context: VariableContext) -> MonomialIdeal:
        return cls(context, ())

    @classmethod
    def unit(cls, context: VariableContext) -> MonomialIdeal:
        return cls(context, (context.zero_vector(),))

    @classmethod
    def maximal(cls, context: VariableContext) -> MonomialIdeal:
        """The ideal generated by all variables of the context."""
        return cls.from_generators(context, [context.unit_vector(i) for i in range(context.n)])

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, a) -> bool:
        return monomial_in(self, a)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return ideal_power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_intersection(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        return contains(other, self)

    def __ge__(self, other: MonomialIdeal) -> bool:
        return contains(self, other)

    def same_ideal(self, other: MonomialIdeal) -> bool:
        """Equality of generator sets, ignoring the recorded block split."""
        return self.context.names == other.context.names and self.generators == other.generators

    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.generators for x in g)

    def degrees(self) -> list[int]:
        return [sum(g) for g in self.generators]

    def array(self) -> np.ndarray:
        return np.asarray(self.generators, dtype=np.int64).reshape(len(self.generators), self.n)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.context) for g in self.generators) + ")"


def minimalize(gens: Iterable[Sequence[int]], context: VariableContext | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens`` (the antichain of their minimal elements)."""
    gens = [tuple(g) for g in gens]
    n = _check_lengths(gens, context.n if context is not None else None)
    if context is None:
        context = default_context(n or 0)
    return MonomialIdeal(context, minimal_elements(gens))


def _common_context(I: MonomialIdeal, J: MonomialIdeal) -> VariableContext:
    if not I.context.same_variables(J.context):
        raise ContextMismatch(f"ideals live in different rings {I.context.names} vs {J.context.names}")
    return I.context


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _common_context(I, J)
    return MonomialIdeal(ctx, minimal_elements(I.generators + J.generators))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _common_context(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(ctx)
    A, B = I.array(), J.array()
    sums = (A[:, None, :] + B[None, :, :]).reshape(-1, ctx.n)
    return MonomialIdeal(ctx, minimal_elements(map(tuple, sums.tolist())))


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power must be nonnegative")
    result = MonomialIdeal.unit(I.context)
    base = I
    while k:
        if k & 1:
            result = ideal_product(result, base)
        k >>= 1
        if k:
            base = ideal_product(base, base)
    return result


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ctx = _common_context(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(ctx)
    A, B = I.array(), J.array()
    lcms = np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, ctx.n)
    return MonomialIdeal(ctx, minimal_elements(map(tuple, lcms.tolist())))


def monomial_in(I: MonomialIdeal, a: Sequence[int]) -> bool:
    if len(a) != I.n:
        raise DimensionMismatch(f"exponent of length {len(a)} in a ring with {I.n} variables")
    return any(all(g_i <= a_i for g_i, a_i in zip(g, a)) for g in I.generators)


def contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is a subset of ``I``."""
    _common_context(I, J)
    return all(monomial_in(I, g) for g in J.generators)


def delta_star(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by ``f / x`` over minimal generators ``f`` and variables ``x | f``."""
    if I.is_zero:
        raise UndefinedOperation("delta* of the zero ideal is undefined")
    if I.is_unit:
        return I
    out = []
    for g in I.generators:
        for i, gi in enumerate(g):
            if gi > 0:
                out.append(g[:i] + (gi - 1,) + g[i + 1:])
    return MonomialIdeal(I.context, minimal_elements(out))


def maximal_ideal_power_times(I: MonomialIdeal, e: int) -> MonomialIdeal:
    """``m^e * I`` where ``m`` is generated by every variable of the context."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    return ideal_product(ideal_power(MonomialIdeal.maximal(I.context), e), I)


def embed(I: MonomialIdeal, context: VariableContext, offset: int) -> MonomialIdeal:
    """Extension of ``I`` to a larger ring whose variables ``offset..`` are I's."""
    if context.names[offset:offset + I.n] != I.context.names:
        raise ContextMismatch(f"{I.context.names} is not a block of {context.names} at {offset}")
    before, after = offset, context.n - offset - I.n
    gens = tuple((0,) * before + g + (0,) * after for g in I.generators)
    return MonomialIdeal(context, tuple(sorted(gens, reverse=True)))


def external_sum(I: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, ExponentMatrix]:
    """``I + J`` in the juxtaposed ring together with its block-diagonal exponent matrix."""
    ctx = I.context.juxtapose(J.context)
    left, right = embed(I, ctx, 0), embed(J, ctx, I.n)
    # disjoint supports: padded generators are already an antichain
    S = MonomialIdeal(ctx, tuple(sorted(left.generators + right.generators, reverse=True)))
    if S.is_unit:
        S = MonomialIdeal.unit(ctx)
    return S, ExponentMatrix.from_ideal(S)


def split_exponent(a: Sequence[int], context: VariableContext) -> tuple[Exponent, Exponent]:
    """Split ``a`` into its A-block and B-block parts using the context's block split."""
    if context.block_split is None:
        raise UndefinedOperation("context has no block split")
    r = context.block_split
    return tuple(a[:r]), tuple(a[r:])


@dataclass(frozen=True)
class ExponentMatrix:
    """n x m matrix whose columns are generator exponents."""

    columns: tuple[Exponent, ...]
    n: int

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        _check_lengths(cols, self.n)
        if any(x < 0 for c in cols for x in c):
            raise ValueError("exponent matrix entries must be nonnegative")

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> ExponentMatrix:
        return cls(I.generators, I.n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ExponentMatrix:
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(tuple(tuple(rows[i][j] for i in range(n)) for j in range(m)), n)

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c[i] for c in self.columns) for i in range(self.n))

    def column_max(self) -> tuple[int, ...]:
        """Row-wise maximum ``max_j M_ij`` for each variable ``i``."""
        return tuple(max((c[i] for c in self.columns), default=0) for i in range(self.n))


def all_monomials(n: int, max_degree: int) -> Iterable[Exponent]:
    """Every exponent vector in n variables of total degree at most ``max_degree``."""
    for a in _cartesian(range(max_degree + 1), repeat=n):
        if sum(a) <= max_degree:
            yield a


# -- text format -------------------------------------------------------------

def format_monomial(a: Sequence[int], context: VariableContext) -> str:
    if not any(a):
        return "1"
    sep = "" if all(len(v) == 1 for v in context.names) else "*"
    parts = []
    for name, e in zip(context.names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts)
