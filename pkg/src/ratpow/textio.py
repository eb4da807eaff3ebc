"""Reading and writing the ideal text format.

::

    # the ideal (y^2, yz) in k[y, z]
    vars y z
    y^2
    y*z

Generators may be written ``x^2*y``, ``x^2y`` or in the compact power
notation ``x2y``.  ``1`` is the unit monomial and the keyword ``zero``
declares the zero ideal.  Several generators may share a line when
separated by commas.
"""
from __future__ import annotations

import warnings
from pathlib import Path

from .errors import ParseError
from .monomial import MonomialIdeal, VariableContext, format_monomial, minimal_elements


class NonMinimalInputWarning(UserWarning):
    pass


def parse_monomial(text: str, context: VariableContext, *, path=None, line=None, col0: int = 1) -> tuple[int, ...]:
    """Parse one monomial; ``col0`` is the column of ``text[0]`` for diagnostics."""
    exps = [0] * context.n
    names = sorted(context.names, key=len, reverse=True)
    index = {v: i for i, v in enumerate(context.names)}
    s = text.strip()
    offset = col0 + (len(text) - len(text.lstrip()))
    if s == "1":
        return tuple(exps)
    pos = 0
    seen_factor = False
    while pos < len(s):
        ch = s[pos]
        if ch.isspace() or (ch == "*" and seen_factor):
            pos += 1
            continue
        name = next((v for v in names if s.startswith(v, pos)), None)
        if name is None:
            if ch == "-":
                raise ParseError("negative exponent", path, line, offset + pos)
            end = pos
            while end < len(s) and (s[end].isalnum() or s[end] in "_'"):
                end += 1
            bad = s[pos:max(end, pos + 1)]
            raise ParseError(f"unknown variable {bad!r}", path, line, offset + pos)
        pos += len(name)
        power = 1
        if pos < len(s) and s[pos] == "^":
            pos += 1
            if pos < len(s) and s[pos] == "-":
                raise ParseError("negative exponent", path, line, offset + pos)
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected an exponent after '^'", path, line, offset + start)
            power = int(s[start:pos])
        elif pos < len(s) and s[pos].isdigit():
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            power = int(s[start:pos])
        exps[index[name]] += power
        seen_factor = True
    if not seen_factor:
        raise ParseError("empty monomial", path, line, offset)
    return tuple(exps)


def parse_ideal(text: str, path=None) -> MonomialIdeal:
    context = None
    gens = []
    zero = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if context is None:
            head, _, rest = line.strip().partition(" ")
            if head != "vars" or not rest.strip():
                raise ParseError("first line must be 'vars <name> ...'", path, lineno, 1)
            try:
                context = VariableContext(tuple(rest.split()))
            except ValueError as exc:
                raise ParseError(str(exc), path, lineno, 1) from None
            continue
        if line.strip() == "zero":
            zero = True
            continue
        col = 1
        for chunk in line.split(","):
            if chunk.strip():
                gens.append(parse_monomial(chunk, context, path=path, line=lineno, col0=col))
            col += len(chunk) + 1
    if context is None:
        raise ParseError("missing 'vars' line", path, 1, 1)
    if zero:
        if gens:
            raise ParseError("'zero' ideal cannot also list generators", path)
        return MonomialIdeal.zero(context)
    if not gens:
        raise ParseError("no generators (write 'zero' for the zero ideal)", path)
    minimal = minimal_elements(gens)
    if len(minimal) != len(set(gens)):
        warnings.warn(
            f"{path or '<input>'}: generators were not minimal; kept {len(minimal)} of {len(set(gens))}",
            NonMinimalInputWarning,
            stacklevel=2,
        )
    return MonomialIdeal(context, minimal)


def parse_ideal_file(path) -> MonomialIdeal:
    path = Path(path)
    return parse_ideal(path.read_text(encoding="utf-8"), path=str(path))


def serialize_ideal(I: MonomialIdeal) -> str:
    lines = ["vars " + " ".join(I.context.names)]
    if I.is_zero:
        lines.append("zero")
    lines.extend(format_monomial(g, I.context) for g in I.generators)
    return "\n".join(lines) + "\n"
