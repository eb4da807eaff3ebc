"""``rp``: command-line front end.

Exit status: 0 success, 1 parse/usage error, 2 the input fails a theorem
hypothesis (certificate printed), 3 a proved identity failed on our
computation (internal defect).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings
from fractions import Fraction

from . import closure, expansion, homology
from .errors import HypothesisViolation, ParseError, PreconditionError, RatPowError, TheoremViolation
from .monomial import MonomialIdeal, format_monomial
from .textio import parse_ideal_file, serialize_ideal

FORMAT_VERSION = "rp/1"

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_DEFECT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        u = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}") from None
    if u < 0:
        raise argparse.ArgumentTypeError("exponent must be nonnegative")
    return u


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv to dump simplex tableaus")

    p = _Parser(prog="rp", description="Rational powers and integral closures of monomial ideals.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, files, help, **params):
        sp = sub.add_parser(name, parents=[common], help=help)
        for f in files:
            sp.add_argument(f, metavar=f.upper() + ".ideal")
        for flag, kw in params.items():
            sp.add_argument(*kw.pop("flags"), dest=flag, **kw)
        return sp

    verb("closure", ["ideal"], "integral closure of I^k",
         k=dict(flags=("-k",), type=_positive, required=True))
    verb("rational-power", ["ideal"], "rational power I_u",
         u=dict(flags=("-u",), type=_fraction, required=True))
    verb("jumping-denominator", ["ideal"], "denominator e with I_u = I_{ceil(ue)/e}")
    verb("check-integrality", ["ideal"], "is nu*_a(I) integral for all a?")
    for name, help in (("expand", "right-hand side of the binomial expansion"),
                       ("verify-expansion", "compare closure/rational power of I+J with its expansion")):
        sp = verb(name, ["ideal_i", "ideal_j"], help)
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("-k", type=_positive, help="integral closure of (I+J)^k against the integer expansion")
        g.add_argument("-u", type=_fraction, help="rational power (I+J)_u against the rational expansion")
        sp.add_argument("--grid-refine", action="store_true", help="debug: halve the omega-grid step")
    sp = verb("symbolic", ["ideal"], "symbolic powers of a squarefree ideal")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("-k", type=_positive, help="compute I^(k)")
    g.add_argument("--bound", type=_positive, help="certify I^k = closure(I^k) = I^(k) for k <= bound")
    verb("betti", ["ideal"], "graded Betti table of S/I")
    verb("depth-reg", ["ideal"], "depth, regularity and projective dimension of S/I")
    verb("verify-depth-reg", ["ideal_i", "ideal_j"], "depth/regularity formulas for closure((I+J)^k), k <= K",
         k=dict(flags=("-k",), type=_positive, required=True))
    verb("certify-tor", ["ideal"], "delta*/m containments for k <= K, e <= E",
         k=dict(flags=("-k",), type=_positive, required=True),
         bound=dict(flags=("--bound",), type=_positive, default=1, help="largest e (default 1)"))
    return p


def _gens(I: MonomialIdeal, gens=None) -> list[str]:
    return [format_monomial(g, I.context) for g in (I.generators if gens is None else gens)]


def _ideal_doc(I: MonomialIdeal) -> dict:
    return {"vars": list(I.context.names), "zero": I.is_zero, "generators": _gens(I)}


def _report_text(report: expansion.ExpansionReport) -> str:
    if report.equal:
        head = "EQUAL"
    else:
        head = "NOT EQUAL; missing: " + ", ".join(_gens(report.left, report.missing))
    lines = [head, "terms:"]
    for w, t in report.terms:
        lines.append(f"  {w}: " + (", ".join(_gens(t)) or "0"))
    if report.kind == "integer" and not report.theorem_applies:
        lines.append("integrality hypothesis fails; witness vertex (" + ", ".join(map(str, report.witness)) + ")")
    return "\n".join(lines) + "\n"


def _dispatch(args) -> tuple[str, dict, int]:
    """Run one command; returns (text output, structured result, exit status)."""
    v = args.verb
    if v in ("closure", "rational-power"):
        I = parse_ideal_file(args.ideal)
        if v == "closure":
            R = closure.integral_closure_power(I, args.k)
        else:
            R = closure.rational_power(I, args.u).result
        return serialize_ideal(R), {"ideal": _ideal_doc(R)}, EXIT_OK

    if v == "jumping-denominator":
        e = closure.jumping_denominator(parse_ideal_file(args.ideal))
        return f"{e}\n", {"jumping_denominator": e}, EXIT_OK

    if v == "check-integrality":
        cert = closure.is_nu_star_always_integral(parse_ideal_file(args.ideal))
        w = None if cert.witness is None else [str(x) for x in cert.witness]
        text = "INTEGRAL\n" if cert else f"NOT INTEGRAL; witness vertex ({', '.join(w)})\n"
        return text, {"integral": cert.integral, "witness": w}, EXIT_OK

    if v in ("expand", "verify-expansion"):
        I, J = parse_ideal_file(args.ideal_i), parse_ideal_file(args.ideal_j)
        refine = 2 if args.grid_refine else 1
        if v == "expand":
            if args.k is not None:
                R = expansion.expansion_integer(I, J, args.k)
            else:
                R = expansion.expansion_rational(I, J, args.u, refine)
            return serialize_ideal(R), {"ideal": _ideal_doc(R)}, EXIT_OK
        if args.k is not None:
            report = expansion.verify_integer_expansion(I, J, args.k)
        else:
            report = expansion.verify_rational_expansion(I, J, args.u, refine=refine)
        status = EXIT_DEFECT if report.violation else EXIT_OK
        return _report_text(report), {"report": report.to_dict()}, status

    if v == "symbolic":
        I = parse_ideal_file(args.ideal)
        if args.k is not None:
            R = expansion.symbolic_power_squarefree(I, args.k)
            return serialize_ideal(R), {"ideal": _ideal_doc(R)}, EXIT_OK
        check = expansion.check_corollary_hypotheses(I, args.bound)
        lines = [f"squarefree: {check.squarefree}", check.label]
        for k in sorted(check.symbolic_equals_closure):
            lines.append(f"  k={k}: symbolic == closure: {check.symbolic_equals_closure[k]}; "
                         f"power == symbolic: {check.powers_equal_symbolic[k]}")
        return "\n".join(lines) + "\n", {"corollary_check": check.to_dict()}, EXIT_OK

    if v == "betti":
        table = homology.betti_table(parse_ideal_file(args.ideal))
        return table.render(), {"betti": table.to_dict()}, EXIT_OK

    if v == "depth-reg":
        rep = homology.depth_and_reg(parse_ideal_file(args.ideal))
        text = f"depth {rep.depth}\nregularity {rep.regularity}\nprojective-dimension {rep.projective_dimension}\n"
        return text, {"invariants": rep.to_dict()}, EXIT_OK

    if v == "verify-depth-reg":
        I, J = parse_ideal_file(args.ideal_i), parse_ideal_file(args.ideal_j)
        report = homology.verify_depth_reg_theorem(I, J, args.k)
        lines = ["k depth formula reg formula"]
        for r in report.rows:
            lines.append(f"{r.k} {r.depth} {r.depth_formula} {r.reg} {r.reg_formula}"
                         + ("" if r.equal else "  MISMATCH"))
        lines.append("EQUAL" if report.all_equal else "NOT EQUAL")
        status = EXIT_OK if report.all_equal else EXIT_DEFECT
        return "\n".join(lines) + "\n", {"report": report.to_dict()}, status

    if v == "certify-tor":
        cert = homology.check_tor_vanishing_certificates(parse_ideal_file(args.ideal), args.k, args.bound)
        lines = [f"delta k={k}: {ok}" for k, ok in cert.delta.items()]
        lines += [f"maximal k={k}: {ok}" for k, ok in cert.maximal.items()]
        lines += [f"corollary k={k} e={e}: {ok}" for (k, e), ok in cert.corollary.items()]
        lines.append("ALL TRUE" if cert.all_true else "FAILED")
        return "\n".join(lines) + "\n", {"certificates": cert.to_dict()}, EXIT_OK if cert.all_true else EXIT_DEFECT

    raise AssertionError(v)  # pragma: no cover


def _params(args) -> dict:
    out = {}
    for key in ("k", "u", "bound", "grid_refine"):
        val = getattr(args, key, None)
        if val is not None and val is not False:
            out[key] = str(val) if isinstance(val, Fraction) else val
    return out


def _inputs(args) -> list[str]:
    return [getattr(args, f) for f in ("ideal", "ideal_i", "ideal_j") if getattr(args, f, None)]


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO, stream=stderr)
    doc = {"format": FORMAT_VERSION, "command": args.verb, "inputs": _inputs(args), "parameters": _params(args)}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            text, result, status = _dispatch(args)
            doc.update(status="ok" if status == EXIT_OK else "theorem-violation", result=result)
        except ParseError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_PARSE
        except OSError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_PARSE
        except HypothesisViolation as exc:
            w = None if exc.witness is None else [str(x) for x in exc.witness]
            text = f"HYPOTHESIS FAILS: {exc}" + (f"; witness vertex ({', '.join(w)})" if w else "") + "\n"
            doc.update(status="hypothesis-failure", result={"message": str(exc), "witness": w})
            status = EXIT_HYPOTHESIS
        except TheoremViolation as exc:
            text = f"THEOREM VIOLATION: {exc}\n"
            doc.update(status="theorem-violation", result={"message": str(exc)})
            status = EXIT_DEFECT
        except (PreconditionError, RatPowError, ValueError) as exc:
            text = f"PRECONDITION FAILS: {exc}\n"
            doc.update(status="precondition-failure", result={"message": str(exc)})
            status = EXIT_HYPOTHESIS
    for w in caught:
        print(f"warning: {w.message}", file=stderr)
    if args.format == "structured":
        stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
