"""Command-line front end: ``ufa <command> [options]``.

Exit status is 0 on success, 1 on a domain error (non-monic divisor,
uncertifiable basis, degree bound, ...) and 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

from . import report
from .arith import binomial, valuation_sweep
from .errors import ParseError, UfaError
from .factor import crt_decompose_root_adjunction, kronecker_factor
from .multipoly import ORDER_KINDS, PolyRing, VarTable
from .numeric import complex_sqrt, format_complex, horner, odd_degree_bisection, quadratic_roots
from .parse import auto_table, parse_unipoly
from .polydiv import UniPoly, long_divide
from .ufa import build_S1_S2, build_universal_factor_algebra, shortcut_difference

DEMO_CUBIC = "x^3 + a2*x^2 + a1*x + a0"


class UsageError(Exception):
    pass


def _ring(args, *sources):
    if args.vars:
        names = [n.strip() for n in args.vars.split(",") if n.strip()]
        table = VarTable.from_names(names)
    else:
        table = auto_table(sources)
    return PolyRing(table, args.order)


def _poly(args, src, *others):
    return parse_unipoly(src, ring=_ring(args, src, *others))


# -- commands --------------------------------------------------------------

def cmd_divide(args):
    ring = _ring(args, args.f, args.g)
    f = parse_unipoly(args.f, ring=ring)
    g = parse_unipoly(args.g, ring=ring)
    q, r = long_divide(f, g)
    return report.envelope("divide", {
        "table": ring.table.to_json(),
        "f": report.uni(f), "g": report.uni(g), "q": report.uni(q), "r": report.uni(r),
    })


def cmd_ufa(args):
    f = _poly(args, args.f)
    rec = build_universal_factor_algebra(f, args.k)
    return report.envelope("ufa", report.record_doc(rec))


def cmd_groebner(args):
    f = _poly(args, args.f)
    rec = build_universal_factor_algebra(f, args.k)
    return report.envelope("groebner", {
        "f": report.uni(f), "k": args.k, "algebra": report.algebra_doc(rec.algebra),
    })


def cmd_dim(args):
    f = _poly(args, args.f)
    rec = build_universal_factor_algebra(f, args.k)
    d = rec.algebra.dimension()
    c = binomial(f.degree, args.k)
    return report.envelope("dim", {
        "f": report.uni(f), "n": f.degree, "k": args.k,
        "base": rec.algebra.base_description(),
        "dimension": report.count(d), "binomial": c, "ok": d == c,
    })


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("UFA_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"UFA_SEED must be an integer, got {env!r}") from None
    return random.SystemRandom().randrange(2**32)


def random_monic(rng, n, lo=-5, hi=5):
    return UniPoly.from_rationals([rng.randint(lo, hi) for _ in range(n)] + [1])


def dimension_sweep(trials, max_deg, seed, lo=-5, hi=5):
    """Rows ``{f, n, k, dim, binomial, ok}`` for random monic f and 0 <= k <= n+1."""
    rng = random.Random(seed)
    rows = []
    for _ in range(trials):
        n = rng.randint(1, max_deg)
        f = random_monic(rng, n, lo, hi)
        for k in range(n + 2):
            d = build_universal_factor_algebra(f, k).algebra.dimension()
            c = binomial(n, k)
            rows.append({"f": str(f), "n": n, "k": k, "dim": report.count(d), "binomial": c, "ok": d == c})
    return rows


def cmd_check_dim(args):
    if args.max_deg < 1 or args.trials < 1:
        raise UsageError("--max-deg and --trials must be positive")
    seed = _seed(args)
    rows = dimension_sweep(args.trials, args.max_deg, seed)
    return report.envelope("check-dim", {
        "seed": seed, "trials": args.trials, "max_deg": args.max_deg,
        "rows": rows, "all_ok": all(r["ok"] for r in rows),
    })


def cmd_check_valuation(args):
    if args.max < 1:
        raise UsageError("--max must be positive")
    checked = 0
    failures = []
    for n, p, lhs, rhs, ok in valuation_sweep(args.max):
        checked += 1
        if not ok:
            failures.append({"n": n, "p": p, "lhs": lhs, "rhs": rhs})
    return report.envelope("check-valuation", {
        "max": args.max, "checked": checked, "failures": failures, "all_ok": not failures,
    })


def cmd_s1s2(args):
    f = _poly(args, args.f)
    s1, s2 = build_S1_S2(f, args.k)
    n, k = f.degree, args.k
    d1, d2 = s1.dimension(), s2.dimension()
    dk = build_universal_factor_algebra(f, k).algebra.dimension()
    return report.envelope("s1s2", {
        "f": report.uni(f), "n": n, "k": k,
        "dim_S1": report.count(d1), "dim_S2": report.count(d2),
        "k_times_dim_Rfk": report.count(k * dk),
        "n_k_formula": (n - k + 1) * binomial(n, k - 1),
        "ok": d1 == d2 == k * dk,
    })


def cmd_factor(args):
    f = _poly(args, args.f)
    fl = kronecker_factor(f, max_degree=args.max_degree)
    return report.envelope("factor", {
        "f": report.uni(f), "unit": report.rational(fl.unit),
        "factors": [{"poly": str(p), "degree": p.degree, "multiplicity": e} for p, e in fl],
    })


def cmd_decompose(args):
    f = _poly(args, args.f)
    locs = crt_decompose_root_adjunction(f, max_degree=args.max_degree)
    return report.envelope("decompose", {
        "f": report.uni(f), "degree": f.degree,
        "locals": [
            {
                "algebra": f"Q[alpha]/<{lf.algebra.generators[0]}>",
                "residue_poly": str(lf.residue_poly),
                "multiplicity": lf.multiplicity,
                "residue_dimension": lf.residue_dimension,
                "dimension": lf.dimension,
                "algebra_dimension": report.count(lf.algebra.dimension()),
            }
            for lf in locs
        ],
        "total_dimension": sum(lf.dimension for lf in locs),
    })


def _cdoc(z, precision):
    return {"re": z.real, "im": z.imag, "text": format_complex(z, precision)}


def cmd_csqrt(args):
    z = complex(args.a, args.b)
    w = complex_sqrt(z)
    return report.envelope("csqrt", {
        "input": _cdoc(z, args.precision), "root": _cdoc(w, args.precision),
        "text": format_complex(w, args.precision),
    })


def cmd_quadroots(args):
    b = complex(args.b_re, args.b_im)
    c = complex(args.c_re, args.c_im)
    roots = quadratic_roots(b, c)
    return report.envelope("quadroots", {
        "b": _cdoc(b, args.precision), "c": _cdoc(c, args.precision),
        "roots": [_cdoc(r, args.precision) for r in roots],
        "residuals": [abs(r * r + b * r + c) for r in roots],
    })


def cmd_oddroot(args):
    f = _poly(args, args.f)
    if not f.is_numeric():
        raise UsageError("oddroot needs numeric coefficients")
    res = odd_degree_bisection(f, args.tol)
    fc = [float(c) for c in f.rational_coeffs()]
    return report.envelope("oddroot", {
        "f": report.uni(f), "root": res.root, "residual": abs(horner(fc, res.root)),
        "iterations": res.iterations, "bracket": list(res.initial),
        "tol": args.tol,
    })


def demo_cubic_doc():
    f = parse_unipoly(DEMO_CUBIC)
    rec = build_universal_factor_algebra(f, 2)
    algebra = rec.algebra
    diff = shortcut_difference(f)
    ring = diff.ring
    q1 = UniPoly(ring, [f.embed(ring)[0], ring.var("b0")])
    third = diff[1]
    nf = algebra.normal_form(third)
    return report.envelope("demo-cubic", {
        "f": report.uni(f),
        "g": report.uni(rec.divisor),
        "q": report.uni(rec.cofactor),
        "r": report.uni(rec.remainder),
        "algebra": report.algebra_doc(algebra),
        "binomial": binomial(3, 2),
        "shortcut": {
            "q1": report.uni(q1),
            "difference": report.uni(diff),
            "third_relation": str(third),
            "normal_form": str(nf),
        },
    })


def cmd_demo_cubic(args):
    return demo_cubic_doc()


# -- parser ----------------------------------------------------------------

def _float(text):
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable document")

    polyopts = argparse.ArgumentParser(add_help=False)
    polyopts.add_argument("--vars", help="comma-separated variable names (overrides auto-declaration)")
    polyopts.add_argument("--order", choices=ORDER_KINDS, default="block", help="monomial order")

    prec = argparse.ArgumentParser(add_help=False)
    prec.add_argument("--precision", type=int, default=12, help="digits after the decimal point")

    parser = argparse.ArgumentParser(prog="ufa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_, parents=()):
        p = sub.add_parser(name, help=help_, parents=[common, *parents])
        p.set_defaults(func=fn)
        return p

    p = add("divide", cmd_divide, "long division by a monic divisor", [polyopts])
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    for name, fn, help_ in [
        ("ufa", cmd_ufa, "generators of the universal factorization algebra R_(f,k)"),
        ("groebner", cmd_groebner, "reduced Groebner basis, standard monomials and dimension"),
        ("dim", cmd_dim, "dimension of R_(f,k) against C(n,k)"),
        ("s1s2", cmd_s1s2, "dimensions of the two root adjunctions S1 and S2"),
    ]:
        p = add(name, fn, help_, [polyopts])
        p.add_argument("--f", required=True)
        p.add_argument("--k", type=int, required=True)

    p = add("check-dim", cmd_check_dim, "randomized dimension sweep")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=None, help="default: $UFA_SEED, else random")

    p = add("check-valuation", cmd_check_valuation, "check nu_p(C(n,p)) < nu_p(n) for p | n <= N")
    p.add_argument("--max", type=int, required=True)

    for name, fn, help_ in [
        ("factor", cmd_factor, "irreducible factorization over Q"),
        ("decompose", cmd_decompose, "local decomposition of Q[alpha]/<f(alpha)>"),
    ]:
        p = add(name, fn, help_, [polyopts])
        p.add_argument("--f", required=True)
        p.add_argument("--max-degree", type=int, default=8)

    p = add("csqrt", cmd_csqrt, "principal complex square root of a+bi", [prec])
    p.add_argument("a", type=_float)
    p.add_argument("b", type=_float)

    p = add("quadroots", cmd_quadroots, "roots of x^2 + b x + c over C", [prec])
    for name in ("b_re", "b_im", "c_re", "c_im"):
        p.add_argument(name, type=_float)

    p = add("oddroot", cmd_oddroot, "real root of an odd-degree polynomial by bisection", [polyopts])
    p.add_argument("--f", required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    add("demo-cubic", cmd_demo_cubic, "reproduce the worked cubic example")
    return parser


def run(argv):
    """Parse ``argv`` and return the command's document (raises on errors)."""
    args = build_parser().parse_args(argv)
    return args, args.func(args)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"ufa {args.command}: {exc}", file=sys.stderr)
        return 2
    except UfaError as exc:
        print(f"ufa {args.command}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(report.to_json(doc))
    else:
        print(report.render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
