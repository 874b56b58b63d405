"""Structured documents and text tables for CLI output.

Every command produces a plain dict ``{"command", "schema_version",
"result"}``; :func:`to_json` serializes it and :func:`render_text` turns it
into aligned text.  ``schema.json`` next to this module describes the dicts.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources

from .groebner import INFINITE
from .multipoly import render_monomial, render_terms

SCHEMA_VERSION = 1


def load_schema():
    return json.loads(resources.files("ufalg").joinpath("schema.json").read_text())


def envelope(command, result):
    return {"command": command, "schema_version": SCHEMA_VERSION, "result": result}


def count(value):
    """JSON form of a dimension: an int or the string ``"infinite"``."""
    if value is INFINITE or (isinstance(value, float) and math.isinf(value)):
        return "infinite"
    return int(value)


def rational(value):
    return str(Fraction(value))


def uni(f):
    return {"text": str(f), "coefficients": [str(c) for c in f.coeffs]}


def rewrite_rule(g):
    """``lm -> -(g - lm)`` for a monic relation ``g``."""
    terms = g.terms()
    lm = render_monomial(terms[0][0], g.table) or "1"
    tail = [(e, -c) for e, c in terms[1:]]
    return f"{lm} -> {render_terms(tail, g.table)}"


def algebra_doc(algebra, with_basis=True):
    gb = algebra.groebner()
    doc = {
        "name": algebra.name,
        "table": algebra.table.to_json(),
        "base": algebra.base_description(),
        "order": algebra.ring.order.describe(algebra.table),
        "generators": [str(g) for g in algebra.generators],
        "groebner": [str(g) for g in gb],
        "rules": [rewrite_rule(g) for g in gb],
        "leading_monomials": [render_monomial(m, algebra.table) or "1" for m in gb.leading_monomials()],
        "zero_ring": gb.is_unit_ideal(),
    }
    if with_basis:
        names = algebra.basis_names()
        doc["standard_monomials"] = "infinite" if names is None else names
        doc["dimension"] = count(algebra.dimension())
    if algebra.notes:
        doc["notes"] = algebra.notes
    return doc


def record_doc(rec):
    return {
        "f": uni(rec.f),
        "k": rec.k,
        "table": rec.algebra.table.to_json(),
        "divisor": uni(rec.divisor),
        "cofactor": uni(rec.cofactor),
        "remainder": uni(rec.remainder),
        "generators": [str(g) for g in rec.algebra.generators],
    }


def to_json(doc):
    return json.dumps(doc, indent=2, sort_keys=False)


# -- text rendering --------------------------------------------------------

def table(headers, rows):
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _lines_algebra(a):
    out = [f"relations (reduced Groebner basis, order {a['order']['kind']}):"]
    if a["zero_ring"]:
        out.append("  1 -> 0  (zero ring)")
    else:
        out.extend(f"  {r}" for r in a["rules"])
    if "standard_monomials" in a:
        sm = a["standard_monomials"]
        out.append(f"basis over {a['base']}: {sm if sm == 'infinite' else ', '.join(sm) or '(empty)'}")
        out.append(f"dimension: {a['dimension']}")
    return out


def render_text(doc):
    cmd, r = doc["command"], doc["result"]
    fn = _TEXT.get(cmd)
    return fn(r)


def _divide(r):
    return "\n".join([
        f"f(x) = {r['f']['text']}",
        f"g(x) = {r['g']['text']}",
        f"q(x) = {r['q']['text']}",
        f"r(x) = {r['r']['text']}",
    ])


def _ufa(r):
    lines = [
        f"f(x) = {r['f']['text']}",
        f"k = {r['k']}",
        f"divisor g(x) = {r['divisor']['text']}",
        f"cofactor h(x) = {r['cofactor']['text']}",
        f"remainder r(x) = {r['remainder']['text']}",
        "generators of I:",
    ]
    lines.extend(f"  {g}" for g in r["generators"] or ["(none)"])
    return "\n".join(lines)


def _groebner(r):
    return "\n".join([f"f(x) = {r['f']['text']}", f"k = {r['k']}"] + _lines_algebra(r["algebra"]))


def _dim(r):
    return "\n".join([
        f"f(x) = {r['f']['text']}",
        f"n = {r['n']}, k = {r['k']}",
        f"dim R_(f,{r['k']}) over {r['base']} = {r['dimension']}",
        f"C({r['n']},{r['k']}) = {r['binomial']}",
        f"match: {'yes' if r['ok'] else 'NO'}",
    ])


def _check_dim(r):
    rows = [(x["f"], x["n"], x["k"], x["dim"], x["binomial"], "OK" if x["ok"] else "FAIL") for x in r["rows"]]
    return "\n".join([
        f"seed {r['seed']}, {r['trials']} trials, max degree {r['max_deg']}",
        table(["f", "n", "k", "dim", "C(n,k)", "OK"], rows),
        f"all ok: {r['all_ok']}",
    ])


def _check_valuation(r):
    lines = [f"checked {r['checked']} pairs (n, p) with n <= {r['max']} and p | n"]
    if r["failures"]:
        lines.append(table(["n", "p", "nu_p(C(n,p))", "nu_p(n)"],
                           [(x["n"], x["p"], x["lhs"], x["rhs"]) for x in r["failures"]]))
    lines.append(f"all ok: {r['all_ok']}")
    return "\n".join(lines)


def _s1s2(r):
    return "\n".join([
        f"f(x) = {r['f']['text']}",
        f"n = {r['n']}, k = {r['k']}",
        f"dim S1 = {r['dim_S1']}  (k * dim R_(f,k) = {r['k_times_dim_Rfk']})",
        f"dim S2 = {r['dim_S2']}  ((n-k+1) * C(n,k-1) = {r['n_k_formula']})",
        f"equal: {'yes' if r['ok'] else 'NO'}",
    ])


def _factor(r):
    rows = [(x["poly"], x["degree"], x["multiplicity"]) for x in r["factors"]]
    return "\n".join([f"f(x) = {r['f']['text']}", f"unit: {r['unit']}", table(["factor", "deg", "mult"], rows)])


def _decompose(r):
    rows = [(x["algebra"], x["residue_poly"], x["residue_dimension"], x["dimension"]) for x in r["locals"]]
    return "\n".join([
        f"f(x) = {r['f']['text']}",
        table(["local algebra", "residue poly", "residue dim", "dim"], rows),
        f"total dimension: {r['total_dimension']} (deg f = {r['degree']})",
    ])


def _csqrt(r):
    return r["text"]


def _quadroots(r):
    return "\n".join(x["text"] for x in r["roots"])


def _oddroot(r):
    return "\n".join([
        f"root: {r['root']!r}",
        f"residual: {r['residual']:.3e}",
        f"iterations: {r['iterations']}",
        f"initial bracket: [{r['bracket'][0]!r}, {r['bracket'][1]!r}]",
    ])


def _demo(r):
    lines = [
        f"f(x) = {r['f']['text']}",
        f"g(x) = {r['g']['text']}",
        f"q(x) = {r['q']['text']}",
        f"r(x) = {r['r']['text']}",
        "",
    ]
    lines += _lines_algebra(r["algebra"])
    lines[-1] += f" = C(3,2) = {r['binomial']}"
    s = r["shortcut"]
    lines += [
        "",
        f"shortcut: q1(x) = {s['q1']['text']}",
        f"b0*f(x) - q1(x)*g(x) = {s['difference']['text']}",
        f"x coefficient: {s['third_relation']}",
        f"normal form modulo the relations: {s['normal_form']}",
    ]
    return "\n".join(lines)


_TEXT = {
    "divide": _divide,
    "ufa": _ufa,
    "groebner": _groebner,
    "dim": _dim,
    "check-dim": _check_dim,
    "check-valuation": _check_valuation,
    "s1s2": _s1s2,
    "factor": _factor,
    "decompose": _decompose,
    "csqrt": _csqrt,
    "quadroots": _quadroots,
    "oddroot": _oddroot,
    "demo-cubic": _demo,
}
