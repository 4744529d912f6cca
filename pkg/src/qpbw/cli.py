"""
Command line interface. Every command prints one JSON report to stdout and
exits nonzero on errors or failed checks.

    qpbw check FILE [--trials N] [--seed S]
    qpbw normalize FILE --expr E
    qpbw refilter FILE
    qpbw count FILE --max-degree N
    qpbw gkdim FILE [--ideal "m1,m2,.."] [--n-max N]
    qpbw koszul FILE --vars i1,..,ic [--degree-bound D]
    qpbw catalog [NAME] [--text]
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import List, Optional

from . import catalog as _catalog
from . import homology, qspace, refilter
from .orders import WeightLex
from .pbw import AlgebraPresentation, InconsistentPresentation, associativity_check, check_condition_iii, poly_str
from .syntax import ParseError, parse_document, parse_poly, serialize_presentation

REPORT_VERSION = "1"


def _vec(v):
    return [int(x) for x in v]


def _relations(A: AlgebraPresentation) -> List[str]:
    out = []
    for (j, i) in sorted(A.q):
        rhs = poly_str(A, A.relation_poly(j, i))
        out.append(f"{A.names[j]}*{A.names[i]} = {rhs}")
    for k, sg in enumerate(A.sigma):
        for zi, lam in enumerate(sg.scale):
            if not lam.is_one():
                z = A.domain.names[zi]
                out.append(f"{A.names[k]}*{z} = ({lam})*{z}*{A.names[k]}")
    return out


def _report(command, source, outcome, payload):
    return {
        "version": REPORT_VERSION,
        "command": command,
        "input": source,
        "outcome": outcome,
        "payload": payload,
    }


def _load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    source = {"file": os.path.basename(path),
              "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest()}
    return parse_document(text), source


def _space(doc):
    A = doc.algebra
    if A.tails or A.t:
        raise ValueError("this command needs a tail-free presentation over Q(q) "
                         "(a quantum affine space or its localization)")
    return _catalog.presentation_to_space(A, doc.inverted)


def cmd_check(args):
    doc, source = _load(args.file)
    A = doc.algebra
    C = refilter.collect_c_set(A)
    payload = {"algebra": A.name, "c_set": [_vec(a) for a in C.vectors]}
    try:
        cert = refilter.find_weight_vector(C)
    except refilter.Infeasible as exc:
        payload["order"] = None
        payload["farkas"] = list(exc.farkas) if exc.farkas else None
        payload["error"] = str(exc)
        return _report("check", source, "fail", payload)
    cond = check_condition_iii(A, WeightLex(cert.w))
    payload["order"] = {"kind": "weightlex", "w": _vec(cert.w)}
    payload["condition_iii"] = {
        "ok": cond.ok,
        "violations": [{"relation": list(v["relation"]), "exponent": _vec(v["exponent"])}
                       for v in cond.violations],
    }
    assoc = associativity_check(A, trials=args.trials, seed=args.seed)
    payload["associativity"] = {"ok": assoc.ok, "checked": assoc.checked,
                                "counterexample": assoc.counterexample}
    return _report("check", source, "ok" if cond.ok and assoc.ok else "fail", payload)


def cmd_normalize(args):
    doc, source = _load(args.file)
    A = doc.algebra
    f = parse_poly(A, args.expr)
    return _report("normalize", source, "ok",
                   {"algebra": A.name, "expr": args.expr, "normal_form": poly_str(A, f),
                    "terms": len(f)})


def cmd_refilter(args):
    doc, source = _load(args.file)
    A = doc.algebra
    try:
        rep = refilter.refilter_pipeline(A)
    except refilter.Infeasible as exc:
        C = refilter.collect_c_set(A)
        return _report("refilter", source, "fail", {
            "algebra": A.name, "c_set": [_vec(a) for a in C.vectors],
            "farkas": list(exc.farkas) if exc.farkas else None, "error": str(exc)})
    C, cert, gr = rep.c_set, rep.certificate, rep.graded
    payload = {
        "algebra": A.name,
        "c_set": [{"vector": _vec(a), "margin": cert.margins[a],
                   "provenance": [{"relation": list(p["relation"]), "term": _vec(p["term"])}
                                  for p in C.provenance[a]]}
                  for a in C.vectors],
        "w": _vec(cert.w),
        "certificate_verified": refilter.verify_certificate(C, cert),
        "condition_iii": rep.condition_ok,
        "graded": {"degrees": _vec(gr.degrees),
                   "relations": _relations(gr.presentation),
                   "presentation": serialize_presentation(gr.presentation)},
    }
    return _report("refilter", source, "ok", payload)


def _shape(doc):
    """(number of generators counted, number of them that are invertible)."""
    A = doc.algebra
    if A.tails or A.t:
        # standard monomials z^a x^b with z invertible: same growth as the graded algebra
        return A.t + A.s, A.t
    return A.s, doc.inverted


def cmd_count(args):
    doc, source = _load(args.file)
    s, t = _shape(doc)
    counts = [qspace.growth_count_shape(s, t, n) for n in range(args.max_degree + 1)]
    return _report("count", source, "ok", {"algebra": doc.algebra.name, "generators": s,
                                           "inverted": t, "counts": counts})


def cmd_gkdim(args):
    doc, source = _load(args.file)
    A = doc.algebra
    if args.ideal:
        space = _space(doc)
        gens = [_monomial_exponent(A, m) for m in args.ideal.split(",")]
        gk = qspace.monomial_quotient_gkdim(space, gens)
        value = "-inf" if gk == qspace.NEG_INF else gk
        return _report("gkdim", source, "ok", {
            "algebra": A.name, "ideal": [_vec(g) for g in gens], "gkdim": value})
    s, t = _shape(doc)
    est = qspace.gkdim_estimate_shape(s, t, args.n_max)
    return _report("gkdim", source, "ok", {
        "algebra": A.name, "gkdim": est.value, "raw": f"{est.raw:.6f}",
        "n_max": args.n_max, "counts": list(est.counts)})


def _monomial_exponent(A, text):
    f = parse_poly(A, text.strip())
    if len(f) != 1:
        raise ValueError(f"{text!r} is not a monomial")
    (e, c), = f.items()
    return e


def cmd_koszul(args):
    doc, source = _load(args.file)
    space = _space(doc)
    if space.t:
        raise ValueError("koszul needs a quantum affine space without inverted variables")
    S = [int(x) - 1 for x in args.vars.split(",")]
    for i in S:
        if not 0 <= i < space.s:
            raise ValueError(f"variable index {i + 1} out of range 1..{space.s}")
    K = homology.build_qkoszul(space, S)
    verified = homology.verify_complex(K)
    rep = homology.cm_check(space, S, args.degree_bound)
    d_max = max(d for _, d in rep.dims)
    table = [{"k": k, "d": d, "dim": rep.dims[k, d]} for (k, d) in sorted(rep.dims)]
    payload = {
        "algebra": doc.algebra.name,
        "vars": [i + 1 for i in rep.S],
        "ranks": [K.rank(k) for k in range(K.c + 1)],
        "complex_verified": verified,
        "degree_bound": d_max,
        "grade": rep.grade,
        "module_gkdim": rep.module_gkdim,
        "algebra_gkdim": rep.algebra_gkdim,
        "cm_balance": f"{rep.grade} + {rep.module_gkdim} = {rep.grade + rep.module_gkdim}",
        "cm_ok": rep.ok,
        "ext_dimensions": table,
    }
    return _report("koszul", source, "ok" if rep.ok and verified else "fail", payload)


def cmd_catalog(args):
    if args.name:
        entry = _catalog.get(args.name)
        if args.text:
            return entry.file_text()
        return _report("catalog", {"name": entry.name}, "ok", {
            "name": entry.name, "description": entry.description,
            "presentation": entry.file_text(), "order_w": _vec(entry.order.w),
            "expected_w": _vec(entry.expected_w)})
    return _report("catalog", {}, "ok", {
        "entries": [{"name": e.name, "description": e.description}
                    for e in _catalog.CATALOG.values()]})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpbw", description="PBW algebras, re-filtering and "
                                "quantum affine space witnesses")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="tail bounds under the LP weight order, and associativity")
    c.add_argument("file")
    c.add_argument("--trials", type=int, default=50)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("normalize", help="standard form of an expression")
    c.add_argument("file")
    c.add_argument("--expr", required=True)
    c.set_defaults(func=cmd_normalize)

    c = sub.add_parser("refilter", help="weight vector and associated graded algebra")
    c.add_argument("file")
    c.set_defaults(func=cmd_refilter)

    c = sub.add_parser("count", help="growth counts of the standard filtration")
    c.add_argument("file")
    c.add_argument("--max-degree", type=int, required=True)
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("gkdim", help="GK dimension estimate or monomial quotient GKdim")
    c.add_argument("file")
    c.add_argument("--ideal")
    c.add_argument("--n-max", type=int, default=64)
    c.set_defaults(func=cmd_gkdim)

    c = sub.add_parser("koszul", help="q-Koszul complex, grade and CM balance")
    c.add_argument("file")
    c.add_argument("--vars", required=True)
    c.add_argument("--degree-bound", type=int)
    c.set_defaults(func=cmd_koszul)

    c = sub.add_parser("catalog", help="list catalog entries or show one")
    c.add_argument("name", nargs="?")
    c.add_argument("--text", action="store_true", help="print the presentation file only")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except ParseError as exc:
        print(f"qpbw: {args.command}: parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, InconsistentPresentation,
            homology.Inconclusive, ArithmeticError) as exc:
        print(f"qpbw: {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    sys.stdout.write(json.dumps(result, indent=2, sort_keys=True) + "\n")
    if result["outcome"] != "ok":
        print(f"qpbw: {args.command}: check failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
