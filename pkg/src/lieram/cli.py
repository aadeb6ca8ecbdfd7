"""Command-line front end.

Subcommands: modular {blocks,unramified,poincare,finite-type,structure},
quantum {blocks,unramified,exceptional,simplicity,structure},
verify appendix, selftest.

Output is deterministic: JSON with sorted keys (the machine format) or a flat
TSV projection.  Exit status: 0 success, 1 domain error, 2 usage error.
The single --bound flag (mirrored by the LIERAM_BOUND environment variable)
caps both the field size (default 10^9) and group enumeration (default 10^6).

Input grammars:
  * Cartan types:   A2, b3, A1xA1 (case-insensitive, no whitespace)
  * modular values: comma-separated field literals: integers, g^k (g is the
    deterministic generator of the ambient field), or AS(c) for a chosen
    Artin-Schreier solution of x^p - x = c.  Any AS(c) with c != 0 makes the
    ambient field F_{p^p}; otherwise it is F_p.
  * torus elements: comma-separated exact rationals, exponents on the
    fundamental-weight coordinates, e.g. 1/5,2/5
  * support: comma-separated 1-based indices into the basis of Phi'
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import LieramError
from .modular import (
    ModWeight,
    PChar,
    finite_type_verdict,
    is_unramified,
    mod_blocks,
    poincare_series,
    regularity_and_structure,
    rho_weight,
    unramified_count,
)
from .quantum import (
    QChar,
    TorusElement,
    appendix_rows,
    exceptional_elements,
    q_blocks,
    q_regularity_and_counts,
    q_unramified,
    simplicity_necessary,
    verify_appendix_row,
)
from .rootdata import build_root_system
from .scalars import DEFAULT_FIELD_BOUND, artin_schreier_solve, embed, make_field
from .selftest import SUITES, run_suites
from .weyl import DEFAULT_GROUP_BOUND


def _bounds(args):
    env = os.environ.get("LIERAM_BOUND")
    bound = args.bound if args.bound is not None else (int(env) if env else None)
    if bound is None:
        return DEFAULT_FIELD_BOUND, DEFAULT_GROUP_BOUND
    return bound, bound


def parse_field_values(text: str, p: int, rank: int, bound: int):
    """Parse the modular character / weight grammar into FFElem values."""
    tokens = [t.strip() for t in text.split(",")] if text.strip() else []
    if len(tokens) != rank:
        raise LieramError(f"expected {rank} comma-separated values, got {len(tokens)}")
    base = make_field(p, 1, bound)
    needs_ext = any(t.startswith("AS(") and int(t[3:-1]) % p != 0 for t in tokens)
    ambient = make_field(p, p, bound) if needs_ext else base
    gen = None
    values = []
    for t in tokens:
        if t.startswith("AS(") and t.endswith(")"):
            c = base.from_int(int(t[3:-1]))
            x, _fld = artin_schreier_solve(c, bound)
            values.append(embed(x, ambient))
        elif t == "g" or t.startswith("g^"):
            if gen is None:
                gen = ambient.generator()
            k = 1 if t == "g" else int(t[2:])
            values.append(gen**k)
        else:
            values.append(ambient.from_int(int(t)))
    return tuple(values), ambient


def parse_torus(text: str, rank: int) -> TorusElement:
    tokens = [t.strip() for t in text.split(",")] if text.strip() else []
    if len(tokens) != rank:
        raise LieramError(f"expected {rank} comma-separated exponents, got {len(tokens)}")
    return TorusElement(tuple(Fraction(t) for t in tokens))


def parse_support(text: str):
    if not text or not text.strip():
        return ()
    return tuple(int(t.strip()) - 1 for t in text.split(","))


def _ffstr(v):
    return repr(v)


def _emit(args, payload, tsv_rows=None):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        if tsv_rows is None:
            tsv_rows = [["key", "value"]] + [
                [k, json.dumps(v, sort_keys=True)] for k, v in sorted(payload.items())
            ]
        for row in tsv_rows:
            sys.stdout.write("\t".join(str(c) for c in row) + "\n")
    return 0


def _chi_dict(chi):
    return {
        "values": [list(v.coeffs) for v in chi.values],
        "field": {"p": chi.field.p, "e": chi.field.e,
                  "modulus": list(chi.field.modulus)},
        "support": [s + 1 for s in chi.support],
        "levi_type": chi.levi.type_str,
        "levi_basis": [list(b) for b in chi.levi.basis],
    }


def cmd_modular_blocks(args):
    fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    values, field = parse_field_values(args.chi_s, args.p, rs.rank, fb)
    chi = PChar(rs, args.p, values=values, support=parse_support(args.support),
                field=field, bound=fb)
    blocks = mod_blocks(chi, bound=fb, group_bound=gb)
    counts = unramified_count(chi, blocks)
    structure = regularity_and_structure(chi, blocks)
    payload = {
        "command": "modular.blocks",
        "type": rs.type_str,
        "p": args.p,
        "chi": _chi_dict(chi),
        "blocks": [b.to_dict() for b in blocks],
        "counts": {"num_blocks": len(blocks),
                   "dim_sum": sum(b.dim for b in blocks),
                   "unramified": counts},
        "structure": structure,
    }
    rows = [["lambda", "eta", "orbit_size", "dim", "unramified",
             "stab_point", "stab_coset", "poincare", "finite_type"]]
    for b in blocks:
        rows.append([
            ";".join(_ffstr(v) for v in b.lam.values),
            ";".join(_ffstr(v) for v in b.eta.values),
            b.orbit_size, b.dim, b.unramified,
            b.stab_point_type, b.stab_coset_type,
            ",".join(map(str, b.poincare)) if b.poincare else "-",
            b.finite_type,
        ])
    return _emit(args, payload, rows)


def cmd_modular_unramified(args):
    fb, _gb = _bounds(args)
    rs = build_root_system(args.type)
    values, _field = parse_field_values(args.weight, args.p, rs.rank, fb)
    lam = ModWeight(values)
    payload = {
        "command": "modular.unramified",
        "type": rs.type_str,
        "p": args.p,
        "weight": [list(v.coeffs) for v in lam.values],
        "simpleRootCriterion": is_unramified(rs, lam, "simpleRootCriterion"),
        "definitional": is_unramified(rs, lam, "definitional"),
    }
    return _emit(args, payload)


def cmd_modular_poincare(args):
    fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    values, _field = parse_field_values(args.weight, args.p, rs.rank, fb)
    coeffs = poincare_series(rs, ModWeight(values), group_bound=gb)
    payload = {
        "command": "modular.poincare",
        "type": rs.type_str,
        "p": args.p,
        "weight": [list(v.coeffs) for v in values],
        "coefficients": list(coeffs),
        "value_at_1": sum(coeffs),
    }
    return _emit(args, payload)


def cmd_modular_finite_type(args):
    fb, _gb = _bounds(args)
    rs = build_root_system(args.type)
    values, field = parse_field_values(args.weight, args.p, rs.rank, fb)
    lam = ModWeight(values)
    eta = lam + rho_weight(rs, field)
    verdict, witness = finite_type_verdict(rs, eta)
    payload = {
        "command": "modular.finite-type",
        "type": rs.type_str,
        "p": args.p,
        "weight": [list(v.coeffs) for v in values],
        "verdict": verdict,
        "witness": witness,
    }
    return _emit(args, payload)


def cmd_modular_structure(args):
    fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    values, field = parse_field_values(args.chi_s, args.p, rs.rank, fb)
    chi = PChar(rs, args.p, values=values, support=parse_support(args.support),
                field=field, bound=fb)
    out = regularity_and_structure(chi, bound=fb, group_bound=gb)
    payload = {
        "command": "modular.structure",
        "type": rs.type_str,
        "p": args.p,
        "chi": _chi_dict(chi),
        **out,
    }
    return _emit(args, payload)


def _qchi_dict(chi):
    return {
        "chi_s": [str(e) for e in chi.chi_s.exps],
        "support": [s + 1 for s in chi.support],
        "levi_type": chi.levi.type_str,
        "levi_basis": [list(b) for b in chi.levi.basis],
        "eps": chi.eps,
    }


def cmd_quantum_blocks(args):
    _fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    chi = QChar(rs, args.ell, chi_s=parse_torus(args.chi_s, rs.rank),
                support=parse_support(args.support), eps=args.eps)
    blocks = q_blocks(chi, group_bound=gb)
    counts = q_regularity_and_counts(chi, blocks)
    payload = {
        "command": "quantum.blocks",
        "type": rs.type_str,
        "ell": args.ell,
        "chi": _qchi_dict(chi),
        "blocks": [b.to_dict() for b in blocks],
        "counts": {"num_blocks": len(blocks),
                   "dim_sum": sum(b.dim for b in blocks)},
        "structure": counts,
    }
    rows = [["torus", "orbit_size", "dim", "unramified", "exceptional",
             "stab_point", "stab_fiber"]]
    for b in blocks:
        rows.append([";".join(str(e) for e in b.rep.exps),
                     b.orbit_size, b.dim, b.unramified, b.exceptional,
                     b.stab_point_type, b.stab_fiber_type])
    return _emit(args, payload, rows)


def cmd_quantum_unramified(args):
    _fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    t = parse_torus(args.torus, rs.rank)
    payload = {
        "command": "quantum.unramified",
        "type": rs.type_str,
        "ell": args.ell,
        "torus": [str(e) for e in t.exps],
        "coords": args.coords,
        "eps": args.eps,
    }
    if args.coords in ("component", "both"):
        payload["component"] = q_unramified(rs, t, "component", args.ell, args.eps)
    if args.coords in ("highestWeight", "both"):
        payload["highestWeight"] = q_unramified(rs, t, "highestWeight",
                                                args.ell, args.eps)
    return _emit(args, payload)


def cmd_quantum_exceptional(args):
    rs = build_root_system(args.type)
    recs = exceptional_elements(rs)
    payload = {
        "command": "quantum.exceptional",
        "type": rs.type_str,
        "elements": [{
            "m": rec["m"],
            "torus": [str(e) for e in rec["torus"].exps],
            "centralizer_type": rec["centralizer"].type_str,
            "centralizer_order": rec["centralizer"].order,
            "beta_m": list(rec["beta_m"]) if rec["beta_m"] else None,
        } for rec in recs],
    }
    rows = [["m", "torus", "centralizer", "order", "beta_m"]]
    for rec in payload["elements"]:
        rows.append([rec["m"], ";".join(rec["torus"]), rec["centralizer_type"],
                     rec["centralizer_order"],
                     ",".join(map(str, rec["beta_m"])) if rec["beta_m"] else "-"])
    return _emit(args, payload, rows)


def cmd_quantum_simplicity(args):
    rs = build_root_system(args.type)
    chi = QChar(rs, args.ell, chi_s=parse_torus(args.chi_s, rs.rank),
                support=parse_support(args.support), eps=args.eps)
    t = parse_torus(args.torus, rs.rank)
    res = simplicity_necessary(chi, t)
    payload = {
        "command": "quantum.simplicity",
        "note": "necessary condition only",
        "type": rs.type_str,
        "ell": args.ell,
        "chi": _qchi_dict(chi),
        "torus": [str(e) for e in t.exps],
        **res,
    }
    return _emit(args, payload)


def cmd_quantum_structure(args):
    _fb, gb = _bounds(args)
    rs = build_root_system(args.type)
    chi = QChar(rs, args.ell, chi_s=parse_torus(args.chi_s, rs.rank),
                support=parse_support(args.support), eps=args.eps)
    out = q_regularity_and_counts(chi, group_bound=gb)
    payload = {
        "command": "quantum.structure",
        "type": rs.type_str,
        "ell": args.ell,
        "chi": _qchi_dict(chi),
        **out,
    }
    return _emit(args, payload)


def cmd_verify_appendix(args):
    rows = appendix_rows()
    if args.type:
        want = args.type.strip().upper()
        rows = [(t, m) for t, m in rows if t == want]
        if not rows:
            raise LieramError(f"no appendix rows for type {args.type}")
    results = [verify_appendix_row(t, m) for t, m in rows]
    payload = {
        "command": "verify.appendix",
        "rows": results,
        "all_ok": all(r["ok"] for r in results),
    }
    tsv = [["type", "m", "ok", "convention", "alpha_corrected"]]
    for r in results:
        tsv.append([r["type"], r["m"], r["ok"], r["convention"],
                    json.dumps(r["alpha_corrected"])])
    return _emit(args, payload, tsv)


def cmd_selftest(args):
    names = [args.suite] if args.suite else None
    if args.suite and args.suite not in SUITES:
        raise LieramError(f"unknown suite {args.suite!r}; "
                          f"choose from {', '.join(sorted(SUITES))}")
    ok, results = run_suites(names)
    for r in results:
        sys.stdout.write(r.line() + "\n")
    sys.stdout.write(("ALL PASS" if ok else "FAILURES") + "\n")
    return 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="cap for field size and group enumeration "
                             "(defaults 10^9 / 10^6; env LIERAM_BOUND)")
    top = argparse.ArgumentParser(prog="lieram", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    top.add_argument("--format", choices=("json", "tsv"), default="json")
    top.add_argument("--bound", type=int, default=None)
    sub = top.add_subparsers(dest="group", required=True)

    def leaf(parent, name):
        return parent.add_parser(name, parents=[common])

    mod = sub.add_parser("modular").add_subparsers(dest="command", required=True)
    for name, fn, extra in (
        ("blocks", cmd_modular_blocks, ("chi_s", "support")),
        ("unramified", cmd_modular_unramified, ("weight",)),
        ("poincare", cmd_modular_poincare, ("weight",)),
        ("finite-type", cmd_modular_finite_type, ("weight",)),
        ("structure", cmd_modular_structure, ("chi_s", "support")),
    ):
        p = leaf(mod, name)
        p.add_argument("--type", required=True)
        p.add_argument("--p", type=int, required=True)
        if "chi_s" in extra:
            p.add_argument("--chi-s", dest="chi_s", default="",
                           help="semisimple values (field literals)")
            p.add_argument("--support", default="",
                           help="1-based indices into the basis of Phi'")
        if "weight" in extra:
            p.add_argument("--weight", required=True,
                           help="coroot values (field literals)")
        p.set_defaults(func=fn)

    q = sub.add_parser("quantum").add_subparsers(dest="command", required=True)
    for name, fn, extra in (
        ("blocks", cmd_quantum_blocks, ("chi_s", "support")),
        ("unramified", cmd_quantum_unramified, ("torus", "coords")),
        ("exceptional", cmd_quantum_exceptional, ()),
        ("simplicity", cmd_quantum_simplicity, ("chi_s", "support", "torus")),
        ("structure", cmd_quantum_structure, ("chi_s", "support")),
    ):
        p = leaf(q, name)
        p.add_argument("--type", required=True)
        if name != "exceptional":
            p.add_argument("--ell", type=int, required=True)
            p.add_argument("--eps", type=int, default=1,
                           help="epsilon = exp(2 pi i eps/ell)")
        if "chi_s" in extra:
            p.add_argument("--chi-s", dest="chi_s", default="",
                           help="torus exponents, e.g. 0/1 or 1/5,2/5")
            p.add_argument("--support", default="")
        if "torus" in extra:
            p.add_argument("--torus", required=True,
                           help="torus exponents of the point")
        if "coords" in extra:
            p.add_argument("--coords", default="both",
                           choices=("component", "highestWeight", "both"))
        p.set_defaults(func=fn)

    v = sub.add_parser("verify").add_subparsers(dest="command", required=True)
    pa = leaf(v, "appendix")
    pa.add_argument("--type", default=None)
    pa.set_defaults(func=cmd_verify_appendix)

    st = sub.add_parser("selftest", parents=[common])
    st.add_argument("--suite", default=None)
    st.set_defaults(func=cmd_selftest)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        # empty chi-s defaults to the zero character / trivial torus element
        if getattr(args, "chi_s", None) == "":
            rs = build_root_system(args.type)
            args.chi_s = ",".join(["0"] * rs.rank)
        return args.func(args)
    except LieramError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
