"""Batch command line front-end.

Commands: validate, center-basis, is-central, discriminant, verify
(theorem-b | theorem-71 | prop33 | specz), poisson, aut-check, isomorphic,
acceptance.  Exit codes: 0 on success or a verified claim, 1 on a
verification failure, 2 on bad input.  Reports are deterministic for a fixed
seed and are emitted as JSON by default (use --format text for plain lines).
"""

import argparse
import json
import sys

from . import params as params_mod
from .params import ParamError, WeylParams
from .polyring import MPoly
from .weyl import WeylAlgebra
from .center import (center_spanning_monomials, spanning_element, is_central,
                     verify_specz, Z_center_poly, CenterPoly, center_ring)
from .discriminant import discriminant, verify_discriminant
from .poisson import verify_prop33, prop33_table, poisson_bracket, q_deform
from .exprs import parse_element, parse_scalar, ParseError
from .autos import AutError, build_automorphism, verify_homomorphism, \
    isomorphic, aut_group_shape
from .acceptance import run_all, _CRITERIA


class InputError(ValueError):
    pass


def _load_params(path, mode):
    try:
        P = params_mod.load(path)
    except (OSError, json.JSONDecodeError, ParamError) as e:
        raise InputError("cannot load parameters from %s: %s" % (path, e))
    if mode == "c" and not P.c_formal:
        P = WeylParams(P.n, P.eps, P.beta, c_formal=True,
                       q_deformed=P.q_deformed, formal_units=P.formal_units)
    elif mode == "unit" and P.c_formal:
        P = WeylParams(P.n, P.eps, P.beta, c_formal=False,
                       q_deformed=P.q_deformed, formal_units=P.formal_units)
    return P


def _parse_L(text, P):
    if text is None:
        return [d for _, d in P.eps]
    try:
        L = [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError("--L must be a comma-separated list of integers")
    if len(L) != P.n:
        raise InputError("--L needs exactly n = %d entries" % P.n)
    return L


def _emit(report, fmt):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _emit_text(report, "")


def _emit_text(value, prefix):
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                print("%s%s:" % (prefix, k))
                _emit_text(v, prefix + "  ")
            else:
                print("%s%s: %s" % (prefix, k, v))
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                _emit_text(v, prefix + "  ")
            else:
                print("%s- %s" % (prefix, v))
    else:
        print("%s%s" % (prefix, value))


# -- command implementations (each returns (exit_code, report)) ------------

def cmd_validate(args):
    P = _load_params(args.params, args.mode)
    return 0, {"valid": True, "n": P.n, "D": P.D,
               "free_over_center": P.is_free_over_center(),
               "params": P.to_json()}


def cmd_center_basis(args):
    P = _load_params(args.params, args.mode)
    A = WeylAlgebra(P)
    out = []
    for b, a in center_spanning_monomials(P, args.bound):
        out.append({"b": list(b), "a": list(a),
                    "element": repr(spanning_element(A, b, a))})
    return 0, {"bound": args.bound, "count": len(out), "basis": out}


def cmd_is_central(args):
    P = _load_params(args.params, args.mode)
    if args.element is None:
        raise InputError("is-central needs --element")
    A = WeylAlgebra(P)
    try:
        u = parse_element(args.element, A)
    except ParseError as e:
        raise InputError("bad element: %s" % e)
    return 0, {"element": repr(u), "central": is_central(u)}


def cmd_discriminant(args):
    P = _load_params(args.params, args.mode)
    L = _parse_L(args.L, P)
    det = discriminant(P, L)
    return 0, {"L": list(det.L), "discriminant": repr(det.poly)}


def cmd_verify(args):
    P = _load_params(args.params, args.mode)
    if args.which in ("theorem-b", "theorem-71"):
        L = _parse_L(args.L, P)
        rep = verify_discriminant(P, L, args.which)
        ok = rep["associate"]
        return (0 if ok else 1), {"which": args.which, "verified": ok,
                                  "report": rep}
    if args.which == "prop33":
        rep = verify_prop33(P)
        ok = all(rep.values())
        return (0 if ok else 1), {"which": args.which, "verified": ok,
                                  "brackets": rep}
    if args.which == "specz":
        rep = {}
        for j in range(P.n + 1):
            rep["z%d" % j] = verify_specz(P, j)
        ok = all(rep.values())
        return (0 if ok else 1), {"which": args.which, "verified": ok,
                                  "levels": rep}
    raise InputError("unknown verification target %r" % args.which)


def cmd_poisson(args):
    P = _load_params(args.params, args.mode)
    Aq = WeylAlgebra(q_deform(P))
    ring = center_ring(P)
    L = [d for _, d in P.eps]
    expected = prop33_table(P)
    gens = {}
    for j in range(1, P.n + 1):
        gens[("X", j)] = CenterPoly(P, MPoly.variable(ring, "X%d" % j, P.D), L)
        gens[("Y", j)] = CenterPoly(P, MPoly.variable(ring, "Y%d" % j, P.D), L)
        gens[("Z", j)] = Z_center_poly(P, j)
    out = {}
    for (s1, j, s2, k), rhs in sorted(expected.items()):
        val = poisson_bracket(gens[(s1, j)], gens[(s2, k)], Aq)
        out["{%s%d,%s%d}" % (s1, j, s2, k)] = {
            "value": repr(val.poly), "matches_table": val.poly == rhs}
    ok = all(v["matches_table"] for v in out.values())
    return (0 if ok else 1), {"verified": ok, "brackets": out}


def cmd_aut_check(args):
    if args.spec is None:
        raise InputError("aut-check needs --spec FILE")
    try:
        with open(args.spec) as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError("cannot load spec: %s" % e)
    try:
        source = params_mod.validate(raw["source"])
        target = params_mod.validate(raw.get("target", raw["source"]))
        tau = [int(t) for t in raw["tau"]]
        mu_raw = raw["mu"]
        nu_raw = raw["nu"]
    except (KeyError, TypeError, ValueError, ParamError) as e:
        raise InputError("malformed spec: %s" % e)
    A = WeylAlgebra(target)
    try:
        mu = [parse_scalar(str(s), A) for s in mu_raw]
        nu = [parse_scalar(str(s), A) for s in nu_raw]
    except ParseError as e:
        raise InputError("bad scalar: %s" % e)
    try:
        spec = build_automorphism(source, target, tau, mu, nu, A)
    except AutError as e:
        return 1, {"accepted": False, "reason": str(e)}
    ok = verify_homomorphism(spec)
    return (0 if ok else 1), {"accepted": True, "verified": ok,
                              "tau": list(spec.tau)}


def cmd_isomorphic(args):
    if args.params2 is None:
        raise InputError("isomorphic needs --params2")
    P1 = _load_params(args.params, args.mode)
    P2 = _load_params(args.params2, args.mode)
    try:
        tau = isomorphic(P1, P2)
    except ParamError as e:
        raise InputError(str(e))
    rep = {"isomorphic": tau is not None,
           "shape1": aut_group_shape(P1), "shape2": aut_group_shape(P2)}
    if tau is not None:
        rep["tau"] = list(tau)
    return 0, rep


def cmd_acceptance(args):
    if args.only:
        try:
            picks = sorted({int(v) for v in args.only.split(",")})
        except ValueError:
            raise InputError("--only must be a comma-separated list")
        if any(not 1 <= p <= len(_CRITERIA) for p in picks):
            raise InputError("criterion ids run from 1 to %d" % len(_CRITERIA))
        reports = [_CRITERIA[p - 1](args.seed) for p in picks]
    else:
        reports = run_all(args.seed)
    ok = all(r["ok"] for r in reports)
    return (0 if ok else 1), {"seed": args.seed, "all_ok": ok,
                              "criteria": reports}


def build_parser():
    p = argparse.ArgumentParser(
        prog="qweyl",
        description="Exact computations in PI quantized Weyl algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_params=True):
        if needs_params:
            sp.add_argument("--params", required=True,
                            help="parameter JSON file")
        sp.add_argument("--mode", choices=("c", "unit"), default=None,
                        help="override the z0 mode of the parameter file")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("validate", help="check a parameter file")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("center-basis",
                        help="central spanning monomials up to a degree")
    common(sp)
    sp.add_argument("--bound", type=int, default=6)
    sp.set_defaults(fn=cmd_center_basis)

    sp = sub.add_parser("is-central", help="test an element for centrality")
    common(sp)
    sp.add_argument("--element", help="expression, e.g. 'y1^2 + e^3*x1^2'")
    sp.set_defaults(fn=cmd_is_central)

    sp = sub.add_parser("discriminant",
                        help="trace-pairing determinant over the L-th powers")
    common(sp)
    sp.add_argument("--L", help="comma-separated exponents, default d_j")
    sp.set_defaults(fn=cmd_discriminant)

    sp = sub.add_parser("verify", help="check a closed form or identity")
    sp.add_argument("which",
                    choices=("theorem-b", "theorem-71", "prop33", "specz"))
    common(sp)
    sp.add_argument("--L", help="comma-separated exponents, default d_j")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("poisson",
                        help="bracket table of the center generators")
    common(sp)
    sp.set_defaults(fn=cmd_poisson)

    sp = sub.add_parser("aut-check", help="validate a morphism spec file")
    sp.add_argument("--spec", help="JSON with source, target, tau, mu, nu")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(fn=cmd_aut_check)

    sp = sub.add_parser("isomorphic",
                        help="search for a sign pattern matching two "
                             "parameter sets")
    common(sp)
    sp.add_argument("--params2", required=True)
    sp.set_defaults(fn=cmd_isomorphic)

    sp = sub.add_parser("acceptance", help="run the acceptance suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--only", help="subset of criteria, e.g. '1,3,5'")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(fn=cmd_acceptance)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "mode"):
        args.mode = None
    try:
        code, report = args.fn(args)
    except InputError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    except ParamError as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
