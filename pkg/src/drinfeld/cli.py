"""Command line interface: JSON in, JSON out.

Exit codes: 0 success, 1 mathematical failure (not an isogeny, not Drinfeld,
...), 2 malformed input.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .errors import DrinfeldError, MalformedInput, MathematicalError
from .polynomials import poly_to_str

log = logging.getLogger("drinfeld")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


# -- loading ---------------------------------------------------------------------------


def _module(path):
    return io.tmodule_from_json(io.load_json(path))


def _morphism(path):
    return io.morphism_from_json(io.load_json(path))


def _motive_or_module(args):
    from .motive import motive_of

    if args.motive:
        return io.motive_from_json(io.load_json(args.motive)), None
    if args.module:
        E = _module(args.module)
        return motive_of(E), E
    raise MalformedInput("give --module or --motive")


def _ideal(k, text):
    if text is None:
        raise MalformedInput("--ideal is required")
    if text.lstrip().startswith("["):
        import json

        return io.fq_poly_from_json(k, json.loads(text)).monic()
    return io.fq_poly_from_json(k, text).monic()


def _fq_name(k):
    return f"F_{k.q}[t]"


def _point(K, pt):
    """A point of k_m^d: per coordinate the k-coefficients of y^0..y^(m-1)."""
    return [[io.elem_to_json(K.k, c) for c in x] for x in pt]


def _ext_json(K):
    return {"base": K.k.to_json(), "m": K.m, "modulus": [io.elem_to_json(K.k, c) for c in K.g], "order": K.order}


# -- commands ----------------------------------------------------------------------------


def cmd_validate(args):
    from .motive import rank_dim

    if args.module:
        E = _module(args.module)
        out = {"kind": "tmodule", "d": E.d, "rank": E.rank, "tau_degree": int(E.tau_degree)}
        if E.d == 1:
            from .tmodule import new_drinfeld

            E2 = new_drinfeld(E.ring, E.phi)
            out["standard_form"] = io.tmodule_to_json(E2)
        return out
    if args.map:
        from .tmodule import is_isogeny_module

        f = _morphism(args.map)
        return {"kind": "morphism", "tau_degree": int(f.tau_degree()), "is_isogeny": is_isogeny_module(f)}
    if args.motive:
        M = io.motive_from_json(io.load_json(args.motive))
        r, d = rank_dim(M)
        return {"kind": "motive", "rank": r, "dimension": d}
    if args.shtuka:
        V = io.shtuka_from_json(io.load_json(args.shtuka))
        return {"kind": "fin_shtuka", "n": V.n, "etale": V.is_etale(), "nilpotent": V.is_nilpotent()}
    if args.local:
        from .local import divisibility_check

        L = io.local_from_json(io.load_json(args.local))
        return {"kind": "local_shtuka", "rank": L.r, "n": L.n, "divisible": divisibility_check(L)}
    raise MalformedInput("nothing to validate: give one of --module, --map, --motive, --shtuka, --local")


def cmd_motive(args):
    from .motive import motive_morphism_of, motive_of, rank_dim

    if args.map:
        f = _morphism(args.map)
        Mf = motive_morphism_of(f)
        return {"motive_morphism": io.motive_morphism_to_json(Mf)}
    M = motive_of(_module(args.module)) if args.module else None
    if M is None:
        raise MalformedInput("give --module or --map")
    r, d = rank_dim(M)
    return {"motive": io.motive_to_json(M), "rank": r, "dimension": d}


def cmd_inverse(args):
    from .motive import round_trip_isomorphism, tmodule_of

    if args.module:
        E = _module(args.module)
        E2, f, g = round_trip_isomorphism(E)
        return {
            "module": io.tmodule_to_json(E2),
            "isomorphism": io.morphism_to_json(f),
            "inverse": io.morphism_to_json(g),
            "verified": True,
        }
    if args.motive:
        M = io.motive_from_json(io.load_json(args.motive))
        E = tmodule_of(M)
        return {"module": io.tmodule_to_json(E), "lifts": [[io.poly_to_json(a) for a in x] for x in E.lifts]}
    raise MalformedInput("give --module or --motive")


def cmd_isogeny_check(args):
    from .motive import cokernel, cokernel_shtuka, is_isogeny_motive, motive_morphism_of
    from .tmodule import is_isogeny_module, is_separable_module

    f = _morphism(args.map)
    Mf = motive_morphism_of(f)
    mod, mot = is_isogeny_module(f), is_isogeny_motive(Mf)
    out = {"module_side": mod, "motive_side": mot, "agree": mod == mot}
    if mod and mot:
        cok = cokernel(Mf)
        V = cokernel_shtuka(Mf)
        out.update(
            {
                "separable": is_separable_module(f),
                "coker_dim": cok.dim,
                "degree": f.ring.q ** cok.dim,
                "smith_diagonal": [poly_to_str(d) for d in cok.divisors],
                "coker_etale": V.is_etale(),
            }
        )
    if not out["agree"]:
        raise MathematicalError("module and motive isogeny predicates disagree")
    return out


def cmd_kernel(args):
    from .extension import extension
    from .motive import cokernel, cokernel_shtuka, motive_morphism_of
    from .shtuka import connected_etale_split
    from .tmodule import is_isogeny_module, kernel_points, splitting_degree

    f = _morphism(args.map)
    if not is_isogeny_module(f):
        from .errors import NotAnIsogeny

        raise NotAnIsogeny("kernel points are only listed for isogenies")
    Mf = motive_morphism_of(f)
    cok = cokernel(Mf)
    et = connected_etale_split(cokernel_shtuka(Mf))[1].n
    m = args.extension or splitting_degree(f, cap=args.cap)
    K = extension(f.ring, m)
    pts = kernel_points(f, m)
    q = f.ring.q
    return {
        "splitting_degree": m,
        "field": _ext_json(K),
        "points": [_point(K, p) for p in pts],
        "count": len(pts),
        "expected": q ** et,
        "coker_dim": cok.dim,
        "etale_dim": et,
        "smith_diagonal": [poly_to_str(d) for d in cok.divisors],
    }


def cmd_torsion(args):
    from .shtuka import torsion_points, torsion_shtuka

    E = _module(args.module)
    k = E.ring
    a = _ideal(k, args.ideal)
    T = torsion_points(E, a, m=args.extension)
    V = torsion_shtuka(E, a)
    return {
        "points": [_point(T.field, p) for p in T.points],
        "count": T.order,
        "field": _ext_json(T.field),
        "invariant_factors": [poly_to_str(x) for x in T.invariant_factors],
        "module": {"rank": T.free_rank, "over": f"{_fq_name(k)}/({poly_to_str(a)})"},
        "frobenius": T.frobenius,
        "etale": V.is_etale(),
        "a_at_theta_nonzero": bool(a(k.theta)),
    }


def cmd_dual(args):
    from .isogeny import dual_isogeny, dual_isogeny_module, exponent_is_minimal

    obj = io.load_json(args.map)
    if "U" in obj:
        cert = dual_isogeny(io.motive_morphism_from_json(obj))
    else:
        cert = dual_isogeny_module(io.morphism_from_json(obj))
    out = io.dual_to_json(cert)
    out["s_minimal"] = exponent_is_minimal(cert)
    if not cert.verified:
        raise MathematicalError("dual certificate failed to verify")
    return out


def cmd_isogenous(args):
    from .isogeny import are_isogenous

    E, E2 = _module(args.module), _module(args.module2)
    if E.ring != E2.ring:
        raise MalformedInput("modules live over different rings")
    f = are_isogenous(E, E2, args.bound)
    return {"isogenous": f is not None, "map": None if f is None else io.morphism_to_json(f)}


def cmd_frobenius(args):
    from .isogeny import commutes, frobenius_isogeny
    from .motive import motive_morphism_of
    from .tmodule import end_basis

    M, E = _motive_or_module(args)
    l = args.l or M.ring.degree
    pi = frobenius_isogeny(M, l)
    out = {"l": l, "pi": [[io.poly_to_json(a) for a in row] for row in pi.U], "det": io.poly_to_json(pi.det())}
    if E is not None:
        basis = end_basis(E, args.bound if args.bound is not None else 2)
        out["end_basis_size"] = len(basis)
        out["central"] = all(commutes(pi, motive_morphism_of(u)) for u in basis)
    return out


def cmd_local(args):
    from .local import divisibility_check, is_formal, local_invariants, local_shtuka_at

    M, E = _motive_or_module(args)
    k = M.ring
    if args.prime is None:
        raise MalformedInput("--prime is required")
    p = _ideal(k, args.prime)
    L = local_shtuka_at(M, p, args.precision)
    inv = local_invariants(L)
    out = {
        "local_shtuka": io.local_to_json(L),
        "formal": is_formal(L),
        "order_exponents": inv.order_exponents,
        "omega_dim": inv.omega_dim,
        "etale_rank": inv.etale_rank,
        "local_dim": inv.local_dim,
        "divisible": divisibility_check(L),
    }
    return out


def cmd_selfcheck(args):
    from .selfcheck import run

    report = run(args.seed)
    if not report["ok"]:
        raise MathematicalError(f"self-check failed: {report['passed']}/{report['total']}")
    return report


COMMANDS = {
    "validate": cmd_validate,
    "motive": cmd_motive,
    "inverse": cmd_inverse,
    "isogeny-check": cmd_isogeny_check,
    "kernel": cmd_kernel,
    "torsion": cmd_torsion,
    "dual": cmd_dual,
    "isogenous": cmd_isogenous,
    "frobenius": cmd_frobenius,
    "local": cmd_local,
    "selfcheck": cmd_selfcheck,
}


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="drinfeld", description="Drinfeld modules, t-motives and finite shtukas over finite fields.")
    ap.add_argument("--schema", action="store_true", help="print the JSON schemas and exit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--module", help="t-module JSON file ('-' for stdin)")
        p.add_argument("--module2", help="second t-module (isogenous)")
        p.add_argument("--map", help="morphism JSON file")
        p.add_argument("--motive", help="motive JSON file")
        p.add_argument("--shtuka", help="finite shtuka JSON file")
        p.add_argument("--local", help="local shtuka JSON file")
        p.add_argument("--ideal", help='generator a of the ideal, e.g. "t^2+1" or a JSON coefficient array')
        p.add_argument("--prime", help="monic irreducible p(t) for local")
        p.add_argument("--precision", type=int, default=8, help="z-adic precision n (local)")
        p.add_argument("--extension", type=int, default=None, help="fixed extension degree m of k")
        p.add_argument("--cap", type=int, default=64, help="extension degree cap")
        p.add_argument("--bound", type=int, default=None, help="tau-degree search bound")
        p.add_argument("--l", type=int, default=None, help="Frobenius exponent")
        p.add_argument("--seed", type=int, default=0)
    return ap


def run(argv=None) -> tuple[int, dict]:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        if args.schema:
            return 0, {name: io.schema(name) for name in sorted(io.SCHEMAS)}
        if not args.command:
            raise MalformedInput("no command given")
        return 0, COMMANDS[args.command](args)
    except MalformedInput as exc:
        return 2, {"error": type(exc).__name__, "message": str(exc)}
    except MathematicalError as exc:
        return 1, {"error": type(exc).__name__, "message": str(exc)}
    except DrinfeldError as exc:
        return 1, {"error": type(exc).__name__, "message": str(exc)}


def main(argv=None) -> int:
    code, report = run(argv)
    if code:
        print(f"drinfeld: {report['error']}: {report['message']}", file=sys.stderr)
    print(io.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
