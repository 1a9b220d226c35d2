"""JSON encoding of rings, skew polynomials, t-modules, motives, shtukas and
local shtukas.

Ring elements are coordinate arrays over F_p (ascending powers of the
generator x; for k[eps]/(eps^N) the k-coordinates of eps^0, eps^1, ...
concatenated).  Polynomials in t are ascending arrays of ring elements, or a
string such as ``"t^2 + t + 1"`` when the coefficients lie in F_p.
Every encoder is the exact inverse of its decoder.
"""

from __future__ import annotations

import json

import jsonschema

from .errors import MalformedInput
from .motive import MotiveMorphism, TMotive
from .polynomials import Poly, parse_fq_poly, poly_to_str
from .rings import ring_from_json
from .shtuka import FinShtuka, GroupSchemePresentation
from .skew import SkewPoly
from .tmodule import TModule, TModuleMorphism

_ELEM = {"oneOf": [{"type": "array", "items": {"type": "integer"}}, {"type": "integer", "minimum": 0}]}
_POLY = {"oneOf": [{"type": "array", "items": _ELEM}, {"type": "string"}]}
_SKEW = {
    "type": "object",
    "properties": {"coeffs": {"type": "array", "items": _ELEM}},
    "required": ["coeffs"],
}


def _matrix(item):
    return {"type": "array", "items": {"type": "array", "items": item}}


SCHEMAS = {
    "ring": {
        "type": "object",
        "properties": {
            "p": {"type": "integer"},
            "q": {"type": "integer"},
            "kind": {"enum": ["finite_field", "truncated"]},
            "degree": {"type": "integer"},
            "modulus": {"type": "array", "items": {"type": "integer"}},
            "theta": _ELEM,
            "nil_index": {"type": "integer", "minimum": 1},
        },
        "required": ["p", "modulus"],
    },
    "skew_poly": _SKEW,
    "tmodule": {
        "type": "object",
        "properties": {
            "ring": {"$ref": "#/definitions/ring"},
            "d": {"type": "integer", "minimum": 1},
            "phi_t": {"oneOf": [_matrix(_SKEW), _SKEW]},
        },
        "required": ["ring", "phi_t"],
    },
    "morphism": {
        "type": "object",
        "properties": {
            "from": {"type": "object"},
            "to": {"type": "object"},
            "F": _matrix(_SKEW),
        },
        "required": ["from", "to", "F"],
    },
    "motive": {
        "type": "object",
        "properties": {
            "ring": {"$ref": "#/definitions/ring"},
            "r": {"type": "integer", "minimum": 1},
            "T": _matrix(_POLY),
        },
        "required": ["ring", "T"],
    },
    "motive_morphism": {
        "type": "object",
        "properties": {"from": {"type": "object"}, "to": {"type": "object"}, "U": _matrix(_POLY)},
        "required": ["from", "to", "U"],
    },
    "fin_shtuka": {
        "type": "object",
        "properties": {
            "ring": {"$ref": "#/definitions/ring"},
            "n": {"type": "integer", "minimum": 0},
            "F": _matrix(_ELEM),
            "t_action": _matrix(_ELEM),
        },
        "required": ["ring", "F"],
    },
    "group_scheme": {
        "type": "object",
        "properties": {"ring": {"$ref": "#/definitions/ring"}, "C": _matrix(_ELEM)},
        "required": ["ring", "C"],
    },
    "dual_certificate": {
        "type": "object",
        "properties": {
            "g": {"type": "object"},
            "a": {"type": "string"},
            "a_coeffs": {"type": "array", "items": _ELEM},
            "s": {"type": "integer"},
            "verified": {"type": "boolean"},
        },
        "required": ["g", "a", "s", "verified"],
    },
    "local_shtuka": {
        "type": "object",
        "properties": {
            "ring": {"$ref": "#/definitions/ring"},
            "p": _POLY,
            "n": {"type": "integer", "minimum": 1},
            "Mhat_rank": {"type": "integer"},
            "Tauhat": _matrix({"type": "array", "items": _ELEM}),
            "omega": {"type": "array", "items": _ELEM},
        },
        "required": ["ring", "p", "n", "Tauhat"],
    },
}


def schema(kind: str) -> dict:
    out = dict(SCHEMAS[kind])
    out["definitions"] = {"ring": SCHEMAS["ring"]}
    return out


def validate(obj, kind: str):
    try:
        jsonschema.validate(obj, schema(kind))
    except jsonschema.ValidationError as exc:
        raise MalformedInput(f"{kind}: {exc.message}") from None


def dumps(obj) -> str:
    """Canonical text: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


# -- elements and polynomials -----------------------------------------------------


def elem_to_json(R, x) -> list[int]:
    v = R.coords(x)
    while v and v[-1] == 0:
        v.pop()
    return v


def elem_from_json(R, v):
    if isinstance(v, bool):
        raise MalformedInput(f"{v!r} is not a ring element")
    if isinstance(v, int):
        # packed base-p digits, the internal form of field elements
        F = R.base
        if not 0 <= v < F.order:
            raise MalformedInput(f"{v} is not an element of F_{F.order}")
        return R.from_base(v)
    if not isinstance(v, (list, tuple)) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        raise MalformedInput(f"{v!r} is not a coordinate array")
    if any(not 0 <= c < R.p for c in v):
        raise MalformedInput(f"coordinates {v} are not reduced mod p = {R.p}")
    return R.elem(v)


def poly_to_json(a: Poly) -> list:
    return [elem_to_json(a.F, x) for x in a.c]


def poly_from_json(F, v) -> Poly:
    if isinstance(v, str):
        return parse_fq_poly(F, v)
    if not isinstance(v, (list, tuple)):
        raise MalformedInput(f"{v!r} is not a polynomial")
    return Poly(F, [elem_from_json(F, x) for x in v])


def fq_poly_from_json(F, v) -> Poly:
    a = poly_from_json(F, v)
    if not a.is_fq_rational():
        raise MalformedInput(f"{poly_to_str(a)} does not have coefficients in F_{F.q}")
    return a


def _pmat(F, rows):
    return [[poly_from_json(F, x) for x in row] for row in rows]


def _emat(R, rows):
    return [[elem_from_json(R, x) for x in row] for row in rows]


def skew_to_json(b: SkewPoly) -> dict:
    return {"coeffs": [elem_to_json(b.R, x) for x in b.c]}


def skew_from_json(R, obj) -> SkewPoly:
    validate(obj, "skew_poly")
    return SkewPoly(R, [elem_from_json(R, x) for x in obj["coeffs"]])


# -- t-modules -------------------------------------------------------------------------


def tmodule_to_json(E: TModule) -> dict:
    return {
        "ring": E.ring.to_json(),
        "d": E.d,
        "phi_t": [[skew_to_json(a) for a in row] for row in E.phi_t],
    }


def tmodule_from_json(obj) -> TModule:
    validate(obj, "tmodule")
    R = ring_from_json(obj["ring"])
    if R.theta is None:
        raise MalformedInput("the ring descriptor needs theta = gamma(t)")
    phi = obj["phi_t"]
    if isinstance(phi, dict):
        phi = [[phi]]
    mat = [[skew_from_json(R, x) for x in row] for row in phi]
    if "d" in obj and obj["d"] != len(mat):
        raise MalformedInput(f"d = {obj['d']} but phi_t has {len(mat)} rows")
    if any(len(row) != len(mat) for row in mat):
        raise MalformedInput("phi_t must be square")
    return TModule(R, mat)


def morphism_to_json(f: TModuleMorphism) -> dict:
    return {
        "from": tmodule_to_json(f.source),
        "to": tmodule_to_json(f.target),
        "F": [[skew_to_json(a) for a in row] for row in f.F],
    }


def morphism_from_json(obj) -> TModuleMorphism:
    validate(obj, "morphism")
    E = tmodule_from_json(obj["from"])
    E2 = tmodule_from_json(obj["to"])
    if E.ring != E2.ring:
        raise MalformedInput("source and target live over different rings")
    F = [[skew_from_json(E.ring, x) for x in row] for row in obj["F"]]
    if len(F) != E2.d or any(len(row) != E.d for row in F):
        raise MalformedInput(f"F must be {E2.d} x {E.d}")
    return TModuleMorphism(E, E2, F)


# -- motives ----------------------------------------------------------------------------


def motive_to_json(M: TMotive) -> dict:
    return {
        "ring": M.ring.to_json(),
        "r": M.r,
        "T": [[poly_to_json(a) for a in row] for row in M.T],
    }


def motive_from_json(obj) -> TMotive:
    validate(obj, "motive")
    R = ring_from_json(obj["ring"])
    if not getattr(R, "is_field", False):
        raise MalformedInput("motives need a finite field as base")
    T = _pmat(R, obj["T"])
    if "r" in obj and obj["r"] != len(T):
        raise MalformedInput(f"r = {obj['r']} but T has {len(T)} rows")
    if any(len(row) != len(T) for row in T):
        raise MalformedInput("T must be square")
    return TMotive(R, T)


def motive_morphism_to_json(f: MotiveMorphism) -> dict:
    return {
        "from": motive_to_json(f.source),
        "to": motive_to_json(f.target),
        "U": [[poly_to_json(a) for a in row] for row in f.U],
    }


def motive_morphism_from_json(obj) -> MotiveMorphism:
    validate(obj, "motive_morphism")
    M = motive_from_json(obj["from"])
    M2 = motive_from_json(obj["to"])
    if M.ring != M2.ring:
        raise MalformedInput("source and target live over different rings")
    U = _pmat(M.ring, obj["U"])
    if len(U) != M2.r or any(len(row) != M.r for row in U):
        raise MalformedInput(f"U must be {M2.r} x {M.r}")
    return MotiveMorphism(M, M2, U)


# -- finite shtukas -----------------------------------------------------------------------


def shtuka_to_json(V: FinShtuka) -> dict:
    R = V.ring
    out = {"ring": R.to_json(), "n": V.n, "F": [[elem_to_json(R, x) for x in row] for row in V.F]}
    if V.t_action is not None:
        out["t_action"] = [[elem_to_json(R, x) for x in row] for row in V.t_action]
    return out


def shtuka_from_json(obj) -> FinShtuka:
    validate(obj, "fin_shtuka")
    R = ring_from_json(obj["ring"])
    F = _emat(R, obj["F"])
    if "n" in obj and obj["n"] != len(F):
        raise MalformedInput(f"n = {obj['n']} but F has {len(F)} rows")
    t_action = _emat(R, obj["t_action"]) if "t_action" in obj else None
    return FinShtuka(R, F, t_action)


def presentation_to_json(G: GroupSchemePresentation) -> dict:
    R = G.ring
    return {"ring": R.to_json(), "C": [[elem_to_json(R, x) for x in row] for row in G.C]}


def presentation_from_json(obj) -> GroupSchemePresentation:
    validate(obj, "group_scheme")
    R = ring_from_json(obj["ring"])
    return GroupSchemePresentation(R, _emat(R, obj["C"]))


# -- certificates and local shtukas ------------------------------------------------------


def fq_poly_out(a: Poly) -> dict:
    return {"a": poly_to_str(a), "a_coeffs": poly_to_json(a)}


def dual_to_json(cert) -> dict:
    g = cert.g
    out = {
        "g": morphism_to_json(g) if isinstance(g, TModuleMorphism) else motive_morphism_to_json(g),
        "s": cert.s,
        "verified": cert.verified,
        "checks": dict(sorted(cert.checked.items())),
    }
    out.update(fq_poly_out(cert.a))
    return out


def local_to_json(L) -> dict:
    k = L.ring
    series = lambda x: [elem_to_json(k, c) for c in x]  # noqa: E731
    return {
        "ring": k.to_json(),
        "p": poly_to_json(L.eps),
        "n": L.n,
        "Mhat_rank": L.r,
        "Tauhat": [[series(x) for x in row] for row in L.Tauhat],
        "omega": series(L.omega),
    }


def local_from_json(obj):
    from .local import LocalShtuka

    validate(obj, "local_shtuka")
    k = ring_from_json(obj["ring"])
    n = obj["n"]
    p = fq_poly_from_json(k, obj["p"])

    def series(v):
        if len(v) > n:
            raise MalformedInput(f"series longer than the precision {n}")
        cs = [elem_from_json(k, c) for c in v]
        return tuple(cs + [0] * (n - len(cs)))

    Tauhat = [[series(x) for x in row] for row in obj["Tauhat"]]
    if any(len(row) != len(Tauhat) for row in Tauhat):
        raise MalformedInput("Tauhat must be square")
    omega = series(obj.get("omega", []))
    return LocalShtuka(k, p, int(p.degree()), n, Tauhat, omega)


def load_json(path: str):
    try:
        if path == "-":
            import sys

            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


__all__ = [
    "SCHEMAS",
    "schema",
    "validate",
    "dumps",
    "elem_to_json",
    "elem_from_json",
    "poly_to_json",
    "poly_from_json",
    "fq_poly_from_json",
    "skew_to_json",
    "skew_from_json",
    "tmodule_to_json",
    "tmodule_from_json",
    "morphism_to_json",
    "morphism_from_json",
    "motive_to_json",
    "motive_from_json",
    "motive_morphism_to_json",
    "motive_morphism_from_json",
    "shtuka_to_json",
    "shtuka_from_json",
    "presentation_to_json",
    "presentation_from_json",
    "dual_to_json",
    "local_to_json",
    "local_from_json",
    "load_json",
]
