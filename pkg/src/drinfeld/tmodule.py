"""Abelian Anderson t-modules given by phi_t in R{tau}^{d x d}, and their
morphisms.

E is always G_a^d; a morphism E -> E' is a d' x d skew matrix F with
F*phi_t = phi'_t*F (composition is the matrix product).
"""

from __future__ import annotations

import numpy as np

from .errors import (
    ExtensionCapExceeded,
    NotAMorphism,
    NotAnIsogeny,
    NotDrinfeld,
    PreconditionViolated,
    UnsupportedBase,
)
from .extension import extension, linearized_matrix
from .linalg import fp_nullspace, fp_span_elements, k_identity, k_is_invertible, k_is_zero, k_mul, k_sub, k_twisted_power
from .polynomials import NEG_INF, Poly
from .rings import _prime_factors
from .skew import (
    SkewPoly,
    smat_add,
    smat_coeff,
    smat_degree,
    smat_eq,
    smat_identity,
    smat_is_zero,
    smat_mul,
    smat_sub,
    smat_zero,
    standard_form,
)


def _as_matrix(R, phi):
    if isinstance(phi, SkewPoly):
        return [[phi]]
    if phi and not isinstance(phi[0], (list, tuple)):
        return [[SkewPoly(R, phi)]]
    return [[a if isinstance(a, SkewPoly) else SkewPoly(R, a) for a in row] for row in phi]


class TModule:
    """An abelian t-module (G_a^d, phi) over a coefficient ring."""

    def __init__(self, ring, phi_t, *, check: bool = True):
        self.ring = ring
        self.phi_t = _as_matrix(ring, phi_t)
        self.d = len(self.phi_t)
        if any(len(row) != self.d for row in self.phi_t):
            raise PreconditionViolated("phi_t must be a square matrix")
        self.std_unit = None
        self._rank = None
        if check:
            self._check_lie()

    def _check_lie(self):
        R, d = self.ring, self.d
        N = k_sub(R, self.lie_t(), [[R.theta if i == j else R.zero for j in range(d)] for i in range(d)])
        P = k_identity(R, d)
        for _ in range(d):
            P = k_mul(R, P, N)
        if not k_is_zero(R, P):
            err = NotDrinfeld if d == 1 else PreconditionViolated
            raise err("Lie(phi_t) - theta is not nilpotent")

    @property
    def is_drinfeld(self) -> bool:
        return self.d == 1

    @property
    def phi(self) -> SkewPoly:
        """phi_t as a single skew polynomial (Drinfeld modules only)."""
        if self.d != 1:
            raise PreconditionViolated("not a Drinfeld module")
        return self.phi_t[0][0]

    def lie_t(self):
        return smat_coeff(self.phi_t, 0)

    @property
    def rank(self) -> int:
        if self._rank is None:
            if self.d == 1:
                self._rank = self.phi.degree()
            else:
                from .motive import motive_of

                self._rank = motive_of(self).r
        return self._rank

    @property
    def tau_degree(self):
        return smat_degree(self.phi_t)

    def phi_of(self, a):
        return phi_of(self, a)

    def A(self, text_or_coeffs) -> Poly:
        """Element of F_q[t] (coefficients in the base field of the ring)."""
        from .polynomials import parse_fq_poly

        F = self.ring.base
        if isinstance(text_or_coeffs, str):
            return parse_fq_poly(F, text_or_coeffs)
        return Poly(F, text_or_coeffs)

    def __eq__(self, other):
        return isinstance(other, TModule) and self.ring == other.ring and smat_eq(self.phi_t, other.phi_t)

    def __hash__(self):
        return hash(tuple(tuple(a.c for a in row) for row in self.phi_t))

    def __repr__(self):
        if self.d == 1:
            return f"Drinfeld({list(self.phi.c)})"
        return f"TModule(d={self.d}, phi_t={[[list(a.c) for a in row] for row in self.phi_t]})"

    def identity(self) -> "TModuleMorphism":
        return TModuleMorphism(self, self, smat_identity(self.ring, self.d), check=False)

    def endo(self, a) -> "TModuleMorphism":
        """phi_a as an endomorphism."""
        return TModuleMorphism(self, self, phi_of(self, a), check=False)


def new_drinfeld(ring, phi_t) -> TModule:
    """Validate a Drinfeld module; brings phi_t into standard form when higher
    coefficients are nilpotent (the conjugating unit is kept in std_unit)."""
    phi = phi_t if isinstance(phi_t, SkewPoly) else SkewPoly(ring, phi_t)
    if ring.theta is None:
        raise NotDrinfeld("ring has no characteristic map")
    if phi.constant() != ring.theta:
        raise NotDrinfeld("constant term of phi_t is not gamma(t)")
    units = [i for i, b in enumerate(phi.c) if i >= 1 and ring.is_unit(b)]
    if not units:
        raise NotDrinfeld("no coefficient of positive tau-degree is a unit")
    r = units[-1]
    unit = None
    if phi.degree() > r:
        unit, phi = standard_form(phi, r)
    E = TModule(ring, phi)
    E.std_unit = unit
    E._rank = r
    return E


def phi_of(E: TModule, a):
    """phi_a for a in F_q[t], by Horner's rule in R{tau}^{d x d}."""
    R, d = E.ring, E.d
    if not isinstance(a, Poly):
        a = Poly(R.base, a)
    acc = smat_zero(R, d)
    for c in reversed(a.c):
        acc = smat_mul(acc, E.phi_t)
        if c:
            s = SkewPoly.const(R, R.from_base(c))
            acc = [[x + s if i == j else x for j, x in enumerate(row)] for i, row in enumerate(acc)]
    return acc


class TModuleMorphism:
    def __init__(self, source: TModule, target: TModule, F, *, check: bool = True):
        self.source = source
        self.target = target
        self.F = _as_matrix(source.ring, F)
        if len(self.F) != target.d or any(len(row) != source.d for row in self.F):
            raise PreconditionViolated(f"morphism matrix must be {target.d} x {source.d}")
        if check and not smat_eq(smat_mul(self.F, source.phi_t), smat_mul(target.phi_t, self.F)):
            raise NotAMorphism("F * phi_t != phi'_t * F")

    @property
    def ring(self):
        return self.source.ring

    def is_zero(self) -> bool:
        return smat_is_zero(self.F)

    def __mul__(self, other: "TModuleMorphism") -> "TModuleMorphism":
        """Composition self o other."""
        return TModuleMorphism(other.source, self.target, smat_mul(self.F, other.F), check=False)

    def __add__(self, other):
        return TModuleMorphism(self.source, self.target, smat_add(self.F, other.F), check=False)

    def __sub__(self, other):
        return TModuleMorphism(self.source, self.target, smat_sub(self.F, other.F), check=False)

    def __eq__(self, other):
        return isinstance(other, TModuleMorphism) and smat_eq(self.F, other.F)

    def __repr__(self):
        return f"TModuleMorphism({[[list(a.c) for a in row] for row in self.F]})"

    def tau_degree(self):
        return smat_degree(self.F)


def lie(f: TModuleMorphism):
    return smat_coeff(f.F, 0)


def _require_field(R):
    if not getattr(R, "is_field", False):
        raise UnsupportedBase("this operation needs a finite field as base")


def is_isogeny_module(f: TModuleMorphism) -> bool:
    _require_field(f.ring)
    if f.source.d == 1 and f.target.d == 1:
        return not f.is_zero()
    if f.source.d != f.target.d:
        return False
    from .motive import is_isogeny_motive, motive_morphism_of

    return is_isogeny_motive(motive_morphism_of(f))


def is_separable_module(f: TModuleMorphism) -> bool:
    if not is_isogeny_module(f):
        raise NotAnIsogeny("separability is only defined for isogenies")
    R = f.ring
    if f.source.d == 1:
        return R.is_unit(lie(f)[0][0])
    from .motive import is_separable_motive, motive_morphism_of

    return is_separable_motive(motive_morphism_of(f))


# -- kernels over finite extensions --------------------------------------------------


def kernel_fp_matrix(F, K):
    """F_p-matrix of the additive map x -> F(x) on K^d (d = columns of F)."""
    blocks = [[linearized_matrix(K, a.c) for a in row] for row in F]
    return np.block(blocks) if blocks else np.zeros((0, 0), dtype=np.int64)


def kernel_basis(f, m: int):
    """F_p-basis (rows, concatenated F_p-coordinates) of ker f on k_m^d."""
    F = f.F if isinstance(f, TModuleMorphism) else f
    R = F[0][0].R
    _require_field(R)
    K = extension(R, m)
    return K, fp_nullspace(kernel_fp_matrix(F, K), R.p)


def kernel_dimension_fq(f, m: int) -> int:
    K, basis = kernel_basis(f, m)
    return len(basis) // K.k.q_exp


def split_point(K, v, d):
    n = K.n
    return tuple(K.from_fp_coords(v[i * n:(i + 1) * n]) for i in range(d))


def point_coords(K, pt) -> list[int]:
    out = []
    for x in pt:
        out.extend(K.fp_coords(x))
    return out


def kernel_points(f, m: int):
    """All points of ker f over k_m, each a d-tuple of k_m elements, sorted by
    their F_p-coordinate vectors."""
    F = f.F if isinstance(f, TModuleMorphism) else f
    d = len(F[0])
    K, basis = kernel_basis(F, m)
    if len(basis):
        vecs = sorted(tuple(int(x) for x in v) for v in fp_span_elements(basis, K.p))
    else:
        vecs = [(0,) * (K.n * d)]
    return [split_point(K, v, d) for v in vecs]


def splitting_degree(f, cap: int = 64) -> int:
    """Smallest m such that every geometric point of ker f is defined over
    k_m, for an isogeny f.

    With (V, F) the etale part of the cokernel shtuka of M(f) and
    Phi = F F^(q) ... F^(q^(e-1)) (e = [k : F_q]) its k-linear Frobenius,
    tau-invariants v satisfy v^(q^(em)) = Phi^(-m) v, so m is the
    multiplicative order of Phi.  The answer is checked on the kernel itself:
    dim_{F_q} ker f(k_m) is the etale dimension and drops below it for every
    m / l, l prime."""
    from .motive import cokernel_shtuka, motive_morphism_of
    from .shtuka import connected_etale_split

    R = f.source.ring
    _require_field(R)
    et = connected_etale_split(cokernel_shtuka(motive_morphism_of(f)))[1]
    n = et.n
    m = 1
    if n:
        Phi = k_twisted_power(R, et.F, R.degree)
        I = k_identity(R, n)
        P = Phi
        while P != I:
            m += 1
            if m > cap:
                raise ExtensionCapExceeded(f"kernel not split over k_m for m <= {cap}")
            P = k_mul(R, P, Phi)
    if kernel_dimension_fq(f, m) != n:
        raise AssertionError("kernel dimension over k_m does not match the etale part")
    for l in _prime_factors(m):
        if kernel_dimension_fq(f, m // l) >= n:
            raise AssertionError("kernel already split over a smaller extension")
    return m


# -- Hom spaces ---------------------------------------------------------------------------


def hom_basis(E: TModule, E2: TModule, max_degree: int):
    """F_p-basis of {F : F*phi_t = phi'_t*F, deg_tau F <= max_degree} as a
    list of skew matrices (d' x d)."""
    R = E.ring
    d, d2 = E.d, E2.d
    dim = R.dim
    nvars = d2 * d * (max_degree + 1) * dim
    out_deg = max_degree + max(E.tau_degree, E2.tau_degree)

    def unpack(vec):
        F = smat_zero(R, d2, d)
        pos = 0
        for i in range(d2):
            for j in range(d):
                coeffs = []
                for _ in range(max_degree + 1):
                    coeffs.append(R.elem([int(x) for x in vec[pos:pos + dim]]))
                    pos += dim
                F[i][j] = SkewPoly(R, coeffs)
        return F

    def image(F):
        G = smat_sub(smat_mul(F, E.phi_t), smat_mul(E2.phi_t, F))
        vec = []
        for row in G:
            for a in row:
                for n in range(out_deg + 1):
                    vec.extend(R.coords(a.coeff(n)))
        return vec

    cols = []
    for v in range(nvars):
        e = np.zeros(nvars, dtype=np.int64)
        e[v] = 1
        cols.append(image(unpack(e)))
    M = np.array(cols, dtype=np.int64).T
    return [unpack(v) for v in fp_nullspace(M, R.p)]


def end_basis(E: TModule, max_degree: int):
    return [TModuleMorphism(E, E, F, check=False) for F in hom_basis(E, E, max_degree)]


def find_isomorphism(E: TModule, E2: TModule):
    """An isomorphism E -> E' of tau-degree 0 (a matrix in GL_d(k)), or None."""
    _require_field(E.ring)
    if E.d != E2.d:
        return None
    R = E.ring
    basis = hom_basis(E, E2, 0)
    if not basis:
        return None
    for F in basis:
        if k_is_invertible(R, smat_coeff(F, 0)):
            return TModuleMorphism(E, E2, F, check=False)
    # d > 1: search small combinations
    for vec in fp_span_elements(np.eye(len(basis), dtype=np.int64), R.p):
        if not vec.any():
            continue
        F = smat_zero(R, E2.d, E.d)
        for c, B in zip(vec, basis):
            for _ in range(int(c)):
                F = smat_add(F, B)
        if k_is_invertible(R, smat_coeff(F, 0)):
            return TModuleMorphism(E, E2, F, check=False)
    return None


def tau_power(E: TModule, n: int):
    """tau^n * I as a skew matrix."""
    R = E.ring
    return [[SkewPoly.tau(R, n) if i == j else SkewPoly(R) for j in range(E.d)] for i in range(E.d)]


def frobenius_twist(E: TModule, n: int = 1) -> TModule:
    """E^(q^n): phi_t with all coefficients raised to q^n, so that
    tau^n: E -> E^(q^n).  Needs theta in F_q (the twist keeps gamma)."""
    R = E.ring
    if R.frob(R.theta, n) != R.theta:
        raise PreconditionViolated("the Frobenius twist changes gamma(t) unless theta lies in F_q")
    twisted = [[a.twist(n) for a in row] for row in E.phi_t]
    F = TModule(R, twisted)
    F._rank = E._rank
    return F


__all__ = [
    "TModule",
    "TModuleMorphism",
    "new_drinfeld",
    "phi_of",
    "lie",
    "is_isogeny_module",
    "is_separable_module",
    "kernel_points",
    "kernel_basis",
    "splitting_degree",
    "hom_basis",
    "end_basis",
    "find_isomorphism",
    "frobenius_twist",
    "NEG_INF",
]
