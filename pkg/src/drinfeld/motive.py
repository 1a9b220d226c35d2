"""Effective t-motives over a finite field k and the functor E -> M(E).

A motive is a free k[t]-module of rank r with tau_M given in a fixed basis by
x -> T*x^(q) (coordinates are columns, q-power on coefficients, t fixed).

For a t-module E with phi_t of tau-degree s and invertible top coefficient
matrix, M(E) = k{tau}^{1 x d} with t acting by right multiplication by
phi_t; its k[t]-basis is tau^l e_i (0 <= l < s) at index l*d + i.
Coordinates of a row vector come from repeated right division by phi_t.
"""

from __future__ import annotations

from .errors import (
    NotAbelian,
    NotAMorphism,
    NotAnIsogeny,
    NotEffective,
    PreconditionViolated,
    SingularLeadingMatrix,
    UnsupportedBase,
    UnsupportedShape,
)
from .linalg import k_inverse, k_apply
from .polynomials import (
    NEG_INF,
    Poly,
    fq_closure,
    pmat_adjugate,
    pmat_apply,
    pmat_det,
    pmat_eq,
    pmat_frob,
    pmat_identity,
    pmat_mul,
    pmat_scalar,
    smith_normal_form,
)
from .skew import (
    SkewPoly,
    right_divmod,
    smat_coeff,
    smat_degree,
    smat_identity,
    smat_mul,
    smat_right_divmod,
)
from .linalg import k_is_invertible


class TMotive:
    def __init__(self, ring, T, provenance=None, *, check: bool = True):
        if not getattr(ring, "is_field", False):
            raise UnsupportedBase("motives are only supported over finite fields")
        self.ring = ring
        self.T = [[a if isinstance(a, Poly) else Poly(ring, a) for a in row] for row in T]
        self.r = len(self.T)
        if any(len(row) != self.r for row in self.T):
            raise PreconditionViolated("T must be square")
        self.provenance = provenance
        self._cok = None
        if check and not pmat_det(self.T):
            raise NotEffective("det T = 0: tau_M is not injective")

    def __repr__(self):
        return f"TMotive(r={self.r}, T={[[list(a.c) for a in row] for row in self.T]})"

    def __eq__(self, other):
        return isinstance(other, TMotive) and self.ring == other.ring and pmat_eq(self.T, other.T)

    def tau(self, x):
        """tau_M applied to a coordinate column x."""
        return pmat_apply(self.T, [a.frob() for a in x])

    def identity(self) -> "MotiveMorphism":
        return MotiveMorphism(self, self, pmat_identity(self.ring, self.r), check=False)

    def scalar(self, a: Poly) -> "MotiveMorphism":
        """Multiplication by a in F_q[t]."""
        return MotiveMorphism(self, self, pmat_scalar(self.ring, self.r, a))

    def det_T(self) -> Poly:
        return pmat_det(self.T)

    def cokernel_of_tau(self):
        if self._cok is None:
            self._cok = Cokernel(self.T)
        return self._cok


class MotiveMorphism:
    """U: source -> target with U*T_source = T_target*U^(q)."""

    def __init__(self, source: TMotive, target: TMotive, U, *, check: bool = True):
        self.source = source
        self.target = target
        F = source.ring
        self.U = [[a if isinstance(a, Poly) else Poly(F, a) for a in row] for row in U]
        if len(self.U) != target.r or any(len(row) != source.r for row in self.U):
            raise PreconditionViolated(f"U must be {target.r} x {source.r}")
        if check and not self.is_semilinear():
            raise NotAMorphism("U*T != T'*U^(q)")

    def is_semilinear(self) -> bool:
        return pmat_eq(pmat_mul(self.U, self.source.T), pmat_mul(self.target.T, pmat_frob(self.U)))

    def __mul__(self, other: "MotiveMorphism") -> "MotiveMorphism":
        """Composition self o other."""
        return MotiveMorphism(other.source, self.target, pmat_mul(self.U, other.U), check=False)

    def __eq__(self, other):
        return isinstance(other, MotiveMorphism) and pmat_eq(self.U, other.U)

    def __repr__(self):
        return f"MotiveMorphism({[[list(a.c) for a in row] for row in self.U]})"

    def det(self) -> Poly:
        if len(self.U) != len(self.U[0]):
            return Poly(self.source.ring)
        return pmat_det(self.U)


# -- quotients k[t]^r / A k[t]^r ------------------------------------------------------


class Cokernel:
    """k-linear model of k[t]^n / A*k[t]^n for square A with det A != 0.

    With P*A*Q = D (Smith form) the quotient is sum k[t]/(d_i); the k-basis
    is P^-1 (t^j e_i), j < deg d_i, and coordinates of y are the coefficients
    of (P y)_i mod d_i.
    """

    def __init__(self, A):
        self.A = A
        F = A[0][0].F
        self.F = F
        P, D, Q = smith_normal_form(A)
        self.P, self.D, self.Q = P, D, Q
        self.divisors = [D[i][i] for i in range(len(D))]
        if any(not d for d in self.divisors):
            raise NotAnIsogeny("matrix is singular: cokernel is not finite")
        self.slots = [(i, int(d.degree())) for i, d in enumerate(self.divisors) if d.degree() > 0]
        self.dim = sum(n for _, n in self.slots)
        detP = pmat_det(P)
        inv = F.inv(detP.c[0])
        self.Pinv = [[a * inv for a in row] for row in pmat_adjugate(P)]
        self._basis = None

    def coords(self, y) -> list:
        Py = pmat_apply(self.P, y)
        out = []
        for i, n in self.slots:
            rem = Py[i] % self.divisors[i]
            out.extend(rem.coeff(j) for j in range(n))
        return out

    def basis(self):
        if self._basis is None:
            out = []
            for i, n in self.slots:
                col = [row[i] for row in self.Pinv]
                for j in range(n):
                    out.append([a.shift(j) for a in col])
            self._basis = out
        return self._basis

    def lift(self, v):
        """A preimage in k[t]^n of the coordinate vector v."""
        F = self.F
        acc = [Poly(F) for _ in range(len(self.A))]
        for c, b in zip(v, self.basis()):
            if c:
                acc = [x + y * c for x, y in zip(acc, b)]
        return acc


# -- the functor M --------------------------------------------------------------------


def _top_degree(E):
    s = smat_degree(E.phi_t)
    if s == NEG_INF or s < 1:
        raise UnsupportedShape("phi_t has no positive tau-degree")
    return s


def motive_of(E) -> TMotive:
    cached = getattr(E, "_motive", None)
    if cached is not None:
        return cached
    R = E.ring
    if not getattr(R, "is_field", False):
        raise UnsupportedBase("motives are only supported over finite fields")
    s = _top_degree(E)
    if E.d > 1 and not k_is_invertible(R, smat_coeff(E.phi_t, s)):
        raise UnsupportedShape("top coefficient matrix of phi_t is not invertible")
    d = E.d
    r = s * d
    cols = []
    for l in range(s):
        for i in range(d):
            row = [SkewPoly.tau(R, l + 1) if j == i else SkewPoly(R) for j in range(d)]
            cols.append(module_coords(E, row))
    T = [[cols[j][i] for j in range(r)] for i in range(r)]
    M = TMotive(R, T, provenance=E, check=False)
    E._motive = M
    return M


def module_coords(E, row) -> list[Poly]:
    """k[t]-coordinates in M(E) of a row vector in k{tau}^{1 x d}."""
    R = E.ring
    d = E.d
    s = _top_degree(E)
    r = s * d
    digits = []  # remainders, one per power of t
    if d == 1:
        phi = E.phi
        c = row[0]
        while c:
            g, h = right_divmod(c, phi)
            digits.append([h])
            c = g
    else:
        C = [list(row)]
        while any(C[0]):
            G, H = smat_right_divmod(C, E.phi_t)
            digits.append(H[0])
            C = G
    out = []
    for l in range(s):
        for i in range(d):
            out.append(Poly(R, [dig[i].coeff(l) for dig in digits]))
    assert len(out) == r
    return out


def coords_to_row(E, x) -> list[SkewPoly]:
    """Inverse of module_coords: sum x_{l,i}(t) * tau^l e_i as a row vector."""
    R = E.ring
    d = E.d
    s = _top_degree(E)
    maxdeg = max((a.degree() for a in x), default=NEG_INF)
    out = [SkewPoly(R) for _ in range(d)]
    if maxdeg == NEG_INF:
        return out
    power = smat_identity(R, d)
    for j in range(int(maxdeg) + 1):
        for l in range(s):
            for i in range(d):
                c = x[l * d + i].coeff(j)
                if c:
                    left = SkewPoly(R, [R.zero] * l + [c])
                    out = [acc + left * power[i][col] for col, acc in enumerate(out)]
        power = smat_mul(power, E.phi_t)
    return out


def motive_morphism_of(f) -> MotiveMorphism:
    """M(f): M(E') -> M(E) for f: E -> E', m' -> m'*F."""
    E, E2 = f.source, f.target
    M, M2 = motive_of(E), motive_of(E2)
    R = E.ring
    s2 = _top_degree(E2)
    cols = []
    for l in range(s2):
        for i in range(E2.d):
            row = [SkewPoly.tau(R, l) * a for a in f.F[i]]
            cols.append(module_coords(E, row))
    U = [[cols[j][i] for j in range(M2.r)] for i in range(M.r)]
    return MotiveMorphism(M2, M, U, check=False)


# -- rank, dimension, and the inverse functor ----------------------------------------------


def rank_dim(M: TMotive):
    """(r, d): rank and dimension; every elementary divisor of T must be a
    power of (t - theta)."""
    F = M.ring
    J = Poly(F, [F.neg(F.theta), 1])
    d = 0
    for e in M.cokernel_of_tau().divisors:
        n = int(e.degree())
        if n > 0 and e != J ** n:
            raise NotEffective(f"elementary divisor {e} is not a power of (t - theta)")
        d += n
    return M.r, d


def _W(M: TMotive, x, n: int):
    cols = [x]
    for _ in range(n - 1):
        cols.append(M.tau(cols[-1]))
    return [[c[i] for c in cols] for i in range(M.r)]


def _delta(M, x):
    return pmat_det(_W(M, x, M.r)).degree()


def _generator_by_reduction(M: TMotive, bound: int):
    """An element x with det[x, tau x, ..., tau^(r-1) x] a nonzero constant.

    deg det[x, ..., tau^(r-1) x] is the tau-degree of x when M = k{tau} x_0.
    A k[t]-basis is reduced by cancelling leading terms between vectors whose
    degrees agree mod r; a reduced basis has degrees {0, ..., r-1}.
    """
    F = M.ring
    r = M.r
    basis = [[Poly(F, (1,)) if i == j else Poly(F) for i in range(r)] for j in range(r)]
    deg = [_delta(M, b) for b in basis]
    for _ in range(bound):
        if any(dg == NEG_INF for dg in deg):
            raise NotAbelian("tau-orbit of a basis vector is k[t]-dependent")
        clash = None
        for i in range(r):
            for j in range(r):
                if i != j and deg[i] % r == deg[j] % r and deg[i] >= deg[j]:
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            break
        i, j = clash
        n = int(deg[i])
        y = [a.shift((n - int(deg[j])) // r) for a in basis[j]]
        Wy = _W(M, y, r)
        num = pmat_det([[basis[i][row]] + Wy[row][1:] for row in range(r)]).coeff(n)
        den = pmat_det(Wy).coeff(n)
        if not den:
            raise NotAbelian("degree function is inconsistent")
        lam = F.div(num, den)
        basis[i] = [a - b * lam for a, b in zip(basis[i], y)]
        new = _delta(M, basis[i])
        if new != NEG_INF and new >= n:
            raise NotAbelian("reduction step did not lower the tau-degree")
        deg[i] = new
    else:
        raise NotAbelian("basis reduction did not terminate within the iteration bound")
    if sorted(deg) != list(range(r)):
        raise NotAbelian(f"reduced degrees {sorted(deg)} are not 0..{r - 1}")
    return basis[deg.index(0)]


def express(M: TMotive, lifts, m, bound: int) -> list[SkewPoly]:
    """Write m = sum_j c_j * lift_j with c_j in k{tau}.

    Peels off m = sum a_j lift_j + tau m' with a_j read from coker tau_M;
    the tau^n coefficient of c_j is a_j^(q^n) at step n.
    """
    F = M.ring
    cok = M.cokernel_of_tau()
    d = len(lifts)
    L = [list(col) for col in zip(*[cok.coords(x) for x in lifts])]
    try:
        Linv = k_inverse(F, L)
    except SingularLeadingMatrix:
        raise NotAbelian("lifts do not span coker tau_M") from None
    detT = M.det_T()
    adjT = pmat_adjugate(M.T)
    coeffs = [[] for _ in range(d)]
    for n in range(bound + 1):
        if all(not a for a in m):
            return [SkewPoly(F, c) for c in coeffs]
        a = k_apply(F, Linv, cok.coords(m))
        w = list(m)
        for aj, x in zip(a, lifts):
            if aj:
                w = [u - v * aj for u, v in zip(w, x)]
        try:
            yq = [b.exact_div(detT) for b in pmat_apply(adjT, w)]
        except ArithmeticError:
            raise NotAbelian("remainder is not in the image of tau_M") from None
        m = [b.frob(-1) for b in yq]
        for j in range(d):
            coeffs[j].append(F.frob(a[j], n))
    raise NotAbelian("expansion in the lifted basis did not terminate")


def tmodule_of(M: TMotive):
    """Recover a t-module E with M(E) isomorphic to M.

    The result carries ``lifts``: the images in M of its standard basis
    e_1..e_d, and ``lift_matrix``: the k[t]-matrix of M(E) -> M."""
    from .tmodule import TModule

    F = M.ring
    r, d = rank_dim(M)
    if d == 0:
        raise NotAbelian("coker tau_M is zero: no t-module of positive dimension")
    degT = int(M.det_T().degree())
    bound = max(r * d * degT, r) + 2
    if d == 1:
        lifts = [_generator_by_reduction(M, 16 * r * r + bound)]
    elif M.provenance is not None:
        lifts = [[Poly(F, (1,)) if k == i else Poly(F) for k in range(r)] for i in range(d)]
    else:
        cok = M.cokernel_of_tau()
        lifts = [cok.lift([F.one if k == i else F.zero for k in range(d)]) for i in range(d)]
    t = Poly.t(F)
    rows = [express(M, lifts, [a * t for a in e], bound) for e in lifts]
    try:
        E = TModule(F, rows)
        M2 = motive_of(E)
    except (UnsupportedShape, PreconditionViolated) as exc:
        raise NotAbelian(f"recovered phi_t is not admissible: {exc}") from None
    if M2.r != r:
        raise NotAbelian("lifts do not generate M freely")
    s = _top_degree(E)
    cols = []
    for l in range(s):
        for i in range(d):
            x = lifts[i]
            for _ in range(l):
                x = M.tau(x)
            cols.append(x)
    W = [[c[i] for c in cols] for i in range(r)]
    detW = pmat_det(W)
    if detW.degree() != 0:
        raise NotAbelian("lifts do not generate M freely over k{tau}")
    E.lifts = lifts
    E.lift_matrix = W
    return E


def round_trip_isomorphism(E):
    """For E' = tmodule_of(M(E)) return (E', L, Linv) with L: E -> E' an
    isomorphism of t-modules and Linv its inverse, both verified exactly."""
    from .tmodule import TModuleMorphism

    M = motive_of(E)
    E2 = tmodule_of(M)
    R = E.ring
    L = [coords_to_row(E, x) for x in E2.lifts]
    degT = int(M.det_T().degree())
    bound = max(M.r * E.d * degT, M.r) + 2
    Linv = []
    for i in range(E.d):
        e = [Poly(R, (1,)) if k == i else Poly(R) for k in range(M.r)]
        Linv.append(express(M, E2.lifts, e, bound))
    f = TModuleMorphism(E, E2, L)
    g = TModuleMorphism(E2, E, Linv)
    I = smat_identity(R, E.d)
    if smat_mul(f.F, g.F) != I or smat_mul(g.F, f.F) != I:
        raise NotAbelian("round trip basis change is not a unit")
    return E2, f, g


# -- isogenies on the motive side ----------------------------------------------------------


def is_isogeny_motive(f: MotiveMorphism) -> bool:
    if f.source.r != f.target.r:
        return False
    return bool(f.det())


def _require_isogeny(f):
    if not is_isogeny_motive(f):
        raise NotAnIsogeny("morphism is not an isogeny")


def cokernel(f: MotiveMorphism) -> Cokernel:
    _require_isogeny(f)
    return Cokernel(f.U)


def cokernel_shtuka(f: MotiveMorphism):
    """coker f with the semilinear map induced by tau of the target and the
    t-action, in the Smith basis."""
    from .shtuka import FinShtuka

    cok = cokernel(f)
    k = f.target.ring
    basis = cok.basis()
    Fcols = [cok.coords(f.target.tau(b)) for b in basis]
    t = Poly.t(k)
    tcols = [cok.coords([a * t for a in b]) for b in basis]
    n = cok.dim
    Fm = [[Fcols[j][i] for j in range(n)] for i in range(n)]
    tm = [[tcols[j][i] for j in range(n)] for i in range(n)]
    V = FinShtuka(k, Fm, t_action=tm)
    V.basis = basis
    return V


def is_separable_motive(f: MotiveMorphism) -> bool:
    return cokernel_shtuka(f).is_etale()


def annihilator(f: MotiveMorphism) -> Poly:
    """Minimal monic a in F_q[t] with a * coker f = 0."""
    cok = cokernel(f)
    k = f.source.ring
    if not cok.slots:
        return Poly(k, (1,))
    return fq_closure(cok.divisors[-1])


def coker_dim(f: MotiveMorphism) -> int:
    return cokernel(f).dim


__all__ = [
    "TMotive",
    "MotiveMorphism",
    "Cokernel",
    "motive_of",
    "motive_morphism_of",
    "module_coords",
    "coords_to_row",
    "rank_dim",
    "tmodule_of",
    "round_trip_isomorphism",
    "is_isogeny_motive",
    "cokernel_shtuka",
    "is_separable_motive",
    "annihilator",
    "coker_dim",
    "smith_normal_form",
]
