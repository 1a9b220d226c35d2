"""Local shtukas at a prime p(t) of F_q[t], truncated at z-precision n.

z = p(t) is the uniformizer.  With omega(z) the Hensel root of p(X) = z
over k[z]/(z^n) reducing to a root of p in k, the component of M at that
root is M^ = M (x) k[z]/(z^n) via t -> omega(z), and tau^ = tau_M^f with
matrix T T^(q) ... T^(q^(f-1)) evaluated at omega(z) (f = deg p).  The
Frobenius sigma^ acts on series coefficientwise and fixes z.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedInput, PrecisionTooLow, ResidueFieldTooSmall
from .extension import is_irreducible_over
from .linalg import k_rank, k_twisted_power
from .polynomials import Poly, pmat_frob, pmat_identity, pmat_mul
from .rings import TruncatedRing


def char_prime(E) -> Poly:
    """Minimal polynomial over F_q of theta = gamma(t)."""
    k = E.ring
    return Poly(k, k.minimal_polynomial_fq(k.theta))


def _series_frob(S, x, i: int):
    F = S.field
    return tuple(F.frob(c, i) for c in x)


def _series_det(S, A):
    n = len(A)
    if n == 1:
        return A[0][0]
    acc = S.zero
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = S.mul(A[0][j], _series_det(S, minor))
        acc = S.add(acc, term) if j % 2 == 0 else S.sub(acc, term)
    return acc


@dataclass
class LocalShtuka:
    ring: object
    eps: Poly
    f_deg: int
    n: int
    Tauhat: list
    omega: tuple
    relations: list = field(default_factory=list)

    @property
    def r(self) -> int:
        return len(self.Tauhat)

    @property
    def series(self) -> TruncatedRing:
        return TruncatedRing(self.ring, self.n)

    def reduce(self, n2: int) -> "LocalShtuka":
        if n2 > self.n:
            raise PrecisionTooLow("cannot raise precision by reduction")
        cut = lambda x: tuple(x[:n2])  # noqa: E731
        return LocalShtuka(
            self.ring,
            self.eps,
            self.f_deg,
            n2,
            [[cut(x) for x in row] for row in self.Tauhat],
            cut(self.omega),
            [[cut(x) for x in rel] for rel in self.relations],
        )

    def det(self):
        return _series_det(self.series, self.Tauhat)

    def residue_matrix(self):
        return [[x[0] for x in row] for row in self.Tauhat]


def _check_prime(k, p: Poly):
    if p.degree() < 1 or not p.is_monic() or not p.is_fq_rational():
        raise MalformedInput(f"{p} is not a monic polynomial over F_q")
    if not is_irreducible_over(p, k.q):
        raise MalformedInput(f"{p} is not irreducible over F_q")


def hensel_root(k, p: Poly, root, n: int):
    """omega in k[z]/(z^n) with p(omega) = z and omega(0) = root."""
    S = TruncatedRing(k, n)
    z = S.eps
    dp = p.derivative()
    if not dp(root):
        raise MalformedInput("p is not separable at the chosen root")
    w = S.from_base(root)
    steps = max(1, n).bit_length() + 1
    for _ in range(steps):
        err = S.sub(p.eval_in(S, w), z)
        if S.is_zero(err):
            break
        w = S.sub(w, S.mul(err, S.inv(dp.eval_in(S, w))))
    assert p.eval_in(S, w) == z
    return w


def local_shtuka_at(M, p: Poly, n: int = 8) -> LocalShtuka:
    k = M.ring
    if n < 1:
        raise PrecisionTooLow("precision must be positive")
    _check_prime(k, p)
    if not p(k.theta):
        root = k.theta
    else:
        root = next((x for x in k.elements() if not p(x)), None)
        if root is None:
            raise ResidueFieldTooSmall(f"{p} has no root in k = F_{k.order}")
    f = int(p.degree())
    S = TruncatedRing(k, n)
    w = hensel_root(k, p, root, n)
    P = pmat_identity(k, M.r)
    for i in range(f):
        P = pmat_mul(P, pmat_frob(M.T, i))
    Tauhat = [[a.eval_in(S, w) for a in row] for row in P]
    return LocalShtuka(k, p, f, n, Tauhat, w)


def is_formal(L: LocalShtuka) -> bool:
    """The reduction of tau^ mod z is nilpotent."""
    k = L.ring
    P = k_twisted_power(k, L.residue_matrix(), L.r, shift=L.f_deg)
    return all(x == 0 for row in P for x in row)


def _flatten(L, vec):
    out = []
    for x in vec:
        out.extend(x)
    return out


def _mult_matrix(L):
    """k-matrix of x -> Tauhat x on (k[z]/z^n)^r (basis z^l e_i at i*n + l)."""
    S = L.series
    n, r = L.n, L.r
    cols = []
    for i in range(r):
        for l in range(n):
            zl = tuple(S.field.one if j == l else 0 for j in range(n))
            col = [S.mul(L.Tauhat[row][i], zl) for row in range(r)]
            cols.append(_flatten(L, col))
    return [[c[j] for c in cols] for j in range(r * n)]


def _z_power_span(L, j: int):
    n, r = L.n, L.r
    k = L.ring
    out = []
    for i in range(r):
        for l in range(j, n):
            v = [0] * (r * n)
            v[i * n + l] = k.one
            out.append(v)
    return out


@dataclass
class LocalInvariants:
    order_exponents: list
    omega_dim: int
    etale_rank: int
    local_dim: int


def local_invariants(L: LocalShtuka) -> LocalInvariants:
    k = L.ring
    S = L.series
    r, n = L.r, L.n
    det = L.det()
    v = S.valuation(det)
    if v >= n:
        raise PrecisionTooLow(f"precision {n} does not exceed the local dimension")
    orders = []
    for j in range(1, n + 1):
        zj = _z_power_span(L, j)
        dim_quot = r * n - (len(zj) and k_rank(k, [list(c) for c in zip(*zj)]))
        orders.append(L.f_deg * dim_quot)
    omega_dim = r * n - k_rank(k, _mult_matrix(L))
    P = k_twisted_power(k, L.residue_matrix(), r, shift=L.f_deg)
    etale_rank = k_rank(k, P)
    return LocalInvariants(orders, omega_dim, etale_rank, v)


def _relation_span(L):
    S = L.series
    out = []
    for rel in L.relations:
        for l in range(L.n):
            zl = tuple(S.field.one if j == l else 0 for j in range(L.n))
            out.append(_flatten(L, [S.mul(x, zl) for x in rel]))
    return out


def _rank_rows(k, rows):
    if not rows:
        return 0
    return k_rank(k, rows)


def divisibility_check(L: LocalShtuka) -> bool:
    """z is onto in the layered sense: each z^j Q / z^(j+1) Q has dimension r
    for Q = M^/(relations), and the relations are stable under tau^."""
    k = L.ring
    S = L.series
    N = _relation_span(L)
    rN = _rank_rows(k, N)
    dims = []
    for j in range(L.n + 1):
        dims.append(_rank_rows(k, _z_power_span(L, j) + N) - rN)
    if any(dims[j] - dims[j + 1] != L.r for j in range(L.n)):
        return False
    for rel in L.relations:
        twisted = [_series_frob(S, x, L.f_deg) for x in rel]
        img = [S.sum(S.mul(a, x) for a, x in zip(row, twisted)) for row in L.Tauhat]
        if _rank_rows(k, N + [_flatten(L, img)]) != rN:
            return False
    return True


def corrupted(L: LocalShtuka) -> LocalShtuka:
    """Negative control: kill z^(n-1) e_1, a non-free truncation."""
    S = L.series
    top = tuple(S.field.one if j == L.n - 1 else 0 for j in range(L.n))
    rel = [top] + [S.zero] * (L.r - 1)
    return LocalShtuka(L.ring, L.eps, L.f_deg, L.n, L.Tauhat, L.omega, list(L.relations) + [rel])


def kernel_order_exponent(E, p: Poly, j: int) -> int:
    """log_q of the order of the group scheme E[p^j]: the tau-degree of
    phi_{p^j} (Drinfeld modules)."""
    from .tmodule import phi_of

    return int(phi_of(E, p ** j)[0][0].degree())


__all__ = [
    "LocalShtuka",
    "LocalInvariants",
    "char_prime",
    "hensel_root",
    "local_shtuka_at",
    "is_formal",
    "local_invariants",
    "divisibility_check",
    "corrupted",
    "kernel_order_exponent",
]
