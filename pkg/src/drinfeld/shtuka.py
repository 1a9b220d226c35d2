"""Finite F_q-shtukas (V, F) over a finite field k, with F acting as
v -> F*v^(q), and the Drinfeld functor to additive group scheme presentations.

Basis-dual convention for Dr_q: if F_V(sigma* v_j) = sum_i F_ij v_i, the
relations of Sym(V)/(v^q - F_V(sigma* v)) read z_j^q = sum_i F_ij z_i, so
the presentation matrix is C = F^T (rows index the generator being powered).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedPresentation, NotCoprime, NotEtale
from .extension import extension
from .linalg import (
    fp_nullspace,
    fp_rank,
    fp_solve,
    k_column_space,
    k_is_invertible,
    k_is_zero,
    k_nullspace,
    k_rank,
    k_solve,
    k_twisted_power,
)
from .polynomials import Poly, pmat_sub, smith_normal_form
from .skew import smat_apply


class FinShtuka:
    def __init__(self, ring, F, t_action=None):
        self.ring = ring
        self.F = [list(row) for row in F]
        self.n = len(self.F)
        if any(len(row) != self.n for row in self.F):
            raise MalformedPresentation("F must be square")
        self.t_action = None if t_action is None else [list(row) for row in t_action]
        self.basis = None

    def __eq__(self, other):
        return isinstance(other, FinShtuka) and self.ring == other.ring and self.F == other.F

    def __repr__(self):
        return f"FinShtuka(n={self.n}, F={self.F})"

    def is_etale(self) -> bool:
        return self.n == 0 or k_is_invertible(self.ring, self.F)

    def is_nilpotent(self) -> bool:
        if self.n == 0:
            return True
        return k_is_zero(self.ring, k_twisted_power(self.ring, self.F, self.n))

    def apply(self, v):
        """F * v^(q)."""
        R = self.ring
        vq = [R.frob(x) for x in v]
        return [R.sum(R.mul(a, x) for a, x in zip(row, vq)) for row in self.F]


@dataclass
class GroupSchemePresentation:
    """Spec k[z_1..z_n]/(z_i^q - sum_j C_ij z_j), all z_i primitive."""

    ring: object
    C: list

    @property
    def n(self) -> int:
        return len(self.C)

    @property
    def order(self) -> int:
        return self.ring.q ** self.n

    def is_etale(self) -> bool:
        return self.n == 0 or k_is_invertible(self.ring, self.C)

    def relations(self) -> list[str]:
        out = []
        for i, row in enumerate(self.C):
            terms = [f"{c}*z{j + 1}" for j, c in enumerate(row) if c]
            out.append(f"z{i + 1}^{self.ring.q} = " + (" + ".join(terms) if terms else "0"))
        return out


def dr_q(V: FinShtuka) -> GroupSchemePresentation:
    C = [list(col) for col in zip(*V.F)] if V.n else []
    return GroupSchemePresentation(V.ring, C)


def m_q(G: GroupSchemePresentation) -> FinShtuka:
    R = G.ring
    C = G.C
    n = len(C)
    for row in C:
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise MalformedPresentation("relation matrix must be square")
        for c in row:
            if not isinstance(c, int) or not 0 <= c < R.order:
                raise MalformedPresentation(f"{c!r} is not an element of the base field")
    F = [list(col) for col in zip(*C)] if n else []
    return FinShtuka(R, F)


def is_etale(V: FinShtuka) -> bool:
    return V.is_etale()


def is_nilpotent(V: FinShtuka) -> bool:
    return V.is_nilpotent()


def _restrict(V: FinShtuka, B):
    """The shtuka induced on the F-stable subspace spanned by the columns of B."""
    R = V.ring
    if not B:
        sub = FinShtuka(R, [])
        sub.basis = []
        return sub
    Bm = [[b[i] for b in B] for i in range(V.n)]
    cols = []
    for b in B:
        c = k_solve(R, Bm, V.apply(b))
        if c is None:
            raise AssertionError("subspace is not stable under F")
        cols.append(c)
    sub = FinShtuka(R, [[cols[j][i] for j in range(len(B))] for i in range(len(B))])
    sub.basis = B
    return sub


def connected_etale_split(V: FinShtuka):
    """(V_nil, V_et): V_et the stable image of v -> F v^(q), V_nil its stable
    kernel; each returned shtuka has ``basis`` (columns in V)."""
    R = V.ring
    n = V.n
    if n == 0:
        return _restrict(V, []), _restrict(V, [])
    P = k_twisted_power(R, V.F, n)
    et = k_column_space(R, P)
    nil = [[R.frob(x, -n) for x in v] for v in k_nullspace(R, P)]
    return _restrict(V, nil), _restrict(V, et)


# -- F_q-structure helpers -------------------------------------------------------------


def fq_fp_basis(k) -> list:
    """An F_p-basis of F_q inside k (greedy over the sorted subfield)."""
    chosen, rows = [], []
    for x in k.subfield_elements():
        if not x:
            continue
        cand = rows + [k.coords(x)]
        if fp_rank(np.array(cand), k.p) == len(cand):
            chosen.append(x)
            rows = cand
        if len(chosen) == k.q_exp:
            break
    return chosen


def _scale_vec(K, c, vec):
    """F_p-coordinates of c * v for v in K^n given by concatenated coordinates."""
    n = K.n
    parts = [K.from_fp_coords(vec[i * n:(i + 1) * n]) for i in range(len(vec) // n)]
    out = []
    ce = K.embed(c)
    for x in parts:
        out.extend(K.fp_coords(K.mul(ce, x)))
    return out


def fq_basis(K, fp_vectors):
    """Greedy F_q-basis of the F_q-span of the given F_p-vectors (the span is
    assumed F_q-stable)."""
    k = K.k
    cs = fq_fp_basis(k)
    chosen, span = [], []
    for v in fp_vectors:
        v = [int(x) for x in v]
        if span and fp_rank(np.array(span + [v]), K.p) == fp_rank(np.array(span), K.p):
            continue
        chosen.append(v)
        span.extend(_scale_vec(K, c, v) for c in cs)
    return chosen


def fq_coordinates(K, basis, v):
    """Coordinates (elements of F_q inside k) of v in an F_q-basis."""
    k = K.k
    cs = fq_fp_basis(k)
    cols = [_scale_vec(K, c, b) for b in basis for c in cs]
    S = np.array(cols, dtype=np.int64).T
    y = fp_solve(S, np.array(v, dtype=np.int64), K.p)
    if y is None:
        raise ValueError("vector is not in the span")
    out = []
    e = len(cs)
    for j in range(len(basis)):
        acc = 0
        for i, c in enumerate(cs):
            for _ in range(int(y[j * e + i])):
                acc = k.add(acc, c)
        out.append(acc)
    return out


def tau_invariants(V: FinShtuka, m: int):
    """F_q-basis of {v in k_m^n : v = F v^(q)} as tuples of k_m elements."""
    if not V.is_etale():
        raise NotEtale("tau-invariants are only taken for etale shtukas")
    R = V.ring
    K = extension(R, m)
    n = V.n
    if n == 0:
        return []
    Fr = K.frob_matrix(1)
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            B = -(K.mul_matrix(K.embed(V.F[i][j])) @ Fr)
            if i == j:
                B = B + np.eye(K.n, dtype=np.int64)
            row.append(B % K.p)
        blocks.append(row)
    null = fp_nullspace(np.block(blocks), K.p)
    basis = fq_basis(K, null)
    return [tuple(K.from_fp_coords(b[i * K.n:(i + 1) * K.n]) for i in range(n)) for b in basis]


def omega(V: FinShtuka):
    """coker F: (dimension, basis of a complement of the image)."""
    R = V.ring
    n = V.n
    if n == 0:
        return 0, []
    img = k_column_space(R, V.F)
    basis = []
    cur = [list(c) for c in img]
    for i in range(n):
        e = [R.one if j == i else R.zero for j in range(n)]
        cand = cur + [e]
        if k_rank(R, [[c[r] for c in cand] for r in range(n)]) == len(cand):
            cur = cand
            basis.append(e)
    return n - k_rank(R, V.F), basis


# -- torsion ---------------------------------------------------------------------------------


def torsion_shtuka(E, a) -> FinShtuka:
    from .motive import cokernel_shtuka, motive_of

    M = motive_of(E)
    if not isinstance(a, Poly):
        a = Poly(E.ring, a)
    return cokernel_shtuka(M.scalar(a))


@dataclass
class TorsionPoints:
    field: object
    points: list
    invariant_factors: list
    free_rank: int | None
    frobenius: list
    ideal: Poly
    t_matrix: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.points)


def kernel_t_structure(E, F, m: int):
    """The F_q[t]-module ker F (k_m) for a skew matrix F with source E:
    (field, F_q-basis, matrix of t in that basis, invariant factors of t)."""
    from .tmodule import kernel_basis, point_coords

    k = E.ring
    K, null = kernel_basis(F, m)
    d = E.d
    basis = fq_basis(K, null)
    t_cols = []
    for b in basis:
        pt = tuple(K.from_fp_coords(b[i * K.n:(i + 1) * K.n]) for i in range(d))
        img = smat_apply(E.phi_t, pt, K)
        t_cols.append(fq_coordinates(K, basis, point_coords(K, img)))
    e = len(basis)
    A_t = [[t_cols[j][i] for j in range(e)] for i in range(e)]
    inv = []
    if e:
        t = Poly.t(k)
        char = pmat_sub(
            [[t if i == j else Poly(k) for j in range(e)] for i in range(e)],
            [[Poly(k, (x,)) for x in row] for row in A_t],
        )
        _, D, _ = smith_normal_form(char)
        inv = [D[i][i] for i in range(e) if D[i][i].degree() > 0]
    return K, basis, A_t, inv


def torsion_points(E, a, m: int | None = None) -> TorsionPoints:
    from .tmodule import kernel_points, phi_of, point_coords, splitting_degree

    k = E.ring
    if not isinstance(a, Poly):
        a = Poly(k, a)
    a = a.monic()
    phia = phi_of(E, a)
    if m is None:
        m = splitting_degree(E.endo(a))
    K, _, A_t, inv = kernel_t_structure(E, phia, m)
    pts = kernel_points(phia, m)
    free_rank = len(inv) if all(f == a for f in inv) else None
    keyed = {tuple(point_coords(K, p)): i for i, p in enumerate(pts)}
    frob = [keyed[tuple(point_coords(K, tuple(K.frob(x, k.degree) for x in p)))] for p in pts]
    return TorsionPoints(K, pts, inv, free_rank, frob, a, A_t)


def crt_check(E, a, b, m: int | None = None) -> bool:
    """E[a] x E[b] -> E[ab], (x, y) -> x + y, with inverse
    z -> (phi_{vb} z, phi_{ua} z) where ua + vb = 1."""
    from .tmodule import kernel_points, phi_of, point_coords, splitting_degree

    k = E.ring
    if not isinstance(a, Poly):
        a = Poly(k, a)
    if not isinstance(b, Poly):
        b = Poly(k, b)
    g, u, v = a.xgcd(b)
    if g.degree() != 0:
        raise NotCoprime(f"gcd({a}, {b}) = {g}")
    ab = a * b
    if m is None:
        m = splitting_degree(E.endo(ab))
    K = extension(k, m)
    key = lambda p: tuple(point_coords(K, p))  # noqa: E731
    Pa = {key(p): p for p in kernel_points(phi_of(E, a), m)}
    Pb = {key(p): p for p in kernel_points(phi_of(E, b), m)}
    Pab = {key(p): p for p in kernel_points(phi_of(E, ab), m)}
    if len(Pa) * len(Pb) != len(Pab):
        return False
    to_a = phi_of(E, v * b)
    to_b = phi_of(E, u * a)
    for z in Pab.values():
        x = tuple(smat_apply(to_a, z, K))
        y = tuple(smat_apply(to_b, z, K))
        if key(x) not in Pa or key(y) not in Pb:
            return False
        if key(tuple(K.add(s, w) for s, w in zip(x, y))) != key(z):
            return False
    sums = set()
    for x in Pa.values():
        for y in Pb.values():
            sums.add(key(tuple(K.add(s, w) for s, w in zip(x, y))))
    return sums == set(Pab)


__all__ = [
    "FinShtuka",
    "GroupSchemePresentation",
    "dr_q",
    "m_q",
    "is_etale",
    "is_nilpotent",
    "connected_etale_split",
    "tau_invariants",
    "omega",
    "torsion_shtuka",
    "torsion_points",
    "kernel_t_structure",
    "TorsionPoints",
    "crt_check",
    "fq_basis",
]
