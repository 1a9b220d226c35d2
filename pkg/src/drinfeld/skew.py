"""The twisted polynomial ring R{tau}, tau*b = b^q*tau, and matrices over it.

Scalars are elements of a :mod:`drinfeld.rings` coefficient ring; a skew
polynomial stores its coefficients ascending in tau.  Only right division is
provided.
"""

from __future__ import annotations

from .errors import (
    NonUnitLeadingCoefficient,
    PreconditionViolated,
    SingularLeadingMatrix,
)
from .linalg import k_inverse, k_mul, k_frob
from .polynomials import NEG_INF


class SkewPoly:
    __slots__ = ("R", "c")

    def __init__(self, R, coeffs=()):
        c = list(coeffs)
        z = R.zero
        while c and c[-1] == z:
            c.pop()
        self.R = R
        self.c = tuple(c)

    @classmethod
    def tau(cls, R, n: int = 1):
        return cls(R, [R.zero] * n + [R.one])

    @classmethod
    def const(cls, R, a):
        return cls(R, [a])

    @classmethod
    def one(cls, R):
        return cls(R, [R.one])

    @classmethod
    def zero(cls, R):
        return cls(R)

    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def coeff(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else self.R.zero

    def lc(self):
        return self.c[-1] if self.c else self.R.zero

    def constant(self):
        return self.coeff(0)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"SkewPoly({list(self.c)})"

    def _wrap(self, other):
        return other if isinstance(other, SkewPoly) else SkewPoly(self.R, [other])

    def __add__(self, other):
        other = self._wrap(other)
        R = self.R
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = R.add(out[i], y)
        return SkewPoly(R, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.R
        return SkewPoly(R, [R.neg(x) for x in self.c])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        R = self.R
        if not isinstance(other, SkewPoly):
            # right multiplication by a scalar
            return SkewPoly(R, [R.mul(x, R.frob(other, i)) for i, x in enumerate(self.c)])
        a, b = self.c, other.c
        if not a or not b:
            return SkewPoly(R)
        z = R.zero
        out = [z] * (len(a) + len(b) - 1)
        add, mul, frob = R.add, R.mul, R.frob
        for i, x in enumerate(a):
            if x == z:
                continue
            for j, y in enumerate(b):
                if y != z:
                    out[i + j] = add(out[i + j], mul(x, frob(y, i) if i else y))
        return SkewPoly(R, out)

    def __rmul__(self, other):
        # left multiplication by a scalar
        R = self.R
        return SkewPoly(R, [R.mul(other, x) for x in self.c])

    def __pow__(self, e: int):
        result = SkewPoly.one(self.R)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def twist(self, i: int = 1):
        """Apply the q^i-Frobenius to every coefficient."""
        R = self.R
        return SkewPoly(R, [R.frob(x, i) for x in self.c])

    def truncate(self, n: int):
        return SkewPoly(self.R, self.c[:n])

    def __call__(self, x, K=None):
        """Evaluate the q-linearized polynomial sum b_i x^(q^i) at x in the
        ring K (default: the coefficient ring); K must embed R via K.embed."""
        R = self.R
        if K is None:
            acc = R.zero
            y = x
            for b in self.c:
                acc = R.add(acc, R.mul(b, y))
                y = R.frob(y)
            return acc
        acc = K.zero
        y = x
        for b in self.c:
            acc = K.add(acc, K.mul(K.embed(b), y))
            y = K.frob(y)
        return acc


# -- division -------------------------------------------------------------------------


def right_divmod(c: SkewPoly, phi: SkewPoly):
    """(g, h) with c = g*phi + h and deg h < deg phi.

    Coefficients of g are produced top down by
    g_i = b_r^(-q^i) (c_{i+r} - sum_{j=i+1}^{i+r} g_j b_{i+r-j}^(q^j)),
    then h_l = c_l - sum_{j<=l} g_j b_{l-j}^(q^j).
    """
    R = phi.R
    r = phi.degree()
    if r == NEG_INF:
        raise ZeroDivisionError("division by the zero skew polynomial")
    br = phi.c[-1]
    if not R.is_unit(br):
        raise NonUnitLeadingCoefficient("leading coefficient of the divisor is not a unit")
    n = c.degree()
    if n < r:
        return SkewPoly(R), c
    b = phi.c
    m = n - r
    binv = R.inv(br)
    g = [R.zero] * (m + 1)
    for i in range(m, -1, -1):
        acc = c.coeff(i + r)
        for j in range(i + 1, min(i + r, m) + 1):
            gj = g[j]
            if gj != R.zero:
                acc = R.sub(acc, R.mul(gj, R.frob(b[i + r - j], j)))
        g[i] = R.mul(R.frob(binv, i), acc)
    h = []
    for l in range(r):
        acc = c.coeff(l)
        for j in range(0, min(l, m) + 1):
            gj = g[j]
            if gj != R.zero:
                acc = R.sub(acc, R.mul(gj, R.frob(b[l - j], j)))
        h.append(acc)
    return SkewPoly(R, g), SkewPoly(R, h)


def skew_inverse_unipotent(u: SkewPoly) -> SkewPoly:
    """Inverse of u = 1 + X with X nilpotent in R{tau} (all coefficients of X
    nilpotent): the finite geometric series sum (-X)^k."""
    R = u.R
    if u.constant() != R.one or any(not R.is_nilpotent(x) for x in u.c[1:]):
        raise PreconditionViolated("not of the form 1 + (nilpotent)")
    X = u - SkewPoly.one(R)
    out = SkewPoly.one(R)
    term = SkewPoly.one(R)
    for _ in range(getattr(R, "N", 1) + 1):
        term = term * (-X)
        if not term:
            break
        out = out + term
    else:
        raise AssertionError("geometric series did not terminate")
    return out


def standard_form(b: SkewPoly, r: int):
    """(c, b_std) with c = 1 + (nilpotent higher terms) and
    b_std = c^-1 b c of degree exactly r.

    Each round removes the lowest eps-valuation level of the coefficients
    above r: with v that valuation, the linearized conditions
    b_i + b_0 x_i - sum_{s=i-r}^{i} x_s b_{i-s}^(q^s) = 0 (i > r) are solved
    top down for x_{i-r}, and b is conjugated exactly by u = 1 + sum x_s tau^s.
    All terms dropped in the linearization have valuation > v, so v strictly
    increases and at most N rounds are needed.
    """
    R = b.R
    if r < 1:
        raise PreconditionViolated("rank must be positive")
    if not R.is_unit(b.coeff(r)):
        raise PreconditionViolated(f"coefficient of tau^{r} is not a unit")
    if any(not R.is_nilpotent(x) for x in b.c[r + 1:]):
        raise PreconditionViolated(f"a coefficient above tau^{r} is not nilpotent")
    c = SkewPoly.one(R)
    rounds = 0
    limit = getattr(R, "N", 1) + 1
    while b.degree() > r:
        rounds += 1
        if rounds > limit:
            raise AssertionError("standard form iteration did not converge")
        n = b.degree()
        x = [R.zero] * (n - r + 1)
        br = b.c[r]
        for i in range(n, r, -1):
            acc = R.add(b.c[i], R.mul(b.c[0], x[i]) if i <= n - r else R.zero)
            for j in range(r):
                s = i - j
                if s <= n - r and x[s] != R.zero:
                    acc = R.sub(acc, R.mul(x[s], R.frob(b.c[j], s)))
            x[i - r] = R.mul(acc, R.frob(R.inv(br), i - r))
        x[0] = R.zero
        u = SkewPoly(R, [R.one] + x[1:])
        b = skew_inverse_unipotent(u) * b * u
        c = c * u
    return c, b


# -- matrices ---------------------------------------------------------------------------


def smat_zero(R, n: int, m: int | None = None):
    m = n if m is None else m
    return [[SkewPoly(R) for _ in range(m)] for _ in range(n)]


def smat_identity(R, n: int):
    M = smat_zero(R, n)
    for i in range(n):
        M[i][i] = SkewPoly.one(R)
    return M


def smat_scalar(R, n: int, s: SkewPoly):
    M = smat_zero(R, n)
    for i in range(n):
        M[i][i] = s
    return M


def smat_mul(A, B):
    R = _ring_of(A, B)
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = SkewPoly(R)
            for l in range(k):
                if A[i][l].c and B[l][j].c:
                    acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def smat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def smat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def smat_neg(A):
    return [[-a for a in row] for row in A]


def smat_eq(A, B) -> bool:
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def smat_is_zero(A) -> bool:
    return all(not a for row in A for a in row)


def smat_degree(A):
    return max((a.degree() for row in A for a in row), default=NEG_INF)


def smat_coeff(A, n: int):
    """The matrix over R of tau^n-coefficients."""
    return [[a.coeff(n) for a in row] for row in A]


def smat_from_coeffs(R, mats):
    """Inverse of smat_coeff: sum_n mats[n] tau^n."""
    rows = len(mats[0])
    cols = len(mats[0][0]) if rows else 0
    return [[SkewPoly(R, [M[i][j] for M in mats]) for j in range(cols)] for i in range(rows)]


def smat_twist(A, i: int = 1):
    return [[a.twist(i) for a in row] for row in A]


def smat_apply(A, v, K=None):
    """Evaluate the additive map given by A at a column vector v."""
    if K is None:
        R = _ring_of(A)
        return [R.sum(a(x) for a, x in zip(row, v)) for row in A]
    return [K.sum(a(x, K) for a, x in zip(row, v)) for row in A]


def smat_right_divmod(C, Phi):
    """(G, H) with C = G*Phi + H and every entry of H of tau-degree below
    s = deg_tau Phi.  Needs the tau^s coefficient matrix of Phi invertible."""
    R = _ring_of(C, Phi)
    d = len(Phi)
    s = smat_degree(Phi)
    if s == NEG_INF:
        raise SingularLeadingMatrix("division by the zero matrix")
    lam = smat_coeff(Phi, s)
    try:
        lam_inv = k_inverse(R, lam)
    except SingularLeadingMatrix:
        raise SingularLeadingMatrix("top coefficient matrix of the divisor is not invertible") from None
    rows = len(C)
    G = smat_zero(R, rows, d)
    H = [list(row) for row in C]
    while True:
        n = smat_degree(H)
        if n < s:
            break
        shift = n - s
        Cn = smat_coeff(H, n)
        Gn = k_mul(R, Cn, k_frob(R, lam_inv, shift))
        step = [[SkewPoly(R, [R.zero] * shift + [x]) for x in row] for row in Gn]
        G = smat_add(G, step)
        H = smat_sub(H, smat_mul(step, Phi))
    return G, H


def _ring_of(*mats):
    for M in mats:
        for row in M:
            for a in row:
                return a.R
    raise ValueError("cannot infer the coefficient ring of an empty matrix")
