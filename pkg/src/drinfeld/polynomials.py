"""Dense univariate polynomials k[t] over a finite field, and matrices over k[t].

Coefficients are stored ascending.  The same class serves for elements of
A = F_q[t] (polynomials whose coefficients lie in F_q inside k).
"""

from __future__ import annotations

import itertools
import math
import re

from .errors import MalformedInput

NEG_INF = -math.inf


class Poly:
    __slots__ = ("F", "c")

    def __init__(self, F, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.F = F
        self.c = tuple(c)

    # -- constructors ------------------------------------------------------------

    @classmethod
    def const(cls, F, a):
        return cls(F, (a,))

    @classmethod
    def t(cls, F):
        return cls(F, (0, 1))

    @classmethod
    def monomial(cls, F, a, n: int):
        return cls(F, (0,) * n + (a,))

    @classmethod
    def from_ints(cls, F, ints):
        """Coefficients given as F_p integers (the prime field inside k)."""
        return cls(F, [F.from_int(int(x)) for x in ints])

    # -- basic properties ------------------------------------------------------

    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1] if self.c else 0

    def coeff(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, int):
            return self.c == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({list(self.c)})"

    def __str__(self):
        return poly_to_str(self)

    # -- arithmetic --------------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, Poly):
            return other
        return Poly(self.F, (other,))

    def __add__(self, other):
        other = self._wrap(other)
        F = self.F
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.F
        return Poly(F, [F.neg(x) for x in self.c])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        F = self.F
        if not isinstance(other, Poly):
            if other == 0:
                return Poly(F)
            return Poly(F, [F.mul(x, other) for x in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(F, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        result = Poly(self.F, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, a):
        return self * a

    def shift(self, n: int):
        if not self.c:
            return self
        return Poly(self.F, (0,) * n + self.c)

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        r = list(self.c)
        dv = len(other.c) - 1
        if len(r) - 1 < dv:
            return Poly(F), self
        inv_lc = F.inv(other.c[-1])
        qt = [0] * (len(r) - dv)
        oc = other.c
        for k in range(len(r) - 1, dv - 1, -1):
            coef = r[k]
            if coef == 0:
                continue
            coef = F.mul(coef, inv_lc)
            qt[k - dv] = coef
            for j in range(dv + 1):
                if oc[j]:
                    r[k - dv + j] = F.sub(r[k - dv + j], F.mul(coef, oc[j]))
        return Poly(F, qt), Poly(F, r[:dv])

    def __divmod__(self, other):
        return self.divmod(self._wrap(other))

    def __floordiv__(self, other):
        return self.divmod(self._wrap(other))[0]

    def __mod__(self, other):
        return self.divmod(self._wrap(other))[1]

    def exact_div(self, other):
        quo, rem = self.divmod(other)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quo

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        return self * self.F.inv(self.c[-1])

    def __call__(self, x):
        F = self.F
        acc = 0
        for a in reversed(self.c):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def eval_in(self, R, x):
        """Evaluate at an element x of a ring R containing k via R.from_base."""
        acc = R.zero
        for a in reversed(self.c):
            acc = R.add(R.mul(acc, x), R.from_base(a))
        return acc

    def frob(self, i: int = 1):
        """Apply the q^i-power to every coefficient (t is fixed)."""
        F = self.F
        return Poly(F, [F.frob(x, i) for x in self.c])

    def derivative(self):
        F = self.F
        return Poly(F, [F.mul(F.from_int(i), x) for i, x in enumerate(self.c)][1:])

    def is_fq_rational(self) -> bool:
        F = self.F
        return all(F.frob(x) == x for x in self.c)

    def gcd(self, other):
        a, b = self, other
        while b.c:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g monic."""
        F = self.F
        r0, r1 = self, other
        s0, s1 = Poly(F, (1,)), Poly(F)
        t0, t1 = Poly(F), Poly(F, (1,))
        while r1.c:
            qt, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - qt * s1
            t0, t1 = t1, t0 - qt * t1
        if not r0.c:
            return r0, s0, t0
        inv = F.inv(r0.lc())
        return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly(a.F)
    return (a * b).exact_div(a.gcd(b)).monic()


def fq_closure(a: Poly) -> Poly:
    """Smallest monic F_q[t]-multiple of a: the lcm of its Frobenius conjugates."""
    out = a.monic()
    conj = a.monic()
    for _ in range(a.F.degree):
        conj = conj.frob()
        out = poly_lcm(out, conj)
    return out


# -- string form for polynomials with prime-field coefficients --------------------

_TERM = re.compile(r"^([+-]?)\s*(\d*)\s*\*?\s*(t(?:\s*\^\s*(\d+))?)?$")


def parse_fq_poly(F, text: str) -> Poly:
    """Parse e.g. ``"t^2 + t + 1"`` or ``"2*t - 1"`` with integer (prime field)
    coefficients."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise MalformedInput("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", s)
    acc = {}
    for term in terms:
        m = _TERM.match(term)
        if not m or (not m.group(2) and not m.group(3)):
            raise MalformedInput(f"cannot parse term {term!r} of {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        deg = 0 if not m.group(3) else int(m.group(4) or 1)
        acc[deg] = acc.get(deg, 0) + sign * coef
    n = max(acc) + 1
    return Poly.from_ints(F, [acc.get(i, 0) for i in range(n)])


def poly_to_str(a: Poly) -> str:
    if not a.c:
        return "0"
    F = a.F
    parts = []
    for i in range(len(a.c) - 1, -1, -1):
        x = a.c[i]
        if x == 0:
            continue
        if x < F.p:
            cs = "" if (x == 1 and i > 0) else str(x)
        else:
            cs = "(" + "+".join(
                (f"{d}*x^{j}" if j else str(d)) for j, d in enumerate(F.coords(x)) if d
            ) + ")"
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        parts.append(f"{cs}*{mono}" if cs and mono else cs + mono)
    return " + ".join(parts)


def fq_polys(F, max_degree: int, monic: bool = False):
    """Enumerate the nonzero polynomials over F_q (inside F) of degree <= max_degree."""
    sub = F.subfield_elements()
    for deg in range(max_degree + 1):
        lead = [1] if monic else [x for x in sub if x]
        for lc in lead:
            for low in itertools.product(sub, repeat=deg):
                yield Poly(F, list(low) + [lc])


# -- matrices over k[t] -----------------------------------------------------------


def pmat_zero(F, n: int, m: int | None = None):
    m = n if m is None else m
    return [[Poly(F) for _ in range(m)] for _ in range(n)]


def pmat_identity(F, n: int):
    M = pmat_zero(F, n)
    for i in range(n):
        M[i][i] = Poly(F, (1,))
    return M


def pmat_scalar(F, n: int, a: Poly):
    M = pmat_zero(F, n)
    for i in range(n):
        M[i][i] = a
    return M


def pmat_mul(A, B):
    F = (A[0][0] if A and A[0] else B[0][0]).F
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Poly(F)
            for l in range(k):
                if A[i][l].c and B[l][j].c:
                    acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def pmat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def pmat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def pmat_scale(A, s):
    return [[a * s for a in row] for row in A]


def pmat_frob(A, i: int = 1):
    return [[a.frob(i) for a in row] for row in A]


def pmat_eq(A, B) -> bool:
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def pmat_is_zero(A) -> bool:
    return all(not a for row in A for a in row)


def pmat_apply(A, v):
    F = A[0][0].F
    out = []
    for row in A:
        acc = Poly(F)
        for a, x in zip(row, v):
            if a.c and x.c:
                acc = acc + a * x
        out.append(acc)
    return out


def pmat_copy(A):
    return [list(row) for row in A]


def pmat_transpose(A):
    return [list(col) for col in zip(*A)]


def pmat_det(A) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        raise ValueError("empty matrix")
    F = A[0][0].F
    M = pmat_copy(A)
    sign = 1
    prev = Poly(F, (1,))
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Poly(F)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d


def pmat_adjugate(A):
    n = len(A)
    F = A[0][0].F
    if n == 1:
        return [[Poly(F, (1,))]]
    adj = pmat_zero(F, n)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            c = pmat_det(minor)
            adj[j][i] = -c if (i + j) % 2 else c
    return adj


def pmat_eval(A, x):
    return [[a(x) for a in row] for row in A]


def pmat_max_degree(A):
    return max((a.degree() for row in A for a in row), default=NEG_INF)


def smith_normal_form(A):
    """(U, D, V) with U*A*V = D, U and V unimodular, D diagonal with monic
    d_1 | d_2 | ... and zeros last.

    Pivot rule: the nonzero entry of minimal degree in the active block,
    leftmost column first and topmost row on ties.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    F = A[0][0].F
    D = pmat_copy(A)
    U = pmat_identity(F, n)
    V = pmat_identity(F, m)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in D:
            row[dst] = row[dst] + row[src] * f
        for row in V:
            row[dst] = row[dst] + row[src] * f

    for k in range(min(n, m)):
        while True:
            best = None
            for j in range(k, m):
                for i in range(k, n):
                    e = D[i][j]
                    if e.c and (best is None or e.degree() < best[0]):
                        best = (e.degree(), i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(k, i)
            swap_cols(k, j)
            piv = D[k][k]
            done = True
            for i in range(k + 1, n):
                if D[i][k].c:
                    qt, r = D[i][k].divmod(piv)
                    add_row(i, k, -qt)
                    if r.c:
                        done = False
            for j in range(k + 1, m):
                if D[k][j].c:
                    qt, r = D[k][j].divmod(piv)
                    add_col(j, k, -qt)
                    if r.c:
                        done = False
            if not done:
                continue
            bad = None
            for i in range(k + 1, n):
                for j in range(k + 1, m):
                    if D[i][j].c and (D[i][j] % piv).c:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, Poly(F, (1,)))
        if D[k][k].c and D[k][k].lc() != 1:
            s = F.inv(D[k][k].lc())
            D[k] = [a * s for a in D[k]]
            U[k] = [a * s for a in U[k]]
    return U, D, V


def elementary_divisors(A) -> list[Poly]:
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0])))]
