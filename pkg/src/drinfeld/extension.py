"""Finite extensions k_m = k[y]/(g) of a finite field k, and their F_p-linear
structure.

Elements are tuples of m elements of k (coefficient of y^j at index j).  The
F_p-coordinates of an element are the concatenated k-coordinates, so points
are ordered by these vectors.  Every F_q-linear question about k_m (kernels of
q-linearized polynomials, tau-invariants) is turned into a matrix over F_p.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .polynomials import Poly
from .rings import FiniteField, _prime_factors


def _powmod(base: Poly, e: int, g: Poly) -> Poly:
    result = Poly(g.F, (1,))
    base = base % g
    while e:
        if e & 1:
            result = (result * base) % g
        base = (base * base) % g
        e >>= 1
    return result


def is_irreducible_over(g: Poly, Q: int | None = None) -> bool:
    """Rabin's test for g over the subfield F_Q of its coefficient field
    (default Q = |k|); g must have coefficients in F_Q."""
    k = g.F
    m = g.degree()
    if m < 1:
        return False
    if m == 1:
        return True
    Q = k.order if Q is None else Q
    y = Poly.t(k)

    def frob_iter(x, times):
        for _ in range(times):
            x = _powmod(x, Q, g)
        return x

    if frob_iter(y, m) != y % g:
        return False
    for f in _prime_factors(m):
        h = frob_iter(y, m // f) - y
        if h.gcd(g).degree() > 0:
            return False
    return True


def _ben_or(g: Poly, Q: int) -> bool:
    """Ben-Or's test: no factor of degree i <= m/2, i.e. gcd(y^(Q^i) - y, g) = 1.
    Most reducible candidates fail at a small i, which makes the search fast."""
    y = Poly.t(g.F)
    x = y
    for _ in range(g.degree() // 2):
        x = _powmod(x, Q, g)
        if (x - y).gcd(g).degree() > 0:
            return False
    return True


@lru_cache(maxsize=None)
def _first_irreducible_over(k: FiniteField, m: int):
    if m == 1:
        return (0, 1)
    elems = list(k.elements())
    for low in itertools.product(elems, repeat=m):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] == 0:
            continue
        if _ben_or(Poly(k, cand), k.order):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


class ExtensionField:
    """k_m = k[y]/(g), g the lexicographically first monic irreducible of
    degree m over k.  ``frob`` is the q-power (q of k)."""

    is_field = True

    def __init__(self, k: FiniteField, m: int):
        self.k = k
        self.m = m
        self.p = k.p
        self.q = k.q
        self.g = _first_irreducible_over(k, m)
        self.n = k.n * m
        self.order = k.order ** m
        self.degree = k.degree * m
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)
        self._frob_mat = None
        self._basis = None

    def __repr__(self):
        return f"ExtensionField(k={self.k!r}, m={self.m})"

    def embed(self, a):
        return (a,) + (0,) * (self.m - 1)

    def is_zero(self, x) -> bool:
        return x == self.zero

    def add(self, a, b):
        k = self.k
        return tuple(k.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        k = self.k
        return tuple(k.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        k = self.k
        return tuple(k.neg(x) for x in a)

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def mul(self, a, b):
        k, m, g = self.k, self.m, self.g
        if m == 1:
            return (k.mul(a[0], b[0]),)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = k.add(prod[i + j], k.mul(x, y))
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                for j in range(m):
                    if g[j]:
                        prod[d - m + j] = k.sub(prod[d - m + j], k.mul(c, g[j]))
        return tuple(prod[:m])

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def frob(self, a, i: int = 1):
        i %= self.degree
        if i == 0:
            return a
        v = np.asarray(self.fp_coords(a), dtype=np.int64)
        M = self.frob_matrix(i)
        return self.from_fp_coords((M @ v) % self.p)

    # -- F_p-linear structure ---------------------------------------------------------

    def fp_coords(self, a) -> list[int]:
        out = []
        for c in a:
            out.extend(self.k.coords(c))
        return out

    def from_fp_coords(self, v):
        n = self.k.n
        v = [int(x) for x in v]
        return tuple(self.k.elem(v[j * n:(j + 1) * n]) for j in range(self.m))

    def fp_basis(self):
        if self._basis is None:
            self._basis = [self.from_fp_coords([1 if i == j else 0 for i in range(self.n)]) for j in range(self.n)]
        return self._basis

    def mul_matrix(self, b):
        """F_p-matrix (acting on coordinate columns) of x -> b*x."""
        cols = [self.fp_coords(self.mul(b, e)) for e in self.fp_basis()]
        return np.array(cols, dtype=np.int64).T

    def frob_matrix(self, i: int = 1):
        """F_p-matrix of x -> x^(q^i)."""
        if self._frob_mat is None:
            cols = [self.fp_coords(self.pow(e, self.q)) for e in self.fp_basis()]
            self._frob_mat = {1: np.array(cols, dtype=np.int64).T % self.p}
        i %= self.degree
        if i not in self._frob_mat:
            if i == 0:
                self._frob_mat[0] = np.eye(self.n, dtype=np.int64)
            else:
                self._frob_mat[i] = (self.frob_matrix(i - 1) @ self._frob_mat[1]) % self.p
        return self._frob_mat[i]

    def key(self, a):
        return tuple(self.fp_coords(a))


@lru_cache(maxsize=64)
def extension(k: FiniteField, m: int) -> ExtensionField:
    return ExtensionField(k, m)


def linearized_matrix(K: ExtensionField, coeffs) -> np.ndarray:
    """F_p-matrix of x -> sum_i b_i x^(q^i) on K, the b_i in the base field."""
    M = np.zeros((K.n, K.n), dtype=np.int64)
    for i, b in enumerate(coeffs):
        if b:
            M = (M + K.mul_matrix(K.embed(b)) @ K.frob_matrix(i)) % K.p
    return M
