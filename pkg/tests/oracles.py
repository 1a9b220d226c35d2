"""Independent reference computations used to cross-check the library.

Nothing here uses the library's field tables, skew arithmetic, Smith form or
kernel linear algebra: fields are F_p[x]/(m) on coordinate tuples, kernels are
counted by enumerating every element, Smith forms come from determinantal
divisors (gcds of minors).
"""

from __future__ import annotations

import itertools
from functools import reduce


class BruteField:
    """F_p[x]/(modulus) on coordinate tuples, schoolbook arithmetic."""

    def __init__(self, p, modulus):
        self.p = p
        self.m = tuple(modulus)
        self.n = len(modulus) - 1
        self.order = p ** self.n
        self.zero = (0,) * self.n
        self.one = (1,) + (0,) * (self.n - 1)

    def elements(self):
        for t in itertools.product(range(self.p), repeat=self.n):
            yield tuple(reversed(t))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        for d in range(2 * n - 1, n - 1, -1):
            c = prod[d] % p
            prod[d] = 0
            for j in range(n + 1):
                prod[d - n + j] -= c * self.m[j]
        return tuple(c % p for c in prod[:n])

    def pow(self, a, e):
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def from_int(self, c):
        return (c % self.p,) + (0,) * (self.n - 1)


def is_irreducible_brute(p, modulus):
    """Trial division by every monic polynomial of degree <= n/2."""
    n = len(modulus) - 1
    for deg in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            g = list(low) + [1]
            r = list(modulus)
            for i in range(len(r) - 1, deg - 1, -1):
                c = r[i] % p
                if c:
                    for j in range(deg + 1):
                        r[i - deg + j] = (r[i - deg + j] - c * g[j]) % p
            if all(x % p == 0 for x in r[:deg]):
                return False
    return True


def first_irreducible_brute(p, n):
    for low in itertools.product(range(p), repeat=n):
        m = list(reversed(low)) + [1]
        if m[0] and is_irreducible_brute(p, m):
            return m
    raise AssertionError


def embedding(small: BruteField, big: BruteField):
    """Image of the generator x of the small field in the big one (the
    smallest root by enumeration order)."""
    for z in big.elements():
        acc = big.zero
        for c in reversed(small.m):
            acc = big.add(big.mul(acc, z), big.from_int(c))
        if acc == big.zero:
            return z
    raise ValueError("small field does not embed")


def embed(small: BruteField, big: BruteField, gen, coords):
    acc = big.zero
    for c in reversed(list(coords) + [0] * (small.n - len(coords))):
        acc = big.add(big.mul(acc, gen), big.from_int(c))
    return acc


def count_additive_roots(p, k_modulus, q, coeffs, big_degree):
    """#{x in F_(p^big_degree) : sum_i b_i x^(q^i) = 0}, the b_i given as
    coordinate lists over F_p of elements of k = F_p[x]/(k_modulus)."""
    small = BruteField(p, k_modulus)
    big = BruteField(p, first_irreducible_brute(p, big_degree))
    g = embedding(small, big)
    bs = [embed(small, big, g, c) for c in coeffs]
    count = 0
    for x in big.elements():
        acc = big.zero
        xq = x
        for b in bs:
            acc = big.add(acc, big.mul(b, xq))
            xq = big.pow(xq, q)
        count += acc == big.zero
    return count


def skew_mul_naive(F, q, a, b):
    """(sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j), with the
    q-power computed as plain exponentiation."""
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, F.pow(y, q ** i)))
    while out and out[-1] == F.zero:
        out.pop()
    return out


def determinantal_divisors(A):
    """D_k = monic gcd of the k x k minors, k = 1..n (library Poly used only
    as a polynomial type)."""
    from drinfeld.polynomials import Poly, pmat_det

    n = len(A)
    m = len(A[0])
    F = A[0][0].F
    out = []
    for kk in range(1, min(n, m) + 1):
        g = Poly(F)
        for rows in itertools.combinations(range(n), kk):
            for cols in itertools.combinations(range(m), kk):
                minor = pmat_det([[A[i][j] for j in cols] for i in rows])
                g = minor if g.is_zero() else (g.gcd(minor) if not minor.is_zero() else g)
        out.append(g.monic() if not g.is_zero() else g)
    return out


def invariant_factors_by_minors(A):
    D = determinantal_divisors(A)
    out = []
    prev = None
    for d in D:
        if d.is_zero():
            out.append(d)
        else:
            out.append(d if prev is None else d.exact_div(prev))
        prev = d
    return out


def product(xs, one):
    return reduce(lambda x, y: x * y, xs, one)
