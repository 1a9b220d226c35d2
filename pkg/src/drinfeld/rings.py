"""Coefficient rings: finite fields and truncated local algebras k[eps]/(eps^N).

Elements are plain Python values owned by their ring: a field element of
F_p[x]/(modulus) is an ``int`` whose base-p digits are its coordinates
(digit i = coefficient of x^i); an element of k[eps]/(eps^N) is a tuple of N
field elements (coefficient of eps^j at index j).  All arithmetic goes through
ring methods, in the style of table-driven Galois field libraries.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import MalformedInput, NotIrreducible, PreconditionViolated

_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 729


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _log_p(q: int, p: int):
    e = 0
    while q > 1 and q % p == 0:
        q //= p
        e += 1
    return e if q == 1 else None


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + c
    return x


class CoeffRing:
    """Common surface of the coefficient rings.

    Subclasses provide ``p``, ``q``, ``theta``, ``zero``, ``one`` and the
    arithmetic methods.  ``theta`` is the image of t under the characteristic
    map gamma: F_q[t] -> R.
    """

    is_field = False

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

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

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def gamma(self, a):
        """Evaluate a in F_q[t] (a :class:`~drinfeld.polynomials.Poly` over the
        residue field, or a coefficient list) at theta."""
        if self.theta is None:
            raise PreconditionViolated("ring has no characteristic map (theta unset)")
        coeffs = a.c if hasattr(a, "c") else a
        acc = self.zero
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, self.theta), self.from_base(c))
        return acc

    def frob_fixed_points(self) -> list:
        """The elements with x^q = x, i.e. the copy of F_q inside R."""
        return [self.from_base(c) for c in self.base.subfield_elements()]


class FiniteField(CoeffRing):
    """F_{p^n} presented as F_p[x]/(modulus), with q-Frobenius for a fixed q."""

    is_field = True

    def __init__(self, p: int, modulus, q: int | None = None, theta=None, check: bool = True):
        if not _is_prime(p):
            raise MalformedInput(f"p = {p} is not prime")
        modulus = [int(c) % p for c in modulus]
        while modulus and modulus[-1] == 0:
            modulus.pop()
        if len(modulus) < 2 or modulus[-1] != 1:
            raise MalformedInput("modulus must be a monic polynomial of degree >= 1")
        self.p = p
        self.modulus = tuple(modulus)
        self.n = len(modulus) - 1
        self.order = p ** self.n
        q = p if q is None else q
        e = _log_p(q, p)
        if e is None or e == 0:
            raise MalformedInput(f"q = {q} is not a power of p = {p}")
        if self.n % e:
            raise MalformedInput(f"F_{q} is not contained in a field of order {self.order}")
        self.q = q
        self.q_exp = e
        self.degree = self.n // e
        if check and self.n > 1 and not _is_irreducible_fp(p, self.modulus):
            raise NotIrreducible(f"modulus {list(self.modulus)} is reducible over F_{p}")
        self.zero = 0
        self.one = 1
        self._qpow = {}
        if self.order <= _TABLE_LIMIT:
            self._exp, self._log = _tables(p, self.modulus)
        else:
            self._exp = self._log = None
        self._add_table = None
        if p != 2 and self.n > 1 and self.order <= _ADD_TABLE_LIMIT:
            self._add_table = _add_table(p, self.n)
        self.theta = None if theta is None else self._coerce(theta)

    # -- construction helpers ------------------------------------------------

    @property
    def base(self):
        return self

    @property
    def dim(self) -> int:
        return self.n

    @property
    def gen(self) -> int:
        if self.n == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def _coerce(self, x):
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise MalformedInput(f"{x} is not an element of F_{self.order}")
            return x
        return self.elem(x)

    def with_theta(self, theta) -> "FiniteField":
        return FiniteField(self.p, self.modulus, self.q, theta, check=False)

    def key(self):
        return ("field", self.p, self.q, self.modulus, self.theta)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FiniteField(p={self.p}, q={self.q}, modulus={list(self.modulus)}, theta={self.theta})"

    def same_field(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def elem(self, coords) -> int:
        coords = [int(c) % self.p for c in coords]
        if len(coords) > self.n:
            raise MalformedInput(f"coordinate vector {coords} too long for F_{self.order}")
        return _undigits(coords, self.p)

    def coords(self, x: int) -> list[int]:
        return _digits(x, self.p, self.n)

    def from_int(self, c: int) -> int:
        return c % self.p

    def from_base(self, c):
        return c

    def residue(self, x):
        return x

    def elements(self):
        return range(self.order)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % p
        if self._add_table is not None:
            return self._add_table[a][b]
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, self.n), _digits(b, p, self.n))], p)

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.n == 1:
            return (-a) % p
        return _undigits([(-x) % p for x in _digits(a, p, self.n)], p)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.n == 1:
            return (a * b) % self.p
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return _polymulmod(self.p, self.modulus, a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return CoeffRing.pow(self, a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        if self.n == 1:
            return pow(a, e % (self.p - 1), self.p)
        return CoeffRing.pow(self, a, e % (self.order - 1))

    def frob(self, a: int, i: int = 1) -> int:
        """a^(q^i); negative i gives inverse Frobenius (fields are perfect)."""
        if a == 0 or a == 1:
            return a
        i %= self.degree
        if i == 0:
            return a
        e = self._qpow.get(i)
        if e is None:
            e = self._qpow[i] = pow(self.q, i, self.order - 1) or (self.order - 1)
        return self.pow(a, e)

    def is_unit(self, a) -> bool:
        return a != 0

    def is_nilpotent(self, a) -> bool:
        return a == 0

    def valuation(self, a) -> int:
        return 0 if a else 1

    def in_fq(self, a) -> bool:
        return self.frob(a) == a

    def subfield_elements(self) -> list[int]:
        """The q elements of F_q inside this field, ascending."""
        if self.q == self.order:
            return list(range(self.order))
        if self._log is not None:
            step = (self.order - 1) // (self.q - 1)
            return sorted([0] + [self._exp[step * j] for j in range(self.q - 1)])
        if self.q == self.p:
            return list(range(self.p))
        return sorted(x for x in self.elements() if self.frob(x) == x)

    def multiplicative_order(self, a) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        for f in _prime_factors(self.order - 1):
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    def minimal_polynomial_fq(self, a) -> list:
        """Coefficients (ascending, elements of F_q) of the minimal polynomial of
        a over F_q."""
        orbit = [a]
        x = self.frob(a)
        while x != a:
            orbit.append(x)
            x = self.frob(x)
        poly = [self.one]
        for root in orbit:
            nxt = [self.zero] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = self.add(nxt[i + 1], c)
                nxt[i] = self.sub(nxt[i], self.mul(c, root))
            poly = nxt
        return poly

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "q": self.q,
            "kind": "finite_field",
            "degree": self.degree,
            "modulus": list(self.modulus),
        }
        if self.theta is not None:
            out["theta"] = self.coords(self.theta)
        return out


class TruncatedRing(CoeffRing):
    """The local F_q-algebra k[eps]/(eps^N) over a finite field k."""

    def __init__(self, base: FiniteField, nil_index: int, theta=None):
        if nil_index < 1:
            raise MalformedInput("nil_index must be >= 1")
        self.field = base
        self.N = nil_index
        self.p = base.p
        self.q = base.q
        self.zero = (0,) * nil_index
        self.one = (1,) + (0,) * (nil_index - 1)
        self.theta = None if theta is None else self._coerce(theta)

    @property
    def base(self):
        return self.field

    @property
    def dim(self) -> int:
        return self.field.n * self.N

    @property
    def eps(self):
        if self.N == 1:
            return self.zero
        return (0, 1) + (0,) * (self.N - 2)

    def _coerce(self, x):
        if isinstance(x, tuple) and len(x) == self.N:
            return x
        return self.elem(x)

    def with_theta(self, theta) -> "TruncatedRing":
        return TruncatedRing(self.field, self.N, theta)

    def key(self):
        return ("truncated", self.field.p, self.field.q, self.field.modulus, self.N, self.theta)

    def __eq__(self, other):
        return isinstance(other, TruncatedRing) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"TruncatedRing({self.field!r}, nil_index={self.N}, theta={self.theta})"

    def elem(self, coords) -> tuple:
        n = self.field.n
        coords = list(coords)
        if len(coords) > n * self.N:
            raise MalformedInput("coordinate vector too long for truncated ring")
        coords += [0] * (n * self.N - len(coords))
        return tuple(self.field.elem(coords[j * n:(j + 1) * n]) for j in range(self.N))

    def coords(self, x) -> list[int]:
        out = []
        for c in x:
            out.extend(self.field.coords(c))
        return out

    def from_int(self, c: int):
        return (self.field.from_int(c),) + (0,) * (self.N - 1)

    def from_base(self, c):
        return (c,) + (0,) * (self.N - 1)

    def residue(self, x):
        return x[0]

    def elements(self):
        for t in itertools.product(self.field.elements(), repeat=self.N):
            yield tuple(t)

    def add(self, a, b):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.field
        return tuple(F.neg(x) for x in a)

    def sub(self, a, b):
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        F, N = self.field, self.N
        out = [0] * N
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(N - i):
                y = b[j]
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return tuple(out)

    def inv(self, a):
        F = self.field
        if a[0] == 0:
            raise ZeroDivisionError("inverse of a nilpotent element")
        a0inv = F.inv(a[0])
        b = [a0inv]
        for j in range(1, self.N):
            s = 0
            for i in range(1, j + 1):
                if a[i]:
                    s = F.add(s, F.mul(a[i], b[j - i]))
            b.append(F.neg(F.mul(a0inv, s)))
        return tuple(b)

    def frob(self, a, i: int = 1):
        if i < 0:
            raise PreconditionViolated("inverse Frobenius is not defined on a truncated ring")
        F, N = self.field, self.N
        step = self.q ** i
        out = [0] * N
        for j, c in enumerate(a):
            if c and j * step < N:
                out[j * step] = F.frob(c, i)
        return tuple(out)

    def is_unit(self, a) -> bool:
        return a[0] != 0

    def is_nilpotent(self, a) -> bool:
        return a[0] == 0

    def valuation(self, a) -> int:
        """eps-adic valuation; N for zero."""
        for j, c in enumerate(a):
            if c:
                return j
        return self.N

    def to_json(self) -> dict:
        out = self.field.to_json()
        out["kind"] = "truncated"
        out["nil_index"] = self.N
        out.pop("theta", None)
        if self.theta is not None:
            out["theta"] = self.coords(self.theta)
        return out


# -- module level helpers -----------------------------------------------------


def _polymulmod(p, modulus, a: int, b: int) -> int:
    n = len(modulus) - 1
    x, y = _digits(a, p, n), _digits(b, p, n)
    prod = [0] * (2 * n - 1)
    for i, c in enumerate(x):
        if c:
            for j, d in enumerate(y):
                if d:
                    prod[i + j] = (prod[i + j] + c * d) % p
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            for j in range(n + 1):
                prod[k - n + j] = (prod[k - n + j] - c * modulus[j]) % p
    return _undigits(prod[:n], p)


@lru_cache(maxsize=None)
def _tables(p: int, modulus: tuple):
    n = len(modulus) - 1
    order = p ** n
    if n == 1:
        mul = lambda a, b: (a * b) % p  # noqa: E731
    else:
        mul = lambda a, b: _polymulmod(p, modulus, a, b)  # noqa: E731
    for g in range(2, order) if order > 2 else [1]:
        exp = [1] * (order - 1)
        x = 1
        ok = True
        for k in range(1, order - 1):
            x = mul(x, g)
            if x == 1:
                ok = False
                break
            exp[k] = x
        if ok:
            log = [0] * order
            for k, v in enumerate(exp):
                log[v] = k
            return exp, log
    raise NotIrreducible("no primitive element found; modulus is not irreducible")


@lru_cache(maxsize=None)
def _add_table(p: int, n: int):
    order = p ** n
    ds = [_digits(x, p, n) for x in range(order)]
    return [[_undigits([(u + v) % p for u, v in zip(ds[a], ds[b])], p) for b in range(order)] for a in range(order)]


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    inv_lc = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] * inv_lc % p
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                prod[i + j] = (prod[i + j] + c * d) % p
    return _fp_mod(prod, m, p)


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_xpow(e: int, m, p):
    """x^(p^e) mod m by repeated p-th powering."""
    x = _fp_mod([0, 1], m, p)
    for _ in range(e):
        acc, base, k = [1], x, p
        while k:
            if k & 1:
                acc = _fp_mulmod(acc, base, m, p)
            base = _fp_mulmod(base, base, m, p)
            k >>= 1
        x = acc
    return x


def _is_irreducible_fp(p: int, modulus) -> bool:
    """Rabin's test over F_p."""
    m = list(modulus)
    n = len(m) - 1
    xq = _fp_xpow(n, m, p)
    if _fp_trim([(c - d) % p for c, d in itertools.zip_longest(xq, [0, 1], fillvalue=0)]):
        return False
    for f in _prime_factors(n):
        h = _fp_xpow(n // f, m, p)
        diff = _fp_trim([(c - d) % p for c, d in itertools.zip_longest(h, [0, 1], fillvalue=0)])
        g = _fp_gcd(m, diff, p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, n: int) -> list[int]:
    """Lexicographically first monic irreducible of degree n over F_p, counting
    the lower coefficients as a base-p integer (ascending digits)."""
    if n == 1:
        return [0, 1]
    for low in range(p ** n):
        cand = _digits(low, p, n) + [1]
        if cand[0] != 0 and _is_irreducible_fp(p, cand):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


def GF(p: int, n: int = 1, q: int | None = None, theta=None, modulus=None) -> FiniteField:
    """Finite field of order p^n; the modulus defaults to the lexicographically
    first irreducible polynomial so descriptors stay reproducible."""
    if modulus is None:
        modulus = first_irreducible(p, n)
    return FiniteField(p, modulus, q=q, theta=theta)


def ring_from_json(desc: dict) -> CoeffRing:
    try:
        p = int(desc["p"])
        q = int(desc.get("q", p))
        kind = desc.get("kind", "finite_field")
        modulus = desc["modulus"]
        theta = desc.get("theta")
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad ring descriptor: {exc}") from exc
    field = FiniteField(p, modulus, q=q)
    if "degree" in desc and int(desc["degree"]) != field.degree:
        raise MalformedInput(
            f"degree {desc['degree']} does not match modulus (degree {field.degree} over F_{q})"
        )
    if kind == "finite_field":
        return field if theta is None else field.with_theta(theta)
    if kind == "truncated":
        return TruncatedRing(field, int(desc["nil_index"]), theta)
    raise MalformedInput(f"unknown ring kind {kind!r}")
