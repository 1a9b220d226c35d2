"""Seeded random objects for property suites and the self-check.

All draws go through a ``random.Random`` instance so a seed fixes every
object.
"""

from __future__ import annotations

import random

from .errors import NotDrinfeld
from .linalg import k_inverse, k_is_invertible
from .polynomials import Poly
from .rings import GF
from .skew import SkewPoly
from .tmodule import TModule, TModuleMorphism, new_drinfeld, phi_of

# (p, n, q) for the small fields used throughout
SMALL_FIELDS = [(2, 1, 2), (2, 2, 2), (2, 2, 4), (3, 1, 3), (3, 2, 3), (3, 2, 9), (2, 3, 2), (2, 4, 2), (2, 4, 4)]


def rng_of(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_field(rng, max_order: int = 16, theta: bool = True):
    choices = [c for c in SMALL_FIELDS if c[0] ** c[1] <= max_order]
    p, n, q = rng.choice(choices)
    k = GF(p, n, q=q)
    if theta:
        k = k.with_theta(rng.randrange(k.order))
    return k


def random_elem(rng, R, nonzero: bool = False):
    while True:
        x = R.elem([rng.randrange(R.p) for _ in range(R.dim)])
        if not nonzero or not R.is_zero(x):
            return x


def random_unit(rng, R):
    while True:
        x = random_elem(rng, R)
        if R.is_unit(x):
            return x


def random_skew(rng, R, degree: int, unit_lead: bool = False) -> SkewPoly:
    cs = [random_elem(rng, R) for _ in range(degree)]
    cs.append(random_unit(rng, R) if unit_lead else random_elem(rng, R))
    return SkewPoly(R, cs)


def random_fq_poly(rng, k, degree: int, monic: bool = True) -> Poly:
    sub = k.subfield_elements()
    cs = [rng.choice(sub) for _ in range(degree)]
    cs.append(1 if monic else rng.choice([x for x in sub if x]))
    return Poly(k, cs)


def random_poly(rng, k, degree: int) -> Poly:
    return Poly(k, [random_elem(rng, k) for _ in range(degree + 1)])


def random_drinfeld(rng, k, rank: int) -> TModule:
    cs = [k.theta] + [random_elem(rng, k) for _ in range(rank - 1)] + [random_elem(rng, k, nonzero=True)]
    E = new_drinfeld(k, cs)
    return E


def random_matrix_gl(rng, k, d: int):
    while True:
        C = [[random_elem(rng, k) for _ in range(d)] for _ in range(d)]
        if k_is_invertible(k, C):
            return C


def conjugate(E: TModule, C):
    """(E', c): E' = C phi C^-1 and the isomorphism c = C: E -> E'."""
    k = E.ring
    Ci = k_inverse(k, C)
    S = [[SkewPoly.const(k, x) for x in row] for row in C]
    Si = [[SkewPoly.const(k, x) for x in row] for row in Ci]
    from .skew import smat_mul

    E2 = TModule(k, smat_mul(smat_mul(S, E.phi_t), Si))
    E2._rank = E._rank
    return E2, TModuleMorphism(E, E2, S, check=False)


def product_module(E1: TModule, E2: TModule) -> TModule:
    """E1 x E2 (block diagonal phi_t)."""
    k = E1.ring
    d = E1.d + E2.d
    phi = [[SkewPoly(k) for _ in range(d)] for _ in range(d)]
    for i in range(E1.d):
        for j in range(E1.d):
            phi[i][j] = E1.phi_t[i][j]
    for i in range(E2.d):
        for j in range(E2.d):
            phi[E1.d + i][E1.d + j] = E2.phi_t[i][j]
    return TModule(k, phi)


def random_product(rng, k, rank: int) -> TModule:
    """E1 x E2 with two Drinfeld modules of the same rank, hidden by a random
    constant change of basis."""
    E = product_module(random_drinfeld(rng, k, rank), random_drinfeld(rng, k, rank))
    E._rank = 2 * rank
    return conjugate(E, random_matrix_gl(rng, k, 2))[0]


def random_isogeny(rng, E: TModule, max_a_degree: int = 2, end_degree: int = 0, frobenius: bool = False) -> TModuleMorphism:
    """A nonzero composite c * pi^j * u * phi_a: E -> E' with a in F_q[t]
    monic, u an endomorphism from a bounded-degree basis (or 1), pi = tau^[k:F_q]
    the Frobenius endomorphism (j in {0, 1} when ``frobenius``) and c a random
    constant change of basis; E' = c E c^-1."""
    k = E.ring
    a = random_fq_poly(rng, k, rng.randrange(max_a_degree + 1))
    f = E.endo(a)
    if frobenius and rng.randrange(2):
        from .tmodule import tau_power

        f = TModuleMorphism(E, E, tau_power(E, k.degree), check=False) * f
    if end_degree:
        from .tmodule import end_basis, is_isogeny_module

        basis = end_basis(E, end_degree)
        if basis:
            u = basis[0]
            for b in basis[1:]:
                if rng.randrange(2):
                    u = u + b
            if is_isogeny_module(u):
                f = u * f
    E2, c = conjugate(E, random_matrix_gl(rng, k, E.d))
    return c * f


def drinfeld_or_none(k, coeffs):
    try:
        return new_drinfeld(k, coeffs)
    except NotDrinfeld:
        return None


__all__ = [
    "SMALL_FIELDS",
    "rng_of",
    "random_field",
    "random_elem",
    "random_unit",
    "random_skew",
    "random_fq_poly",
    "random_poly",
    "random_drinfeld",
    "random_matrix_gl",
    "conjugate",
    "product_module",
    "random_product",
    "random_isogeny",
    "drinfeld_or_none",
    "phi_of",
]
