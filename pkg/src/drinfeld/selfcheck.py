"""Small seeded invariant suites, run by ``drinfeld selfcheck``.

Each suite returns (passed, total).  Sizes are kept small so the whole run
takes a few seconds; the test suite runs the same properties at full size.
"""

from __future__ import annotations

from .errors import NotAbelian
from .generators import (
    random_drinfeld,
    random_field,
    random_fq_poly,
    random_isogeny,
    random_poly,
    random_product,
    random_skew,
    rng_of,
)
from .isogeny import dual_isogeny_module, exponent_is_minimal
from .motive import is_isogeny_motive, motive_morphism_of, round_trip_isomorphism
from .polynomials import pmat_det, pmat_mul
from .rings import GF, TruncatedRing
from .shtuka import FinShtuka, dr_q, m_q, torsion_points
from .skew import right_divmod
from .tmodule import TModuleMorphism, hom_basis, is_isogeny_module


def suite_skew_division(rng, n=200):
    ok = 0
    for _ in range(n):
        k = random_field(rng, 9, theta=False)
        R = k if rng.randrange(2) else TruncatedRing(k, 1 + rng.randrange(3))
        phi = random_skew(rng, R, rng.randrange(4), unit_lead=True)
        c = random_skew(rng, R, rng.randrange(7))
        g, h = right_divmod(c, phi)
        ok += g * phi + h == c and h.degree() < phi.degree()
    return ok, n


def suite_smith(rng, n=50):
    from .polynomials import smith_normal_form

    ok = 0
    for _ in range(n):
        k = random_field(rng, 9, theta=False)
        s = 1 + rng.randrange(4)
        A = [[random_poly(rng, k, rng.randrange(4)) for _ in range(s)] for _ in range(s)]
        U, D, V = smith_normal_form(A)
        diag = [D[i][i] for i in range(s)]
        good = pmat_mul(pmat_mul(U, A), V) == D
        good &= all(D[i][j].is_zero() for i in range(s) for j in range(s) if i != j)
        good &= all(b.is_zero() or (not a.is_zero() and (b % a).is_zero()) for a, b in zip(diag, diag[1:]))
        good &= pmat_det(U).degree() == 0 and pmat_det(V).degree() == 0
        ok += bool(good)
    return ok, n


def suite_round_trip(rng, n=20):
    ok = 0
    for _ in range(n):
        k = random_field(rng)
        E = random_drinfeld(rng, k, 1 + rng.randrange(3))
        try:
            # raises unless both compositions are checked to be the identity
            round_trip_isomorphism(E)
        except NotAbelian:
            continue
        ok += 1
    return ok, n


def suite_contravariance(rng, n=20):
    ok = 0
    for _ in range(n):
        k = random_field(rng)
        E = random_drinfeld(rng, k, 1 + rng.randrange(2))
        g = random_isogeny(rng, E, 1)
        f = random_isogeny(rng, g.target, 1)
        ok += motive_morphism_of(f * g) == motive_morphism_of(g) * motive_morphism_of(f)
    return ok, n


def suite_dual(rng, n=20):
    ok = 0
    for i in range(n):
        k = random_field(rng)
        E = random_product(rng, k, 1) if i % 4 == 0 else random_drinfeld(rng, k, 1 + rng.randrange(3))
        cert = dual_isogeny_module(random_isogeny(rng, E, 2))
        ok += cert.verified and exponent_is_minimal(cert)
    return ok, n


def suite_isogeny_predicates(rng, n=20):
    ok = total = 0
    for _ in range(n):
        k = random_field(rng, 4)
        E = random_drinfeld(rng, k, 1 + rng.randrange(2))
        for F in hom_basis(E, E, 2)[:2]:
            f = TModuleMorphism(E, E, F, check=False)
            total += 1
            ok += is_isogeny_module(f) == is_isogeny_motive(motive_morphism_of(f))
    return ok, total


def suite_shtuka(rng, n=100):
    ok = 0
    for _ in range(n):
        k = random_field(rng, 16, theta=False)
        s = rng.randrange(5)
        V = FinShtuka(k, [[rng.randrange(k.order) for _ in range(s)] for _ in range(s)])
        G = dr_q(V)
        ok += m_q(G) == V and dr_q(m_q(G)).C == G.C and G.order == k.q ** s
    return ok, n


def suite_torsion(rng, n=6):
    ok = 0
    for _ in range(n):
        k = GF(2, 2, q=2, theta=rng.randrange(1, 4))
        E = random_drinfeld(rng, k, 1 + rng.randrange(2))
        a = random_fq_poly(rng, k, 1)
        if not a(k.theta):
            a = a + 1
        T = torsion_points(E, a)
        ok += T.order == k.q ** (E.rank * int(a.degree())) and T.free_rank == E.rank
    return ok, n


SUITES = {
    "skew_division": suite_skew_division,
    "smith": suite_smith,
    "round_trip": suite_round_trip,
    "contravariance": suite_contravariance,
    "dual_isogeny": suite_dual,
    "isogeny_predicates": suite_isogeny_predicates,
    "shtuka_functor": suite_shtuka,
    "torsion": suite_torsion,
}


def run(seed: int = 0) -> dict:
    results = {}
    for name, fn in SUITES.items():
        passed, total = fn(rng_of(f"{seed}:{name}"))
        results[name] = {"passed": int(passed), "total": int(total)}
    passed = sum(r["passed"] for r in results.values())
    total = sum(r["total"] for r in results.values())
    return {"seed": seed, "suites": results, "passed": passed, "total": total, "ok": passed == total}
