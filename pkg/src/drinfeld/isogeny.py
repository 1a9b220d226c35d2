"""Dual isogenies, isogeny search and Frobenius isogenies."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BaseTooLarge, NotAMorphism, NotAnIsogeny, UnsupportedShape
from .motive import (
    MotiveMorphism,
    TMotive,
    annihilator,
    coords_to_row,
    is_isogeny_motive,
    motive_morphism_of,
    motive_of,
)
from .polynomials import Poly, pmat_adjugate, pmat_det, pmat_eq, pmat_frob, pmat_identity, pmat_mul, pmat_scalar
from .skew import smat_eq, smat_mul
from .tmodule import TModule, TModuleMorphism, hom_basis, is_isogeny_module, phi_of


@dataclass
class DualCertificate:
    f: object
    g: object
    a: Poly
    s: int
    checked: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return bool(self.checked) and all(self.checked.values())


def _integral_inverse_times(U, a: Poly):
    """a * U^-1 over k[t], or None when it has denominators."""
    det = pmat_det(U)
    adj = pmat_adjugate(U)
    try:
        return [[(x * a).exact_div(det) for x in row] for row in adj]
    except ArithmeticError:
        return None


def dual_isogeny(f: MotiveMorphism) -> DualCertificate:
    """g with f o g = a^s and g o f = a^s, a the monic annihilator in F_q[t]
    of coker f and s minimal; g = a^s adj(U) / det U."""
    if not is_isogeny_motive(f):
        raise NotAnIsogeny("dual isogeny needs an isogeny")
    a = annihilator(f)
    s = 0 if a.degree() == 0 else 1
    # a is the full annihilator, so a^1 kills coker f; a^0 = 1 only when U is invertible
    a_s = a ** s
    G = _integral_inverse_times(f.U, a_s)
    if G is None:
        raise AssertionError("annihilator does not clear the denominators of U^-1")
    g = MotiveMorphism(f.target, f.source, G, check=False)
    k = f.source.ring
    n_src, n_tgt = f.source.r, f.target.r
    checked = {
        "f_after_g": pmat_eq(pmat_mul(f.U, G), pmat_scalar(k, n_tgt, a_s)),
        "g_after_f": pmat_eq(pmat_mul(G, f.U), pmat_scalar(k, n_src, a_s)),
        "g_semilinear": g.is_semilinear(),
        "polynomial": True,
    }
    return DualCertificate(f, g, a, s, checked)


def exponent_is_minimal(cert: DualCertificate) -> bool:
    """a^(s-1) U^-1 is not integral (vacuous when s = 0)."""
    if cert.s == 0:
        return True
    f = cert.f if isinstance(cert.f, MotiveMorphism) else motive_morphism_of(cert.f)
    return _integral_inverse_times(f.U, cert.a ** (cert.s - 1)) is None


def dual_isogeny_module(f: TModuleMorphism) -> DualCertificate:
    """Dual of an isogeny of t-modules: the motive-side dual transported back
    to a skew matrix G: E' -> E with G*F = phi_{a^s} and F*G = phi'_{a^s}."""
    if not is_isogeny_module(f):
        raise NotAnIsogeny("dual isogeny needs an isogeny")
    E, E2 = f.source, f.target
    Mf = motive_morphism_of(f)
    cert = dual_isogeny(Mf)
    # g_M: M(E) -> M(E'); the skew map G has rows g_M(e_i) in M(E')
    rows = []
    for i in range(E.d):
        col = [row[i] for row in cert.g.U]
        rows.append(coords_to_row(E2, col))
    try:
        g = TModuleMorphism(E2, E, rows)
    except NotAMorphism as exc:
        raise UnsupportedShape(f"transported dual is not a morphism: {exc}") from None
    a_s = cert.a ** cert.s
    checked = dict(cert.checked)
    checked["module_g_after_f"] = smat_eq(smat_mul(g.F, f.F), phi_of(E, a_s))
    checked["module_f_after_g"] = smat_eq(smat_mul(f.F, g.F), phi_of(E2, a_s))
    checked["transport"] = motive_morphism_of(g) == cert.g
    return DualCertificate(f, g, cert.a, cert.s, checked)


def are_isogenous(E: TModule, E2: TModule, search_bound: int | None = None):
    """First isogeny E -> E' of tau-degree <= bound found by linear algebra,
    or None.  Different ranks or dimensions return None at once."""
    if E.d != E2.d or E.rank != E2.rank:
        return None
    bound = E.rank * E.d + 4 if search_bound is None else search_bound
    for D in range(bound + 1):
        for F in hom_basis(E, E2, D):
            f = TModuleMorphism(E, E2, F, check=False)
            if f.is_zero():
                continue
            if is_isogeny_module(f):
                return f
    return None


def frobenius_isogeny(M: TMotive, l: int) -> MotiveMorphism:
    """pi = T T^(q) ... T^(q^(l-1)), the motive of tau^l; needs k in F_{q^l}."""
    k = M.ring
    if l < 1 or l % k.degree:
        raise BaseTooLarge(f"k = F_{k.order} is not contained in F_(q^{l})")
    P = pmat_identity(k, M.r)
    for i in range(l):
        P = pmat_mul(P, pmat_frob(M.T, i))
    return MotiveMorphism(M, M, P)


def frobenius_isogeny_module(E: TModule, l: int) -> TModuleMorphism:
    k = E.ring
    if l < 1 or l % k.degree:
        raise BaseTooLarge(f"k = F_{k.order} is not contained in F_(q^{l})")
    from .tmodule import tau_power

    return TModuleMorphism(E, E, tau_power(E, l))


def commutes(f: MotiveMorphism, g: MotiveMorphism) -> bool:
    return pmat_eq(pmat_mul(f.U, g.U), pmat_mul(g.U, f.U))


__all__ = [
    "DualCertificate",
    "dual_isogeny",
    "dual_isogeny_module",
    "exponent_is_minimal",
    "are_isogenous",
    "frobenius_isogeny",
    "frobenius_isogeny_module",
    "commutes",
    "motive_of",
]
