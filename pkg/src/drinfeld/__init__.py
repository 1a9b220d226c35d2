"""Drinfeld modules, Anderson t-modules, t-motives and finite shtukas over
finite fields and their truncated local rings, with exact arithmetic."""

from .errors import *  # noqa: F401,F403
from .rings import GF, FiniteField, TruncatedRing, ring_from_json
from .polynomials import Poly, parse_fq_poly, poly_to_str, smith_normal_form, elementary_divisors
from .skew import SkewPoly, right_divmod, standard_form
from .tmodule import (
    TModule,
    TModuleMorphism,
    end_basis,
    frobenius_twist,
    hom_basis,
    is_isogeny_module,
    is_separable_module,
    kernel_points,
    new_drinfeld,
    phi_of,
    splitting_degree,
    tau_power,
)
from .motive import (
    Cokernel,
    MotiveMorphism,
    TMotive,
    annihilator,
    cokernel,
    cokernel_shtuka,
    is_isogeny_motive,
    is_separable_motive,
    motive_morphism_of,
    motive_of,
    rank_dim,
    round_trip_isomorphism,
    tmodule_of,
)
from .shtuka import (
    FinShtuka,
    GroupSchemePresentation,
    connected_etale_split,
    crt_check,
    dr_q,
    m_q,
    omega,
    tau_invariants,
    torsion_points,
    torsion_shtuka,
)
from .isogeny import (
    DualCertificate,
    are_isogenous,
    dual_isogeny,
    dual_isogeny_module,
    exponent_is_minimal,
    frobenius_isogeny,
)
from .local import (
    LocalShtuka,
    char_prime,
    divisibility_check,
    is_formal,
    local_invariants,
    local_shtuka_at,
)

__version__ = "0.1.0"
