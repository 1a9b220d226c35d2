import pytest

from drinfeld import (
    GF,
    Poly,
    char_prime,
    divisibility_check,
    is_formal,
    local_invariants,
    local_shtuka_at,
    motive_of,
    new_drinfeld,
)
from drinfeld.errors import MalformedInput, PrecisionTooLow, ResidueFieldTooSmall
from drinfeld.local import corrupted, hensel_root, kernel_order_exponent

F2 = GF(2, theta=1)
F4 = GF(2, 2, q=2, theta=2)
W = 2
C2 = new_drinfeld(F2, [1, 1])
C4 = new_drinfeld(F4, [W, 1])


def test_char_prime():
    assert char_prime(C2) == Poly(F2, [1, 1])
    assert char_prime(C4) == Poly(F4, [1, 1, 1])
    assert char_prime(new_drinfeld(GF(2, theta=0), [0, 1])) == Poly(F2, [0, 1])


def test_carlitz_f2():
    L = local_shtuka_at(motive_of(C2), Poly(F2, [1, 1]), 3)
    assert L.omega == (1, 1, 0)
    assert L.Tauhat == [[(0, 1, 0)]]
    assert local_invariants(L).local_dim == 1 and L.r == 1
    assert is_formal(L)


def test_carlitz_f4_twisted_product():
    L = local_shtuka_at(motive_of(C4), Poly(F4, [1, 1, 1]), 3)
    # Hensel: omega(z) = omega + z + z^2 (p' = 1 in characteristic 2)
    assert L.omega == (W, 1, 1)
    # (omega(z) - omega)(omega(z) - omega^2) = (z + z^2)(1 + z + z^2) = z + O(z^3)
    assert L.Tauhat == [[(0, 1, 0)]]
    assert L.f_deg == 2 and is_formal(L)
    assert local_invariants(L).order_exponents == [2, 4, 6]


def test_hensel_root_precision():
    p = Poly(F4, [1, 1, 1])
    w = hensel_root(F4, p, W, 6)
    from drinfeld.rings import TruncatedRing

    S = TruncatedRing(F4, 6)
    assert p.eval_in(S, w) == S.eps


def test_etale_prime():
    L = local_shtuka_at(motive_of(C2), Poly(F2, [0, 1]), 4)
    assert not is_formal(L)
    inv = local_invariants(L)
    assert inv.omega_dim == 0 and inv.etale_rank == 1
    assert inv.order_exponents == [1, 2, 3, 4]


def test_rank2_ordinary_and_supersingular():
    ordinary = new_drinfeld(F2, [1, 1, 1])
    L = local_shtuka_at(motive_of(ordinary), Poly(F2, [1, 1]), 4)
    inv = local_invariants(L)
    assert not is_formal(L) and inv.etale_rank == 1 and inv.omega_dim == 1
    assert inv.order_exponents == [2, 4, 6, 8]
    ss = new_drinfeld(F2, [1, 0, 1])
    L = local_shtuka_at(motive_of(ss), Poly(F2, [1, 1]), 4)
    inv = local_invariants(L)
    assert is_formal(L) and inv.etale_rank == 0 and inv.omega_dim == 1
    for j in range(1, 4):
        assert inv.order_exponents[j - 1] == kernel_order_exponent(ss, Poly(F2, [1, 1]), j)


def test_divisibility():
    L = local_shtuka_at(motive_of(C2), Poly(F2, [1, 1]), 3)
    assert divisibility_check(L)
    assert not divisibility_check(corrupted(L))


def test_reduce():
    L = local_shtuka_at(motive_of(C4), Poly(F4, [1, 1, 1]), 5)
    L3 = L.reduce(3)
    assert L3.Tauhat == local_shtuka_at(motive_of(C4), Poly(F4, [1, 1, 1]), 3).Tauhat
    with pytest.raises(PrecisionTooLow):
        L3.reduce(4)


def test_errors():
    M = motive_of(C2)
    with pytest.raises(MalformedInput):
        local_shtuka_at(M, Poly(F2, [1, 0, 1]), 3)  # (t+1)^2
    with pytest.raises(ResidueFieldTooSmall):
        local_shtuka_at(M, Poly(F2, [1, 1, 1]), 3)
    with pytest.raises(PrecisionTooLow):
        local_shtuka_at(M, Poly(F2, [1, 1]), 0)
    # det Tauhat = z^2 for phi_t = 1 + tau^2 at t + 1 with precision 2
    L = local_shtuka_at(motive_of(new_drinfeld(F2, [1, 0, 1])), Poly(F2, [1, 1]), 1)
    with pytest.raises(PrecisionTooLow):
        local_invariants(L)
