import pytest

from drinfeld import (
    GF,
    Poly,
    SkewPoly,
    TModule,
    TModuleMorphism,
    TruncatedRing,
    end_basis,
    hom_basis,
    is_isogeny_module,
    is_separable_module,
    kernel_points,
    new_drinfeld,
    phi_of,
    splitting_degree,
)
from drinfeld.errors import NotAMorphism, NotDrinfeld, PreconditionViolated
from drinfeld.tmodule import find_isomorphism, frobenius_twist, kernel_dimension_fq, lie

from oracles import count_additive_roots

F4 = GF(2, 2, q=2, theta=2)
W = 2
F2 = GF(2, theta=1)
C4 = new_drinfeld(F4, [W, 1])
C2 = new_drinfeld(F2, [1, 1])


def S(R, *cs):
    return SkewPoly(R, cs)


def test_rank_and_dimension():
    assert (C4.rank, C4.d) == (1, 1)
    E = new_drinfeld(F4, [W, 3, 1])
    assert E.rank == 2
    with pytest.raises(NotDrinfeld):
        new_drinfeld(F4, [0, 1])
    with pytest.raises(NotDrinfeld):
        new_drinfeld(F4, [W])


def test_standard_form_on_construction():
    R = TruncatedRing(GF(2), 2, theta=(1, 0))
    E = new_drinfeld(R, [R.one, R.one, R.eps])
    assert E.rank == 1 and E.phi.degree() == 1
    assert E.std_unit is not None


def test_phi_of():
    assert phi_of(C4, Poly(F4, [0, 0, 1]))[0][0] == S(F4, 3, 1, 1)
    assert phi_of(C4, Poly(F4, [1]))[0][0] == S(F4, 1)
    E = new_drinfeld(F4, [W, 1, 1])
    assert phi_of(E, Poly(F4, [1, 0, 0, 1]))[0][0].degree() == 6


def test_lie():
    assert lie(C4.endo(Poly(F4, [0, 1])))[0][0] == W
    assert lie(TModuleMorphism(C2, C2, [[S(F2, 0, 1)]]))[0][0] == 0
    assert lie(TModuleMorphism(C2, C2, [[S(F2, 1, 1)]]))[0][0] == 1


def test_morphism_check():
    with pytest.raises(NotAMorphism):
        TModuleMorphism(C4, C4, [[S(F4, 0, 1)]])  # tau does not commute with omega + tau


def test_isogeny_and_separability():
    tau = TModuleMorphism(C2, C2, [[S(F2, 0, 1)]])
    assert is_isogeny_module(tau)
    assert not is_isogeny_module(TModuleMorphism(C2, C2, [[S(F2)]]))
    assert is_isogeny_module(C4.endo(Poly(F4, [1, 1])))
    assert is_separable_module(C4.endo(Poly(F4, [0, 1])))
    assert not is_separable_module(tau)
    assert not is_separable_module(C4.endo(Poly(F4, [1, 1, 1])))  # a(omega) = 0


def test_carlitz_t_kernel_over_f4():
    pts = kernel_points(C4.endo(Poly(F4, [0, 1])), 1)
    assert [p[0] for p in pts] == [(0,), (W,)]
    assert kernel_points(C4.identity(), 1) == [((0,),)]


def test_t_squared_kernel_points():
    f = C4.endo(Poly(F4, [0, 0, 1]))
    m = splitting_degree(f)
    pts = kernel_points(f, m)
    assert len(pts) == 4
    # oracle: enumerate the field of order 4^m
    assert count_additive_roots(2, [1, 1, 1], 2, [[1, 1], [1], [1]], 2 * m) == 4


def test_hom_and_end():
    E = new_drinfeld(F2, [1, 1, 1])
    basis = end_basis(E, 2)
    # End contains 1, tau, tau^2 (= phi_t + 1 + tau) over F_2
    assert len(basis) == 3
    assert all(b.source == E for b in basis)
    E2 = new_drinfeld(F4, [W, 1, 1])
    assert hom_basis(C4, E2, 3) == []


def test_find_isomorphism_and_twist():
    E = new_drinfeld(F4, [W, 1, 1])
    c = 3
    ci = F4.inv(c)
    E2 = new_drinfeld(F4, [W, F4.mul(F4.mul(c, 1), F4.frob(ci)), F4.mul(c, F4.frob(ci, 2))])
    f = find_isomorphism(E, E2)
    assert f is not None and f.F[0][0].degree() == 0
    with pytest.raises(PreconditionViolated):
        frobenius_twist(C4)
    E3 = new_drinfeld(GF(2, 2, q=2, theta=1), [1, 2, 1])
    T = frobenius_twist(E3)
    assert T.phi == S(E3.ring, 1, 3, 1)


def test_d2_lie_condition():
    R = F4
    Z = S(R)
    phi = [[S(R, W, 1), S(R, 1)], [Z, S(R, W, 1)]]
    E = TModule(R, phi)
    assert E.d == 2
    with pytest.raises(PreconditionViolated):
        TModule(R, [[S(R, 1, 1), Z], [Z, S(R, W, 1)]])


def test_kernel_dimension_matches_brute_force():
    E = new_drinfeld(F4, [W, 1, 1])
    f = E.endo(Poly(F4, [0, 1]))
    for m in (1, 2):
        dim = kernel_dimension_fq(f, m)
        assert 2 ** dim == count_additive_roots(2, [1, 1, 1], 2, [[0, 1], [1], [1]], 2 * m)
