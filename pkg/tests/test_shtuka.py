import pytest

from drinfeld import (
    GF,
    FinShtuka,
    GroupSchemePresentation,
    Poly,
    connected_etale_split,
    crt_check,
    dr_q,
    m_q,
    new_drinfeld,
    omega,
    tau_invariants,
    torsion_points,
    torsion_shtuka,
)
from drinfeld.errors import MalformedPresentation, NotCoprime, NotEtale

from oracles import count_additive_roots

F4 = GF(2, 2, q=2, theta=2)
W = 2
C4 = new_drinfeld(F4, [W, 1])


def P(*cs, F=F4):
    return Poly(F, cs)


def test_drinfeld_functor_examples():
    G = dr_q(FinShtuka(F4, [[0]]))
    assert G.order == 2 and not G.is_etale()
    assert G.relations() == ["z1^2 = 0"]
    G = dr_q(FinShtuka(F4, [[1]]))
    assert G.is_etale() and G.relations() == ["z1^2 = 1*z1"]
    assert dr_q(FinShtuka(F4, [[1, 0], [0, 1]])).order == 4


def test_inverse_functor():
    V = m_q(GroupSchemePresentation(F4, [[1]]))
    assert V.F == [[1]] and V.is_etale()
    assert m_q(GroupSchemePresentation(F4, [[0]])).F == [[0]]
    V = FinShtuka(F4, [[1, 2], [3, 0]])
    assert m_q(dr_q(V)) == V
    with pytest.raises(MalformedPresentation):
        m_q(GroupSchemePresentation(F4, [[1, 2]]))
    with pytest.raises(MalformedPresentation):
        m_q(GroupSchemePresentation(F4, [[7]]))


def test_connected_etale_split():
    nil, et = connected_etale_split(FinShtuka(F4, [[0]]))
    assert (nil.n, et.n) == (1, 0)
    nil, et = connected_etale_split(FinShtuka(F4, [[W]]))
    assert (nil.n, et.n) == (0, 1)
    nil, et = connected_etale_split(FinShtuka(F4, [[0, 0], [0, 1]]))
    assert (nil.n, et.n) == (1, 1)
    assert nil.is_nilpotent() and et.is_etale()


def test_tau_invariants():
    assert tau_invariants(FinShtuka(GF(2), [[1]]), 1) == [((1,),)]
    assert tau_invariants(FinShtuka(F4, [[W]]), 1) == [((3,),)]  # omega^2 = 3
    assert len(tau_invariants(FinShtuka(F4, [[1, 0], [0, 1]]), 1)) == 2
    with pytest.raises(NotEtale):
        tau_invariants(FinShtuka(F4, [[0]]), 1)


def test_omega():
    assert omega(FinShtuka(F4, [[1]]))[0] == 0
    assert omega(FinShtuka(F4, [[0, 0], [0, 0]]))[0] == 2
    C = new_drinfeld(GF(2, 2, q=2, theta=1), [1, 1])
    assert omega(torsion_shtuka(C, Poly(C.ring, [1, 1])))[0] == 1


def test_torsion_shtuka():
    V = torsion_shtuka(C4, P(0, 1))
    assert V.n == 1 and V.F == [[W]] and V.is_etale()
    V = torsion_shtuka(C4, P(1, 1, 1))  # minimal polynomial of omega: a(theta) = 0
    assert not V.is_etale()
    assert torsion_shtuka(C4, P(1)).n == 0


def test_carlitz_torsion():
    T = torsion_points(C4, P(0, 1), m=1)
    assert [p[0] for p in T.points] == [(0,), (W,)]
    assert T.free_rank == 1
    T = torsion_points(C4, P(0, 0, 1))
    assert T.order == 4 and T.free_rank == 1 and T.invariant_factors == [P(0, 0, 1)]
    m = T.field.m
    assert count_additive_roots(2, [1, 1, 1], 2, [[1, 1], [1], [1]], 2 * m) == 4


def test_rank2_torsion():
    E = new_drinfeld(F4, [W, 1, 1])
    T = torsion_points(E, P(0, 1))
    assert T.order == 4 and T.free_rank == 2
    # the Frobenius of k permutes the points and fixes 0
    assert sorted(T.frobenius) == list(range(4)) and T.frobenius[0] == 0


def test_crt():
    assert crt_check(C4, P(0, 1), P(1, 1))
    assert crt_check(C4, P(1), P(0, 1))
    with pytest.raises(NotCoprime):
        crt_check(C4, P(0, 1), P(0, 1))
