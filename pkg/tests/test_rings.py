import pytest
from hypothesis import given, settings, strategies as st

from drinfeld import GF, Poly, TruncatedRing, ring_from_json
from drinfeld.errors import MalformedInput, NotIrreducible, PreconditionViolated

from oracles import BruteField

F4 = GF(2, 2, q=2, theta=2)  # omega = x, omega^2 = omega + 1
W = 2


def test_f4_square_matches_brute_force():
    B = BruteField(2, [1, 1, 1])
    assert B.mul((0, 1), (0, 1)) == (1, 1)
    assert F4.coords(F4.mul(W, W)) == [1, 1]
    assert F4.frob(W) == F4.add(W, 1)


def test_frob_of_fixed_points_and_monomial():
    assert F4.frob(0) == 0 and F4.frob(1) == 1
    R = TruncatedRing(GF(2), 3)
    assert R.frob(R.eps) == (0, 0, 1)


def test_truncated_units_and_nilpotents():
    R = TruncatedRing(GF(2), 2)
    u = (1, 1)
    assert R.is_unit(u) and R.inv(u) == u
    assert R.mul(u, u) == R.one
    assert R.is_nilpotent(R.eps) and not R.is_unit(R.eps)
    assert R.is_nilpotent(R.zero) and not R.is_unit(R.zero)


def test_gamma():
    assert F4.gamma(Poly(F4, [0, 1])) == W
    assert F4.gamma(Poly(F4, [1, 1, 1])) == 0
    assert F4.gamma(Poly(F4, [1])) == 1
    with pytest.raises(PreconditionViolated):
        GF(2).gamma(Poly(GF(2), [0, 1]))


def test_frob_fixed_points():
    assert F4.frob_fixed_points() == [0, 1]
    assert GF(2).frob_fixed_points() == [0, 1]
    R = TruncatedRing(GF(2), 2)
    assert sorted(R.frob_fixed_points()) == [(0, 0), (1, 0)]
    F9 = GF(3, 2, q=3)
    assert len(F9.frob_fixed_points()) == 3


def test_malformed_fields():
    with pytest.raises(MalformedInput):
        GF(4)
    with pytest.raises(NotIrreducible):
        ring_from_json({"p": 2, "modulus": [1, 0, 1]})
    with pytest.raises(MalformedInput):
        GF(2, 3, q=4)


def test_json_round_trip():
    for R in (F4, GF(3, 2, q=9, theta=5), TruncatedRing(GF(2, 2, q=2), 3, theta=(2, 1, 0))):
        assert ring_from_json(R.to_json()) == R


def test_ring_descriptor_with_kind():
    R = ring_from_json({"p": 2, "q": 4, "kind": "finite_field", "degree": 1, "modulus": [1, 1, 1], "theta": [0, 1]})
    assert R.order == 4 and R.q == 4 and R.theta == W


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (5, 1), (2, 4)]), st.data())
def test_field_axioms_against_brute_force(pn, data):
    p, n = pn
    F = GF(p, n)
    B = BruteField(p, F.modulus)
    a = data.draw(st.integers(0, F.order - 1))
    b = data.draw(st.integers(0, F.order - 1))
    assert F.coords(F.mul(a, b)) == list(B.mul(tuple(F.coords(a)), tuple(F.coords(b))))
    assert F.coords(F.add(a, b)) == list(B.add(tuple(F.coords(a)), tuple(F.coords(b))))
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.frob(a, F.degree) == a
