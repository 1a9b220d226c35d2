import random

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld import GF, SkewPoly, TruncatedRing, right_divmod, standard_form
from drinfeld.errors import NonUnitLeadingCoefficient
from drinfeld.skew import skew_inverse_unipotent, smat_right_divmod, smat_mul, smat_add

from oracles import BruteField, skew_mul_naive

F4 = GF(2, 2, q=2)
W = 2
tau = SkewPoly.tau(F4)


def S(*cs, R=F4):
    return SkewPoly(R, cs)


def test_commutation_rule():
    assert tau * S(W) == S(0, F4.add(W, 1))


def test_square():
    b = S(W, 1)
    assert b * b == S(W ^ 1, 1, 1)


def test_division_example():
    g, h = right_divmod(S(0, 0, 1), S(W, 1))
    assert g == S(F4.mul(W, W), 1) and h == S(1)
    assert g * S(W, 1) + h == S(0, 0, 1)


def test_division_trivial_cases():
    phi = S(W, 1, 1)
    c = S(1, 1)
    assert right_divmod(c, phi) == (S(), c)
    assert right_divmod(phi, phi) == (S(1), S())
    R = TruncatedRing(GF(2), 2)
    with pytest.raises(NonUnitLeadingCoefficient):
        right_divmod(S(1, 1, R=R), S(R.one, R.eps, R=R))


def test_matrix_division():
    Z = S()
    C = [[S(0, 0, 1), Z], [Z, S(0, 0, 1)]]
    Phi = [[S(W, 1), Z], [Z, S(W, 1)]]
    G, H = smat_right_divmod(C, Phi)
    assert G == [[S(3, 1), Z], [Z, S(3, 1)]] and H == [[S(1), Z], [Z, S(1)]]
    th = [[S(W, 1), Z], [Z, S(W, 1)]]
    G, H = smat_right_divmod(th, th)
    assert G == [[S(1), Z], [Z, S(1)]] and H == [[Z, Z], [Z, Z]]
    assert smat_add(smat_mul(G, th), H) == th


def test_standard_form_example():
    R = TruncatedRing(GF(2), 2)
    b = S(R.one, R.one, R.eps, R=R)
    c, b_std = standard_form(b, 1)
    assert b_std.degree() == 1 and b_std == S(R.one, R.one, R=R)
    assert b * c == c * b_std
    assert all(R.is_nilpotent(x) for x in c.c[1:]) and c.c[0] == R.one


def test_standard_form_trivial():
    b = S(W, 1, 1)
    assert standard_form(b, 2) == (S(1), b)
    R = TruncatedRing(GF(2), 3)
    b = S(R.eps, R.one, R=R)
    c, b2 = standard_form(b, 1)
    assert c == S(R.one, R=R) and b2 == b


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_standard_form_random(seed):
    rng = random.Random(seed)
    R = TruncatedRing(GF(3, 2, q=3), rng.randrange(2, 4))
    r = rng.randrange(1, 3)
    cs = [R.elem([rng.randrange(3) for _ in range(2 * R.N)]) for _ in range(r)]
    cs.append(R.from_base(rng.randrange(1, 9)))
    cs += [R.mul(R.eps, R.elem([rng.randrange(3) for _ in range(2 * R.N)])) for _ in range(rng.randrange(1, 3))]
    b = SkewPoly(R, cs)
    c, b_std = standard_form(b, r)
    assert b_std.degree() == r
    assert b * c == c * b_std
    assert c * skew_inverse_unipotent(c) == SkewPoly.one(R)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_multiplication_against_naive(seed):
    rng = random.Random(seed)
    F = GF(2, 3, q=2)
    B = BruteField(2, F.modulus)
    a = [rng.randrange(8) for _ in range(rng.randrange(5))]
    b = [rng.randrange(8) for _ in range(rng.randrange(5))]
    got = SkewPoly(F, a) * SkewPoly(F, b)
    conv = lambda x: tuple(F.coords(x))  # noqa: E731
    want = skew_mul_naive(B, 2, [conv(x) for x in a], [conv(x) for x in b])
    assert [conv(x) for x in got.c] == want


def test_linearized_evaluation():
    phi = S(W, 1)
    # phi(x) = omega x + x^2 vanishes exactly on {0, omega}
    assert [x for x in range(4) if phi(x) == 0] == [0, W]
