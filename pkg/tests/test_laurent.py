"""Kernel tests: exact Laurent arithmetic, division, symmetrization, maps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qchar.laurent import (
    LaurentPoly,
    antisymmetrize,
    constrain,
    divide_int,
    exact_div,
    signed_buckets,
    signed_orbit_sum,
    symmetrize,
    vandermonde,
    w_to_q,
)
from qchar.rings import (
    RING_Q,
    RING_W,
    ExponentNotDivisible,
    NotDivisible,
    Scalar,
)


def zvar(i, nvars, ring=RING_Q):
    return LaurentPoly.variable(ring, nvars, i)


def small_polys(nvars=2, ring=RING_Q, max_terms=4):
    term = st.tuples(
        st.tuples(*([st.integers(-2, 2)] * (nvars + 1))),
        st.integers(-5, 5).filter(bool),
    )
    def build(terms):
        out = LaurentPoly.zero(ring, nvars)
        for key, c in terms:
            out = out + LaurentPoly(ring, nvars, {tuple(key): c})
        return out
    return st.lists(term, min_size=0, max_size=max_terms).map(build)


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f + (-f) == LaurentPoly.zero(RING_Q, 2)


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys())
def test_exact_div_roundtrip(f, g):
    if g.is_zero():
        return
    assert exact_div(f * g, g) == f


@settings(max_examples=40, deadline=None)
@given(small_polys(nvars=3), small_polys(nvars=3))
def test_constrain_is_ring_map(f, g):
    assert constrain(f * g, 2) == constrain(f, 2) * constrain(g, 2)
    assert constrain(f + g, 2) == constrain(f, 2) + constrain(g, 2)


@settings(max_examples=40, deadline=None)
@given(small_polys(nvars=3))
def test_signed_orbit_idempotence(f):
    # the N!-cleared antisymmetrizer repeats up to the N! factor, and the
    # signed orbit of an antisymmetric polynomial is N! times itself
    once = signed_orbit_sum(f)
    assert signed_orbit_sum(once) == once * 6


def test_exact_div_examples():
    z1, z2 = zvar(0, 2), zvar(1, 2)
    assert exact_div(z1 * z1 - z2 * z2, z1 - z2) == z1 + z2
    with pytest.raises(NotDivisible):
        exact_div(z1 * z1 + z2, z1 - z2)
    with pytest.raises(ZeroDivisionError):
        exact_div(z1, LaurentPoly.zero(RING_Q, 2))


def test_exact_div_with_unit_coefficients():
    # coefficient divisibility in the scalar ring matters too
    f = LaurentPoly.monomial(RING_Q, 1, (0,), 2)
    g = LaurentPoly.monomial(RING_Q, 1, (0,), 3)
    with pytest.raises(NotDivisible):
        exact_div(f, g)
    h = LaurentPoly.monomial(RING_Q, 1, (1,), 6, unit=2)
    assert exact_div(h, g) == LaurentPoly.monomial(RING_Q, 1, (1,), 2, unit=2)


def test_vandermonde_values():
    assert vandermonde(RING_Q, 1) == LaurentPoly.one(RING_Q, 1)
    z1, z2 = zvar(0, 2), zvar(1, 2)
    assert vandermonde(RING_Q, 2) == z1 - z2
    v3 = vandermonde(RING_Q, 3)
    assert len(v3.coeffs) == 6
    assert all(c in (1, -1) for c in v3.coeffs.values())


def test_antisymmetrize_fixes_vandermonde():
    for n in (2, 3, 4):
        d = vandermonde(RING_Q, n)
        assert antisymmetrize(d) == d


def test_antisymmetrize_kills_symmetric():
    z1, z2 = zvar(0, 2), zvar(1, 2)
    assert antisymmetrize(z1 * z2).is_zero()
    assert symmetrize(z1 + z2) == z1 + z2


def test_antisymmetrize_inexact_raises():
    # the signed orbit of z1 is z1 - z2, not divisible by 2! over ZZ
    z1 = zvar(0, 2)
    with pytest.raises(NotDivisible):
        antisymmetrize(z1)
    z2 = zvar(1, 2)
    assert signed_orbit_sum(z1) == z1 - z2


def test_signed_buckets_cancellation():
    # repeated exponents cancel; distinct ones land signed on sorted keys
    f = LaurentPoly.monomial(RING_Q, 2, (1, 1))
    assert signed_buckets(f) == {}
    g = LaurentPoly.monomial(RING_Q, 2, (0, 2), 3, unit=1)
    assert signed_buckets(g) == {(2, 0): {1: -3}}


def test_constrain_examples():
    from qchar.symfun import elementary, schur

    assert constrain(elementary(3, 3), 2) == LaurentPoly.one(RING_Q, 2)
    z3 = zvar(2, 3)
    assert constrain(z3, 2) == LaurentPoly.monomial(RING_Q, 2, (-1, -1))
    assert constrain(schur((1, 1, 1), 3), 2) == LaurentPoly.one(RING_Q, 2)


def test_w_to_q():
    c = LaurentPoly.unit_power(RING_W, 1, -6)
    assert w_to_q(c, 2) == LaurentPoly.unit_power(RING_Q, 1, 1)
    three = LaurentPoly.from_int(RING_W, 1, 3)
    assert w_to_q(three, 2) == LaurentPoly.from_int(RING_Q, 1, 3)
    with pytest.raises(ExponentNotDivisible):
        w_to_q(LaurentPoly.unit_power(RING_W, 1, -3), 2)


def test_scalar_w_to_q():
    s = Scalar(RING_W, {-6: 1, 0: 3})
    assert s.w_to_q(2) == Scalar(RING_Q, {1: 1, 0: 3})
    with pytest.raises(ExponentNotDivisible):
        Scalar(RING_W, {-3: 1}).w_to_q(2)


def test_divide_int():
    f = LaurentPoly.from_int(RING_Q, 1, 6)
    assert divide_int(f, 3) == LaurentPoly.from_int(RING_Q, 1, 2)
    with pytest.raises(NotDivisible):
        divide_int(f, 4)


def test_serialization_canonical():
    # (1 - q^-1)*z1^2*z2^-1 style output, lexicographically sorted terms
    f = LaurentPoly.monomial(RING_Q, 2, (2, -1), 1, unit=0) + LaurentPoly.monomial(
        RING_Q, 2, (2, -1), -1, unit=-1
    )
    assert f.to_text() == "(1 - q^-1)*z1^2*z2^-1"
    g = f + LaurentPoly.one(RING_Q, 2)
    assert g.to_text() == "(1 - q^-1)*z1^2*z2^-1 + 1"
    assert LaurentPoly.zero(RING_Q, 2).to_text() == "0"


def test_pow_and_unit_shift():
    z1, z2 = zvar(0, 2), zvar(1, 2)
    assert (z1 + z2) ** 0 == LaurentPoly.one(RING_Q, 2)
    assert (z1 + z2) ** 3 == (z1 + z2) * (z1 + z2) * (z1 + z2)
    assert z1.times_unit(2).scalar_coeff((1, 0)) == Scalar(RING_Q, {2: 1})
