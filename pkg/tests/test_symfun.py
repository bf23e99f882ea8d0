"""Schur functions, expansions and the Pieri rule against classical facts."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qchar.laurent import LaurentPoly
from qchar.rings import RING_Q, NonzeroRemainder, NotSymmetric, Scalar
from qchar.symfun import (
    dominates,
    elementary,
    monomial_sym,
    partition_of_weight,
    partitions,
    partitions_up_to,
    pieri_e,
    schur,
    schur_expand,
    weight_of,
)


def test_schur_small_values():
    e1 = elementary(1, 3)
    e2 = elementary(2, 3)
    e3 = elementary(3, 3)
    assert schur((1,), 3) == e1
    assert schur((1, 1), 3) == e2
    s21 = schur((2, 1), 3)
    assert s21 == e1 * e2 - e3
    assert len(s21.coeffs) == 7  # 8 monomials, two collide at z1 z2 z3


def test_elementary_bounds():
    assert elementary(0, 3) == LaurentPoly.one(RING_Q, 3)
    assert elementary(4, 3).is_zero()
    assert elementary(1, 3).to_text() == "z1^1 + z2^1 + z3^1"


def test_schur_expand_roundtrip():
    for nvars in (2, 3, 4):
        for size in range(0, 7 if nvars < 4 else 5):
            for lam in partitions(size, nvars):
                assert schur_expand(schur(lam, nvars)) == {
                    lam: Scalar(RING_Q, {0: 1})
                }


def test_schur_expand_pieri_example():
    f = elementary(1, 3) * elementary(2, 3)
    out = schur_expand(f)
    one = Scalar(RING_Q, {0: 1})
    assert out == {(2, 1): one, (1, 1, 1): one}


def test_schur_expand_errors():
    z1 = LaurentPoly.variable(RING_Q, 2, 0)
    z2 = LaurentPoly.variable(RING_Q, 2, 1)
    with pytest.raises(NotSymmetric):
        schur_expand(z1 + z2 * 2)
    with pytest.raises(NonzeroRemainder):
        inv = LaurentPoly.monomial(RING_Q, 2, (-1, -1))
        schur_expand(z1 * z2 + inv)  # symmetric but Laurent


def test_littlewood_richardson_positivity():
    # products of Schur functions re-expand with nonnegative coefficients
    for lam, mu, nvars in [((2,), (1, 1), 3), ((2, 1), (1,), 3), ((1, 1), (1, 1), 4)]:
        out = schur_expand(schur(lam, nvars) * schur(mu, nvars))
        for coeff in out.values():
            assert set(coeff.data) == {0} and coeff.data[0] > 0


def test_pieri_rule_cases():
    assert pieri_e((), 2, 3) == [(1, 1)]
    assert pieri_e((1,), 1, 3) == [(2,), (1, 1)]
    assert pieri_e((1, 1), 1, 2) == [(2, 1)]
    assert pieri_e((2, 1), 0, 3) == [(2, 1)]
    assert pieri_e((1,), 4, 3) == []


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([lam for lam in partitions_up_to(4, 3)]), st.integers(0, 3))
def test_pieri_matches_polynomial_product(lam, m):
    nvars = 3
    lhs = schur(lam, nvars) * elementary(m, nvars)
    rhs = LaurentPoly.zero(RING_Q, nvars)
    for mu in pieri_e(lam, m, nvars):
        rhs = rhs + schur(mu, nvars)
    assert lhs == rhs


def test_monomial_symmetric():
    m21 = monomial_sym((2, 1), 3)
    assert len(m21.coeffs) == 6
    assert schur((2, 1), 3) - m21 == monomial_sym((1, 1, 1), 3) * 2


def test_weight_partition_bijection():
    assert weight_of((2, 1), 2) == (1, 1)
    assert partition_of_weight((1, 1)) == (2, 1)
    assert partition_of_weight((0, 0)) == ()
    assert weight_of((3,), 1) == (3,)
    for lam in partitions_up_to(5, 3):
        ell = weight_of(lam, 3)
        full = tuple(lam) + (0,) * (4 - len(lam))
        assert partition_of_weight(ell) == tuple(
            x - full[-1] for x in lam if x - full[-1]
        ) or partition_of_weight(ell) == lam


def test_dominance():
    assert dominates((3,), (2, 1))
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 2))
