"""Graded character tests: published rank-2 values, the rank-1 recursion
oracle, structural limits, and the two operator paths."""

import itertools

import pytest

from qchar.characters import (
    NVector,
    char_from_g,
    char_q_exponent,
    g_coefficient,
    graded_character,
    multiplicities,
    top_component,
)
from qchar.laurent import LaurentPoly, constrain, exact_div
from qchar.rings import RING_Q, RING_W, Scalar
from qchar.symfun import elementary, schur


def wpow(k, nvars=2):
    return LaurentPoly.unit_power(RING_W, nvars, k)


def test_nvector_validation():
    with pytest.raises(ValueError):
        NVector.from_rows(2, 1, ((1,),))  # wrong row count
    with pytest.raises(ValueError):
        NVector.from_rows(1, 1, ((-1,),))
    n = NVector.from_levels(2, 2, [[1, 0], [0, 1]])
    assert n.rows == ((1, 0), (0, 1))
    assert n.entry(1, 1) == 1 and n.entry(2, 2) == 1
    assert n.sigma() == 2
    assert n.shift((1, 1, -1), (2, 2, -1)).sigma() == 0
    assert n.shift((1, 2, -1)) is None
    assert n.shift((0, 1, -1), (3, 1, -1)) == n  # boundary moves dropped


def test_empty_product_is_one():
    for r in (1, 2):
        n = NVector.level_one(r, (0,) * r)
        assert graded_character(n).poly == LaurentPoly.one(RING_Q, r + 1)


def test_rank2_level1_characters():
    n11 = NVector.level_one(2, (1, 1))
    chi = graded_character(n11)
    assert chi.poly == schur((2, 1), 3) + schur((1, 1, 1), 3).times_unit(-1)
    assert chi.expansion == {
        (2, 1): Scalar(RING_Q, {0: 1}),
        (1, 1, 1): Scalar(RING_Q, {-1: 1}),
    }
    assert multiplicities(n11) == {
        (2, 1): Scalar(RING_Q, {0: 1}),
        (): Scalar(RING_Q, {-1: 1}),
    }
    assert graded_character(NVector.level_one(2, (1, 0))).poly == schur((1,), 3)


def test_rank2_level1_g_values():
    # all five published sigma <= 1 values of the renormalized coefficients,
    # constrained to z1 z2 z3 = 1, v-exponents included verbatim
    e1 = constrain(elementary(1, 3, RING_W), 2)
    e2 = constrain(elementary(2, 3, RING_W), 2)

    def G(n, p):
        return g_coefficient(NVector.level_one(2, (n, p)))

    assert G(1, 0) == e1.times_unit(-8)  # v^-4 e1
    assert G(0, 1) == e2.times_unit(-8)  # v^-4 e2
    # v^-7 (v^-3 e1^2 + (1 - v^-3) e2)
    assert G(2, 0) == (e1 * e1).times_unit(-20) + e2.times_unit(-14) - e2.times_unit(-20)
    # v^-6 (v^-3 e1 e2 + 1 - v^-3)
    assert G(1, 1) == (e1 * e2).times_unit(-18) + wpow(-12) - wpow(-18)
    # v^-7 (v^-3 e2^2 + (1 - v^-3) e1)
    assert G(0, 2) == (e2 * e2).times_unit(-20) + e1.times_unit(-14) - e1.times_unit(-20)


def test_rank1_recursion_oracle():
    # chi_{n+1} = (z + 1/z) chi_n - (1 - q^-n) chi_{n-1} determines the whole
    # family from chi_0 = 1; the raising construction must reproduce it
    zplus = constrain(elementary(1, 2, RING_Q), 1)
    chis = [LaurentPoly.one(RING_Q, 1), zplus]
    for n in range(1, 10):
        nxt = zplus * chis[n] - (chis[n - 1] - chis[n - 1].times_unit(-n))
        chis.append(nxt)
    for n in range(0, 11):
        built = constrain(graded_character(NVector.level_one(1, (n,))).poly, 1)
        assert built == chis[n], n


def test_top_component_and_prefactor():
    n = NVector.level_one(2, (1, 1))
    assert top_component(n) == (2, 1)
    assert top_component(NVector.level_one(1, (0,))) == ()
    assert top_component(NVector.from_rows(1, 2, ((1, 1),))) == (3,)
    assert char_q_exponent(n) == -1
    assert char_q_exponent(NVector.level_one(1, (2,))) == -1
    assert char_q_exponent(NVector.level_one(1, (0,))) == 0


def test_q_one_specialization_is_tensor_character():
    n = NVector.from_rows(1, 2, ((1, 1),))
    chi = graded_character(n).poly
    assert chi.at_unit_one() == schur((1,), 2) * schur((2,), 2)
    n2 = NVector.level_one(2, (1, 1))
    chi2 = graded_character(n2).poly
    assert chi2.at_unit_one() == schur((1,), 3) * schur((1, 1), 3)


def test_paths_agree_through_prefactor():
    grids = [NVector.level_one(1, (n,)) for n in range(0, 5)]
    grids += [NVector.level_one(2, c) for c in itertools.product(range(3), repeat=2)]
    grids += [NVector.from_rows(1, 2, ((a, b),)) for a in range(2) for b in range(1, 3)]
    for n in grids:
        assert char_from_g(n) == graded_character(n).poly, n


def test_multiplicity_coefficients_are_nonnegative_integers():
    # nonnegativity is reported, not assumed: any violation fails loudly here
    for n in [NVector.level_one(2, (2, 1)), NVector.from_rows(1, 2, ((2, 1),))]:
        for coeff in multiplicities(n).values():
            assert all(c > 0 for c in coeff.data.values()), (n, coeff)


def test_within_level_order_irrelevant():
    from qchar.qdiff import apply_M

    n = NVector.level_one(2, (2, 1))
    f = LaurentPoly.one(RING_Q, 3)
    for alpha in (1, 1, 2):
        f = apply_M(alpha, 1, f, checked=True)
    g = LaurentPoly.one(RING_Q, 3)
    for alpha in (2, 1, 1):
        g = apply_M(alpha, 1, g, checked=True)
    assert f == g


def test_g_unconstrained_conversion_is_clean():
    # every w-exponent of the lifted product is a multiple of 2(r+1), i.e.
    # the assembled prefactor times the twisted product is a function of q
    from qchar.characters import g_raising_product, g_to_char_w_exponent
    from qchar.laurent import w_to_q

    for n in [NVector.level_one(2, (1, 1)), NVector.from_rows(1, 2, ((1, 2),))]:
        lifted = g_raising_product(n).times_unit(g_to_char_w_exponent(n))
        w_to_q(lifted, n.rank)  # would raise on a stray half-power
