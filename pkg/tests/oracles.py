"""Independent brute-force oracles used only by the tests.

These recompute the subset difference operators with sympy's symbolic
rational-function arithmetic (no shared code with the package kernel), so an
agreement is a genuine two-path check.
"""

from __future__ import annotations

import itertools

import sympy

from qchar.laurent import LaurentPoly
from qchar.rings import RING_Q, RING_QT, RING_W

Q = sympy.Symbol("q")
T = sympy.Symbol("t")
W = sympy.Symbol("w")


def zsyms(nvars):
    return sympy.symbols("z1:%d" % (nvars + 1))


def _qq_rational(c):
    from sympy.polys.domains import QQ

    return sympy.Rational(int(QQ.numer(c)), int(QQ.denom(c)))


def _pe_to_sympy(pe):
    out = sympy.Integer(0)
    for m, c in pe.terms():
        out += _qq_rational(c) * Q ** m[0] * T ** m[1]
    return out


def poly_to_sympy(f: LaurentPoly):
    z = zsyms(f.nvars)
    total = sympy.Integer(0)
    if f.ring == RING_QT:
        for key, c in f.coeffs.items():
            term = _pe_to_sympy(c.numer) / _pe_to_sympy(c.denom)
            for i, e in enumerate(key):
                term *= z[i] ** e
            total += term
    else:
        unit = W if f.ring == RING_W else Q
        for key, c in f.coeffs.items():
            term = sympy.Integer(c) * unit ** key[0]
            for i, e in enumerate(key[1:]):
                term *= z[i] ** e
            total += term
    return sympy.together(total)


def sympy_equal(a, b) -> bool:
    return sympy.simplify(sympy.together(a - b)) == 0


def subset_operator_bruteforce(alpha, n, f: LaurentPoly, kind="gamma"):
    """sum_{|I|=alpha} z_I**n a_I(z) (shift_I f) as a sympy expression.

    kind='gamma' scales subset variables by q; kind='twisted' scales every
    variable by w**2 and subset variables by q = w**(-2(r+1)) besides (the
    bare sum, no prefactor); kind='qt' uses the (t z_i - z_j)/(z_i - z_j)
    coefficients with q-scaling.
    """
    nvars = f.nvars
    z = list(zsyms(nvars))
    expr = poly_to_sympy(f)
    rank = nvars - 1
    total = sympy.Integer(0)
    for subset in itertools.combinations(range(nvars), alpha):
        if kind == "qt":
            coeff = sympy.Integer(1)
            for i in subset:
                for j in range(nvars):
                    if j not in subset:
                        coeff *= (T * z[i] - z[j]) / (z[i] - z[j])
        else:
            coeff = sympy.Integer(1)
            for i in subset:
                coeff *= z[i] ** n
                for j in range(nvars):
                    if j not in subset:
                        coeff *= z[i] / (z[i] - z[j])
        subs = {}
        if kind == "gamma" or kind == "qt":
            for i in subset:
                subs[z[i]] = Q * z[i]
        elif kind == "twisted":
            qw = W ** (-2 * (rank + 1))
            for i in range(nvars):
                subs[z[i]] = (W**2) ** alpha * (qw if i in subset else 1) * z[i]
        total += coeff * expr.subs(subs, simultaneous=True)
    return sympy.cancel(sympy.together(total))
