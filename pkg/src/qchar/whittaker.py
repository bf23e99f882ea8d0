"""Rank-one Whittaker series and the level-1 Toda difference equation.

The two fundamental series, as functions of an integer n >= 0 truncated at
order N in u = q**-1 (coefficients are exact rational functions of p, with
an overall p**(1/2) parity carried as a flag):

    W(n)      = p**(n-1/2)  sum_{a>=0} u**(a(n+1)) / prod_{i=1}^{a} (1-u**i)(1-p**2 u**i)
    W_ref(n)  = p**(1/2-n)  sum_{a>=0} u**(a(n+1)) / prod_{i=1}^{a} (1-u**i)(1-p**-2 u**i)

Both satisfy the three-term relation

    W(n+1) + (1 - u**n) W(n-1) = (p + p**-1) W(n),

which is the rank-one level-1 difference equation for graded characters with
z = p.  The class-one combination ``c W(n) + c_ref W_ref(n)`` reproduces the
graded character itself: all series coefficients beyond the polynomial
degree cancel order by order.

``check_level1_toda`` verifies the level-1 difference equation for general
rank on the exact constrained characters, with the convention that a shifted
term whose occupation number would drop below zero carries a vanishing
coefficient.
"""

from __future__ import annotations

from .characters import NVector, graded_character
from .laurent import LaurentPoly, constrain
from .rings import P_FIELD, RING_Q, p_sym
from .symfun import elementary


class TruncatedSeries:
    """Truncated power series in u with QQ(p) coefficients and an overall
    p**(half/2) flag (half in {0, 1})."""

    __slots__ = ("order", "half", "coeffs")

    def __init__(self, order, coeffs=None, half=0):
        self.order = order
        self.half = half
        self.coeffs = {} if coeffs is None else {
            e: c for e, c in coeffs.items() if c and e <= order
        }

    @classmethod
    def zero(cls, order, half=0):
        return cls(order, {}, half)

    @classmethod
    def one(cls, order):
        return cls(order, {0: P_FIELD.one})

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.half == other.half
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other):
        if self.half != other.half:
            raise ValueError("cannot add series with different p**(1/2) parity")
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if e <= order}
        for e, c in other.coeffs.items():
            if e > order:
                continue
            nv = out.get(e, P_FIELD.zero) + c
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
        return TruncatedSeries(order, out, self.half)

    def __neg__(self):
        return TruncatedSeries(
            self.order, {e: -c for e, c in self.coeffs.items()}, self.half
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        order = min(self.order, other.order)
        half = self.half + other.half
        carry = P_FIELD.one
        if half == 2:
            half = 0
            carry = p_sym
        out = {}
        for e1, c1 in self.coeffs.items():
            if e1 > order:
                continue
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e > order:
                    continue
                nv = out.get(e, P_FIELD.zero) + c1 * c2
                if nv:
                    out[e] = nv
                else:
                    del out[e]
        if carry != P_FIELD.one:
            out = {e: c * carry for e, c in out.items()}
        return TruncatedSeries(order, out, half)

    def times_field(self, c):
        return TruncatedSeries(
            self.order, {e: v * c for e, v in self.coeffs.items()}, self.half
        )

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        bits = ["(%s) u^%d" % (c, e) for e, c in sorted(self.coeffs.items())]
        head = "p^(1/2) * " if self.half else ""
        return "TruncatedSeries(%s%s + O(u^%d))" % (head, " + ".join(bits) or "0", self.order + 1)


def _geometric(order, ratio, step):
    """1 / (1 - ratio * u**step) to the given order."""
    out = {}
    c = P_FIELD.one
    e = 0
    while e <= order:
        out[e] = c
        c = c * ratio
        e += step
    return TruncatedSeries(order, out)


def _p_invert(c):
    """The image of a QQ(p) element under p -> p**-1."""
    def flip(pe):
        out = P_FIELD.zero
        for m, v in pe.terms():
            out = out + (P_FIELD.one * v) * p_sym ** (-m[0])
        return out

    return flip(c.numer) / flip(c.denom)


def w_series(n: int, reflected: bool, order: int) -> TruncatedSeries:
    """The fundamental series at argument n >= 0, truncated at the order."""
    if n < 0:
        raise ValueError("the series is only summable for n >= 0")
    psq = p_sym**-2 if reflected else p_sym**2
    total = TruncatedSeries.zero(order)
    a = 0
    while a * (n + 1) <= order:
        term = TruncatedSeries.one(order - a * (n + 1))
        for i in range(1, a + 1):
            term = term * _geometric(term.order, P_FIELD.one, i)
            term = term * _geometric(term.order, psq, i)
        shifted = TruncatedSeries(
            order, {e + a * (n + 1): c for e, c in term.coeffs.items()}
        )
        total = total + shifted
        a += 1
    pref = p_sym ** (-n) if reflected else p_sym ** (n - 1)
    return TruncatedSeries(order, {e: c * pref for e, c in total.coeffs.items()}, half=1)


def toda_residual(n: int, order: int, reflected: bool) -> TruncatedSeries:
    """W(n+1) + (1 - u**n) W(n-1) - (p + p**-1) W(n); zero when the relation
    holds.  Defined for n >= 1: at n = 0 the middle coefficient vanishes but
    the series at argument -1 is not u-adically summable, so the three-term
    relation has no content there (the n = 0 boundary is exactly the
    class-one condition, verified by ``class_one_combination``)."""
    if n < 1:
        raise ValueError("the three-term relation needs n >= 1")
    gate = TruncatedSeries(order, {0: P_FIELD.one, n: -P_FIELD.one})
    lhs = w_series(n + 1, reflected, order) + gate * w_series(n - 1, reflected, order)
    rhs = w_series(n, reflected, order).times_field(p_sym + p_sym**-1)
    return lhs - rhs


def check_toda_eigen(n_values, order: int) -> bool:
    """Both fundamental series satisfy the three-term relation to the given
    truncation order for every n >= 1 in ``n_values`` (n = 0 entries are
    skipped; see ``toda_residual``)."""
    return all(
        toda_residual(n, order, refl).is_zero()
        for n in n_values
        if n >= 1
        for refl in (False, True)
    )


def class_one_coefficient(order: int, reflected: bool) -> TruncatedSeries:
    """The combination coefficient  p**(1/2) / ((1-p**-2) prod_{i>=1} (1-p**-2 u**i))
    (p -> p**-1 for the reflected one), with the infinite product truncated."""
    psq = p_sym**2 if reflected else p_sym**-2
    series = TruncatedSeries.one(order)
    for i in range(1, order + 1):
        series = series * _geometric(order, psq, i)
    head = P_FIELD.one / (P_FIELD.one - psq)
    # the reflected prefactor is p**(-1/2)/(1-p**2) = p**(1/2) * p**-1/(1-p**2)
    coeff = head * p_sym**-1 if reflected else head
    return TruncatedSeries(order, {e: c * coeff for e, c in series.coeffs.items()}, half=1)


def char_to_series(n: int, order: int) -> TruncatedSeries:
    """The rank-one level-1 character chi_n constrained to z = p, as a
    u-series (exact; polynomial, so truncation only forgets nothing)."""
    chi = constrain(graded_character(NVector.level_one(1, (n,))).poly, 1)
    out = {}
    for (qe, ze), c in chi.coeffs.items():
        if -qe > order:
            continue
        cur = out.get(-qe, P_FIELD.zero)
        out[-qe] = cur + (P_FIELD.one * c) * p_sym**ze
    return TruncatedSeries(order, out)


def class_one_combination(n_values, order: int) -> bool:
    """The class-one combination of the two fundamental series reproduces the
    exact character for every n: all coefficients beyond the polynomial
    degree cancel up to the truncation order."""
    c_plus = class_one_coefficient(order, False)
    c_minus = class_one_coefficient(order, True)
    for n in n_values:
        combo = c_plus * w_series(n, False, order) + c_minus * w_series(n, True, order)
        if combo != char_to_series(n, order):
            return False
    return True


def check_level1_toda(rank: int, n_vectors) -> bool:
    """The level-1 difference equation for general rank, on exact constrained
    characters:

        sum_{a=0}^{r} chi[n - eps_a + eps_{a+1}]
          - sum_{a=1}^{r} q**(-n^(a)) chi[n - eps_a + eps_{a+1}]  =  e_1 chi[n]

    with eps_0 = eps_{r+1} = 0; a term whose shifted occupation would be
    negative comes with the vanishing coefficient 1 - q**0 and is dropped.
    """
    e1 = constrain(elementary(1, rank + 1, RING_Q), rank)
    for entries in n_vectors:
        n = NVector.level_one(rank, tuple(entries))
        chi = constrain(graded_character(n).poly, rank)
        lhs = LaurentPoly.zero(RING_Q, rank)
        for a in range(0, rank + 1):
            shifted = n.shift((a, 1, -1), (a + 1, 1, +1))
            if a == 0:
                coeff_gate = None  # bare term, coefficient 1
            else:
                # coefficient 1 - q**(-n^(a))
                coeff_gate = n.entry(a, 1)
            if shifted is None:
                if coeff_gate:
                    return False  # a dropped term must carry a zero coefficient
                continue
            term = constrain(graded_character(shifted).poly, rank)
            if coeff_gate is None:
                lhs = lhs + term
            else:
                lhs = lhs + term - term.times_unit(-coeff_gate)
        if lhs != e1 * chi:
            return False
    return True
