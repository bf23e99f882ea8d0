"""Exact scalar rings used as polynomial coefficients.

Three rings appear throughout the package:

* ``RING_W``  -- integer Laurent polynomials in ``w``, where ``w**2 = v`` is
  the dilation parameter.  Working with ``w`` keeps every half-integer power
  of ``v`` at an integer exponent.
* ``RING_Q``  -- integer Laurent polynomials in ``q``.  The two variables are
  tied by ``q = v**-(r+1)``, i.e. ``q = w**(-2*(r+1))`` at rank ``r``.
* ``RING_QT`` -- the exact rational function field QQ(q, t), realised with
  sympy's sparse fraction field (gcd-reduced, canonical sign).

``RING_W``/``RING_Q`` scalars are stored as plain ``{exponent: int}`` dicts.
"""

from __future__ import annotations

from sympy.polys.domains import QQ
from sympy.polys.fields import field

RING_W = "w"
RING_Q = "q"
RING_QT = "qt"

QT_FIELD, qt_q, qt_t = field("q,t", QQ)

P_FIELD, p_sym = field("p", QQ)


class NotDivisible(ArithmeticError):
    """Exact division failed; signals a violated divisibility guarantee."""


class ExponentNotDivisible(ArithmeticError):
    """A w-exponent is not a multiple of 2*(r+1), so the value is not a
    function of q alone."""


class NotSymmetric(ValueError):
    """Input polynomial is not symmetric under permutations of the z's."""


class NonzeroRemainder(ArithmeticError):
    """Schur-expansion peeling left a nonzero remainder."""


class NcNotDivisible(ArithmeticError):
    """Exact division failed in the quantum torus."""


class DegenerateEigenvalue(ArithmeticError):
    """Two partitions share a symbolic eigenvalue; the triangular solve
    cannot proceed."""


class PoleAtZero(ArithmeticError):
    """A coefficient has a pole at t = 0."""


def qt_int(n: int):
    """Embed an integer into QQ(q, t)."""
    return QT_FIELD.one * n


def qt_monomial(qexp: int, texp: int, coeff=1):
    """The field element ``coeff * q**qexp * t**texp`` (exponents may be negative)."""
    return qt_int(coeff) * qt_q**qexp * qt_t**texp


class Scalar:
    """A coefficient viewed on its own: a w- or q-Laurent polynomial over the
    integers, or a reduced rational function of (q, t).

    Values are canonical: integer variants never store zero coefficients, and
    the QT variant inherits gcd-reduction from the field.
    """

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, ring, n: int) -> "Scalar":
        if ring == RING_QT:
            return cls(ring, qt_int(n))
        return cls(ring, {0: n} if n else {})

    @classmethod
    def unit_power(cls, ring, exp: int, coeff: int = 1) -> "Scalar":
        """coeff * u**exp in the given integer ring (u = w or q)."""
        if ring == RING_QT:
            raise ValueError("unit_power is only defined for the integer rings")
        return cls(ring, {exp: coeff} if coeff else {})

    @classmethod
    def zero(cls, ring) -> "Scalar":
        return cls.from_int(ring, 0)

    @classmethod
    def one(cls, ring) -> "Scalar":
        return cls.from_int(ring, 1)

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other):
        if not isinstance(other, Scalar) or other.ring != self.ring:
            raise TypeError("mixed scalar rings: %r vs %r" % (self, other))

    def __add__(self, other):
        self._require_same(other)
        if self.ring == RING_QT:
            return Scalar(self.ring, self.data + other.data)
        out = dict(self.data)
        for k, c in other.data.items():
            nv = out.get(k, 0) + c
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return Scalar(self.ring, out)

    def __neg__(self):
        if self.ring == RING_QT:
            return Scalar(self.ring, -self.data)
        return Scalar(self.ring, {k: -c for k, c in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(self.ring, other)
        self._require_same(other)
        if self.ring == RING_QT:
            return Scalar(self.ring, self.data * other.data)
        out = {}
        for k1, c1 in self.data.items():
            for k2, c2 in other.data.items():
                k = k1 + k2
                nv = out.get(k, 0) + c1 * c2
                if nv:
                    out[k] = nv
                else:
                    del out[k]
        return Scalar(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.ring == other.ring
            and self.data == other.data
        )

    def __hash__(self):
        if self.ring == RING_QT:
            return hash((self.ring, self.data))
        return hash((self.ring, frozenset(self.data.items())))

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self):
        return bool(self.data)

    # -- conversions -------------------------------------------------------

    def w_to_q(self, rank: int) -> "Scalar":
        """Rewrite a W-ring value through w**(-2*(r+1)) = q.

        Every stored w-exponent must be divisible by 2*(r+1); otherwise the
        value is not a function of q alone and ``ExponentNotDivisible`` is
        raised.
        """
        if self.ring != RING_W:
            raise ValueError("w_to_q expects a W-ring scalar")
        m = 2 * (rank + 1)
        out = {}
        for k, c in self.data.items():
            if k % m:
                raise ExponentNotDivisible(
                    "w-exponent %d is not a multiple of %d" % (k, m)
                )
            out[-(k // m)] = c
        return Scalar(RING_Q, out)

    def at_unit_one(self) -> int:
        """Evaluate the ring variable at 1 (integer rings only)."""
        if self.ring == RING_QT:
            raise ValueError("at_unit_one is only defined for the integer rings")
        return sum(self.data.values())

    def as_int(self) -> int:
        """The value as a plain integer; raises when not constant."""
        if self.ring == RING_QT:
            if self.data.denom == QT_FIELD.ring.one and self.data.numer.is_ground:
                c = self.data.numer.coeff(1)
                if QQ.denom(c) == 1:
                    return int(QQ.numer(c))
            raise ValueError("scalar %r is not an integer constant" % self)
        if not self.data:
            return 0
        if set(self.data) == {0}:
            return self.data[0]
        raise ValueError("scalar %r is not constant" % self)

    # -- presentation ------------------------------------------------------

    def to_text(self) -> str:
        if self.ring == RING_QT:
            return "(%s)" % self.data
        if not self.data:
            return "0"
        bits = []
        for exp in sorted(self.data, reverse=True):
            c = self.data[exp]
            if exp == 0:
                term = str(c)
            else:
                mono = "%s^%d" % (self.ring, exp)
                if c == 1:
                    term = mono
                elif c == -1:
                    term = "-" + mono
                else:
                    term = "%d*%s" % (c, mono)
            bits.append(term)
        text = " + ".join(bits).replace("+ -", "- ")
        if len(bits) > 1:
            return "(%s)" % text
        return text

    def __repr__(self):
        return "Scalar[%s](%s)" % (self.ring, self.to_text())
