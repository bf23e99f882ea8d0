"""Graded characters of fusion products, built by iterated raising operators.

An occupation matrix ``n`` (rank r, level k, entries n_i^(a) >= 0) indexes a
tensor product of KR modules with highest weights i*omega_a.  Its graded
character in the variable ``q**-1`` is

    chi_n = q**X(n) * prod_a M_{a,k}^{n_k^(a)} ... prod_a M_{a,1}^{n_1^(a)} . 1

with the level-1 factors applied first and the integer exponent

    X(n) = -1/2 sum n_i^(a) min(i,j) min(a,b) n_j^(b) + 1/2 sum i a n_i^(a).

The same product in the twisted operators, constrained to z_1...z_{r+1} = 1,
gives the renormalized coefficients G_n; the two paths are related by an
explicit power of v and cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData
from .laurent import LaurentPoly, constrain, w_to_q
from .qdiff import apply_D, apply_M
from .rings import RING_Q, RING_W, Scalar
from .symfun import (
    normalize_partition,
    partition_of_weight,
    schur,
    schur_expand,
)


@dataclass(frozen=True)
class NVector:
    """Occupation numbers n_i^(a), a in [1, r], i in [1, k]."""

    rank: int
    level: int
    rows: tuple  # rows[a-1][i-1]

    def __post_init__(self):
        if self.rank < 1 or self.level < 1:
            raise ValueError("rank and level must be >= 1")
        if len(self.rows) != self.rank:
            raise ValueError("expected %d rows" % self.rank)
        for row in self.rows:
            if len(row) != self.level:
                raise ValueError("every row needs %d entries" % self.level)
            if any((not isinstance(x, int)) or x < 0 for x in row):
                raise ValueError("entries must be nonnegative integers")

    @classmethod
    def from_rows(cls, rank, level, rows):
        return cls(rank, level, tuple(tuple(r) for r in rows))

    @classmethod
    def from_levels(cls, rank, level, levels):
        """Build from level-major data: levels[i-1][a-1] = n_i^(a)."""
        if len(levels) != level or any(len(l) != rank for l in levels):
            raise ValueError("level-major data has wrong shape")
        rows = tuple(
            tuple(levels[i][a] for i in range(level)) for a in range(rank)
        )
        return cls(rank, level, rows)

    @classmethod
    def level_one(cls, rank, entries):
        return cls(rank, 1, tuple((x,) for x in entries))

    def entry(self, alpha: int, i: int) -> int:
        return self.rows[alpha - 1][i - 1]

    def sigma(self) -> int:
        return sum(sum(row) for row in self.rows)

    def shift(self, *moves):
        """Apply unit moves (alpha, i, delta); moves with alpha 0 or r+1 are
        dropped.  Returns None when an entry would become negative."""
        rows = [list(r) for r in self.rows]
        for alpha, i, delta in moves:
            if alpha == 0 or alpha == self.rank + 1:
                continue
            rows[alpha - 1][i - 1] += delta
            if rows[alpha - 1][i - 1] < 0:
                return None
        return NVector.from_rows(self.rank, self.level, rows)

    def top_weight(self):
        """Dominant-weight labels of the leading component: sum_i i n_i^(a)."""
        return tuple(
            sum((i + 1) * x for i, x in enumerate(row)) for row in self.rows
        )

    def __str__(self):
        return ";".join(
            ",".join(str(self.entry(a, i)) for a in range(1, self.rank + 1))
            for i in range(1, self.level + 1)
        )


@dataclass(frozen=True)
class GradedCharacter:
    """A graded character: the polynomial in q**-1 and z_1..z_{r+1}, its
    Schur expansion, and which operator path produced it."""

    n: NVector
    poly: LaurentPoly
    expansion: dict
    source: str


_RAISING_CACHE: dict = {}
_G_CACHE: dict = {}


def raising_product(n: NVector) -> LaurentPoly:
    """The bare operator product applied to 1 (Q-ring, r+1 variables,
    no prefactor); level-1 factors act first, higher levels after."""
    cached = _RAISING_CACHE.get(n)
    if cached is not None:
        return cached
    f = LaurentPoly.one(RING_Q, n.rank + 1)
    for i in range(1, n.level + 1):
        for alpha in range(1, n.rank + 1):
            for _ in range(n.entry(alpha, i)):
                f = apply_M(alpha, i, f, checked=True)
    _RAISING_CACHE[n] = f
    return f


def char_q_exponent(n: NVector) -> int:
    """The (nonpositive) q-exponent of the character prefactor."""
    quad = 0
    lin = 0
    for a in range(1, n.rank + 1):
        for i in range(1, n.level + 1):
            x = n.entry(a, i)
            if not x:
                continue
            lin += i * a * x
            for b in range(1, n.rank + 1):
                for j in range(1, n.level + 1):
                    quad += x * min(i, j) * min(a, b) * n.entry(b, j)
    diff = quad - lin
    if diff % 2:
        raise ArithmeticError("prefactor exponent is not an integer")
    return -(diff // 2)


def graded_character(n: NVector) -> GradedCharacter:
    """chi_n(q**-1, z) as an exact polynomial, with its Schur expansion.

    The constructed value is checked against two structural facts: every
    q-exponent is nonpositive, and the q**0 part is the Schur function of the
    top component."""
    poly = raising_product(n).times_unit(char_q_exponent(n))
    if poly.unit_exponents() and max(poly.unit_exponents()) > 0:
        raise ArithmeticError("character has a positive q-exponent")
    top = top_component(n)
    if poly.unit_slice(0) != schur(top, n.rank + 1):
        raise ArithmeticError("q**0 part differs from the top component")
    return GradedCharacter(n, poly, schur_expand(poly), "raising-q")


def multiplicities(n: NVector) -> dict:
    """Schur coefficients of the character, keyed by the partition of the
    dominant weight (full columns removed)."""
    out = {}
    for lam, coeff in graded_character(n).expansion.items():
        full = tuple(lam) + (0,) * (n.rank + 1 - len(lam))
        reduced = normalize_partition(tuple(p - full[-1] for p in full))
        out[reduced] = coeff
    return out


def top_component(n: NVector):
    """Partition of the top (q**0) component."""
    return partition_of_weight(n.top_weight())


def g_raising_product(n: NVector) -> LaurentPoly:
    """The twisted-operator product applied to 1 (W-ring, unconstrained)."""
    f = LaurentPoly.one(RING_W, n.rank + 1)
    for i in range(1, n.level + 1):
        for alpha in range(1, n.rank + 1):
            for _ in range(n.entry(alpha, i)):
                f = apply_D(alpha, i, f, checked=True)
    return f


def g_coefficient(n: NVector) -> LaurentPoly:
    """The renormalized coefficient G_n: the twisted product on 1, with
    z_1...z_{r+1} = 1 imposed (W-ring, r variables)."""
    cached = _G_CACHE.get(n)
    if cached is None:
        cached = constrain(g_raising_product(n), n.rank)
        _G_CACHE[n] = cached
    return cached


def g_to_char_w_exponent(n: NVector) -> int:
    """w-exponent of the prefactor relating the twisted product to the
    character: chi_n = w**E * (twisted product on 1)."""
    cart = CartanData(n.rank)
    lin = 0
    quad = 0
    for a in range(1, n.rank + 1):
        for i in range(1, n.level + 1):
            x = n.entry(a, i)
            if not x:
                continue
            for b in range(1, n.rank + 1):
                lin += x * cart.lam(a, b)
                for j in range(1, n.level + 1):
                    quad += x * min(i, j) * cart.lam(a, b) * n.entry(b, j)
    return 2 * lin + quad


def char_from_g(n: NVector) -> LaurentPoly:
    """The character computed through the twisted-operator path: unconstrained
    product, prefactor, then conversion w -> q.  Equals
    ``graded_character(n).poly`` exactly."""
    lifted = g_raising_product(n).times_unit(g_to_char_w_exponent(n))
    return w_to_q(lifted, n.rank)
