"""Exact graded characters of KR fusion products via q-difference raising
operators, with a full identity-verification suite."""

from .cartan import CartanData
from .characters import (
    GradedCharacter,
    NVector,
    char_from_g,
    g_coefficient,
    graded_character,
    multiplicities,
    top_component,
)
from .laurent import (
    LaurentPoly,
    antisymmetrize,
    constrain,
    exact_div,
    symmetrize,
    vandermonde,
    w_to_q,
)
from .macdonald import MacdonaldPoly, macdonald_poly, qwhittaker_specialize
from .qdiff import apply_D, apply_M, apply_macdonald_qt
from .qtorus import NcLaurent, evaluate, nc_mul, q_recursion
from .rings import (
    RING_Q,
    RING_QT,
    RING_W,
    DegenerateEigenvalue,
    ExponentNotDivisible,
    NcNotDivisible,
    NonzeroRemainder,
    NotDivisible,
    NotSymmetric,
    PoleAtZero,
    Scalar,
)
from .symfun import elementary, pieri_e, schur, schur_expand
from .whittaker import (
    TruncatedSeries,
    check_level1_toda,
    check_toda_eigen,
    class_one_combination,
    w_series,
)

__version__ = "0.1.0"
