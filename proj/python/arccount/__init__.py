"""Exact counts of Frobenius-twisted noncollinear point configurations in the
projective plane over finite fields, their closed-form count polynomials, and
the cohomology tables they determine.

The compiled extension reports every rational or big-integer quantity as an
exact decimal string; this package converts them to ``fractions.Fraction``
(or plain ``int`` where integrality is guaranteed) so nothing is ever rounded
through a float.
"""

from fractions import Fraction

from . import _core
from ._core import count, errata, partitions, pgl3_order

__version__ = _core.__version__

__all__ = [
    "count",
    "count_polynomial",
    "published_polynomial",
    "census_polynomial",
    "evaluate",
    "cohomology",
    "errata",
    "partitions",
    "pgl3_order",
    "__version__",
]


def _fractions(strings):
    return [Fraction(s) for s in strings]


def _int_or_fraction(s):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def count_polynomial(n, cls):
    """Derived closed form for the (n, cls) twisted count.

    Returns a dict with ``prefactor`` (Fraction), ``coefficients`` (list of
    Fractions, lowest degree first) and the factored ``display`` string.
    """
    d = _core.count_polynomial(n, cls)
    d["prefactor"] = Fraction(d["prefactor"])
    d["coefficients"] = _fractions(d["coefficients"])
    return d


def published_polynomial(n, cls):
    """The published reference-table row for (n, cls), exactly as printed."""
    d = _core.published_polynomial(n, cls)
    d["prefactor"] = Fraction(d["prefactor"])
    d["coefficients"] = _fractions(d["coefficients"])
    return d


def census_polynomial(space, degree, generic=False):
    """Closed-form orbit-degree census polynomial (coefficients, lowest first)."""
    return _fractions(_core.census_polynomial(space, degree, generic))


def evaluate(coefficients, q):
    """Evaluate a coefficient list (lowest degree first) at q, exactly."""
    value = Fraction(0)
    for c in reversed(coefficients):
        value = value * q + c
    return int(value) if value.denominator == 1 else value


def cohomology(n):
    """Equivariant cohomology of X_n plus the quotient Betti numbers.

    ``decomposition`` maps degree -> {partition label -> multiplicity}.  When
    the solver's consistency checks pass, ``betti``, ``quotient_betti`` and
    ``point_count_polynomial`` are present with integer entries.
    """
    d = _core.cohomology(n)
    d["decomposition"] = {
        degree: {label: _int_or_fraction(m) for label, m in row.items()}
        for degree, row in d["decomposition"].items()
    }
    if "betti" in d:
        d["betti"] = [int(b) for b in d["betti"]]
        d["quotient_betti"] = [int(b) for b in d["quotient_betti"]]
        d["point_count_polynomial"] = _fractions(d["point_count_polynomial"])
    return d
