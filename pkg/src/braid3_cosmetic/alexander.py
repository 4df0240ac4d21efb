"""
Alexander polynomials of closed 3-braids from the reduced Burau
representation, and the derived invariants a2, degree and determinant.

Convention::

    s1 -> [[-t, 1], [0, 1]]        s2 -> [[1, 0], [t, -t]]

For a 3-braid b with knot closure, det(B(b) - I) = +-t^k (1 + t + t^2) D(t)
where D is the Alexander polynomial.  The unit is fixed by symmetrizing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braidcore import BraidWord, Word, as_artin, is_knot, render
from .laurent import LaurentMatrix2, LaurentPoly, ONE, T, ZERO


class NotAKnotError(ValueError):
    pass


_T_INV = LaurentPoly.monomial(-1)

GENERATOR_IMAGES = {
    (1, 1): LaurentMatrix2(((-T, ONE), (ZERO, ONE))),
    (1, -1): LaurentMatrix2(((-_T_INV, _T_INV), (ZERO, ONE))),
    (2, 1): LaurentMatrix2(((ONE, ZERO), (T, -T))),
    (2, -1): LaurentMatrix2(((ONE, ZERO), (ONE, -_T_INV))),
}

_CLOSURE_FACTOR = LaurentPoly.from_ascending(0, [1, 1, 1])


def _self_test():
    ident = LaurentMatrix2.identity()
    for i in (1, 2):
        assert GENERATOR_IMAGES[i, 1] * GENERATOR_IMAGES[i, -1] == ident
        assert GENERATOR_IMAGES[i, -1] * GENERATOR_IMAGES[i, 1] == ident
    s1, s2 = GENERATOR_IMAGES[1, 1], GENERATOR_IMAGES[2, 1]
    assert s1 * s2 * s1 == s2 * s1 * s2, "Burau images violate the braid relation"


_self_test()


def burau_reduced(w: BraidWord) -> LaurentMatrix2:
    m = LaurentMatrix2.identity()
    for x in w:
        m = m * GENERATOR_IMAGES[x.index, x.sign]
    return m


def a2_from_delta(delta: LaurentPoly) -> int:
    """Half the second derivative at 1: sum of c_n * n * (n - 1) / 2."""
    if not delta.is_symmetric() or delta(1) != 1:
        raise ValueError(f"{delta} is not a symmetrized Alexander polynomial")
    # n(n - 1) is even, so the halving is exact
    return sum(a * e * (e - 1) for e, a in delta.coeffs.items()) // 2


@dataclass(frozen=True)
class AlexanderData:
    delta: LaurentPoly
    a2: int
    genus_lower: int
    determinant: int

    def __post_init__(self):
        assert self.delta.is_symmetric() and self.delta(1) == 1


@lru_cache(maxsize=4096)
def _alexander_from_pairs(pairs) -> AlexanderData:
    w = BraidWord.from_pairs(pairs)
    d = (burau_reduced(w) - LaurentMatrix2.identity()).det()
    delta = d.divmod_exact(_CLOSURE_FACTOR).normalize_symmetric()
    det_value = delta(-1)
    return AlexanderData(
        delta=delta,
        a2=a2_from_delta(delta),
        genus_lower=delta.max_exp,
        determinant=abs(det_value),
    )


def alexander_poly(w: Word) -> AlexanderData:
    """Symmetrized Alexander polynomial of the closure of ``w`` and friends."""
    if not is_knot(w):
        raise NotAKnotError(f"closure of {render(w)!r} is not a knot")
    return _alexander_from_pairs(as_artin(w).pairs())


def conway_a2_fraction(delta: LaurentPoly) -> Fraction:
    """Same quantity as a2_from_delta but without the integrality check."""
    return Fraction(delta.derivative().derivative()(1), 2)
