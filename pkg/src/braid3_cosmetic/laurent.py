"""
Integer Laurent polynomials in one variable t, with exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Mapping
from typing import Dict, Iterable, Tuple


class NormalizationError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """
    Sparse integer Laurent polynomial.  Coefficients are stored as an
    exponent -> coefficient mapping without zero entries; instances are
    immutable and hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: Dict[int, int] = {}
        for e, a in items:
            if int(a) != a:
                raise TypeError(f"non-integer coefficient {a!r}")
            c[int(e)] = c.get(int(e), 0) + int(a)
        self._c = {e: a for e, a in sorted(c.items()) if a != 0}
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> LaurentPoly:
        """Wrap an int-keyed dict, dropping zeros; skips validation."""
        p = object.__new__(cls)
        p._c = {e: c[e] for e in sorted(c) if c[e]}
        p._hash = None
        return p

    @classmethod
    def const(cls, a: int) -> LaurentPoly:
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> LaurentPoly:
        return cls({e: a})

    @classmethod
    def from_ascending(cls, low: int, coeffs: Iterable[int]) -> LaurentPoly:
        """``from_ascending(-1, [1, -1, 1])`` is t^-1 - 1 + t."""
        return cls({low + i: a for i, a in enumerate(coeffs)})

    @classmethod
    def _coerce(cls, x) -> LaurentPoly:
        if type(x) is LaurentPoly:
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # -- structure ----------------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    degree = max_exp

    @property
    def breadth(self) -> int:
        return self.max_exp - self.min_exp

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._c)
        for e, a in other._c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, a), = self._c.items()
            if a not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * n: a ** n})
        result = LaurentPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def divmod_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """
        Exact quotient in Z[t, t^-1].  Raises InexactDivisionError when
        ``divisor`` does not divide ``self``.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lead_e, lead_a = divisor.max_exp, divisor[divisor.max_exp]
        low = divisor.min_exp
        rem = dict(self._c)
        quot: Dict[int, int] = {}
        floor = self.min_exp - low
        while rem:
            e = max(rem)
            qe = e - lead_e
            if qe < floor:
                raise InexactDivisionError(f"{divisor} does not divide {self}")
            qa, r = divmod(rem[e], lead_a)
            if r:
                raise InexactDivisionError(f"{divisor} does not divide {self}")
            quot[qe] = qa
            for de, da in divisor._c.items():
                k = qe + de
                v = rem.get(k, 0) - qa * da
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __floordiv__(self, other):
        return self.divmod_exact(self._coerce(other))

    # -- evaluation and calculus --------------------------------------------

    def __call__(self, x):
        """Evaluate at an integer or Fraction; zero raises for negative powers."""
        total = 0
        for e, a in self._c.items():
            total += a * (Fraction(x) ** e if e < 0 else x ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    evaluate = __call__

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: a * e for e, a in self._c.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute t -> t^-1."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def is_symmetric(self) -> bool:
        return self._c == {-e: a for e, a in self._c.items()}

    def normalize_symmetric(self) -> LaurentPoly:
        """
        The unique q = +-t^k * self with q(t) = q(1/t) and q(1) = 1.
        Raises NormalizationError when no such unit multiple exists.
        """
        if self.is_zero():
            raise NormalizationError("zero polynomial cannot be normalized")
        total = self(1)
        if total not in (1, -1):
            raise NormalizationError(f"value at 1 is {total}, expected +-1")
        span = self.max_exp + self.min_exp
        if span % 2:
            raise NormalizationError(f"odd breadth, no symmetric shift of {self}")
        q = self.shift(-span // 2)
        if total == -1:
            q = -q
        if not q.is_symmetric():
            raise NormalizationError(f"{self} is not a unit multiple of a symmetric polynomial")
        return q

    def unit_equivalent(self, other: LaurentPoly) -> bool:
        """True iff ``other = +-t^k * self`` for some k."""
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        k = other.min_exp - self.min_exp
        s = self.shift(k)
        return s == other or -s == other

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        return render_poly(self)


def _monomial(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "t"
    return f"t^{e}"


def render_poly(p: LaurentPoly) -> str:
    """Ascending-exponent rendering, e.g. ``2*t^-2 - 5*t^-1 + 7 - 5*t + 2*t^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, a in sorted(p.coeffs.items()):
        mag, mono = abs(a), _monomial(e)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts)


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class LaurentMatrix2:
    """A 2x2 matrix with LaurentPoly entries; rows are tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        (a, b), (c, d) = rows
        conv = LaurentPoly._coerce
        self.rows = ((conv(a), conv(b)), (conv(c), conv(d)))

    @classmethod
    def identity(cls) -> LaurentMatrix2:
        return cls(((1, 0), (0, 1)))

    def __mul__(self, other: LaurentMatrix2) -> LaurentMatrix2:
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return LaurentMatrix2(((a * e + b * g, a * f + b * h),
                               (c * e + d * g, c * f + d * h)))

    def __sub__(self, other: LaurentMatrix2) -> LaurentMatrix2:
        return LaurentMatrix2(tuple(tuple(x - y for x, y in zip(r, s))
                                    for r, s in zip(self.rows, other.rows)))

    def det(self) -> LaurentPoly:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix2) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "LaurentMatrix2([[%s, %s], [%s, %s]])" % tuple(
            str(x) for r in self.rows for x in r)
