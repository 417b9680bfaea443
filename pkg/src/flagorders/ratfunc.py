"""Exact rational functions: quotients of sparse multivariate polynomials.

Every value is kept in canonical form eagerly: numerator and denominator are
coprime and the denominator has coprime integer coefficients with positive
graded-lex leading coefficient.  ``ratfunc_eq`` keeps the gcd-free
cross-multiplication path as an independent equality oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroDivisorError
from .poly import MultiPoly, exact_div, poly_gcd, rational_content


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if den is None:
            den = MultiPoly.one(num.variables)
        num._need_same_vars(den)
        if den.is_zero:
            raise ZeroDivisorError("zero denominator")
        if num.is_zero:
            num = MultiPoly.zero(num.variables)
            den = MultiPoly.one(num.variables)
        else:
            if den.is_constant:
                num = num.scale(1 / den.constant_value())
                den = MultiPoly.one(num.variables)
            else:
                if not num.is_constant:
                    g = poly_gcd(num, den)
                    if not g.is_constant:
                        num = exact_div(num, g)
                        den = exact_div(den, g)
                if not den.is_constant:
                    c = rational_content(den)
                    if den.leading_coefficient() < 0:
                        c = -c
                    if c != 1:
                        num = num.scale(1 / c)
                        den = den.scale(1 / c)
                else:
                    num = num.scale(1 / den.constant_value())
                    den = MultiPoly.one(num.variables)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def constant(cls, variables, value):
        return cls(MultiPoly.constant(variables, value))

    @classmethod
    def zero(cls, variables):
        return cls(MultiPoly.zero(variables))

    @classmethod
    def one(cls, variables):
        return cls(MultiPoly.one(variables))

    # -- structure --------------------------------------------------------

    @property
    def variables(self):
        return self.num.variables

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den.is_constant

    def as_poly(self):
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other, variables):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(MultiPoly.constant(variables, other))
        return None

    def __add__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __mul__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.variables)
        # cross-cancel before multiplying to keep the constructor gcd small
        n1, d1 = self.num, other.den
        n2, d2 = other.num, self.den
        if not d1.is_constant and not n1.is_constant:
            g = poly_gcd(n1, d1)
            if not g.is_constant:
                n1, d1 = exact_div(n1, g), exact_div(d1, g)
        if not d2.is_constant and not n2.is_constant:
            g = poly_gcd(n2, d2)
            if not g.is_constant:
                n2, d2 = exact_div(n2, g), exact_div(d2, g)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero:
            raise ZeroDivisorError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other, self.variables)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer exponent required")
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    # -- equality -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = self._coerce(other, self.variables)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def embed(self, new_variables):
        return RatFunc(self.num.embed(new_variables), self.den.embed(new_variables))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def ratfunc_eq(f, g):
    """Equality by cross-multiplication, independent of canonicalization."""
    f.num._need_same_vars(g.num)
    return f.num * g.den == g.num * f.den
