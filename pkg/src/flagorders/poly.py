"""Sparse multivariate polynomials over exact rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients, tied to an ordered tuple of variable names.  The monomial
order used everywhere (leading terms, canonical witnesses, display) is
graded lexicographic with variables ranked by declaration order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import AlignmentError, UndefinedGcdError, ZeroDivisorError


def grlex_key(exps):
    """Graded-lex sort key: total degree first, then x1-major lex."""
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value):
        c = Fraction(value)
        n = len(tuple(variables))
        return cls(variables, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, variables):
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        try:
            i = variables.index(name)
        except ValueError:
            raise AlignmentError(f"unknown variable {name!r} in {variables}") from None
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {e: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        variables = tuple(variables)
        exps = tuple(exps)
        if len(exps) != len(variables):
            raise AlignmentError("exponent vector length does not match variable list")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        c = Fraction(coeff)
        return cls(variables, {exps: c} if c else {})

    @classmethod
    def from_terms(cls, variables, items):
        """Validating constructor: items is an iterable of (exps, coeff)."""
        variables = tuple(variables)
        n = len(variables)
        terms = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise AlignmentError("exponent vector length does not match variable list")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = terms.get(exps, 0) + Fraction(coeff)
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return cls(variables, terms)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading_term(self):
        """(exps, coeff) of the graded-lex greatest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def _need_same_vars(self, other):
        if self.variables != other.variables:
            raise AlignmentError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._need_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.variables, out)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._need_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.variables, out)

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.variables)
        return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._need_same_vars(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.variables)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.variables, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- equality / hashing -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- variable-list embedding --------------------------------------

    def embed(self, new_variables):
        """Map into a superset variable list (explicit alignment)."""
        new_variables = tuple(new_variables)
        if new_variables == self.variables:
            return self
        try:
            pos = [new_variables.index(v) for v in self.variables]
        except ValueError as exc:
            raise AlignmentError(f"{exc}: target list must contain all variables") from None
        n = len(new_variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, ei in enumerate(e):
                ne[pos[i]] = ei
            out[tuple(ne)] = c
        return MultiPoly(new_variables, out)

    # -- display -------------------------------------------------------

    def _monomial_str(self, exps):
        parts = []
        for name, k in zip(self.variables, exps):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = self._monomial_str(e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


# -- scalar normalization ----------------------------------------------


def rational_content(p):
    """Positive rational c with p/c having coprime integer coefficients."""
    if p.is_zero:
        raise ValueError("zero polynomial has no content")
    num_gcd = reduce(math.gcd, (abs(c.numerator) for c in p.terms.values()))
    den_lcm = reduce(math.lcm, (c.denominator for c in p.terms.values()))
    return Fraction(num_gcd, den_lcm)


def normalize_primitive(p):
    """Scale to coprime integer coefficients with positive graded-lex lead."""
    if p.is_zero:
        return p
    c = rational_content(p)
    if p.leading_coefficient() < 0:
        c = -c
    return p.scale(1 / c)


# -- division ------------------------------------------------------------


def poly_divmod(p, divisors):
    """Multivariate division with remainder under graded-lex order.

    Returns (quotients, remainder) with p = sum(q_i * d_i) + r and no term
    of r divisible by any divisor's leading term.  For a single divisor the
    remainder vanishes exactly when the divisor divides p.
    """
    divisors = list(divisors)
    if not divisors or any(d.is_zero for d in divisors):
        raise ZeroDivisorError("division by zero polynomial")
    for d in divisors:
        p._need_same_vars(d)
    leads = [(d.leading_term(), d) for d in divisors]
    quotients = [dict() for _ in divisors]
    remainder = {}
    work = dict(p.terms)
    while work:
        e = max(work, key=grlex_key)
        c = work.pop(e)
        for idx, ((ed, cd), d) in enumerate(leads):
            if all(a >= b for a, b in zip(e, ed)):
                f = tuple(a - b for a, b in zip(e, ed))
                fc = c / cd
                q = quotients[idx]
                q[f] = q.get(f, 0) + fc
                for e2, c2 in d.terms.items():
                    if e2 == ed:
                        continue
                    key = tuple(a + b for a, b in zip(f, e2))
                    s = work.get(key, 0) - fc * c2
                    if s:
                        work[key] = s
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[e] = c
    qs = [MultiPoly(p.variables, q) for q in quotients]
    return qs, MultiPoly(p.variables, remainder)


def poly_reduce(p, divisors):
    return poly_divmod(p, divisors)[1]


def divides(d, p):
    """True iff d | p exactly (d nonzero)."""
    if p.is_zero:
        return True
    if d.is_zero:
        return False
    if d.is_constant:
        return True
    if p.total_degree() < d.total_degree():
        return False
    return poly_divmod(p, [d])[1].is_zero


def exact_div(p, d):
    if d.is_zero:
        raise ZeroDivisorError("division by zero polynomial")
    if d.is_constant:
        return p.scale(1 / d.constant_value())
    qs, r = poly_divmod(p, [d])
    if not r.is_zero:
        raise ValueError("inexact polynomial division")
    return qs[0]


# -- derivatives / squarefree test ----------------------------------------


def partial(p, i):
    out = {}
    for e, c in p.terms.items():
        k = e[i]
        if k:
            ne = e[:i] + (k - 1,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * k
    return MultiPoly(p.variables, out)


def is_squarefree(p):
    """Characteristic-zero criterion: gcd(p, dp/dx_1, ..., dp/dx_n) is a unit."""
    if p.is_zero:
        return False
    if p.is_constant:
        return True
    g = p
    for i in range(len(p.variables)):
        if g.is_constant:
            return True
        dp = partial(p, i)
        if dp.is_zero:
            continue
        g = poly_gcd(g, dp)
    return g.is_constant


# -- gcd -------------------------------------------------------------------


def _coeffs_in(p, k):
    """View p as univariate in variable k: degree -> coefficient polynomial."""
    out = {}
    for e, c in p.terms.items():
        d = e[k]
        ne = e[:k] + (0,) + e[k + 1:]
        coeff = out.setdefault(d, {})
        coeff[ne] = coeff.get(ne, 0) + c
    return {d: MultiPoly(p.variables, t) for d, t in out.items()}


def _from_coeffs(variables, k, coeffs):
    terms = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            terms[e[:k] + (d,) + e[k + 1:]] = c
    return MultiPoly(variables, terms)


def _mul_xk(p, k, d):
    """p * x_k^d"""
    return MultiPoly(p.variables, {e[:k] + (e[k] + d,) + e[k + 1:]: c for e, c in p.terms.items()})


def _prem(f, g, k):
    """Pseudo-remainder of f by g with respect to variable k."""
    dg = g.degree_in(k)
    cg = _coeffs_in(g, k)[dg]
    r = f
    while not r.is_zero and r.degree_in(k) >= dg:
        dr = r.degree_in(k)
        cr = _coeffs_in(r, k)[dr]
        r = cg * r - _mul_xk(cr * g, k, dr - dg)
    return r


def _content_pp(p, k):
    """Content and primitive part with respect to variable k."""
    coeffs = _coeffs_in(p, k)
    content = None
    for d in sorted(coeffs):
        c = coeffs[d]
        content = c if content is None else poly_gcd(content, c)
        if content.is_constant:
            content = MultiPoly.one(p.variables)
            break
    content = normalize_primitive(content)
    if content.is_constant:
        return MultiPoly.one(p.variables), normalize_primitive(p)
    pp = exact_div(p, content)
    return content, normalize_primitive(pp)


def poly_gcd(p, q):
    """Greatest common divisor via the recursive primitive Euclidean algorithm.

    The last declared variable present in either input is treated as the main
    variable; contents are extracted recursively over the remaining ones.
    The result has coprime integer coefficients and a positive graded-lex
    leading coefficient.  This is the package's documented hot spot; inputs
    at desk scale (a few dozen terms) stay comfortably fast.
    """
    if p.is_zero and q.is_zero:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    p._need_same_vars(q)
    if p.is_zero:
        return normalize_primitive(q)
    if q.is_zero:
        return normalize_primitive(p)
    if p.is_constant or q.is_constant:
        return MultiPoly.one(p.variables)

    main = None
    for i in reversed(range(len(p.variables))):
        if p.degree_in(i) > 0 or q.degree_in(i) > 0:
            main = i
            break
    if main is None:  # both constant, handled above
        return MultiPoly.one(p.variables)

    if p.degree_in(main) == 0:
        return poly_gcd(p, _content_pp(q, main)[0])
    if q.degree_in(main) == 0:
        return poly_gcd(_content_pp(p, main)[0], q)

    cp, a = _content_pp(p, main)
    cq, b = _content_pp(q, main)
    c = poly_gcd(cp, cq)
    if a.degree_in(main) < b.degree_in(main):
        a, b = b, a
    while not b.is_zero:
        r = _prem(a, b, main)
        if r.is_zero:
            a, b = b, r
        else:
            a, b = b, _content_pp(r, main)[1]
    return normalize_primitive(c * a)


def poly_lcm(p, q):
    if p.is_zero or q.is_zero:
        return MultiPoly.zero(p.variables)
    return normalize_primitive(exact_div(p * q, poly_gcd(p, q)))


# -- canonical monomial enumeration ----------------------------------------


def _exponents_of_degree(nvars, d):
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _exponents_of_degree(nvars - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomials_upto(variables, bound):
    """All monomials of total degree <= bound, in the canonical sweep order.

    The order is ascending total degree and, within a degree, descending lex
    (x1-major): 1, x1, x2, ..., x1^2, x1*x2, ...  Witness selection and
    determinant-witness search both follow this enumeration.
    """
    variables = tuple(variables)
    out = []
    for d in range(bound + 1):
        for e in _exponents_of_degree(len(variables), d):
            out.append(MultiPoly(variables, {e: Fraction(1)}))
    return tuple(out)


def monomial_sort_key(m):
    e, _ = m.leading_term()
    return (sum(e), tuple(-x for x in e))
