"""Skew monoid ring elements in left-coefficient normal form.

An element is a finite sum  sum_w f_w * w  with f_w a rational function and
w a signed-affine automorphism.  Multiplication twists by the action:

    (f * v) (g * w) = (f * v(g)) * (v o w)

Left coefficients are the normal form; the right-coefficient view used by
co-evaluation is recovered through alpha_w = w^{-1}(f_w).
"""

from __future__ import annotations

from fractions import Fraction

from .automorphisms import Automorphism, words_upto
from .errors import AlignmentError
from .poly import MultiPoly, exact_div, poly_lcm
from .ratfunc import RatFunc


class SkewElement:
    __slots__ = ("variables", "terms", "_hash", "_scaled")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        self.terms = {w: f for w, f in terms.items() if not f.is_zero}
        self._hash = None
        self._scaled = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def one(cls, variables):
        variables = tuple(variables)
        return cls(variables, {Automorphism.identity(variables): RatFunc.one(variables)})

    @classmethod
    def from_coefficient(cls, f):
        if isinstance(f, MultiPoly):
            f = RatFunc(f)
        variables = f.variables
        return cls(variables, {Automorphism.identity(variables): f})

    @classmethod
    def from_automorphism(cls, w, coeff=None):
        variables = w.variables
        f = RatFunc.one(variables) if coeff is None else coeff
        if isinstance(f, MultiPoly):
            f = RatFunc(f)
        return cls(variables, {w: f})

    @classmethod
    def as_skew(cls, x, variables):
        if isinstance(x, SkewElement):
            return x
        if isinstance(x, Automorphism):
            return cls.from_automorphism(x)
        if isinstance(x, (RatFunc, MultiPoly)):
            return cls.from_coefficient(x)
        if isinstance(x, (int, Fraction)):
            return cls.from_coefficient(RatFunc.constant(variables, x))
        raise TypeError(f"cannot interpret {type(x).__name__} as a skew element")

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return frozenset(self.terms)

    def support_sorted(self):
        return sorted(self.terms, key=Automorphism.sort_key)

    def coefficient(self, w):
        return self.terms.get(w, RatFunc.zero(self.variables))

    @property
    def is_coefficient_only(self):
        """Support contained in {identity}."""
        return all(w.is_identity for w in self.terms)

    def as_ratfunc(self):
        if not self.is_coefficient_only:
            raise ValueError("support is larger than {id}")
        if self.is_zero:
            return RatFunc.zero(self.variables)
        return next(iter(self.terms.values()))

    # -- additive structure -----------------------------------------------------

    def _need_same_vars(self, other):
        if self.variables != other.variables:
            raise AlignmentError("skew elements over different variable lists")

    def __add__(self, other):
        other = SkewElement.as_skew(other, self.variables)
        self._need_same_vars(other)
        out = dict(self.terms)
        for w, f in other.terms.items():
            s = out.get(w)
            s = f if s is None else s + f
            if s.is_zero:
                out.pop(w, None)
            else:
                out[w] = s
        return SkewElement(self.variables, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = SkewElement.as_skew(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return SkewElement.as_skew(other, self.variables) - self

    def __neg__(self):
        return SkewElement(self.variables, {w: -f for w, f in self.terms.items()})

    # -- multiplication -----------------------------------------------------------

    def __mul__(self, other):
        other = SkewElement.as_skew(other, self.variables)
        self._need_same_vars(other)
        out = {}
        for v, f in self.terms.items():
            for w, g in other.terms.items():
                coeff = f * v.apply_ratfunc(g)
                if coeff.is_zero:
                    continue
                vw = v.compose(w)
                s = out.get(vw)
                s = coeff if s is None else s + coeff
                if s.is_zero:
                    out.pop(vw, None)
                else:
                    out[vw] = s
        return SkewElement(self.variables, out)

    def __rmul__(self, other):
        return SkewElement.as_skew(other, self.variables) * self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = SkewElement.one(self.variables)
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation ------------------------------------------------------------------

    def scaled(self):
        """(D, {w: c_w}) with f_w = c_w / D over the least common denominator D."""
        if self._scaled is None:
            D = MultiPoly.one(self.variables)
            for f in self.terms.values():
                D = poly_lcm(D, f.den)
            nums = {w: f.num * exact_div(D, f.den) for w, f in self.terms.items()}
            self._scaled = (D, nums)
        return self._scaled

    def evaluate_scaled(self, a):
        """Evaluation at a polynomial, returned as a (numerator, D) pair."""
        if a.variables != self.variables:
            raise AlignmentError("argument over a different variable list")
        D, nums = self.scaled()
        total = MultiPoly.zero(self.variables)
        for w, c in nums.items():
            total = total + c * w.apply_poly(a)
        return total, D

    def evaluate(self, a):
        """Left evaluation X(a) = sum_w f_w * w(a)."""
        if isinstance(a, MultiPoly):
            num, den = self.evaluate_scaled(a)
            return RatFunc(num, den)
        if a.variables != self.variables:
            raise AlignmentError("argument over a different variable list")
        out = RatFunc.zero(self.variables)
        for w, f in self.terms.items():
            out = out + f * w.apply_ratfunc(a)
        return out

    def coevaluate(self, a):
        """Co-evaluation X^dagger(a) = sum_w alpha_w * w^{-1}(a), alpha_w = w^{-1}(f_w)."""
        if isinstance(a, MultiPoly):
            a = RatFunc(a)
        if a.variables != self.variables:
            raise AlignmentError("argument over a different variable list")
        out = RatFunc.zero(self.variables)
        for w, f in self.terms.items():
            winv = w.inverse()
            out = out + winv.apply_ratfunc(f) * winv.apply_ratfunc(a)
        return out

    def right_coefficients(self):
        """Right-coefficient view: X = sum_w w * alpha_w with alpha_w = w^{-1}(f_w)."""
        return {w: w.inverse().apply_ratfunc(f) for w, f in self.terms.items()}

    @classmethod
    def from_right_coefficients(cls, variables, mapping):
        return cls(variables, {w: w.apply_ratfunc(alpha) for w, alpha in mapping.items()})

    def transpose(self):
        """Formal transpose sum_w alpha_w * w^{-1}; its evaluation is coevaluate."""
        out = {}
        for w, alpha in self.right_coefficients().items():
            winv = w.inverse()
            s = out.get(winv)
            s = alpha if s is None else s + alpha
            if not s.is_zero:
                out[winv] = s
            else:
                out.pop(winv, None)
        return SkewElement(self.variables, out)

    # -- equality / display -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (Automorphism, RatFunc, MultiPoly, int, Fraction)):
            other = SkewElement.as_skew(other, self.variables)
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def embed(self, new_variables):
        return SkewElement(
            new_variables,
            {w.embed(new_variables): f.embed(new_variables) for w, f in self.terms.items()},
        )

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for w in self.support_sorted():
            f = self.terms[w]
            parts.append(f"({f})*({w})")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkewElement({str(self)!r})"


class MonoidGenerationReport:
    """Bounded verdict on whether projected supports generate the monoid M."""

    def __init__(self, ok, word_len, missing, generated_count, note=None):
        self.ok = ok
        self.word_len = word_len
        self.missing = list(missing)
        self.generated_count = generated_count
        self.note = note

    def to_dict(self):
        return {
            "ok": self.ok,
            "word_len": self.word_len,
            "missing": [str(m) for m in self.missing],
            "generated_count": self.generated_count,
            **({"note": self.note} if self.note else {}),
        }


def supports_generate_monoid(elems, data, word_len):
    """Check that support projections to M reach every short M-word.

    Targets are the words of at most word_len letters in the declared M
    generators; the supports' M-parts get the same word-length budget.
    """
    if word_len < 1:
        raise ValueError("word_len must be >= 1")
    if not data.m_gens:
        return MonoidGenerationReport(True, word_len, [], 0, note="M trivial; vacuous")
    targets = words_upto(data.m_gens, word_len)
    projections = {}
    for X in elems:
        for w in X.support():
            projections.setdefault(w.m_part(), None)
    generated = words_upto(list(projections), word_len)
    missing = sorted((t for t in targets if t not in generated), key=Automorphism.sort_key)
    return MonoidGenerationReport(not missing, word_len, missing, len(generated))
