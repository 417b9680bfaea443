"""Membership oracles for standard flag orders and their ideal variants.

Membership of X = sum_w f_w * w in the standard flag order means
X(a) stays polynomial for every polynomial a.  Two modes are provided:

* exact_squarefree: when the least common denominator D of the coefficients
  is squarefree, membership is decided exactly.  D is split into pairwise
  coprime squarefree factors, the splitting refined against all differences
  w(x_i) - v(x_i) over the support so that each factor q either divides a
  difference or is coprime to it.  Support elements are grouped modulo q
  (w ~ v iff q | w(x_i) - v(x_i) for all i); X is a member iff for every
  factor q each group's sum of D-scaled numerators is divisible by q.
  Sufficiency is a direct computation; necessity follows from linear
  independence of the distinct induced maps into the domain Lambda/(p) for
  each irreducible p | q (the refinement makes groups agree across the
  irreducible factors of q).

* degree_bounded: sweeps all monomials of total degree <= bound in the
  canonical order.  A failure is a conclusive non-member with a witness;
  exhausting the sweep only certifies membership up to the bound.

Also here: Demazure generators, the symmetrizing idempotent, the Reynolds
operator, spherical projection, and the ideal-relative oracles.
"""

from __future__ import annotations

from fractions import Fraction

from .automorphisms import Automorphism
from .errors import GroupTooLargeError, InvalidGeneratorError
from .poly import (
    MultiPoly,
    divides,
    exact_div,
    is_squarefree,
    monomials_upto,
    poly_gcd,
    poly_reduce,
)
from .ratfunc import RatFunc
from .skew import SkewElement

DEFAULT_DEGREE_BOUND = 6
_WITNESS_SWEEP_CAP = 24


class MembershipVerdict:
    """Outcome of a membership test.

    status: member | non_member | member_up_to_degree
    mode:   exact_squarefree | degree_bounded
    non_member always carries a witness polynomial a with X(a) outside the
    required target; exact_squarefree is only reported when the common
    denominator was squarefree.
    """

    def __init__(self, status, mode, degree_bound, witness=None, note=None):
        self.status = status
        self.mode = mode
        self.degree_bound = degree_bound
        self.witness = witness
        self.note = note

    @property
    def is_member(self):
        return self.status in ("member", "member_up_to_degree")

    def to_dict(self):
        out = {
            "status": self.status,
            "mode": self.mode,
            "degree_bound": self.degree_bound,
            "witness": None if self.witness is None else str(self.witness),
        }
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        extra = f", witness={self.witness}" if self.witness is not None else ""
        return f"MembershipVerdict({self.status}, {self.mode}{extra})"


class IdealSpec:
    """An ideal given by a nonempty list of nonzero generators.

    Membership is tested by multivariate division with remainder.  When the
    generators' leading terms are pairwise coprime the generators form a
    Groebner basis and the test is exact; otherwise the verdict is labeled
    heuristic.
    """

    def __init__(self, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("ideal needs at least one generator")
        if any(g.is_zero for g in generators):
            raise ValueError("zero ideal generator")
        self.generators = generators
        self.variables = generators[0].variables
        for g in generators:
            if g.variables != self.variables:
                raise ValueError("ideal generators over different variable lists")
        leads = [g.leading_term()[0] for g in generators]
        self.exact = all(
            not any(min(a, b) for a, b in zip(leads[i], leads[j]))
            for i in range(len(leads))
            for j in range(i + 1, len(leads))
        )

    def reduce(self, p):
        return poly_reduce(p, self.generators)

    def contains(self, p):
        return self.reduce(p).is_zero

    @property
    def note(self):
        if self.exact:
            return "ideal reduction exact (pairwise-coprime leading terms)"
        return "ideal membership heuristic (division remainder, no Groebner basis)"

    def __repr__(self):
        return f"IdealSpec([{', '.join(str(g) for g in self.generators)}])"


# -- standard flag order membership -------------------------------------------


def _support_differences(X):
    """Nonzero differences w(x_i) - v(x_i) over all support pairs."""
    autos = X.support_sorted()
    images = {w: w._variable_images() for w in autos}
    diffs = []
    for a in range(len(autos)):
        for b in range(a + 1, len(autos)):
            w, v = autos[a], autos[b]
            for iw, iv in zip(images[w], images[v]):
                d = iw - iv
                if not d.is_zero:
                    diffs.append(d)
    return diffs


def _coprime_split(D, diffs):
    """Split squarefree D into pairwise coprime factors, refined so that each
    factor either divides or is coprime to every listed difference."""
    basis = [D]
    changed = True
    while changed:
        changed = False
        for q in list(basis):
            if q.is_constant:
                basis.remove(q)
                continue
            for d in diffs:
                if d.is_constant:
                    continue
                g = poly_gcd(q, d)
                if g.is_constant:
                    continue
                cof = exact_div(q, g)
                if cof.is_constant:
                    continue  # q | d, nothing to split
                basis.remove(q)
                basis.extend([g, cof])
                changed = True
                break
            if changed:
                break
    return basis


def _same_class(q, w, v):
    for iw, iv in zip(w._variable_images(), v._variable_images()):
        d = iw - iv
        if not d.is_zero and not divides(q, d):
            return False
    return True


def _exact_membership(X):
    """Exact verdict via residue-class sums; None when D is not squarefree."""
    D, nums = X.scaled()
    if D.is_constant:
        return MembershipVerdict("member", "exact_squarefree", 0,
                                 note="polynomial coefficients")
    if not is_squarefree(D):
        return None
    support = X.support_sorted()
    basis = _coprime_split(D, _support_differences(X))
    for q in sorted(basis, key=lambda p: (p.total_degree(), str(p))):
        classes = []
        for w in support:
            for cls in classes:
                if _same_class(q, cls[0], w):
                    cls.append(w)
                    break
            else:
                classes.append([w])
        for cls in classes:
            total = MultiPoly.zero(X.variables)
            for w in cls:
                total = total + nums[w]
            if not divides(q, total):
                witness = _find_failure_witness(X)
                return MembershipVerdict(
                    "non_member", "exact_squarefree", 0, witness=witness,
                    note=f"residue-class sum not divisible by {q}")
    return MembershipVerdict("member", "exact_squarefree", 0)


def _find_failure_witness(X):
    """Graded-lex-first monomial a with X(a) not polynomial (known to exist)."""
    for bound in range(_WITNESS_SWEEP_CAP + 1):
        for m in monomials_upto(X.variables, bound):
            if bound and m.total_degree() < bound:
                continue
            num, den = X.evaluate_scaled(m)
            if not divides(den, num):
                return m
    raise AssertionError("exact non-member without a witness; criterion violated")


def member_standard(X, data, degree_bound=DEFAULT_DEGREE_BOUND, mode="auto"):
    """Membership of X in the standard flag order over data's polynomial ring.

    mode "auto" tries the exact squarefree criterion first and falls back to
    the bounded sweep with a note; "exact" and "bounded" force one path.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    if mode not in ("auto", "exact", "bounded"):
        raise ValueError(f"unknown mode {mode!r}")
    if X.variables != data.variables:
        raise ValueError("element and data use different variable lists")
    if X.is_zero:
        return MembershipVerdict("member", "exact_squarefree", 0, note="zero element")
    note = None
    if mode in ("auto", "exact"):
        verdict = _exact_membership(X)
        if verdict is not None:
            return verdict
        note = "denominator not squarefree; fell back to the bounded sweep"
    for m in monomials_upto(X.variables, degree_bound):
        num, den = X.evaluate_scaled(m)
        if not divides(den, num):
            return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                     witness=m, note=note)
    return MembershipVerdict("member_up_to_degree", "degree_bounded", degree_bound,
                             note=note)


# -- generators and projections -------------------------------------------------


def demazure(i, data):
    """Divided-difference generator 1/(x_{i+1} - x_i) ((i, i+1) - 1)."""
    n = len(data.variables)
    if not 1 <= i <= n - 1:
        raise InvalidGeneratorError(f"index {i} needs variables x_i, x_(i+1)")
    t = Automorphism.from_cycle(data.variables, (i, i + 1))
    if t not in set(data.w_group()):
        raise InvalidGeneratorError(f"transposition ({i} {i + 1}) is not in W")
    xi = MultiPoly.variable(data.variables, data.variables[i - 1])
    xj = MultiPoly.variable(data.variables, data.variables[i])
    f = RatFunc(MultiPoly.one(data.variables), xj - xi)
    return SkewElement(data.variables, {t: f, data.identity(): -f})


def symmetrizer(data):
    """Idempotent e = (1/#W) sum_{w in W} w."""
    group = data.w_group()
    c = RatFunc.constant(data.variables, Fraction(1, len(group)))
    return SkewElement(data.variables, {w: c for w in group})


def reynolds(a, data):
    """Average of a over the finite group W; projects onto the invariants."""
    return symmetrizer(data).evaluate(a)


def spherical_project(X, data):
    """Two-sided symmetrization e * X * e."""
    e = symmetrizer(data)
    return e * X * e


def check_spherical_image(X, data, degree_bound=DEFAULT_DEGREE_BOUND):
    """Bounded check that e*X*e maps invariant images of monomials into invariants.

    This is the standard Galois order condition restricted to Reynolds images
    of monomials of total degree <= degree_bound.
    """
    proj = spherical_project(X, data)
    group = data.w_group()
    for m in monomials_upto(data.variables, degree_bound):
        gamma = reynolds(m, data)
        val = proj.evaluate(gamma)
        if not val.is_polynomial:
            return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                     witness=m, note="image not polynomial")
        p = val.as_poly()
        for w in group:
            if w.apply_poly(p) != p:
                return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                         witness=m, note="image not invariant")
    return MembershipVerdict("member_up_to_degree", "degree_bounded", degree_bound)


# -- ideal-relative oracles --------------------------------------------------------


def member_fixes_ideal(X, ideal, data, degree_bound=DEFAULT_DEGREE_BOUND):
    """Membership in the subring of the standard order that preserves the ideal.

    Tests X(g * m) in I for each ideal generator g and every monomial m of
    total degree <= degree_bound.  A multiplication operator p * id with
    polynomial p is accepted exactly.
    """
    base = member_standard(X, data, degree_bound)
    if not base.is_member:
        base.note = "fails standard-order membership"
        return base
    if X.is_coefficient_only and (X.is_zero or X.as_ratfunc().is_polynomial):
        return MembershipVerdict("member", base.mode, degree_bound,
                                 note="multiplication operator preserves every ideal")
    for g in ideal.generators:
        for m in monomials_upto(data.variables, degree_bound):
            a = g * m
            num, den = X.evaluate_scaled(a)
            if not divides(den, num):
                return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                         witness=a, note="image not polynomial")
            if not ideal.contains(exact_div(num, den)):
                return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                         witness=a, note=ideal.note)
    return MembershipVerdict("member_up_to_degree", "degree_bounded", degree_bound,
                             note=ideal.note)


def member_into_ideal(X, ideal, data, degree_bound=DEFAULT_DEGREE_BOUND):
    """Membership in I F: X(a) lands in the ideal for every polynomial a.

    If every left coefficient is a polynomial lying in I this holds exactly;
    otherwise the bounded monomial sweep applies.
    """
    if X.is_zero:
        return MembershipVerdict("member", "exact_squarefree", 0, note="zero element")
    coeffs = list(X.terms.values())
    if all(f.is_polynomial and ideal.contains(f.as_poly()) for f in coeffs):
        return MembershipVerdict("member", "exact_squarefree", 0,
                                 note="all coefficients lie in the ideal")
    for m in monomials_upto(data.variables, degree_bound):
        num, den = X.evaluate_scaled(m)
        if not divides(den, num):
            return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                     witness=m, note="image not polynomial")
        if not ideal.contains(exact_div(num, den)):
            return MembershipVerdict("non_member", "degree_bounded", degree_bound,
                                     witness=m, note=ideal.note)
    return MembershipVerdict("member_up_to_degree", "degree_bounded", degree_bound,
                             note=ideal.note)


class ClassVerdict:
    """Comparison of two operators modulo the ideal-image subring.

    status: equal | equal_up_to_degree | not_equal
    """

    def __init__(self, status, degree_bound, witness=None, note=None):
        self.status = status
        self.degree_bound = degree_bound
        self.witness = witness
        self.note = note

    @property
    def agrees(self):
        return self.status in ("equal", "equal_up_to_degree")

    def to_dict(self):
        out = {
            "status": self.status,
            "degree_bound": self.degree_bound,
            "witness": None if self.witness is None else str(self.witness),
        }
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        return f"ClassVerdict({self.status})"


def quotient_class_eq(X, Y, ideal, data, degree_bound=DEFAULT_DEGREE_BOUND):
    """Equality of the classes of X and Y in fixes(I)/into(I).

    Classes act on Lambda/I; equality holds iff (X - Y)(m) lies in I, which
    is swept over monomials of total degree <= degree_bound.
    """
    if X == Y:
        return ClassVerdict("equal", degree_bound, note="identical elements")
    Z = X - Y
    for m in monomials_upto(data.variables, degree_bound):
        num, den = Z.evaluate_scaled(m)
        if not divides(den, num):
            return ClassVerdict("not_equal", degree_bound, witness=m,
                                note="difference image not polynomial")
        if not ideal.contains(exact_div(num, den)):
            return ClassVerdict("not_equal", degree_bound, witness=m, note=ideal.note)
    return ClassVerdict("equal_up_to_degree", degree_bound, note=ideal.note)
