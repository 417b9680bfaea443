"""Signed-affine variable substitutions and flag-order data.

An automorphism acts by x_i -> s_i * x_{sigma(i)} + t_i with sigma a
permutation of variable indices, s_i in {+1, -1} and t_i rational.  This
class is closed under composition and inversion and covers permutation
actions, sign flips (Klein-type groups) and integer shift lattices, which is
every action the toolkit needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .errors import AlignmentError, GroupTooLargeError
from .poly import MultiPoly
from .ratfunc import RatFunc

DEFAULT_GROUP_CAP = 1000


class Automorphism:
    __slots__ = ("variables", "perm", "signs", "shifts", "_hash", "_images")

    def __init__(self, variables, perm, signs, shifts):
        self.variables = tuple(variables)
        self.perm = tuple(perm)
        self.signs = tuple(signs)
        self.shifts = tuple(Fraction(t) for t in shifts)
        n = len(self.variables)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm is not a permutation of the variable indices")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1/-1 of full length")
        if len(self.shifts) != n:
            raise ValueError("shift vector has wrong length")
        self._hash = None
        self._images = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, variables):
        n = len(tuple(variables))
        return cls(variables, range(n), (1,) * n, (0,) * n)

    @classmethod
    def from_cycle(cls, variables, cycle):
        """Permutation automorphism from a 1-based cycle such as (1 2 3)."""
        variables = tuple(variables)
        n = len(variables)
        cycle = [int(c) for c in cycle]
        if len(set(cycle)) != len(cycle):
            raise ValueError(f"repeated entry in cycle {cycle}")
        if any(c < 1 or c > n for c in cycle):
            raise ValueError(f"cycle entry out of range 1..{n}")
        perm = list(range(n))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            perm[a - 1] = b - 1
        return cls(variables, perm, (1,) * n, (0,) * n)

    @classmethod
    def sign_flip(cls, variables, name):
        variables = tuple(variables)
        i = _var_index(variables, name)
        n = len(variables)
        signs = tuple(-1 if j == i else 1 for j in range(n))
        return cls(variables, range(n), signs, (0,) * n)

    @classmethod
    def shift(cls, variables, name, amount):
        variables = tuple(variables)
        i = _var_index(variables, name)
        n = len(variables)
        shifts = tuple(Fraction(amount) if j == i else Fraction(0) for j in range(n))
        return cls(variables, range(n), (1,) * n, shifts)

    @classmethod
    def translation(cls, variables, shifts):
        n = len(tuple(variables))
        return cls(variables, range(n), (1,) * n, shifts)

    # -- structure ---------------------------------------------------------

    @property
    def is_identity(self):
        n = len(self.variables)
        return (
            self.perm == tuple(range(n))
            and all(s == 1 for s in self.signs)
            and not any(self.shifts)
        )

    @property
    def is_pure_shift(self):
        n = len(self.variables)
        return self.perm == tuple(range(n)) and all(s == 1 for s in self.signs)

    @property
    def has_zero_shift(self):
        return not any(self.shifts)

    def w_part(self):
        """Signed-permutation factor P with self = T o P, T a pure shift."""
        return Automorphism(self.variables, self.perm, self.signs, (0,) * len(self.variables))

    def m_part_vector(self):
        """Shift vector u of the pure-shift factor T in self = T o P."""
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return tuple(self.signs[inv[i]] * self.shifts[inv[i]] for i in range(len(self.perm)))

    def m_part(self):
        return Automorphism.translation(self.variables, self.m_part_vector())

    # -- group law ------------------------------------------------------------

    def compose(self, other):
        """self o other, so (self o other)(f) = self(other(f))."""
        if self.variables != other.variables:
            raise AlignmentError("automorphisms over different variable lists")
        v, w = self, other
        n = len(self.variables)
        perm = tuple(v.perm[w.perm[i]] for i in range(n))
        signs = tuple(w.signs[i] * v.signs[w.perm[i]] for i in range(n))
        shifts = tuple(w.signs[i] * v.shifts[w.perm[i]] + w.shifts[i] for i in range(n))
        return Automorphism(self.variables, perm, signs, shifts)

    __mul__ = compose

    def inverse(self):
        n = len(self.variables)
        inv = [0] * n
        for i, j in enumerate(self.perm):
            inv[j] = i
        signs = tuple(self.signs[inv[j]] for j in range(n))
        shifts = tuple(-self.signs[inv[j]] * self.shifts[inv[j]] for j in range(n))
        return Automorphism(self.variables, inv, signs, shifts)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Automorphism.identity(self.variables)
        for _ in range(k):
            out = out.compose(self)
        return out

    # -- action ------------------------------------------------------------------

    def _variable_images(self):
        if self._images is None:
            imgs = []
            for i in range(len(self.variables)):
                e = tuple(1 if j == self.perm[i] else 0 for j in range(len(self.variables)))
                terms = {e: Fraction(self.signs[i])}
                if self.shifts[i]:
                    terms[(0,) * len(self.variables)] = self.shifts[i]
                imgs.append(MultiPoly(self.variables, terms))
            self._images = tuple(imgs)
        return self._images

    def apply_poly(self, p):
        if p.variables != self.variables:
            raise AlignmentError("polynomial over a different variable list")
        if self.is_identity or p.is_zero:
            return p
        n = len(self.variables)
        if not any(self.shifts):
            # signed permutation: remap exponents directly
            out = {}
            for e, c in p.terms.items():
                ne = [0] * n
                sgn = 1
                for i, ei in enumerate(e):
                    if ei:
                        ne[self.perm[i]] = ei
                        if self.signs[i] == -1 and ei % 2:
                            sgn = -sgn
                out[tuple(ne)] = c if sgn == 1 else -c
            return MultiPoly(self.variables, out)
        images = self._variable_images()
        result = MultiPoly.zero(self.variables)
        powers = [dict() for _ in range(n)]
        for e, c in p.terms.items():
            term = MultiPoly.constant(self.variables, c)
            for i, ei in enumerate(e):
                if not ei:
                    continue
                cache = powers[i]
                if ei not in cache:
                    cache[ei] = _affine_power(self, i, ei)
                term = term * cache[ei]
            result = result + term
        return result

    def apply_ratfunc(self, f):
        if isinstance(f, MultiPoly):
            return RatFunc(self.apply_poly(f))
        return RatFunc(self.apply_poly(f.num), self.apply_poly(f.den))

    def apply(self, f):
        if isinstance(f, MultiPoly):
            return self.apply_poly(f)
        return self.apply_ratfunc(f)

    # -- identity/equality ----------------------------------------------------------

    def key(self):
        return (self.perm, self.signs, self.shifts)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.variables == other.variables and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, self.key()))
        return self._hash

    def sort_key(self):
        return (self.perm, self.signs, self.shifts)

    def embed(self, new_variables):
        new_variables = tuple(new_variables)
        pos = {v: i for i, v in enumerate(new_variables)}
        try:
            idx = [pos[v] for v in self.variables]
        except KeyError as exc:
            raise AlignmentError(f"variable {exc} missing from target list") from None
        n = len(new_variables)
        perm = list(range(n))
        signs = [1] * n
        shifts = [Fraction(0)] * n
        for i in range(len(self.variables)):
            perm[idx[i]] = idx[self.perm[i]]
            signs[idx[i]] = self.signs[i]
            shifts[idx[i]] = self.shifts[i]
        return Automorphism(new_variables, perm, signs, shifts)

    # -- display ---------------------------------------------------------------------

    def _cycles(self):
        seen = set()
        cycles = []
        for i in range(len(self.perm)):
            if i in seen or self.perm[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.perm[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.perm[j]
            cycles.append(cycle)
        return cycles

    def __str__(self):
        factors = []
        for i, t in enumerate(self.m_part_vector()):
            if t:
                factors.append(f"shift({self.variables[i]}:{t})")
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        for j in range(len(self.perm)):
            if self.signs[inv[j]] == -1:
                factors.append(f"sign({self.variables[j]})")
        for cycle in self._cycles():
            entries = " ".join(str(i + 1) for i in cycle)
            factors.append(f"perm({entries})")
        return "*".join(factors) if factors else "id"

    def __repr__(self):
        return f"Automorphism({str(self)!r})"


def _var_index(variables, name):
    try:
        return variables.index(name)
    except ValueError:
        raise AlignmentError(f"unknown variable {name!r} in {variables}") from None


def _affine_power(auto, i, e):
    """(s*x_j + t)^e expanded by the binomial theorem."""
    n = len(auto.variables)
    j = auto.perm[i]
    s, t = auto.signs[i], auto.shifts[i]
    if not t:
        exps = tuple(e if k == j else 0 for k in range(n))
        return MultiPoly(auto.variables, {exps: Fraction(s ** e)})
    terms = {}
    for k in range(e + 1):
        exps = tuple(k if m == j else 0 for m in range(n))
        terms[exps] = Fraction(math.comb(e, k)) * (s ** k) * (t ** (e - k))
    return MultiPoly(auto.variables, terms)


# -- group enumeration -------------------------------------------------------


def enumerate_group(gens, cap=DEFAULT_GROUP_CAP):
    """Closure of the generators under composition and inversion.

    Deterministic insertion order starting from the identity.  Raises
    GroupTooLargeError once the closure exceeds cap, which signals an
    infinite group (e.g. a shift) or a cap set too low.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (use the identity)")
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise AlignmentError("generators over different variable lists")
    seed = [Automorphism.identity(variables)]
    for g in gens:
        seed.append(g)
        seed.append(g.inverse())
    elements = {}
    for g in seed:
        elements.setdefault(g, None)
    if len(elements) > cap:
        raise GroupTooLargeError(f"group exceeds cap {cap}")
    frontier = list(elements)
    while frontier:
        new = []
        for a in list(elements):
            for b in frontier:
                c = a.compose(b)
                if c not in elements:
                    elements[c] = None
                    new.append(c)
                    if len(elements) > cap:
                        raise GroupTooLargeError(f"group exceeds cap {cap}")
                d = b.compose(a)
                if d not in elements:
                    elements[d] = None
                    new.append(d)
                    if len(elements) > cap:
                        raise GroupTooLargeError(f"group exceeds cap {cap}")
        frontier = new
    return list(elements)


def words_upto(gens, length, include_inverses=False, cap=100000):
    """Distinct automorphisms reachable by words of <= length letters."""
    letters = list(gens)
    if include_inverses:
        for g in list(gens):
            inv = g.inverse()
            if inv not in letters:
                letters.append(inv)
    if not letters:
        return {}
    variables = letters[0].variables
    found = {Automorphism.identity(variables): 0}
    frontier = [Automorphism.identity(variables)]
    for depth in range(1, length + 1):
        new = []
        for w in frontier:
            for g in letters:
                c = w.compose(g)
                if c not in found:
                    found[c] = depth
                    new.append(c)
                    if len(found) > cap:
                        raise GroupTooLargeError("word enumeration exceeded cap")
        frontier = new
    return found


# -- flag order data -----------------------------------------------------------


class FlagData:
    """Data triple: a polynomial variable list, W generators, M generators.

    With require_split on (the default) W generators must be shift-free and
    M generators pure shifts, so every element of the generated group factors
    uniquely as (pure shift) o (signed permutation).  The axiom checkers can
    be pointed at deliberately broken data by passing require_split=False.
    """

    def __init__(self, variables, w_gens=(), m_gens=(), labels=None,
                 m_abelian=True, require_split=True, w_cap=DEFAULT_GROUP_CAP):
        self.variables = tuple(variables)
        self.w_gens = tuple(w_gens)
        self.m_gens = tuple(m_gens)
        self.labels = dict(labels) if labels else {}
        self.m_abelian = m_abelian
        self.require_split = require_split
        self.w_cap = w_cap
        for g in self.w_gens + self.m_gens:
            if g.variables != self.variables:
                raise AlignmentError("generator over a different variable list")
        if require_split:
            for g in self.w_gens:
                if not g.has_zero_shift:
                    raise ValueError(f"W generator {g} carries a shift; not a split datum")
            for g in self.m_gens:
                if not g.is_pure_shift:
                    raise ValueError(f"M generator {g} is not a pure shift; not a split datum")
        if m_abelian:
            for a, b in combinations(self.m_gens, 2):
                if a.compose(b) != b.compose(a):
                    raise ValueError(f"M generators {a} and {b} do not commute")
        self._w_group = None
        self._axiom_cache = {}

    def identity(self):
        return Automorphism.identity(self.variables)

    def w_group(self):
        if self._w_group is None:
            gens = list(self.w_gens) or [self.identity()]
            self._w_group = tuple(enumerate_group(gens, cap=self.w_cap))
        return self._w_group

    def poly(self, name):
        return MultiPoly.variable(self.variables, name)

    def __repr__(self):
        return (f"FlagData(variables={self.variables}, "
                f"w_gens={len(self.w_gens)}, m_gens={len(self.m_gens)})")


class AxiomReport:
    """Outcome of a bounded axiom check, with violation witnesses."""

    def __init__(self, axiom, ok, word_len, witnesses, checked, note=None):
        self.axiom = axiom
        self.ok = ok
        self.word_len = word_len
        self.witnesses = list(witnesses)
        self.checked = checked
        self.note = note

    def to_dict(self):
        return {
            "axiom": self.axiom,
            "ok": self.ok,
            "word_len": self.word_len,
            "witnesses": [str(w) for w in self.witnesses],
            "checked": self.checked,
            **({"note": self.note} if self.note else {}),
        }

    def __repr__(self):
        flag = "pass" if self.ok else "FAIL"
        return f"AxiomReport({self.axiom}: {flag}, word_len={self.word_len})"


def check_separation(data, word_len):
    """Bounded separation check: no nontrivial M-word (with inverses) lies in W.

    Sweeps every product of at most word_len letters drawn from the M
    generators and their inverses and intersects with the enumerated W.
    """
    if word_len < 1:
        raise ValueError("word_len must be >= 1")
    cached = data._axiom_cache.get(("separation", word_len))
    if cached is not None:
        return cached
    w_set = set(data.w_group())
    if not data.m_gens:
        report = AxiomReport("separation", True, word_len, [], 0,
                             note="M trivial; intersection vacuously trivial")
    else:
        mwords = words_upto(data.m_gens, word_len, include_inverses=True)
        witnesses = sorted(
            (w for w in mwords if w in w_set and not w.is_identity),
            key=Automorphism.sort_key,
        )
        report = AxiomReport("separation", not witnesses, word_len, witnesses, len(mwords))
    data._axiom_cache[("separation", word_len)] = report
    return report


def check_invariance(data, word_len):
    """Bounded invariance check: W-conjugates of M-words stay inside M.

    A conjugate g o mu o g^{-1} passes when it is found among the words of at
    most word_len letters in the M generators; the bound is reported.
    """
    if word_len < 1:
        raise ValueError("word_len must be >= 1")
    cached = data._axiom_cache.get(("invariance", word_len))
    if cached is not None:
        return cached
    group = data.w_group()
    if len(group) == 1 or not data.m_gens:
        note = "W trivial" if len(group) == 1 else "M trivial"
        report = AxiomReport("invariance", True, word_len, [], 0, note=note + "; vacuous")
        data._axiom_cache[("invariance", word_len)] = report
        return report
    mwords = words_upto(data.m_gens, word_len)
    witnesses = []
    checked = 0
    for g in group:
        if g.is_identity:
            continue
        ginv = g.inverse()
        for mu in mwords:
            if mu.is_identity:
                continue
            checked += 1
            conj = g.compose(mu).compose(ginv)
            if conj not in mwords:
                witnesses.append((g, mu, conj))
    witnesses.sort(key=lambda t: (t[0].sort_key(), t[1].sort_key()))
    shown = [f"{g} . {mu} . {g}^-1 = {conj}" for g, mu, conj in witnesses]
    report = AxiomReport("invariance", not witnesses, word_len, shown, checked)
    data._axiom_cache[("invariance", word_len)] = report
    return report
