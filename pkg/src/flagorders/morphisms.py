"""Morphisms between standard flag orders, and the split-ideal machinery.

A morphism is determined by a ring map phi on source variables and a group
map psi on source generators subject to the intertwining condition

    phi(w(a)) = psi(w)(phi(a))   for all generators w and variables a,

which suffices for the linear extension Phi(f * w) = phi(f) * psi(w) to be an
algebra homomorphism of the skew rings.  Validation checks psi really is a
group homomorphism (conflict-free closure over the finite W part, pairwise
commutation and conjugation consistency on the shift part) and, when a
tensor complement is declared, bounded linear independence of the claimed
product basis.
"""

from __future__ import annotations

from fractions import Fraction

from .automorphisms import Automorphism, enumerate_group
from .errors import (
    CompatibilityError,
    DecompositionError,
    DirectProductError,
    HomomorphismError,
    MorphismDomainError,
)
from .linalg import frac_rank, frac_solve
from .orders import DEFAULT_DEGREE_BOUND, member_standard, symmetrizer
from .poly import MultiPoly, monomials_upto
from .ratfunc import RatFunc
from .skew import SkewElement

DEFAULT_DECOMP_BOUND = 3


class Morphism:
    """Validated morphism data; construct through build_morphism."""

    def __init__(self, source, target, phi, psi, complement, w_table):
        self.source = source
        self.target = target
        self.phi = dict(phi)
        self.psi = dict(psi)
        self.complement = None if complement is None else list(complement)
        self._w_table = w_table
        self._m_cache = {}
        self._powers = {}

    # -- ring map -----------------------------------------------------------

    def phi_poly(self, p):
        if p.variables != self.source.variables:
            raise MorphismDomainError("polynomial over a different variable list")
        result = MultiPoly.zero(self.target.variables)
        for e, c in p.terms.items():
            term = MultiPoly.constant(self.target.variables, c)
            for i, ei in enumerate(e):
                if not ei:
                    continue
                cache = self._powers.setdefault(i, {})
                if ei not in cache:
                    cache[ei] = self.phi[self.source.variables[i]] ** ei
                term = term * cache[ei]
            result = result + term
        return result

    def phi_ratfunc(self, f):
        num = self.phi_poly(f.num)
        den = self.phi_poly(f.den)
        if den.is_zero:
            raise MorphismDomainError("phi maps a denominator to zero")
        return RatFunc(num, den)

    # -- group map ------------------------------------------------------------

    def psi_of(self, w):
        """Image of an arbitrary element of the source group W x M."""
        if w in self.psi:
            return self.psi[w]
        P = w.w_part()
        img_P = self._w_table.get(P)
        if img_P is None:
            raise MorphismDomainError(f"{P} is outside the group generated by the psi domain")
        u = w.m_part_vector()
        if not any(u):
            return img_P
        img_T = self._m_image(u)
        return img_T.compose(img_P)

    def _m_image(self, u):
        if u in self._m_cache:
            return self._m_cache[u]
        ks = _solve_in_lattice(self.source.m_gens, u)
        if ks is None:
            raise MorphismDomainError(
                f"shift {u} is not an integer word in the declared M generators")
        img = Automorphism.identity(self.target.variables)
        for g, k in zip(self.source.m_gens, ks):
            if k:
                img = img.compose(self.psi[g] ** k)
        self._m_cache[u] = img
        return img

    # -- skew-ring map -----------------------------------------------------------

    def apply(self, X):
        """Phi(X) = sum phi(f_w) * psi(w)."""
        out = {}
        for w, f in X.terms.items():
            img_w = self.psi_of(w)
            coeff = self.phi_ratfunc(f)
            if coeff.is_zero:
                continue
            s = out.get(img_w)
            s = coeff if s is None else s + coeff
            if s.is_zero:
                out.pop(img_w, None)
            else:
                out[img_w] = s
        return SkewElement(self.target.variables, out)

    def __repr__(self):
        phi = ", ".join(f"{v} -> {p}" for v, p in self.phi.items())
        return f"Morphism({phi})"


def _solve_in_lattice(gens, u):
    """Integer coordinates of shift vector u over the generators' shifts."""
    if not any(u):
        return [0] * len(gens)
    if not gens:
        return None
    cols = [g.m_part_vector() for g in gens]
    matrix = [[cols[j][i] for j in range(len(gens))] for i in range(len(u))]
    sol = frac_solve(matrix, list(u))
    if sol is None or any(k.denominator != 1 for k in sol):
        return None
    return [int(k) for k in sol]


def _build_w_table(w_gens, images, cap):
    """Conflict-checked closure: the map gen -> image extends to the group.

    BFS over products; a product reached twice with different images means
    the images do not satisfy the generators' relations.
    """
    variables = w_gens[0].variables if w_gens else None
    if variables is None:
        return None
    table = {Automorphism.identity(variables): Automorphism.identity(images[0].variables)}
    for g, img in zip(w_gens, images):
        if table.get(g, img) != img:
            raise HomomorphismError(f"inconsistent images for generator {g}")
        table[g] = img
        gi, imgi = g.inverse(), img.inverse()
        if table.get(gi, imgi) != imgi:
            raise HomomorphismError(f"inconsistent images for inverse of {g}")
        table[gi] = imgi
    frontier = list(table)
    while frontier:
        new = []
        for a in list(table):
            for b in frontier:
                c = a.compose(b)
                img = table[a].compose(table[b])
                known = table.get(c)
                if known is None:
                    table[c] = img
                    new.append(c)
                    if len(table) > cap:
                        raise HomomorphismError("W closure exceeded cap during validation")
                elif known != img:
                    raise HomomorphismError(
                        f"generator images conflict at {c}: {known} vs {img}")
        frontier = new
    return table


def build_morphism(phi, psi, complement, data1, data2,
                   decomp_bound=DEFAULT_DECOMP_BOUND):
    """Validate (phi, psi[, complement]) and return the Morphism.

    Raises CompatibilityError with the violating (generator, variable) pair,
    HomomorphismError when the generator images admit no homomorphic
    extension, and DecompositionError when the bounded independence check of
    the complement decomposition fails.
    """
    phi = {v: (p if isinstance(p, MultiPoly) else MultiPoly.variable(data2.variables, p))
           for v, p in phi.items()}
    missing = [v for v in data1.variables if v not in phi]
    if missing:
        raise MorphismDomainError(f"phi undefined on variables {missing}")
    psi = dict(psi)
    for g in list(data1.w_gens) + list(data1.m_gens):
        if g not in psi:
            raise MorphismDomainError(f"psi undefined on generator {g}")
    for img in psi.values():
        if img.variables != data2.variables:
            raise MorphismDomainError("psi image over a different variable list")

    w_images = [psi[g] for g in data1.w_gens]
    w_table = _build_w_table(list(data1.w_gens), w_images, cap=data1.w_cap) \
        if data1.w_gens else {Automorphism.identity(data1.variables):
                              Automorphism.identity(data2.variables)}

    # abelian part: images must commute, and inverse pairs must map to inverses
    m_gens = list(data1.m_gens)
    for i in range(len(m_gens)):
        for j in range(i + 1, len(m_gens)):
            a, b = psi[m_gens[i]], psi[m_gens[j]]
            if a.compose(b) != b.compose(a):
                raise HomomorphismError(
                    f"images of commuting M generators {m_gens[i]}, {m_gens[j]} do not commute")
            if m_gens[i].compose(m_gens[j]).is_identity:
                if not a.compose(b).is_identity:
                    raise HomomorphismError(
                        f"M generators {m_gens[i]}, {m_gens[j]} are mutually inverse "
                        "but their images are not")

    morphism = Morphism(data1, data2, phi, psi, complement, w_table)

    # conjugation consistency ties the two parts together
    for g in data1.w_gens:
        for mu in m_gens:
            conj = g.compose(mu).compose(g.inverse())
            ks = _solve_in_lattice(m_gens, conj.m_part_vector())
            if ks is None or not conj.is_pure_shift:
                raise HomomorphismError(
                    f"conjugate {g} {mu} {g}^-1 leaves the declared M lattice")
            expected = morphism._m_image(conj.m_part_vector())
            got = psi[g].compose(psi[mu]).compose(psi[g].inverse())
            if got != expected:
                raise HomomorphismError(
                    f"conjugation of {mu} by {g} is not respected by the images")

    # the intertwining condition on every (generator, variable) pair
    for g in list(data1.w_gens) + m_gens:
        for name in data1.variables:
            x = MultiPoly.variable(data1.variables, name)
            lhs = morphism.phi_poly(g.apply_poly(x))
            rhs = psi[g].apply_poly(morphism.phi_poly(x))
            if lhs != rhs:
                raise CompatibilityError(g, name,
                                         f"phi({g}({name})) = {lhs} but psi({g})(phi({name})) = {rhs}")

    if complement is not None:
        _check_decomposition(morphism, decomp_bound)
    return morphism


def _check_decomposition(morphism, bound):
    """Bounded independence of {phi(source monomial) * complement monomial}."""
    target_vars = morphism.target.variables
    target_monos = monomials_upto(target_vars, bound)
    index = {m.leading_term()[0]: i for i, m in enumerate(target_monos)}
    comp = list(morphism.complement or [])
    comp_words = _generated_monomials(comp, target_vars, bound)
    products = []
    labels = []
    for m1 in monomials_upto(morphism.source.variables, bound):
        img = morphism.phi_poly(m1)
        if img.is_zero or img.total_degree() > bound:
            continue
        for u in comp_words:
            p = img * u
            if p.is_zero or p.total_degree() > bound:
                continue
            products.append(p)
            labels.append(f"phi({m1}) * {u}")
    rows = []
    for p in products:
        row = [Fraction(0)] * len(target_monos)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    rank = frac_rank(rows)
    if rank != len(products):
        raise DecompositionError(
            f"complement decomposition fails at degree {bound}: "
            f"{len(products)} products span rank {rank}; dependent set {labels}")


def _generated_monomials(gens, variables, bound):
    """Products of the generators with total degree <= bound, deduplicated."""
    out = {MultiPoly.one(variables): None}
    frontier = [MultiPoly.one(variables)]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                p = w * g
                if p.is_zero or p.total_degree() > bound:
                    continue
                if p not in out:
                    out[p] = None
                    new.append(p)
        frontier = new
    return list(out)


def apply_morphism(morphism, X):
    return morphism.apply(X)


def check_restriction(morphism, X, degree_bound=DEFAULT_DEGREE_BOUND):
    """Image membership in the target standard order.

    When the morphism carries a validated complement the restriction theorem
    guarantees membership; a failure therefore indicts the complement
    hypothesis and is flagged as such.
    """
    verdict = member_standard(morphism.apply(X), morphism.target, degree_bound)
    if not verdict.is_member and morphism.complement is not None:
        verdict.note = ((verdict.note + "; ") if verdict.note else "") + \
            "restriction guarantee violated: complement hypothesis suspect"
    return verdict


# -- spherical restriction ------------------------------------------------------


def spherical_restriction(morphism, X, h_gens):
    """Restriction to the spherical (centralizer) subalgebras.

    Requires the target group to factor as psi(source) x <h_gens> acting
    compatibly on the declared complement.  Returns e2 * Phi(X) * e2 after
    verifying it equals the h-average of Phi(e1 * X * e1) exactly.
    """
    validate_direct_product(morphism, h_gens, raise_on_fail=True)
    target = morphism.target
    e2 = symmetrizer(target)
    lhs = e2 * morphism.apply(X) * e2

    e1 = symmetrizer(morphism.source)
    inner = morphism.apply(e1 * X * e1)
    h_group = enumerate_group([h.w_part() for h in h_gens] or
                              [Automorphism.identity(target.variables)],
                              cap=target.w_cap)
    c = RatFunc.constant(target.variables, Fraction(1, len(h_group)))
    e_h = SkewElement(target.variables, {h: c for h in h_group})
    rhs = e_h * inner * e_h
    if lhs != rhs:
        raise DirectProductError(
            (str(X),), "spherical identity e2 Phi(X) e2 != avg_H Phi(e1 X e1) avg_H")
    return lhs


class DirectProductReport:
    """Mechanical verdict on the target factorization psi(W^1) x H."""

    def __init__(self):
        self.commutation_ok = True
        self.intersection_ok = True
        self.generation_ok = True
        self.action_ok = None
        self.witnesses = []

    @property
    def ok(self):
        checks = [self.commutation_ok, self.intersection_ok, self.generation_ok]
        if self.action_ok is not None:
            checks.append(self.action_ok)
        return all(checks)

    def to_dict(self):
        return {
            "commutation_ok": self.commutation_ok,
            "intersection_ok": self.intersection_ok,
            "generation_ok": self.generation_ok,
            "action_ok": self.action_ok,
            "witnesses": [str(w) for w in self.witnesses],
        }


def validate_direct_product(morphism, h_gens, raise_on_fail=False):
    """Check the direct-product hypothesis behind the spherical restriction.

    Verifies elementwise commutation of the psi-images with the h generators,
    trivial intersection (finite parts by enumeration, shift parts by an
    exact rank computation), joint generation of the target data, and the
    declared action on the complement factor when one is present.
    """
    report = DirectProductReport()
    target = morphism.target

    psi_images = [morphism.psi[g] for g in
                  list(morphism.source.w_gens) + list(morphism.source.m_gens)]
    for a in psi_images:
        for h in h_gens:
            if a.compose(h) != h.compose(a):
                report.commutation_ok = False
                report.witnesses.append(f"non-commuting pair ({a}, {h})")

    psi_w = enumerate_group([a.w_part() for a in psi_images] or
                            [Automorphism.identity(target.variables)], cap=target.w_cap)
    h_w = enumerate_group([h.w_part() for h in h_gens] or
                          [Automorphism.identity(target.variables)], cap=target.w_cap)
    overlap = (set(psi_w) & set(h_w)) - {Automorphism.identity(target.variables)}
    psi_shift_basis = _orbit_shifts(psi_w, psi_images)
    h_shift_basis = _orbit_shifts(h_w, h_gens)
    if overlap:
        report.intersection_ok = False
        report.witnesses.extend(f"shared finite element {w}" for w in sorted(
            overlap, key=Automorphism.sort_key))
    ra = frac_rank(psi_shift_basis)
    rb = frac_rank(h_shift_basis)
    rab = frac_rank(psi_shift_basis + h_shift_basis)
    if rab != ra + rb:
        report.intersection_ok = False
        report.witnesses.append("shift lattices intersect nontrivially")

    joint_w = enumerate_group([a.w_part() for a in psi_images] +
                              [h.w_part() for h in h_gens] or
                              [Automorphism.identity(target.variables)], cap=target.w_cap)
    if set(joint_w) != set(target.w_group()):
        report.generation_ok = False
        report.witnesses.append("finite parts do not generate the target W")
    lattice = psi_shift_basis + h_shift_basis
    nv = len(target.variables)
    for mu in target.m_gens:
        u = mu.m_part_vector()
        matrix = [[row[i] for row in lattice] for i in range(nv)]
        if frac_solve(matrix, list(u)) is None:
            report.generation_ok = False
            report.witnesses.append(f"target shift {mu} outside the joint lattice")

    if morphism.complement is not None:
        report.action_ok = True
        gens1 = [Automorphism.identity(morphism.source.variables)] + \
            list(morphism.source.w_gens) + list(morphism.source.m_gens)
        for g in gens1:
            for h in h_gens:
                comp = morphism.psi_of(g).compose(h)
                for name in morphism.source.variables:
                    x = MultiPoly.variable(morphism.source.variables, name)
                    for u in morphism.complement:
                        lhs = comp.apply_poly(morphism.phi_poly(x) * u)
                        rhs = morphism.phi_poly(g.apply_poly(x)) * h.apply_poly(u)
                        if lhs != rhs:
                            report.action_ok = False
                            report.witnesses.append(
                                f"action mismatch for ({g}, {h}) on phi({name}) * ({u})")

    if raise_on_fail and not report.ok:
        raise DirectProductError(report.witnesses[:1] or ("unknown",),
                                 "; ".join(str(w) for w in report.witnesses[:3]))
    return report


def _orbit_shifts(finite_group, elements):
    """Spanning set of the shift lattice of the generated group: the orbit of
    the generators' shift parts under the finite signed-permutation part."""
    rows = []
    for el in elements:
        u = el.m_part_vector()
        if not any(u):
            continue
        for p in finite_group:
            img = p.compose(Automorphism.translation(el.variables, u)).compose(p.inverse())
            rows.append([Fraction(t) for t in img.m_part_vector()])
    return rows


# -- split short exact sequences ----------------------------------------------------


class IntersectionReport:
    """Scaled-down instance check of the split-intersection theorem."""

    def __init__(self):
        self.hypotheses = {}
        self.samples = []

    @property
    def ok(self):
        return all(ok for ok, _ in self.hypotheses.values()) and \
            all(s["consistent"] for s in self.samples)

    def to_dict(self):
        return {
            "hypotheses": {k: {"ok": ok, "detail": d} for k, (ok, d) in self.hypotheses.items()},
            "samples": self.samples,
        }


def check_intersection(data1, data2, ideal, morphism, samples,
                       degree_bound=DEFAULT_DEGREE_BOUND, decomp_bound=None):
    """Verify the hypotheses and the membership biconditional on samples.

    Hypotheses: the target splits as phi(source) + ideal in each degree up to
    the bound (unique decomposition of every monomial), the embedding
    satisfies the intertwining condition (validated with the morphism), and
    every source generator image fixes every ideal generator.  Each sample X
    is then tested both ways: X in the source order iff Phi(X) in the target
    order, at the same degree bound.
    """
    report = IntersectionReport()
    b = decomp_bound if decomp_bound is not None else min(degree_bound, 4)

    target_monos = monomials_upto(data2.variables, b)
    index = {m.leading_term()[0]: i for i, m in enumerate(target_monos)}

    def vec(p):
        row = [Fraction(0)] * len(target_monos)
        for e, c in p.terms.items():
            row[index[e]] = c
        return row

    a_rows = []
    for m1 in monomials_upto(data1.variables, b):
        img = morphism.phi_poly(m1)
        if not img.is_zero and img.total_degree() <= b:
            a_rows.append(vec(img))
    b_rows = []
    for g in ideal.generators:
        for m2 in target_monos:
            p = g * m2
            if not p.is_zero and p.total_degree() <= b:
                b_rows.append(vec(p))
    ra, rb, rab = frac_rank(a_rows), frac_rank(b_rows), frac_rank(a_rows + b_rows)
    total = len(target_monos)
    ok = (rab == total) and (ra + rb == rab)
    report.hypotheses["decomposition"] = (
        ok, f"rank phi-part {ra} + rank ideal-part {rb} vs joint {rab} of {total} "
            f"monomials at degree {b}")

    report.hypotheses["compatibility"] = (True, "validated by build_morphism")

    fixed = True
    details = []
    for gen in list(data1.w_gens) + list(data1.m_gens):
        img = morphism.psi[gen]
        for g in ideal.generators:
            if img.apply_poly(g) != g:
                fixed = False
                details.append(f"psi({gen}) moves ideal generator {g}")
    report.hypotheses["ideal_fixed"] = (fixed, "; ".join(details) or
                                        "every generator image fixes every ideal generator")

    for X in samples:
        v1 = member_standard(X, data1, degree_bound)
        v2 = member_standard(morphism.apply(X), data2, degree_bound)
        report.samples.append({
            "element": str(X),
            "source_status": v1.status,
            "target_status": v2.status,
            "consistent": v1.is_member == v2.is_member,
        })
    return report
