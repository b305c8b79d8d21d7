"""Truncated rational Hopf algebroids of formal group data.

The universal object pairs A = Q[m1..m_{N-1}] (log coefficients) with
Gamma = Q[m, b] (log coefficients plus a strict coordinate change
b(x) = x + b1 x^2 + ...).  Convention pinned here and throughout the
tests: b carries the right-unit law to the left-unit law on logs,
log_L = log_R o b, which determines eta_R degree by degree.  The
opposite convention is reached by substituting the inverse series
for b.

Tensor squares Gamma (x)_A Gamma are presented as free rings: the
right copy of each m_i is eliminated against eta_R of the left copy,
leaving generators m, bL, bR (and bM for the triple).  Comultiplication
is series composition of the two b-copies; the conjugation inverts b
and swaps the units.  Axioms are verified as identities between
polynomials, never at sample points.
"""

from .errors import AxiomsFail, IllFormed, InputError
from .fgl import FormalGroupLaw, fgl_check_axioms, pushforward, universal_log
from .rings import GenSpec, Ring, polynomial_ring
from .series import TruncSeries
from .tables import partition_count
from . import snf


class TensorSquare:
    """Gamma (x)_A Gamma with generator bookkeeping.

    origin maps each tensor-ring generator to ("L"|"R", gamma_gen);
    left/right give the two factor embeddings Gamma -> tensor ring as
    generator assignments.
    """

    def __init__(self, ring, origin, left, right):
        self.ring = ring
        self.origin = origin
        self.left = left
        self.right = right


class TensorCube:
    """The triple tensor ring with the two pushes of the square into it.

    push12 embeds the square as factors (1,2); push23 as factors (2,3).
    Both are generator assignments out of the square's ring.
    """

    def __init__(self, ring, push12, push23):
        self.ring = ring
        self.push12 = push12
        self.push23 = push23


class HopfAlgebroidPresentation:
    """(A, Gamma) with units, counit, and optional comult/conjugation."""

    def __init__(self, A, Gamma, eta_L, eta_R, counit, N,
                 square=None, comult=None, cube=None, conjugation=None):
        self.A = A
        self.Gamma = Gamma
        self.eta_L = eta_L
        self.eta_R = eta_R
        self.counit = counit
        self.N = N
        self.square = square
        self.comult = comult
        self.cube = cube
        self.conjugation = conjugation

    def a_generators(self):
        return [g.name for g in self.A.gens]

    def gamma_generators(self):
        return [g.name for g in self.Gamma.gens]


def _b_series(ring, prefix, order):
    """x + sum_{i} <prefix>{i} x^{i+1} over whichever names exist."""
    coeffs = {1: ring.one()}
    for i in range(1, order):
        name = f"{prefix}{i}"
        if name in ring.index:
            coeffs[i + 1] = ring.gen(name)
    return TruncSeries(ring, order, coeffs)


def mumu_rational_truncated(N):
    """The truncated rational universal Hopf algebroid at order N."""
    if not isinstance(N, int) or N < 2:
        raise InputError("need a truncation order N >= 2")
    m_specs = [(f"m{i}", i) for i in range(1, N)]
    A = polynomial_ring("Q", m_specs)
    Gamma = polynomial_ring(
        "Q", m_specs + [(f"b{i}", i) for i in range(1, N)])

    # solve log_L = log_R o b for the right unit, degree by degree
    b = _b_series(Gamma, "b", N)
    acc = b
    powers = b
    eta_R = {}
    for k in range(1, N):
        powers = (powers * b).truncate(N)  # b^{k+1}
        r_k = Gamma.gen(f"m{k}") - acc.coeff(k + 1)
        eta_R[f"m{k}"] = r_k
        acc = acc + powers * r_k
    if acc != universal_log(Gamma, N):
        raise IllFormed("right unit solve did not reproduce the log")

    eta_L = {f"m{i}": Gamma.gen(f"m{i}") for i in range(1, N)}
    counit = {f"m{i}": A.gen(f"m{i}") for i in range(1, N)}
    counit.update({f"b{i}": A.zero() for i in range(1, N)})

    # tensor square: free on m, bL, bR; the right-copy m is eliminated
    T2 = polynomial_ring(
        "Q", m_specs + [(f"bL{i}", i) for i in range(1, N)]
        + [(f"bR{i}", i) for i in range(1, N)])
    origin = {}
    left = {}
    right = {}
    m_to_t2 = {f"m{i}": T2.gen(f"m{i}") for i in range(1, N)}
    b_to_bL = {f"b{i}": T2.gen(f"bL{i}") for i in range(1, N)}
    for i in range(1, N):
        origin[f"m{i}"] = ("L", f"m{i}")
        origin[f"bL{i}"] = ("L", f"b{i}")
        origin[f"bR{i}"] = ("R", f"b{i}")
        left[f"m{i}"] = T2.gen(f"m{i}")
        left[f"b{i}"] = T2.gen(f"bL{i}")
        right[f"m{i}"] = eta_R[f"m{i}"].map_to(T2, {**m_to_t2, **b_to_bL})
        right[f"b{i}"] = T2.gen(f"bR{i}")
    square = TensorSquare(T2, origin, left, right)

    # comultiplication: compose the two copies of b
    bL = _b_series(T2, "bL", N)
    bR = _b_series(T2, "bR", N)
    composite = bR.compose(bL)
    comult = {f"m{i}": T2.gen(f"m{i}") for i in range(1, N)}
    comult.update({f"b{i}": composite.coeff(i + 1) for i in range(1, N)})

    # triple tensor ring for coassociativity
    T3 = polynomial_ring(
        "Q", m_specs + [(f"bL{i}", i) for i in range(1, N)]
        + [(f"bM{i}", i) for i in range(1, N)]
        + [(f"bR{i}", i) for i in range(1, N)])
    push12 = {f"m{i}": T3.gen(f"m{i}") for i in range(1, N)}
    push12.update({f"bL{i}": T3.gen(f"bL{i}") for i in range(1, N)})
    push12.update({f"bR{i}": T3.gen(f"bM{i}") for i in range(1, N)})
    m_to_t3 = {f"m{i}": T3.gen(f"m{i}") for i in range(1, N)}
    b_to_bL3 = {f"b{i}": T3.gen(f"bL{i}") for i in range(1, N)}
    push23 = {f"m{i}": eta_R[f"m{i}"].map_to(T3, {**m_to_t3, **b_to_bL3})
              for i in range(1, N)}
    push23.update({f"bL{i}": T3.gen(f"bM{i}") for i in range(1, N)})
    push23.update({f"bR{i}": T3.gen(f"bR{i}") for i in range(1, N)})
    cube = TensorCube(T3, push12, push23)

    # conjugation: invert the coordinate change, swap the units
    b_inverse = b.revert()
    conjugation = {f"m{i}": eta_R[f"m{i}"] for i in range(1, N)}
    conjugation.update(
        {f"b{i}": b_inverse.coeff(i + 1) for i in range(1, N)})

    return HopfAlgebroidPresentation(
        A, Gamma, eta_L, eta_R, counit, N,
        square=square, comult=comult, cube=cube, conjugation=conjugation)


def trivial_hopf_algebroid(specs=(("t", 1),), N=4):
    """Gamma = A with every structure map the identity."""
    A = polynomial_ring("Q", list(specs))
    names = [g.name for g in A.gens]
    identity = {name: A.gen(name) for name in names}
    square = TensorSquare(
        A, {name: ("L", name) for name in names}, dict(identity),
        dict(identity))
    cube = TensorCube(A, dict(identity), dict(identity))
    return HopfAlgebroidPresentation(
        A, A, dict(identity), dict(identity), dict(identity), N,
        square=square, comult=dict(identity), cube=cube,
        conjugation=dict(identity))


class AxiomCheck:
    __slots__ = ("name", "ok", "witnesses")

    def __init__(self, name, ok, witnesses):
        self.name = name
        self.ok = ok
        self.witnesses = witnesses  # [(generator, degree)]

    def to_dict(self):
        out = {"name": self.name, "pass": self.ok}
        if self.witnesses:
            out["witnesses"] = [
                {"generator": g, "degree": deg} for g, deg in self.witnesses]
        return out


class HopfAxiomReport:
    def __init__(self, checks):
        self.checks = checks

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def to_dict(self):
        return {"pass": self.ok,
                "checks": [c.to_dict() for c in self.checks]}

    def __repr__(self):
        verdict = "pass" if self.ok else "FAIL"
        return f"HopfAxiomReport({verdict}, {len(self.checks)} checks)"


def _gen_degree(ring, name):
    return ring.gens[ring.index[name]].adams_degree


def verify_hopf_axioms(H, N=None):
    """Check the algebroid axioms as polynomial identities up to N."""
    if N is None:
        N = H.N
    checks = []

    def a_gens():
        return [g for g in H.a_generators() if _gen_degree(H.A, g) <= N]

    def gamma_gens():
        return [g for g in H.gamma_generators()
                if _gen_degree(H.Gamma, g) <= N]

    def record(name, failures):
        checks.append(AxiomCheck(name, not failures, failures))

    # counit against the units: eps o eta = id on A
    for label, eta in (("counit_left_unit", H.eta_L),
                       ("counit_right_unit", H.eta_R)):
        bad = []
        for g in a_gens():
            if eta[g].map_to(H.A, H.counit) != H.A.gen(g):
                bad.append((g, _gen_degree(H.A, g)))
        record(label, bad)

    if H.square is not None and H.comult is not None:
        T2 = H.square.ring
        # (eps (x) 1) Delta = id and (1 (x) eps) Delta = id
        eps1 = {}
        eps2 = {}
        for t2g, (side, gg) in H.square.origin.items():
            if side == "L":
                eps1[t2g] = H.counit[gg].map_to(H.Gamma, H.eta_L)
                eps2[t2g] = H.Gamma.gen(gg)
            else:
                eps1[t2g] = H.Gamma.gen(gg)
                eps2[t2g] = H.counit[gg].map_to(H.Gamma, H.eta_R)
        for label, assignment in (("left_counit_law", eps1),
                                  ("right_counit_law", eps2)):
            bad = []
            for g in gamma_gens():
                if H.comult[g].map_to(H.Gamma, assignment) != H.Gamma.gen(g):
                    bad.append((g, _gen_degree(H.Gamma, g)))
            record(label, bad)

        # units are grouplike: Delta o eta = factor embedding o eta
        bad_l, bad_r = [], []
        for g in a_gens():
            if H.eta_L[g].map_to(T2, H.comult) != \
                    H.eta_L[g].map_to(T2, H.square.left):
                bad_l.append((g, _gen_degree(H.A, g)))
            if H.eta_R[g].map_to(T2, H.comult) != \
                    H.eta_R[g].map_to(T2, H.square.right):
                bad_r.append((g, _gen_degree(H.A, g)))
        record("left_unit_compatibility", bad_l)
        record("right_unit_compatibility", bad_r)

        if H.cube is not None:
            T3 = H.cube.ring
            d1 = {}
            d2 = {}
            for t2g, (side, gg) in H.square.origin.items():
                if side == "L":
                    d1[t2g] = H.comult[gg].map_to(T3, H.cube.push12)
                    d2[t2g] = H.cube.push12[t2g]
                else:
                    d1[t2g] = H.cube.push23[t2g]
                    d2[t2g] = H.comult[gg].map_to(T3, H.cube.push23)
            bad = []
            for g in gamma_gens():
                lhs = H.comult[g].map_to(T3, d1)
                rhs = H.comult[g].map_to(T3, d2)
                if lhs != rhs:
                    bad.append((g, _gen_degree(H.Gamma, g)))
            record("coassociativity", bad)

    if H.conjugation is not None:
        bad = []
        for g in gamma_gens():
            if H.conjugation[g].map_to(H.Gamma, H.conjugation) != \
                    H.Gamma.gen(g):
                bad.append((g, _gen_degree(H.Gamma, g)))
        record("conjugation_involution", bad)
        bad_l, bad_r = [], []
        for g in a_gens():
            if H.eta_L[g].map_to(H.Gamma, H.conjugation) != H.eta_R[g]:
                bad_l.append((g, _gen_degree(H.A, g)))
            if H.eta_R[g].map_to(H.Gamma, H.conjugation) != H.eta_L[g]:
                bad_r.append((g, _gen_degree(H.A, g)))
        record("conjugation_swaps_left_unit", bad_l)
        record("conjugation_swaps_right_unit", bad_r)

    return HopfAxiomReport(checks)


# -- induced Hopf algebroids over a Landweber-style algebra ----------------


def _user_specs(ring):
    """The explicitly declared generators, minus implicit inverses."""
    out = []
    for i, spec in enumerate(ring.gens):
        partner = ring.inverse_partner.get(i)
        if partner is not None and partner < i:
            continue  # implicit inverse, recreated by the new ring
        out.append(spec)
    return out


def _transport_law(law, target, images, order):
    """The same law with coefficients pushed through a ring map."""
    src = law._at_order(order)
    coeffs = {e: c.map_to(target, images) for e, c in src.coeffs.items()}
    series = type(src)(target, 2, order, coeffs)
    return FormalGroupLaw(target, series, order, exact=law.exact)


class InducedHopf:
    """A two-sided copy of an algebra joined by a strict isomorphism."""

    def __init__(self, base_ring, law, ring, eta_L, eta_R, counit,
                 relation_sources, N):
        self.base_ring = base_ring
        self.law = law
        self.ring = ring
        self.eta_L = eta_L
        self.eta_R = eta_R
        self.counit = counit
        self.relation_sources = relation_sources  # [(i, j, poly)]
        self.relations = [poly for _, _, poly in relation_sources]
        self.N = N
        self.presentation = HopfAlgebroidPresentation(
            base_ring, ring, eta_L, eta_R, counit, N)

    def collapse_identifies_units(self, exponent_bound=None):
        """Do the two units agree modulo (relations) + (all b_i)?

        Checked per generator by rational span membership among bounded
        multiples of the ideal generators.  The bound can only hide a
        witness combination, never invent one, so a positive answer is
        exact.
        """
        ideal = list(self.relations)
        for i in range(1, self.N):
            name = f"b{i}"
            if name in self.ring.index:
                ideal.append(self.ring.gen(name))
        for gname, image_l in self.eta_L.items():
            delta = image_l - self.eta_R[gname]
            if delta.is_zero():
                continue
            degree = delta.adams_degree()
            bound = exponent_bound if exponent_bound is not None \
                else abs(degree) + 2
            multiples = []
            for h in ideal:
                hdeg = h.adams_degree()
                if hdeg is None:
                    continue
                mons, _ = self.ring.monomials_of_degree(degree - hdeg, bound)
                for mu in mons:
                    multiples.append(h * type(h)(self.ring, {mu: 1}))
            carrier = sorted(set(delta.terms)
                             | {e for p in multiples for e in p.terms})
            position = {m: i for i, m in enumerate(carrier)}
            columns = [self._vector(p, position) for p in multiples]
            target = self._vector(delta, position)
            if not snf.rational_in_span(columns, target):
                return False
        return True

    def _vector(self, poly, position):
        vec = [0] * len(position)
        for exps, c in poly.terms.items():
            vec[position[exps]] = c
        return vec

    def to_dict(self):
        return {
            "truncation": self.N,
            "generators": [
                {"name": g.name, "adams_degree": g.adams_degree}
                for g in _user_specs(self.ring)],
            "left_unit": {k: str(v) for k, v in sorted(self.eta_L.items())},
            "right_unit": {k: str(v) for k, v in sorted(self.eta_R.items())},
            "relations": sorted(str(r) for r in self.relations),
        }


def induced_hopf(A_pres, law, N):
    """Join two copies of an algebra along the universal strict iso.

    The result ring has left and right copies of every generator plus
    b_1..b_{N-1}; its relations say the pushforward of the left law
    along b equals the right law coefficientwise up to order N.
    """
    if not isinstance(N, int) or N < 2:
        raise InputError("need a truncation order N >= 2")
    if law.ring is not A_pres:
        raise InputError("the law must live over the given algebra")
    axioms = fgl_check_axioms(law)
    if not axioms["ok"]:
        raise AxiomsFail("the law fails the group-law axioms")

    specs = _user_specs(A_pres)
    gens = [GenSpec(f"{s.name}_L", s.adams_degree, s.invertible)
            for s in specs]
    gens += [GenSpec(f"b{i}", i) for i in range(1, N)]
    gens += [GenSpec(f"{s.name}_R", s.adams_degree, s.invertible)
             for s in specs]
    big = Ring(A_pres.base, gens, localized_at=A_pres.localized_at)

    to_left = {}
    to_right = {}
    for s in specs:
        to_left[s.name] = big.gen(f"{s.name}_L")
        to_right[s.name] = big.gen(f"{s.name}_R")
        if s.invertible:
            to_left[f"{s.name}_inv"] = big.gen(f"{s.name}_L_inv")
            to_right[f"{s.name}_inv"] = big.gen(f"{s.name}_R_inv")

    for rel in A_pres.relations:
        big.impose(rel.map_to(big, to_left))
        big.impose(rel.map_to(big, to_right))

    law_left = _transport_law(law, big, to_left, N)
    law_right = _transport_law(law, big, to_right, N)
    b = _b_series(big, "b", N)
    pushed = pushforward(law_left, b)

    relation_sources = []
    for i in range(1, N):
        for j in range(i, N):
            if i + j > N:
                continue
            delta = pushed.coefficient(i, j) - law_right.coefficient(i, j)
            if not delta.is_zero():
                relation_sources.append((i, j, delta))
                big.impose(delta)

    eta_L = {s.name: big.gen(f"{s.name}_L") for s in specs}
    eta_R = {s.name: big.gen(f"{s.name}_R") for s in specs}
    counit = {f"{s.name}_L": A_pres.gen(s.name) for s in specs}
    counit.update({f"{s.name}_R": A_pres.gen(s.name) for s in specs})
    counit.update({f"b{i}": A_pres.zero() for i in range(1, N)})

    return InducedHopf(A_pres, law, big, eta_L, eta_R, counit,
                       relation_sources, N)


def cooperations_poincare(N):
    """Graded dimensions of Q[m1,..][b1,..] up to degree N.

    Counted two ways: direct monomial enumeration, and the
    self-convolution of partition counts; any disagreement raises.
    """
    if N < 0:
        raise InputError("need N >= 0")
    specs = [(f"m{i}", i) for i in range(1, N + 1)]
    specs += [(f"b{i}", i) for i in range(1, N + 1)]
    ring = polynomial_ring("Q", specs)
    dims = []
    for k in range(N + 1):
        monomials, truncated = ring.monomials_of_degree(k, max(k, 1))
        if truncated:
            raise IllFormed("enumeration hit the exponent bound")
        count = len(monomials)
        conv = sum(partition_count(i) * partition_count(k - i)
                   for i in range(k + 1))
        if count != conv:
            raise IllFormed(
                f"degree {k}: enumerated {count}, convolution {conv}")
        dims.append(count)
    return dims
