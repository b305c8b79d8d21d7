"""Formal group laws with exact coefficient arithmetic.

A FormalGroupLaw wraps a bivariate series F(x, y) = x + y + sum a_ij
x^i y^j with coefficients in a Ring.  Polynomial laws (additive,
multiplicative) are exact: every coefficient beyond their support is
genuinely zero, so they can be evaluated to any order.  Laws built from
truncated data carry their order and refuse questions beyond it.

The grading convention puts a_ij in Adams degree i + j - 1, matching
series variables of degree -1.

Logarithms go through the invariant differential: l'(x) is the
reciprocal of dF/dy at (x, 0), integrated termwise, which needs a Q
base.  The p-series is the p-fold formal sum; its coefficient at
x^(p^n) is the height-n generator, with v_0 = p.
"""

from fractions import Fraction
from math import factorial

from .errors import (
    InputError,
    MissingBeta,
    NotQAlgebra,
    TruncationTooSmall,
)
from .rings import Polynomial, polynomial_ring
from .series import TruncSeries


class _MSeries:
    """Truncated multivariate series with Polynomial coefficients."""

    __slots__ = ("ring", "nvars", "order", "coeffs")

    def __init__(self, ring, nvars, order, coeffs=None):
        self.ring = ring
        self.nvars = nvars
        self.order = order
        clean = {}
        for exps, c in (coeffs or {}).items():
            if sum(exps) > order:
                continue
            if not isinstance(c, Polynomial):
                c = ring.const(c)
            if not c.is_zero():
                clean[tuple(exps)] = c
        self.coeffs = clean

    @classmethod
    def variable(cls, ring, nvars, order, which):
        exps = [0] * nvars
        exps[which] = 1
        return cls(ring, nvars, order, {tuple(exps): 1})

    def coeff(self, exps):
        return self.coeffs.get(tuple(exps), self.ring.zero())

    def _binop(self, other, f):
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = f(out.get(exps, self.ring.zero()), c)
        return _MSeries(self.ring, self.nvars,
                        min(self.order, other.order), out)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return _MSeries(self.ring, self.nvars, self.order,
                        {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return _MSeries(self.ring, self.nvars, self.order,
                            {e: c * other for e, c in self.coeffs.items()})
        order = min(self.order, other.order)
        out = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                if sum(exps) > order:
                    continue
                key = exps
                prev = out.get(key)
                out[key] = ca * cb if prev is None else prev + ca * cb
        return _MSeries(self.ring, self.nvars, order, out)

    __rmul__ = __mul__

    def subst(self, args):
        """Evaluate at args, a list of zero-constant _MSeries."""
        if len(args) != self.nvars:
            raise InputError("wrong number of substitution arguments")
        for g in args:
            if not g.coeff((0,) * g.nvars).is_zero():
                raise InputError("substitution needs zero constant terms")
        nvars = args[0].nvars
        order = min([self.order] + [g.order for g in args])
        one = _MSeries(self.ring, nvars, order, {(0,) * nvars: 1})
        powers = [{0: one} for _ in args]

        def power(t, k):
            cache = powers[t]
            if k not in cache:
                cache[k] = power(t, k - 1) * args[t]
            return cache[k]

        total = _MSeries(self.ring, nvars, order, {})
        for exps, c in sorted(self.coeffs.items()):
            if sum(exps) > order:
                continue
            term = one
            for t, e in enumerate(exps):
                if e:
                    term = term * power(t, e)
            total = total + term * c
        return total

    def __eq__(self, other):
        return (isinstance(other, _MSeries) and self.nvars == other.nvars
                and self.order == other.order and self.coeffs == other.coeffs)

    def truncate(self, order):
        return _MSeries(self.ring, self.nvars, min(order, self.order),
                        self.coeffs)


def _from_univariate(f, nvars, which, order):
    coeffs = {}
    for k, c in f.coeffs.items():
        exps = [0] * nvars
        exps[which] = k
        coeffs[tuple(exps)] = c
    return _MSeries(f.ring, nvars, order, coeffs)


def _to_univariate(g, order):
    coeffs = {}
    for exps, c in g.coeffs.items():
        live = [(t, e) for t, e in enumerate(exps) if e]
        if len(live) > 1:
            raise InputError("series is not univariate")
        coeffs[sum(exps)] = c
    return TruncSeries(g.ring, order, coeffs)


class FormalGroupLaw:
    """F(x, y) over a Ring; `exact` means the series is a polynomial."""

    def __init__(self, ring, series, order, exact=False):
        self.ring = ring
        self.series = series.truncate(order)
        self.order = order
        self.exact = exact

    def coefficient(self, i, j):
        if not self.exact and i + j > self.order:
            raise TruncationTooSmall(
                f"law is only known to total degree {self.order}")
        return self.series.coeff((i, j))

    def _at_order(self, order):
        """The bivariate series at the requested order, or complain."""
        if order <= self.order:
            return self.series.truncate(order)
        if not self.exact:
            raise TruncationTooSmall(
                f"need total degree {order}, law stops at {self.order}")
        return _MSeries(self.ring, 2, order, self.series.coeffs)

    def formal_sum(self, u, v):
        """u +_F v for univariate TruncSeries with zero constant term."""
        if u.ring is not self.ring or v.ring is not self.ring:
            raise InputError("operands live over a different ring")
        order = min(u.order, v.order)
        g = self._at_order(order).subst([_from_univariate(u, 1, 0, order),
                                         _from_univariate(v, 1, 0, order)])
        return _to_univariate(g, order)

    def __repr__(self):
        kind = "exact" if self.exact else f"order {self.order}"
        return f"FormalGroupLaw({kind} over {self.ring.base})"


def fgl_additive(ring, order=8):
    x = _MSeries.variable(ring, 2, order, 0)
    y = _MSeries.variable(ring, 2, order, 1)
    return FormalGroupLaw(ring, x + y, order, exact=True)


def fgl_multiplicative(ring, order=8, beta=None):
    """x + y - beta * x * y; beta defaults to the generator named beta."""
    if beta is None:
        if "beta" not in ring.index:
            raise MissingBeta("no beta element available for this ring")
        beta = ring.gen("beta")
    elif not isinstance(beta, Polynomial):
        beta = ring.const(beta)
    x = _MSeries.variable(ring, 2, order, 0)
    y = _MSeries.variable(ring, 2, order, 1)
    return FormalGroupLaw(ring, x + y - (x * y) * beta, order, exact=True)


def universal_log_ring(order):
    """Q[m1..m_{order-1}] with deg m_i = i."""
    return polynomial_ring(
        "Q", [(f"m{i}", i) for i in range(1, order)])


def universal_log(ring, order):
    """x + m1 x^2 + m2 x^3 + ... as far as the ring provides."""
    coeffs = {1: ring.one()}
    for i in range(1, order):
        name = f"m{i}"
        if name in ring.index:
            coeffs[i + 1] = ring.gen(name)
    return TruncSeries(ring, order, coeffs)


def fgl_from_log(log):
    """exp(log x + log y) where exp is the compositional inverse."""
    ring = log.ring
    if ring.base != "Q":
        raise NotQAlgebra("building a law from its logarithm needs base Q")
    order = log.order
    exp = log.revert()
    inner = _from_univariate(log, 2, 0, order) \
        + _from_univariate(log, 2, 1, order)
    series = _compose_outer(exp, inner, order)
    return FormalGroupLaw(ring, series, order, exact=False)


def fgl_universal_rational(order=8):
    """The rational universal law on Q[m1..m_{order-1}]."""
    ring = universal_log_ring(order)
    return fgl_from_log(universal_log(ring, order))


def fgl_check_axioms(f, order=None, graded=True):
    """Unit, commutativity, associativity, and gradedness to an order.

    For exact (polynomial) laws associativity is a polynomial identity:
    checking at twice the support degree is conclusive.  Returns a dict
    of named booleans plus "ok".
    """
    if order is None:
        if f.exact:
            support = max((i + j for (i, j) in f.series.coeffs), default=1)
            order = support * support
        else:
            order = f.order
    series = f._at_order(order)

    unit = True
    for (i, j), c in series.coeffs.items():
        if j == 0 and (i, j) != (1, 0) and not c.is_zero():
            unit = False
        if i == 0 and (i, j) != (0, 1) and not c.is_zero():
            unit = False
    unit = unit and series.coeff((1, 0)) == f.ring.one() \
        and series.coeff((0, 1)) == f.ring.one()

    commutative = all(series.coeff((j, i)) == c
                      for (i, j), c in series.coeffs.items())

    x = _MSeries.variable(f.ring, 3, order, 0)
    y = _MSeries.variable(f.ring, 3, order, 1)
    z = _MSeries.variable(f.ring, 3, order, 2)
    fxy = series.subst([x, y])
    fyz = series.subst([y, z])
    left = series.subst([fxy, z])
    right = series.subst([x, fyz])
    associative = left == right

    result = {"unit": unit, "commutative": commutative,
              "associative": associative}
    if graded:
        good = True
        for (i, j), c in series.coeffs.items():
            want = i + j - 1
            try:
                deg = c.adams_degree()
            except InputError:
                good = False
                break
            if deg is not None and deg != want:
                good = False
                break
        result["graded"] = good
    result["ok"] = all(v for k, v in result.items() if k != "ok")
    return result


def strict_iso_check(phi):
    if not phi.is_strict():
        raise InputError(
            "coordinate changes must start x + (higher order)")


def pushforward(f, phi):
    """The law phi(F(phi^{-1} x, phi^{-1} y)); phi is a strict iso out of F."""
    strict_iso_check(phi)
    order = min(phi.order, f.order) if not f.exact else phi.order
    inv = phi.revert()
    series = f._at_order(order)
    inner = series.subst([_from_univariate(inv, 2, 0, order),
                          _from_univariate(inv, 2, 1, order)])
    outer = _compose_outer(phi, inner, order)
    return FormalGroupLaw(f.ring, outer, order, exact=False)


def is_pushforward(f, g, phi, order=None):
    """Does phi carry f to g, i.e. phi(F(x, y)) = G(phi x, phi y)?"""
    strict_iso_check(phi)
    if order is None:
        order = min([phi.order]
                    + ([] if f.exact else [f.order])
                    + ([] if g.exact else [g.order]))
    fs = f._at_order(order)
    gs = g._at_order(order)
    left = _compose_outer(phi, fs, order)
    right = gs.subst([_from_univariate(phi, 2, 0, order),
                      _from_univariate(phi, 2, 1, order)])
    return left == right


def _compose_outer(phi, inner, order):
    """phi(inner) for univariate phi and multivariate inner."""
    ring = phi.ring
    nvars = inner.nvars
    out = _MSeries(ring, nvars, order, {})
    one = _MSeries(ring, nvars, order, {(0,) * nvars: 1})
    powers = {0: one}
    for k in sorted(phi.coeffs):
        if k == 0:
            continue
        while max(powers) < k:
            powers[max(powers) + 1] = powers[max(powers)] * inner
        out = out + powers[k] * phi.coeffs[k]
    return out


def chern_reparam(ring, order, beta=None):
    """(1 - e^{-beta x}) / beta = sum (-beta)^(k-1) x^k / k!."""
    if ring.base != "Q":
        raise NotQAlgebra("this reparametrization needs base Q")
    if beta is None:
        if "beta" not in ring.index:
            raise MissingBeta("no beta element available for this ring")
        beta = ring.gen("beta")
    elif not isinstance(beta, Polynomial):
        beta = ring.const(beta)
    coeffs = {}
    power = ring.one()
    for k in range(1, order + 1):
        coeffs[k] = power * Fraction((-1) ** (k - 1), factorial(k))
        power = power * beta
    return TruncSeries(ring, order, coeffs)


def fgl_log(f, order=None):
    """Logarithm via the invariant differential; base must be Q.

    l'(x) is the inverse of dF/dy at (x, 0); the constant of
    integration is zero, so l(x) = x + O(x^2).
    """
    if f.ring.base != "Q":
        raise NotQAlgebra("logarithms need base Q")
    if order is None:
        order = f.order
    series = f._at_order(order)
    partial = {}
    for (i, j), c in series.coeffs.items():
        if j == 1:
            partial[i] = c
    fy = TruncSeries(f.ring, order - 1,
                     {i: c for i, c in partial.items() if i <= order - 1})
    derivative = fy.invert()
    return derivative.integrate().truncate(order)


def p_series(f, p, order):
    """The p-fold formal sum [p](x) to the given order."""
    if p < 1:
        raise InputError("p must be a positive integer")
    if not f.exact and order > f.order:
        raise TruncationTooSmall(
            f"p-series to degree {order} needs the law to degree {order}")
    x = TruncSeries.variable(f.ring, order)
    result = TruncSeries(f.ring, order, {})
    for _ in range(p):
        result = f.formal_sum(result, x) if result.coeffs else x
    return result


def landweber_generators(f, p, count):
    """[v_0, .., v_count]: v_0 = p, v_n = coeff of x^(p^n) in [p](x)."""
    if count < 0:
        raise InputError("count must be nonnegative")
    need = p ** count if count else 1
    if not f.exact and need > f.order:
        raise TruncationTooSmall(
            f"extracting v_{count} at p={p} needs truncation {need}, "
            f"law stops at {f.order}")
    gens = [f.ring.const(p)]
    if count:
        series = p_series(f, p, need)
        for n in range(1, count + 1):
            gens.append(series.coeff(p ** n))
    return gens
