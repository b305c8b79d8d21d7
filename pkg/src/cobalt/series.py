"""Truncated power series in one variable with polynomial coefficients.

A TruncSeries holds coefficients 0..N over a Ring; everything past x^N
is discarded.  The series variable is treated as an Adams degree -1
class, so a series f with coeff(x^k) homogeneous of degree k - 1 is a
well-graded transformation of such classes (logarithms, exponentials,
orientation changes all fit this pattern).

Composition requires the inner series to vanish at 0, multiplicative
inversion requires a unit constant term, and reversion requires zero
constant term plus a unit linear term; violations raise the dedicated
errors rather than producing garbage.
"""

from fractions import Fraction

from .errors import (
    BadLeadingCoefficient,
    InputError,
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotQAlgebra,
)
from .rings import Polynomial


class TruncSeries:
    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order, coeffs=None):
        if order < 0:
            raise InputError("truncation order must be >= 0")
        self.ring = ring
        self.order = order
        clean = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(k, int) or k < 0:
                raise InputError("series exponents must be nonnegative ints")
            if k > order:
                continue
            if not isinstance(c, Polynomial):
                c = ring.const(c)
            elif c.ring is not ring:
                raise InputError("coefficient from a different ring")
            if not c.is_zero():
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def variable(cls, ring, order):
        return cls(ring, order, {1: ring.one()})

    def coeff(self, k):
        return self.coeffs.get(k, self.ring.zero())

    def truncate(self, order):
        return TruncSeries(self.ring, min(order, self.order), self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            if other.ring is not self.ring:
                raise InputError("mixed-ring series arithmetic")
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncSeries(self.ring, self.order, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, self.ring.zero()) + c
        return TruncSeries(self.ring, order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.ring, self.order,
                           {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncSeries(self.ring, self.order,
                               {k: c * other for k, c in self.coeffs.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j > order:
                    continue
                k = i + j
                prod = a * b
                out[k] = out.get(k, self.ring.zero()) + prod
        return TruncSeries(self.ring, order, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("series powers must be nonnegative integers")
        result = TruncSeries(self.ring, self.order, {0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.ring is other.ring and self.order == other.order
                and self.coeffs == other.coeffs)

    def is_zero(self):
        return not self.coeffs

    # -- composition and inverses -------------------------------------------

    def compose(self, inner):
        """self(inner(x)); the inner series must have zero constant term."""
        if inner.ring is not self.ring:
            raise InputError("mixed-ring composition")
        if not inner.coeff(0).is_zero():
            raise NonzeroConstantInner(
                "inner series has nonzero constant term")
        order = min(self.order, inner.order)
        result = TruncSeries(self.ring, order, {0: self.coeff(0)})
        power = TruncSeries(self.ring, order, {0: 1})
        for k in range(1, order + 1):
            power = power * inner
            c = self.coeff(k)
            if not c.is_zero():
                result = result + power * c
        return result

    def _constant_unit_inverse(self, c, error):
        """1/c for a constant polynomial unit, or raise `error`."""
        val = c.constant_term()
        if val == 0 or c != self.ring.const(val):
            raise error
        if self.ring.base == "Z":
            if val not in (1, -1):
                raise error
            return self.ring.const(val)
        return self.ring.const(Fraction(1) / val)

    def invert(self):
        """Multiplicative inverse; constant term must be a unit constant."""
        inv0 = self._constant_unit_inverse(
            self.coeff(0),
            NonUnitConstantTerm("series constant term is not a unit"))
        out = {0: inv0}
        for k in range(1, self.order + 1):
            acc = self.ring.zero()
            for j in range(1, k + 1):
                cj = self.coeff(j)
                if not cj.is_zero() and (k - j) in out:
                    acc = acc + cj * out[k - j]
            term = -(acc * inv0)
            if not term.is_zero():
                out[k] = term
        return TruncSeries(self.ring, self.order, out)

    def revert(self):
        """Compositional inverse g with self(g(x)) = x up to the order."""
        if not self.coeff(0).is_zero():
            raise BadLeadingCoefficient(
                "reversion needs zero constant term")
        inv1 = self._constant_unit_inverse(
            self.coeff(1),
            BadLeadingCoefficient("linear coefficient is not a unit"))
        order = self.order
        g = {1: inv1}
        for k in range(2, order + 1):
            partial = TruncSeries(self.ring, k, g)
            value = self.truncate(k).compose(partial)
            residue = value.coeff(k)
            if not residue.is_zero():
                g[k] = -(residue * inv1)
        return TruncSeries(self.ring, order, g)

    def derivative(self):
        return TruncSeries(self.ring, max(self.order - 1, 0),
                           {k - 1: c * k for k, c in self.coeffs.items()
                            if k >= 1})

    def integrate(self):
        """Termwise antiderivative with zero constant; rational base only."""
        if self.ring.base != "Q":
            raise NotQAlgebra("integration divides by integers; base must be Q")
        return TruncSeries(self.ring, self.order + 1,
                           {k + 1: c * Fraction(1, k + 1)
                            for k, c in self.coeffs.items()})

    def is_strict(self):
        """Zero constant term and linear coefficient exactly 1."""
        return self.coeff(0).is_zero() and self.coeff(1) == self.ring.one()

    def is_homogeneous(self, series_degree=-1):
        """Each coeff(x^k) homogeneous of degree series_degree + k.

        With the variable in Adams degree -1 this says the whole series
        transforms as a class of the given degree.
        """
        for k, c in self.coeffs.items():
            d = c.adams_degree()
            if d is not None and d != series_degree + k:
                return False
        return True

    def __str__(self):
        if not self.coeffs:
            return f"O(x^{self.order + 1})"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            cs = str(c)
            if k == 0:
                parts.append(cs)
                continue
            var = "x" if k == 1 else f"x^{k}"
            if cs == "1":
                parts.append(var)
            elif cs == "-1":
                parts.append(f"-{var}")
            elif " " in cs:
                parts.append(f"({cs})*{var}")
            else:
                parts.append(f"{cs}*{var}")
        return " + ".join(parts) + f" + O(x^{self.order + 1})"

    __repr__ = __str__
