"""Sparse polynomials over Z or Q and finitely presented graded rings.

A Ring is a presentation: a base (Z or Q), a list of generators with
integer Adams degrees, and a list of homogeneous relation polynomials.
Generators marked invertible get an explicit paired inverse generator
(negated degree) and the relation g * g_inv = 1 is enforced eagerly in
the monomial normal form, so all rewriting stays polynomial.

Monomials are dense exponent tuples indexed by generator position;
polynomials are dicts from exponent tuple to coefficient.  Everything is
immutable in spirit: operations build new values, and a ring is frozen
once its relations are imposed.

Graded components are analyzed degreewise without Groebner bases: the
monomials of one Adams degree are enumerated under an exponent bound,
all relation multiples landing in that degree are assembled into an
integer lattice, and Smith normal form yields rank and torsion.  The
report carries a `truncated` flag whenever the bound may have cut the
enumeration short; when the flag is off the invariants are exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ExpressionSyntaxError,
    InhomogeneousRelation,
    InputError,
    NotQAlgebra,
    UnknownIdentifier,
)
from . import snf


@dataclass(frozen=True)
class GenSpec:
    name: str
    adams_degree: int
    invertible: bool = False


class Ring:
    """A finitely presented commutative ring, graded by Adams degree."""

    def __init__(self, base, gens, localized_at=None):
        if base not in ("Z", "Q"):
            raise InputError(f"base must be 'Z' or 'Q', got {base!r}")
        self.base = base
        self.gens = []
        self.inverse_partner = {}
        self.localized_at = localized_at
        seen = set()
        for spec in gens:
            if not isinstance(spec, GenSpec):
                spec = GenSpec(*spec)
            if spec.name in seen:
                raise InputError(f"duplicate generator name {spec.name!r}")
            seen.add(spec.name)
            self.gens.append(spec)
        expanded = []
        for spec in list(self.gens):
            if spec.invertible:
                inv_name = spec.name + "_inv"
                if inv_name in seen:
                    raise InputError(
                        f"generator name {inv_name!r} collides with the "
                        f"implicit inverse of {spec.name!r}")
                seen.add(inv_name)
                expanded.append(GenSpec(inv_name, -spec.adams_degree))
        base_count = len(self.gens)
        self.gens.extend(expanded)
        inv_index = base_count
        for i, spec in enumerate(self.gens[:base_count]):
            if spec.invertible:
                self.inverse_partner[i] = inv_index
                self.inverse_partner[inv_index] = i
                inv_index += 1
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        self.relations = []

    # -- construction -----------------------------------------------------

    def coerce(self, value):
        if isinstance(value, Fraction):
            if self.base == "Q":
                return value
            if value.denominator == 1:
                return int(value)
            raise NotQAlgebra(
                f"coefficient {value} needs denominators; ring base is Z")
        if isinstance(value, int):
            return Fraction(value) if self.base == "Q" else value
        raise InputError(f"bad coefficient {value!r}")

    def poly(self, terms):
        return Polynomial(self, terms)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        return Polynomial(self, {(0,) * len(self.gens): c})

    def gen(self, name):
        if isinstance(name, int):
            i = name
        else:
            if name not in self.index:
                raise InputError(f"no generator named {name!r}")
            i = self.index[name]
        exps = [0] * len(self.gens)
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def impose(self, *relations):
        """Add relations (polynomials or expression strings); homogeneous only."""
        for rel in relations:
            if isinstance(rel, str):
                rel = parse_expression(rel, self)
            if rel.ring is not self:
                raise InputError("relation belongs to a different ring")
            deg = None
            for exps, _ in rel.terms.items():
                d = self.monomial_degree(exps)
                if deg is None:
                    deg = d
                elif d != deg:
                    raise InhomogeneousRelation(
                        f"relation {rel} mixes degrees {deg} and {d}",
                        term=self._monomial_str(exps))
            self.relations.append(rel)
        return self

    # -- monomials ----------------------------------------------------------

    def monomial_degree(self, exps):
        return sum(e * g.adams_degree for e, g in zip(exps, self.gens))

    def normalize_monomial(self, exps):
        """Cancel g * g_inv pairs; returns a tuple in normal form."""
        if not self.inverse_partner:
            return tuple(exps)
        out = list(exps)
        for i, j in self.inverse_partner.items():
            if i < j and out[i] > 0 and out[j] > 0:
                m = min(out[i], out[j])
                out[i] -= m
                out[j] -= m
        return tuple(out)

    def monomials_of_degree(self, degree, bound):
        """Normal-form monomials of one Adams degree, exponents <= bound.

        Returns (monomials, bound_active): bound_active is True when some
        exponent larger than the bound could have contributed, so the
        listing may be incomplete.  Each invertible pair is enumerated as
        one signed exponent, so only normal forms appear and the
        incompleteness flag accounts for the cancellation.
        """
        n = len(self.gens)
        degs = [g.adams_degree for g in self.gens]
        # slots: a plain generator, or an invertible pair as one signed
        # exponent in -bound..bound
        slots = []
        for i in range(n):
            j = self.inverse_partner.get(i)
            if j is None:
                slots.append((i, None))
            elif j > i:
                slots.append((i, j))
        k = len(slots)
        lo = [0] * (k + 1)
        hi = [0] * (k + 1)
        has_pos = [False] * (k + 1)
        has_neg = [False] * (k + 1)
        for t in range(k - 1, -1, -1):
            i, j = slots[t]
            d = degs[i]
            if j is None:
                slot_lo, slot_hi = min(0, bound * d), max(0, bound * d)
                has_pos[t] = has_pos[t + 1] or d > 0
                has_neg[t] = has_neg[t + 1] or d < 0
            else:
                slot_lo, slot_hi = -bound * abs(d), bound * abs(d)
                has_pos[t] = has_pos[t + 1] or d != 0
                has_neg[t] = has_neg[t + 1] or d != 0
            lo[t] = lo[t + 1] + slot_lo
            hi[t] = hi[t + 1] + slot_hi
        found = []
        active = [False]
        exps = [0] * n

        def overshoot_possible(t, target):
            # could |exponent| > bound in slot t reach the target?
            i, j = slots[t]
            d = degs[i]
            e = bound + 1
            if j is None:
                if d > 0:
                    return target - e * d >= lo[t + 1]
                if d < 0:
                    return target - e * d <= hi[t + 1]
                return lo[t + 1] <= target <= hi[t + 1]
            if d == 0:
                return lo[t + 1] <= target <= hi[t + 1]
            return (target - e * abs(d) >= lo[t + 1]
                    or target + e * abs(d) <= hi[t + 1])

        def rec(t, target):
            if t == k:
                if target == 0:
                    found.append(tuple(exps))
                return
            if target < lo[t] or target > hi[t]:
                if (target > hi[t] and has_pos[t]) or \
                        (target < lo[t] and has_neg[t]):
                    active[0] = True
                return
            if overshoot_possible(t, target):
                active[0] = True
            i, j = slots[t]
            d = degs[i]
            if j is None:
                for e in range(bound, -1, -1):
                    exps[i] = e
                    rec(t + 1, target - e * d)
                exps[i] = 0
            else:
                for e in range(bound, -bound - 1, -1):
                    if e >= 0:
                        exps[i], exps[j] = e, 0
                    else:
                        exps[i], exps[j] = 0, -e
                    rec(t + 1, target - e * d)
                exps[i] = exps[j] = 0

        rec(0, degree)
        found.sort(reverse=True)
        return found, active[0]

    def _monomial_str(self, exps):
        parts = []
        for e, g in zip(exps, self.gens):
            if e == 1:
                parts.append(g.name)
            elif e:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.adams_degree}" for g in self.gens)
        return f"Ring({self.base}[{gens}], {len(self.relations)} relations)"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {}
        for exps, c in terms.items():
            c = ring.coerce(c)
            if c:
                exps = tuple(exps)
                if len(exps) != len(ring.gens):
                    raise InputError("monomial width does not match ring")
                clean[exps] = c
        self.terms = clean

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise InputError("mixed-ring arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            c0 = self.ring.coerce(other)
            return Polynomial(
                self.ring, {e: c * c0 for e, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = ring.normalize_monomial(
                    tuple(x + y for x, y in zip(ea, eb)))
                out[exps] = out.get(exps, 0) + ca * cb
        return Polynomial(ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponents must be nonnegative integers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    # -- structure ------------------------------------------------------------

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring.gens), 0)

    def adams_degree(self):
        """Degree when homogeneous; None for 0; raises when mixed."""
        deg = None
        for exps in self.terms:
            d = self.ring.monomial_degree(exps)
            if deg is None:
                deg = d
            elif d != deg:
                raise InputError(f"{self} is not homogeneous")
        return deg

    def is_homogeneous(self):
        try:
            self.adams_degree()
            return True
        except InputError:
            return False

    def homogeneous_part(self, degree):
        return Polynomial(self.ring, {
            e: c for e, c in self.terms.items()
            if self.ring.monomial_degree(e) == degree})

    def map_to(self, target, images):
        """Apply the ring map sending generator names per `images`.

        images: dict name -> Polynomial over the target ring.  Every
        generator with a nonzero exponent somewhere in this polynomial
        must be covered.  Coefficients move along Z -> Z, Z -> Q, Q -> Q,
        or Q -> Z when no denominators are present.
        """
        out = target.zero()
        for exps, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    name = self.ring.gens[i].name
                    if name not in images:
                        raise InputError(f"no image given for generator {name!r}")
                    term = term * (images[name] ** e)
            out = out + term
        return out

    def sorted_terms(self):
        """Terms in descending graded-lex order (degree, then exponents)."""
        return sorted(
            self.terms.items(),
            key=lambda item: (self.ring.monomial_degree(item[0]), item[0]),
            reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = self.ring._monomial_str(exps)
            if mono == "1":
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            if chunks and not body.startswith("-"):
                chunks.append("+ " + body)
            elif chunks:
                chunks.append("- " + body[1:])
            else:
                chunks.append(body)
        return " ".join(chunks)

    __repr__ = __str__


# -- graded components ----------------------------------------------------------


@dataclass
class GradedComponentReport:
    degree: int
    free_rank: int
    torsion: list
    basis: list = field(default_factory=list)   # exponent tuples, rational span
    truncated: bool = False
    note: str = ""

    def basis_strings(self, ring):
        return [ring._monomial_str(e) for e in self.basis]


def graded_component(ring, degree, exponent_bound=None):
    """Rank, torsion and a monomial basis of one Adams-degree component.

    The exponent bound keeps the enumeration finite; when no monomial or
    relation multiple is cut off by it the invariants are exact and
    `truncated` stays False.  Over a base of Q the torsion list is
    always empty and ranks are dimensions.
    """
    if exponent_bound is None:
        rel_deg = max((abs(r.adams_degree() or 0) for r in ring.relations),
                      default=0)
        exponent_bound = max(1, abs(degree) + rel_deg)
    carrier, truncated = ring.monomials_of_degree(degree, exponent_bound)
    position = {m: i for i, m in enumerate(carrier)}
    rows = []
    for rel in ring.relations:
        rel_degree = rel.adams_degree()
        if rel_degree is None:
            continue
        mults, flag = ring.monomials_of_degree(degree - rel_degree,
                                               exponent_bound)
        truncated = truncated or flag
        for m in mults:
            prod = Polynomial(ring, {m: 1}) * rel
            vec = [0] * len(carrier)
            for exps, c in prod.terms.items():
                if exps not in position:
                    # legitimate monomial the bound had excluded
                    position[exps] = len(carrier)
                    carrier.append(exps)
                    truncated = True
                    for r in rows:
                        r.append(0)
                    vec.append(0)
                vec[position[exps]] = c
            rows.append(vec)

    if ring.base == "Q":
        int_rows = _clear_denominators(rows)
        rank = snf.rational_rank(int_rows) if int_rows else 0
        free = len(carrier) - rank
        torsion = []
        pivots = _pivot_columns(int_rows)
    else:
        int_rows = rows
        if int_rows:
            form = snf.smith_normal_form(int_rows)
            free = len(carrier) - form.rank
            torsion = [d for d in form.divisors if d > 1]
        else:
            free = len(carrier)
            torsion = []
        pivots = _pivot_columns(int_rows)
    basis = [m for i, m in enumerate(carrier) if i not in pivots]
    note = "exponent bound was active; invariants may be incomplete" \
        if truncated else ""
    return GradedComponentReport(degree, free, torsion, basis, truncated, note)


def _clear_denominators(rows):
    out = []
    for row in rows:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // _gcd(denom, x.denominator)
        out.append([int(x * denom) for x in row])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _pivot_columns(rows):
    """Pivot columns of the rational row echelon form."""
    if not rows:
        return set()
    a = [[Fraction(x) for x in row] for row in rows]
    m, n = len(a), len(a[0])
    pivots = set()
    r = 0
    for col in range(n):
        hit = None
        for i in range(r, m):
            if a[i][col]:
                hit = i
                break
        if hit is None:
            continue
        a[r], a[hit] = a[hit], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[r])]
        pivots.add(col)
        r += 1
        if r == m:
            break
    return pivots


# -- expression parser ------------------------------------------------------------

_OPS = set("+-*^()")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "/":
            raise ExpressionSyntaxError(
                "division is not allowed in relation expressions", i, text)
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i, text)
    tokens.append(("end", None, len(text)))
    return tokens


def parse_expression(text, ring):
    """Parse `text` into a Polynomial over `ring`.

    Grammar: integer literals, generator names, +, -, *, ^ with positive
    integer exponents, and parentheses.  Division and unknown
    identifiers are rejected with the offending column.
    """
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def advance():
        tok = tokens[pos[0]]
        pos[0] += 1
        return tok

    def expect(kind):
        tok = advance()
        if tok[0] != kind:
            raise ExpressionSyntaxError(
                f"expected {kind!r}, found {tok[1]!r}", tok[2], text)
        return tok

    def parse_sum():
        value = parse_product()
        while peek()[0] in ("+", "-"):
            op = advance()[0]
            rhs = parse_product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_product():
        value = parse_factor()
        while peek()[0] == "*":
            advance()
            value = value * parse_factor()
        return value

    def parse_factor():
        sign = 1
        while peek()[0] in ("+", "-"):
            if advance()[0] == "-":
                sign = -sign
        value = parse_atom()
        if peek()[0] == "^":
            advance()
            tok = expect("int")
            if tok[1] <= 0:
                raise ExpressionSyntaxError(
                    "exponents must be positive integers", tok[2], text)
            value = value ** tok[1]
        return value if sign == 1 else -value

    def parse_atom():
        tok = advance()
        if tok[0] == "int":
            return ring.const(tok[1])
        if tok[0] == "name":
            if tok[1] not in ring.index:
                raise UnknownIdentifier(
                    f"unknown identifier {tok[1]!r}", tok[2], text)
            return ring.gen(tok[1])
        if tok[0] == "(":
            inner = parse_sum()
            closing = advance()
            if closing[0] != ")":
                raise ExpressionSyntaxError(
                    "expected ')'", closing[2], text)
            return inner
        raise ExpressionSyntaxError(
            f"expected a term, found {tok[1]!r}", tok[2], text)

    value = parse_sum()
    tail = advance()
    if tail[0] != "end":
        raise ExpressionSyntaxError(
            f"unexpected trailing input {tail[1]!r}", tail[2], text)
    return value


def load_presentation(doc):
    """Build a Ring from its JSON-style dict presentation.

    Schema: {"base": "Z"|"Q",
             "generators": [{"name": str, "adams_degree": int,
                             "invertible": bool?}, ...],
             "relations": [expression string, ...]}
    """
    if not isinstance(doc, dict):
        raise InputError("presentation must be a JSON object")
    for key in doc:
        if key not in ("base", "generators", "relations"):
            raise InputError(f"unknown presentation field {key!r}")
    base = doc.get("base")
    gens = []
    for g in doc.get("generators", []):
        extra = set(g) - {"name", "adams_degree", "invertible"}
        if extra:
            raise InputError(f"unknown generator fields {sorted(extra)}")
        if "name" not in g or "adams_degree" not in g:
            raise InputError("generator needs 'name' and 'adams_degree'")
        if not isinstance(g["adams_degree"], int):
            raise InputError("adams_degree must be an integer")
        gens.append(GenSpec(str(g["name"]), g["adams_degree"],
                            bool(g.get("invertible", False))))
    ring = Ring(base, gens)
    for rel in doc.get("relations", []):
        ring.impose(parse_expression(str(rel), ring))
    return ring


def polynomial_ring(base, specs):
    """Convenience: a free polynomial ring, specs = [(name, degree), ...]."""
    return Ring(base, [GenSpec(n, d) for n, d in specs])


def laurent_ring(base, name, degree=1):
    """The ring base[g, g^-1] on one invertible degree-`degree` generator."""
    return Ring(base, [GenSpec(name, degree, invertible=True)])
