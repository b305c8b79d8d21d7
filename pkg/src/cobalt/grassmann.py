"""Schur calculus on Grassmannian cohomology rings, over Z throughout.

R(n, d) is the quotient of Z[x1..xr], r = n - d, deg x_i = i, by the
relations found in degrees d+1..n of the series inverse of
1 + x1 t + ... + xr t^r.  The Schur classes Delta_a, one per partition
a inside the d x r box, form a Z-basis; Delta_a is the d x d
determinant with (row, col) entry x_{a_row - row + col} (x_0 = 1,
x_k = 0 outside 0..r).

Reduction to the Schur basis is exact integer linear algebra degree by
degree: express a homogeneous polynomial over the degree's monomial
carrier and solve against [Schur columns | relation-multiple columns].
The Schur coordinates of any representative are unique because the
Schur classes are independent modulo the relation lattice.
"""

import os
from functools import lru_cache

from .errors import BoundExceeded, IllFormed, InputError, PartitionOutOfBox
from .rings import Polynomial, Ring, GenSpec, graded_component
from .series import TruncSeries
from . import snf

DEFAULT_MAX_N = 8


def size_limit():
    """Largest allowed n, configurable through COBALT_MAX_N."""
    raw = os.environ.get("COBALT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"COBALT_MAX_N must be an integer, got {raw!r}")


def partitions_of(total, rows, width):
    """Partitions of `total` with at most `rows` parts, parts <= width.

    Tuples are trimmed (no trailing zeros) and listed in descending
    lexicographic order.
    """
    if rows < 0 or width < 0:
        return [] if total else [()]
    out = []

    def rec(prefix, remaining, cap, slots):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0 or cap * slots < remaining:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(prefix, remaining - part, part, slots - 1)
            prefix.pop()

    rec([], total, width, rows)
    return out


def partitions_in_box(rows, width):
    """All partitions in the rows x width box, by size then lex-descending."""
    out = []
    for total in range(rows * width + 1):
        out.extend(partitions_of(total, rows, width))
    return out


class GrassRing:
    """The ring R(n, d) with its Schur basis and exact reduction."""

    def __init__(self, n, d):
        if d < 0 or n < d:
            raise InputError(f"need 0 <= d <= n, got n={n}, d={d}")
        limit = size_limit()
        if n > limit:
            raise BoundExceeded(
                f"n={n} exceeds the size limit {limit}; "
                "set COBALT_MAX_N to raise it")
        self.n = n
        self.d = d
        self.r = n - d
        self.ring = Ring("Z", [GenSpec(f"x{i}", i)
                               for i in range(1, self.r + 1)])
        gen_series = TruncSeries(self.ring, n, {0: 1})
        for i in range(1, self.r + 1):
            gen_series = gen_series + TruncSeries(
                self.ring, n, {i: self.ring.gen(f"x{i}")})
        inverse = gen_series.invert()
        for j in range(d + 1, n + 1):
            c = inverse.coeff(j)
            if not c.is_zero():
                self.ring.impose(c)
        self._schur_cache = {}
        self._degree_cache = {}

    # -- combinatorics -------------------------------------------------------

    @property
    def rank(self):
        out = 1
        for i in range(1, self.d + 1):
            out = out * (self.n - self.d + i) // i
        return out

    @property
    def top(self):
        return (self.r,) * self.d if self.r else ()

    def check_partition(self, partition):
        partition = tuple(partition)
        trimmed = partition
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        if any(a <= 0 for a in trimmed) or \
                any(trimmed[i] < trimmed[i + 1] for i in range(len(trimmed) - 1)):
            raise PartitionOutOfBox(f"{partition} is not a partition")
        if len(trimmed) > self.d or (trimmed and trimmed[0] > self.r):
            raise PartitionOutOfBox(
                f"{partition} does not fit the {self.d} x {self.r} box")
        return trimmed

    def partitions(self, degree=None):
        if degree is None:
            return partitions_in_box(self.d, self.r)
        return partitions_of(degree, self.d, self.r)

    def complement(self, partition):
        a = self.check_partition(partition)
        padded = list(a) + [0] * (self.d - len(a))
        comp = tuple(self.r - x for x in reversed(padded))
        return self.check_partition(comp)

    # -- Schur classes -------------------------------------------------------

    def schur(self, partition):
        """Determinantal representative of Delta_partition in Z[x1..xr]."""
        a = self.check_partition(partition)
        if a not in self._schur_cache:
            self._schur_cache[a] = schur_polynomial(self.ring, a, self.d)
        return self._schur_cache[a]

    def _degree_data(self, degree):
        """Carrier monomials, Schur columns and relation lattice at a degree."""
        if degree in self._degree_cache:
            return self._degree_cache[degree]
        bound = max(degree, 1)
        carrier, flagged = self.ring.monomials_of_degree(degree, bound)
        if flagged:
            raise IllFormed("unexpected truncation in a positively graded ring")
        position = {m: i for i, m in enumerate(carrier)}
        parts = self.partitions(degree)
        columns = []
        for lam in parts:
            columns.append(self._vectorize(self.schur(lam), position))
        lattice_start = len(columns)
        for rel in self.ring.relations:
            rel_degree = rel.adams_degree()
            mults, _ = self.ring.monomials_of_degree(
                degree - rel_degree, bound)
            for m in mults:
                prod = Polynomial(self.ring, {m: 1}) * rel
                columns.append(self._vectorize(prod, position))
        matrix = [[col[i] for col in columns] for i in range(len(carrier))]
        data = (carrier, position, parts, matrix, lattice_start)
        self._degree_cache[degree] = data
        return data

    def _vectorize(self, poly, position):
        vec = [0] * len(position)
        for exps, c in poly.terms.items():
            vec[position[exps]] = c
        return vec

    def reduce(self, poly):
        """Schur coordinates of a polynomial representative.

        Returns {partition: int} with zero coefficients omitted.  Splits
        into homogeneous parts, so any polynomial is accepted.
        """
        if poly.ring is not self.ring:
            raise InputError("polynomial is not over this ring's presentation")
        out = {}
        by_degree = {}
        for exps, c in poly.terms.items():
            by_degree.setdefault(self.ring.monomial_degree(exps), []).append(
                (exps, c))
        for degree, terms in sorted(by_degree.items()):
            carrier, position, parts, matrix, _ = self._degree_data(degree)
            vec = [0] * len(carrier)
            for exps, c in terms:
                vec[position[exps]] = c
            if not matrix or not matrix[0]:
                if any(vec):
                    raise IllFormed("nonzero class in an empty component")
                continue
            sol = snf.solve_int(matrix, vec)
            if sol is None:
                raise IllFormed("representative does not reduce; "
                                "presentation is inconsistent")
            for lam, c in zip(parts, sol):
                if c:
                    out[lam] = c
        return out

    # -- products and the pairing ---------------------------------------------

    def multiply(self, a, b):
        """Structure constants: Delta_a * Delta_b = sum c^lam Delta_lam."""
        return self.reduce(self.schur(a) * self.schur(b))

    def pairing(self, a, b):
        """Coefficient of the box-filling class in Delta_a * Delta_b."""
        a = self.check_partition(a)
        b = self.check_partition(b)
        if sum(a) + sum(b) != self.d * self.r:
            return 0
        return self.multiply(a, b).get(self.top, 0)

    def gram_matrix(self, degree):
        """Pairing matrix between degree and its complementary degree."""
        rows = self.partitions(degree)
        cols = self.partitions(self.d * self.r - degree)
        matrix = [[self.pairing(a, b) for b in cols] for a in rows]
        return rows, cols, matrix

    def component(self, degree):
        return graded_component(self.ring, degree)

    def __repr__(self):
        return f"GrassRing(n={self.n}, d={self.d})"


@lru_cache(maxsize=None)
def grassmannian(n, d):
    return GrassRing(n, d)


def schur_polynomial(ring, partition, rows):
    """The rows x rows Schur determinant for a partition, entrywise
    x_{a_row - row + col}, evaluated by subset expansion.

    x_0 means 1 and x_k vanishes outside 0..width, width = number of
    ring generators.  The row count matters: the same partition padded
    into more rows is a genuinely different determinant.
    """
    partition = tuple(partition)
    if len(partition) > rows:
        raise PartitionOutOfBox(
            f"{partition} has more than {rows} parts")
    width = len(ring.gens)
    a = list(partition) + [0] * (rows - len(partition))

    def entry(row, col):
        k = a[row] - row + col
        if k < 0 or k > width:
            return None
        if k == 0:
            return ring.one()
        return ring.gen(k - 1)

    full = (1 << rows) - 1
    table = {0: ring.one()}
    for mask in range(1, full + 1):
        row = bin(mask).count("1") - 1
        acc = ring.zero()
        seen = 0
        for col in range(rows):
            if not mask & (1 << col):
                continue
            e = entry(row, col)
            if e is not None:
                prev = table[mask ^ (1 << col)]
                if not prev.is_zero():
                    term = prev * e
                    if (row + seen) % 2:
                        term = -term
                    acc = acc + term
            seen += 1
        table[mask] = acc
    return table[full]


# -- the restriction / extension complex --------------------------------------


def complex_report(n, d):
    """Exactness of the standard complex at R(n, d).

    Three lattices in Schur coordinates are compared in every degree:
    the image of the degree-shifting inclusion from R(n-1, d-1), the
    kernel of the restriction to R(n-1, d), and the ideal generated by
    the top generator x_r.  Returns a dict with per-degree results and
    an overall flag.
    """
    G = grassmannian(n, d)
    r = G.r
    target = grassmannian(n - 1, d) if n - 1 >= d else None
    source = grassmannian(n - 1, d - 1) if d >= 1 and n >= 1 else None

    degrees = {}
    ok = True
    for degree in range(G.d * G.r + 1):
        parts = G.partitions(degree)
        dim = len(parts)
        index = {lam: i for i, lam in enumerate(parts)}

        # kernel of restriction, from honest polynomial images
        if target is not None:
            pi_rows = []
            for lam in parts:
                images = {f"x{i}": target.ring.gen(f"x{i}")
                          for i in range(1, r)}
                if r >= 1:
                    images[f"x{r}"] = target.ring.zero()
                image = G.schur(lam).map_to(target.ring, images)
                coords = target.reduce(image)
                tparts = target.partitions(degree)
                pi_rows.append([coords.get(mu, 0) for mu in tparts])
            pi_matrix = [[pi_rows[j][i] for j in range(dim)]
                         for i in range(len(pi_rows[0]) if pi_rows else 0)]
            if pi_matrix and pi_matrix[0]:
                kernel = snf.kernel_basis(pi_matrix)
            else:
                kernel = [[1 if i == j else 0 for j in range(dim)]
                          for i in range(dim)]
        else:
            kernel = [[1 if i == j else 0 for j in range(dim)]
                      for i in range(dim)]

        # image of the inclusion, via reduced determinant representatives
        image_vectors = []
        if source is not None and degree >= r:
            for mu in source.partitions(degree - r):
                prepended = (r,) + mu if r or mu else ()
                coords = G.reduce(G.schur(G.check_partition(prepended)))
                vec = [0] * dim
                for lam, c in coords.items():
                    vec[index[lam]] = c
                image_vectors.append(vec)

        # the ideal (x_r) in this degree, from monomial multiples
        ideal_vectors = []
        if r >= 1:
            xr = G.ring.gen(f"x{r}")
            mults, _ = G.ring.monomials_of_degree(degree - r,
                                                  max(degree, 1))
            for m in mults:
                coords = G.reduce(Polynomial(G.ring, {m: 1}) * xr)
                vec = [0] * dim
                for lam, c in coords.items():
                    vec[index[lam]] = c
                ideal_vectors.append(vec)
        else:
            # r = 0: empty product convention, the unit ideal
            for i in range(dim):
                vec = [0] * dim
                vec[i] = 1
                ideal_vectors.append(vec)

        same_ik = snf.lattices_equal(image_vectors, kernel)
        same_ki = snf.lattices_equal(kernel, ideal_vectors)
        degrees[degree] = {
            "image_equals_kernel": same_ik,
            "kernel_equals_ideal": same_ki,
        }
        ok = ok and same_ik and same_ki
    return {"n": n, "d": d, "ok": ok, "degrees": degrees}


def determinant_identities(n, d):
    """Two exact polynomial identities behind the inclusion map.

    For every partition mu with at most d-1 rows in the box: padding mu
    into d rows does not change the Schur determinant, and prepending a
    full-width part multiplies it by x_r.  Checked as polynomial
    identities in Z[x1..xr], no reduction involved.
    """
    G = grassmannian(n, d)
    r = G.r
    if d == 0:
        return True, None
    for mu in partitions_in_box(d - 1, r):
        padded = schur_polynomial(G.ring, mu, d)
        small = schur_polynomial(G.ring, mu, d - 1)
        if padded != small:
            return False, ("padding", mu)
        if r >= 1:
            prepended = schur_polynomial(G.ring, (r,) + mu, d)
            xr = G.ring.gen(f"x{r}")
            if prepended != xr * padded:
                return False, ("prepend", mu)
    return True, None


def verify_ranks(n, d):
    """Graded components of the presentation against partition counts.

    Uses the generic component machinery (monomial carriers, relation
    lattices, Smith form), then compares with the Schur count; free
    ranks must match, with no torsion and no truncation, in every
    degree of the box and one degree beyond.
    """
    G = grassmannian(n, d)
    top = G.d * G.r
    for degree in range(top + 2):
        report = G.component(degree)
        expected = len(G.partitions(degree))
        if report.truncated or report.torsion or report.free_rank != expected:
            return False, (degree, report.free_rank, expected,
                           report.torsion, report.truncated)
    return True, None


def gram_report(n, d):
    """Pairing matrices in all complementary degrees.

    Expects each one to be the permutation matrix of the complement
    involution: unimodular, one nonzero entry per row and column, all
    entries 1, supported exactly on complementary pairs.
    """
    G = grassmannian(n, d)
    top = G.d * G.r
    for degree in range(top + 1):
        rows, cols, matrix = G.gram_matrix(degree)
        for i, a in enumerate(rows):
            comp = G.complement(a)
            for j, b in enumerate(cols):
                want = 1 if b == comp else 0
                if matrix[i][j] != want:
                    return False, (degree, a, b, matrix[i][j], want)
    return True, None
