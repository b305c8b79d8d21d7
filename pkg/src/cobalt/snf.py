"""Exact integer and rational linear algebra.

Matrices are lists of row lists with Python int entries (arbitrary
precision), rational work uses fractions.Fraction.  The centerpiece is
smith_normal_form, which returns the elementary divisors together with
the unimodular transforms and their inverses; everything else (kernels,
lattice membership, quotient invariants, preimage lattices) is phrased
in terms of it.

Lattices are represented as plain lists of generator vectors living in
Z^n; they need not be independent.  An optional prime p switches the
membership and quotient routines to p-local semantics: integers coprime
to p are treated as units.
"""

from dataclasses import dataclass
from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(m, n):
    return [[0] * n for _ in range(m)]


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = a[i]
        out_row = [0] * m
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        out_row[j] += x * brow[j]
        out.append(out_row)
    return out


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def columns_matrix(cols, height):
    """Assemble a height x len(cols) matrix from column vectors."""
    return [[col[i] for col in cols] for i in range(height)]


@dataclass
class SmithForm:
    divisors: list           # elementary divisors d_1 | d_2 | ..., zeros last
    rows: int
    cols: int
    u: list                  # unimodular, rows x rows
    u_inv: list
    v: list                  # unimodular, cols x cols
    v_inv: list

    @property
    def rank(self):
        return sum(1 for d in self.divisors if d)


def smith_normal_form(matrix):
    """Smith normal form over Z.

    Returns a SmithForm with u * matrix * v diagonal, diagonal entries
    the canonical nonnegative elementary divisors d_1 | d_2 | ... followed
    by zeros.  Deterministic: the pivot is always the smallest nonzero
    entry in absolute value, ties broken by position.

    >>> smith_normal_form([[2, 4], [6, 8]]).divisors
    [2, 4]
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity_matrix(m)
    u_inv = identity_matrix(m)
    v = identity_matrix(n)
    v_inv = identity_matrix(n)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in u_inv:
            r[i], r[j] = r[j], r[i]

    def row_addmul(i, j, c):
        # row_i += c * row_j
        ai, aj = a[i], a[j]
        for t in range(n):
            ai[t] += c * aj[t]
        ui, uj = u[i], u[j]
        for t in range(m):
            ui[t] += c * uj[t]
        for r in u_inv:
            r[j] -= c * r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in u_inv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def col_addmul(i, j, c):
        # col_i += c * col_j
        for r in a:
            r[i] += c * r[j]
        for r in v:
            r[i] += c * r[j]
        vi, vj = v_inv[i], v_inv[j]
        for t in range(n):
            vj[t] -= c * vi[t]

    divisors = []
    t = 0
    while t < m and t < n:
        # locate the minimal nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < abs(best[0])):
                    best = (x, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)

        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_addmul(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_addmul(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility: pivot must divide the rest of the block
            pivot = a[t][t]
            offender = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(t, offender, 1)
        if a[t][t] < 0:
            row_negate(t)
        divisors.append(a[t][t])
        t += 1

    divisors.extend([0] * (min(m, n) - len(divisors)))
    return SmithForm(divisors, m, n, u, u_inv, v, v_inv)


def kernel_basis(matrix):
    """Integer basis of {x : matrix @ x = 0}, as a list of vectors."""
    if not matrix or not matrix[0]:
        n = len(matrix[0]) if matrix else 0
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)] if n else []
    s = smith_normal_form(matrix)
    return [[s.v[i][j] for i in range(s.cols)] for j in range(s.rank, s.cols)]


def solve_int(matrix, rhs):
    """One integer solution x of matrix @ x = rhs, or None."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if m == 0:
        return [0] * n
    if n == 0:
        return [] if all(x == 0 for x in rhs) else None
    s = smith_normal_form(matrix)
    w = mat_vec(s.u, rhs)
    y = [0] * n
    for i in range(m):
        if i < s.rank:
            d = s.divisors[i]
            if w[i] % d:
                return None
            y[i] = w[i] // d
        elif w[i] != 0:
            return None
    return mat_vec(s.v, y)


def has_solution_p_local(matrix, rhs, p):
    """Does matrix @ x = rhs admit a solution over Z localized at p?

    Equivalent to: for every i, the i-th transformed entry is divisible
    by the p-part of the i-th divisor, and entries past the rank vanish
    exactly (denominators coprime to p cannot repair a free direction).
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if m == 0:
        return True
    if n == 0:
        return all(x == 0 for x in rhs)
    s = smith_normal_form(matrix)
    w = mat_vec(s.u, rhs)
    for i in range(m):
        if i < s.rank:
            need = _p_valuation(s.divisors[i], p)
            if need and w[i] != 0 and _p_valuation(w[i], p) < need:
                return False
        elif w[i] != 0:
            return False
    return True


def _p_valuation(x, p):
    if x == 0:
        return None
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def lattice_contains(gens, vec, p=None):
    """Is vec in the sublattice of Z^n spanned by gens (p-locally if p)?"""
    if not gens:
        return all(x == 0 for x in vec)
    mat = columns_matrix(gens, len(vec))
    if p is None:
        return solve_int(mat, vec) is not None
    return has_solution_p_local(mat, vec, p)


def lattices_equal(gens_a, gens_b, p=None):
    return (all(lattice_contains(gens_b, g, p=p) for g in gens_a)
            and all(lattice_contains(gens_a, g, p=p) for g in gens_b))


def quotient_invariants(ambient_rank, gens, p=None):
    """Invariants of Z^ambient_rank / <gens>.

    Returns (free_rank, torsion) where torsion lists the elementary
    divisors > 1.  With p set, divisors are reduced to their p-parts
    (Z_(p)-module invariants).
    """
    if ambient_rank == 0:
        return 0, []
    if not gens:
        return ambient_rank, []
    s = smith_normal_form(columns_matrix(gens, ambient_rank))
    divisors = [d for d in s.divisors if d]
    if p is not None:
        divisors = [p ** _p_valuation(d, p) for d in divisors]
    torsion = [d for d in divisors if d > 1]
    return ambient_rank - len(divisors), torsion


def quotient_is_zero(ambient_rank, gens, p=None):
    free, torsion = quotient_invariants(ambient_rank, gens, p=p)
    return free == 0 and not torsion


def p_saturation(gens, ambient_rank, p):
    """Generators of {v in Z^n : c*v in <gens> for some c coprime to p}."""
    if not gens:
        return []
    s = smith_normal_form(columns_matrix(gens, ambient_rank))
    out = []
    for i in range(s.rank):
        scale = p ** _p_valuation(s.divisors[i], p)
        out.append([s.u_inv[r][i] * scale for r in range(ambient_rank)])
    return out


def preimage_lattice(matrix, target_gens, p=None):
    """Generators of {x : matrix @ x lies in <target_gens>} (p-locally if p).

    matrix maps Z^n -> Z^m; target_gens live in Z^m.  The p-local preimage
    of L' equals the integer preimage of the p-saturation of L', so the
    computation stays in Z.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    gens = target_gens
    if p is not None:
        gens = p_saturation(target_gens, m, p)
    if m == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    stacked = [matrix[i][:] + [-g[i] for g in gens] for i in range(m)]
    out = []
    for vec in kernel_basis(stacked):
        head = vec[:n]
        if any(head):
            out.append(head)
    return out


# -- rational routines ---------------------------------------------------------

def rational_rank(matrix):
    if not matrix or not matrix[0]:
        return 0
    a = [[Fraction(x) for x in row] for row in matrix]
    m, n = len(a), len(a[0])
    rank = 0
    col = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if a[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def rational_in_span(vectors, vec):
    """Is vec a rational combination of the given vectors?"""
    if all(x == 0 for x in vec):
        return True
    if not vectors:
        return False
    base = [list(v) for v in vectors]
    return rational_rank(base + [list(vec)]) == rational_rank(base)


def rational_spans_equal(vecs_a, vecs_b):
    ra = rational_rank([list(v) for v in vecs_a]) if vecs_a else 0
    rb = rational_rank([list(v) for v in vecs_b]) if vecs_b else 0
    if ra != rb:
        return False
    both = [list(v) for v in vecs_a] + [list(v) for v in vecs_b]
    return rational_rank(both) == ra if both else True
