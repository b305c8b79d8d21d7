"""Combinatorial oracle for Schur structure constants in a box.

Completely independent route from the library: expand one factor's
determinant over permutations into generator monomials, then multiply
the other factor by each generator with the horizontal-strip rule,
truncating everything outside the d x r box.  No polynomial arithmetic,
no linear algebra; partitions and counting only.
"""

from itertools import permutations


def trim(partition):
    out = list(partition)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def horizontal_strips(a, k, d, r):
    """Partitions mu in the d x r box with mu / a a horizontal k-strip."""
    padded = list(a) + [0] * (d - len(a))
    results = []
    mu = [0] * d

    def rec(i, remaining):
        if i == d:
            if remaining == 0:
                results.append(trim(mu))
            return
        low = padded[i]
        high = min(r, padded[i - 1] if i else r, low + remaining)
        for v in range(low, high + 1):
            mu[i] = v
            rec(i + 1, remaining - (v - low))
        mu[i] = 0

    rec(0, k)
    return results


def generator_expansion(b, d, r):
    """Signed generator-monomial expansion of the Schur determinant of b.

    Returns {sorted tuple of indices k: coefficient}; index k stands for
    the degree-k generator, omitted entirely when the entry is the
    constant 1.
    """
    padded = list(b) + [0] * (d - len(b))
    out = {}
    for perm in permutations(range(d)):
        ks = []
        dead = False
        for row, col in enumerate(perm):
            k = padded[row] - row + col
            if k < 0 or k > r:
                dead = True
                break
            if k > 0:
                ks.append(k)
        if dead:
            continue
        key = tuple(sorted(ks))
        out[key] = out.get(key, 0) + perm_sign(perm)
    return {key: c for key, c in out.items() if c}


def oracle_multiply(a, b, d, r):
    """Structure constants of Delta_a * Delta_b in the d x r box."""
    total = {}
    for mono, coeff in generator_expansion(b, d, r).items():
        vec = {trim(a): 1}
        for k in mono:
            step = {}
            for lam, c in vec.items():
                for mu in horizontal_strips(lam, k, d, r):
                    step[mu] = step.get(mu, 0) + c
            vec = step
        for lam, c in vec.items():
            total[lam] = total.get(lam, 0) + coeff * c
    return {lam: c for lam, c in total.items() if c}
