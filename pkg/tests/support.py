"""Shared test helpers, independent of the package internals.

The rational linear algebra here (row reduction, span membership) is a
deliberately separate implementation used to cross-check the package's
integer kernels and projections.
"""

import random
from fractions import Fraction


def rref(rows):
    """Row-reduce a matrix of Fractions; returns (rref_rows, pivot_cols)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        d = m[r][c]
        m[r] = [e / d for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rational_rank(rows):
    return len(rref(rows)[0])


def solve_in_span(basis, target):
    """Coefficients expressing target in the span of basis over Q,
    or None if target is outside the span."""
    if not basis:
        return None if any(Fraction(e) != 0 for e in target) else []
    n = len(basis)
    aug = [[Fraction(basis[i][j]) for i in range(n)] + [Fraction(target[j])]
           for j in range(len(target))]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    coeffs = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        coeffs[p] = row[-1]
    return coeffs


def in_integer_span(basis, target):
    """Whether target is an integer combination of the basis vectors."""
    coeffs = solve_in_span(basis, target)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def random_rational_vector(rng: random.Random, length, support=None):
    v = [Fraction(0)] * length
    for i in (support if support is not None else range(length)):
        v[i] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return tuple(v)


def random_positive_class(rng, lattice, q_eval, support=None, max_tries=1000):
    """Rejection-sample a rational vector with q(v, v) > 0."""
    for _ in range(max_tries):
        v = random_rational_vector(rng, lattice.rank, support)
        if q_eval(lattice, v, v) > 0:
            return v
    raise AssertionError("could not sample a positive class")


def random_unimodular(rng: random.Random, n, steps=20):
    """Random integer matrix with determinant +-1 (product of shears
    and swaps)."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-2, 2)
        if rng.random() < 0.2:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
    return m


def conjugate_gram(gram, u):
    """u^T gram u with integer arithmetic."""
    n = len(gram)
    gu = [[sum(gram[i][k] * u[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    return [[sum(u[k][i] * gu[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
