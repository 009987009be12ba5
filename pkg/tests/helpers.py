"""Shared test oracles, written independently of the library code paths."""

from fractions import Fraction
from math import gcd, lcm

from hypothesis import strategies as st

from nrlambda.necklace import NeckVec
from nrlambda.numeric import QQ, ZZ


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def trial_mobius(n):
    k, p, sign = n, 2, 1
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    if k > 1:
        sign = -sign
    return sign


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_rem(a, monic):
    """Remainder of a modulo a monic polynomial (coefficients constant term first)."""
    a = [Fraction(c) for c in a]
    d = len(monic) - 1
    for top in range(len(a) - 1, d - 1, -1):
        c = a[top]
        if c:
            for i in range(d + 1):
                a[top - d + i] -= c * monic[i]
    return a[:d] + [Fraction(0)] * max(0, d - len(a))


def convolve(x, y, N):
    """Necklace product entries 1..N by the defining double sum over i, j <= N."""
    out = []
    for n in range(1, N + 1):
        total = 0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if lcm(i, j) == n:
                    total += gcd(i, j) * x.get(i) * y.get(j)
        out.append(total)
    return out


def ghost_of(x, N):
    """phi(x)_n = sum_{d|n} d x_d for n = 1..N."""
    return [sum(d * x.get(d) for d in trial_divisors(n)) for n in range(1, N + 1)]


def series_mul(a, b, N):
    out = [0] * (N + 1)
    for i in range(N + 1):
        for j in range(N + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def series_pow_int(base, e, N):
    """base ** e as a power series to order N, for an integer e (base[0] == 1)."""
    if e < 0:
        inv = [Fraction(1)] + [Fraction(0)] * N
        for n in range(1, N + 1):
            inv[n] = -sum(base[i] * inv[n - i] for i in range(1, n + 1) if i < len(base))
        base, e = inv, -e
    out = [1] + [0] * N
    for _ in range(e):
        out = series_mul(out, list(base) + [0] * (N + 1 - len(base)), N)
    return out


def product_expansion(exponents, N):
    """prod (1 - (-t)^d)^{e_d} to order N for integer exponents, by repeated products."""
    out = [1] + [0] * N
    for d, e in exponents.items():
        factor = [0] * (N + 1)
        factor[0] = 1
        if d <= N:
            factor[d] = -((-1) ** d)
        out = series_mul(out, series_pow_int(factor, e, N), N)
    return out


def sparse_vectors(ring=ZZ, max_index=12, max_terms=4, lo=-9, hi=9):
    return st.dictionaries(st.integers(1, max_index), st.integers(lo, hi),
                           max_size=max_terms).map(lambda d: NeckVec(d, ring=ring))


def rational_sparse_vectors(max_index=12, max_terms=4):
    return sparse_vectors(QQ, max_index, max_terms)


def permutation_matrix(images):
    """Dense 0/1 matrix sending basis vector i to basis vector images[i] (0-based)."""
    n = len(images)
    return [[1 if images[j] == i else 0 for j in range(n)] for i in range(n)]


def det_one_plus_tA_leibniz(A):
    """Coefficients of det(I + tA) by the Leibniz expansion (small matrices only)."""
    from itertools import permutations
    n = len(A)
    total = [0] * (n + 1)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = [1]
        for i in range(n):
            entry = [1 if i == perm[i] else 0, A[i][perm[i]]]
            term = poly_mul(term, entry)
        sign = -1 if inversions % 2 else 1
        for k, c in enumerate(term[: n + 1]):
            total[k] += sign * c
    return total


def exact_det(M):
    """Determinant by Gaussian elimination over the rationals."""
    M = [[Fraction(v) for v in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            if f:
                for c in range(col, n):
                    M[r][c] -= f * M[col][c]
    return det


def det_one_plus_tA_interpolated(A):
    """Coefficients of det(I + tA): exact evaluation at t = 0..n, then Lagrange interpolation."""
    n = len(A)
    points = list(range(n + 1))
    values = [exact_det([[(1 if i == j else 0) + t * A[i][j] for j in range(n)]
                         for i in range(n)]) for t in points]
    coeffs = [Fraction(0)] * (n + 1)
    for i, ti in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, tj in enumerate(points):
            if j != i:
                basis = poly_mul(basis, [-tj, 1])
                denom *= ti - tj
        for k, c in enumerate(basis):
            coeffs[k] += values[i] * c / denom
    return coeffs
