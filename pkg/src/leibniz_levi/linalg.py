"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Vectors are
tuples.  Everything here is deterministic: pivoting always takes the first
nonzero entry, and particular solutions set every free variable to zero.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import sympy

Vec = tuple  # tuple[Fraction, ...]
Matrix = list  # list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        x = x.strip()
        if "/" in x:
            p, q = x.split("/", 1)
            q = int(q)
            if q == 0:
                raise ZeroDivisionError(f"zero denominator in {x!r}")
            return Fraction(int(p), q)
        return Fraction(int(x))
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero_vec(v: Sequence) -> bool:
    return not any(v)


def add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vec:
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vec:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


# -- matrices ---------------------------------------------------------------

def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [list(unit_vec(n, i)) for i in range(n)]


def transpose(A: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    n = len(B[0])
    out = []
    for row in A:
        acc = [ZERO] * n
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def vecmat(v: Sequence, A: Sequence[Sequence], ncols: int) -> Vec:
    """Row vector times matrix."""
    return lincomb(v, A, ncols)


def mat_add(A, B) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A) -> Matrix:
    return [[c * a for a in row] for row in A]


def is_zero_mat(A) -> bool:
    return not any(any(row) for row in A)


def trace(A) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), ZERO)


def trace_product(A, B) -> Fraction:
    """tr(A B) without forming the product."""
    n = len(A)
    return sum((A[i][k] * B[k][i] for i in range(n) for k in range(n)
                if A[i][k] and B[k][i]), ZERO)


def freeze(A) -> tuple:
    return tuple(tuple(row) for row in A)


# -- elimination ------------------------------------------------------------

def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            M[r] = [a / piv for a in M[r]]
        prow = M[r]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], prow)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(A: Sequence[Sequence], ncols: int) -> list[Vec]:
    """Basis of {x : A x = 0}; one vector per free column, that column set to 1."""
    R, pivots = rref(A, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for row, pc in zip(R, pivots):
            if row[f]:
                x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(A: Sequence[Sequence], b: Sequence, ncols: int) -> Vec | None:
    """A particular solution of A x = b with free variables zero, or None."""
    aug = [list(row) + [frac(bi)] for row, bi in zip(A, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def inverse(A: Sequence[Sequence]) -> Matrix | None:
    n = len(A)
    aug = [list(row) + list(unit_vec(n, i)) for i, row in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]


def mat_power_list(A, k: int) -> list[Matrix]:
    """[A^0, A^1, ..., A^k]."""
    n = len(A)
    out = [identity(n)]
    for _ in range(k):
        out.append(matmul(out[-1], A))
    return out


# -- polynomials ------------------------------------------------------------

_x = sympy.Symbol("x")


def minimal_polynomial(A: Sequence[Sequence]) -> list[Fraction]:
    """Monic minimal polynomial, coefficients from constant term upward."""
    n = len(A)
    if n == 0:
        return [ONE]
    flat = []
    P = identity(n)
    for k in range(n + 1):
        flat.append([a for row in P for a in row])
        # first k with A^k dependent on lower powers
        if k > 0:
            rows_t = transpose(flat)
            coeffs = solve([r[:k] for r in rows_t], [r[k] for r in rows_t], k)
            if coeffs is not None:
                return [-c for c in coeffs] + [ONE]
        P = matmul(P, A)
    raise ArithmeticError("minimal polynomial degree exceeds dimension")


def factor_rational(coeffs: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Factor a polynomial over Q into monic irreducibles with multiplicities."""
    poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator)
                                     for c in coeffs])), _x, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, m in factors:
        f = f.monic()
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((cs, m))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def poly_eval_matrix(coeffs: Sequence[Fraction], A: Sequence[Sequence]) -> Matrix:
    n = len(A)
    out = zeros(n, n)
    for c in reversed(coeffs):
        out = matmul(out, A)
        for i in range(n):
            out[i][i] += c
    return out


def poly_power(coeffs: Sequence[Fraction], m: int) -> list[Fraction]:
    out = [ONE]
    for _ in range(m):
        nxt = [ZERO] * (len(out) + len(coeffs) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(coeffs):
                nxt[i + j] += a * b
        out = nxt
    return out
