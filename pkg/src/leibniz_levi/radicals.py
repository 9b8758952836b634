"""Canonical ideals: squares ideal, series, solvable radical, nilradical, liezation."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .core import (AlgebraTable, Quotient, Subspace, bracket, ideal_closure, is_ideal,
                   killing_matrix, quotient_algebra, restricted_right_mult, subspace_product)
from .errors import PostconditionFailed

LOWER_CENTRAL = "lower_central"
DERIVED = "derived"


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def last(self) -> Subspace:
        return self.terms[-1]

    def reaches_zero(self) -> bool:
        return self.last.is_zero()


def series(A: AlgebraTable, U: Subspace, kind: str = DERIVED) -> SeriesReport:
    """Lower central (U^{k+1} = [U^k, U]) or derived series, stopped at the first repeat.

    Terms are strictly decreasing; the repeated term is not listed again.
    """
    if kind not in (LOWER_CENTRAL, DERIVED):
        raise ValueError(f"unknown series kind {kind!r}")
    terms = [U]
    while True:
        cur = terms[-1]
        nxt = subspace_product(A, cur, U if kind == LOWER_CENTRAL else cur)
        if nxt == cur:
            break
        terms.append(nxt)
    return SeriesReport(kind, tuple(terms))


def squares_ideal(A: AlgebraTable) -> Subspace:
    n = A.dim
    gens = []
    for i in range(n):
        for j in range(i, n):
            gens.append(la.add(A.product(i, j), A.product(j, i)))
    I = Subspace.span(n, gens)
    if not is_ideal(A, I):
        raise PostconditionFailed("span of squares is not an ideal")
    if not subspace_product(A, A.full, I).is_zero():
        raise PostconditionFailed("[L, I] != 0: the table is not a Leibniz algebra")
    return I


def liezation(A: AlgebraTable) -> Quotient:
    Q = quotient_algebra(A, squares_ideal(A))
    T = Q.algebra
    for i in range(T.dim):
        for j in range(i, T.dim):
            if la.add(T.product(i, j), T.product(j, i)) != la.zero_vec(T.dim):
                raise PostconditionFailed("liezation is not antisymmetric")
    return Q


def lie_radical(L: AlgebraTable) -> Subspace:
    """Radical of a Lie algebra as the Killing-orthogonal of [L, L]."""
    n = L.dim
    if n == 0:
        return Subspace.zero(0)
    D = subspace_product(L, L.full, L.full)
    K = killing_matrix(L)
    # kappa(x, d) = x K d^T
    eqs = [la.vecmat(d, la.transpose(K), n) for d in D.basis]
    return Subspace.span(n, la.nullspace(eqs, n))


def solvable_radical(A: AlgebraTable) -> Subspace:
    Q = liezation(A)
    R = Q.preimage(lie_radical(Q.algebra))
    if not series(A, R, DERIVED).reaches_zero():
        raise PostconditionFailed("computed radical is not solvable")
    if not is_ideal(A, R):
        raise PostconditionFailed("computed radical is not an ideal")
    return R


def _operator_algebra(ops: list, r: int) -> list:
    """Basis of the unital associative algebra generated by ``ops`` (r x r matrices)."""
    def flat(M):
        return tuple(a for row in M for a in row)

    def unflat(v):
        return [list(v[i * r:(i + 1) * r]) for i in range(r)]

    basis = Subspace.span(r * r, [flat(la.identity(r))] + [flat(M) for M in ops])
    frontier = list(basis.basis)
    while frontier:
        new = []
        for v in frontier:
            M = unflat(v)
            for g in ops:
                w = flat(la.matmul(M, g))
                if not basis.contains(w):
                    basis = Subspace.span(r * r, basis.basis + (w,))
                    new.append(w)
        frontier = new
    return [unflat(v) for v in basis.basis]


def nilradical(A: AlgebraTable, R: Subspace | None = None) -> Subspace:
    """Elements of R whose right multiplication is nilpotent.

    With the operators R_x|_R (x in R) simultaneously triangularisable, R_x is
    nilpotent iff tr(R_x B) = 0 for every B in the unital algebra they generate.
    """
    if R is None:
        R = solvable_radical(A)
    r = R.dim
    if r == 0:
        N = R
    else:
        ops = [restricted_right_mult(A, x, R) for x in R.basis]
        alg = _operator_algebra(ops, r)
        eqs = [[la.trace_product(op, B) for op in ops] for B in alg]
        N = Subspace.span(A.dim, (R.from_coords(c) for c in la.nullspace(eqs, r)))
    if not is_ideal(A, N):
        raise PostconditionFailed("nilradical candidate is not an ideal")
    if not series(A, N, LOWER_CENTRAL).reaches_zero():
        raise PostconditionFailed("nilradical candidate is not nilpotent")
    I = squares_ideal(A)
    if not (I <= N and N <= R):
        raise PostconditionFailed("chain I <= N <= R violated")
    return N


def is_solvable(A: AlgebraTable, U: Subspace) -> bool:
    return series(A, U, DERIVED).reaches_zero()


def is_nilpotent(A: AlgebraTable, U: Subspace) -> bool:
    return series(A, U, LOWER_CENTRAL).reaches_zero()


def is_antisymmetric(A: AlgebraTable, U: Subspace) -> bool:
    return all(not any(bracket(A, u, u)) for u in U.basis) and all(
        la.add(bracket(A, u, w), bracket(A, w, u)) == la.zero_vec(A.dim)
        for k, u in enumerate(U.basis) for w in U.basis[k + 1:])
