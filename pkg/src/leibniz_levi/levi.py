"""Levi subalgebras: construction and verification."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .core import (AlgebraTable, Subspace, bracket, is_subalgebra, killing_matrix,
                   structure_constants, subspace_product)
from .errors import PostconditionFailed
from .radicals import (DERIVED, is_antisymmetric, liezation, nilradical, series,
                       solvable_radical, squares_ideal)


@dataclass(frozen=True)
class LeviReport:
    S: Subspace
    R: Subspace
    N: Subspace
    I: Subspace
    killing_rank_on_S: int


@dataclass(frozen=True)
class LeviCheck:
    subalgebra: bool
    lie: bool
    semisimple: bool
    complement: bool
    killing_rank: int

    @property
    def ok(self) -> bool:
        return self.subalgebra and self.lie and self.semisimple and self.complement

    def items(self):
        return [("subalgebra", self.subalgebra), ("lie", self.lie),
                ("semisimple", self.semisimple), ("complement", self.complement)]

    def failures(self) -> list:
        return [k for k, v in self.items() if not v]


def verify_levi(A: AlgebraTable, S: Subspace, R: Subspace | None = None) -> LeviCheck:
    if R is None:
        R = solvable_radical(A)
    sub = is_subalgebra(A, S)
    lie = sub and is_antisymmetric(A, S)
    if sub:
        K = killing_matrix(A, S)
        krank = la.rank(K, S.dim)
    else:
        krank = 0
    semisimple = sub and krank == S.dim
    complement = S.intersect(R).is_zero() and (S + R).is_full()
    return LeviCheck(sub, lie, semisimple, complement, krank)


def _correct_layer(L: AlgebraTable, ys: list, c: list, Rj: Subspace, Rnext: Subspace) -> list:
    """Shift ys by elements of Rj so they close up to constants c modulo Rnext."""
    n = L.dim
    m = len(ys)
    t = Rj.dim
    # unknown z[a][s]: r_a = sum_s z[a][s] w_s, w_s = Rj basis rows
    W = Rj.basis
    nunk = m * t
    eqs_cols = []  # one column (list over equations) per unknown
    pairs = [(a, b) for a in range(m) for b in range(m)]
    for a0 in range(m):
        for s in range(t):
            col = []
            w = W[s]
            for a, b in pairs:
                v = la.zero_vec(n)
                if b == a0:
                    v = la.add(v, bracket(L, ys[a], w))
                if a == a0:
                    v = la.add(v, bracket(L, w, ys[b]))
                if c[a][b][a0]:
                    v = la.sub(v, la.scale(c[a][b][a0], w))
                col.extend(Rnext.reduce(v))
            eqs_cols.append(col)
    rhs = []
    for a, b in pairs:
        target = la.lincomb(c[a][b], ys, n)
        rhs.extend(Rnext.reduce(la.sub(target, bracket(L, ys[a], ys[b]))))
    A_mat = la.transpose(eqs_cols)
    z = la.solve(A_mat, rhs, nunk)
    if z is None:
        raise PostconditionFailed("Levi correction system is inconsistent")
    out = []
    for a in range(m):
        r = la.lincomb(z[a * t:(a + 1) * t], W, n)
        out.append(la.add(ys[a], r))
    return out


def lie_levi(L: AlgebraTable, R: Subspace) -> Subspace:
    """Levi subalgebra of a Lie algebra with radical R, layer by layer down the derived series."""
    n = L.dim
    comp = R.complement()
    ys = list(comp.basis)
    if not ys:
        return Subspace.zero(n)
    cols = R.complement_indices()
    # structure constants of L/R on the complement basis
    c = [[[R.reduce(bracket(L, ya, yb))[col] for col in cols] for yb in ys] for ya in ys]
    terms = list(series(L, R, DERIVED).terms)
    if not terms[-1].is_zero():
        raise PostconditionFailed("radical is not solvable")
    for Rj, Rnext in zip(terms, terms[1:]):
        ys = _correct_layer(L, ys, c, Rj, Rnext)
    S = Subspace.span(n, ys)
    if S.dim != len(ys) or not is_subalgebra(L, S):
        raise PostconditionFailed("Lie Levi construction did not close")
    return S


def lift_to_leibniz(A: AlgebraTable, Q, Sbar: Subspace, I: Subspace) -> Subspace:
    """Lift a Levi subalgebra of L/I to L by solving mu([x,y]) - [mu(x), sigma y] = -defect."""
    n = A.dim
    m = Sbar.dim
    if m == 0:
        return Subspace.zero(n)
    sig = [Q.lift(s) for s in Sbar.basis]
    c = structure_constants(Q.algebra, Sbar)
    k = I.dim
    if k == 0:
        return Subspace.span(n, sig)
    pairs = [(a, b) for a in range(m) for b in range(m)]
    cols = []
    for a0 in range(m):
        for t in range(k):
            i_t = I.basis[t]
            col = []
            for a, b in pairs:
                v = la.scale(c[a][b][a0], i_t)
                if a == a0:
                    v = la.sub(v, bracket(A, i_t, sig[b]))
                col.extend(v)
            cols.append(col)
    rhs = []
    for a, b in pairs:
        defect = la.sub(la.lincomb(c[a][b], sig, n), bracket(A, sig[a], sig[b]))
        rhs.extend(la.scale(-1, defect))
    z = la.solve(la.transpose(cols), rhs, m * k)
    if z is None:
        raise PostconditionFailed("lifting system to the Leibniz algebra is inconsistent")
    vecs = [la.add(sig[a], la.lincomb(z[a * k:(a + 1) * k], I.basis, n)) for a in range(m)]
    return Subspace.span(n, vecs)


def levi_subalgebra(A: AlgebraTable) -> LeviReport:
    I = squares_ideal(A)
    R = solvable_radical(A)
    N = nilradical(A, R)
    n = A.dim
    if R.is_full():
        S = Subspace.zero(n)
    elif R.is_zero():
        S = A.full
    else:
        Q = liezation(A)
        Sbar = lie_levi(Q.algebra, Q.project_subspace(R))
        S = lift_to_leibniz(A, Q, Sbar, I)
    check = verify_levi(A, S, R)
    if not check.ok:
        raise PostconditionFailed(f"Levi subalgebra fails: {', '.join(check.failures())}")
    if subspace_product(A, S, S) != S:
        raise PostconditionFailed("Levi subalgebra is not perfect")
    return LeviReport(S, R, N, I, check.killing_rank)
