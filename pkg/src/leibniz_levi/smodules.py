"""Right S-modules inside a Leibniz algebra: Hom/End spaces and decompositions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from .core import (AlgebraTable, LinearMap, Subspace, bracket, ideal_closure,
                   structure_constants, subspace_product)
from .errors import NonSplit, NotAModule, PostconditionFailed, PreconditionFailed
from .radicals import squares_ideal


def _require_module(A: AlgebraTable, S: Subspace, V: Subspace):
    if not subspace_product(A, V, S) <= V:
        raise NotAModule("[V, S] is not contained in V")


def module_hom_space(A: AlgebraTable, S: Subspace, V: Subspace, W: Subspace) -> list:
    """Basis of linear maps f: V -> W with f([v, s]) = [f(v), s] for s in S."""
    _require_module(A, S, V)
    _require_module(A, S, W)
    p, q = V.dim, W.dim
    if p == 0 or q == 0:
        return []
    # action matrices in module coordinates
    actV = [[V.coords(bracket(A, v, s)) for v in V.basis] for s in S.basis]
    actW = [[W.coords(bracket(A, w, s)) for w in W.basis] for s in S.basis]
    # unknown F (p x q), F[i][t] at index i*q + t; equation: actV[s] F = F actW[s]
    eqs = []
    for sa in range(S.dim):
        MV, MW = actV[sa], actW[sa]
        for i in range(p):
            for u in range(q):
                row = [la.ZERO] * (p * q)
                for k in range(p):
                    if MV[i][k]:
                        row[k * q + u] += MV[i][k]
                for t in range(q):
                    if MW[t][u]:
                        row[i * q + t] -= MW[t][u]
                if any(row):
                    eqs.append(row)
    sols = la.nullspace(eqs, p * q)
    return [LinearMap.make(V, W, [list(z[i * q:(i + 1) * q]) for i in range(p)]) for z in sols]


def hom_space(A: AlgebraTable, S: Subspace, V: Subspace) -> list:
    """Basis of Hom_S(S, V): theta([x, y]) = [theta(x), y]."""
    return module_hom_space(A, S, S, V)


def is_module_hom(A: AlgebraTable, S: Subspace, theta: LinearMap) -> bool:
    V = theta.source
    for v in V.basis:
        for s in S.basis:
            if theta(bracket(A, v, s)) != bracket(A, theta(v), s):
                return False
    return True


def end_dimension(A: AlgebraTable, S: Subspace, V: Subspace) -> int:
    return len(module_hom_space(A, S, V, V))


def equivariant_complement(A: AlgebraTable, S: Subspace, V: Subspace, U: Subspace) -> Subspace:
    """Submodule K with V = U + K, as the kernel of an equivariant projection onto U."""
    if U.dim == 0:
        return V
    if U == V:
        return Subspace.zero(A.dim)
    if not U <= V:
        raise PreconditionFailed("complement of a subspace outside the module")
    p, q = V.dim, U.dim
    actV = [[V.coords(bracket(A, v, s)) for v in V.basis] for s in S.basis]
    actU = [[U.coords(bracket(A, u, s)) for u in U.basis] for s in S.basis]
    eqs, rhs = [], []
    for sa in range(S.dim):
        MV, MU = actV[sa], actU[sa]
        for i in range(p):
            for u in range(q):
                row = [la.ZERO] * (p * q)
                for k in range(p):
                    if MV[i][k]:
                        row[k * q + u] += MV[i][k]
                for t in range(q):
                    if MU[t][u]:
                        row[i * q + t] -= MU[t][u]
                if any(row):
                    eqs.append(row)
                    rhs.append(la.ZERO)
    # pi(u) = u on U
    for u in U.basis:
        cv = V.coords(u)
        cu = U.coords(u)
        for t in range(q):
            row = [la.ZERO] * (p * q)
            for i in range(p):
                if cv[i]:
                    row[i * q + t] = cv[i]
            eqs.append(row)
            rhs.append(cu[t])
    z = la.solve(eqs, rhs, p * q)
    if z is None:
        raise PostconditionFailed("no equivariant projection: module not completely reducible")
    P = [list(z[i * q:(i + 1) * q]) for i in range(p)]
    ker = la.nullspace(la.transpose(P), p)
    K = Subspace.span(A.dim, (V.from_coords(c) for c in ker))
    if not subspace_product(A, K, S) <= K or not (U + K) == V or not U.intersect(K).is_zero():
        raise PostconditionFailed("equivariant complement check failed")
    return K


def _trial_elements(basis: list) -> list:
    """Deterministic sequence of commutant elements to try for splitting."""
    out = list(basis)
    for a, b in itertools.combinations(basis, 2):
        out.append(la.mat_add(a, b))
    if len(basis) > 1:
        for w in (1, 2):
            acc = la.zeros(len(basis[0]), len(basis[0]))
            for k, B in enumerate(basis, 1):
                acc = la.mat_add(acc, la.mat_scale(k ** w, B))
            out.append(acc)
    return out


def _split(A: AlgebraTable, S: Subspace, V: Subspace) -> list | None:
    """One splitting step of V into proper submodules, or None if V is absolutely simple."""
    endo = module_hom_space(A, S, V, V)
    if len(endo) <= 1:
        return None
    p = V.dim
    higher = None
    for T in _trial_elements([[list(r) for r in f.matrix] for f in endo]):
        mp = la.minimal_polynomial(T)
        factors = la.factor_rational(mp)
        if len(factors) >= 2:
            pieces = []
            for f, mult in factors:
                K = la.nullspace(la.transpose(la.poly_eval_matrix(la.poly_power(f, mult), T)), p)
                pieces.append(Subspace.span(A.dim, (V.from_coords(c) for c in K)))
            return pieces
        f, mult = factors[0]
        if len(f) > 2:
            higher = f
            continue
        if mult > 1:
            # T - lambda is nilpotent and nonzero; its kernel is a proper submodule
            N = la.poly_eval_matrix(f, T)
            K = la.nullspace(la.transpose(N), p)
            sub = Subspace.span(A.dim, (V.from_coords(c) for c in K))
            return [sub, equivariant_complement(A, S, V, sub)]
    if higher is not None:
        raise NonSplit(f"endomorphism algebra of a {p}-dim module needs an extension field "
                       f"(irreducible factor of degree {len(higher) - 1})")
    raise NonSplit(f"could not split a {p}-dim module with {len(endo)}-dim endomorphism algebra")


def simple_module_decomposition(A: AlgebraTable, S: Subspace, V: Subspace) -> list:
    """Absolutely simple submodules with zero pairwise intersection summing to V."""
    _require_module(A, S, V)
    if V.is_zero():
        return []
    todo = [V]
    out = []
    while todo:
        U = todo.pop(0)
        pieces = _split(A, S, U)
        if pieces is None:
            out.append(U)
        else:
            todo = pieces + todo
    total = Subspace.zero(A.dim)
    for U in out:
        if not total.intersect(U).is_zero():
            raise PostconditionFailed("module components overlap")
        total = total + U
    if total != V:
        raise PostconditionFailed("module components do not span")
    return out


def simple_ideal_decomposition(A: AlgebraTable, S: Subspace) -> list:
    """Simple ideals of a semisimple subalgebra S (its adjoint submodules)."""
    if S.is_zero():
        return []
    comps = simple_module_decomposition(A, S, S)
    for G in comps:
        if not (subspace_product(A, S, G) <= G and subspace_product(A, G, S) <= G):
            raise PostconditionFailed("component is not an ideal of S")
        for g in G.basis:
            if ideal_closure(A, Subspace.span(A.dim, [g]), within=S) != G:
                raise PostconditionFailed("component has a proper nonzero ideal")
    return comps


@dataclass(frozen=True)
class CanonicalDecomposition:
    G: Subspace
    Q: Subspace
    J: Subspace
    K: Subspace
    simple_ideals: tuple
    supporting: tuple  # indices of simple ideals that some Hom map sees
    J_components: tuple  # per supporting ideal: tuple of simple submodules
    hom_basis: tuple

    @property
    def hom_dim(self) -> int:
        return len(self.hom_basis)


def images_sum(A: AlgebraTable, maps) -> Subspace:
    total = Subspace.zero(A.dim)
    for th in maps:
        total = total + th.image()
    return total


def canonical_decomposition(A: AlgebraTable, S: Subspace, I: Subspace | None = None) -> CanonicalDecomposition:
    if I is None:
        I = squares_ideal(A)
    homs = hom_space(A, S, I)
    J = images_sum(A, homs)
    K = equivariant_complement(A, S, I, J)
    ideals = simple_ideal_decomposition(A, S)
    supporting = []
    for idx, Gi in enumerate(ideals):
        if any(not th.restrict(Gi).is_zero() for th in homs):
            supporting.append(idx)
    G = Subspace.zero(A.dim)
    Q = Subspace.zero(A.dim)
    for idx, Gi in enumerate(ideals):
        if idx in supporting:
            G = G + Gi
        else:
            Q = Q + Gi
    comps = []
    for idx in supporting:
        Ji = images_sum(A, [th.restrict(ideals[idx]) for th in homs])
        comps.append(tuple(simple_module_decomposition(A, S, Ji)))
    dec = CanonicalDecomposition(G, Q, J, K, tuple(ideals), tuple(supporting), tuple(comps),
                                 tuple(homs))
    _check_decomposition(A, S, I, dec)
    return dec


def _check_decomposition(A, S, I, dec: CanonicalDecomposition):
    if not (dec.G + dec.Q == S and dec.G.intersect(dec.Q).is_zero()):
        raise PostconditionFailed("S != G + Q")
    if not (dec.J + dec.K == I and dec.J.intersect(dec.K).is_zero()):
        raise PostconditionFailed("I != J + K")
    if hom_space(A, S, dec.K):
        raise PostconditionFailed("Hom_S(S, K) != 0")
    for th in dec.hom_basis:
        if not th.image() <= dec.J:
            raise PostconditionFailed("Hom image escapes J")
        for q in dec.Q.basis:
            if any(th(q)):
                raise PostconditionFailed("Hom map nonzero on Q")
    for idx, comps in zip(dec.supporting, dec.J_components):
        Gi = dec.simple_ideals[idx]
        for C in comps:
            if C.dim != Gi.dim or not any(
                    la.rank(f.matrix, C.dim) == C.dim for f in module_hom_space(A, S, Gi, C)):
                raise PostconditionFailed("J component not isomorphic to its simple ideal")


def absolutely_irreducible(A: AlgebraTable, S: Subspace, J: Subspace) -> tuple[bool, str]:
    """Certify that the Schur-type arguments hold over Q for the S-modules S and J."""
    try:
        ideals = simple_ideal_decomposition(A, S)
        comps = simple_module_decomposition(A, S, J)
    except NonSplit as exc:
        return False, str(exc)
    for U in list(ideals) + list(comps):
        if end_dimension(A, S, U) != 1:
            return False, f"component of dim {U.dim} has End dimension > 1"
    return True, "all components have 1-dimensional endomorphism algebra"
