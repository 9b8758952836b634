"""Conjugacy of Levi subalgebras: twists, derivations, conjugators and the classifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import linalg as la
from .core import (AlgebraTable, LinearMap, Subspace, apply_to_subspace, bracket,
                   exp_nilpotent, is_automorphism, right_mult, subspace_product)
from .errors import (HypothesisFailed, NoConjugator, NonSplit, NotNilpotent,
                     PostconditionFailed, PreconditionFailed)
from .fixtures import hemisemidirect  # noqa: F401  (public generator lives with the corpus)
from .levi import LeviReport, levi_subalgebra, verify_levi
from .radicals import is_antisymmetric, solvable_radical
from .smodules import (CanonicalDecomposition, absolutely_irreducible, canonical_decomposition,
                       hom_space, images_sum, is_module_hom)


class Verdict(str, Enum):
    INNER_CONJUGATE = "INNER_CONJUGATE"
    CONJUGATE_NON_INNER = "CONJUGATE_NON_INNER"
    EXISTS_NON_CONJUGATE_PAIR = "EXISTS_NON_CONJUGATE_PAIR"
    EXISTS_NON_INNER_PAIR = "EXISTS_NON_INNER_PAIR"
    UNDETERMINED = "UNDETERMINED"


# -- E and the criterion ----------------------------------------------------

def E_subspace(A: AlgebraTable, S: Subspace, N: Subspace, I: Subspace) -> Subspace:
    """{b in N : [s, b] in I for every s in S}."""
    eqs = []
    for s in S.basis:
        cols = [I.reduce(bracket(A, s, nb)) for nb in N.basis]
        eqs.extend(la.transpose(cols) if cols else [])
    sols = la.nullspace(eqs, N.dim)
    return Subspace.span(A.dim, (N.from_coords(c) for c in sols))


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    SE: Subspace
    J: Subspace
    E: Subspace


def criterion(A: AlgebraTable, S: Subspace, E: Subspace, J: Subspace) -> CriterionResult:
    SE = subspace_product(A, S, E)
    return CriterionResult(SE == J, SE, J, E)


# -- twisted Levi subalgebras and derivations -------------------------------

def as_theta(A: AlgebraTable, S: Subspace, theta: LinearMap) -> LinearMap:
    """Check that theta is an S-module map defined on S; return it unchanged."""
    if theta.source != S:
        raise PreconditionFailed("theta must be defined on the Levi subalgebra basis")
    if not is_module_hom(A, S, theta):
        raise PreconditionFailed("theta is not an S-module homomorphism")
    return theta


def s_theta(A: AlgebraTable, S: Subspace, theta: LinearMap, R: Subspace | None = None) -> Subspace:
    as_theta(A, S, theta)
    St = Subspace.span(A.dim, (la.add(s, theta(s)) for s in S.basis))
    check = verify_levi(A, St, R)
    if not check.ok:
        raise PostconditionFailed(f"S_theta fails: {', '.join(check.failures())}")
    return St


def split_map(S: Subspace, R: Subspace):
    """Return (to_S, to_R) projections of ambient vectors along L = S + R."""
    n = S.ambient_dim
    B = [list(v) for v in S.basis + R.basis]
    Binv = la.inverse(B)
    if Binv is None:
        raise PreconditionFailed("S and R are not complementary")
    k = S.dim

    def to_S(v):
        c = la.vecmat(v, Binv, n)
        return la.lincomb(c[:k], S.basis, n)

    def to_R(v):
        c = la.vecmat(v, Binv, n)
        return la.lincomb(c[k:], R.basis, n)

    return to_S, to_R


def delta_theta(A: AlgebraTable, S: Subspace, theta: LinearMap, R: Subspace, J: Subspace) -> LinearMap:
    """x_S + x_R -> theta(x_S); a square-zero derivation when [J, R] = 0."""
    as_theta(A, S, theta)
    if not subspace_product(A, J, R).is_zero():
        raise PreconditionFailed("[J, R] != 0: delta_theta is not a derivation")
    n = A.dim
    to_S, _ = split_map(S, R)
    D = LinearMap.endo([theta(to_S(la.unit_vec(n, i))) for i in range(n)])
    if not is_derivation(A, D):
        raise PostconditionFailed("delta_theta fails the derivation identity")
    if not D.compose(D).is_zero():
        raise PostconditionFailed("delta_theta does not square to zero")
    return D


def is_derivation(A: AlgebraTable, D: LinearMap) -> bool:
    n = A.dim
    E = [la.unit_vec(n, i) for i in range(n)]
    imgs = [D(e) for e in E]
    for i in range(n):
        for j in range(n):
            lhs = D(A.product(i, j))
            rhs = la.add(bracket(A, imgs[i], E[j]), bracket(A, E[i], imgs[j]))
            if lhs != rhs:
                return False
    return True


# -- automorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    map: LinearMap
    generator_log: tuple = ()

    def __call__(self, v):
        return self.map(v)

    def apply(self, U: Subspace) -> Subspace:
        return apply_to_subspace(self.map, U)

    def then(self, other: "Automorphism") -> "Automorphism":
        """other after self."""
        return Automorphism(other.map.compose(self.map), self.generator_log + other.generator_log)

    def blocks(self, S: Subspace, R: Subspace) -> dict:
        """phi_SS, phi_SR, phi_RR with respect to L = S + R (phi(R) = R is checked)."""
        to_S, to_R = split_map(S, R)
        imgs_S = [self.map(s) for s in S.basis]
        imgs_R = [self.map(r) for r in R.basis]
        if any(any(to_S(v)) for v in imgs_R):
            raise PostconditionFailed("automorphism does not preserve R")
        return {
            "SS": LinearMap.from_images(S, S, [to_S(v) for v in imgs_S]),
            "SR": LinearMap.from_images(S, R, [to_R(v) for v in imgs_S]),
            "RR": LinearMap.from_images(R, R, imgs_R),
        }


def _fmt(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def exp_R(A: AlgebraTable, a) -> Automorphism:
    a = la.vec(a)
    phi = exp_nilpotent(right_mult(A, a))
    if not is_automorphism(A, phi):
        raise PostconditionFailed("exp(R_a) is not an automorphism")
    return Automorphism(phi, (f"exp(R_a), a={_fmt(a)}",))


def exp_D(A: AlgebraTable, S: Subspace, a, theta: LinearMap | None = None,
          R: Subspace | None = None, J: Subspace | None = None) -> Automorphism:
    """exp(R_a + delta_theta)."""
    a = la.vec(a)
    D = right_mult(A, a)
    if theta is not None and not theta.is_zero():
        if R is None:
            R = solvable_radical(A)
        if J is None:
            J = images_sum(A, hom_space(A, S, theta.target))
        D = D + delta_theta(A, S, theta, R, J)
    phi = exp_nilpotent(D)
    if not is_automorphism(A, phi):
        raise PostconditionFailed("exp(D) is not an automorphism")
    tag = "exp(R_a + delta_theta)" if theta is not None and not theta.is_zero() else "exp(R_a)"
    return Automorphism(phi, (f"{tag}, a={_fmt(a)}",))


# -- inner conjugators ------------------------------------------------------

def _solve_conjugator(A, S, E, targets, extra_zero=()):
    """b in E with [s_i, b] = targets[i] and [w, b] = 0 for w in extra_zero."""
    n = A.dim
    rows, rhs = [], []
    for s, t in list(zip(S.basis, targets)) + [(w, la.zero_vec(n)) for w in extra_zero]:
        cols = [bracket(A, s, eb) for eb in E.basis]
        for k in range(n):
            rows.append([c[k] for c in cols])
            rhs.append(t[k])
    z = la.solve(rows, rhs, E.dim)
    if z is None:
        return None
    return E.from_coords(z)


def _restricts_to(A, S, b, tau) -> bool:
    if b is None:
        return False
    phi = exp_nilpotent(right_mult(A, b))
    return all(phi(s) == la.add(s, tau(s)) for s in S.basis)


@dataclass(frozen=True)
class Conjugator:
    b: tuple
    route: str


def find_inner_conjugator(A: AlgebraTable, S: Subspace, tau: LinearMap, E: Subspace,
                          dec: CanonicalDecomposition | None = None) -> Conjugator:
    """b in E with exp(R_b)|_S = id_S + tau, verified exactly."""
    as_theta(A, S, tau)
    n = A.dim
    if E.is_zero():
        if tau.is_zero():
            return Conjugator(la.zero_vec(n), "trivial")
        raise NoConjugator("E = 0 but tau != 0")
    targets = [tau(s) for s in S.basis]
    b = _solve_conjugator(A, S, E, targets)
    if b is None:
        raise NoConjugator("no b in E with R_b|_S = tau")
    if _restricts_to(A, S, b, tau):
        return Conjugator(b, "single-solve")
    # per-component route: pieces tau_ij supported on one simple ideal and one J component
    if dec is not None and dec.J_components:
        from .smodules import equivariant_complement  # local: only needed here
        total = la.zero_vec(n)
        ok = True
        for idx, comps in zip(dec.supporting, dec.J_components):
            Gi = dec.simple_ideals[idx]
            for C in comps:
                rest = equivariant_complement(A, S, dec.J + dec.K, C) if C != dec.J + dec.K else \
                    Subspace.zero(n)
                to_C, _ = split_map(C, rest)
                to_Gi, _ = split_map(Gi, _other_ideals(A, dec, idx))
                piece = [to_C(tau(to_Gi(s))) for s in S.basis]
                bij = _solve_conjugator(A, S, E, piece,
                                        extra_zero=[v for v in piece if any(v)])
                if bij is None:
                    ok = False
                    break
                total = la.add(total, bij)
            if not ok:
                break
        if ok and _restricts_to(A, S, total, tau):
            return Conjugator(total, "per-component")
    # constrained route: additionally force R_b^2|_S = 0
    b = _solve_conjugator(A, S, E, targets, extra_zero=[t for t in targets if any(t)])
    if b is not None and _restricts_to(A, S, b, tau):
        return Conjugator(b, "square-zero")
    raise NoConjugator("no b in E with exp(R_b)|_S = id + tau")


def _other_ideals(A, dec, idx) -> Subspace:
    out = Subspace.zero(A.dim)
    for k, G in enumerate(dec.simple_ideals):
        if k != idx:
            out = out + G
    return out


# -- non-conjugacy certificates ---------------------------------------------

def centralizer(A: AlgebraTable, X: Subspace, T: Subspace, side: str = "right") -> Subspace:
    """{q in X : [t, q] = 0 for t in T} (side='right') or [q, t] = 0 (side='left')."""
    eqs = []
    for t in T.basis:
        if side == "right":
            cols = [bracket(A, t, x) for x in X.basis]
        else:
            cols = [bracket(A, x, t) for x in X.basis]
        if cols:
            eqs.extend(la.transpose(cols))
    return Subspace.span(A.dim, (X.from_coords(c) for c in la.nullspace(eqs, X.dim)))


def automorphism_invariants(A: AlgebraTable, T: Subspace, R: Subspace, N: Subspace,
                            I: Subspace) -> dict:
    """Dimensions preserved by any automorphism mapping T onto another subalgebra."""
    out = {}
    for side in ("right", "left"):
        for xname, X in (("L", A.full), ("R", R), ("N", N)):
            C = centralizer(A, X, T, side)
            out[f"dim C_{xname}^{side}"] = C.dim
            out[f"dim (C_{xname}^{side} + N)"] = (C + N).dim
            out[f"dim (C_{xname}^{side} + I)"] = (C + I).dim
            out[f"dim (C_{xname}^{side} & I)"] = C.intersect(I).dim
    return out


@dataclass(frozen=True)
class Obstruction:
    theta: LinearMap
    S_theta: Subspace
    invariant: str
    value_S: int
    value_S_theta: int
    p: tuple | None  # element of C_R(S) outside N with no admissible image, if any


def nonconjugacy_obstruction(A: AlgebraTable, S: Subspace, theta: LinearMap, R: Subspace,
                             N: Subspace, I: Subspace) -> Obstruction | None:
    """Certificate that no automorphism maps S onto S_theta, or None.

    Any automorphism fixes I, N and R, so it carries the centralisers of S in
    these ideals onto those of its image; a dimension mismatch rules it out.
    In the p-type situation this is the linear system for phi(p): an element
    q of R outside N with [s + theta(s), q] = 0 for all s.
    """
    St = s_theta(A, S, theta, R)
    inv_S = automorphism_invariants(A, S, R, N, I)
    inv_T = automorphism_invariants(A, St, R, N, I)
    for key in inv_S:
        if inv_S[key] != inv_T[key]:
            p = None
            if centralizer(A, R, St, "right") <= N:
                p = next((c for c in centralizer(A, R, S, "right").basis if not N.contains(c)), None)
            return Obstruction(theta, St, key, inv_S[key], inv_T[key], p)
    return None


# -- the classifier ---------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    predicates: dict
    evidence: dict
    theta: LinearMap | None = None
    conjugator: Conjugator | None = None
    automorphism: Automorphism | None = None
    obstruction: Obstruction | None = None
    levi: LeviReport | None = field(default=None, compare=False)
    decomposition: CanonicalDecomposition | None = field(default=None, compare=False)
    E: Subspace | None = None


def _theta_str(A, theta: LinearMap) -> dict:
    return {A.format_vector(s): A.format_vector(theta(s)) for s in theta.source.basis}


def classify(A: AlgebraTable, levi: LeviReport | None = None) -> Classification:
    if levi is None:
        levi = levi_subalgebra(A)
    S, R, N, I = levi.S, levi.R, levi.N, levi.I
    homs = hom_space(A, S, I)
    J = images_sum(A, homs)
    E = E_subspace(A, S, N, I)
    crit = criterion(A, S, E, J)
    try:
        dec = canonical_decomposition(A, S, I)
    except NonSplit:
        dec = None
    certified, cert_note = absolutely_irreducible(A, S, J)
    pred = {
        "J = 0": J.is_zero(),
        "[J,R] = 0": subspace_product(A, J, R).is_zero(),
        "[S,R] = 0": subspace_product(A, S, R).is_zero(),
        "[S,E] = J": crit.holds,
        "absolutely irreducible": certified,
        "E = I": E == I,
    }
    ev = {"hom_dim": len(homs), "certification": cert_note,
          "dim [S,E]": crit.SE.dim, "dim J": J.dim}
    common = dict(levi=levi, decomposition=dec, E=E)

    if J.is_zero():
        ev["reason"] = "Hom_S(S, I) = 0: every Levi subalgebra is an inner conjugate"
        return Classification(Verdict.INNER_CONJUGATE, pred, ev, **common)

    if certified and crit.holds:
        tau = homs[0]
        conj = find_inner_conjugator(A, S, tau, E, dec)
        ev["reason"] = "[S,E] = J with absolutely irreducible components"
        ev["sample tau"] = _theta_str(A, tau)
        ev["conjugator b"] = A.format_vector(conj.b)
        ev["conjugator route"] = conj.route
        return Classification(Verdict.INNER_CONJUGATE, pred, ev, theta=tau, conjugator=conj, **common)

    # field-independent non-conjugacy certificates
    obstruction = None
    for th in homs:
        obstruction = nonconjugacy_obstruction(A, S, th, R, N, I)
        if obstruction is not None:
            break

    if certified:
        if pred["[J,R] = 0"]:
            theta = homs[0]
            phi = exp_D(A, S, la.zero_vec(A.dim), theta, R, J)
            St = s_theta(A, S, theta, R)
            if phi.apply(S) != St:
                raise PostconditionFailed("exp(delta_theta)(S) != S_theta")
            ev["reason"] = "[S,E] != J and [J,R] = 0: conjugate by exp(D), not by inner automorphisms"
            ev["theta"] = _theta_str(A, theta)
            return Classification(Verdict.CONJUGATE_NON_INNER, pred, ev, theta=theta,
                                  automorphism=phi, **common)
        if obstruction is not None:
            return _non_conjugate(A, pred, ev, obstruction, common)
        ev["reason"] = "[S,E] != J with absolutely irreducible components"
        ev["theta"] = _theta_str(A, homs[0])
        return Classification(Verdict.EXISTS_NON_INNER_PAIR, pred, ev, theta=homs[0], **common)

    if obstruction is not None:
        return _non_conjugate(A, pred, ev, obstruction, common)
    ev["reason"] = "absolute irreducibility not certified over Q; " + cert_note
    return Classification(Verdict.UNDETERMINED, pred, ev, **common)


def _non_conjugate(A, pred, ev, ob: Obstruction, common) -> Classification:
    ev["reason"] = "automorphism invariant differs between S and S_theta"
    ev["theta"] = _theta_str(A, ob.theta)
    ev["invariant"] = ob.invariant
    ev["value on S"] = ob.value_S
    ev["value on S_theta"] = ob.value_S_theta
    if ob.p is not None:
        ev["p"] = A.format_vector(ob.p)
    return Classification(Verdict.EXISTS_NON_CONJUGATE_PAIR, pred, ev, theta=ob.theta,
                          obstruction=ob, **common)


# -- adjoining a copy of S ---------------------------------------------------

def adjoin_copy_of_levi(G: AlgebraTable, S: Subspace, M: Subspace, p, names=None,
                 name: str = "") -> AlgebraTable:
    """Leibniz algebra on S + M + I with I a copy of S and [i, p] = i.

    Requires M = N + <p>, N = [M, M], [S, p] = 0 and [S, x] != 0 for nonzero x in N.
    """
    p = la.vec(p)
    n = G.dim
    if not (G.verified and is_antisymmetric(G, G.full)):
        raise HypothesisFailed("G is not a Lie algebra")
    if not (S.intersect(M).is_zero() and (S + M).is_full()):
        raise HypothesisFailed("G != S + M")
    if not (subspace_product(G, G.full, M) <= M and subspace_product(G, M, G.full) <= M):
        raise HypothesisFailed("M is not an ideal")
    if not subspace_product(G, S, S) <= S:
        raise HypothesisFailed("S is not a subalgebra")
    N = subspace_product(G, M, M)
    if not M.contains(p) or N.contains(p) or M.dim != N.dim + 1:
        raise HypothesisFailed("M != N + <p> with N = [M, M]")
    if any(any(bracket(G, s, p)) for s in S.basis):
        raise HypothesisFailed("[S, p] != 0")
    # x -> ([s, x])_s must be injective on N
    cols = [[c for s in S.basis for c in bracket(G, s, x)] for x in N.basis]
    if cols and la.rank(cols, len(cols[0])) != N.dim:
        raise HypothesisFailed("[S, x] = 0 for some nonzero x in N")
    k = S.dim
    names = list(names or [f"i{a + 1}" for a in range(k)])
    B = [list(v) for v in S.basis + N.basis] + [list(p)]
    Binv = la.inverse(B)
    total = n + k
    prods = {}
    for i in range(n):
        for j in range(n):
            v = G.product(i, j)
            if any(v):
                prods[i, j] = list(v) + [la.ZERO] * k
    for a in range(k):
        for j in range(n):
            y = la.unit_vec(n, j)
            c = la.vecmat(y, Binv, n)
            yS = la.lincomb(c[:k], S.basis, n)
            img = [la.ZERO] * total
            sc = S.coords(bracket(G, S.basis[a], yS))
            for b, cb in enumerate(sc):
                img[n + b] += cb
            img[n + a] += c[-1]
            if any(img):
                prods[n + a, j] = img
    L = AlgebraTable.from_products(list(G.basis_names) + names, prods, name)
    if not L.verified:
        raise PostconditionFailed("constructed table fails the Leibniz identity")
    return L


# alias kept for callers of the original interface name
build_prop38 = adjoin_copy_of_levi
