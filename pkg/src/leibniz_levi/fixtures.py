"""Embedded fixture corpus and algebra generators."""
from __future__ import annotations

import random
from fractions import Fraction

from . import linalg as la
from .core import AlgebraTable, bracket, verify_leibniz
from .errors import NotAModule

SL2_NAMES = ("h", "e", "f")


def sl2(names=SL2_NAMES, name="sl2") -> AlgebraTable:
    h, e, f = names
    return AlgebraTable.from_named(names, {
        (h, e): {e: 2}, (e, h): {e: -2},
        (h, f): {f: -2}, (f, h): {f: 2},
        (e, f): {h: 1}, (f, e): {h: -1},
    }, name)


def example_3_9() -> AlgebraTable:
    names = ("e1", "e2", "e3", "y4", "y5", "y6", "x7", "x8", "x9")
    rules = {}

    def anti(a, b, res):
        rules[a, b] = res
        rules[b, a] = {k: -Fraction(v) for k, v in res.items()}

    anti("e1", "e2", {"e2": 2})
    anti("e1", "e3", {"e3": -2})
    anti("e2", "e3", {"e1": 1})
    anti("e1", "y4", {"y4": 1})
    anti("e1", "y5", {"y5": -1})
    anti("e2", "y5", {"y4": 1})
    anti("e3", "y4", {"y5": 1})
    anti("y4", "y6", {"y4": 1})
    anti("y5", "y6", {"y5": 1})
    rules.update({
        ("x7", "e1"): {"x7": -2}, ("x7", "e3"): {"x8": 1}, ("x8", "e2"): {"x7": 2},
        ("x8", "e3"): {"x9": -2}, ("x9", "e1"): {"x9": 2}, ("x9", "e2"): {"x8": -1},
        ("x7", "y6"): {"x7": 1}, ("x8", "y6"): {"x8": 1}, ("x9", "y6"): {"x9": 1},
    })
    return AlgebraTable.from_named(names, rules, "example_3_9")


def L201() -> AlgebraTable:
    names = ("e", "f", "h", "x0", "x1", "x2", "y1", "y2")
    return AlgebraTable.from_named(names, {
        ("e", "h"): {"e": 2}, ("h", "f"): {"f": 2}, ("e", "f"): {"h": 1},
        ("h", "e"): {"e": -2}, ("f", "h"): {"f": -2}, ("f", "e"): {"h": -1},
        ("x1", "e"): {"x0": -2}, ("x2", "e"): {"x1": -2}, ("x0", "f"): {"x1": 1},
        ("x1", "f"): {"x2": 1}, ("x0", "h"): {"x0": 2}, ("x2", "h"): {"x2": -2},
        ("e", "y1"): {"x0": 2}, ("f", "y1"): {"x2": 1}, ("h", "y1"): {"x1": 2},
        ("y1", "y2"): {"y1": 1}, ("y2", "y1"): {"y1": -1},
        ("x0", "y2"): {"x0": 1}, ("x1", "y2"): {"x1": 1}, ("x2", "y2"): {"x2": 1},
    }, "L201")


def adjoint_action(S: AlgebraTable) -> list:
    """Right-module matrices v -> [v, s] of S on itself."""
    n = S.dim
    return [[list(bracket(S, la.unit_vec(n, i), la.unit_vec(n, a))) for i in range(n)]
            for a in range(n)]


def direct_sum_action(*actions) -> list:
    k = len(actions[0])
    out = []
    for a in range(k):
        blocks = [act[a] for act in actions]
        m = sum(len(b) for b in blocks)
        M = la.zeros(m, m)
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, c in enumerate(row):
                    M[off + i][off + j] = c
            off += len(b)
        out.append(M)
    return out


def trivial_action(S: AlgebraTable, m: int) -> list:
    return [la.zeros(m, m) for _ in range(S.dim)]


def sl2_standard_action() -> list:
    """2-dim irreducible right module of sl2 in the (h, e, f) basis."""
    # v.s = v M(s) with M(s) = -transpose of the usual left matrix keeps the right identity
    left = {
        "h": [[1, 0], [0, -1]],
        "e": [[0, 1], [0, 0]],
        "f": [[0, 0], [1, 0]],
    }
    return [[[-Fraction(left[s][j][i]) for j in range(2)] for i in range(2)] for s in SL2_NAMES]


def conjugate_action(action: list, P: list) -> list:
    """Change of basis v -> v P on the module."""
    Pinv = la.inverse(P)
    return [la.matmul(la.matmul(P, M), Pinv) for M in action]


def check_module(S: AlgebraTable, action: list) -> bool:
    """v.[x,y] = (v.x).y - (v.y).x for all basis x, y."""
    n = S.dim
    for a in range(n):
        for b in range(n):
            lhs = la.zeros(len(action[0]), len(action[0]))
            for k, c in enumerate(S.product(a, b)):
                if c:
                    lhs = la.mat_add(lhs, la.mat_scale(c, action[k]))
            rhs = la.mat_add(la.matmul(action[a], action[b]),
                             la.mat_scale(-1, la.matmul(action[b], action[a])))
            if lhs != rhs:
                return False
    return True


def hemisemidirect(S: AlgebraTable, action: list, module_names=None, name="") -> AlgebraTable:
    """S + V with [s+v, s'+v'] = [s, s'] + v.s' and zero left action on V."""
    if len(action) != S.dim:
        raise NotAModule("need one action matrix per basis element of S")
    m = len(action[0]) if action else 0
    if not check_module(S, action):
        raise NotAModule("action matrices violate the right-module identity")
    n = S.dim
    names = list(S.basis_names) + list(module_names or [f"v{i + 1}" for i in range(m)])
    prods = {}
    for i in range(n):
        for j in range(n):
            p = S.product(i, j)
            if any(p):
                prods[i, j] = list(p) + [Fraction(0)] * m
    for i in range(m):
        for a in range(n):
            row = action[a][i]
            if any(row):
                prods[n + i, a] = [Fraction(0)] * n + list(row)
    return AlgebraTable.from_products(names, prods, name)


def hemi_sl2_adjoint() -> AlgebraTable:
    S = sl2()
    return hemisemidirect(S, adjoint_action(S), ["vh", "ve", "vf"], "hemi_sl2_adjoint")


def hemi_sl2_double() -> AlgebraTable:
    S = sl2()
    ad = adjoint_action(S)
    return hemisemidirect(S, direct_sum_action(ad, ad),
                          ["vh", "ve", "vf", "wh", "we", "wf"], "hemi_sl2_double")


CORPUS = {
    "example_3_9": example_3_9,
    "L201": L201,
    "hemi_sl2_adjoint": hemi_sl2_adjoint,
    "hemi_sl2_double": hemi_sl2_double,
}


def corpus() -> dict:
    out = {}
    for name, build in CORPUS.items():
        A = build()
        if verify_leibniz(A):
            raise AssertionError(f"embedded fixture {name} fails the Leibniz identity")
        out[name] = A
    return out


def random_invertible(rng: random.Random, m: int, lo=-2, hi=2) -> list:
    while True:
        P = [[Fraction(rng.randint(lo, hi)) for _ in range(m)] for _ in range(m)]
        if la.inverse(P) is not None:
            return P


MODULE_KINDS = ("trivial1", "standard", "adjoint")


def random_hemisemidirect(rng: random.Random, max_module_dim: int = 6) -> AlgebraTable:
    """sl2 acting on a random sum of trivial, standard and adjoint modules, in a scrambled basis."""
    S = sl2()
    pieces = []
    size = 0
    while True:
        kind = rng.choice(MODULE_KINDS)
        d = {"trivial1": 1, "standard": 2, "adjoint": 3}[kind]
        if size + d > max_module_dim:
            break
        pieces.append(kind)
        size += d
        if rng.random() < 0.35:
            break
    if not pieces:
        pieces = ["trivial1"]
        size = 1
    acts = []
    for kind in pieces:
        if kind == "trivial1":
            acts.append(trivial_action(S, 1))
        elif kind == "standard":
            acts.append(sl2_standard_action())
        else:
            acts.append(adjoint_action(S))
    action = direct_sum_action(*acts)
    action = conjugate_action(action, random_invertible(rng, size))
    return hemisemidirect(S, action, name="random_hemi_" + "_".join(pieces))


def change_basis(A: AlgebraTable, P: list, name: str | None = None) -> AlgebraTable:
    """Isomorphic table in the basis b_i = sum_k P[i][k] e_k."""
    Pinv = la.inverse(P)
    if Pinv is None:
        raise ValueError("change of basis matrix is singular")
    n = A.dim
    prods = {}
    for i in range(n):
        for j in range(n):
            v = la.vecmat(bracket(A, tuple(P[i]), tuple(P[j])), Pinv, n)
            if any(v):
                prods[i, j] = v
    names = [f"b{i + 1}" for i in range(n)]
    return AlgebraTable.from_products(names, prods, name if name is not None else A.name)
