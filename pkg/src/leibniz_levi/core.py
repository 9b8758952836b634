"""Structure-constant algebras, canonical subspaces and linear maps.

Conventions
-----------
* Vectors are tuples of ``Fraction`` in ambient coordinates.
* A :class:`Subspace` stores its basis in reduced row-echelon form, so two
  subspaces are equal exactly when their dataclass fields are equal.
* Linear maps act on row vectors: ``matrix[i]`` holds the image of the
  i-th source basis row in target coordinates, and composition multiplies
  matrices left to right.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from . import linalg as la
from .errors import NotNilpotent, PreconditionFailed
from .linalg import ONE, ZERO


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [v for v in vectors if any(v)]
        for v in rows:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
        R, piv = la.rref(rows, n)
        return cls(n, tuple(tuple(r) for r in R), tuple(piv))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(la.unit_vec(n, i) for i in range(n)), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of v after eliminating the pivot columns."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, a in enumerate(row):
                    if a:
                        out[j] -= c * a
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence) -> tuple:
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def from_coords(self, c: Sequence) -> tuple:
        return la.lincomb(c, self.basis, self.ambient_dim)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        # a.U = b.W  <=>  [U; -W]^T (a, b) = 0
        k = self.dim
        cols = list(self.basis) + [la.scale(-1, w) for w in other.basis]
        sols = la.nullspace(la.transpose(cols), len(cols))
        return Subspace.span(self.ambient_dim,
                             (la.lincomb(s[:k], self.basis, self.ambient_dim) for s in sols))

    def complement_indices(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def complement(self) -> "Subspace":
        """Span of the standard basis vectors at non-pivot columns."""
        n = self.ambient_dim
        return Subspace.span(n, (la.unit_vec(n, i) for i in self.complement_indices()))

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


@dataclass(frozen=True)
class LinearMap:
    source: Subspace
    target: Subspace
    matrix: tuple

    def __post_init__(self):
        if len(self.matrix) != self.source.dim or any(len(r) != self.target.dim for r in self.matrix):
            raise ValueError("matrix shape does not match source/target ranks")

    @classmethod
    def make(cls, source: Subspace, target: Subspace, matrix) -> "LinearMap":
        return cls(source, target, la.freeze(matrix))

    @classmethod
    def endo(cls, matrix) -> "LinearMap":
        n = len(matrix)
        full = Subspace.full(n)
        return cls(full, full, la.freeze(matrix))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.endo(la.identity(n))

    @classmethod
    def zero(cls, source: Subspace, target: Subspace) -> "LinearMap":
        return cls.make(source, target, la.zeros(source.dim, target.dim))

    @classmethod
    def from_images(cls, source: Subspace, target: Subspace, images: Sequence[Sequence]) -> "LinearMap":
        """Map sending the i-th source basis row to ``images[i]`` (ambient vectors)."""
        return cls.make(source, target, [target.coords(v) for v in images])

    def __call__(self, v: Sequence) -> tuple:
        c = self.source.coords(v)
        return self.target.from_coords(la.vecmat(c, self.matrix, self.target.dim))

    def images(self) -> list:
        return [self.target.from_coords(row) for row in self.matrix]

    def image(self) -> Subspace:
        return Subspace.span(self.target.ambient_dim, self.images())

    def is_zero(self) -> bool:
        return la.is_zero_mat(self.matrix)

    def compose(self, first: "LinearMap") -> "LinearMap":
        """self after first."""
        if first.target != self.source:
            raise ValueError("cannot compose: target/source mismatch")
        return LinearMap.make(first.source, self.target, la.matmul(first.matrix, self.matrix))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check(other)
        return LinearMap.make(self.source, self.target, la.mat_add(self.matrix, other.matrix))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scaled(-1)

    def scaled(self, c) -> "LinearMap":
        return LinearMap.make(self.source, self.target, la.mat_scale(la.frac(c), self.matrix))

    def restrict(self, U: Subspace) -> "LinearMap":
        if not U <= self.source:
            raise ValueError("restriction to a subspace outside the source")
        return LinearMap.from_images(U, self.target, [self(u) for u in U.basis])

    def corestrict(self, W: Subspace) -> "LinearMap":
        return LinearMap.from_images(self.source, W, self.images())

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def power(self, k: int) -> "LinearMap":
        out = LinearMap.make(self.source, self.source, la.identity(self.source.dim))
        for _ in range(k):
            out = self.compose(out)
        return out

    def _check(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps have different source/target")


class Violation(NamedTuple):
    triple: tuple
    left: tuple
    right: tuple


@dataclass(frozen=True)
class AlgebraTable:
    """Finite-dimensional algebra given by structure constants.

    ``constants[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
    """

    basis_names: tuple
    constants: tuple
    name: str = ""
    _nz: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis names must be distinct")
        if len(self.constants) != n or any(
                len(row) != n or any(len(c) != n for c in row) for row in self.constants):
            raise ValueError("structure tensor shape does not match dimension")
        nz = []
        for i in range(n):
            for j in range(n):
                terms = tuple((k, c) for k, c in enumerate(self.constants[i][j]) if c)
                if terms:
                    nz.append((i, j, terms))
        object.__setattr__(self, "_nz", tuple(nz))

    @classmethod
    def from_products(cls, names: Sequence[str], products: dict, name: str = "") -> "AlgebraTable":
        """``products`` maps index pairs (i, j) to the ambient vector [e_i, e_j]."""
        n = len(names)
        T = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), v in products.items():
            T[i][j] = [la.frac(c) for c in v]
        return cls(tuple(names), tuple(tuple(tuple(c) for c in row) for row in T), name)

    @classmethod
    def from_named(cls, names: Sequence[str], rules: dict, name: str = "") -> "AlgebraTable":
        """``rules`` maps name pairs to {basis name: coefficient}."""
        idx = {b: i for i, b in enumerate(names)}
        n = len(names)
        prods = {}
        for (a, b), res in rules.items():
            v = [ZERO] * n
            for nm, c in res.items():
                v[idx[nm]] += la.frac(c)
            prods[idx[a], idx[b]] = v
        return cls.from_products(names, prods, name)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def e(self, name_or_index) -> tuple:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return la.unit_vec(self.dim, i)

    def vector(self, terms: dict) -> tuple:
        """Ambient vector from {basis name: coefficient}."""
        v = [ZERO] * self.dim
        for nm, c in terms.items():
            v[self.index(nm)] += la.frac(c)
        return tuple(v)

    def product(self, i: int, j: int) -> tuple:
        return tuple(self.constants[i][j])

    def nonzero_products(self) -> tuple:
        return self._nz

    @cached_property
    def verified(self) -> bool:
        return not verify_leibniz(self)

    @cached_property
    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def format_vector(self, v: Sequence) -> str:
        return format_vector(v, self.basis_names)

    def renamed(self, name: str) -> "AlgebraTable":
        return AlgebraTable(self.basis_names, self.constants, name)


def format_vector(v: Sequence, names: Sequence[str]) -> str:
    parts = []
    for c, nm in zip(v, names):
        if not c:
            continue
        if c == 1:
            s = nm
        elif c == -1:
            s = "-" + nm
        else:
            s = f"{c}*{nm}"
        parts.append(s)
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


# -- products ---------------------------------------------------------------

def _check_len(A: AlgebraTable, *vs):
    for v in vs:
        if len(v) != A.dim:
            raise ValueError(f"vector of length {len(v)} for an algebra of dimension {A.dim}")


def bracket(A: AlgebraTable, x: Sequence, y: Sequence) -> tuple:
    _check_len(A, x, y)
    out = [ZERO] * A.dim
    for i, j, terms in A._nz:
        a = x[i]
        if a:
            b = y[j]
            if b:
                ab = a * b
                for k, c in terms:
                    out[k] += ab * c
    return tuple(out)


def verify_leibniz(A: AlgebraTable) -> list:
    """All basis triples violating [x,[y,z]] = [[x,y],z] - [[x,z],y]."""
    n = A.dim
    E = [la.unit_vec(n, i) for i in range(n)]
    P = [[A.product(i, j) for j in range(n)] for i in range(n)]
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        left = bracket(A, E[i], P[j][k])
        right = la.sub(bracket(A, P[i][j], E[k]), bracket(A, P[i][k], E[j]))
        if left != right:
            bad.append(Violation((i, j, k), left, right))
    return bad


def subspace_product(A: AlgebraTable, U: Subspace, V: Subspace) -> Subspace:
    if U.ambient_dim != A.dim or V.ambient_dim != A.dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.span(A.dim, (bracket(A, u, v) for u in U.basis for v in V.basis))


def is_subalgebra(A: AlgebraTable, U: Subspace) -> bool:
    return subspace_product(A, U, U) <= U


def is_ideal(A: AlgebraTable, U: Subspace, within: Subspace | None = None) -> bool:
    W = A.full if within is None else within
    return subspace_product(A, U, W) <= U and subspace_product(A, W, U) <= U


def ideal_closure(A: AlgebraTable, U: Subspace, within: Subspace | None = None) -> Subspace:
    """Smallest two-sided ideal of ``within`` (default: the algebra) containing U."""
    W = A.full if within is None else within
    cur = U
    while True:
        nxt = cur + subspace_product(A, cur, W) + subspace_product(A, W, cur)
        if nxt == cur:
            return cur
        cur = nxt


def right_mult(A: AlgebraTable, a: Sequence) -> LinearMap:
    """R_a : x -> [x, a] on the whole algebra."""
    n = A.dim
    return LinearMap.endo([bracket(A, la.unit_vec(n, i), a) for i in range(n)])


def left_mult(A: AlgebraTable, a: Sequence) -> LinearMap:
    n = A.dim
    return LinearMap.endo([bracket(A, a, la.unit_vec(n, i)) for i in range(n)])


def structure_constants(A: AlgebraTable, U: Subspace) -> list:
    """c[a][b] = coordinates of [u_a, u_b] in U; U must be a subalgebra."""
    return [[U.coords(bracket(A, u, w)) for w in U.basis] for u in U.basis]


def restricted_right_mult(A: AlgebraTable, a: Sequence, U: Subspace) -> list:
    """Matrix of x -> [x, a] on U (row convention, U coordinates)."""
    return [list(U.coords(bracket(A, u, a))) for u in U.basis]


def killing_matrix(A: AlgebraTable, U: Subspace | None = None) -> list:
    """Gram matrix of tr(R_x R_y) on a subalgebra U (default: whole algebra)."""
    U = A.full if U is None else U
    ops = [restricted_right_mult(A, u, U) for u in U.basis]
    k = len(ops)
    return [[la.trace_product(ops[a], ops[b]) for b in range(k)] for a in range(k)]


# -- quotients --------------------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    """L / U realised on the standard basis vectors at non-pivot columns of U."""

    algebra: AlgebraTable
    projection: LinearMap
    ideal: Subspace
    columns: tuple

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.columns)

    def lift(self, q: Sequence) -> tuple:
        v = [ZERO] * self.ideal.ambient_dim
        for c, a in zip(self.columns, q):
            v[c] = a
        return tuple(v)

    def project_subspace(self, U: Subspace) -> Subspace:
        return Subspace.span(self.algebra.dim, (self.project(u) for u in U.basis))

    def preimage(self, W: Subspace) -> Subspace:
        return Subspace.span(self.ideal.ambient_dim,
                             [self.lift(w) for w in W.basis] + list(self.ideal.basis))


def quotient_algebra(A: AlgebraTable, ideal: Subspace) -> Quotient:
    if not is_ideal(A, ideal):
        raise PreconditionFailed("quotient_algebra: subspace is not a two-sided ideal")
    cols = ideal.complement_indices()
    m = len(cols)
    prods = {}
    for a, i in enumerate(cols):
        for b, j in enumerate(cols):
            r = ideal.reduce(A.product(i, j))
            v = [r[c] for c in cols]
            if any(v):
                prods[a, b] = v
    Q = AlgebraTable.from_products([A.basis_names[c] for c in cols], prods,
                                   f"{A.name}/ideal" if A.name else "")
    proj = [[ideal.reduce(la.unit_vec(A.dim, i))[c] for c in cols] for i in range(A.dim)]
    projection = LinearMap.make(A.full, Subspace.full(m), proj)
    return Quotient(Q, projection, ideal, cols)


# -- automorphisms ----------------------------------------------------------

def exp_nilpotent(T: LinearMap) -> LinearMap:
    """Exact exp of a nilpotent endomorphism; raises NotNilpotent otherwise."""
    if not T.is_endomorphism():
        raise PreconditionFailed("exp_nilpotent needs an endomorphism")
    n = T.source.dim
    M = [list(r) for r in T.matrix]
    total = la.identity(n)
    P = la.identity(n)
    for k in range(1, n + 1):
        P = la.matmul(P, M)
        if la.is_zero_mat(P):
            break
        total = la.mat_add(total, la.mat_scale(Fraction(1, math.factorial(k)), P))
    else:
        if n:
            raise NotNilpotent(f"operator power {n} is nonzero")
    return LinearMap.make(T.source, T.target, total)


def is_automorphism(A: AlgebraTable, phi: LinearMap) -> bool:
    n = A.dim
    if phi.source != A.full or phi.target != A.full:
        return False
    if la.inverse(phi.matrix) is None:
        return False
    imgs = [phi(la.unit_vec(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if phi(A.product(i, j)) != bracket(A, imgs[i], imgs[j]):
                return False
    return True


def apply_to_subspace(phi: LinearMap, U: Subspace) -> Subspace:
    return Subspace.span(phi.target.ambient_dim, (phi(u) for u in U.basis))
