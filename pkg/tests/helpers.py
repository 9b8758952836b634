from leibniz_levi.core import AlgebraTable, Subspace


def span(A, *names):
    return Subspace.span(A.dim, [A.e(n) for n in names])


def names(A, U):
    return [A.format_vector(v) for v in U.basis]


def reorder(A: AlgebraTable, order) -> AlgebraTable:
    """Same algebra with the basis listed in ``order`` (a permutation of names)."""
    idx = [A.index(nm) for nm in order]
    C = tuple(tuple(tuple(A.constants[i][j][k] for k in idx) for j in idx) for i in idx)
    return AlgebraTable(tuple(order), C, A.name)


_UNITS = "1ijk"


def _quat_mul():
    mul = {}
    for a in _UNITS:
        mul["1", a] = mul[a, "1"] = (1, a)
    for a in "ijk":
        mul[a, a] = (-1, "1")
    for a, b, c in ("ijk", "jki", "kij"):
        mul[a, b] = (1, c)
        mul[b, a] = (-1, c)
    return mul


def quaternion_hemi():
    """so(3) over Q (pure quaternions, commutator bracket) acting on H by right multiplication.

    H is simple over Q but its endomorphism algebra is a division algebra of dim 4.
    """
    from fractions import Fraction

    from leibniz_levi.fixtures import hemisemidirect

    mul = _quat_mul()
    S = AlgebraTable.from_named(("i", "j", "k"), {
        (a, b): {mul[a, b][1]: 2 * mul[a, b][0]} for a in "ijk" for b in "ijk" if a != b}, "so3")
    action = []
    for s in "ijk":
        M = [[Fraction(0)] * 4 for _ in range(4)]
        for r, u in enumerate(_UNITS):
            sign, c = mul[u, s]
            M[r][_UNITS.index(c)] = Fraction(sign)
        action.append(M)
    return hemisemidirect(S, action, ["q1", "qi", "qj", "qk"], "quaternion")
