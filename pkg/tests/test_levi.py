import random

import pytest

from leibniz_levi import linalg as la
from leibniz_levi.core import AlgebraTable, Subspace, is_subalgebra
from leibniz_levi.fixtures import change_basis, random_hemisemidirect, random_invertible, sl2
from leibniz_levi.levi import levi_subalgebra, verify_levi
from leibniz_levi.radicals import solvable_radical

from helpers import span


def test_example_levi(ex39, levis):
    S = span(ex39, "e1", "e2", "e3")
    check = verify_levi(ex39, S)
    assert check.ok and check.killing_rank == 3
    assert levis["example_3_9"].S == S


def test_l201_levi(l201, levis):
    assert levis["L201"].S == span(l201, "e", "f", "h")


def test_verify_levi_failures(ex39):
    # <e1, y4> is a subalgebra but lies partly in R and has degenerate Killing form
    bad = verify_levi(ex39, span(ex39, "e1", "y4"))
    assert bad.subalgebra and not bad.semisimple and not bad.complement
    assert "semisimple" in bad.failures()
    # <e1, e2> is solvable, too small to complement R
    two = verify_levi(ex39, span(ex39, "e1", "e2"))
    assert two.subalgebra and not two.complement
    # e2 + y4 and friends: not closed
    skew = Subspace.span(9, [la.add(ex39.e("e2"), ex39.e("y6")), ex39.e("e1"), ex39.e("e3")])
    assert not verify_levi(ex39, skew).subalgebra


def test_semisimple_and_solvable_extremes():
    S = sl2()
    rep = levi_subalgebra(S)
    assert rep.S.is_full() and rep.R.is_zero()
    ab = AlgebraTable.from_products(["a", "b"], {})
    rep = levi_subalgebra(ab)
    assert rep.S.is_zero() and rep.R.is_full()


@pytest.mark.parametrize("seed", range(3))
def test_levi_in_scrambled_basis(fixtures, seed):
    rng = random.Random(100 + seed)
    for A in fixtures.values():
        B = change_basis(A, random_invertible(rng, A.dim))
        rep = levi_subalgebra(B)
        assert rep.S.dim == 3
        assert verify_levi(B, rep.S).ok
        assert is_subalgebra(B, rep.S)


def test_levi_random_hemisemidirect():
    rng = random.Random(7)
    for _ in range(10):
        A = random_hemisemidirect(rng)
        rep = levi_subalgebra(A)
        assert rep.S.dim == 3
        assert (rep.S + solvable_radical(A)).is_full()
