"""Block-symbol matrix: power laws, square bridge, pairing operator."""

from fractions import Fraction

import pytest

from liecert.algebra import AlgebraContext, killing_constant
from liecert.fock import FockSpace
from liecert.kmatrix import (
    CommPoly,
    blocks,
    build_k1,
    count_entry_classes,
    find_monic_quadratic,
    k_powers,
    pair_symbol,
    pairing_operator,
    quadratic_roots,
    verify_entry_content,
    verify_entry_counts,
    verify_equivariance,
    verify_no_linear_relation,
    verify_power_symmetries,
    verify_square_bridge,
    verify_symbol_proportionality,
)

INSTANCES = [(1, -1), (2, 1), (2, -1), (3, 1), (3, -1)]
IDS = ["sp2", "so4", "sp4", "so6", "sp6"]


def test_symbol_canonicalization():
    so = AlgebraContext(2, 1)
    sp = AlgebraContext(2, -1)
    # B/C symbols: zero on the diagonal for eps=+1, symmetric for eps=-1
    assert CommPoly.symbol(so.eps, "B", 1, 1).is_zero()
    assert CommPoly.symbol(so.eps, "B", 2, 1) == -1 * CommPoly.symbol(so.eps, "B", 1, 2)
    assert CommPoly.symbol(sp.eps, "C", 2, 1) == CommPoly.symbol(sp.eps, "C", 1, 2)
    # A symbols are free
    assert CommPoly.symbol(so.eps, "A", 2, 1) != CommPoly.symbol(so.eps, "A", 1, 2)


def test_commpoly_ring_is_commutative():
    a = CommPoly.symbol(1, "A", 1, 2)
    b = CommPoly.symbol(1, "B", 1, 2)
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b


@pytest.mark.parametrize("n,eps", INSTANCES, ids=IDS)
def test_k1_shape_and_blocks(n, eps):
    ctx = AlgebraContext(n, eps)
    k1 = build_k1(ctx)
    assert k1.shape() == (2 * n, 2 * n)
    a, b, c, d = blocks(ctx, k1)
    for i in range(n):
        for j in range(n):
            assert a[i, j] == CommPoly.symbol(eps, "A", i + 1, j + 1)
            assert b[i, j] == CommPoly.symbol(eps, "B", i + 1, j + 1)
            assert c[i, j] == CommPoly.symbol(eps, "C", i + 1, j + 1)
            assert d[i, j] == -1 * a[j, i]


@pytest.mark.parametrize("n,eps", INSTANCES, ids=IDS)
def test_power_symmetry_laws_to_m5(n, eps):
    """D_m = (-1)^m A_m^t, B/C eps-parity laws, commutation, induction."""
    ctx = AlgebraContext(n, eps)
    ok, checked, failures = verify_power_symmetries(ctx, 5)
    assert ok, failures
    assert checked > 0


def test_even_power_transpose_sign_is_positive():
    # D_2 = +A_2^t: the parity law, not a fixed minus sign
    ctx = AlgebraContext(2, 1)
    k2 = k_powers(ctx, 2)[1]
    a2, b2, c2, d2 = blocks(ctx, k2)
    for i in range(2):
        for j in range(2):
            assert d2[i, j] == a2[j, i]


@pytest.mark.parametrize("n,eps", INSTANCES, ids=IDS)
def test_square_bridge(n, eps):
    """K1^2 = (I2/2n) Id + raised traceless family, entry by entry."""
    ctx = AlgebraContext(n, eps)
    ok, failures = verify_square_bridge(ctx)
    assert ok, failures


@pytest.mark.parametrize("n,eps,count1,count2", [
    (1, -1, 3, 1),
    (2, 1, 6, 10),
    (2, -1, 10, 6),
    (3, 1, 15, 21),
    (3, -1, 21, 15),
    (4, 1, 28, 36),
    (4, -1, 36, 28),
], ids=["sp2", "so4", "sp4", "so6", "sp6", "so8", "sp8"])
def test_entry_counts(n, eps, count1, count2):
    ctx = AlgebraContext(n, eps)
    res = verify_entry_counts(ctx)
    assert res["ok"], res
    assert res["count_1"] == count1 == ctx.dim
    assert res["count_2"] == count2 == 1 + res["target_dim"]
    km = k_powers(ctx, 2)
    assert count_entry_classes(ctx, km[0]) == count1
    assert count_entry_classes(ctx, km[1]) == count2


@pytest.mark.parametrize("n,eps", INSTANCES, ids=IDS)
def test_pair_symbol_round_trip(n, eps):
    ctx = AlgebraContext(n, eps)
    N = 2 * n
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            assert pair_symbol(ctx, b, a) == -eps * pair_symbol(ctx, a, b)


@pytest.mark.parametrize("n,eps,constant", [
    (1, -1, Fraction(1, 8)),
    (2, 1, Fraction(1, 4)),
    (2, -1, Fraction(1, 12)),
    (3, 1, Fraction(1, 8)),
    (3, -1, Fraction(1, 16)),
], ids=IDS)
def test_pairing_matrix_proportionality(n, eps, constant):
    """Dual-basis pairing matrix = K1 transposed / (4(n - eps))."""
    ctx = AlgebraContext(n, eps)
    ok, got, failures = verify_symbol_proportionality(ctx)
    assert ok, failures
    assert got == constant == Fraction(1, killing_constant(ctx))


@pytest.mark.parametrize("n,eps,b,roots", [
    (1, -1, Fraction(3, 256), (Fraction(-1, 16), Fraction(-3, 16))),
    (2, 1, Fraction(-3, 64), (Fraction(1, 8), Fraction(-3, 8))),
    (2, -1, Fraction(5, 576), (Fraction(-1, 24), Fraction(-5, 24))),
    (3, 1, Fraction(-5, 256), (Fraction(1, 16), Fraction(-5, 16))),
    (3, -1, Fraction(7, 1024), (Fraction(-1, 32), Fraction(-7, 32))),
], ids=IDS)
def test_pairing_operator_quadratic(n, eps, b, roots):
    """O^2 + O/4 + b = 0 exactly; both roots rational."""
    ctx = AlgebraContext(n, eps)
    space = FockSpace(n, eps)
    grid = pairing_operator(ctx, space)
    qa, qb, _square = find_monic_quadratic(ctx, space, grid)
    assert qa == Fraction(1, 4)
    assert qb == b
    got = quadratic_roots(qa, qb)
    assert got is not None
    assert sorted(got) == sorted(roots)
    assert verify_no_linear_relation(ctx, space, grid)


def test_quadratic_roots_irrational_case():
    assert quadratic_roots(Fraction(0), Fraction(-2)) is None
    assert quadratic_roots(Fraction(-3), Fraction(2)) == (Fraction(2), Fraction(1))


@pytest.mark.parametrize("n,eps", [(1, -1), (2, 1), (2, -1)],
                         ids=["sp2", "so4", "sp4"])
def test_pairing_equivariance(n, eps):
    """[O, x (x) 1 + 1 (x) phi(x)] = 0 for every basis generator x."""
    ctx = AlgebraContext(n, eps)
    space = FockSpace(n, eps)
    grid = pairing_operator(ctx, space)
    ok, checked, failures = verify_equivariance(ctx, space, grid)
    assert ok, failures
    assert checked == ctx.dim * (2 * n) ** 2


@pytest.mark.parametrize("n,eps", [(1, -1), (2, 1), (2, -1)],
                         ids=["sp2", "so4", "sp4"])
def test_pairing_entry_content(n, eps):
    """Residual entries vanish as operators; their degree-2 parts live in
    the invariant line plus the target eigenspace only."""
    ctx = AlgebraContext(n, eps)
    space = FockSpace(n, eps)
    grid = pairing_operator(ctx, space)
    qa, qb, _ = find_monic_quadratic(ctx, space, grid)
    ok, checked, failures = verify_entry_content(ctx, space, qa, qb)
    assert ok, failures
    assert checked == (2 * n) ** 2
