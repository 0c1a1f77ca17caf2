"""Degree-2 symmetric algebra: Casimir spectrum, projectors, identities."""

from fractions import Fraction

import pytest

from liecert.algebra import AlgebraContext, generator
from liecert.linalg import RationalMatrix, matvec, rank
from liecert.sympoly import (
    ad_sym2_matrix,
    adjoint_apply,
    casimir_adjoint,
    casimir_spectrum,
    casimir_sym2,
    closed_form_projection,
    contracted_square,
    from_vector,
    guard_dimension,
    identity_components,
    product_elements,
    product_pairs,
    project,
    projector,
    quadratic_invariant,
    sym2_dim,
    symmetrize_to_u,
    target_eigenvalue,
    to_vector,
    u_product,
)

SO4 = AlgebraContext(2, 1)
SP2 = AlgebraContext(1, -1)
SP4 = AlgebraContext(2, -1)


def test_sym2_dimension():
    assert sym2_dim(SO4) == 21
    assert sym2_dim(SP4) == 55
    assert sym2_dim(SP2) == 6


def test_vector_round_trip():
    t = product_pairs(SO4, (1, 2), (3, 4)) + 3 * product_pairs(SO4, (1, 3), (1, 3))
    assert from_vector(SO4, to_vector(t)) == t


def test_adjoint_matrix_matches_apply():
    for pair in SP4.basis[:4]:
        m = ad_sym2_matrix(SP4, pair)
        t = product_pairs(SP4, (1, 2), (2, 3))
        assert matvec(m, to_vector(t)) == to_vector(adjoint_apply(SP4, pair, t))


@pytest.mark.parametrize("ctx,expected", [
    (SP2, [0, 48]),
    (SO4, [0, 16, 24]),
    (SP4, [0, 16, 40, 64]),
    (AlgebraContext(3, 1), [0, 16, 24, 40]),
    (AlgebraContext(3, -1), [0, 24, 56, 80]),
], ids=["sp2", "so4", "sp4", "so6", "sp6"])
def test_casimir_spectrum_frozen(ctx, expected):
    """Exact eigenvalue lists from the minimal polynomial, in {0, 8n,
    16(n-2eps), 16n-8eps} whenever those values are distinct."""
    assert sorted(casimir_spectrum(ctx)) == sorted(expected)


def test_casimir_degree_one_eigenvalue():
    for ctx in (SP2, SO4, SP4):
        scale = 8 * (ctx.n - ctx.eps)
        assert casimir_adjoint(ctx) == Fraction(scale) * RationalMatrix.identity(ctx.dim)


def test_casimir_normalizations_proportional():
    for ctx in (SO4, SP4):
        scale = Fraction(8 * (ctx.n - ctx.eps))
        assert casimir_sym2(ctx, "metric") == scale * casimir_sym2(ctx, "killing")


def test_so2_is_rejected():
    so2 = AlgebraContext(1, 1)
    with pytest.raises(ValueError):
        casimir_sym2(so2)


def test_guard_dimension():
    guard_dimension(SO4, 21)
    with pytest.raises(ValueError):
        guard_dimension(SO4, 20)


@pytest.mark.parametrize("ctx,ranks", [
    (SO4, {0: 2, 16: 9, 24: 10}),
    (SP4, {0: 1, 16: 5, 40: 14, 64: 35}),
], ids=["so4", "sp4"])
def test_projector_ranks_frozen(ctx, ranks):
    d2 = sym2_dim(ctx)
    total = RationalMatrix.zero(d2, d2)
    spectrum = casimir_spectrum(ctx)
    assert set(spectrum) == set(ranks)
    for ev in spectrum:
        p = projector(ctx, ev)
        assert p @ p == p
        assert rank(p) == ranks[ev]
        total = total + p
    assert total == RationalMatrix.identity(d2)


def test_projectors_orthogonal_and_equivariant():
    spectrum = casimir_spectrum(SO4)
    projs = {ev: projector(SO4, ev) for ev in spectrum}
    for i, e1 in enumerate(spectrum):
        for e2 in spectrum[i + 1:]:
            assert (projs[e1] @ projs[e2]).is_zero()
    for pair in SO4.basis:
        adm = ad_sym2_matrix(SO4, pair)
        for p in projs.values():
            assert adm @ p == p @ adm


def test_target_eigenvalue():
    assert target_eigenvalue(SO4) == 16
    assert target_eigenvalue(SP4) == 16
    assert target_eigenvalue(SP2) is None
    assert target_eigenvalue(AlgebraContext(3, 1)) == 24


def test_invariant_is_killed_by_adjoint():
    for ctx in (SO4, SP4):
        inv = quadratic_invariant(ctx)
        for pair in ctx.basis:
            assert adjoint_apply(ctx, pair, inv).is_zero()
        assert project(ctx, 0, inv) == inv


def test_trace_of_contracted_squares_is_invariant():
    for ctx in (SO4, SP4):
        N = 2 * ctx.n
        acc = None
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                gi = ctx.ginv(b, a)
                if gi:
                    term = gi * contracted_square(ctx, a, b)
                    acc = term if acc is None else acc + term
        assert acc == quadratic_invariant(ctx)


def test_traceless_family_symmetry():
    for ctx in (SO4, SP4, SP2):
        comps = identity_components(ctx)
        for (a, b), e in comps.items():
            assert comps[(b, a)] == ctx.eps * e


def test_traceless_family_lives_in_target_eigenspace():
    for ctx in (SO4, SP4):
        t = target_eigenvalue(ctx)
        for e in identity_components(ctx).values():
            assert project(ctx, t, e) == e


def test_closed_form_projection_sign():
    """P(S_ab S_cd) equals minus the closed-form combination, exhaustively."""
    for ctx in (SO4, SP4):
        t = target_eigenvalue(ctx)
        pt = projector(ctx, t)
        N = 2 * ctx.n
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                for c in range(1, N + 1):
                    for d in range(1, N + 1):
                        lhs = matvec(pt, to_vector(product_pairs(ctx, (a, b), (c, d))))
                        rhs = to_vector(closed_form_projection(ctx, a, b, c, d))
                        assert lhs == [-v for v in rhs]


def test_closed_form_degenerate_instance():
    # sp(2): no target eigenvalue, family identically zero
    for e in identity_components(SP2).values():
        assert e.is_zero()
    for a in range(1, 3):
        for b in range(1, 3):
            assert closed_form_projection(SP2, a, b, a, b).is_zero()


def test_symmetrization_to_ordered_words():
    x = generator(SP4, 1, 2)
    y = generator(SP4, 2, 3)
    t = product_elements(x, y)
    u = symmetrize_to_u(t)
    # xy symmetrizes to (xy + yx)/2 in the ordered-word algebra
    half = Fraction(1, 2)
    diff = u - half * (u_product(x, y) + u_product(y, x))
    assert diff.is_zero()
