"""Graded Fock realizations: mode relations, dictionary, homomorphism."""

from fractions import Fraction

import pytest

from liecert.algebra import AlgebraContext, generator
from liecert.fock import (
    FockOperator,
    FockSpace,
    FockVector,
    anticommutator_op,
    commutator_op,
    graded_bracket_defect,
    quadratic_generator,
    realize,
    realized_basis,
    verify_homomorphism,
    verify_relations,
)

SPACES = [FockSpace(1, -1), FockSpace(2, 1), FockSpace(2, -1), FockSpace(3, 1)]


def _ids(space):
    return f"{'so' if space.eps == 1 else 'sp'}{2 * space.n}"


def test_statistics_labels():
    assert FockSpace(2, 1).statistics == "fermionic"
    assert FockSpace(2, -1).statistics == "bosonic"
    assert FockSpace(2, 1).fermionic


def test_fermionic_basis_is_complete():
    space = FockSpace(3, 1)
    states = space.basis_states()
    assert len(states) == 8
    assert len(space.check_states(2)) == 8


def test_bosonic_states_bounded_by_degree():
    space = FockSpace(2, -1)
    states = space.check_states(3)
    # occupation vectors with total degree <= 3: C(3+2,2) = 10
    assert len(states) == 10


def test_fermionic_nilpotence():
    space = FockSpace(2, 1)
    cre = FockOperator.creation(space, 1)
    assert (cre @ cre).is_zero()
    vac = FockVector.state(space, (0, 0))
    assert cre.apply(vac).amps  # nonzero on vacuum
    occ = FockVector.state(space, (1, 0))
    assert not cre.apply(occ).amps


def test_jordan_wigner_sign():
    space = FockSpace(2, 1)
    cre2 = FockOperator.creation(space, 2)
    occ = FockVector.state(space, (1, 0))
    out = cre2.apply(occ)
    assert out.amps == {(1, 1): Fraction(-1)}


def test_bosonic_ladder_normalization():
    space = FockSpace(1, -1)
    cre = FockOperator.creation(space, 1)
    ann = FockOperator.annihilation(space, 1)
    two = cre.apply(cre.apply(FockVector.state(space, (0,))))
    assert two.amps == {(2,): Fraction(1)}
    assert ann.apply(two).amps == {(1,): Fraction(2)}


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_mode_relations(space):
    """b_x b+_y + eps b+_y b_x = delta, like-type brackets vanish."""
    ok, checked, failures = verify_relations(space, 4)
    assert ok, failures
    assert checked == 3 * space.n * space.n
    for x in range(1, space.n + 1):
        defect = graded_bracket_defect(space, x, x)
        for op in defect.values():
            assert op.is_zero()


def test_mixed_relation_operator_form():
    space = FockSpace(2, 1)
    b1 = FockOperator.annihilation(space, 1)
    c1 = FockOperator.creation(space, 1)
    assert anticommutator_op(b1, c1) == FockOperator.identity(space)
    space_b = FockSpace(2, -1)
    b1 = FockOperator.annihilation(space_b, 1)
    c1 = FockOperator.creation(space_b, 1)
    assert commutator_op(b1, c1) == FockOperator.identity(space_b)


def test_quadratic_generator_shift():
    # mixed dictionary operator carries the -eps/2 diagonal shift
    space = FockSpace(2, 1)
    op = quadratic_generator(space, "mixed", 1, 1)
    vac = FockVector.state(space, (0, 0))
    out = op.apply(vac)
    assert out.amps == {(0, 0): Fraction(-1, 2)}


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_realization_is_homomorphism(space):
    ctx = AlgebraContext(space.n, space.eps)
    ok, checked, failures = verify_homomorphism(ctx, space, 4)
    assert ok, failures
    assert checked == ctx.dim * ctx.dim


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_realize_respects_index_symmetry(space):
    ctx = AlgebraContext(space.n, space.eps)
    N = 2 * space.n
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            assert realize(ctx, space, generator(ctx, b, a)) == \
                -ctx.eps * realize(ctx, space, generator(ctx, a, b))


def test_realized_basis_is_cached():
    ctx = AlgebraContext(2, 1)
    space = FockSpace(2, 1)
    assert realized_basis(ctx, space) is realized_basis(ctx, space)


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_quadratic_invariant_realizes_to_scalar(space):
    """phi(I2) = eps n(2n - eps)/2 times the identity, exactly."""
    from liecert.sympoly import quadratic_invariant, symmetrize_to_u

    ctx = AlgebraContext(space.n, space.eps)
    u = symmetrize_to_u(quadratic_invariant(ctx))
    ops = realized_basis(ctx, space)
    out = u.evaluate(ops, FockOperator.identity(space))
    scalar = Fraction(space.eps * space.n * (2 * space.n - space.eps), 2)
    assert out == scalar * FockOperator.identity(space)
