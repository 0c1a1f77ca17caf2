"""Anticommutator recursion: dictionary, parity laws, constraints."""

from fractions import Fraction

import pytest

from liecert.algebra import AlgebraContext
from liecert.fock import FockOperator, FockSpace
from liecert.recursion import (
    base_tensors,
    defining_representation_control,
    dictionary_tensors,
    step,
    tensors_up_to,
    verify_annihilators,
    verify_constraint_chain,
    verify_dictionary_reproduction,
    verify_level_two_collapse,
    verify_symmetry,
)

SPACES = [FockSpace(1, -1), FockSpace(2, 1), FockSpace(2, -1),
          FockSpace(3, 1), FockSpace(3, -1)]


def _ids(space):
    return f"{'so' if space.eps == 1 else 'sp'}{2 * space.n}"


def test_base_level_is_identity_grid():
    space = FockSpace(2, 1)
    t = base_tensors(space)
    ident = FockOperator.identity(space)
    assert t.m == 0
    for i in range(2):
        for j in range(2):
            want = ident if i == j else FockOperator.zero(space)
            assert t.mixed[i][j] == want
            assert t.raising[i][j].is_zero()
            assert t.lowering[i][j].is_zero()


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_one_step_reproduces_dictionary(space):
    assert verify_dictionary_reproduction(space)
    assert step(base_tensors(space)) == dictionary_tensors(space)


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_parity_symmetry_laws(space):
    """Raising/lowering grids eps-symmetric at even levels, -eps at odd."""
    ok, checked, failures = verify_symmetry(space, 4)
    assert ok, failures
    assert checked == 2 * space.n * space.n * 5


def test_levels_advance_m():
    space = FockSpace(2, -1)
    levels = tensors_up_to(space, 3)
    assert [t.m for t in levels] == [0, 1, 2, 3]


@pytest.mark.parametrize("space,scalar", [
    (FockSpace(1, -1), Fraction(-3, 4)),
    (FockSpace(2, 1), Fraction(3, 4)),
    (FockSpace(2, -1), Fraction(-5, 4)),
    (FockSpace(3, 1), Fraction(5, 4)),
    (FockSpace(3, -1), Fraction(-7, 4)),
    (FockSpace(4, 1), Fraction(7, 4)),
], ids=["sp2", "so4", "sp4", "so6", "sp6", "so8"])
def test_level_two_collapse_scalar(space, scalar):
    """Level 2: mixed grid = eps(2n - eps)/4 * delta * Id, rest zero."""
    ok, got, failures = verify_level_two_collapse(space)
    assert ok, failures
    assert got == scalar
    assert got == Fraction(space.eps * (2 * space.n - space.eps), 4)


@pytest.mark.parametrize("space", SPACES, ids=_ids)
def test_constraint_chain(space):
    ctx = AlgebraContext(space.n, space.eps)
    ok, failures = verify_constraint_chain(ctx, space)
    assert ok, failures


@pytest.mark.parametrize("space,scalar", [
    (FockSpace(1, -1), Fraction(-3, 2)),
    (FockSpace(2, 1), Fraction(3)),
    (FockSpace(2, -1), Fraction(-5)),
    (FockSpace(3, 1), Fraction(15, 2)),
    (FockSpace(3, -1), Fraction(-21, 2)),
    (FockSpace(4, 1), Fraction(14)),
], ids=["sp2", "so4", "sp4", "so6", "sp6", "so8"])
def test_annihilators_vanish_with_invariant_scalar(space, scalar):
    """Symmetrized traceless family realizes to zero; the invariant
    realizes to eps n(2n - eps)/2 times the identity."""
    ctx = AlgebraContext(space.n, space.eps)
    res = verify_annihilators(ctx, space, 6)
    assert res["ok"], res["failures"]
    assert res["vanishing"] == res["total"] == (2 * space.n) ** 2
    assert res["scalar"] == scalar
    assert res["scalar_is_identity_multiple"]


@pytest.mark.parametrize("eps", [1, -1])
def test_negative_control_in_matrix_representation(eps):
    """The same family is NOT zero in the defining representation."""
    ctx = AlgebraContext(2, eps)
    nonzero, total, trivial = defining_representation_control(ctx)
    assert not trivial
    assert nonzero > 0
    assert total == 16


def test_negative_control_degenerate_instance():
    nonzero, total, trivial = defining_representation_control(AlgebraContext(1, -1))
    assert trivial
    assert nonzero == 0
