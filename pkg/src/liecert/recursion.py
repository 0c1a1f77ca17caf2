"""Recursively defined operator tensors and their kinematical constraints.

Three n x n grids of Fock operators are generated by a quarter-weighted
anticommutator step from the degree-1 generator dictionary: a mixed grid
starting at the identity, plus raising and lowering grids starting at
zero.  Level 1 reproduces the generator dictionary itself, the raising
and lowering grids obey parity-dependent symmetry laws, and level 2
collapses to scalars: the mixed grid equals eps(2n-eps)/4 times the
identity (so (2n-1)/4 in the fermionic case and -(2n+1)/4 in the bosonic
case) while the raising and lowering grids vanish.  That collapse
reflects the
fact that the quadratic annihilator family of the oscillator realization
evaluates to zero, which this module certifies directly, together with a
negative control showing the same elements do not vanish in the defining
matrix representation.
"""

from fractions import Fraction

from .algebra import (
    AlgebraContext,
    block_a,
    block_b,
    block_c,
)
from .fock import (
    FockOperator,
    FockSpace,
    anticommutator_op,
    quadratic_generator,
    realize,
    realized_basis,
)
from .linalg import RationalMatrix
from .sympoly import identity_components, quadratic_invariant, symmetrize_to_u


def _grid(space, fill):
    return [[fill(i, j) for j in range(1, space.n + 1)]
            for i in range(1, space.n + 1)]


class RecursionTensors:
    """One recursion level: mixed, raising and lowering operator grids."""

    __slots__ = ("space", "m", "mixed", "raising", "lowering")

    def __init__(self, space, m, mixed, raising, lowering):
        self.space = space
        self.m = m
        self.mixed = mixed
        self.raising = raising
        self.lowering = lowering

    def __eq__(self, other):
        return (
            isinstance(other, RecursionTensors)
            and self.space == other.space
            and self.m == other.m
            and self.mixed == other.mixed
            and self.raising == other.raising
            and self.lowering == other.lowering
        )


def base_tensors(space: FockSpace) -> RecursionTensors:
    """Level 0: identity on the mixed grid, zero on the other two."""
    def delta(i, j):
        return FockOperator.identity(space, 1 if i == j else 0)

    zero = lambda i, j: FockOperator.zero(space)
    return RecursionTensors(space, 0, _grid(space, delta),
                            _grid(space, zero), _grid(space, zero))


def dictionary_tensors(space: FockSpace) -> RecursionTensors:
    """Level 1 written out directly from the generator dictionary."""
    eps = space.eps
    mixed = _grid(space, lambda i, j: quadratic_generator(space, "mixed", i, j))
    raising = _grid(space, lambda i, j: quadratic_generator(space, "raising", i, j))
    lowering = _grid(
        space, lambda i, j: eps * quadratic_generator(space, "lowering", i, j)
    )
    return RecursionTensors(space, 1, mixed, raising, lowering)


def step(t: RecursionTensors) -> RecursionTensors:
    """One recursion step, producing the level m+1 grids from level m."""
    space = t.space
    n = space.n
    eps = space.eps
    parity = -eps * (-1) ** t.m
    e = dictionary_tensors(space)
    quarter = Fraction(1, 4)

    def s(i):
        return i - 1

    mixed = []
    raising = []
    lowering = []
    for a in range(1, n + 1):
        mrow = []
        rrow = []
        lrow = []
        for b in range(1, n + 1):
            acc_m = FockOperator.zero(space)
            acc_r = FockOperator.zero(space)
            acc_l = FockOperator.zero(space)
            for tau in range(1, n + 1):
                acc_m = acc_m \
                    + anticommutator_op(t.mixed[s(a)][s(tau)], e.mixed[s(tau)][s(b)]) \
                    + anticommutator_op(t.mixed[s(tau)][s(b)], e.mixed[s(a)][s(tau)]) \
                    + anticommutator_op(t.raising[s(a)][s(tau)], e.lowering[s(tau)][s(b)]) \
                    + anticommutator_op(t.lowering[s(b)][s(tau)], e.raising[s(tau)][s(a)])
                acc_r = acc_r \
                    + anticommutator_op(t.mixed[s(a)][s(tau)], e.raising[s(tau)][s(b)]) \
                    + parity * anticommutator_op(t.mixed[s(b)][s(tau)], e.raising[s(tau)][s(a)]) \
                    - anticommutator_op(t.raising[s(a)][s(tau)], e.mixed[s(b)][s(tau)]) \
                    + anticommutator_op(t.raising[s(tau)][s(b)], e.mixed[s(a)][s(tau)])
                acc_l = acc_l \
                    + anticommutator_op(t.mixed[s(tau)][s(a)], e.lowering[s(tau)][s(b)]) \
                    + parity * anticommutator_op(t.mixed[s(tau)][s(b)], e.lowering[s(tau)][s(a)]) \
                    - anticommutator_op(t.lowering[s(a)][s(tau)], e.mixed[s(tau)][s(b)]) \
                    + anticommutator_op(t.lowering[s(tau)][s(b)], e.mixed[s(tau)][s(a)])
            mrow.append(quarter * acc_m)
            rrow.append(quarter * acc_r)
            lrow.append(quarter * acc_l)
        mixed.append(mrow)
        raising.append(rrow)
        lowering.append(lrow)
    return RecursionTensors(space, t.m + 1, mixed, raising, lowering)


def tensors_up_to(space: FockSpace, m_max: int):
    """Levels 0..m_max, each produced from the previous one by the step."""
    levels = [base_tensors(space)]
    for _ in range(m_max):
        levels.append(step(levels[-1]))
    return levels


def verify_dictionary_reproduction(space: FockSpace):
    """Certify that one step from level 0 gives the generator dictionary."""
    built = step(base_tensors(space))
    return built == dictionary_tensors(space)


def verify_symmetry(space: FockSpace, m_max: int):
    """Certify the parity symmetry laws on the raising/lowering grids.

    For even m both grids are eps-symmetric under index swap, for odd m
    they are -eps-symmetric.  Returns (ok, checked, failures).
    """
    n = space.n
    eps = space.eps
    checked = 0
    failures = []
    for level in tensors_up_to(space, m_max):
        sign = eps if level.m % 2 == 0 else -eps
        for grid_name in ("raising", "lowering"):
            grid = getattr(level, grid_name)
            for i in range(n):
                for j in range(n):
                    checked += 1
                    if grid[i][j] != sign * grid[j][i]:
                        failures.append((level.m, grid_name, i + 1, j + 1))
    return not failures, checked, failures


def verify_level_two_collapse(space: FockSpace):
    """Certify the level-2 scalar collapse.

    The mixed grid must equal eps(2n-eps)/4 times the identity and the
    raising and lowering grids must vanish, all as exact operator
    identities.  The scalar matches the trace-invariant value divided by
    2n, as the annihilator property demands.  Returns (ok, scalar,
    failures).
    """
    n = space.n
    two = step(step(base_tensors(space)))
    scalar = Fraction(space.eps * (2 * n - space.eps), 4)
    failures = []
    for i in range(n):
        for j in range(n):
            want = FockOperator.identity(space, scalar if i == j else 0)
            if two.mixed[i][j] != want:
                failures.append(("mixed", i + 1, j + 1))
            if not two.raising[i][j].is_zero():
                failures.append(("raising", i + 1, j + 1))
            if not two.lowering[i][j].is_zero():
                failures.append(("lowering", i + 1, j + 1))
    return not failures, scalar, failures


def _realized_blocks(ctx: AlgebraContext, space: FockSpace):
    a = _grid(space, lambda i, j: realize(ctx, space, block_a(ctx, i, j)))
    b = _grid(space, lambda i, j: realize(ctx, space, block_b(ctx, i, j)))
    c = _grid(space, lambda i, j: realize(ctx, space, block_c(ctx, i, j)))
    return a, b, c


def verify_constraint_chain(ctx: AlgebraContext, space: FockSpace):
    """Certify the explicit block form of the level-2 constraints.

    With A, B, C the realized block generators and sums over k implicit:

      F1_ij = 2([A_ik, B_kj]_+ - [B_ik, A_jk]_+)        = 4 * level2 raising = 0
      F2_ij = 2([C_ik, A_kj]_+ - [A_ki, C_kj]_+)        = 4 * level2 lowering = 0
      F3_ij = 1/2([A_ik, A_kj]_+ - [B_ik, C_kj]_+)      = level2 mixed
      G_ij  = (A^2 - BC + ((A^t)^2 - CB)^t)_ij          = 2 * level2 mixed
            = eps(2n-eps)/2 delta_ij.

    Returns (ok, failures).
    """
    n = ctx.n
    a, b, c = _realized_blocks(ctx, space)
    two = step(step(base_tensors(space)))
    failures = []
    half = Fraction(1, 2)
    for i in range(n):
        for j in range(n):
            f1 = FockOperator.zero(space)
            f2 = FockOperator.zero(space)
            f3 = FockOperator.zero(space)
            g = FockOperator.zero(space)
            for k in range(n):
                f1 = f1 + 2 * (anticommutator_op(a[i][k], b[k][j])
                               - anticommutator_op(b[i][k], a[j][k]))
                f2 = f2 + 2 * (anticommutator_op(c[i][k], a[k][j])
                               - anticommutator_op(a[k][i], c[k][j]))
                f3 = f3 + half * (anticommutator_op(a[i][k], a[k][j])
                                  - anticommutator_op(b[i][k], c[k][j]))
                g = g + (a[i][k] @ a[k][j] - b[i][k] @ c[k][j]
                         + a[k][j] @ a[i][k] - c[j][k] @ b[k][i])
            if f1 != 4 * two.raising[i][j] or not f1.is_zero():
                failures.append(("raising-chain", i + 1, j + 1))
            if f2 != 4 * two.lowering[i][j] or not f2.is_zero():
                failures.append(("lowering-chain", i + 1, j + 1))
            if f3 != two.mixed[i][j]:
                failures.append(("mixed-chain", i + 1, j + 1))
            want = FockOperator.identity(
                space,
                Fraction(ctx.eps * (2 * n - ctx.eps), 2) if i == j else 0,
            )
            if g != 2 * two.mixed[i][j] or g != want:
                failures.append(("mixed-square", i + 1, j + 1))
    return not failures, failures


def verify_annihilators(ctx: AlgebraContext, space: FockSpace, degree=None):
    """Certify that the symmetrized annihilator family maps to zero.

    Every component of the traceless quadratic family evaluates to the
    zero operator under the realization (checked on coefficients and on
    the bounded state family), while the quadratic trace invariant acts
    as an explicit scalar.  Returns a result dict with the scalar, the
    number of vanishing components and the failures, if any.
    """
    ops = realized_basis(ctx, space)
    ident = FockOperator.identity(space)
    states = space.check_states(degree)
    comps = identity_components(ctx)
    failures = []
    for pair, e in comps.items():
        op = symmetrize_to_u(e).evaluate(ops, ident)
        if not op.is_zero():
            failures.append((pair, "coefficients"))
            continue
        for s in states:
            if not op.apply(s).is_zero():
                failures.append((pair, "states"))
                break
    invariant_op = symmetrize_to_u(quadratic_invariant(ctx)).evaluate(ops, ident)
    scalar = invariant_op.terms.get(((), ()), Fraction(0))
    scalar_ok = invariant_op == FockOperator.identity(space, scalar)
    expected = Fraction(ctx.eps * ctx.n * (2 * ctx.n - ctx.eps), 2)
    return {
        "ok": not failures and scalar_ok and scalar == expected,
        "vanishing": len(comps) - len(failures),
        "total": len(comps),
        "scalar": scalar,
        "scalar_expected": expected,
        "scalar_is_identity_multiple": scalar_ok,
        "failures": failures,
    }


def defining_representation_control(ctx: AlgebraContext):
    """Negative control: the same family does not vanish on matrices.

    Evaluates every symmetrized annihilator component in the defining
    matrix representation and counts the nonzero results; a sound
    annihilator certification needs this count to be positive, showing
    the vanishing is a property of the oscillator realization rather
    than an algebraic triviality.  The one-mode symplectic algebra is the
    degenerate exception: there the family is already identically zero
    in the symmetric algebra, so the control is vacuous, which the third
    returned flag reports.

    Returns (nonzero, total, family_is_trivial).
    """
    mats = [ctx.generator_matrix(a, b) for a, b in ctx.basis]
    ident = RationalMatrix.identity(2 * ctx.n)
    comps = identity_components(ctx)
    trivial = all(e.is_zero() for e in comps.values())
    nonzero = 0
    for e in comps.values():
        if not symmetrize_to_u(e).evaluate(mats, ident).is_zero():
            nonzero += 1
    return nonzero, len(comps), trivial
