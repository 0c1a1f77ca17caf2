"""Command line certification runner.

``liecert run`` executes the requested checks for one algebra instance
and renders a deterministic report; ``liecert explain`` describes what a
check certifies.  Exit status 0 means every executed check passed, 1
means at least one check failed, 2 means the invocation itself was
rejected (bad arguments or an unsupported degenerate instance).
"""

import argparse
import sys
from fractions import Fraction

from .algebra import (
    AlgebraContext,
    block_a,
    block_b,
    block_c,
    commutator,
    commutator_pairs,
    dual_basis,
    element_from_matrix,
    generator,
    killing_constant,
    killing_form,
    killing_form_pairs,
    killing_form_trace,
)
from .fock import FockSpace, verify_homomorphism, verify_relations
from .kmatrix import (
    find_monic_quadratic,
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
from .linalg import RationalMatrix, matvec, rank
from .recursion import (
    defining_representation_control,
    verify_annihilators,
    verify_constraint_chain,
    verify_dictionary_reproduction,
    verify_level_two_collapse,
    verify_symmetry,
)
from .report import FAIL, PASS, SKIP, CheckRecord, Report
from .sympoly import (
    SpectrumError,
    ad_sym2_matrix,
    casimir_adjoint,
    casimir_min_poly,
    casimir_spectrum,
    casimir_sym2,
    closed_form_projection,
    contracted_square,
    identity_components,
    product_elements,
    product_pairs,
    projector,
    quadratic_invariant,
    sym2_dim,
    target_eigenvalue,
    to_vector,
)


def _delta(i, j):
    return 1 if i == j else 0


def _fail_note(failures, limit=3):
    shown = ", ".join(repr(f) for f in failures[:limit])
    more = "" if len(failures) <= limit else f" (+{len(failures) - limit} more)"
    return f"first failures: {shown}{more}"


def _record(check_id, identity, params, failures, detail, note=""):
    if failures:
        return CheckRecord(check_id, identity, params, FAIL, detail,
                           note or _fail_note(failures))
    return CheckRecord(check_id, identity, params, PASS, detail, note)


def run_closure(ctx, space, args):
    """Bracket closed form against the matrix commutator, plus block laws."""
    identity = ("bracket closed form matches the matrix commutator and the "
                "block generators close with the standard relations")
    params = {"algebra": ctx.family, "n": ctx.n}
    failures = []
    pairs = 0
    for p in ctx.basis:
        mp = ctx.generator_matrix(*p)
        for q in ctx.basis:
            mq = ctx.generator_matrix(*q)
            closed = commutator_pairs(ctx, p, q)
            oracle = element_from_matrix(ctx, mp @ mq - mq @ mp)
            pairs += 1
            if closed != oracle:
                failures.append(("bracket", p, q))
    form = ctx.form_matrix()
    for p in ctx.basis:
        m = ctx.generator_matrix(*p)
        if not (m.transpose() @ form + form @ m).is_zero():
            failures.append(("membership", p))
    eps = ctx.eps
    rng = range(1, ctx.n + 1)
    block_checked = 0
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    a_ij, b_ij, c_ij = block_a(ctx, i, j), block_b(ctx, i, j), block_c(ctx, i, j)
                    rel = [
                        ("AA", commutator(a_ij, block_a(ctx, k, l)),
                         _delta(j, k) * block_a(ctx, i, l) - _delta(i, l) * block_a(ctx, k, j)),
                        ("AB", commutator(a_ij, block_b(ctx, k, l)),
                         _delta(j, k) * block_b(ctx, i, l) - eps * _delta(j, l) * block_b(ctx, i, k)),
                        ("AC", commutator(a_ij, block_c(ctx, k, l)),
                         eps * _delta(i, l) * block_c(ctx, j, k) - _delta(i, k) * block_c(ctx, j, l)),
                        ("BC", commutator(b_ij, block_c(ctx, k, l)),
                         eps * _delta(i, k) * block_a(ctx, j, l)
                         + eps * _delta(j, l) * block_a(ctx, i, k)
                         - _delta(j, k) * block_a(ctx, i, l)
                         - _delta(i, l) * block_a(ctx, j, k)),
                        ("BB", commutator(b_ij, block_b(ctx, k, l)), None),
                        ("CC", commutator(c_ij, block_c(ctx, k, l)), None),
                    ]
                    for name, got, want in rel:
                        block_checked += 1
                        ok = got.is_zero() if want is None else got == want
                        if not ok:
                            failures.append((name, i, j, k, l))
    detail = {"basis_pairs": pairs, "block_relations": block_checked,
              "dimension": ctx.dim}
    return _record("closure", identity, params, failures, detail)


def run_killing(ctx, space, args):
    """Closed-form bilinear form against the double-trace oracle, plus duals."""
    identity = ("the trace form tr(ad x ad y) equals "
                "4(n-eps)(g_ad g_cb - g_ac g_bd) and the dual family pairs "
                "to the identity under both evaluation routes")
    params = {"algebra": ctx.family, "n": ctx.n}
    failures = []
    gens = [generator(ctx, *p) for p in ctx.basis]
    for pi, p in enumerate(ctx.basis):
        for qi, q in enumerate(ctx.basis):
            if killing_form_pairs(ctx, p, q) != killing_form_trace(gens[pi], gens[qi]):
                failures.append(("form", p, q))
    duals = dual_basis(ctx)
    for pi, d in enumerate(duals):
        for qi, g in enumerate(gens):
            want = _delta(pi, qi)
            if killing_form_trace(d, g) != want:
                failures.append(("dual-trace", pi, qi))
            if killing_form(d, g) != want:
                failures.append(("dual-form", pi, qi))
    detail = {"constant": killing_constant(ctx), "basis_pairs": ctx.dim ** 2}
    return _record("killing", identity, params, failures, detail)


def run_projector(ctx, space, args):
    """Exact spectrum, spectral projectors, ranks and invariant content."""
    identity = ("the degree-2 Casimir has an exact square-free integer "
                "spectrum whose projectors are idempotent, orthogonal, "
                "equivariant, resolve the identity, and match the "
                "predicted ranks")
    params = {"algebra": ctx.family, "n": ctx.n}
    failures = []
    detail = {}
    try:
        spectrum = casimir_spectrum(ctx)
    except SpectrumError as exc:
        return CheckRecord("projector", identity, params, FAIL, {},
                           f"spectrum extraction failed: {exc}")
    detail["spectrum"] = ",".join(str(c) for c in spectrum)
    detail["min_poly_degree"] = len(casimir_min_poly(ctx)) - 1
    d2 = sym2_dim(ctx)
    scale = 8 * (ctx.n - ctx.eps)
    deg1 = casimir_adjoint(ctx)
    if deg1 != Fraction(scale) * RationalMatrix.identity(ctx.dim):
        failures.append(("degree-1",))
    detail["degree_1_eigenvalue"] = scale
    if casimir_sym2(ctx, "metric") != Fraction(scale) * casimir_sym2(ctx, "killing"):
        failures.append(("normalization",))
    projs = {ev: projector(ctx, ev) for ev in spectrum}
    total = RationalMatrix.zero(d2, d2)
    ranks = {}
    for ev, pm in projs.items():
        if pm @ pm != pm:
            failures.append(("idempotent", ev))
        ranks[ev] = rank(pm)
        total = total + pm
    for i, ev1 in enumerate(spectrum):
        for ev2 in spectrum[i + 1:]:
            if not (projs[ev1] @ projs[ev2]).is_zero():
                failures.append(("orthogonal", ev1, ev2))
    if total != RationalMatrix.identity(d2):
        failures.append(("resolution",))
    if sum(ranks.values()) != d2:
        failures.append(("rank-sum",))
    for pair in ctx.basis:
        adm = ad_sym2_matrix(ctx, pair)
        for ev, pm in projs.items():
            if adm @ pm != pm @ adm:
                failures.append(("equivariance", pair, ev))
                break
    detail["ranks"] = ",".join(f"{ev}:{ranks[ev]}" for ev in spectrum)
    target = target_eigenvalue(ctx)
    detail["target_eigenvalue"] = "none" if target is None else target
    if target is not None:
        if target != 8 * ctx.n:
            failures.append(("target-value", target))
        N = 2 * ctx.n
        expected = ((N - 1) * (N + 2) // 2 if ctx.eps == 1
                    else (N + 1) * (N - 2) // 2)
        if ranks[target] != expected:
            failures.append(("target-rank", ranks[target], expected))
        detail["target_rank"] = expected
    stacked = []
    for pair in ctx.basis:
        stacked.extend(ad_sym2_matrix(ctx, pair).rows)
    joint_dim = d2 - rank(RationalMatrix(stacked))
    if ranks.get(0, 0) != joint_dim:
        failures.append(("invariants", ranks.get(0, 0), joint_dim))
    else:
        p0 = projs.get(0)
        if p0 is not None:
            for pair in ctx.basis:
                if not (ad_sym2_matrix(ctx, pair) @ p0).is_zero():
                    failures.append(("invariant-image", pair))
                    break
    detail["invariant_dimension"] = joint_dim
    return _record("projector", identity, params, failures, detail)


def run_identities(ctx, space, args):
    """Trace, symmetry and block identities of the quadratic family."""
    identity = ("the contracted squares satisfy the trace, symmetry and "
                "block identities and the target projection of every "
                "ordered product equals minus the closed-form bracket")
    params = {"algebra": ctx.family, "n": ctx.n}
    failures = []
    N = 2 * ctx.n
    invariant = quadratic_invariant(ctx)
    acc = None
    for a in range(1, N + 1):
        for b in range(1, N + 1):
            gi = ctx.ginv(b, a)
            if gi:
                term = gi * contracted_square(ctx, a, b)
                acc = term if acc is None else acc + term
    if acc != invariant:
        failures.append(("trace-relation",))
    comps = identity_components(ctx)
    for (a, b), e in comps.items():
        if comps[(b, a)] != ctx.eps * e:
            failures.append(("symmetry", a, b))
    n = ctx.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sums = {"mixed": None, "raising": None, "lowering": None, "mixed2": None}
            for k in range(1, n + 1):
                adds = {
                    "mixed": product_elements(block_a(ctx, i, k), block_a(ctx, k, j))
                    - product_elements(block_b(ctx, i, k), block_c(ctx, k, j)),
                    "raising": product_elements(block_a(ctx, i, k), block_b(ctx, k, j))
                    - product_elements(block_b(ctx, i, k), block_a(ctx, j, k)),
                    "lowering": product_elements(block_c(ctx, i, k), block_a(ctx, k, j))
                    - product_elements(block_a(ctx, k, i), block_c(ctx, k, j)),
                    "mixed2": product_elements(block_a(ctx, k, i), block_a(ctx, j, k))
                    - product_elements(block_c(ctx, i, k), block_b(ctx, k, j)),
                }
                for key, val in adds.items():
                    sums[key] = val if sums[key] is None else sums[key] + val
            dd = Fraction(_delta(i, j), 2 * n)
            wants = {
                "mixed": comps[(i + n, j)] + dd * invariant,
                "raising": comps[(i + n, j + n)],
                "lowering": -ctx.eps * comps[(i, j)],
                "mixed2": ctx.eps * comps[(i, j + n)] + dd * invariant,
            }
            for key in sums:
                if sums[key] != wants[key]:
                    failures.append(("block", key, i, j))
    target = target_eigenvalue(ctx)
    quadruples = 0
    if target is None:
        for e in comps.values():
            if not e.is_zero():
                failures.append(("degenerate-family",))
                break
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                for c in range(1, N + 1):
                    for d in range(1, N + 1):
                        quadruples += 1
                        if not closed_form_projection(ctx, a, b, c, d).is_zero():
                            failures.append(("closed-form-zero", a, b, c, d))
        note = "degenerate instance: annihilator family is identically zero"
    else:
        pt = projector(ctx, target)
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                for c in range(1, N + 1):
                    for d in range(1, N + 1):
                        quadruples += 1
                        lhs = matvec(pt, to_vector(product_pairs(ctx, (a, b), (c, d))))
                        rhs = to_vector(closed_form_projection(ctx, a, b, c, d))
                        if lhs != [-v for v in rhs]:
                            failures.append(("closed-form", a, b, c, d))
        note = ""
    detail = {"quadruples": quadruples, "closed_form_sign": -1,
              "target_eigenvalue": "none" if target is None else target}
    return _record("identities", identity, params, failures, detail, note)


def run_fock(ctx, space, args):
    """Mode relations and the bracket homomorphism, on two routes."""
    identity = ("the graded mode relations hold and the quadratic "
                "dictionary is a bracket homomorphism, certified on "
                "normal-ordered coefficients and on explicit states")
    params = {"algebra": ctx.family, "n": ctx.n, "d_check": args.d_check}
    ok1, rel_checked, rel_failures = verify_relations(space, args.d_check)
    ok2, hom_checked, hom_failures = verify_homomorphism(ctx, space, args.d_check)
    failures = rel_failures + hom_failures
    detail = {
        "statistics": space.statistics,
        "relation_instances": rel_checked,
        "bracket_pairs": hom_checked,
        "states": len(space.check_states(args.d_check)),
    }
    return _record("fock-realization", identity, params, failures, detail)


def run_recursion(ctx, space, args):
    """Step reproduction and parity symmetry of the recursion tensors."""
    identity = ("one quarter-weighted anticommutator step reproduces the "
                "generator dictionary and all levels obey the parity "
                "symmetry laws")
    params = {"algebra": ctx.family, "n": ctx.n, "m_max": args.m_max}
    failures = []
    if not verify_dictionary_reproduction(space):
        failures.append(("dictionary",))
    ok, checked, sym_failures = verify_symmetry(space, args.m_max)
    failures.extend(sym_failures)
    detail = {"statistics": space.statistics, "m_max": args.m_max,
              "symmetry_instances": checked}
    return _record("recursion", identity, params, failures, detail)


def run_constraints(ctx, space, args):
    """Level-2 collapse, its block chain, and the annihilator family."""
    identity = ("recursion level 2 collapses to the scalar eps(2n-eps)/4, "
                "the explicit block chain reproduces it, the realized "
                "annihilator family vanishes, and the matrix "
                "representation control stays nonzero")
    params = {"algebra": ctx.family, "n": ctx.n, "d_check": args.d_check}
    failures = []
    ok, scalar, collapse_failures = verify_level_two_collapse(space)
    failures.extend(collapse_failures)
    ok, chain_failures = verify_constraint_chain(ctx, space)
    failures.extend(chain_failures)
    ann = verify_annihilators(ctx, space, args.d_check)
    if not ann["ok"]:
        failures.append(("annihilators", ann["failures"][:3],
                         str(ann["scalar"]), str(ann["scalar_expected"])))
    nonzero, total, trivial = defining_representation_control(ctx)
    if not trivial and nonzero == 0:
        failures.append(("control",))
    detail = {
        "level2_scalar": scalar,
        "invariant_scalar": ann["scalar"],
        "vanishing_components": f"{ann['vanishing']}/{ann['total']}",
        "control_nonzero": f"{nonzero}/{total}",
        "degenerate_family": str(trivial).lower(),
    }
    note = ("degenerate instance: control is vacuous because the family "
            "is identically zero" if trivial else "")
    return _record("constraints", identity, params, failures, detail, note)


def run_kmatrix(ctx, space, args):
    """Block-symbol matrix powers, the square bridge and entry counts."""
    identity = ("powers of the block-symbol matrix obey the parity "
                "transpose laws, the square equals the invariant diagonal "
                "plus the metric-raised annihilator family, and entry "
                "counts match the representation dimensions")
    params = {"algebra": ctx.family, "n": ctx.n, "m_max": args.m_max}
    failures = []
    ok, checked, power_failures = verify_power_symmetries(ctx, args.m_max)
    failures.extend(power_failures)
    ok, bridge_failures = verify_square_bridge(ctx)
    failures.extend(bridge_failures)
    counts = verify_entry_counts(ctx)
    if not counts["ok"]:
        failures.append(("counts", counts))
    detail = {
        "law_instances": checked,
        "transpose_law": "D_m = (-1)^m A_m^t",
        "entries_1": f"{counts['count_1']}/{counts['expected_1']}",
        "entries_2": f"{counts['count_2']}/{counts['expected_2']}",
        "target_dimension": counts["target_dim"],
    }
    return _record("kmatrix", identity, params, failures, detail)


def run_pairing(ctx, space, args):
    """Dual-basis pairing operator: quadratic, equivariance, content."""
    identity = ("the dual-basis pairing operator is the transposed block "
                "matrix over the form normalization, satisfies an exact "
                "monic quadratic and no linear relation, commutes with "
                "the coupled action, and its entries carry only invariant "
                "and target eigenspace content")
    params = {"algebra": ctx.family, "n": ctx.n}
    failures = []
    detail = {}
    ok, constant, prop_failures = verify_symbol_proportionality(ctx)
    failures.extend(("proportionality",) + f for f in prop_failures)
    detail["proportionality_constant"] = constant
    grid = pairing_operator(ctx, space)
    try:
        a, b, _square = find_monic_quadratic(ctx, space, grid)
    except ValueError as exc:
        return CheckRecord("pairing", identity, params, FAIL, detail, str(exc))
    detail["quadratic"] = f"t^2 + ({a})t + ({b})"
    roots = quadratic_roots(a, b)
    detail["roots"] = ("irrational" if roots is None
                       else ",".join(str(r) for r in roots))
    if not verify_no_linear_relation(ctx, space, grid):
        failures.append(("linear-relation",))
    ok, equi_checked, equi_failures = verify_equivariance(ctx, space, grid)
    failures.extend(equi_failures)
    ok, content_checked, content_failures = verify_entry_content(ctx, space, a, b)
    failures.extend(content_failures)
    detail["equivariance_instances"] = equi_checked
    detail["entries"] = content_checked
    return _record("pairing", identity, params, failures, detail)


CHECKS = {
    "closure": (
        run_closure, False,
        "Certifies the Lie structure: every basis bracket computed from "
        "the closed form g_cb S_ad + g_da S_bc - g_ac S_bd - g_bd S_ac is "
        "compared with the matrix commutator of the defining "
        "representation, decomposed back over the basis; every generator "
        "is checked to satisfy the defining bilinear form equation; and "
        "the A/B/C block generators are verified to close with the "
        "standard relations, including [B, B] = [C, C] = 0.",
    ),
    "killing": (
        run_killing, False,
        "Certifies the invariant bilinear form two ways: the double trace "
        "tr(ad x ad y) is evaluated for every basis pair and compared "
        "with the closed form 4(n-eps)(g_ad g_cb - g_ac g_bd), and the "
        "dual basis obtained from the exact Gram inverse is paired "
        "against the basis under both evaluation routes.",
    ),
    "projector": (
        run_projector, True,
        "Certifies the spectral theory of the degree-2 Casimir: the "
        "minimal polynomial is computed exactly, its roots must be "
        "integers, the spectral projectors must be idempotent, mutually "
        "orthogonal, commute with the adjoint action and resolve the "
        "identity, the degree-1 eigenvalue "
        "and the metric/trace-form normalization factor 8(n-eps) are "
        "checked, the target eigenspace rank must match the closed-form "
        "dimension, and the zero eigenspace must coincide with the joint "
        "kernel of the adjoint action.",
    ),
    "identities": (
        run_identities, True,
        "Certifies the quadratic tensor identities: the metric trace of "
        "the contracted squares reproduces the quadratic invariant, the "
        "traceless family has the eps index symmetry, the four block "
        "decompositions hold, and for every index quadruple the target "
        "projection of the ordered product equals minus the closed-form "
        "bracket (the sign is recorded; with the opposite projector "
        "normalization it is plus).  Degenerate instances instead "
        "certify that the family and the closed form vanish identically.",
    ),
    "fock-realization": (
        run_fock, False,
        "Certifies the oscillator realization: the graded mode relations "
        "(anticommuting for eps = +1, commuting for eps = -1) and the "
        "homomorphism property of the quadratic generator dictionary are "
        "checked both as normal-ordered coefficient identities and by "
        "applying the defect operators to an explicit state family "
        "(complete for fermionic modes, degree-bounded for bosonic).",
    ),
    "recursion": (
        run_recursion, False,
        "Certifies the recursion tensors: one quarter-weighted "
        "anticommutator step applied to the identity level must "
        "reproduce the generator dictionary exactly, and the raising "
        "and lowering grids at every level up to m-max must satisfy the "
        "parity symmetry laws (eps-symmetric at even levels, "
        "eps-antisymmetric at odd levels).",
    ),
    "constraints": (
        run_constraints, False,
        "Certifies the kinematical constraints: recursion level 2 must "
        "equal eps(2n-eps)/4 times the identity on the mixed grid and "
        "vanish on the raising and lowering grids; the explicit "
        "anticommutator chains in the realized block generators must "
        "reproduce those values; the realized symmetrized annihilator "
        "family must vanish while the quadratic invariant acts as the "
        "scalar eps n(2n-eps)/2; and the same family must stay nonzero "
        "in the defining matrix representation (negative control).",
    ),
    "kmatrix": (
        run_kmatrix, False,
        "Certifies the polynomial matrix form: powers of the block-symbol "
        "matrix satisfy the parity transpose laws with the induction "
        "identities behind them, the square minus the invariant diagonal "
        "equals the metric-raised annihilator family entry by entry "
        "(with the trace identity), and the number of distinct entries "
        "up to sign equals the algebra dimension for the first power and "
        "one plus the target dimension for the square.",
    ),
    "pairing": (
        run_pairing, True,
        "Certifies the dual-basis pairing operator coupling the defining "
        "representation with the oscillator realization: it equals the "
        "transposed element-form block matrix divided by 4(n-eps), "
        "satisfies an exact monic quadratic (coefficients recovered and "
        "verified entry by entry) but no linear relation, commutes with "
        "the coupled action, and the symbolic expansion of each residual "
        "entry vanishes as an operator with degree-2 content confined to "
        "the invariant line and the target eigenspace.",
    ),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liecert",
        description="Exact certification of the unified eps-parameterized "
                    "orthogonal/symplectic verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run certification checks")
    run.add_argument("--algebra", choices=("so", "sp"), required=True,
                     help="algebra family (eps = +1 for so, -1 for sp)")
    run.add_argument("--n", type=int, required=True,
                     help="rank parameter; the algebra acts on 2n dimensions")
    run.add_argument("--check", action="append", choices=sorted(CHECKS),
                     dest="checks", metavar="ID",
                     help="check to run (repeatable; default: all)")
    run.add_argument("--m-max", type=int, default=4,
                     help="highest recursion/power level (default 4)")
    run.add_argument("--d-check", type=int, default=6,
                     help="bosonic state degree bound (default 6)")
    run.add_argument("--cap-dim", type=int, default=10000,
                     help="skip spectral checks above this degree-2 "
                          "dimension (default 10000)")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out", help="write the report to this path")
    explain = sub.add_parser("explain", help="describe what a check certifies")
    explain.add_argument("check", nargs="?", choices=sorted(CHECKS),
                         help="check id (default: list all)")
    return parser


DEFAULT_ORDER = [
    "closure", "killing", "projector", "identities", "fock-realization",
    "recursion", "constraints", "kmatrix", "pairing",
]


def command_run(args) -> int:
    eps = 1 if args.algebra == "so" else -1
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return 2
    if eps == 1 and args.n == 1:
        print("error: so(2) is abelian and outside the certified families; "
              "use --n 2 or higher", file=sys.stderr)
        return 2
    if args.m_max < 2:
        print("error: --m-max must be at least 2", file=sys.stderr)
        return 2
    if args.d_check < 2:
        print("error: --d-check must be at least 2", file=sys.stderr)
        return 2
    ctx = AlgebraContext(args.n, eps)
    space = FockSpace(args.n, eps)
    wanted = []
    for check_id in (args.checks or DEFAULT_ORDER):
        if check_id not in wanted:
            wanted.append(check_id)
    report = Report(args.algebra, args.n)
    for check_id in wanted:
        runner, needs_spectrum, _ = CHECKS[check_id]
        if needs_spectrum and sym2_dim(ctx) > args.cap_dim:
            report.add(CheckRecord(
                check_id, "skipped before execution",
                {"algebra": ctx.family, "n": ctx.n}, SKIP,
                {"sym2_dimension": sym2_dim(ctx), "cap": args.cap_dim},
                "degree-2 dimension exceeds --cap-dim",
            ))
            continue
        report.add(runner(ctx, space, args))
    rendered = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0 if report.status == PASS else 1


def command_explain(args) -> int:
    if args.check:
        _, _, text = CHECKS[args.check]
        print(f"{args.check}:")
        print(f"  {text}")
        return 0
    for check_id in DEFAULT_ORDER:
        _, _, text = CHECKS[check_id]
        first = text.split(": ", 1)[0] + "."
        print(f"{check_id:18s} {first}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return command_run(args)
    return command_explain(args)


if __name__ == "__main__":
    sys.exit(main())
