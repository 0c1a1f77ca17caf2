"""Degree-2 symmetric tensors over the algebra, the quadratic Casimir
action on them, exact spectral projectors, and the quadratic annihilator
tensors.

A degree-2 element is stored as a map from an unordered pair of basis
positions to a rational coefficient. The Casimir acts as the metric
contraction

    C = sum g_kv g_ml ad(S_kl) o ad(S_mv)

extended to products as a derivation. Its spectrum here is a small set of
integers, discovered from the exact minimal polynomial rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AlgebraContext,
    LieElement,
    ad_matrix_pair,
    commutator_pairs,
    dual_basis,
    generator,
)
from .linalg import (
    RationalMatrix,
    integer_roots,
    matvec,
    minimal_polynomial,
    rank,
)


class SpectrumError(Exception):
    """Raised when an irreducible factor of degree > 1 shows up."""


class SymPoly2:
    """Homogeneous degree-2 element of the symmetric algebra on the basis."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs=None):
        self.ctx = ctx
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched algebra contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymPoly2(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return SymPoly2(self.ctx, out)

    def __neg__(self):
        return SymPoly2(self.ctx, {k: -c for k, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        return SymPoly2(self.ctx, {k: scalar * c for k, c in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SymPoly2)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "SymPoly2(0)"
        ctx = self.ctx
        bits = [
            f"{c}*S{ctx.basis[p]}S{ctx.basis[q]}"
            for (p, q), c in sorted(self.coeffs.items())
        ]
        return "SymPoly2(" + " + ".join(bits) + ")"


def product_elements(x: LieElement, y: LieElement) -> SymPoly2:
    """Commutative product of two degree-1 elements."""
    if x.ctx != y.ctx:
        raise ValueError("mismatched algebra contexts")
    ctx = x.ctx
    out = {}
    for p, cp in x.coeffs.items():
        for q, cq in y.coeffs.items():
            i, j = ctx.basis_index[p], ctx.basis_index[q]
            key = (i, j) if i <= j else (j, i)
            out[key] = out.get(key, 0) + cp * cq
    return SymPoly2(ctx, out)


def product_pairs(ctx: AlgebraContext, pair1, pair2) -> SymPoly2:
    """S_pair1 * S_pair2 with both pairs canonicalized (possibly zero)."""
    return product_elements(generator(ctx, *pair1), generator(ctx, *pair2))


def sym2_basis(ctx: AlgebraContext):
    """Ordered index pairs (p, q), p <= q, of the degree-2 coordinate space."""
    key = "sym2_basis"
    if key not in ctx._cache:
        D = ctx.dim
        basis = [(p, q) for p in range(D) for q in range(p, D)]
        ctx._cache[key] = (basis, {k: i for i, k in enumerate(basis)})
    return ctx._cache[key]


def sym2_dim(ctx: AlgebraContext) -> int:
    D = ctx.dim
    return D * (D + 1) // 2


def to_vector(t: SymPoly2):
    _, index = sym2_basis(t.ctx)
    out = [0] * sym2_dim(t.ctx)
    for k, c in t.coeffs.items():
        out[index[k]] = c
    return out


def from_vector(ctx: AlgebraContext, vec) -> SymPoly2:
    basis, _ = sym2_basis(ctx)
    return SymPoly2(ctx, {basis[i]: c for i, c in enumerate(vec) if c})


def adjoint_apply(ctx: AlgebraContext, gen_pair, t: SymPoly2) -> SymPoly2:
    """Derivation action ad(S_gen)(uv) = [S_gen, u]v + u[S_gen, v]."""
    out = SymPoly2(ctx)
    basis = ctx.basis
    for (p, q), c in t.coeffs.items():
        du = commutator_pairs(ctx, gen_pair, basis[p])
        dv = commutator_pairs(ctx, gen_pair, basis[q])
        out = out + c * product_elements(du, generator(ctx, *basis[q]))
        out = out + c * product_elements(generator(ctx, *basis[p]), dv)
    return out


def _ad_sym2_columns(ctx: AlgebraContext, gen_pair):
    """Sparse columns {col: {row: val}} of the derivation action of S_gen."""
    key = ("ad2", gen_pair)
    if key in ctx._cache:
        return ctx._cache[key]
    basis2, index2 = sym2_basis(ctx)
    ad1 = ad_matrix_pair(ctx, gen_pair)
    D = ctx.dim
    cols = {}
    for col, (p, q) in enumerate(basis2):
        col_entries = {}
        # [x, S_p] S_q
        for r in range(D):
            v = ad1[r][p]
            if v:
                k = (r, q) if r <= q else (q, r)
                row = index2[k]
                col_entries[row] = col_entries.get(row, 0) + v
        # S_p [x, S_q]
        for r in range(D):
            v = ad1[r][q]
            if v:
                k = (p, r) if p <= r else (r, p)
                row = index2[k]
                col_entries[row] = col_entries.get(row, 0) + v
        cols[col] = {r: v for r, v in col_entries.items() if v}
    ctx._cache[key] = cols
    return cols


def ad_sym2_matrix(ctx: AlgebraContext, gen_pair) -> RationalMatrix:
    D2 = sym2_dim(ctx)
    out = RationalMatrix.zero(D2)
    for col, entries in _ad_sym2_columns(ctx, gen_pair).items():
        for row, v in entries.items():
            out.rows[row][col] = v
    return out


def _compose_sparse(cols_a, cols_b, dim):
    """Dense matrix of (A o B) from sparse column maps."""
    out = [[0] * dim for _ in range(dim)]
    for col, bents in cols_b.items():
        for mid, bv in bents.items():
            aents = cols_a.get(mid)
            if not aents:
                continue
            for row, av in aents.items():
                out[row][col] += av * bv
    return out


def guard_dimension(ctx: AlgebraContext, cap: int):
    d2 = sym2_dim(ctx)
    if d2 > cap:
        raise ValueError(
            f"degree-2 coordinate space has dimension {d2}, above the cap {cap}"
        )


def casimir_sym2(ctx: AlgebraContext, normalization: str = "metric") -> RationalMatrix:
    """Quadratic Casimir on degree-2 tensors.

    "metric" uses the raw contraction sum g_kv g_ml ad(S_kl) ad(S_mv); its
    degree-1 eigenvalue is 8(n - eps). "killing" sums ad(x_i) ad(x^i) over
    the trace-form dual basis; the two differ by exactly that factor.
    """
    if ctx.eps == 1 and ctx.n == 1:
        raise ValueError("so(2) is abelian; Casimir work needs n >= 2 for eps = +1")
    key = ("casimir2", normalization)
    if key in ctx._cache:
        return ctx._cache[key]
    D2 = sym2_dim(ctx)
    N = 2 * ctx.n
    acc = [[0] * D2 for _ in range(D2)]
    if normalization == "metric":
        for k in range(1, N + 1):
            for m in range(1, N + 1):
                coeff = ctx.gbar(k) * ctx.gbar(m)
                left = _ad_sym2_columns(ctx, (k, ctx.bar(m)))
                right = _ad_sym2_columns(ctx, (m, ctx.bar(k)))
                prod = _compose_sparse(left, right, D2)
                for i in range(D2):
                    pi = prod[i]
                    ai = acc[i]
                    for j in range(D2):
                        if pi[j]:
                            ai[j] += coeff * pi[j]
    elif normalization == "killing":
        duals = dual_basis(ctx)
        mat_duals = [
            sum_columns(ctx, d) for d in duals
        ]
        for pos, p in enumerate(ctx.basis):
            left = _ad_sym2_columns(ctx, p)
            right = mat_duals[pos]
            prod = _compose_sparse(left, right, D2)
            for i in range(D2):
                pi = prod[i]
                ai = acc[i]
                for j in range(D2):
                    if pi[j]:
                        ai[j] += pi[j]
    else:
        raise ValueError("normalization must be 'metric' or 'killing'")
    out = RationalMatrix(acc)
    ctx._cache[key] = out
    return out


def sum_columns(ctx: AlgebraContext, x: LieElement):
    """Sparse column map of the derivation action of an arbitrary element."""
    cols = {}
    for pair, c in x.coeffs.items():
        for col, entries in _ad_sym2_columns(ctx, pair).items():
            dst = cols.setdefault(col, {})
            for row, v in entries.items():
                dst[row] = dst.get(row, 0) + c * v
    return {
        col: {r: v for r, v in entries.items() if v} for col, entries in cols.items()
    }


def casimir_adjoint(ctx: AlgebraContext) -> RationalMatrix:
    """The same contraction acting on degree-1 elements."""
    N = 2 * ctx.n
    out = RationalMatrix.zero(ctx.dim)
    for k in range(1, N + 1):
        for m in range(1, N + 1):
            coeff = ctx.gbar(k) * ctx.gbar(m)
            prod = ad_matrix_pair(ctx, (k, ctx.bar(m))) @ ad_matrix_pair(ctx, (m, ctx.bar(k)))
            out = out + coeff * prod
    return out


def casimir_min_poly(ctx: AlgebraContext):
    key = "casimir2_minpoly"
    if key not in ctx._cache:
        ctx._cache[key] = minimal_polynomial(casimir_sym2(ctx))
    return ctx._cache[key]


def casimir_spectrum(ctx: AlgebraContext):
    """Sorted distinct eigenvalues on degree-2 tensors; all must be rational."""
    p = casimir_min_poly(ctx)
    roots, rem = integer_roots(p)
    if len(rem) > 1:
        raise SpectrumError(f"non-rational spectrum; unfactored part {rem}")
    if len(roots) != len(set(roots)):
        raise SpectrumError("minimal polynomial has a repeated root; not diagonalizable")
    return sorted(roots)


def projector(ctx: AlgebraContext, eigenvalue) -> RationalMatrix:
    """Exact spectral projector onto one Casimir eigenspace.

    P = prod_{j != i} (C - c_j) / (c_i - c_j); acts as the identity on the
    target eigenspace and kills the others.
    """
    spec = casimir_spectrum(ctx)
    if eigenvalue not in spec:
        raise ValueError(f"{eigenvalue} is not in the spectrum {spec}")
    key = ("projector", eigenvalue)
    if key in ctx._cache:
        return ctx._cache[key]
    cas = casimir_sym2(ctx)
    D2 = sym2_dim(ctx)
    out = RationalMatrix.identity(D2)
    denom = 1
    for c in spec:
        if c == eigenvalue:
            continue
        shifted = cas.copy()
        for i in range(D2):
            shifted.rows[i][i] -= c
        out = out @ shifted
        denom *= eigenvalue - c
    out = Fraction(1, denom) * out
    ctx._cache[key] = out
    return out


def project(ctx: AlgebraContext, eigenvalue, t: SymPoly2) -> SymPoly2:
    return from_vector(ctx, matvec(projector(ctx, eigenvalue), to_vector(t)))


# -- quadratic tensors ---------------------------------------------------------


def contracted_square(ctx: AlgebraContext, a: int, b: int) -> SymPoly2:
    """T_ab = S_al g^{lm} S_mb, the metric-contracted square."""
    out = SymPoly2(ctx)
    for l in range(1, 2 * ctx.n + 1):
        coeff = ctx.ginv(l, ctx.bar(l))
        out = out + coeff * product_pairs(ctx, (a, l), (ctx.bar(l), b))
    return out


def quadratic_invariant(ctx: AlgebraContext) -> SymPoly2:
    """I2 = g_ab g_cd S_ad S_cb; the invariant quadratic element."""
    key = "invariant2"
    if key in ctx._cache:
        return ctx._cache[key]
    out = SymPoly2(ctx)
    for a in range(1, 2 * ctx.n + 1):
        for c in range(1, 2 * ctx.n + 1):
            coeff = ctx.gbar(a) * ctx.gbar(c)
            out = out + coeff * product_pairs(ctx, (a, ctx.bar(c)), (c, ctx.bar(a)))
    ctx._cache[key] = out
    return out


def annihilator_component(ctx: AlgebraContext, a: int, b: int) -> SymPoly2:
    """E_ab = T_ab - g_ab I2 / 2n; the quadratic annihilator family."""
    out = contracted_square(ctx, a, b)
    gab = ctx.g(a, b)
    if gab:
        out = out - Fraction(gab, 2 * ctx.n) * quadratic_invariant(ctx)
    return out


def identity_components(ctx: AlgebraContext):
    """All E_ab indexed by full index pairs (a, b) in [1..2n]^2."""
    N = 2 * ctx.n
    return {
        (a, b): annihilator_component(ctx, a, b)
        for a in range(1, N + 1)
        for b in range(1, N + 1)
    }


def annihilator_rank(ctx: AlgebraContext) -> int:
    """Dimension of the span of the E_ab family inside degree 2."""
    rows = [to_vector(e) for e in identity_components(ctx).values()]
    return rank(RationalMatrix(rows))


def target_eigenvalue(ctx: AlgebraContext):
    """The Casimir eigenvalue carried by the E family, or None if it vanishes."""
    comps = identity_components(ctx)
    nonzero = next((e for e in comps.values() if not e.is_zero()), None)
    if nonzero is None:
        return None
    cas = casimir_sym2(ctx)
    vec = to_vector(nonzero)
    img = matvec(cas, vec)
    for c in casimir_spectrum(ctx):
        if all(x == c * v for x, v in zip(img, vec)):
            # confirm on the whole family, not just one member
            if all(
                matvec(cas, to_vector(e)) == [c * v for v in to_vector(e)]
                for e in comps.values()
            ):
                return c
    raise SpectrumError("annihilator family is not a Casimir eigenfamily")


def closed_form_projection(ctx: AlgebraContext, a, b, c, d) -> SymPoly2:
    """Closed form for the target-eigenspace component of S_ab S_cd:

    (1 / (2n - 2 eps)) [ g_ac E_bd + g_bd E_ac - eps g_ad E_bc - eps g_bc E_ad ].
    """
    eps, n = ctx.eps, ctx.n
    out = SymPoly2(ctx)
    for coeff, (u, v) in (
        (ctx.g(a, c), (b, d)),
        (ctx.g(b, d), (a, c)),
        (-eps * ctx.g(a, d), (b, c)),
        (-eps * ctx.g(b, c), (a, d)),
    ):
        if coeff:
            out = out + coeff * annihilator_component(ctx, u, v)
    return Fraction(1, 2 * n - 2 * eps) * out


def symmetrize_to_u(t: SymPoly2) -> "UElement":
    """Image in the enveloping algebra: each product uv becomes (uv + vu)/2."""
    quad = {}
    for (p, q), c in t.coeffs.items():
        if p == q:
            quad[(p, q)] = quad.get((p, q), 0) + c
        else:
            half = Fraction(c, 2) if not isinstance(c, Fraction) else c / 2
            quad[(p, q)] = quad.get((p, q), 0) + half
            quad[(q, p)] = quad.get((q, p), 0) + half
    return UElement(t.ctx, quadratic=quad)


class UElement:
    """Degree <= 2 element of the enveloping algebra in ordered-word form.

    quadratic maps ordered position pairs (p, q) to coefficients of the word
    S_p S_q; linear maps positions to degree-1 coefficients; scalar is the
    coefficient of the unit. Evaluation only needs a realization map from
    basis positions to operators supporting +, scalar * and @.
    """

    __slots__ = ("ctx", "scalar", "linear", "quadratic")

    def __init__(self, ctx, scalar=0, linear=None, quadratic=None):
        self.ctx = ctx
        self.scalar = scalar
        self.linear = {k: c for k, c in (linear or {}).items() if c}
        self.quadratic = {k: c for k, c in (quadratic or {}).items() if c}

    def __add__(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched algebra contexts")
        lin = dict(self.linear)
        for k, c in other.linear.items():
            lin[k] = lin.get(k, 0) + c
        quad = dict(self.quadratic)
        for k, c in other.quadratic.items():
            quad[k] = quad.get(k, 0) + c
        return UElement(self.ctx, self.scalar + other.scalar, lin, quad)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return UElement(
            self.ctx,
            scalar * self.scalar,
            {k: scalar * c for k, c in self.linear.items()},
            {k: scalar * c for k, c in self.quadratic.items()},
        )

    def is_zero(self):
        return not self.scalar and not self.linear and not self.quadratic

    def evaluate(self, realized, identity):
        """Plug in operators: realized[p] stands for the basis generator at p."""
        out = self.scalar * identity
        for p, c in self.linear.items():
            out = out + c * realized[p]
        for (p, q), c in self.quadratic.items():
            out = out + c * (realized[p] @ realized[q])
        return out


def u_product(x: LieElement, y: LieElement) -> UElement:
    """Product of two degree-1 elements in the enveloping algebra:
    xy = sym(xy) + [x, y]/2."""
    from .algebra import commutator

    sym = symmetrize_to_u(product_elements(x, y))
    comm = commutator(x, y)
    lin = {
        x.ctx.basis_index[p]: Fraction(c, 2) if not isinstance(c, Fraction) else c / 2
        for p, c in comm.coeffs.items()
    }
    return UElement(x.ctx, 0, lin, sym.quadratic)
