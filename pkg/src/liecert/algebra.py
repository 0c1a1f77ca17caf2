"""Unified even orthogonal / symplectic Lie algebras over the rationals.

A single sign eps selects the family: eps = +1 builds so(2n, Q), eps = -1
builds sp(2n, Q). Both preserve the bilinear form u^t K v with

    K = [[0, I_n], [eps I_n, 0]],

and both are spanned by one family of generators

    S_ab = sum_l (g_al e_lb - g_lb e_la),      g_ab = d(a, b+n) + eps d(a+n, b),

subject to S_ba = -eps S_ab. Independent basis pairs are a < b for eps = +1
(dimension n(2n-1)) and a <= b for eps = -1 (dimension n(2n+1)), ordered
lexicographically. Indices are 1-based throughout.

The n x n block families inside the 2n x 2n matrix [[A, B], [-C, -A^t]]
are reached through the dictionary

    A_ij = S_{i+n,j}    B_ij = S_{i+n,j+n}    C_ij = -eps S_{i,j},

with B = -eps B^t and C = -eps C^t.

All coefficients are exact ints / fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RationalMatrix, inverse


class AlgebraContext:
    """Rank, family sign, and the ordered independent generator basis."""

    def __init__(self, n: int, eps: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError("n must be a positive integer")
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        self.n = n
        self.eps = eps
        N = 2 * n
        if eps == 1:
            self.basis = [(a, b) for a in range(1, N + 1) for b in range(a + 1, N + 1)]
        else:
            self.basis = [(a, b) for a in range(1, N + 1) for b in range(a, N + 1)]
        self.basis_index = {p: k for k, p in enumerate(self.basis)}
        self._cache = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def family(self) -> str:
        return "so" if self.eps == 1 else "sp"

    def __repr__(self):
        return f"AlgebraContext({self.family}({2 * self.n}))"

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraContext)
            and self.n == other.n
            and self.eps == other.eps
        )

    def __hash__(self):
        return hash((self.n, self.eps))

    # -- metric ------------------------------------------------------------

    def g(self, a: int, b: int) -> int:
        """Invariant metric g_ab = d(a, b+n) + eps d(a+n, b)."""
        val = 0
        if a == b + self.n:
            val += 1
        if a + self.n == b:
            val += self.eps
        return val

    def ginv(self, a: int, b: int) -> int:
        """Inverse metric; g^{ab} = eps g_ab."""
        return self.eps * self.g(a, b)

    def bar(self, a: int) -> int:
        """The unique index pairing with a under the metric."""
        return a + self.n if a <= self.n else a - self.n

    def gbar(self, a: int) -> int:
        """g(a, bar(a)); always +-1."""
        return self.g(a, self.bar(a))

    def metric(self) -> RationalMatrix:
        N = 2 * self.n
        return RationalMatrix([[self.g(a, b) for b in range(1, N + 1)] for a in range(1, N + 1)])

    def metric_inverse(self) -> RationalMatrix:
        return self.eps * self.metric()

    def form_matrix(self) -> RationalMatrix:
        """The preserved block form K = [[0, I], [eps I, 0]]; metric() is K^{-1}."""
        n, N = self.n, 2 * self.n
        rows = [[0] * N for _ in range(N)]
        for i in range(n):
            rows[i][i + n] = 1
            rows[i + n][i] = self.eps
        return RationalMatrix(rows)

    # -- generators ----------------------------------------------------------

    def canonical(self, a: int, b: int):
        """Canonical basis pair and sign for S_ab, or None when S_ab = 0."""
        if not (1 <= a <= 2 * self.n and 1 <= b <= 2 * self.n):
            raise ValueError(f"generator index out of range: ({a}, {b})")
        if a == b:
            return None if self.eps == 1 else ((a, b), 1)
        if a < b:
            return (a, b), 1
        return (b, a), -self.eps

    def generator_matrix(self, a: int, b: int) -> RationalMatrix:
        """Defining-representation matrix of S_ab; entries (S_ab)_cd = g_ac d_bd - g_cb d_ad."""
        N = 2 * self.n
        rows = [[0] * N for _ in range(N)]
        for c in range(1, N + 1):
            gac = self.g(a, c)
            if gac:
                rows[c - 1][b - 1] += gac
            gcb = self.g(c, b)
            if gcb:
                rows[c - 1][a - 1] -= gcb
        return RationalMatrix(rows)


class LieElement:
    """Exact linear combination of independent generators S_ab."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs=None):
        self.ctx = ctx
        self.coeffs = {}
        if coeffs:
            for pair, c in coeffs.items():
                if c:
                    self.coeffs[pair] = self.coeffs.get(pair, 0) + c
            self.coeffs = {p: c for p, c in self.coeffs.items() if c}

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mismatched algebra contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return LieElement(self.ctx, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) - c
        return LieElement(self.ctx, out)

    def __neg__(self):
        return LieElement(self.ctx, {p: -c for p, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        return LieElement(self.ctx, {p: scalar * c for p, c in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def serialize(self):
        """Coefficients as [a, b, numerator, denominator] rows in basis order."""
        out = []
        for pair in self.ctx.basis:
            c = self.coeffs.get(pair)
            if c:
                f = Fraction(c)
                out.append([pair[0], pair[1], f.numerator, f.denominator])
        return out

    def __repr__(self):
        if not self.coeffs:
            return "LieElement(0)"
        bits = [f"{c}*S{p}" for p, c in sorted(self.coeffs.items())]
        return "LieElement(" + " + ".join(bits) + ")"


def generator(ctx: AlgebraContext, a: int, b: int) -> LieElement:
    """S_ab as a canonical element (possibly zero, possibly sign-flipped)."""
    canon = ctx.canonical(a, b)
    if canon is None:
        return LieElement(ctx)
    pair, sign = canon
    return LieElement(ctx, {pair: sign})


def commutator_pairs(ctx: AlgebraContext, p, q) -> LieElement:
    """[S_p, S_q] = g_cb S_ad + g_da S_bc - g_ac S_bd - g_bd S_ac."""
    a, b = p
    c, d = q
    out = LieElement(ctx)
    for coeff, pair in (
        (ctx.g(c, b), (a, d)),
        (ctx.g(d, a), (b, c)),
        (-ctx.g(a, c), (b, d)),
        (-ctx.g(b, d), (a, c)),
    ):
        if coeff:
            out = out + coeff * generator(ctx, *pair)
    return out


def commutator(x: LieElement, y: LieElement) -> LieElement:
    if x.ctx != y.ctx:
        raise ValueError("mismatched algebra contexts")
    out = LieElement(x.ctx)
    for p, cp in x.coeffs.items():
        for q, cq in y.coeffs.items():
            out = out + (cp * cq) * commutator_pairs(x.ctx, p, q)
    return out


def matrix_of(x: LieElement) -> RationalMatrix:
    out = RationalMatrix.zero(2 * x.ctx.n)
    for (a, b), c in x.coeffs.items():
        out = out + c * x.ctx.generator_matrix(a, b)
    return out


def element_from_matrix(ctx: AlgebraContext, mat: RationalMatrix) -> LieElement:
    """Decompose a defining-representation matrix over the S_ab basis.

    Each canonical pair (a, b) owns the matrix entry (bar(a), b), which no
    other canonical generator touches, so coefficients can be read off
    directly. Raises ValueError if the matrix is not in the span.
    """
    coeffs = {}
    for (a, b) in ctx.basis:
        lead = ctx.gbar(a) if a != b else 2 * ctx.gbar(a)
        val = mat[ctx.bar(a) - 1][b - 1]
        if val:
            coeffs[(a, b)] = Fraction(val, 1) / lead if not isinstance(val, Fraction) else val / lead
    elem = LieElement(ctx, coeffs)
    if matrix_of(elem) != mat:
        raise ValueError("matrix is not in the span of the generators")
    return elem


# -- blocks ------------------------------------------------------------------


def block_a(ctx: AlgebraContext, i: int, j: int) -> LieElement:
    """A_ij = S_{i+n,j}; the gl(n) block."""
    return generator(ctx, i + ctx.n, j)


def block_b(ctx: AlgebraContext, i: int, j: int) -> LieElement:
    """B_ij = S_{i+n,j+n}; the raising block, B = -eps B^t."""
    return generator(ctx, i + ctx.n, j + ctx.n)


def block_c(ctx: AlgebraContext, i: int, j: int) -> LieElement:
    """C_ij = -eps S_ij; the lowering block, C = -eps C^t."""
    return -ctx.eps * generator(ctx, i, j)


# -- adjoint representation and the Killing form ------------------------------


def ad_matrix_pair(ctx: AlgebraContext, pair) -> RationalMatrix:
    """Matrix of ad(S_pair) on the basis (columns are images of basis elements)."""
    key = ("ad", pair)
    if key in ctx._cache:
        return ctx._cache[key]
    D = ctx.dim
    rows = [[0] * D for _ in range(D)]
    for col, q in enumerate(ctx.basis):
        img = commutator_pairs(ctx, pair, q)
        for r, c in img.coeffs.items():
            rows[ctx.basis_index[r]][col] += c
    out = RationalMatrix(rows)
    ctx._cache[key] = out
    return out


def ad_matrix(ctx: AlgebraContext, x: LieElement) -> RationalMatrix:
    out = RationalMatrix.zero(ctx.dim)
    for pair, c in x.coeffs.items():
        out = out + c * ad_matrix_pair(ctx, pair)
    return out


def killing_constant(ctx: AlgebraContext) -> int:
    """Validated constant in the closed form; equals 4(n - eps)."""
    return 4 * (ctx.n - ctx.eps)


def killing_form_pairs(ctx: AlgebraContext, p, q):
    """Closed form 4(n-eps)(g_ad g_cb - g_ac g_bd) for tr(ad S_p ad S_q)."""
    a, b = p
    c, d = q
    return killing_constant(ctx) * (ctx.g(a, d) * ctx.g(c, b) - ctx.g(a, c) * ctx.g(b, d))


def killing_form(x: LieElement, y: LieElement):
    """Bilinear extension of the closed-form Killing pairing."""
    if x.ctx != y.ctx:
        raise ValueError("mismatched algebra contexts")
    acc = 0
    for p, cp in x.coeffs.items():
        for q, cq in y.coeffs.items():
            acc += cp * cq * killing_form_pairs(x.ctx, p, q)
    return acc


def killing_form_trace(x: LieElement, y: LieElement):
    """Trace oracle tr(ad x ad y); independent of the closed form."""
    return (ad_matrix(x.ctx, x) @ ad_matrix(x.ctx, y)).trace()


def killing_gram(ctx: AlgebraContext) -> RationalMatrix:
    """Gram matrix of the trace-form oracle on the basis (this governs duals)."""
    key = "gram"
    if key in ctx._cache:
        return ctx._cache[key]
    ads = [ad_matrix_pair(ctx, p) for p in ctx.basis]
    D = ctx.dim
    rows = [[0] * D for _ in range(D)]
    for i in range(D):
        for j in range(i, D):
            t = (ads[i] @ ads[j]).trace()
            rows[i][j] = t
            rows[j][i] = t
    out = RationalMatrix(rows)
    ctx._cache[key] = out
    return out


def killing_gram_inverse(ctx: AlgebraContext) -> RationalMatrix:
    key = "gram_inv"
    if key in ctx._cache:
        return ctx._cache[key]
    gram = killing_gram(ctx)
    try:
        inv = inverse(gram)
    except ValueError:
        raise ValueError(
            f"Killing form of {ctx!r} is degenerate; dual basis undefined"
        ) from None
    ctx._cache[key] = inv
    return inv


def dual_element(ctx: AlgebraContext, a: int, b: int) -> LieElement:
    """Basis element dual to S_ab: killing pairing 1 with S_ab, 0 otherwise."""
    if (a, b) not in ctx.basis_index:
        raise ValueError(f"({a}, {b}) is not an independent basis pair")
    inv = killing_gram_inverse(ctx)
    col = ctx.basis_index[(a, b)]
    coeffs = {}
    for k, q in enumerate(ctx.basis):
        if inv[k][col]:
            coeffs[q] = inv[k][col]
    return LieElement(ctx, coeffs)


def dual_basis(ctx: AlgebraContext):
    """All dual elements, in basis order."""
    return [dual_element(ctx, a, b) for (a, b) in ctx.basis]
