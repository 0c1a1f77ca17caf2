"""Exact dense linear algebra over the rationals.

Everything works on Python ints and fractions.Fraction and never touches
floating point, so equality tests are exact. Matrices stay small (a few
hundred rows), which keeps plain Gaussian elimination and Krylov-style
minimal polynomial computations fast enough without sparse tricks.
"""

from __future__ import annotations

from fractions import Fraction


class RationalMatrix:
    """Dense matrix with int / Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(row) for row in rows]

    @classmethod
    def zero(cls, nrows, ncols=None):
        if ncols is None:
            ncols = nrows
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __add__(self, other):
        return RationalMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return RationalMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return RationalMatrix([[-x for x in r] for r in self.rows])

    def __rmul__(self, c):
        return RationalMatrix([[c * x for x in r] for r in self.rows])

    def __matmul__(self, other):
        # skip zero entries; our matrices are mostly sparse in practice
        bt = other.rows
        out = [[0] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(row):
                if a:
                    brow = bt[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return RationalMatrix(out)

    def transpose(self):
        return RationalMatrix([list(col) for col in zip(*self.rows)])

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.nrows))

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def copy(self):
        return RationalMatrix(self.rows)

    def __repr__(self):
        return f"RationalMatrix({self.rows!r})"


def matvec(mat, vec):
    out = []
    for row in mat.rows:
        acc = 0
        for a, x in zip(row, vec):
            if a and x:
                acc += a * x
        out.append(acc)
    return out


def _rref_in_place(rows):
    """Row-reduce, returning pivot column indices. Rows become Fractions."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = Fraction(1, 1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(mat):
    rows = [list(r) for r in mat.rows]
    return len(_rref_in_place(rows))


def inverse(mat):
    n = mat.nrows
    if n != mat.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(mat.rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    pivots = _rref_in_place(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return RationalMatrix([row[n:] for row in aug])


def solve_unique(mat, rhs):
    """Solve mat @ x = rhs; raises unless the solution exists and is unique."""
    n, m = mat.nrows, mat.ncols
    aug = [list(mat.rows[i]) + [rhs[i]] for i in range(n)]
    pivots = _rref_in_place(aug)
    for row in aug[len(pivots):]:
        if row[-1]:
            raise ValueError("inconsistent linear system")
    if len(pivots) != m or any(p >= m for p in pivots):
        raise ValueError("solution is not unique" if len(pivots) < m else "inconsistent linear system")
    x = [0] * m
    for k, c in enumerate(pivots):
        x[c] = aug[k][-1]
    return x


def solvable(mat, rhs):
    """True iff mat @ x = rhs has any exact solution."""
    n, m = mat.nrows, mat.ncols
    aug = [list(mat.rows[i]) + [rhs[i]] for i in range(n)]
    pivots = _rref_in_place(aug)
    # a pivot in the appended column is the row [0 ... 0 | 1]
    return all(p < m for p in pivots)


# ---------------------------------------------------------------------------
# polynomials: coefficient lists, ascending degree


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def poly_apply_vec(mat, p, vec):
    """Compute p(mat) @ vec by Horner, touching only vectors."""
    out = [Fraction(0)] * len(vec)
    for c in reversed(p):
        out = matvec(mat, out)
        if c:
            out = [x + c * e for x, e in zip(out, vec)]
    return out


def poly_eval_matrix(p, mat):
    n = mat.nrows
    out = RationalMatrix.zero(n)
    for c in reversed(p):
        out = out @ mat
        if c:
            for i in range(n):
                out.rows[i][i] += c
    return out


def _vector_min_poly(mat, vec):
    """Smallest monic p with p(mat) @ vec = 0, by Krylov iteration."""
    n = len(vec)
    basis = []  # (pivot index, reduced vector, poly producing it)
    cur = [Fraction(x) for x in vec]
    k = 0
    while True:
        red = list(cur)
        poly = [Fraction(0)] * k + [Fraction(1)]
        for piv, bvec, bpoly in basis:
            c = red[piv]
            if c:
                red = [x - c * y for x, y in zip(red, bvec)]
                poly = [
                    a - c * (bpoly[i] if i < len(bpoly) else 0)
                    for i, a in enumerate(poly)
                ]
        piv = next((i for i, x in enumerate(red) if x), None)
        if piv is None:
            return poly
        inv = 1 / red[piv]
        basis.append(
            (piv, [x * inv for x in red], [a * inv for a in poly])
        )
        cur = matvec(mat, cur)
        k += 1
        if k > n:
            raise RuntimeError("Krylov iteration failed to terminate")


def _poly_annihilates(mat, p):
    n = mat.nrows
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if any(poly_apply_vec(mat, p, e)):
            return False
    return True


def minimal_polynomial(mat):
    """Exact monic minimal polynomial, ascending coefficients."""
    n = mat.nrows
    p = [Fraction(1)]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        w = poly_apply_vec(mat, p, e)
        if not any(w):
            continue
        q = _vector_min_poly(mat, w)
        p = poly_mul(p, q)
        if len(p) - 1 == n:
            break
    # strip any surplus linear factors so the result is truly minimal
    roots, _rem = integer_roots(p)
    for r in sorted(set(roots)):
        while True:
            if len(p) < 2 or _poly_eval(p, r) != 0:
                break
            cand = _synthetic_div(p, r)
            if cand is not None and _poly_annihilates(mat, cand):
                p = cand
            else:
                break
    lead = p[-1]
    return [c / lead for c in p]


def _poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _synthetic_div(p, root):
    """p / (t - root) if exact, else None."""
    out = [Fraction(0)] * (len(p) - 1)
    carry = Fraction(0)
    for i in range(len(p) - 1, 0, -1):
        carry = p[i] + root * carry
        out[i - 1] = carry
    if p[0] + root * carry != 0:
        return None
    return out


def integer_roots(p):
    """All integer roots (with multiplicity) plus the unfactored remainder."""
    q = list(p)
    while len(q) > 1 and not q[-1]:
        q.pop()
    dens = [Fraction(c).denominator for c in q]
    scale = 1
    for d in dens:
        scale = scale * d // _gcd(scale, d)
    q = [int(Fraction(c) * scale) for c in q]
    roots = []
    while len(q) > 1 and q[0] == 0:
        roots.append(0)
        q = q[1:]
    progress = True
    while len(q) > 1 and progress:
        progress = False
        a0 = abs(q[0])
        for d in _divisors(a0):
            for cand in (d, -d):
                res = _synthetic_div([Fraction(c) for c in q], Fraction(cand))
                if res is not None:
                    roots.append(cand)
                    q = [int(c) if Fraction(c).denominator == 1 else c for c in res]
                    progress = True
                    break
            if progress:
                break
    return roots, q


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(a):
    a = abs(a)
    out = []
    d = 1
    while d * d <= a:
        if a % d == 0:
            out.append(d)
            if d != a // d:
                out.append(a // d)
        d += 1
    return sorted(out)
