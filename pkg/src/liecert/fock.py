"""Graded oscillator realizations on Fock space.

A single mode family b_1 .. b_n and its adjoint family b+_1 .. b+_n obey
the unified reordering rule

    b_x b+_y = delta_xy + (-eps) b+_y b_x,

so eps = +1 gives anticommuting (fermionic) modes and eps = -1 gives
commuting (bosonic) modes.  Operators are kept in normal-ordered form,
creation letters to the left, as an exact-coefficient dictionary; that
form is unique, so coefficient equality decides operator equality.  The
module also provides the quadratic generator dictionary

    pair (a, b) with a, b <= n        ->  b_a b_b
    pair (i+n, j+n)                   ->  b+_i b+_j
    pair (i+n, j)                     ->  b+_i b_j - (eps/2) delta_ij
    pair (i, j+n)                     ->  -eps (b+_j b_i - (eps/2) delta_ij)

and the induced linear map ``realize`` from algebra elements to Fock
operators, together with helpers that certify the defining relations and
the homomorphism property both on coefficients and on explicit states.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import AlgebraContext, LieElement, commutator, generator


class FockSpace:
    """Mode count plus statistics selector for a Fock realization."""

    __slots__ = ("n", "eps")

    def __init__(self, n: int, eps: int):
        if n < 1:
            raise ValueError("need at least one mode")
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        self.n = n
        self.eps = eps

    @property
    def statistics(self) -> str:
        return "fermionic" if self.eps == 1 else "bosonic"

    @property
    def fermionic(self) -> bool:
        return self.eps == 1

    def basis_states(self):
        """All occupation tuples for the fermionic space (2**n states)."""
        if not self.fermionic:
            raise ValueError("bosonic spaces are infinite; use bounded_states")
        return [tuple(s) for s in product((0, 1), repeat=self.n)]

    def bounded_states(self, degree: int):
        """Occupation tuples with total occupation at most ``degree``."""
        cap = 1 if self.fermionic else degree
        out = []
        for s in product(range(cap + 1), repeat=self.n):
            if sum(s) <= degree:
                out.append(tuple(s))
        return out

    def check_states(self, degree=None):
        """The state family used for action-level verification."""
        if self.fermionic:
            return self.basis_states()
        if degree is None:
            raise ValueError("bosonic verification needs a degree bound")
        return self.bounded_states(degree)

    def __repr__(self):
        return f"FockSpace(n={self.n}, {self.statistics})"

    def __eq__(self, other):
        return (
            isinstance(other, FockSpace)
            and self.n == other.n
            and self.eps == other.eps
        )

    def __hash__(self):
        return hash((self.n, self.eps))


class FockVector:
    """Finite linear combination of occupation states with exact amplitudes."""

    __slots__ = ("space", "amps")

    def __init__(self, space: FockSpace, amps=None):
        self.space = space
        self.amps = {}
        if amps:
            for state, a in amps.items():
                if a:
                    self.amps[state] = self.amps.get(state, 0) + a
            self.amps = {s: a for s, a in self.amps.items() if a}

    @classmethod
    def state(cls, space, occ):
        return cls(space, {tuple(occ): Fraction(1)})

    def __add__(self, other):
        out = dict(self.amps)
        for s, a in other.amps.items():
            out[s] = out.get(s, 0) + a
        return FockVector(self.space, out)

    def __sub__(self, other):
        out = dict(self.amps)
        for s, a in other.amps.items():
            out[s] = out.get(s, 0) - a
        return FockVector(self.space, out)

    def __rmul__(self, scalar):
        return FockVector(self.space, {s: scalar * a for s, a in self.amps.items()})

    def is_zero(self) -> bool:
        return not self.amps

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.space == other.space
            and self.amps == other.amps
        )

    def __repr__(self):
        if not self.amps:
            return "FockVector(0)"
        bits = [f"{a}*|{''.join(map(str, s))}>" for s, a in sorted(self.amps.items())]
        return "FockVector(" + " + ".join(bits) + ")"


@lru_cache(maxsize=None)
def _push_through(x, cre, eps):
    """Normal order b_x times a creator word.

    Returns a tuple of (coeff, creator_word, annihilator_word) with the
    annihilator word empty or (x,), using b_x b+_y = delta + (-eps) b+_y b_x.
    """
    if not cre:
        return ((Fraction(1), (), (x,)),)
    head, rest = cre[0], cre[1:]
    out = []
    if head == x:
        out.append((Fraction(1), rest, ()))
    for coeff, c_res, a_res in _push_through(x, rest, eps):
        out.append((-eps * coeff, (head,) + c_res, a_res))
    return tuple(out)


@lru_cache(maxsize=None)
def _cross(ann, cre, eps):
    """Normal order an annihilator word times a creator word.

    Returns a tuple of ((creator_word, annihilator_word), coeff) pairs; the
    words keep the order produced by the reordering moves and still need
    canonical sorting.
    """
    if not ann or not cre:
        return (((tuple(cre), tuple(ann)), Fraction(1)),)
    front, x = ann[:-1], ann[-1]
    total = {}
    for coeff, c_mid, a_tail in _push_through(x, tuple(cre), eps):
        for (c2, a2), c0 in _cross(front, c_mid, eps):
            key = (c2, a2 + a_tail)
            total[key] = total.get(key, 0) + coeff * c0
    return tuple((k, v) for k, v in total.items() if v)


def _sorted_sign(word):
    """Sort a word by insertion, tracking the permutation sign."""
    arr = list(word)
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    return tuple(arr), sign


def _canonical_word(word, fermionic):
    """Canonical ordering of one same-type letter word, or None if it dies."""
    sorted_word, sign = _sorted_sign(word)
    if fermionic:
        for i in range(1, len(sorted_word)):
            if sorted_word[i] == sorted_word[i - 1]:
                return None, 0
        return sorted_word, sign
    return sorted_word, 1


class FockOperator:
    """Normal-ordered operator with exact rational coefficients.

    ``terms`` maps (creator_word, annihilator_word) to a coefficient, both
    words canonically sorted (strictly increasing for fermions).
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: FockSpace, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def zero(cls, space):
        return cls(space)

    @classmethod
    def identity(cls, space, scalar=1):
        return cls(space, {((), ()): Fraction(scalar)})

    @classmethod
    def creation(cls, space, i):
        if not 1 <= i <= space.n:
            raise ValueError("mode index out of range")
        return cls(space, {((i,), ()): Fraction(1)})

    @classmethod
    def annihilation(cls, space, i):
        if not 1 <= i <= space.n:
            raise ValueError("mode index out of range")
        return cls(space, {((), (i,)): Fraction(1)})

    def _check(self, other):
        if self.space != other.space:
            raise ValueError("mismatched Fock spaces")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return FockOperator(self.space, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return FockOperator(self.space, out)

    def __neg__(self):
        return FockOperator(self.space, {k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return FockOperator(self.space, {k: scalar * c for k, c in self.terms.items()})

    def __matmul__(self, other):
        """Operator product, renormal-ordered with exact coefficients."""
        self._check(other)
        fermionic = self.space.fermionic
        eps = self.space.eps
        out = {}
        for (c1, a1), x in self.terms.items():
            for (c2, a2), y in other.terms.items():
                base = x * y
                for (c_mid, a_mid), w in _cross(a1, c2, eps):
                    cre, s1 = _canonical_word(c1 + c_mid, fermionic)
                    if cre is None:
                        continue
                    ann, s2 = _canonical_word(a_mid + a2, fermionic)
                    if ann is None:
                        continue
                    key = (cre, ann)
                    out[key] = out.get(key, 0) + base * w * s1 * s2
        return FockOperator(self.space, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, FockOperator)
            and self.space == other.space
            and self.terms == other.terms
        )

    def max_degree(self) -> int:
        """Longest word length appearing in the operator."""
        if not self.terms:
            return 0
        return max(len(c) + len(a) for c, a in self.terms)

    def apply(self, target) -> FockVector:
        """Apply to a FockVector or a bare occupation tuple."""
        if not isinstance(target, FockVector):
            target = FockVector.state(self.space, target)
        space = self.space
        out = {}
        for (cre, ann), coeff in self.terms.items():
            for state, amp in target.amps.items():
                weight = coeff * amp
                occ = state
                dead = False
                for i in reversed(ann):
                    factor, occ = _apply_annihilation(space, occ, i)
                    if factor == 0:
                        dead = True
                        break
                    weight *= factor
                if dead:
                    continue
                for i in reversed(cre):
                    factor, occ = _apply_creation(space, occ, i)
                    if factor == 0:
                        dead = True
                        break
                    weight *= factor
                if dead:
                    continue
                out[occ] = out.get(occ, 0) + weight
        return FockVector(space, out)

    def __repr__(self):
        if not self.terms:
            return "FockOperator(0)"
        bits = []
        for (cre, ann), c in sorted(self.terms.items()):
            word = "".join(f"b+{i}" for i in cre) + "".join(f"b{i}" for i in ann)
            bits.append(f"{c}*{word or '1'}")
        return "FockOperator(" + " + ".join(bits) + ")"


def _jordan_wigner_sign(occ, i):
    s = sum(occ[:i - 1])
    return -1 if s % 2 else 1


def _apply_annihilation(space, occ, i):
    k = occ[i - 1]
    if k == 0:
        return 0, occ
    new = occ[:i - 1] + (k - 1,) + occ[i:]
    if space.fermionic:
        return _jordan_wigner_sign(occ, i), new
    return k, new


def _apply_creation(space, occ, i):
    k = occ[i - 1]
    if space.fermionic:
        if k == 1:
            return 0, occ
        return _jordan_wigner_sign(occ, i), occ[:i - 1] + (1,) + occ[i:]
    return 1, occ[:i - 1] + (k + 1,) + occ[i:]


def commutator_op(x: FockOperator, y: FockOperator) -> FockOperator:
    return x @ y - y @ x


def anticommutator_op(x: FockOperator, y: FockOperator) -> FockOperator:
    return x @ y + y @ x


def graded_bracket_defect(space: FockSpace, x: int, y: int) -> dict:
    """Defects of the three defining mode relations for modes x, y.

    Each value should be the zero operator: the mixed relation
    b_x b+_y - (-eps) b+_y b_x - delta_xy, and the pure relations with the
    same grading sign for two annihilators and for two creators.
    """
    eps = space.eps
    bx = FockOperator.annihilation(space, x)
    by = FockOperator.annihilation(space, y)
    cx = FockOperator.creation(space, x)
    cy = FockOperator.creation(space, y)
    delta = FockOperator.identity(space, 1 if x == y else 0)
    return {
        "mixed": bx @ cy - (-eps) * (cy @ bx) - delta,
        "annihilators": bx @ by - (-eps) * (by @ bx),
        "creators": cx @ cy - (-eps) * (cy @ cx),
    }


def verify_relations(space: FockSpace, degree=None):
    """Certify the defining relations on coefficients and on states.

    Returns (ok, checked, failures) where checked counts individual
    relation instances and failures lists (x, y, relation, route) tuples.
    """
    states = space.check_states(degree)
    checked = 0
    failures = []
    for x in range(1, space.n + 1):
        for y in range(1, space.n + 1):
            for name, defect in graded_bracket_defect(space, x, y).items():
                checked += 1
                if not defect.is_zero():
                    failures.append((x, y, name, "coefficients"))
                    continue
                for s in states:
                    if not defect.apply(s).is_zero():
                        failures.append((x, y, name, "states"))
                        break
    return not failures, checked, failures


def quadratic_generator(space: FockSpace, kind: str, i: int, j: int) -> FockOperator:
    """One entry of the quadratic generator dictionary.

    kind "lowering" gives b_i b_j, "raising" gives b+_i b+_j and "mixed"
    gives b+_i b_j - (eps/2) delta_ij.
    """
    cre = FockOperator.creation
    ann = FockOperator.annihilation
    if kind == "lowering":
        return ann(space, i) @ ann(space, j)
    if kind == "raising":
        return cre(space, i) @ cre(space, j)
    if kind == "mixed":
        op = cre(space, i) @ ann(space, j)
        if i == j:
            op = op - FockOperator.identity(space, Fraction(space.eps, 2))
        return op
    raise ValueError("kind must be lowering, raising or mixed")


def _realize_pair(space: FockSpace, a: int, b: int) -> FockOperator:
    n = space.n
    eps = space.eps
    if a <= n and b <= n:
        return quadratic_generator(space, "lowering", a, b)
    if a > n and b > n:
        return quadratic_generator(space, "raising", a - n, b - n)
    if a > n:
        return quadratic_generator(space, "mixed", a - n, b)
    return -eps * quadratic_generator(space, "mixed", b - n, a)


def realize(ctx: AlgebraContext, space: FockSpace, x: LieElement) -> FockOperator:
    """Linear extension of the generator dictionary to algebra elements."""
    if ctx.n != space.n or ctx.eps != space.eps:
        raise ValueError("algebra context and Fock space disagree")
    out = FockOperator.zero(space)
    for (a, b), c in x.coeffs.items():
        out = out + c * _realize_pair(space, a, b)
    return out


_REALIZED_CACHE = {}


def realized_basis(ctx: AlgebraContext, space: FockSpace):
    """Fock operators for each canonical basis pair, in basis order."""
    key = (ctx.n, ctx.eps)
    if key not in _REALIZED_CACHE:
        _REALIZED_CACHE[key] = [
            realize(ctx, space, generator(ctx, a, b)) for a, b in ctx.basis
        ]
    return _REALIZED_CACHE[key]


def verify_homomorphism(ctx: AlgebraContext, space: FockSpace, degree=None):
    """Certify realize([x, y]) = [realize x, realize y] on all basis pairs.

    Both routes run for every pair: exact normal-ordered coefficients and
    application to the bounded state family.  Returns (ok, checked,
    failures) with failures holding (pair, pair, route) tuples.
    """
    ops = realized_basis(ctx, space)
    states = space.check_states(degree)
    checked = 0
    failures = []
    for p, pair_p in enumerate(ctx.basis):
        for q, pair_q in enumerate(ctx.basis):
            left = commutator_op(ops[p], ops[q])
            right = realize(
                ctx, space,
                commutator(generator(ctx, *pair_p), generator(ctx, *pair_q)),
            )
            defect = left - right
            checked += 1
            if not defect.is_zero():
                failures.append((pair_p, pair_q, "coefficients"))
                continue
            for s in states:
                if not defect.apply(s).is_zero():
                    failures.append((pair_p, pair_q, "states"))
                    break
    return not failures, checked, failures
