"""Exact rational linear algebra on 4x4 matrices and small vector spaces.

Everything here is over the rationals with no rounding: matrices are immutable
4x4 grids of reduced fractions, subspaces are held in reduced row echelon form
with respect to a fixed row-major flattening of the 16 entries (so equal
subspaces have identical basis lists), and polynomials are exact coefficient
vectors.

Characteristic polynomials are computed twice over by design: the production
path is Faddeev-LeVerrier (`char_poly`), and an independent cofactor expansion
of det(lambda*I - m) (`char_poly_cofactor`) serves as the cross-check oracle.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import SingularMatrix, ZeroPolynomial
from .rational import Q, ZERO, ONE, divisors, format_rational, parse_rational, rational_sqrt

Vec = tuple


# ---------------------------------------------------------------------------
# generic reduced row echelon form over Q
# ---------------------------------------------------------------------------

def rref(rows: Iterable[Sequence]) -> list[tuple]:
    """Reduced row echelon form; returns the nonzero rows (unit pivots,
    zeros above and below each pivot).  The output is the unique canonical
    basis of the row span."""
    work = [list(r) for r in rows if any(x != 0 for x in r)]
    if not work:
        return []
    ncols = len(work[0])
    pivot_rows: list[list] = []
    for col in range(ncols):
        pivot = None
        for r in work:
            if r[col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        work.remove(pivot)
        inv = ONE / pivot[col]
        pivot = [x * inv for x in pivot]
        for r in work:
            if r[col] != 0:
                f = r[col]
                for c in range(col, ncols):
                    r[c] -= f * pivot[c]
        for r in pivot_rows:
            if r[col] != 0:
                f = r[col]
                for c in range(col, ncols):
                    r[c] -= f * pivot[c]
        pivot_rows.append(pivot)
        work = [r for r in work if any(x != 0 for x in r)]
        if not work:
            break
    pivot_rows.sort(key=_pivot_col)
    return [tuple(r) for r in pivot_rows]


def _pivot_col(row: Sequence) -> int:
    for i, x in enumerate(row):
        if x != 0:
            return i
    return len(row)


def rank_of_rows(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def kernel_of_rows(rows: list[Sequence], ncols: int) -> list[tuple]:
    """Basis of the right kernel {v : M v = 0} of the matrix with given rows."""
    red = rref(rows)
    pivots = [_pivot_col(r) for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in zip(red, pivots):
            v[pc] = -r[fc]
        basis.append(tuple(v))
    return basis


def solve_coords(basis_rows: list[tuple], v: Sequence):
    """Coordinates of v in the span of RREF basis rows, or None."""
    coords = []
    residual = list(v)
    for row in basis_rows:
        p = _pivot_col(row)
        c = residual[p]
        coords.append(c)
        if c != 0:
            for i in range(p, len(residual)):
                residual[i] -= c * row[i]
    if any(x != 0 for x in residual):
        return None
    return tuple(coords)


# ---------------------------------------------------------------------------
# univariate polynomials over Q (coefficients lowest degree first)
# ---------------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly([c * Q(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = ONE / self.leading()
        return Poly([c * inv for c in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading()
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - d] = f
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= f * c
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "Poly":
        """p / gcd(p, p'); shares p's roots, each exactly once."""
        if self.degree <= 0:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = format_rational(c)
            terms.append(s if i == 0 else (f"{s}*x^{i}" if i > 1 else f"{s}*x"))
        return "Poly(" + " + ".join(terms) + ")"


def rational_roots(p: Poly) -> dict:
    """All rational roots of p with multiplicities (rational root theorem on
    the primitive integer form).  Irrational and complex roots are simply not
    returned; callers needing full spectral comparison compare polynomials."""
    if p.is_zero():
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    roots: dict = {}
    coeffs = list(p.coeffs)
    k = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        roots[ZERO] = k
    work = Poly(coeffs)
    if work.degree <= 0:
        return roots
    for r in _root_candidates(work):
        if work(r) == 0:
            mult = 0
            lin = Poly([-r, 1])
            while True:
                q, rem = work.divmod(lin)
                if not rem.is_zero():
                    break
                work = q
                mult += 1
            roots[r] = mult
            if work.degree <= 0:
                break
    return roots


def _root_candidates(p: Poly):
    """Candidate rational roots of a polynomial with nonzero constant term."""
    if p.degree == 1:
        yield -p.coeffs[0] / p.coeffs[1]
        return
    if p.degree == 2:
        yield from _quadratic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0])
        return
    if p.degree == 4 and p.coeffs[1] == 0 and p.coeffs[3] == 0:
        # biquadratic: the char-poly shape of every sp(4) element
        for mu in _quadratic_roots(p.coeffs[4], p.coeffs[2], p.coeffs[0]):
            s = rational_sqrt(mu)
            if s is not None:
                yield s
                if s != 0:
                    yield -s
        return
    # general case: clear denominators, enumerate divisor quotients
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = _lcm(den_lcm, int(c.denominator))
    ints = [int(c * den_lcm) for c in p.coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    ints = [c // g for c in ints]
    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            cand = Q(num, den)
            yield cand
            yield -cand


def _quadratic_roots(a, b, c):
    disc = b * b - 4 * a * c
    s = rational_sqrt(disc)
    if s is None:
        return
    yield (-b + s) / (2 * a)
    if s != 0:
        yield (-b - s) / (2 * a)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a * b // _gcd(a, b)


# ---------------------------------------------------------------------------
# 4x4 matrices
# ---------------------------------------------------------------------------

class Mat4:
    """Immutable 4x4 matrix of exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Q(x) for x in r) for r in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("Mat4 needs a 4x4 grid")

    @classmethod
    def zero(cls) -> "Mat4":
        return _ZERO4

    @classmethod
    def identity(cls) -> "Mat4":
        return _ID4

    @classmethod
    def diag(cls, d1, d2, d3, d4) -> "Mat4":
        d = (d1, d2, d3, d4)
        return cls([[d[i] if i == j else 0 for j in range(4)] for i in range(4)])

    @classmethod
    def unit(cls, i: int, j: int) -> "Mat4":
        """Elementary matrix E_ij (1-based indices, as in the matrix displays)."""
        return cls([[1 if (r == i - 1 and c == j - 1) else 0 for c in range(4)]
                    for r in range(4)])

    @classmethod
    def from_flat(cls, flat: Sequence) -> "Mat4":
        return cls([flat[0:4], flat[4:8], flat[8:12], flat[12:16]])

    def flatten(self) -> tuple:
        return self.rows[0] + self.rows[1] + self.rows[2] + self.rows[3]

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __add__(self, other: "Mat4") -> "Mat4":
        return Mat4([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat4") -> "Mat4":
        return Mat4([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat4":
        return Mat4([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Mat4):
            b = other.rows
            return Mat4([
                [
                    ra[0] * b[0][j] + ra[1] * b[1][j] + ra[2] * b[2][j] + ra[3] * b[3][j]
                    for j in range(4)
                ]
                for ra in self.rows
            ])
        q = Q(other)
        return Mat4([[a * q for a in r] for r in self.rows])

    def __rmul__(self, other) -> "Mat4":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat4) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def transpose(self) -> "Mat4":
        return Mat4([[self.rows[j][i] for j in range(4)] for i in range(4)])

    def trace(self):
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2] + self.rows[3][3]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def power(self, k: int) -> "Mat4":
        acc = Mat4.identity()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows)
        return f"Mat4[{body}]"

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "Mat4":
        return cls([[parse_rational(str(x)) for x in r] for r in data])


_ZERO4 = Mat4.__new__(Mat4)
_ZERO4.rows = tuple(tuple(ZERO for _ in range(4)) for _ in range(4))
_ID4 = Mat4.__new__(Mat4)
_ID4.rows = tuple(tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4))


def char_poly_rows(rows: list[Sequence]) -> Poly:
    """Characteristic polynomial det(lambda*I - M) of a square matrix given as
    rows, by Faddeev-LeVerrier (exact; divisions are by 1..n)."""
    n = len(rows)
    m = [[Q(x) for x in r] for r in rows]
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                mk[i][i] += c
            mk = _mat_mul_rows(m, mk)
        tr = sum((mk[i][i] for i in range(n)), ZERO)
        c = -tr / k
        coeffs[n - k] = c
    return Poly(coeffs)


def _mat_mul_rows(a: list[list], b: list[list]) -> list[list]:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)]
            for i in range(n)]


def char_poly(m: Mat4) -> Poly:
    """Characteristic polynomial det(lambda*I - m), exact, degree 4."""
    return char_poly_rows([list(r) for r in m.rows])


def char_poly_cofactor(m: Mat4) -> Poly:
    """Independent oracle: expand det(lambda*I - m) by cofactors over Q[lambda]."""
    entries = [[Poly([-m.rows[i][j], 1]) if i == j else Poly([-m.rows[i][j]])
                for j in range(4)] for i in range(4)]
    return det_poly(entries)


def det_poly(entries: list[list[Poly]]) -> Poly:
    """Determinant of a small matrix of polynomials by cofactor expansion."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    acc = Poly()
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entries[0][j] * det_poly(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def poly_eval_mat(p: Poly, m: Mat4) -> Mat4:
    """Evaluate a polynomial at a matrix argument (Horner)."""
    acc = Mat4.zero()
    for c in reversed(p.coeffs):
        acc = acc * m + Mat4.identity() * c
    return acc


def rank(m: Mat4) -> int:
    """Exact rank by Gaussian elimination over Q."""
    return rank_of_rows(m.rows)


def kernel(m: Mat4) -> list[tuple]:
    """Basis of the right kernel of m as 4-vectors."""
    return kernel_of_rows([list(r) for r in m.rows], 4)


def inverse(m: Mat4) -> Mat4:
    """Exact inverse by Gauss-Jordan; raises SingularMatrix."""
    aug = [list(m.rows[i]) + [ONE if j == i else ZERO for j in range(4)] for i in range(4)]
    for col in range(4):
        piv = None
        for r in range(col, 4):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise SingularMatrix("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(4):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return Mat4([row[4:] for row in aug])


def det(m: Mat4):
    """Exact determinant (constant term of the char poly, up to sign)."""
    p = char_poly(m)
    return p[0]  # det(lambda*I - m) at lambda=0 is det(-m) = det(m) for n=4


# ---------------------------------------------------------------------------
# subspaces of 4x4 matrices (canonical echelonized bases)
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of the 16-dimensional matrix space, held as the unique
    reduced-row-echelon basis with respect to row-major flattening.  Equality
    of subspaces is therefore equality of basis lists."""

    __slots__ = ("basis",)

    def __init__(self, mats: Iterable[Mat4]):
        rows = rref([m.flatten() for m in mats])
        self.basis = tuple(Mat4.from_flat(r) for r in rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def contains(self, m: Mat4) -> bool:
        return self.coords(m) is not None

    def coords(self, m: Mat4):
        """Coefficients of m in the echelon basis, or None if outside."""
        return solve_coords([b.flatten() for b in self.basis], m.flatten())

    def combine(self, coeffs: Sequence) -> Mat4:
        acc = Mat4.zero()
        for c, b in zip(coeffs, self.basis):
            if c != 0:
                acc = acc + b * c
        return acc

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(list(self.basis) + list(other.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim})"


def echelon_span(vectors: Iterable[Mat4]) -> Subspace:
    """The unique echelonized basis of the linear span (empty input: dim 0)."""
    return Subspace(vectors)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials (for symbolic determinants over parameters)
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse multivariate polynomial over Q: {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = Q(c)
                if c != 0:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {tuple([0] * nvars): c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return MPoly(self.nvars, out)

    def __sub__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) - c
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MPoly):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, ZERO) + c1 * c2
            return MPoly(self.nvars, out)
        return MPoly(self.nvars, {e: c * Q(other) for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __call__(self, values: Sequence):
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for ex, v in zip(e, values):
                term *= v**ex
            acc += term
        return acc


def det_mpoly(entries: list[list[MPoly]]) -> MPoly:
    """Determinant of a small matrix of multivariate polynomials."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    nv = entries[0][0].nvars
    acc = MPoly(nv)
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entries[0][j] * det_mpoly(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def symbolic_combo(mats: Sequence[Mat4]) -> list[list[MPoly]]:
    """The 4x4 matrix of linear polynomials sum_i t_i * mats[i]."""
    d = len(mats)
    out = [[MPoly(d) for _ in range(4)] for _ in range(4)]
    for idx, m in enumerate(mats):
        e = [0] * d
        e[idx] = 1
        e = tuple(e)
        for i in range(4):
            for j in range(4):
                c = m.rows[i][j]
                if c != 0:
                    out[i][j] = out[i][j] + MPoly(d, {e: c})
    return out


def symbolic_minors(entries: list[list[MPoly]], k: int) -> list[MPoly]:
    """All k x k minors of a 4x4 symbolic matrix."""
    from itertools import combinations

    out = []
    for rows_idx in combinations(range(4), k):
        for cols_idx in combinations(range(4), k):
            sub = [[entries[i][j] for j in cols_idx] for i in rows_idx]
            out.append(det_mpoly(sub))
    return out


def generic_rank(mats: Sequence[Mat4]) -> int:
    """Rank of a generic element of span(mats): the largest k with a k-minor
    of sum t_i mats[i] not identically zero."""
    if not mats:
        return 0
    entries = symbolic_combo(list(mats))
    for k in range(4, 0, -1):
        if any(not mnr.is_zero() for mnr in symbolic_minors(entries, k)):
            return k
    return 0
