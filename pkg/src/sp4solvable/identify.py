"""Identification of solvable structure constants against the catalogs.

`identify_degraaf` decides the dimension <= 3 classification completely and,
in dimension 4, the families occurring in this classification (M2, M6, M7,
M8, M12, M13, M14), raising UnrecognizedFamily for anything else.  The
decision tree works on intrinsic data: the derived subalgebra D, its
centralizer, and the adjoint action of a complement element, normalized by
the scaling freedom (trace normalization; squarefree/cubefree kernels for
the weight-graded parameters).

`degraaf_to_sw` translates to the second catalog; the only analytic step,
choosing the square-root branch in lambda = (1 + 2a + sqrt(1+4a)) / (-2a),
is done exactly: the two branches multiply to 1, so exactly one satisfies
0 < |lambda| <= 1, and for irrational discriminants the comparison is decided
in the quadratic extension (for negative discriminants |lambda| = 1 and the
positive-imaginary branch has argument in (0, pi)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DimensionMismatch, OutOfCatalog, UnrecognizedFamily,
                     UnsupportedDimension, ZeroParameter)
from .linalg import Poly, char_poly_rows, kernel_of_rows, rational_roots, rref, solve_coords
from .presentations import DeGraafClass, SWClass
from .rational import (Q, ZERO, ONE, format_rational, rational_nth_root,
                       rational_sqrt, squarefree_kernel)
from .structure import StructureConstants

__all__ = [
    "identify_degraaf", "degraaf_to_sw", "normalize_sw_param", "sw_lambda",
    "QuadraticValue", "IsoMap", "verify_isomorphism", "tri_algebra_constants",
    "sw_bridge_map",
]


# ---------------------------------------------------------------------------
# helpers on coordinate subspaces
# ---------------------------------------------------------------------------

def _unit(d: int, i: int) -> tuple:
    return tuple(ONE if j == i else ZERO for j in range(d))


def _complement_vector(d: int, span_rows: list[tuple]) -> tuple:
    for i in range(d):
        if solve_coords(span_rows, _unit(d, i)) is None:
            return _unit(d, i)
    raise UnrecognizedFamily("no complement vector found")


def _ad_on(sc: StructureConstants, y: tuple, sub_rows: list[tuple]) -> list[list]:
    """Matrix (rows) of ad(y) on an ad-stable coordinate subspace."""
    cols = []
    for v in sub_rows:
        w = sc.bracket_coords(y, v)
        c = solve_coords(sub_rows, w)
        if c is None:
            raise UnrecognizedFamily("derived subalgebra is not ad-stable")
        cols.append(c)
    k = len(sub_rows)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _is_scalar(m: list[list]) -> bool:
    k = len(m)
    return all(m[i][j] == (m[0][0] if i == j else 0) for i in range(k) for j in range(k))


def _is_cyclic3(m: list[list]) -> bool:
    """A 3x3 matrix is cyclic iff its minimal polynomial has degree 3,
    i.e. m^2 is not a linear combination of I and m."""
    k = 3
    m2 = [[sum(m[i][t] * m[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
    rows = []
    for mat in ([[1 if i == j else 0 for j in range(k)] for i in range(k)], m, m2):
        rows.append(tuple(Q(mat[i][j]) for i in range(k) for j in range(k)))
    return len(rref(rows)) == 3


def _centralizer_of(sc: StructureConstants, sub_rows: list[tuple]) -> list[tuple]:
    d = sc.dim
    eqs = []
    for v in sub_rows:
        # rows of the linear map y -> [y, v]
        cols = [sc.bracket_coords(_unit(d, i), v) for i in range(d)]
        for r in range(d):
            eqs.append(tuple(cols[i][r] for i in range(d)))
    return kernel_of_rows(eqs, d)


def _cubefree_normalize_m7(A, B) -> tuple:
    """Canonical (A, B) for M7 under (A, B) -> (s^3 A, s^2 B)."""
    if A == 0:
        return ZERO, squarefree_kernel(B)
    target = _cubefree_kernel(A)
    s3 = A / target
    s = rational_nth_root(s3, 3)
    if s is None:
        # fall back: normalize B instead (A determined up to cubes of s)
        bk = squarefree_kernel(B) if B != 0 else ZERO
        return A, bk
    return target, B / (s * s)


def _cubefree_kernel(q):
    from .rational import factor_int
    q = Q(q)
    n = int(q.numerator) * int(q.denominator) ** 2  # q ~ n mod cubes
    sign = 1 if n > 0 else -1
    k = 1
    for p, e in factor_int(abs(n)).items():
        k *= p ** (e % 3)
    return Q(sign * k)


# ---------------------------------------------------------------------------
# the identifier
# ---------------------------------------------------------------------------

def identify_degraaf(sc: StructureConstants) -> DeGraafClass:
    """Identify solvable structure constants of dimension <= 4."""
    d = sc.dim
    if d < 1 or d > 4:
        raise UnsupportedDimension(f"identification implemented for dims 1..4, got {d}")
    if d == 1:
        return DeGraafClass("J")
    derived = sc.derived_coords()
    if d == 2:
        return DeGraafClass("K1" if not derived else "K2")
    if d == 3:
        return _identify_dim3(sc, derived)
    return _identify_dim4(sc, derived)


def _identify_dim3(sc: StructureConstants, derived: list[tuple]) -> DeGraafClass:
    d = 3
    k = len(derived)
    if k == 0:
        return DeGraafClass("L1")
    if k == 1:
        # Heisenberg (nilpotent) is L4_0; the non-nilpotent K2 (+) J is L3_0
        z = derived[0]
        central = all(all(c == 0 for c in sc.bracket_coords(_unit(d, i), z))
                      for i in range(d))
        return DeGraafClass("L4", (ZERO,)) if central else DeGraafClass("L3", (ZERO,))
    if k == 2:
        y = _complement_vector(d, derived)
        m = _ad_on(sc, y, derived)
        if _is_scalar(m):
            return DeGraafClass("L2")
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if tr != 0:
            return DeGraafClass("L3", (-det / (tr * tr),))
        return DeGraafClass("L4", (squarefree_kernel(-det),))
    raise UnrecognizedFamily("3-dimensional algebra with derived dimension 3 is not solvable")


def _identify_dim4(sc: StructureConstants, derived: list[tuple]) -> DeGraafClass:
    d = 4
    k = len(derived)
    if k == 0:
        raise UnrecognizedFamily("abelian of dimension 4 (not among occurring families)")
    if k == 1:
        raise UnrecognizedFamily("derived dimension 1 (not among occurring families)")
    if k == 3:
        return _identify_dim4_derived3(sc, derived)
    return _identify_dim4_derived2(sc, derived)


def _identify_dim4_derived3(sc: StructureConstants, derived: list[tuple]) -> DeGraafClass:
    d = 4
    d_abelian = all(all(c == 0 for c in sc.bracket_coords(u, v))
                    for u in derived for v in derived)
    y = _complement_vector(d, derived)
    m = _ad_on(sc, y, derived)
    if d_abelian:
        if _is_scalar(m):
            return DeGraafClass("M2")
        if not _is_cyclic3(m):
            raise UnrecognizedFamily("non-cyclic action on abelian nilradical")
        p = char_poly_rows(m)  # t^3 - e1 t^2 + e2 t - e3
        tr = -p[2]
        if tr != 0:
            # rescale y by 1/tr: char poly becomes t^3 - t^2 - B t - A
            e3 = -p[0]
            e2 = p[1]
            A = e3 / tr**3
            B = -e2 / tr**2
            return DeGraafClass("M6", (A, B))
        e3 = -p[0]
        e2 = p[1]
        A, B = _cubefree_normalize_m7(e3, -e2)
        return DeGraafClass("M7", (A, B))
    # Heisenberg nilradical: z = [D, D] is a line
    zrows = rref([sc.bracket_coords(u, v) for u in derived for v in derived])
    if len(zrows) != 1:
        raise UnrecognizedFamily("unexpected derived structure")
    # action of y on D modulo z, in a basis of D completing z
    p_rows = _quotient_action(sc, y, derived, zrows[0])
    tr = p_rows[0][0] + p_rows[1][1]
    det = p_rows[0][0] * p_rows[1][1] - p_rows[0][1] * p_rows[1][0]
    if _is_scalar(p_rows):
        return DeGraafClass("M12")
    if tr != 0:
        return DeGraafClass("M13", (-det / (tr * tr),))
    if det != 0:
        return DeGraafClass("M14", (squarefree_kernel(-det),))
    raise UnrecognizedFamily("nilpotent action on Heisenberg nilradical")


def _quotient_action(sc: StructureConstants, y: tuple, derived: list[tuple],
                     z: tuple) -> list[list]:
    comp = [v for v in derived if solve_coords(rref([z]), v) is None]
    basis = []
    for v in comp:
        if solve_coords(rref([z] + basis), v) is None:
            basis.append(v)
        if len(basis) == 2:
            break
    if len(basis) != 2:
        raise UnrecognizedFamily("Heisenberg quotient has unexpected dimension")
    cols = []
    for v in basis:
        w = sc.bracket_coords(y, v)
        c = _solve_in([z] + basis, w)  # coords in (z, b1, b2)
        if c is None:
            raise UnrecognizedFamily("action does not stabilize the nilradical")
        cols.append((c[1], c[2]))
    return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]


def _solve_in(vectors: list[tuple], w: tuple):
    """Coordinates of w in the span of (independent) vectors, or None."""
    n = len(w)
    k = len(vectors)
    aug = [tuple(vectors[i][r] for i in range(k)) + (w[r],) for r in range(n)]
    red = rref(aug)
    coords = [ZERO] * k
    for row in red:
        p = next(i for i, x in enumerate(row) if x != 0)
        if p == k:
            return None
        coords[p] = row[k]
    return tuple(coords)


def _identify_dim4_derived2(sc: StructureConstants, derived: list[tuple]) -> DeGraafClass:
    d = 4
    cent = _centralizer_of(sc, derived)
    dim_c = len(cent)
    if dim_c == 3:
        c_abelian = all(all(c == 0 for c in sc.bracket_coords(u, v))
                        for u in cent for v in cent)
        if not c_abelian:
            raise UnrecognizedFamily("non-abelian centralizer of the derived subalgebra")
        crows = rref(cent)
        y = _complement_vector(d, crows)
        m = _ad_on(sc, y, crows)
        if not _is_cyclic3(m):
            raise UnrecognizedFamily("non-cyclic action on abelian nilradical")
        p = char_poly_rows(m)
        tr = -p[2]
        e3 = -p[0]
        e2 = p[1]
        if tr != 0:
            A = e3 / tr**3
            B = -e2 / tr**2
            if A != 0:
                raise UnrecognizedFamily("inconsistent derived dimension for M6")
            return DeGraafClass("M6", (ZERO, B))
        A, B = _cubefree_normalize_m7(e3, -e2)
        return DeGraafClass("M7", (A, B))
    if dim_c == 2:
        # L = ad(g) restricted to D is a 2-dimensional abelian family
        drows = rref(derived)
        mats = []
        for i in range(d):
            rows = _ad_on(sc, _unit(d, i), drows)
            mats.append((rows[0][0], rows[0][1], rows[1][0], rows[1][1]))
        lbasis = rref(mats)
        if len(lbasis) != 2:
            raise UnrecognizedFamily("unexpected adjoint image on derived subalgebra")
        u, v = lbasis
        tr_u = u[0] + u[3]
        tr_v = v[0] + v[3]
        if (tr_u, tr_v) == (0, 0):
            raise UnrecognizedFamily("traceless adjoint pair (not among occurring families)")
        n0 = tuple(-tr_v * a + tr_u * b for a, b in zip(u, v))
        det_n0 = n0[0] * n0[3] - n0[1] * n0[2]
        identity = (ONE, ZERO, ZERO, ONE)
        has_identity = solve_coords(lbasis, identity) is not None
        if det_n0 == 0:
            if has_identity and any(x != 0 for x in n0):
                return DeGraafClass("M13", (ZERO,))
            raise UnrecognizedFamily("nilpotent adjoint direction without scaling element")
        # semisimple pair: M8 needs a rational eigen-splitting
        if rational_sqrt(-det_n0) is None:
            raise UnrecognizedFamily("irrational joint eigenvalues (not among occurring families)")
        return DeGraafClass("M8")
    raise UnrecognizedFamily("central derived subalgebra of dimension 2")


# ---------------------------------------------------------------------------
# translation to the second catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticValue:
    """p + q*sqrt(dsc) (real) or p + q*i*sqrt(|dsc|) (imaginary), exact."""

    p: object
    q: object
    dsc: object
    imaginary: bool = False

    def __str__(self) -> str:
        rad = f"sqrt({format_rational(self.dsc)})"
        if self.imaginary:
            rad = f"i*{rad}"
        return f"({format_rational(self.p)}+{format_rational(self.q)}*{rad})"


def sw_lambda(alpha):
    """The normalized parameter lambda = (1+2a+sqrt(1+4a))/(-2a) with the
    branch satisfying 0 < |lambda| <= 1 (argument in (0, pi) when complex)."""
    alpha = Q(alpha)
    if alpha == 0:
        raise ZeroParameter("lambda normalization needs a nonzero parameter")
    if alpha == Q(-1, 4):
        raise OutOfCatalog("the -1/4 class translates to its own row")
    disc = 1 + 4 * alpha
    s = rational_sqrt(disc)
    if s is not None:
        lam1 = (1 + 2 * alpha + s) / (-2 * alpha)
        lam2 = (1 + 2 * alpha - s) / (-2 * alpha)
        # the two branches multiply to 1, so exactly one has |.| <= 1
        return lam1 if abs(lam1) <= 1 else lam2
    if disc > 0:
        # lambda = p + q*sqrt(disc); |lambda| < 1 iff its inverse (conjugate
        # branch) has modulus > 1; decide by comparing (p-1, p+1) signs
        p0 = (1 + 2 * alpha) / (-2 * alpha)
        q0 = 1 / (-2 * alpha)
        for q in (q0, -q0):
            if _quad_abs_lt_one(p0, q, disc):
                kern = squarefree_kernel(disc)
                scale = rational_sqrt(disc / kern)
                return QuadraticValue(p0, q * scale, kern)
        raise OutOfCatalog("no branch satisfied the modulus condition")
    # complex conjugate branches of modulus 1; take positive imaginary part
    p0 = (1 + 2 * alpha) / (-2 * alpha)
    q0 = 1 / (-2 * alpha)  # positive: alpha < -1/4 < 0
    kern = squarefree_kernel(-disc)
    scale = rational_sqrt(-disc / kern)
    return QuadraticValue(p0, q0 * scale, kern, imaginary=True)


def _quad_abs_lt_one(p, q, disc) -> bool:
    """Exact test |p + q*sqrt(disc)| < 1 for irrational sqrt(disc) > 0."""
    # p + q*sqrt(disc) < 1  and  > -1
    return _quad_lt(p - 1, q, disc) and _quad_lt(-1 - p, -q, disc)


def _quad_lt(p, q, disc) -> bool:
    """Exact test p + q*sqrt(disc) < 0 (sqrt(disc) irrational positive)."""
    if q == 0:
        return p < 0
    if p == 0:
        return q < 0
    if p < 0 and q < 0:
        return True
    if p > 0 and q > 0:
        return False
    # opposite signs: compare p^2 vs q^2 * disc
    if p < 0:  # need q*sqrt(disc) < -p i.e. q^2 disc < p^2
        return q * q * disc < p * p
    return p * p < q * q * disc


def normalize_sw_param(A, family: str):
    """Family-allowed normalization of a class parameter (exact for rational
    input).  For s_{3,1}: A or 1/A so that 0 < |A| <= 1.  For s_{4,8}: the
    same, with A = -1 excluded."""
    A = Q(A)
    if A == 0:
        raise ZeroParameter(f"{family} parameter must be nonzero")
    out = A if abs(A) <= 1 else 1 / A
    if family == "s_{4,8}" and out == -1:
        raise OutOfCatalog("s_{4,8} requires arg(A) < pi; the A = -1 case is s_{4,6}")
    if family not in ("s_{3,1}", "s_{4,8}"):
        raise OutOfCatalog(f"no single-parameter normalization for {family}")
    return out


def degraaf_to_sw(c: DeGraafClass) -> SWClass:
    """The indecomposable-catalog label of a de Graaf class occurring here."""
    f, pr = c.family, c.params
    if f == "J":
        return SWClass("n_{1,1}")
    if f == "K1":
        return SWClass("2n_{1,1}")
    if f == "K2":
        return SWClass("s_{2,1}")
    if f == "L1":
        return SWClass("3n_{1,1}")
    if f == "L2":
        return SWClass("s_{3,1}", (ONE,))
    if f == "L3":
        (a,) = pr
        if a == 0:
            return SWClass("n_{1,1}+s_{2,1}")
        if a == Q(-1, 4):
            return SWClass("s_{3,2}")
        return SWClass("s_{3,1}", (sw_lambda(a),))
    if f == "L4":
        (a,) = pr
        if a == 0:
            return SWClass("n_{3,1}")
        if a == 1:
            return SWClass("s_{3,1}", (Q(-1),))
        raise OutOfCatalog(f"L4({format_rational(a)}) does not occur in the tables")
    if f == "M2":
        return SWClass("s_{4,3}", (ONE, ONE))
    if f == "M8":
        return SWClass("s_{4,12}")
    if f == "M12":
        return SWClass("s_{4,8}", (ONE,))
    if f == "M13":
        (a,) = pr
        if a == 0:
            return SWClass("s_{4,11}")
        if a == Q(-1, 4):
            return SWClass("s_{4,10}")
        return SWClass("s_{4,8}", (sw_lambda(a),))
    if f == "M14":
        (a,) = pr
        if a == 1:
            return SWClass("s_{4,6}")
        raise OutOfCatalog(f"M14({format_rational(a)}) does not occur in the tables")
    if f == "M7":
        a, b = pr
        if a != 0:
            raise OutOfCatalog("M7 with nonzero cubic parameter does not occur")
        if b == 0:
            return SWClass("n_{4,1}")
        if squarefree_kernel(b) == 1:
            return SWClass("n_{1,1}+s_{3,1}", (Q(-1),))
        raise OutOfCatalog("M7(0, non-square) does not occur in the tables")
    if f == "M6":
        a, b = pr
        if a == 0:
            if b == 0:
                raise OutOfCatalog("M6(0,0) does not occur in the tables")
            if b == Q(-1, 4):
                return SWClass("n_{1,1}+s_{3,2}")
            return SWClass("n_{1,1}+s_{3,1}", (sw_lambda(b),))
        roots = rational_roots(Poly([-a, -b, -1, 1]))
        if sum(roots.values()) != 3:
            raise OutOfCatalog("M6 with irrational nilradical eigenvalues")
        if len(roots) == 1:
            # triple root; the sum of roots is 1 so it is 1/3
            return SWClass("s_{4,2}")
        if len(roots) == 2:
            raise OutOfCatalog("M6 with a repeated eigenvalue (s_{4,4}) does not occur")
        return SWClass("s_{4,3}", _normalize_s43(sorted(roots)))
    raise OutOfCatalog(f"no translation for {c}")


def _normalize_s43(eigs: list) -> tuple:
    """Normalize three distinct nonzero eigenvalues to (1, A, B) with
    0 < |B| <= |A| <= 1 and (A, B) != (-1, -1), dividing by one of them."""
    best = None
    for r in eigs:
        rest = sorted((e / r for e in eigs if e is not r),
                      key=lambda x: (-abs(x), x < 0))
        a, b = rest
        if 0 < abs(b) <= abs(a) <= 1 and (a, b) != (-1, -1):
            cand = (a, b)
            if best is None or (abs(cand[0]), abs(cand[1]), cand) < (abs(best[0]), abs(best[1]), best):
                best = cand
    if best is None:
        raise OutOfCatalog("eigenvalues admit no s_{4,3} normalization")
    return best


# ---------------------------------------------------------------------------
# explicit isomorphism verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsoMap:
    """A linear map: column i is the image of source basis vector i, written
    in target coordinates."""

    columns: tuple

    @classmethod
    def from_columns(cls, cols) -> "IsoMap":
        return cls(tuple(tuple(Q(x) for x in col) for col in cols))

    def apply(self, vec) -> tuple:
        n = len(self.columns[0])
        out = [ZERO] * n
        for c, col in zip(vec, self.columns):
            if c != 0:
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    def perturb(self, i: int, j: int, delta) -> "IsoMap":
        cols = [list(c) for c in self.columns]
        cols[i][j] += Q(delta)
        return IsoMap.from_columns(cols)


def verify_isomorphism(sc_source: StructureConstants,
                       sc_target: StructureConstants,
                       iso: IsoMap) -> bool:
    """True iff the map is a linear bijection carrying the source bracket to
    the target bracket, checked exactly on all basis pairs."""
    d = sc_source.dim
    if sc_target.dim != d or len(iso.columns) != d or any(len(c) != d for c in iso.columns):
        raise DimensionMismatch("isomorphism map has inconsistent dimensions")
    if len(rref(list(iso.columns))) != d:
        return False
    for i in range(d):
        for j in range(i + 1, d):
            src = sc_source.table[i][j]
            lhs = iso.apply(src)
            rhs = sc_target.bracket_coords(iso.columns[i], iso.columns[j])
            if tuple(lhs) != tuple(rhs):
                return False
    return True


def tri_algebra_constants(r) -> StructureConstants:
    """The abstract algebra <T, A, B> with [T,A] = 2A, [T,B] = rB, [A,B] = 0
    (basis order T, A, B)."""
    return StructureConstants.from_brackets(
        3, {(0, 1): {1: 2}, (0, 2): {2: Q(r)}})


# ---------------------------------------------------------------------------
# explicit bridges into the second catalog
# ---------------------------------------------------------------------------

def sw_bridge_map(c: DeGraafClass):
    """The explicit isomorphism realizing degraaf_to_sw, bracket-verifiable.

    Returns (bridge_class, iso) with iso mapping the class presentation onto
    the bridge presentation.  The bridge class equals degraaf_to_sw(c) except
    for M8, whose label is the complex class s_{4,12} while the rational
    bridge is onto the direct sum 2s_{2,1}.  Raises OutOfCatalog where the
    translated parameter is irrational.
    """
    label = degraaf_to_sw(c)
    if any(isinstance(p, QuadraticValue) for p in label.params):
        raise OutOfCatalog("bridge needs a rational normalized parameter")
    f, pr = c.family, c.params
    d = {"J": 1, "K1": 2, "K2": 2, "L1": 3, "L2": 3, "L3": 3, "L4": 3}.get(f, 4)
    ident = tuple(tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d))
    if f in ("J", "K1", "L1", "L2", "M2"):
        cols = ident
    elif f == "K2":
        cols = ((0, 1), (1, 0))
    elif f == "L3":
        (al,) = pr
        if al == 0:
            cols = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
        elif al == Q(-1, 4):
            cols = ((2, -1, 0), (Q(1, 2), Q(-1, 2), 0), (0, 0, Q(1, 2)))
        else:
            cols = _l3_bridge(al, label.params[0])
    elif f == "L4":
        (al,) = pr
        cols = (((0, 0, 1), (1, 0, 0), (0, 1, 0)) if al == 0
                else ((1, 1, 0), (1, -1, 0), (0, 0, 1)))
    elif f == "M8":
        label = SWClass("2s_{2,1}")
        cols = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
    elif f == "M12":
        cols = ((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))
    elif f == "M13":
        (al,) = pr
        if al == 0:
            cols = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 1, -1, 0), (0, 0, 0, 1))
        elif al == Q(-1, 4):
            cols = ((0, Q(1, 2), Q(1, 2), 0), (Q(-1, 2), 0, 0, 0),
                    (0, 0, 1, 0), (0, 0, 0, Q(1, 2)))
        else:
            cols = _m13_bridge(al, label.params[0])
    elif f == "M14":
        cols = ((0, Q(1, 2), Q(1, 2), 0), (Q(1, 2), 0, 0, 0),
                (0, Q(1, 2), Q(-1, 2), 0), (0, 0, 0, 1))
    elif f == "M7":
        a, b = pr
        if (a, b) == (0, 0):
            cols = ((0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1))
        else:  # M7(0,1)
            cols = ((1, Q(1, 2), Q(-1, 2), 0), (0, Q(1, 2), Q(1, 2), 0),
                    (0, Q(1, 2), Q(-1, 2), 0), (0, 0, 0, 1))
    elif f == "M6":
        a, b = pr
        if a == 0 and b == Q(-1, 4):
            # central slot first, then the s_{3,2} block
            cols = ((1, 2, -1, 0), (0, Q(1, 2), Q(-1, 2), 0),
                    (0, 0, Q(-1, 4), 0), (0, 0, 0, Q(1, 2)))
        elif a == 0:
            cols = _m6_split_bridge(b, label.params[0])
        elif (a, b) == (Q(1, 27), Q(-1, 3)):
            cols = _m6_jordan_chain_bridge()
        else:
            cols = _m6_s43_bridge(a, b, label.params)
    else:
        raise OutOfCatalog(f"no bridge for {c}")
    return label, IsoMap.from_columns(cols)


def _lambda_pair(lam):
    """lambda^+ + lambda^- = 1, lambda^+/lambda^- = lam (the chosen branch)."""
    lminus = 1 / (1 + Q(lam))
    return 1 - lminus, lminus


def _l3_bridge(al, lam):
    lplus, lminus = _lambda_pair(lam)
    s = lplus - lminus  # the chosen square root of 1 + 4*al
    x2 = (-1 / s, 1 / s, ZERO)
    x1 = ((1 + lminus / s) / al, -lminus / (s * al), ZERO)
    x3 = (ZERO, ZERO, -al / lplus)
    return (x1, x2, x3)


def _m13_bridge(al, lam):
    lplus, lminus = _lambda_pair(lam)
    s = lplus - lminus
    x2 = (1 / (al * s), ZERO, ZERO, ZERO)
    x1 = (ZERO, -1 / s, 1 / s, ZERO)
    x3 = (ZERO, (1 + lminus / s) / al, -lminus / (s * al), ZERO)
    x4 = (ZERO, ZERO, ZERO, 1 / (1 + lam))
    return (x1, x2, x3, x4)


def _m6_split_bridge(b, lam):
    """M6(0,B) onto n_{1,1} (+) s_{3,1}(lam): slot 0 is the center."""
    lplus, lminus = _lambda_pair(lam)
    s = lplus - lminus
    # e1 = B x2 + lminus x3, e2 = B x2 + lplus x3 in the solvable block,
    # and B x1 + x2 - x3 spans the center
    x3 = (ZERO, -1 / s, 1 / s, ZERO)
    x2 = (ZERO, (1 + lminus / s) / b, -lminus / (s * b), ZERO)
    x1 = tuple(((1 if i == 0 else 0) - x2[i] + x3[i]) / b for i in range(4))
    x4 = (ZERO, ZERO, ZERO, -b / lplus)
    return (x1, x2, x3, x4)


def _m6_jordan_chain_bridge():
    """M6(1/27,-1/3) onto the maximal-Jordan-block class: e4 <-> 3 x4 and a
    chain u1, v, w of ad(3 x4) - 1 on the nilradical."""
    sc = StructureConstants.from_brackets(
        4, {(3, 0): {1: 1}, (3, 1): {2: 1},
            (3, 2): {0: Q(1, 27), 1: Q(-1, 3), 2: 1}})
    # ad(3 x4) - id on span(x1, x2, x3), columns in that basis
    m = [[ZERO] * 3 for _ in range(3)]
    for j in range(3):
        img = sc.bracket_coords((ZERO, ZERO, ZERO, Q(3)), _unit(4, j))
        for i in range(3):
            m[i][j] = img[i] - (1 if i == j else 0)
    w = [ONE, ZERO, ZERO]
    v = [sum(m[i][j] * w[j] for j in range(3)) for i in range(3)]
    u1 = [sum(m[i][j] * v[j] for j in range(3)) for i in range(3)]
    # invert (u1, v, w, 3x4) to columns x_i -> e-coordinates
    basis = [tuple(u1) + (ZERO,), tuple(v) + (ZERO,), tuple(w) + (ZERO,),
             (ZERO, ZERO, ZERO, Q(3))]
    cols = []
    for i in range(4):
        cols.append(_solve_in(basis, _unit(4, i)))
    return tuple(cols)


def _m6_s43_bridge(a, b, params):
    """M6(A,B) with three distinct rational nilradical eigenvalues onto
    s_{4,3}: eigenvectors of the companion action paired with (1, A', B')."""
    roots = rational_roots(Poly([-a, -b, -1, 1]))
    eigs = sorted(roots)
    ap, bp = params
    # the normalizing eigenvalue r' satisfies {others}/r' = {A', B'}
    rprime = None
    for r in eigs:
        rest = sorted((e / r for e in eigs if e != r),
                      key=lambda x: (-abs(x), x < 0))
        if tuple(rest) == (ap, bp):
            rprime = r
            break
    if rprime is None:
        raise OutOfCatalog("no normalizing eigenvalue for the bridge")
    # companion action of ad(x4) on (x1, x2, x3)
    m = [[ZERO, ZERO, Q(a)], [ONE, ZERO, Q(b)], [ZERO, ONE, ONE]]
    def eigvec(mu):
        rows = [[m[i][j] - (mu if i == j else 0) for j in range(3)] for i in range(3)]
        ker = kernel_of_rows(rows, 3)
        return ker[0]
    u1 = eigvec(rprime)
    us = eigvec(ap * rprime)
    ut = eigvec(bp * rprime)
    basis = [tuple(u1) + (ZERO,), tuple(us) + (ZERO,), tuple(ut) + (ZERO,),
             (ZERO, ZERO, ZERO, 1 / rprime)]
    return tuple(_solve_in(basis, _unit(4, i)) for i in range(4))
