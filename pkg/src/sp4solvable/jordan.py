"""Jordan-Chevalley decomposition over Q and conjugacy typing of elements.

The decomposition X = S + N (S semisimple, N nilpotent, [S,N] = 0) is computed
by Newton iteration on the squarefree part g of the characteristic polynomial:
S <- S - g(S) g'(S)^{-1} starting from S = X.  Over a perfect field g and g'
are coprime, so g'(S) stays invertible along the iteration, and for 4x4
matrices the iteration stabilizes after at most two steps.

Element classification follows the two conjugacy tables: semisimple elements
are Weyl-normalized diagonal parameters; nilpotent elements are typed by their
Jordan block sizes (三 nonzero orbits: blocks (2,1,1), (2,2), (4)); mixed
elements land in one of the two nontrivial-Jordan rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IrrationalSpectrum, NotInBorel, NotInSp4, NotSemisimple
from .linalg import (Mat4, char_poly, kernel_of_rows, poly_eval_mat,
                     rational_roots, inverse)
from .rational import Q, ZERO, format_rational
from .sp4 import (bracket, conjugate, in_sp4, root_value, shear,
                  standard_subalgebra)

__all__ = [
    "JordanDecomposition", "jordan_decompose", "is_semisimple",
    "is_nilpotent_mat", "jordan_type", "OrbitLabel", "classify_element",
    "conjugate_ss_into_cartan",
]


@dataclass(frozen=True)
class JordanDecomposition:
    semisimple: Mat4
    nilpotent: Mat4

    def check(self, original: Mat4) -> bool:
        """All four defining invariants, bit-exactly."""
        s, n = self.semisimple, self.nilpotent
        if s + n != original:
            return False
        if bracket(s, n) != Mat4.zero():
            return False
        if not (n * n * n * n).is_zero():
            return False
        g = char_poly(s).squarefree_part()
        return poly_eval_mat(g, s).is_zero()


def jordan_decompose(x: Mat4) -> JordanDecomposition:
    """The unique Chevalley decomposition, computed exactly."""
    g = char_poly(x).squarefree_part()
    s = x
    gs = poly_eval_mat(g, s)
    while not gs.is_zero():
        s = s - gs * inverse(poly_eval_mat(g.derivative(), s))
        gs = poly_eval_mat(g, s)
    return JordanDecomposition(s, x - s)


def is_semisimple(x: Mat4) -> bool:
    return jordan_decompose(x).nilpotent.is_zero()


def is_nilpotent_mat(x: Mat4) -> bool:
    return jordan_decompose(x).semisimple.is_zero()


def jordan_type(x: Mat4) -> dict:
    """Jordan block sizes per rational eigenvalue: {eigenvalue: [sizes]}.

    Requires the characteristic polynomial to split over Q; otherwise raises
    IrrationalSpectrum (callers fall back to comparing polynomials).
    """
    p = char_poly(x)
    roots = rational_roots(p)
    if sum(roots.values()) != 4:
        raise IrrationalSpectrum(
            "characteristic polynomial does not split over Q: "
            + repr(p))
    out: dict = {}
    for lam, mult in roots.items():
        shifted = x - Mat4.identity() * lam
        kdims = [0]
        power = Mat4.identity()
        for k in range(1, mult + 1):
            power = power * shifted
            kdims.append(len(kernel_of_rows([list(r) for r in power.rows], 4)))
        blocks_ge = [kdims[k] - kdims[k - 1] for k in range(1, len(kdims))]
        sizes = []
        for k in range(len(blocks_ge), 0, -1):
            count = blocks_ge[k - 1] - (blocks_ge[k] if k < len(blocks_ge) else 0)
            sizes.extend([k] * count)
        out[lam] = sorted(sizes, reverse=True)
    return out


# ---------------------------------------------------------------------------
# element classification per the conjugacy tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitLabel:
    """One row of the one-dimensional conjugacy tables, with parameters."""

    table: int
    row: str
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "params": {k: format_rational(v) for k, v in self.params.items()},
        }

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrbitLabel) and self.table == other.table
                and self.row == other.row and self.params == other.params)

    def __hash__(self) -> int:
        return hash((self.table, self.row, tuple(sorted(
            (k, format_rational(v)) for k, v in self.params.items()))))


def _abs_key(q):
    """Deterministic total order key on rationals by 'size then sign'."""
    q = Q(q)
    return (abs(int(q.numerator)) * int(q.denominator),
            abs(int(q.numerator)),
            0 if q >= 0 else 1)


def _weyl_canonical(a, b) -> tuple:
    """Canonical representative of the Weyl orbit {(±a, ±b), (±b, ±a)},
    minimizing (key(a), key(b)) in the fixed total order."""
    cands = set()
    for x, y in ((a, b), (b, a)):
        for sx in (x, -x):
            for sy in (y, -y):
                cands.add((Q(sx), Q(sy)))
    return min(cands, key=lambda p: (_abs_key(p[0]), _abs_key(p[1])))


def _eigen_pair(x: Mat4) -> tuple:
    """Extract (a, b) with spectrum {a, b, -a, -b} from a rational-spectrum
    sp(4) element's characteristic polynomial."""
    roots = rational_roots(char_poly(x))
    if sum(roots.values()) != 4:
        raise IrrationalSpectrum("element has irrational eigenvalues")
    vals: list = []
    for lam, mult in sorted(roots.items(), key=lambda kv: _abs_key(kv[0])):
        vals.extend([lam] * mult)
    pos = sorted([v for v in vals if v > 0], key=_abs_key)
    zeros = [v for v in vals if v == 0]
    # pair up: nonzero eigenvalues occur in +/- pairs, zeros pad
    picked = pos + zeros[: max(0, 2 - len(pos))]
    return picked[0], picked[1]


def classify_element(x: Mat4) -> OrbitLabel:
    """Assign the conjugacy-table row of an sp(4) element (rational spectrum).

    Semisimple: table 1, Weyl-normalized (a, b).  Nilpotent: one of the three
    nonzero nilpotent rows (or zero), typed by Jordan blocks.  Mixed: one of
    the two nontrivial-Jordan rows, typed by (Jordan type, eigenvalues).
    """
    if not in_sp4(x):
        raise NotInSp4("classify_element needs an sp(4) element")
    dec = jordan_decompose(x)
    if dec.nilpotent.is_zero():
        a, b = _eigen_pair(x)
        a, b = _weyl_canonical(a, b)
        if a == 0 and b == 0:
            return OrbitLabel(1, "zero", {})
        if b == 0 or a == 0:
            nz = a if b == 0 else b
            return OrbitLabel(1, "T_a0", {"a": abs(nz)})
        if a == b or a == -b:
            return OrbitLabel(1, "T_aa", {"a": abs(a)})
        return OrbitLabel(1, "T_ab", {"a": a, "b": b})
    if dec.semisimple.is_zero():
        jt = jordan_type(x)[ZERO]
        if jt == [2, 1, 1]:
            return OrbitLabel(2, "X_alpha", {})
        if jt == [2, 2]:
            return OrbitLabel(2, "X_beta", {})
        if jt == [4]:
            return OrbitLabel(2, "X_alpha_plus_X_beta", {})
        return OrbitLabel(1, "zero", {})
    # mixed: the semisimple part is non-regular with eigenvalues (a,0,-a,0)
    # [row T_{a,0}+X_alpha] or (a,a,-a,-a) [row T_{a,a}+X_beta]
    a, b = _eigen_pair(dec.semisimple)
    if a == 0 or b == 0:
        return OrbitLabel(2, "T_a0_plus_X_alpha", {"a": abs(a if b == 0 else b)})
    return OrbitLabel(2, "T_aa_plus_X_beta", {"a": abs(a)})


# ---------------------------------------------------------------------------
# constructive Cartan reduction inside the Borel
# ---------------------------------------------------------------------------

_BOREL = standard_subalgebra("b")
_HEIGHT_ORDER = ("beta", "alpha", "alpha_plus_beta", "alpha_plus_2beta")


def _borel_components(x: Mat4):
    """Split x in b as (a, b, {root: coefficient}); raises NotInBorel."""
    if not _BOREL.contains(x):
        raise NotInBorel("element is outside the fixed Borel subalgebra")
    a = x.entry(0, 0)
    b = x.entry(1, 1)
    coeffs = {
        "beta": x.entry(0, 1),
        "alpha": x.entry(1, 3),
        "alpha_plus_beta": x.entry(0, 3),
        "alpha_plus_2beta": x.entry(0, 2),
    }
    return a, b, coeffs


def conjugate_ss_into_cartan(x: Mat4) -> tuple[Mat4, tuple]:
    """For semisimple x in b, a Borel element g with g x g^{-1} = T diagonal.

    Returns (g, (a, b)) with g x g^{-1} = T_{a,b}; the diagonal equals the
    t-part of x.  Root components are cleared by shears id + z X_gamma with
    z = c_gamma / gamma(T), sweeping in height order until nothing is left;
    a shear never disturbs components at lower heights, so at most four are
    needed.  Components surviving at roots with gamma(T) = 0 commute with the
    diagonal part, which contradicts semisimplicity.
    """
    a, b, _ = _borel_components(x)
    g = Mat4.identity()
    cur = x
    for _ in range(5):
        _, _, coeffs = _borel_components(cur)
        if all(c == 0 for c in coeffs.values()):
            return g, (a, b)
        progressed = False
        for label in _HEIGHT_ORDER:
            c = coeffs[label]
            if c == 0:
                continue
            ev = root_value(label, a, b)
            if ev == 0:
                continue
            s = shear(label, c / ev)
            cur = conjugate(s, cur)
            g = s * g
            progressed = True
            break
        if not progressed:
            raise NotSemisimple(
                "element is not semisimple: nilpotent component commutes "
                "with its diagonal part")
    raise NotSemisimple("element is not semisimple")
