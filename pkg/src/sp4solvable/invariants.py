"""Conjugacy invariants used in the inequivalence arguments.

The signature bundles, for a closed solvable subalgebra g of sp(4):

* dimension, derived and lower-central dimension chains, abelian/nilpotent
  flags;
* the subspace N(g) of nilpotent elements.  For solvable g whose elements have
  rational spectra this is exactly the radical of the trace form tr(xy) on g
  (in a common triangularizing basis a nilpotent element is strictly
  triangular, so it pairs to zero with everything; conversely a trace-radical
  element has rational eigenvalues with zero sum of squares, hence is
  nilpotent).  This is intrinsic, so it transports along conjugation.
* the rank stratification of N(g): exact pencil strata for dim 2 (counting
  rank-drop lines over the algebraic closure via squarefree degrees, with no
  polynomial factorization), generic rank for dim >= 3;
* whether g contains an invertible matrix (symbolic determinant over the
  basis, not sampling);
* semisimple content.  dim g - dim N(g) is 0, 1 or 2; 2 means g contains a
  Cartan subalgebra.  For codimension 1, g contains a nonzero semisimple
  element iff the Jordan nilpotent part of any x outside N(g) lies in N(g)
  (sweeping the nonzero ad(S)-weight components of x by unipotent
  conjugations inside g shows the condition does not depend on the choice
  of x in its coset);
* a canonical spectral probe.  For codimension 1 the triple (char poly of x,
  char poly of ad x on g, char poly of ad x on [g,g]) is constant on
  x + N(g), and the leftover scaling freedom is removed by weighted
  cross-ratio invariantization; rank-drop lines of the nilpotent pencil are
  ad(x)-invariant and contribute their ad-eigenvalues.

Every field is invariant under conjugation by rational symplectic matrices,
which is what the classification's equivalence relation restricts to on the
rational sample points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DependentInputs, IrrationalSpectrum, Sp4Error
from .linalg import (Mat4, Poly, char_poly, char_poly_rows, det_mpoly,
                     echelon_span, kernel_of_rows, rank, rational_roots,
                     symbolic_combo, Subspace)
from .rational import Q, ZERO, format_rational
from .sp4 import bracket
from .structure import Subalgebra, derived_series, lower_central_series
from .jordan import jordan_decompose

__all__ = [
    "PencilStrata", "pencil_rank_strata", "InvariantSignature", "signature",
    "nilpotent_subspace", "grid_pencil_ranks",
]


# ---------------------------------------------------------------------------
# pencil rank stratification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PencilStrata:
    """Ranks of t*n1 + n2 across the projective line of the pencil."""

    generic_rank: int
    rational_drops: tuple          # ((t, rank), ...) finite rational t
    infinity_rank: int | None      # rank of n1 when it drops below generic
    irrational_counts: tuple       # ((rank, count), ...) conjugate-pair lines

    def drop_line_count(self, r: int) -> int:
        """Number of lines (over the algebraic closure) of rank exactly r."""
        n = sum(1 for _, rr in self.rational_drops if rr == r)
        if self.infinity_rank == r:
            n += 1
        n += sum(c for rr, c in self.irrational_counts if rr == r)
        return n

    def as_list(self) -> list:
        out = [("generic", self.generic_rank)]
        out.extend((format_rational(t), r) for t, r in self.rational_drops)
        if self.infinity_rank is not None:
            out.append(("inf", self.infinity_rank))
        out.extend(("irrational", r) for r, c in self.irrational_counts for _ in range(c))
        return out

    def summary(self) -> tuple:
        """Canonical multiset (generic rank, ((rank, line count), ...))."""
        ranks = sorted({r for _, r in self.rational_drops}
                       | ({self.infinity_rank} - {None})
                       | {r for r, _ in self.irrational_counts})
        return (self.generic_rank,
                tuple((r, self.drop_line_count(r)) for r in ranks))


def _poly_minors(entries: list[list[Poly]], k: int) -> list[Poly]:
    out = []
    for rows_idx in combinations(range(4), k):
        for cols_idx in combinations(range(4), k):
            sub = [[entries[i][j] for j in cols_idx] for i in rows_idx]
            out.append(_det_of_polys(sub))
    return out


def _det_of_polys(entries: list[list[Poly]]) -> Poly:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    acc = Poly()
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entries[0][j] * _det_of_polys(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _gcd_list(polys: list[Poly]) -> Poly:
    acc = Poly()
    for p in polys:
        if p.is_zero():
            continue
        acc = p.monic() if acc.is_zero() else acc.gcd(p)
        if acc.degree == 0:
            break
    return acc


def pencil_rank_strata(n1: Mat4, n2: Mat4) -> PencilStrata:
    """Exact rank stratification of the pencil t*n1 + n2 (plus t = infinity).

    The generic rank is the largest k with a k-minor of t*n1 + n2 not
    identically zero.  Lines where the rank drops to <= k are the common
    roots of the (k+1)-minors; distinct-root counts over the algebraic
    closure come from squarefree degrees of minor gcds, and exact ranks at
    non-rational drops from polynomial divisibility, so no factorization is
    needed.
    """
    if echelon_span([n1, n2]).dim != 2:
        raise DependentInputs("pencil needs two independent matrices")
    entries = [[Poly([n2.rows[i][j], n1.rows[i][j]]) for j in range(4)]
               for i in range(4)]
    minors_by_k: dict[int, list[Poly]] = {}
    generic = 0
    for k in range(1, 5):
        mins = _poly_minors(entries, k)
        minors_by_k[k] = mins
        if any(not m.is_zero() for m in mins):
            generic = k
    # distinct finite lines with rank <= k, for k < generic
    le_roots: dict[int, int] = {}
    gcds: dict[int, Poly] = {}
    for k in range(generic):
        g = _gcd_list(minors_by_k[k + 1])
        gcds[k] = g
        le_roots[k] = 0 if g.degree <= 0 else g.squarefree_part().degree

    drop_poly = gcds.get(generic - 1, Poly.const(1))
    rational_drops = []
    rational_by_rank: dict[int, int] = {}
    if drop_poly.degree > 0:
        for t0 in sorted(rational_roots(drop_poly.squarefree_part()),
                         key=lambda q: (q.numerator, q.denominator)):
            m_t0 = Mat4([[entries[i][j](t0) for j in range(4)] for i in range(4)])
            r = rank(m_t0)
            rational_drops.append((t0, r))
            rational_by_rank[r] = rational_by_rank.get(r, 0) + 1
    inf_rank = rank(n1)
    infinity_rank = inf_rank if inf_rank < generic else None
    irrational = []
    for r in range(generic):
        total_r = le_roots.get(r, 0) - le_roots.get(r - 1, 0)
        missing = total_r - rational_by_rank.get(r, 0)
        if missing > 0:
            irrational.append((r, missing))
    return PencilStrata(generic, tuple(rational_drops), infinity_rank,
                        tuple(irrational))


def grid_pencil_ranks(n1: Mat4, n2: Mat4, lo: int = -20, hi: int = 20) -> dict:
    """Brute-force oracle: ranks of t*n1 + n2 over an integer grid plus the
    line of n1.  The grid can miss drops but never sees extra ones."""
    out = {}
    for t in range(lo, hi + 1):
        out[Q(t)] = rank(n1 * Q(t) + n2)
    out["inf"] = rank(n1)
    return out


# ---------------------------------------------------------------------------
# nilpotent subspace via the trace form
# ---------------------------------------------------------------------------

def nilpotent_subspace(g: Subalgebra) -> Subspace:
    """The subspace of nilpotent elements of g (trace-form radical).

    Raises IrrationalSpectrum if the radical contains a non-nilpotent element,
    which happens exactly when g has elements with irrational or complex
    eigenvalues (outside this library's domain).
    """
    basis = g.basis
    d = len(basis)
    gram = [[(basis[i] * basis[j]).trace() for j in range(d)] for i in range(d)]
    coeff_vectors = kernel_of_rows(gram, d)
    mats = [g.space.combine(v) for v in coeff_vectors]
    for m in mats:
        if not (m * m * m * m).is_zero():
            raise IrrationalSpectrum(
                "trace-form radical contains a non-nilpotent element; "
                "the subalgebra has irrational spectra")
    return echelon_span(mats)


# ---------------------------------------------------------------------------
# the invariant signature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantSignature:
    dim: int
    derived_dims: tuple
    lower_central_dims: tuple
    is_abelian: bool
    is_nilpotent: bool
    nilpotent_dim: int
    nilpotent_strata: tuple
    contains_invertible: bool
    ss_content: str
    probe: tuple | None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "is_abelian": self.is_abelian,
            "is_nilpotent": self.is_nilpotent,
            "nilpotent_dim": self.nilpotent_dim,
            "nilpotent_strata": _jsonable(self.nilpotent_strata),
            "contains_invertible": self.contains_invertible,
            "ss_content": self.ss_content,
            "probe": _jsonable(self.probe),
        }

    def differing_fields(self, other: "InvariantSignature") -> list[str]:
        out = []
        for name in ("dim", "derived_dims", "lower_central_dims", "is_abelian",
                     "is_nilpotent", "nilpotent_dim", "nilpotent_strata",
                     "contains_invertible", "ss_content", "probe"):
            if getattr(self, name) != getattr(other, name):
                out.append(name)
        return out


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return format_rational(obj)


def _ad_rows(x: Mat4, space: Subspace) -> list[list]:
    """Matrix (rows) of ad(x) acting on an ad(x)-stable subspace."""
    cols = []
    for b in space.basis:
        c = space.coords(bracket(x, b))
        if c is None:
            raise Sp4Error("subspace is not ad-stable")
        cols.append(c)
    d = space.dim
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _eigenvalue_on_line(x: Mat4, v: Mat4):
    """Eigenvalue of ad(x) on the ad(x)-invariant line spanned by v."""
    w = bracket(x, v)
    line = echelon_span([v])
    c = line.coords(w)
    if c is None:
        raise Sp4Error("line is not ad-invariant")
    direction = line.basis[0]
    base = echelon_span([v]).coords(v)
    # v = base[0]*direction, w = c[0]*direction  =>  ad eigenvalue = c/base
    return c[0] / base[0]


def _invariantize(weighted: list[tuple]) -> tuple:
    """Remove the scaling freedom x -> s*x from a list of (value, weight)
    pairs, where value scales by s**weight: replace each nonzero value v of
    weight w by v**w0 / v0**w relative to the first nonzero entry (v0, w0).
    The result is invariant under scaling by any s in the algebraic closure.
    """
    v0 = w0 = None
    for v, w in weighted:
        if v != 0:
            v0, w0 = v, w
            break
    if v0 is None:
        return tuple(("z", w) for _, w in weighted)
    out = []
    for v, w in weighted:
        if v == 0:
            out.append(("z", w))
        else:
            out.append((v**w0 / v0**w, w))
    return tuple(out)


def _regular_pair(x: Mat4) -> bool:
    """Whether the eigenvalues of a rational-spectrum sp(4) element are four
    distinct values (+-a, +-b with a,b nonzero, a != +-b)."""
    p = char_poly(x)
    if p[0] == 0:  # zero eigenvalue
        return False
    return p.gcd(p.derivative()).degree == 0


def signature(s: Subalgebra) -> InvariantSignature:
    """The conjugation-invariant signature of a closed solvable subalgebra.

    Equal signatures are necessary for conjugacy, never claimed sufficient.
    """
    g = s.space
    d = g.dim
    der = derived_series(s)
    lcs = lower_central_series(s)
    derived_dims = tuple(sp.dim for sp in der)
    lower_dims = tuple(sp.dim for sp in lcs)
    nspace = nilpotent_subspace(s)
    dn = nspace.dim
    codim = d - dn
    if codim not in (0, 1, 2):
        raise Sp4Error("solvable subalgebra with toral rank > 2 in sp(4)")

    # invertible elements: symbolic determinant over the whole basis
    sym = symbolic_combo(list(g.basis))
    has_invertible = not det_mpoly(sym).is_zero()

    strata = _nilpotent_strata(nspace)

    if codim == 0:
        content = "all_nilpotent"
        probe = None
    elif codim == 2:
        content = "has_cartan"
        probe = None
    else:
        x0 = next(b for b in g.basis if not nspace.contains(b))
        dec = jordan_decompose(x0)
        if nspace.contains(dec.nilpotent):
            content = ("has_regular_ss" if _regular_pair(x0)
                       else "has_nonregular_ss_only")
        else:
            content = "mixed_only"
        probe = _spectral_probe(s, nspace, der[1] if len(der) > 1 else echelon_span([]), x0)

    return InvariantSignature(
        dim=d,
        derived_dims=derived_dims,
        lower_central_dims=lower_dims,
        is_abelian=(len(derived_dims) == 1 or derived_dims[1] == 0),
        is_nilpotent=(lower_dims[-1] == 0),
        nilpotent_dim=dn,
        nilpotent_strata=strata,
        contains_invertible=has_invertible,
        ss_content=content,
        probe=probe,
    )


def _nilpotent_strata(nspace: Subspace) -> tuple:
    dn = nspace.dim
    if dn == 0:
        return ()
    if dn == 1:
        return (("rank", rank(nspace.basis[0])),)
    if dn == 2:
        return (("pencil",) + pencil_rank_strata(nspace.basis[0], nspace.basis[1]).summary(),)
    from .linalg import generic_rank
    return (("generic", generic_rank(list(nspace.basis))),)


def _spectral_probe(s: Subalgebra, nspace: Subspace, derived: Subspace,
                    x0: Mat4) -> tuple:
    weighted: list[tuple] = []
    p4 = char_poly(x0)
    for j in (3, 2, 1, 0):
        weighted.append((p4[j], 4 - j))
    pad = char_poly_rows(_ad_rows(x0, s.space))
    dg = s.dim
    for j in range(dg - 1, -1, -1):
        weighted.append((pad[j], dg - j))
    if derived.dim:
        pdd = char_poly_rows(_ad_rows(x0, derived))
        for j in range(derived.dim - 1, -1, -1):
            weighted.append((pdd[j], derived.dim - j))
    marked = _marked_line_data(nspace, x0)
    weighted.extend(marked)
    return (dg, derived.dim, nspace.dim) + _invariantize(weighted)


def _marked_line_data(nspace: Subspace, x0: Mat4) -> list[tuple]:
    """ad(x0)-eigenvalues on the canonical lines of the nilpotent subspace:
    for dim 1 the line itself, for dim 2 the rank-drop lines of the pencil
    (rational ones plus the line at infinity), grouped by rank as elementary
    symmetric functions so the data is basis-independent."""
    out: list[tuple] = []
    if nspace.dim == 1:
        out.append((_eigenvalue_on_line(x0, nspace.basis[0]), 1))
        return out
    if nspace.dim != 2:
        return out
    n1, n2 = nspace.basis
    strata = pencil_rank_strata(n1, n2)
    by_rank: dict[int, list] = {}
    for t0, r in strata.rational_drops:
        v = n1 * t0 + n2
        by_rank.setdefault(r, []).append(_eigenvalue_on_line(x0, v))
    if strata.infinity_rank is not None:
        by_rank.setdefault(strata.infinity_rank, []).append(
            _eigenvalue_on_line(x0, n1))
    for r in sorted(by_rank):
        vals = by_rank[r]
        e1 = sum(vals, ZERO)
        e2 = ZERO
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                e2 += vals[i] * vals[j]
        out.append((Q(len(vals)), 0))
        out.append((e1, 1))
        out.append((e2, 2))
    return out
