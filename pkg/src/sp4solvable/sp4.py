"""The concrete sp(4) apparatus.

Fixes the symplectic form, the root vectors, the diagonal family T_{a,b} =
diag(a, b, -a, -b), the standard subalgebras (Cartan t, Borel b, nilradical n,
parabolic p and its nilradical n_p), the named group elements used as
conjugators, and the Weyl action on diagonal parameters.

The form is

    J = [[0, 0, 1, 0],
         [0, 0, 0, 1],
         [-1, 0, 0, 0],
         [0, -1, 0, 0]],

sp(4) is the set of X with J X^t J = X, and Sp(4) = {g : g J g^t = J}.
The positive root vectors, in the basis of the matrix displays, are

    X_alpha = E24,  X_beta = E12 - E43,
    X_{alpha+beta} = E14 + E23,  X_{alpha+2beta} = E13,

with ad(T_{a,b}) eigenvalues 2b, a-b, a+b, 2a respectively.  X_alpha and
X_{alpha+2beta} are the long roots.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import Sp4Error
from .exprs import eval_expr
from .linalg import Mat4, Subspace, echelon_span, inverse
from .rational import Q, parse_rational

__all__ = [
    "J_FORM", "X_ALPHA", "X_BETA", "X_AB", "X_A2B", "ROOT_VECTORS", "ROOT_LABELS",
    "T", "DiagonalElement", "root_value", "in_sp4", "in_sp4_group",
    "bracket", "conjugate", "conjugate_subalgebra",
    "W_MAT", "A_MAT", "AJ_MAT", "WA_MAT", "shear", "diag_conjugator",
    "block_sl2", "gl2_block", "parse_conjugator",
    "standard_subalgebra", "weyl_orbit", "default_param_samples",
]

J_FORM = Mat4([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

X_ALPHA = Mat4.unit(2, 4)
X_BETA = Mat4.unit(1, 2) - Mat4.unit(4, 3)
X_AB = Mat4.unit(1, 4) + Mat4.unit(2, 3)
X_A2B = Mat4.unit(1, 3)

ROOT_LABELS = ("alpha", "beta", "alpha_plus_beta", "alpha_plus_2beta")
ROOT_VECTORS = {
    "alpha": X_ALPHA,
    "beta": X_BETA,
    "alpha_plus_beta": X_AB,
    "alpha_plus_2beta": X_A2B,
}


def root_value(label: str, a, b):
    """The eigenvalue of ad(T_{a,b}) on the given root vector."""
    a, b = Q(a), Q(b)
    return {
        "alpha": 2 * b,
        "beta": a - b,
        "alpha_plus_beta": a + b,
        "alpha_plus_2beta": 2 * a,
    }[label]


def T(a, b) -> Mat4:
    """The diagonal element diag(a, b, -a, -b)."""
    return Mat4.diag(Q(a), Q(b), -Q(a), -Q(b))


@dataclass(frozen=True)
class DiagonalElement:
    a: object
    b: object

    @property
    def matrix(self) -> Mat4:
        return T(self.a, self.b)


def in_sp4(m: Mat4) -> bool:
    """Membership in the Lie algebra: J m^t J = m bit-exactly."""
    return J_FORM * m.transpose() * J_FORM == m


def in_sp4_group(g: Mat4) -> bool:
    """Membership in the group: g J g^t = J bit-exactly."""
    return g * J_FORM * g.transpose() == J_FORM


def bracket(x: Mat4, y: Mat4) -> Mat4:
    return x * y - y * x


def conjugate(g: Mat4, x: Mat4) -> Mat4:
    """The Adjoint action g x g^{-1} (raises SingularMatrix for singular g)."""
    return g * x * inverse(g)


def conjugate_subalgebra(g: Mat4, s: Subspace) -> Subspace:
    """Element-wise Adjoint image, re-echelonized.  Dimension is preserved."""
    ginv = inverse(g)
    return echelon_span([g * b * ginv for b in s.basis])


# -- named conjugators -------------------------------------------------------

W_MAT = Mat4([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
A_MAT = Mat4([[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0]])
AJ_MAT = A_MAT * J_FORM
WA_MAT = W_MAT * A_MAT


def shear(gamma: str, z) -> Mat4:
    """The unipotent element id + z*X_gamma (a root-direction shear)."""
    if gamma not in ROOT_VECTORS:
        raise Sp4Error(f"unknown root label {gamma!r}")
    g = Mat4.identity() + ROOT_VECTORS[gamma] * Q(z)
    return g


def diag_conjugator(d1, d2, d3, d4) -> Mat4:
    """Diagonal group element; must satisfy d3 = 1/d1, d4 = 1/d2."""
    g = Mat4.diag(Q(d1), Q(d2), Q(d3), Q(d4))
    if not in_sp4_group(g):
        raise Sp4Error(
            "diagonal conjugator must satisfy d3 = 1/d1 and d4 = 1/d2 "
            "to lie in Sp(4)")
    return g


def block_sl2(a, b, c, d) -> Mat4:
    """The element [[1,0,0,0],[0,a,0,b],[0,0,1,0],[0,c,0,d]] for ad-bc = 1.

    It centralizes T_{1,0} and mixes X_beta with X_{alpha+beta}.
    """
    a, b, c, d = Q(a), Q(b), Q(c), Q(d)
    if a * d - b * c != 1:
        raise Sp4Error("block conjugator needs determinant 1")
    return Mat4([[1, 0, 0, 0], [0, a, 0, b], [0, 0, 1, 0], [0, c, 0, d]])


def gl2_block(a, b, c, d) -> Mat4:
    """diag(g, g^{-t}) for g = [[a,b],[c,d]] in GL(2); always symplectic.

    It centralizes T_{1,1} and acts on n_p symmetric blocks by Z -> g Z g^t.
    """
    a, b, c, d = Q(a), Q(b), Q(c), Q(d)
    det = a * d - b * c
    if det == 0:
        raise Sp4Error("gl2 block conjugator needs invertible g")
    # g^{-t} = (1/det) * [[d, -c], [-b, a]]
    return Mat4([
        [a, b, 0, 0],
        [c, d, 0, 0],
        [0, 0, d / det, -c / det],
        [0, 0, -b / det, a / det],
    ])


_ATOMS = {
    "W": lambda: W_MAT,
    "A": lambda: A_MAT,
    "J": lambda: J_FORM,
    "AJ": lambda: AJ_MAT,
    "WA": lambda: WA_MAT,
    "weyl_s_alpha": lambda: A_MAT,   # realizes (a,b) -> (a,-b) on t
    "weyl_s_beta": lambda: W_MAT,    # realizes (a,b) -> (b,a) on t
    "identity": lambda: Mat4.identity(),
}


def parse_conjugator(recipe: str, env: dict | None = None) -> Mat4:
    """Evaluate a conjugator recipe string to a symplectic matrix.

    Atoms: the named elements above, plus ``shear:<root>:<expr>``,
    ``diag:<e1>,<e2>,<e3>,<e4>``, ``block:<e1>,...,<e4>`` and
    ``glblock:<e1>,...,<e4>``.  Products are whitespace-separated and apply
    rightmost-first under conjugation (matrix product order).  Expressions
    may mention the row parameter ``a``.
    """
    env = env or {}
    acc = Mat4.identity()
    for atom in recipe.split():
        atom = atom.strip()
        if atom in _ATOMS:
            g = _ATOMS[atom]()
        elif atom.startswith("shear:"):
            _, root, zexpr = atom.split(":", 2)
            g = shear(root.strip(), eval_expr(zexpr, env))
        elif atom.startswith("diag:"):
            vals = [eval_expr(p, env) for p in atom[5:].split(",")]
            g = diag_conjugator(*vals)
        elif atom.startswith("block:"):
            vals = [eval_expr(p, env) for p in atom[6:].split(",")]
            g = block_sl2(*vals)
        elif atom.startswith("glblock:"):
            vals = [eval_expr(p, env) for p in atom[8:].split(",")]
            g = gl2_block(*vals)
        else:
            raise Sp4Error(f"unknown conjugator atom {atom!r}")
        if not in_sp4_group(g):
            raise Sp4Error(f"conjugator atom {atom!r} is not in Sp(4)")
        acc = acc * g
    return acc


# -- standard subalgebras ----------------------------------------------------

_T10 = T(1, 0)
_T01 = T(0, 1)
_Y_BETA = Mat4.unit(2, 1) - Mat4.unit(3, 4)  # negative root vector for beta

_STANDARD = {
    "t": (_T10, _T01),
    "n": (X_BETA, X_ALPHA, X_AB, X_A2B),
    "n_p": (X_ALPHA, X_AB, X_A2B),
    "b": (_T10, _T01, X_BETA, X_ALPHA, X_AB, X_A2B),
    "p": (_T10, _T01, X_BETA, _Y_BETA, X_ALPHA, X_AB, X_A2B),
}


def standard_subalgebra(name: str) -> Subspace:
    """One of t, b, n, p, n_p (dims 2, 6, 4, 7, 3)."""
    if name not in _STANDARD:
        raise Sp4Error(f"unknown standard subalgebra {name!r}")
    return echelon_span(_STANDARD[name])


# -- Weyl action on diagonal parameters --------------------------------------

def weyl_orbit(t_elem: DiagonalElement) -> set[DiagonalElement]:
    """Orbit of T_{a,b} under the group generated by s_alpha: (a,b)->(a,-b)
    and s_beta: (a,b)->(b,a); at most 8 elements."""
    seen = {(Q(t_elem.a), Q(t_elem.b))}
    frontier = list(seen)
    while frontier:
        a, b = frontier.pop()
        for nxt in ((a, -b), (b, a)):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return {DiagonalElement(a, b) for a, b in seen}


# -- default parameter samples ------------------------------------------------

DEFAULT_PARAM_SAMPLES = (Q(2), Q(3), Q(5), Q(-2), Q(-3), Q(1, 2), Q(2, 3), Q(7, 3))


def default_param_samples() -> tuple:
    """The default 8-value sample set; SP4_PARAM_SAMPLES overrides it with a
    comma-separated list of rational strings."""
    env = os.environ.get("SP4_PARAM_SAMPLES")
    if not env:
        return DEFAULT_PARAM_SAMPLES
    return tuple(parse_rational(p) for p in env.split(","))
