import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp4solvable.errors import SingularMatrix, ZeroPolynomial
from sp4solvable.linalg import (Mat4, Poly, char_poly, char_poly_cofactor,
                                echelon_span, generic_rank, inverse, kernel,
                                rank, rational_roots)
from sp4solvable.rational import (Q, format_rational, parse_rational,
                                  rational_sqrt, squarefree_kernel)
from sp4solvable.sp4 import T, W_MAT, X_A2B, X_AB, X_ALPHA, X_BETA

rationals = st.builds(Q, st.integers(-9, 9), st.integers(1, 7))


def rand_mat(draw_list):
    return Mat4([draw_list[i * 4:(i + 1) * 4] for i in range(4)])


mats = st.builds(rand_mat, st.lists(rationals, min_size=16, max_size=16))


def test_rational_wire_format():
    assert format_rational(Q(-3, 16)) == "-3/16"
    assert format_rational(Q(2)) == "2"
    assert parse_rational("-3/16") == Q(-3, 16)
    assert parse_rational("2") == Q(2)
    assert rational_sqrt(Q(9, 4)) == Q(3, 2)
    assert rational_sqrt(Q(2)) is None
    assert squarefree_kernel(Q(4)) == 1
    assert squarefree_kernel(Q(-8, 9)) == -2
    assert squarefree_kernel(Q(0)) == 0


def test_char_poly_t12():
    # oracle: expand (x-1)(x-2)(x+1)(x+2) = x^4 - 5x^2 + 4
    oracle = Poly([1])
    for r in (1, 2, -1, -2):
        oracle = oracle * Poly([-r, 1])
    assert char_poly(T(1, 2)) == oracle
    assert char_poly_cofactor(T(1, 2)) == oracle


def test_char_poly_trivial_cases():
    assert char_poly(Mat4.zero()) == Poly([0, 0, 0, 0, 1])
    assert char_poly(X_ALPHA) == Poly([0, 0, 0, 0, 1])


@settings(max_examples=60, deadline=None)
@given(mats)
def test_char_poly_matches_cofactor_oracle(m):
    assert char_poly(m) == char_poly_cofactor(m)


@settings(max_examples=40, deadline=None)
@given(mats, mats)
def test_char_poly_conjugation_invariant(m, g):
    gi = g + Mat4.identity() * Q(10)  # make invertibility overwhelmingly likely
    try:
        ginv = inverse(gi)
    except SingularMatrix:
        return
    assert char_poly(gi * m * ginv) == char_poly(m)


def test_rational_roots_examples():
    assert rational_roots(Poly([-2, -1, 1])) == {Q(2): 1, Q(-1): 1}
    assert rational_roots(Poly([0, 0, 0, 0, 1])) == {Q(0): 4}
    # single root 1/3 of multiplicity 3
    p = Poly([Q(-1, 27), Q(1, 3), -1, 1])
    assert rational_roots(p) == {Q(1, 3): 3}
    with pytest.raises(ZeroPolynomial):
        rational_roots(Poly())


@settings(max_examples=50, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=6))
def test_rational_roots_are_roots(coeffs):
    p = Poly(coeffs)
    if p.is_zero():
        return
    roots = rational_roots(p)
    assert sum(roots.values()) <= max(p.degree, 0)
    for r, mult in roots.items():
        assert p(r) == 0
        assert mult >= 1


def test_rank_examples():
    assert rank(X_ALPHA) == 1
    assert rank(X_BETA) == 2
    assert rank(X_ALPHA + X_BETA) == 3
    assert rank(Mat4.identity()) == 4
    assert rank(Mat4.zero()) == 0


@settings(max_examples=40, deadline=None)
@given(mats)
def test_rank_nullity(m):
    assert rank(m) + len(kernel(m)) == 4


def test_inverse_examples():
    assert inverse(Mat4.identity()) == Mat4.identity()
    assert inverse(W_MAT) == W_MAT.transpose()
    d = Mat4.diag(Q(1, 2), Q(1, 2), 2, 2)
    assert inverse(d) == Mat4.diag(2, 2, Q(1, 2), Q(1, 2))
    with pytest.raises(SingularMatrix):
        inverse(X_ALPHA)


@settings(max_examples=30, deadline=None)
@given(mats)
def test_inverse_roundtrip(m):
    try:
        mi = inverse(m)
    except SingularMatrix:
        return
    assert m * mi == Mat4.identity()


def test_echelon_span_examples():
    assert echelon_span([X_ALPHA, X_ALPHA * 2]).dim == 1
    assert echelon_span([X_ALPHA, X_A2B]).dim == 2
    assert echelon_span([]).dim == 0
    assert echelon_span([Mat4.zero()]).dim == 0


@settings(max_examples=30, deadline=None)
@given(mats)
def test_echelon_idempotent(m):
    s = echelon_span([m, m])
    assert s.dim <= 1
    assert echelon_span(s.basis) == s


def test_subspace_equality_is_canonical():
    s1 = echelon_span([X_ALPHA + X_BETA, X_BETA])
    s2 = echelon_span([X_ALPHA, X_ALPHA + X_BETA * 7])
    assert s1 == s2
    assert s1.coords(X_ALPHA * 3 + X_BETA) is not None
    assert s1.coords(X_A2B) is None


def test_coords_recombine():
    s = echelon_span([T(1, 2), X_ALPHA, X_AB])
    v = T(1, 2) * Q(3, 7) + X_AB * Q(-2)
    c = s.coords(v)
    assert s.combine(c) == v


def test_generic_rank():
    assert generic_rank([X_ALPHA, X_A2B]) == 2
    assert generic_rank([X_ALPHA + X_BETA, X_AB, X_A2B]) == 3
    assert generic_rank([X_BETA, X_AB, X_A2B]) == 2
    assert generic_rank([]) == 0


def test_mat4_json_roundtrip():
    m = T(Q(5, 3), -2) + X_AB * Q(-7, 11)
    assert Mat4.from_json(m.to_json()) == m
