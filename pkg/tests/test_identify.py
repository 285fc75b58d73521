import random

import pytest

from sp4solvable.errors import (DimensionMismatch, OutOfCatalog,
                                UnrecognizedFamily, UnsupportedDimension,
                                ZeroParameter)
from sp4solvable.identify import (IsoMap, QuadraticValue, degraaf_to_sw,
                                  identify_degraaf, normalize_sw_param,
                                  sw_lambda, tri_algebra_constants,
                                  verify_isomorphism)
from sp4solvable.presentations import (DeGraafClass, degraaf_constants,
                                       direct_sum, sw_constants)
from sp4solvable.rational import Q
from sp4solvable.sp4 import T, X_A2B, X_AB, X_ALPHA, X_BETA
from sp4solvable.structure import StructureConstants, structure_constants_for_basis

D = DeGraafClass


def test_presentations_are_lie_algebras():
    for fam, params in (("J", ()), ("K1", ()), ("K2", ()), ("L1", ()),
                        ("L2", ()), ("L3", (Q(-3, 16),)), ("L4", (Q(1),)),
                        ("M2", ()), ("M6", (Q(1, 27), Q(-1, 3))),
                        ("M7", (Q(0), Q(1))), ("M8", ()), ("M12", ()),
                        ("M13", (Q(-1, 4),)), ("M14", (Q(1),))):
        sc = degraaf_constants(fam, params)
        assert sc.is_antisymmetric() and sc.satisfies_jacobi()
    for name, params in (("n_{1,1}", ()), ("s_{2,1}", ()), ("n_{3,1}", ()),
                         ("s_{3,1}", (Q(1, 3),)), ("s_{3,2}", ()),
                         ("n_{4,1}", ()), ("s_{4,2}", ()),
                         ("s_{4,3}", (Q(3, 4), Q(1, 2))), ("s_{4,6}", ()),
                         ("s_{4,8}", (Q(1, 2),)), ("s_{4,10}", ()),
                         ("s_{4,11}", ()), ("s_{4,12}", ()),
                         ("s_{5,33}", ()), ("s_{5,35}", (Q(2),)),
                         ("s_{5,36}", ()), ("s_{5,37}", ()),
                         ("s_{5,41}", (Q(1, 2), Q(1, 2))), ("s_{5,44}", ()),
                         ("s_{6,242}", ()), ("2n_{1,1}", ()), ("3n_{1,1}", ()),
                         ("n_{1,1}+s_{2,1}", ()),
                         ("n_{1,1}+s_{3,1}", (Q(-1),))):
        sc = sw_constants(name, params)
        assert sc.is_antisymmetric() and sc.satisfies_jacobi()


def test_trichotomy():
    # r != +-2 -> L3 with parameter -2r/(r+2)^2; r = 2 -> L2; r = -2 -> L4(1)
    for r in (Q(0), Q(1), Q(6), Q(1, 2), Q(-3), Q(7, 5), Q(-1, 4)):
        got = identify_degraaf(tri_algebra_constants(r))
        assert got == D("L3", (-2 * r / (r + 2) ** 2,))
    assert identify_degraaf(tri_algebra_constants(Q(2))) == D("L2")
    assert identify_degraaf(tri_algebra_constants(Q(-2))) == D("L4", (Q(1),))


def test_identify_low_dims():
    assert identify_degraaf(degraaf_constants("J")) == D("J")
    assert identify_degraaf(degraaf_constants("K1")) == D("K1")
    assert identify_degraaf(degraaf_constants("K2")) == D("K2")
    assert identify_degraaf(degraaf_constants("L1")) == D("L1")
    with pytest.raises(UnsupportedDimension):
        identify_degraaf(StructureConstants.from_brackets(5, {}))


def test_identify_concrete_examples():
    # the stated parameter formulas at a = 2
    sc = structure_constants_for_basis([T(2, 1), X_ALPHA, X_AB])
    assert identify_degraaf(sc) == D("L3", (Q(-6, 25),))
    sc = structure_constants_for_basis([T(1, -1), X_ALPHA, X_A2B])
    assert identify_degraaf(sc) == D("L4", (Q(1),))
    sc = structure_constants_for_basis([T(2, 1), X_ALPHA, X_AB, X_A2B])
    assert identify_degraaf(sc) == D("M6", (Q(8, 243), Q(-26, 81)))
    sc = structure_constants_for_basis([X_BETA, X_ALPHA, X_AB, X_A2B])
    assert identify_degraaf(sc) == D("M7", (Q(0), Q(0)))
    # dim-1 derived: K2 + J presents as L3(0)
    sc = structure_constants_for_basis([T(1, 0), X_ALPHA, X_AB])
    assert identify_degraaf(sc) == D("L3", (Q(0),))
    # Heisenberg is L4(0)
    sc = structure_constants_for_basis([X_BETA, X_AB, X_A2B])
    assert identify_degraaf(sc) == D("L4", (Q(0),))


def test_identify_is_basis_change_invariant():
    rng = random.Random(42)
    cases = [degraaf_constants("L3", (Q(-3, 16),)),
             degraaf_constants("L4", (Q(1),)),
             degraaf_constants("L2"),
             degraaf_constants("M6", (Q(8, 243), Q(-26, 81))),
             degraaf_constants("M13", (Q(-1, 4),)),
             degraaf_constants("M13", (Q(0),)),
             degraaf_constants("M14", (Q(1),)),
             degraaf_constants("M12"),
             degraaf_constants("M8"),
             degraaf_constants("M2"),
             degraaf_constants("M7", (Q(0), Q(1))),
             degraaf_constants("M6", (Q(0), Q(-2, 9))),
             degraaf_constants("M7", (Q(0), Q(0)))]
    for sc in cases:
        base = identify_degraaf(sc)
        d = sc.dim
        done = 0
        while done < 4:
            p = [[Q(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
            try:
                moved = sc.change_basis(p)
            except Exception:
                continue
            done += 1
            assert identify_degraaf(moved) == base


def test_identify_l4_parameter_mod_squares():
    # L4_A ~ L4_B iff A = s^2 B: basis rescaling x1 -> 2 x1 sends A to 4A
    sc = degraaf_constants("L4", (Q(2),))
    moved = sc.change_basis([(2, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert identify_degraaf(sc) == identify_degraaf(moved) == D("L4", (Q(2),))
    sc8 = degraaf_constants("L4", (Q(8),))
    assert identify_degraaf(sc8) == D("L4", (Q(2),))  # squarefree kernel


def test_identify_unrecognized():
    # 4-dimensional abelian
    with pytest.raises(UnrecognizedFamily):
        identify_degraaf(StructureConstants.from_brackets(4, {}))
    # K2 + 2J has derived dimension 1
    with pytest.raises(UnrecognizedFamily):
        identify_degraaf(StructureConstants.from_brackets(4, {(0, 1): {1: 1}}))


def test_sw_lambda_branches():
    assert sw_lambda(Q(-3, 16)) == Q(1, 3)
    assert sw_lambda(Q(-2, 9)) == Q(1, 2)
    v = sw_lambda(Q(1))        # sqrt(5): lambda = (3 - sqrt5)/(-2) -> quadratic
    assert isinstance(v, QuadraticValue) and not v.imaginary and v.dsc == 5
    v = sw_lambda(Q(-1))       # complex of modulus 1
    assert isinstance(v, QuadraticValue) and v.imaginary and v.q > 0
    with pytest.raises(ZeroParameter):
        sw_lambda(Q(0))
    with pytest.raises(OutOfCatalog):
        sw_lambda(Q(-1, 4))


def test_normalize_sw_param():
    assert normalize_sw_param(Q(2), "s_{3,1}") == Q(1, 2)
    assert normalize_sw_param(Q(-1), "s_{3,1}") == Q(-1)
    assert normalize_sw_param(Q(1, 3), "s_{4,8}") == Q(1, 3)
    with pytest.raises(ZeroParameter):
        normalize_sw_param(Q(0), "s_{3,1}")
    with pytest.raises(OutOfCatalog):
        normalize_sw_param(Q(-1), "s_{4,8}")


def test_degraaf_to_sw_table():
    expect = {
        D("J"): "n_{1,1}", D("K1"): "2n_{1,1}", D("K2"): "s_{2,1}",
        D("L1"): "3n_{1,1}", D("L2"): "s_{3,1}(A=1)",
        D("L3", (Q(0),)): "n_{1,1}+s_{2,1}",
        D("L3", (Q(-1, 4),)): "s_{3,2}",
        D("L3", (Q(-3, 16),)): "s_{3,1}(A=1/3)",
        D("L4", (Q(0),)): "n_{3,1}",
        D("L4", (Q(1),)): "s_{3,1}(A=-1)",
        D("M2"): "s_{4,3}(A=1,B=1)",
        D("M8"): "s_{4,12}",
        D("M12"): "s_{4,8}(A=1)",
        D("M13", (Q(0),)): "s_{4,11}",
        D("M13", (Q(-1, 4),)): "s_{4,10}",
        D("M13", (Q(-2, 9),)): "s_{4,8}(A=1/2)",
        D("M14", (Q(1),)): "s_{4,6}",
        D("M7", (Q(0), Q(0))): "n_{4,1}",
        D("M7", (Q(0), Q(1))): "n_{1,1}+s_{3,1}(A=-1)",
        D("M6", (Q(0), Q(-2, 9))): "n_{1,1}+s_{3,1}(A=1/2)",
        D("M6", (Q(0), Q(-1, 4))): "n_{1,1}+s_{3,2}",
        D("M6", (Q(1, 27), Q(-1, 3))): "s_{4,2}",
        D("M6", (Q(8, 243), Q(-26, 81))): "s_{4,3}(A=3/4,B=1/2)",
    }
    for dg, label in expect.items():
        assert str(degraaf_to_sw(dg)) == label
    with pytest.raises(OutOfCatalog):
        degraaf_to_sw(D("L4", (Q(2),)))
    with pytest.raises(OutOfCatalog):
        degraaf_to_sw(D("M14", (Q(3),)))


def test_verify_isomorphism_examples():
    # dimension 2: x1 <-> e2, x2 <-> e1
    k2, s21 = degraaf_constants("K2"), sw_constants("s_{2,1}")
    iso = IsoMap.from_columns([(0, 1), (1, 0)])
    assert verify_isomorphism(k2, s21, iso)
    # a map with mismatched bracket images fails
    bad = IsoMap.from_columns([(1, 0), (0, 1)])
    assert not verify_isomorphism(k2, s21, bad)
    # singular maps fail
    sing = IsoMap.from_columns([(1, 0), (1, 0)])
    assert not verify_isomorphism(k2, s21, sing)
    with pytest.raises(DimensionMismatch):
        verify_isomorphism(k2, sw_constants("n_{3,1}"), iso)


def test_verify_isomorphism_l3_to_s32():
    # e1 = x1 - 2x2, e2 = x1 - 4x2, e3 = 2x3 inverted to columns
    l3 = degraaf_constants("L3", (Q(-1, 4),))
    s32 = sw_constants("s_{3,2}")
    iso = IsoMap.from_columns([(2, -1, 0), (Q(1, 2), Q(-1, 2), 0), (0, 0, Q(1, 2))])
    assert verify_isomorphism(l3, s32, iso)


def test_direct_sum():
    two = direct_sum(sw_constants("s_{2,1}"), sw_constants("s_{2,1}"))
    assert two.dim == 4
    assert two.is_antisymmetric() and two.satisfies_jacobi()
    m8 = degraaf_constants("M8")
    iso = IsoMap.from_columns([(0, 1, 0, 0), (1, 0, 0, 0),
                               (0, 0, 0, 1), (0, 0, 1, 0)])
    assert verify_isomorphism(m8, two, iso)


def test_sw_bridge_maps_verify_bracket_exactly():
    cases = [D("J"), D("K1"), D("K2"), D("L1"), D("L2"),
             D("L3", (Q(0),)), D("L3", (Q(-1, 4),)), D("L3", (Q(-3, 16),)),
             D("L3", (Q(-6, 25),)), D("L4", (Q(0),)), D("L4", (Q(1),)),
             D("M2"), D("M8"), D("M12"), D("M13", (Q(0),)),
             D("M13", (Q(-1, 4),)), D("M13", (Q(-2, 9),)), D("M14", (Q(1),)),
             D("M7", (Q(0), Q(0))), D("M7", (Q(0), Q(1))),
             D("M6", (Q(0), Q(-2, 9))), D("M6", (Q(0), Q(-1, 4))),
             D("M6", (Q(1, 27), Q(-1, 3))), D("M6", (Q(8, 243), Q(-26, 81)))]
    from sp4solvable.identify import sw_bridge_map
    for c in cases:
        label, iso = sw_bridge_map(c)
        assert verify_isomorphism(c.constants(), label.constants(), iso), str(c)
        if c.family == "M8":
            assert str(label) == "2s_{2,1}"   # rational bridge for s_{4,12}
        else:
            assert label == degraaf_to_sw(c)


def test_sw_bridge_mutation_testing():
    from sp4solvable.identify import sw_bridge_map
    deltas = (Q(1), Q(-1), Q(1, 2), Q(2), Q(-3))
    for c in [D("L3", (Q(-3, 16),)), D("M13", (Q(-2, 9),)),
              D("M6", (Q(8, 243), Q(-26, 81))), D("M14", (Q(1),)),
              D("M6", (Q(1, 27), Q(-1, 3)))]:
        label, iso = sw_bridge_map(c)
        src, tgt = c.constants(), label.constants()
        failures = 0
        for i in range(src.dim):
            for j in range(src.dim):
                for delta in deltas:
                    if not verify_isomorphism(src, tgt, iso.perturb(i, j, delta)):
                        failures += 1
                    if failures >= 5:
                        break
        assert failures >= 5, str(c)


def test_sw_bridge_irrational_is_rejected():
    from sp4solvable.errors import OutOfCatalog as OOC
    from sp4solvable.identify import sw_bridge_map
    with pytest.raises(OOC):
        sw_bridge_map(D("L3", (Q(1),)))   # lambda in Q(sqrt(5))
