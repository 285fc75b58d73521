from sp4solvable.catalog import load_catalog
from sp4solvable.linalg import echelon_span
from sp4solvable.rational import Q
from sp4solvable.sp4 import T, X_A2B, X_AB, X_ALPHA, X_BETA
from sp4solvable.structure import generated_subalgebra
from sp4solvable.verify import (match_catalog, random_subalgebra_probe,
                                search_conjugator, separation_witness,
                                verify_catalog, verify_entry,
                                verify_separations)

ENTRIES = {e.row_id: e for e in load_catalog()}


def test_verify_entry_examples():
    # the W equivalence of the regular 3-dim family at a = 2 <-> 1/2
    rep = verify_entry(ENTRIES["d3_Ta1_Xa_Xa2b"], params=(Q(2),))
    assert rep.overall_pass
    assert any("equivalence" in r.check for r in rep.records)
    # the 4-dim M2 row
    rep = verify_entry(ENTRIES["d4_T11_np"])
    assert rep.overall_pass
    assert any(r.check == "degraaf-class" and "M2" in r.detail for r in rep.records)
    # the 5-dim row with its bracket-exact map
    rep = verify_entry(ENTRIES["d5_T01_n"])
    assert rep.overall_pass
    assert any(r.check == "isomorphism-map" for r in rep.records)


def test_verify_catalog_all_rows_pass():
    rep = verify_catalog(with_separations=True)
    assert rep.overall_pass, [r.to_json() for r in rep.failures[:5]]
    data = rep.to_json()
    assert data["overall_pass"] and data["checks"] == len(rep.records)
    text = rep.to_text()
    assert "all passed" in text


def test_separation_examples_record_witness_fields():
    # abelian flag separates <T(1,0),X_a> from the W-conjugate of <T(0,1),X_a>
    w = separation_witness(ENTRIES["d2_T10_Xa"], None, ENTRIES["d2_T10_Xa2b"], None)
    assert "is_abelian" in w
    # rank-1 line counts separate the two nilpotent planes
    w = separation_witness(ENTRIES["d2_Xa_Xab"], None, ENTRIES["d2_Xa_Xa2b"], None)
    assert "nilpotent_strata" in w
    # ad-eigenvalue data separates the two singular-semisimple lines
    w = separation_witness(ENTRIES["d2_T10_Xb"], None, ENTRIES["d2_T10_Xa2b"], None)
    assert "probe" in w


def test_search_conjugator_finds_named_elements():
    src = echelon_span([X_BETA, X_A2B])
    tgt = echelon_span([X_ALPHA, X_AB])
    g = search_conjugator(src, tgt, max_len=2)
    assert g is not None
    from sp4solvable.sp4 import conjugate_subalgebra
    assert conjugate_subalgebra(g, src) == tgt
    # exhausted search returns None (inequivalent targets)
    assert search_conjugator(echelon_span([X_ALPHA]),
                             echelon_span([X_ALPHA + X_BETA]), max_len=1) is None


def test_match_catalog_spec_examples():
    assert match_catalog(generated_subalgebra([X_ALPHA])) == [("d1_X_alpha", None)]
    m = match_catalog(generated_subalgebra([T(2, 1), X_ALPHA]))
    assert m == [("d2_Ta1_Xa", Q(2))]
    m = match_catalog(generated_subalgebra([X_ALPHA, X_BETA]))
    assert m == [("d4_n", None)]


def test_random_probe():
    rep = random_subalgebra_probe(20260809, 30)
    assert rep.overall_pass, [r.to_json() for r in rep.failures]
