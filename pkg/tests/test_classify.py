from fractions import Fraction

import pytest

from orbiquint import classify
from orbiquint.classify import (
    ClassifyError,
    PARITY_UNCONFIRMED_ROWS,
    StableCurveDesc,
    TABLE2_ROWS,
    TABLE3_ROWS,
    THEOREM_DESCRIPTIONS,
    VertexDesc,
    classify_type_1_5,
    classify_type_6,
    classify_type_7,
    classify_type_8,
    component_genus,
    component_genus_adjunction,
    enumerate_c1_models,
    enumerate_c2_models,
    hyperelliptic_tail_genus,
    node_orbit_count,
    stable_pa,
    table1,
    theorem_divisors,
    type6_main_genus,
    type7_row_parity,
    type7_section_parities,
)
from orbiquint.parity import Parity


def test_table1_shape():
    rows = table1()
    assert len(rows) == 16
    assert [r.graph_type for r in rows] == [1] * 4 + [2] * 3 + [3] * 3 + [4] * 4 + [5] * 2
    assert [r.row for r in rows] == list(range(1, 17))
    # spot checks against the printed table
    r4 = rows[3]
    assert (r4.r, r4.v1, r4.v2) == (2, Fraction(1, 2), Fraction(1, 2))
    assert (r4.m1, r4.m2, r4.g1, r4.g2) == (3, 2, 4, 1)
    r8 = rows[7]
    assert (r8.g1, r8.g2, r8.disc2) == (5, -1, True)
    r14 = rows[13]
    assert (r14.v1, r14.v2, r14.disc1) == (Fraction(5, 3), Fraction(-2, 3), True)


def test_table1_signed_sum():
    for r in table1():
        assert abs(r.v1 + r.v2) == 1


def test_node_orbit_count():
    assert node_orbit_count(1, 12) == 4
    assert node_orbit_count(2, 12) == 2
    assert node_orbit_count(2, 9) == 3
    assert node_orbit_count(3, 10) == 2
    assert node_orbit_count(4, 9) == 1
    with pytest.raises(ClassifyError):
        node_orbit_count(5, 9)


def test_dual_route_genus():
    for r in table1():
        pair = classify._branch_pairs()[r.graph_type]
        assert component_genus(r.r, pair[0]) == r.g1
        assert component_genus_adjunction(r.r, r.m1, abs(r.v1), pair[0]) == r.g1
        assert component_genus_adjunction(r.r, r.m2, abs(r.v2), pair[1]) == r.g2


def test_hyperelliptic_tail_genus():
    assert [hyperelliptic_tail_genus(i) for i in (2, 3, 4, 5, 6, 7, 8, 9)] == [
        0, 1, 1, 2, 2, 3, 3, 4,
    ]
    with pytest.raises(ClassifyError):
        hyperelliptic_tail_genus(0)


def test_type6_main_genus():
    # normalization of a one-nodal plane quintic model
    assert type6_main_genus(2) == 5
    assert type6_main_genus(9) == 2


def test_record_counts():
    assert len(classify_type_1_5()) == 5
    assert len(classify_type_6()) == 10
    assert len(classify_type_7()) == 8
    assert len(classify_type_8()) == 2


def test_theorem_divisors():
    recs = theorem_divisors()
    assert [r.theorem_index for r in recs] == list(range(1, 14))
    for r in recs:
        assert stable_pa(r.desc) == 6
        assert r.sources
    # canonical descriptions are pairwise distinct
    assert len({r.desc.canonical() for r in recs}) == 13


def test_stable_pa():
    one_vertex = StableCurveDesc((VertexDesc(6),), ())
    assert stable_pa(one_vertex) == 6
    loop = StableCurveDesc((VertexDesc(5),), (((0, 0)),))
    assert stable_pa(loop) == 6
    with pytest.raises(ClassifyError):
        stable_pa(StableCurveDesc((VertexDesc(1), VertexDesc(2)), ()))


def test_desc_canonical_symmetry():
    a = StableCurveDesc((VertexDesc(2), VertexDesc(4)), ((0, 1),))
    b = StableCurveDesc((VertexDesc(4), VertexDesc(2)), ((1, 0),))
    assert a.canonical() == b.canonical()


def test_local_model_counts():
    assert [len(enumerate_c1_models(i)) for i in (1, 2, 3, 4)] == [3, 3, 2, 2]
    assert len(enumerate_c2_models(8)) == 8
    assert len(enumerate_c2_models(9)) == 2
    with pytest.raises(ClassifyError):
        enumerate_c1_models(5)
    with pytest.raises(ClassifyError):
        enumerate_c2_models(0)


def test_local_model_half_edges_and_genus():
    for i in range(1, 5):
        for e in enumerate_c1_models(i):
            assert e.half_edge_total() == 4
            e.validate()
    for j in range(1, 10):
        for e in enumerate_c2_models(j):
            assert e.half_edge_total() == 4
            e.validate()


def test_c1_first_entries():
    entries = enumerate_c1_models(1)
    assert entries[0].sigmaA2 == Fraction(-1, 2)
    assert entries[0].sigmaB2 == 0
    assert entries[2].sigmaA2 is None  # side-switching entry


def test_c2_even_p4_entries():
    labels = {e.label for e in enumerate_c2_models(8)}
    assert {"2.8", "2.9", "2.10", "2.14"} <= labels


def test_table_parities():
    for k, row in enumerate(TABLE2_ROWS, 1):
        assert type7_row_parity(row, k) is Parity.ODD
        parities = type7_section_parities(row)
        assert parities  # an integral section always exists
        if k not in PARITY_UNCONFIRMED_ROWS:
            assert Parity.ODD in parities
    for row in TABLE3_ROWS:
        assert type7_row_parity(row) is Parity.MOOT
    assert PARITY_UNCONFIRMED_ROWS == frozenset({12})


def test_row_to_theorem_consistency():
    # every table row points to a description of arithmetic genus 6
    for row in TABLE2_ROWS + TABLE3_ROWS:
        assert stable_pa(THEOREM_DESCRIPTIONS[row.theorem_index]) == 6
