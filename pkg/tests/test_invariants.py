"""Polynomial oracles: Krushkal, Tutte, Bollobas-Riordan, Las Vergnas."""

import pytest

from qpoly.graphs import MultiGraph
from qpoly.invariants import (
    PolyKind,
    bollobas_riordan,
    krushkal,
    las_vergnas,
    specialize,
    tutte,
)
from qpoly.laurent import LaurentPoly, parse_poly
from qpoly.ribbon import EmbeddedGraph, RibbonError, RibbonGraph

from fixture_graphs import FIXTURES, b1, m1, p2, t1, th, tv


def cellular(make):
    return EmbeddedGraph(make())


def proper_submasks(g):
    return range(g.full_mask)


# ----------------------------------------------------------------------
# oracle values


def test_krushkal_examples():
    assert krushkal(cellular(m1)) == parse_poly("A^(1/2) + B^(1/2)")
    assert krushkal(cellular(t1)) == parse_poly("A + B + 2")
    assert krushkal(cellular(tv)) == parse_poly("1")


def test_krushkal_p2_planar_bouquet():
    assert krushkal(cellular(p2)) == parse_poly("Y^2 + 2*Y + 1")


def test_krushkal_canonical_text():
    assert krushkal(cellular(m1)).canonical_text() == "A^(1/2) + B^(1/2)"


def test_tutte_examples():
    loop = MultiGraph(["v"], [("e", "v", "v")])
    assert tutte(loop) == parse_poly("1 + Y")
    k2 = MultiGraph(["u", "w"], [("e", "u", "w")])
    assert tutte(k2) == parse_poly("X + 1")
    assert tutte(MultiGraph(["v"], [])) == parse_poly("1")


def test_tutte_theta():
    assert tutte(th().underlying_graph()) == parse_poly("X + 3 + 3*Y + Y^2")


def test_bollobas_riordan_examples():
    assert bollobas_riordan(m1()) == parse_poly("1 + Y*Z")
    assert bollobas_riordan(b1()) == parse_poly("1 + Y")
    assert bollobas_riordan(t1()) == parse_poly("1 + 2*Y + Y^2*Z^2")


def test_las_vergnas_examples():
    assert las_vergnas(cellular(m1)) == parse_poly("Z + 1")
    assert las_vergnas(cellular(b1)) == parse_poly("Y")
    xm1 = LaurentPoly.variable("X") - 1
    ym1 = LaurentPoly.variable("Y") - 1
    expected = xm1 + 3 + 3 * ym1 + ym1 ** 2
    assert las_vergnas(cellular(th)) == expected
    assert expected == parse_poly("X + Y^2 + Y")


def test_las_vergnas_needs_cellular():
    with pytest.raises(RibbonError):
        las_vergnas(EmbeddedGraph(th(), ["e1"]))


# ----------------------------------------------------------------------
# specializations


def test_specialize_examples():
    p = parse_poly("A^(1/2) + B^(1/2)")
    assert specialize(p, "tutte", delta=1) == parse_poly("1 + Y")
    assert specialize(p, "br", s=1) == parse_poly("1 + Y*Z")
    assert specialize(p, "lv", delta=1) == parse_poly("1 + Z")
    assert specialize(p, PolyKind.KRUSHKAL) == p


def test_specialize_needs_context():
    p = parse_poly("A + B")
    with pytest.raises(ValueError):
        specialize(p, "tutte")
    with pytest.raises(ValueError):
        specialize(p, "br")
    with pytest.raises(ValueError):
        specialize(p, "lv")
    with pytest.raises(ValueError):
        specialize(p, "chromatic")


def test_polykind_round_trip():
    assert PolyKind("tutte") is PolyKind.TUTTE
    assert PolyKind("krushkal") is PolyKind.KRUSHKAL
    assert {k.value for k in PolyKind} == {"krushkal", "tutte", "br", "lv"}


# ----------------------------------------------------------------------
# theorems relating the polynomials (cellular fixtures)


def test_duality_swaps_variables():
    swap = {
        "X": LaurentPoly.variable("Y"),
        "Y": LaurentPoly.variable("X"),
        "A": LaurentPoly.variable("B"),
        "B": LaurentPoly.variable("A"),
    }
    for name, make in FIXTURES.items():
        g = make()
        lhs = krushkal(EmbeddedGraph(g))
        rhs = krushkal(EmbeddedGraph(g.dual())).substitute(swap)
        assert lhs == rhs, name


def test_tutte_specialization_cellular():
    for name, make in FIXTURES.items():
        emb = cellular(make)
        _, _, delta = emb.surface_invariants()
        got = specialize(krushkal(emb), "tutte", delta=delta)
        assert got == tutte(emb.underlying_marked_graph()), name


def test_tutte_specialization_non_cellular():
    for name, make in FIXTURES.items():
        g = make()
        for mask in proper_submasks(g):
            emb = EmbeddedGraph(g, mask)
            _, _, delta = emb.surface_invariants()
            got = specialize(krushkal(emb), "tutte", delta=delta)
            assert got == tutte(emb.underlying_marked_graph()), (name, mask)


def test_br_specialization():
    for name, make in FIXTURES.items():
        g = make()
        emb = EmbeddedGraph(g)
        got = specialize(krushkal(emb), "br", s=g.genus_s())
        assert got == bollobas_riordan(g), name


def test_lv_specialization():
    for name, make in FIXTURES.items():
        emb = cellular(make)
        _, _, delta = emb.surface_invariants()
        got = specialize(krushkal(emb), "lv", delta=delta)
        assert got == las_vergnas(emb), name


# ----------------------------------------------------------------------
# deletion/contraction and multiplicativity


def test_deletion_contraction_theta():
    g = th()
    whole = krushkal(EmbeddedGraph(g))
    for label in g.edge_labels:
        unmarked = EmbeddedGraph(g, g.full_mask ^ g.edge_mask([label]))
        contracted = EmbeddedGraph(g.contract(label))
        assert whole == krushkal(unmarked) + krushkal(contracted), label


def test_bridge_factor():
    k2 = RibbonGraph([("u", ("a1",)), ("w", ("a2",))],
                     [("e", ("a1", "a2"), "+")])
    point = EmbeddedGraph(k2.contract("e"))
    lhs = krushkal(EmbeddedGraph(k2))
    assert lhs == (1 + LaurentPoly.variable("X")) * krushkal(point)
    assert lhs == parse_poly("X + 1")


def test_separating_loop_factor():
    g = b1()
    emb = EmbeddedGraph(g)
    assert emb.complement_invariants(["e1"])[2] == 1
    rest = krushkal(EmbeddedGraph(g, 0))
    assert krushkal(emb) == (1 + LaurentPoly.variable("Y")) * rest


def test_nonseparating_loop_has_no_such_factor():
    emb = EmbeddedGraph(m1())
    assert emb.complement_invariants(["e1"])[2] == 0
    rest = krushkal(EmbeddedGraph(m1(), 0))
    assert krushkal(emb) != (1 + LaurentPoly.variable("Y")) * rest


def test_disjoint_union_multiplies():
    union = RibbonGraph(
        [("v1", ("a1", "a2")), ("v2", ("b1", "b2"))],
        [("e1", ("a1", "a2"), "-"), ("e2", ("b1", "b2"), "+")])
    assert krushkal(EmbeddedGraph(union)) == (
        krushkal(cellular(m1)) * krushkal(cellular(b1)))
    assert bollobas_riordan(union) == bollobas_riordan(m1()) * bollobas_riordan(b1())
    assert las_vergnas(EmbeddedGraph(union)) == (
        las_vergnas(cellular(m1)) * las_vergnas(cellular(b1)))
    assert tutte(union.underlying_graph()) == (
        tutte(m1().underlying_graph()) * tutte(b1().underlying_graph()))
