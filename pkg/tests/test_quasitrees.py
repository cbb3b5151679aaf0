"""Quasi-tree machinery: words, activities, resolution trees, expansions."""

import itertools

import pytest

from qpoly.invariants import bollobas_riordan, krushkal, las_vergnas
from qpoly.laurent import parse_poly
from qpoly.quasitrees import (
    VertexWord,
    activities,
    build_minor_graphs,
    expansion_br,
    expansion_krushkal,
    expansion_lv,
    links,
    one_vertex_word,
    quasi_tree_masks,
    quasi_tree_partition,
    quasi_trees,
    resolution_tree,
    subgraph_to_quasitree,
)
from qpoly.ribbon import EmbeddedGraph, RibbonError, RibbonGraph

from fixture_graphs import FIXTURES, b1, m1, t1, th, tv

CONNECTED = {k: v for k, v in FIXTURES.items()}


def disconnected():
    return RibbonGraph(
        [("v1", ("a1", "a2")), ("v2", ("b1", "b2"))],
        [("e1", ("a1", "a2"), "-"), ("e2", ("b1", "b2"), "+")])


def word_of(labels):
    seen = {}
    tokens = []
    for lab in labels:
        end = seen.get(lab, 0) + 1
        seen[lab] = end
        tokens.append((lab, end, 1))
    return VertexWord(tokens)


# ----------------------------------------------------------------------
# enumeration and words


def test_quasi_trees_examples():
    assert quasi_tree_masks(m1()) == [0, 1]
    assert quasi_tree_masks(b1()) == [0]
    g = th()
    assert quasi_tree_masks(g) == [g.edge_mask([lab]) for lab in ("e1", "e2", "e3")]


def test_quasi_trees_wrapper():
    qts = quasi_trees(t1())
    assert [q.mask for q in qts] == [0, 3]
    assert all(q.boundary_components() == 1 for q in qts)


def test_quasi_trees_need_connected():
    with pytest.raises(RibbonError):
        quasi_tree_masks(disconnected())


def test_one_vertex_word_m1():
    w = one_vertex_word(m1(), [ "e1" ])
    assert len(w) == 2
    assert [t[0] for t in w] == ["e1", "e1"]
    assert w.sign("e1") == -1


def test_one_vertex_word_t1_interleaves():
    w = one_vertex_word(t1(), ["ea", "eb"])
    assert [t[0] for t in w] == ["ea", "eb", "ea", "eb"]
    assert w.links("ea", "eb")
    assert w.sign("ea") == 1 and w.sign("eb") == 1


def test_word_length_is_twice_edge_count():
    for name, make in CONNECTED.items():
        g = make()
        for qmask in quasi_tree_masks(g):
            assert len(one_vertex_word(g, qmask)) == 2 * g.n_edges, name


def test_one_vertex_word_rejects_non_quasi_tree():
    with pytest.raises(RibbonError):
        one_vertex_word(b1(), ["e1"])


def test_links_patterns():
    assert links(word_of(["a", "b", "a", "b"]), "a", "b") is True
    assert links(word_of(["a", "a", "b", "b"]), "a", "b") is False
    assert links(word_of(["a", "b", "b", "a"]), "a", "b") is False
    with pytest.raises(ValueError):
        word_of(["a", "b", "a", "b"]).links("a", "a")


def test_word_validates_occurrences():
    with pytest.raises(RibbonError):
        VertexWord([("a", 1, 1), ("a", 2, 1), ("a", 1, 1), ("b", 1, 1)])


# ----------------------------------------------------------------------
# activities


def test_activities_t1_full():
    ap = activities(t1(), ["ea", "eb"], ["ea", "eb"])
    assert ap.di == {"eb"}
    assert ap.i_o == {"ea"}
    assert not (ap.i_n | ap.de | ap.e_o | ap.e_n)
    assert ap.vi == {"eb"}
    assert ap.ve == set()


def test_activities_t1_empty():
    ap = activities(t1(), ["ea", "eb"], 0)
    assert ap.de == {"eb"}
    assert ap.e_o == {"ea"}
    assert not (ap.di | ap.i_o | ap.i_n | ap.e_n)


def test_activities_m1():
    ap = activities(m1(), None, ["e1"])
    assert ap.i_n == {"e1"}
    assert ap.vi == {"e1"}


def test_activities_partition_edges():
    for name, make in CONNECTED.items():
        g = make()
        for order in itertools.permutations(g.edge_labels):
            for qmask in quasi_tree_masks(g):
                ap = activities(g, order, qmask)
                classes = [ap.di, ap.i_o, ap.i_n, ap.de, ap.e_o, ap.e_n]
                union = set().union(*classes)
                assert union == set(g.edge_labels), name
                assert sum(len(c) for c in classes) == g.n_edges, name
                assert ap.di | ap.i_o | ap.i_n == set(g.mask_labels(qmask))


def test_activities_rejects_bad_order():
    with pytest.raises(RibbonError):
        activities(t1(), ["ea"], 0)
    with pytest.raises(RibbonError):
        activities(t1(), ["ea", "ea"], 0)


def test_dual_activities():
    # with the same labels and order, the complement quasi-tree of the
    # dual swaps internal and external classes
    for name, make in CONNECTED.items():
        g = make()
        d = g.dual()
        for qmask in quasi_tree_masks(g):
            ap = activities(g, None, qmask)
            dq = activities(d, None, g.full_mask ^ qmask)
            assert dq.di == ap.de and dq.de == ap.di, name
            assert dq.i_o == ap.e_o and dq.e_o == ap.i_o, name
            assert dq.i_n == ap.e_n and dq.e_n == ap.i_n, name


# ----------------------------------------------------------------------
# resolution tree


def test_resolution_tree_m1():
    tree = resolution_tree(m1())
    assert tree.leaf_count == 2
    assert all(not leaf.unresolved for leaf in tree.leaves)


def test_resolution_tree_t1():
    tree = resolution_tree(t1())
    assert tree.leaf_count == 2
    for leaf in tree.leaves:
        assert leaf.unresolved == {"ea"}


def test_resolution_tree_leaves_biject_with_quasi_trees():
    for name, make in CONNECTED.items():
        g = make()
        for order in itertools.permutations(g.edge_labels):
            tree = resolution_tree(g, order)
            got = sorted(leaf.quasi_tree for leaf in tree.leaves)
            assert got == quasi_tree_masks(g), (name, order)


def test_resolution_tree_live_edges_stay_unresolved():
    for name, make in CONNECTED.items():
        g = make()
        for order in itertools.permutations(g.edge_labels):
            tree = resolution_tree(g, order)
            for leaf in tree.leaves:
                ap = activities(g, order, leaf.quasi_tree)
                assert leaf.unresolved == (ap.i_o | ap.e_o), (name, order)


def test_resolution_tree_structure():
    tree = resolution_tree(th())
    root = tree.root
    assert not root.is_leaf
    assert root.zero is not None and root.one is not None
    # leaves are reported zero-child first
    assert tree.leaves[0].quasi_tree <= tree.leaves[-1].quasi_tree


# ----------------------------------------------------------------------
# the partition of spanning subgraphs


def test_partition_is_exact():
    for name, make in CONNECTED.items():
        g = make()
        for order in itertools.permutations(g.edge_labels):
            table = quasi_tree_partition(g, order)
            assert len(table) == 1 << g.n_edges, (name, order)
            for fmask, (qmask, smask) in table.items():
                ap = activities(g, order, qmask)
                assert fmask == g.edge_mask(ap.vi) | smask
                assert smask & ~g.edge_mask(ap.i_o | ap.e_o) == 0


def test_partition_counts():
    for name, make in CONNECTED.items():
        g = make()
        total = 0
        for qmask in quasi_tree_masks(g):
            ap = activities(g, None, qmask)
            total += 1 << (len(ap.i_o) + len(ap.e_o))
        assert total == 1 << g.n_edges, name


def test_subgraph_to_quasitree_examples():
    g = t1()
    q, s = subgraph_to_quasitree(g, ["ea", "eb"], ["ea"])
    assert q.mask == 0 and s == {"ea"}
    q, s = subgraph_to_quasitree(g, ["ea", "eb"], ["eb"])
    assert q.mask == g.full_mask and s == set()
    q, s = subgraph_to_quasitree(m1(), None, ["e1"])
    assert q.mask == 1 and s == set()


def test_lemma_conn_and_bc():
    # c(F_{VI u S}) only depends on the internal part S1, and
    # bc(F_{VI u S}) = bc(F_VI) - |S1| + |S2|, with bc(F_VI) = |I_o| + 1
    for name, make in CONNECTED.items():
        g = make()
        for qmask in quasi_tree_masks(g):
            ap = activities(g, None, qmask)
            vi = g.edge_mask(ap.vi)
            io = sorted(g._edge_index[x] for x in ap.i_o)
            eo = sorted(g._edge_index[x] for x in ap.e_o)
            assert g.boundary_components(vi) == len(io) + 1, name
            for p1 in range(1 << len(io)):
                s1 = sum(1 << io[i] for i in range(len(io)) if (p1 >> i) & 1)
                c_ref = g.components(vi | s1)
                for p2 in range(1 << len(eo)):
                    s2 = sum(1 << eo[i] for i in range(len(eo)) if (p2 >> i) & 1)
                    f = vi | s1 | s2
                    assert g.components(f) == c_ref, name
                    assert g.boundary_components(f) == (
                        g.boundary_components(vi)
                        - bin(s1).count("1") + bin(s2).count("1")), name


def test_genus_shift_along_internal_edges():
    # s(F_{VI u S1 u S2}) = s(F_VI) + 2 n_{G_Q}(S1)
    for name, make in CONNECTED.items():
        g = make()
        for qmask in quasi_tree_masks(g):
            ap = activities(g, None, qmask)
            gq, _ = build_minor_graphs(g, None, qmask, ap=ap)
            vi = g.edge_mask(ap.vi)
            io = sorted(ap.i_o, key=g._edge_index.get)
            eo = sorted(ap.e_o, key=g._edge_index.get)
            base = g.genus_s(vi)
            for p1 in range(1 << len(io)):
                picked = [io[i] for i in range(len(io)) if (p1 >> i) & 1]
                s1 = g.edge_mask(picked)
                bump = 2 * gq.nullity(gq.edge_mask(picked))
                for p2 in range(1 << len(eo)):
                    s2 = g.edge_mask([eo[i] for i in range(len(eo))
                                      if (p2 >> i) & 1])
                    assert g.genus_s(vi | s1 | s2) == base + bump, name


# ----------------------------------------------------------------------
# minor graphs


def test_build_minor_graphs_t1():
    g = t1()
    gq, gstar = build_minor_graphs(g, ["ea", "eb"], g.full_mask)
    assert gq.n_vertices == 1 and gq.edge_labels == ("ea",)
    assert gstar.n_vertices == 1 and gstar.n_edges == 0
    gq, gstar = build_minor_graphs(g, ["ea", "eb"], 0)
    assert gq.n_vertices == 1 and gq.n_edges == 0
    assert gstar.n_vertices == 1 and gstar.edge_labels == ("ea",)


def test_build_minor_graphs_m1():
    gq, gstar = build_minor_graphs(m1(), None, 1)
    assert gq.n_vertices == 1 and gq.n_edges == 0
    assert gstar.n_vertices == 1 and gstar.n_edges == 0


# ----------------------------------------------------------------------
# expansions


def test_expansion_krushkal_examples():
    assert expansion_krushkal(m1()) == parse_poly("A^(1/2) + B^(1/2)")
    assert expansion_krushkal(t1()) == parse_poly("A + B + 2")
    assert expansion_krushkal(tv()) == parse_poly("1")


def test_expansion_br_examples():
    assert expansion_br(m1()) == parse_poly("1 + Y*Z")
    assert expansion_br(b1()) == parse_poly("1 + Y")
    assert expansion_br(t1()) == parse_poly("1 + 2*Y + Y^2*Z^2")


def test_expansion_lv_examples():
    assert expansion_lv(m1()) == parse_poly("1 + Z")
    assert expansion_lv(th()) == parse_poly("X + Y^2 + Y")
    assert expansion_lv(tv()) == parse_poly("1")


def test_expansions_match_oracles_under_all_orders():
    for name, make in CONNECTED.items():
        g = make()
        emb = EmbeddedGraph(g)
        kr = krushkal(emb)
        br = bollobas_riordan(g)
        lv = las_vergnas(emb)
        for order in itertools.permutations(g.edge_labels):
            assert expansion_krushkal(emb, order) == kr, (name, order)
            assert expansion_br(g, order) == br, (name, order)
            assert expansion_lv(emb, order) == lv, (name, order)


def test_expansions_reject_disconnected():
    g = disconnected()
    with pytest.raises(RibbonError):
        expansion_krushkal(g)
    with pytest.raises(RibbonError):
        expansion_br(g)
    with pytest.raises(RibbonError):
        expansion_lv(g)


def test_expansions_reject_non_cellular():
    emb = EmbeddedGraph(th(), ["e1"])
    with pytest.raises(RibbonError):
        expansion_krushkal(emb)
    with pytest.raises(RibbonError):
        expansion_lv(emb)
    with pytest.raises(RibbonError):
        expansion_br(emb)
