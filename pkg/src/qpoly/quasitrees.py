"""Quasi-trees, activity partitions, the resolution tree, and the
quasi-tree expansions of the Krushkal, Bollobas-Riordan, and Las Vergnas
polynomials.

A quasi-tree of a connected ribbon graph is a spanning subgraph whose
ribbon neighbourhood has exactly one boundary circle.  Taking the partial
dual with respect to a quasi-tree Q turns the graph into a one-vertex
ribbon graph; the cyclic word of half-edges around that vertex governs
everything else.  An edge is live when no lower-ordered edge interleaves
with it in the word, and orientable when its loop in the partial dual is
untwisted.  Crossing liveness with internal/external and orientability
splits E(G) into six classes, and the subsets VI(Q) union S over choices
S of live orientable edges partition all 2^e spanning subgraphs.  The
expansions below sum one closed-form term per quasi-tree and must agree
with the subset-sum oracles in invariants coefficient for coefficient.
"""

from __future__ import annotations

from .graphs import MultiGraph
from .invariants import tutte
from .laurent import HalfExp, LaurentPoly
from .ribbon import EmbeddedGraph, RibbonError, RibbonGraph, SpanningSubgraph

__all__ = [
    "VertexWord",
    "ActivityPartition",
    "ResolutionNode",
    "ResolutionTree",
    "quasi_tree_masks",
    "quasi_trees",
    "one_vertex_word",
    "links",
    "activities",
    "resolution_tree",
    "quasi_tree_partition",
    "subgraph_to_quasitree",
    "build_minor_graphs",
    "expansion_krushkal",
    "expansion_br",
    "expansion_lv",
]


class VertexWord:
    """The boundary word of a one-vertex ribbon graph.

    tokens is a cyclic sequence of (edge label, end, sign) triples, end
    being 1 or 2 for the edge's declared half-edges and sign the twist of
    the edge in the one-vertex graph.  Every edge appears exactly twice.
    """

    def __init__(self, tokens):
        self.tokens = tuple(tokens)
        self._positions = {}
        for i, (label, _end, _sign) in enumerate(self.tokens):
            self._positions.setdefault(label, []).append(i)
        for label, pos in self._positions.items():
            if len(pos) != 2:
                raise RibbonError("edge %r appears %d times in the word"
                                  % (label, len(pos)))

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def positions(self, label):
        return tuple(self._positions[label])

    def sign(self, label):
        i = self._positions[label][0]
        return self.tokens[i][2]

    def links(self, e, f):
        """Whether the occurrences of e and f interleave cyclically."""
        if e == f:
            raise ValueError("links needs two distinct edges")
        p1, p2 = self._positions[e]
        q1, q2 = self._positions[f]
        return (p1 < q1 < p2) != (p1 < q2 < p2)

    def __repr__(self):
        bits = ["%s%s%s" % (l, e, "'" if s < 0 else "") for l, e, s in self.tokens]
        return "<VertexWord %s>" % " ".join(bits)


def links(word, e, f):
    return word.links(e, f)


def quasi_tree_masks(g):
    """Bitmasks of all spanning subgraphs with one boundary circle."""
    if g.components() != 1:
        raise RibbonError("quasi-trees are defined for connected graphs")
    return [mask for mask in range(g.full_mask + 1)
            if g.boundary_components(mask) == 1]


def quasi_trees(g):
    return [SpanningSubgraph(g, mask) for mask in quasi_tree_masks(g)]


def one_vertex_word(g, q):
    """The vertex word of partial_dual(g, Q) for a quasi-tree Q."""
    mask = g._norm_mask(q)
    if g.boundary_components(mask) != 1:
        raise RibbonError("subgraph is not a quasi-tree (bc != 1)")
    gp = g.partial_dual(mask)
    if gp.n_vertices != 1:
        raise RibbonError("partial dual of a quasi-tree must have one vertex")
    tokens = []
    for h in gp.vertices[0][1]:
        idx = g._half_index[h]
        ei = idx >> 1
        tokens.append((g.edge_labels[ei], 1 + (idx & 1), gp._sign[ei]))
    return VertexWord(tokens)


class ActivityPartition:
    """The six activity classes of the edges relative to a quasi-tree."""

    def __init__(self, di, i_o, i_n, de, e_o, e_n):
        self.di = frozenset(di)
        self.i_o = frozenset(i_o)
        self.i_n = frozenset(i_n)
        self.de = frozenset(de)
        self.e_o = frozenset(e_o)
        self.e_n = frozenset(e_n)

    @property
    def vi(self):
        """Internally dead or nonorientable-live: DI union I_n."""
        return self.di | self.i_n

    @property
    def ve(self):
        return self.de | self.e_n

    def as_dict(self):
        return {"DI": self.di, "I_o": self.i_o, "I_n": self.i_n,
                "DE": self.de, "E_o": self.e_o, "E_n": self.e_n}

    def __eq__(self, other):
        if not isinstance(other, ActivityPartition):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    __hash__ = None

    def __repr__(self):
        parts = ["%s={%s}" % (k, ",".join(sorted(v)))
                 for k, v in self.as_dict().items() if v]
        return "<ActivityPartition %s>" % " ".join(parts)


def _check_order(g, order):
    if order is None:
        return tuple(g.edge_labels)
    order = tuple(order)
    if sorted(order) != sorted(g.edge_labels):
        raise RibbonError("edge order must be a permutation of the edge labels")
    return order


def activities(g, order, q, word=None):
    """Classify every edge relative to the quasi-tree q under the order.

    An edge is live when no strictly lower-ordered edge links it in the
    one-vertex word of the partial dual, internal when it lies in q, and
    orientable when its loop in the partial dual is untwisted.
    """
    order = _check_order(g, order)
    mask = g._norm_mask(q)
    if word is None:
        word = one_vertex_word(g, mask)
    rank = {label: i for i, label in enumerate(order)}
    sets = {k: [] for k in ("di", "i_o", "i_n", "de", "e_o", "e_n")}
    for label in g.edge_labels:
        live = not any(word.links(label, f) for f in g.edge_labels
                       if rank[f] < rank[label])
        internal = bool(mask & (1 << g._edge_index[label]))
        if not live:
            sets["di" if internal else "de"].append(label)
        elif word.sign(label) > 0:
            sets["i_o" if internal else "e_o"].append(label)
        else:
            sets["i_n" if internal else "e_n"].append(label)
    return ActivityPartition(**sets)


# ----------------------------------------------------------------------
# resolution tree


class ResolutionNode:
    """A partial resolution rho: E -> {0, 1, *}.

    Interior nodes branch on one edge; leaves carry the unique quasi-tree
    completing their resolution and the labels left unresolved (*).
    """

    __slots__ = ("ones", "zeros", "edge", "zero", "one",
                 "quasi_tree", "unresolved")

    def __init__(self, ones, zeros):
        self.ones = ones
        self.zeros = zeros
        self.edge = None
        self.zero = None
        self.one = None
        self.quasi_tree = None
        self.unresolved = None

    @property
    def is_leaf(self):
        return self.edge is None

    def __repr__(self):
        if self.is_leaf:
            return "<leaf Q=%#x unresolved={%s}>" % (
                self.quasi_tree, ",".join(sorted(self.unresolved)))
        return "<node on %s>" % self.edge


class ResolutionTree:
    def __init__(self, graph, order, root, leaves):
        self.graph = graph
        self.order = tuple(order)
        self.root = root
        self.leaves = tuple(leaves)

    @property
    def leaf_count(self):
        return len(self.leaves)

    def __repr__(self):
        return "<ResolutionTree %d leaves>" % len(self.leaves)


def resolution_tree(g, order=None):
    """Build the binary resolution tree of (g, order).

    Edges are examined from the highest order downward.  When both ways
    of deciding the next edge still admit a quasi-tree completion the
    node branches (0-child first); otherwise the edge is nugatory and is
    skipped for good, staying unresolved in every leaf below.  Each leaf
    admits exactly one quasi-tree completion.
    """
    order = _check_order(g, order)
    qts = quasi_tree_masks(g)
    desc = [g._edge_index[label] for label in reversed(order)]
    labels = {ei: g.edge_labels[ei] for ei in desc}
    full = g.full_mask
    leaves = []

    def viable(ones, zeros):
        return any(q & zeros == 0 and q & ones == ones for q in qts)

    def build(ones, zeros, idx):
        node = ResolutionNode(ones, zeros)
        for j in range(idx, len(desc)):
            bit = 1 << desc[j]
            if (ones | zeros) & bit:
                continue
            if viable(ones, zeros | bit) and viable(ones | bit, zeros):
                node.edge = labels[desc[j]]
                node.zero = build(ones, zeros | bit, j + 1)
                node.one = build(ones | bit, zeros, j + 1)
                return node
            # nugatory: the edge keeps resolution * below this node
        done = [q for q in qts if q & zeros == 0 and q & ones == ones]
        if len(done) != 1:
            raise RibbonError("leaf with %d quasi-tree completions; "
                              "the resolution tree construction is broken"
                              % len(done))
        node.quasi_tree = done[0]
        node.unresolved = frozenset(
            g.edge_labels[ei] for ei in range(len(g.edges))
            if not ((ones | zeros) >> ei) & 1)
        leaves.append(node)
        return node

    root = build(0, 0, 0)
    assert len(leaves) == len(qts)
    return ResolutionTree(g, order, root, leaves)


# ----------------------------------------------------------------------
# the spanning-subgraph partition


def quasi_tree_partition(g, order=None):
    """Map every spanning subgraph to its quasi-tree.

    Returns {F mask: (Q mask, S mask)} with F = VI(Q) union S and S a
    subset of the live orientable edges of Q.  The map being total and
    single-valued is the partition theorem; violations raise.
    """
    order = _check_order(g, order)
    table = {}
    for qmask in quasi_tree_masks(g):
        word = one_vertex_word(g, qmask)
        ap = activities(g, order, qmask, word)
        vi = g.edge_mask(ap.vi)
        free = sorted(g._edge_index[label] for label in (ap.i_o | ap.e_o))
        for pick in range(1 << len(free)):
            smask = 0
            for bitpos, ei in enumerate(free):
                if (pick >> bitpos) & 1:
                    smask |= 1 << ei
            fmask = vi | smask
            if fmask in table:
                raise RibbonError("spanning subgraph %#x reached from two "
                                  "quasi-trees; partition broken" % fmask)
            table[fmask] = (qmask, smask)
    if len(table) != g.full_mask + 1:
        raise RibbonError("partition covers %d of %d spanning subgraphs"
                          % (len(table), g.full_mask + 1))
    return table


def subgraph_to_quasitree(g, order, f):
    """The unique (Q, S) with F = VI(Q) union S, S live orientable."""
    fmask = g._norm_mask(f)
    table = quasi_tree_partition(g, order)
    qmask, smask = table[fmask]
    return SpanningSubgraph(g, qmask), frozenset(g.mask_labels(smask))


# ----------------------------------------------------------------------
# minor graphs and the expansions


def _contracted_multigraph(graph, base_mask, edge_labels):
    """The ordinary graph on the components of base_mask, with the given
    edges of `graph` re-attached to the components of their endpoints."""
    nv = graph.n_vertices
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    m = base_mask
    while m:
        ei = (m & -m).bit_length() - 1
        m &= m - 1
        a, b = find(graph._vertex_of[2 * ei]), find(graph._vertex_of[2 * ei + 1])
        if a != b:
            parent[a] = b
    comp_id = {}
    for vi in range(nv):
        root = find(vi)
        if root not in comp_id:
            comp_id[root] = len(comp_id)
    names = ["c%d" % i for i in range(len(comp_id))]
    eds = []
    for label in sorted(edge_labels, key=graph._edge_index.get):
        ei = graph._edge_index[label]
        u = comp_id[find(graph._vertex_of[2 * ei])]
        w = comp_id[find(graph._vertex_of[2 * ei + 1])]
        eds.append((label, names[u], names[w]))
    return MultiGraph(names, eds)


def build_minor_graphs(g, order, q, dual=None, ap=None):
    """(G_Q, G*_Q*): vertices are the components of F_VI (resp. R_VE in
    the dual), edges the live orientable internal (resp. external) ones."""
    order = _check_order(g, order)
    if ap is None:
        ap = activities(g, order, q)
    if dual is None:
        dual = g.dual()
    gq = _contracted_multigraph(g, g.edge_mask(ap.vi), ap.i_o)
    gstar = _contracted_multigraph(dual, dual.edge_mask(ap.ve), ap.e_o)
    return gq, gstar


def _each_quasi_tree(g, order):
    order = _check_order(g, order)
    for qmask in quasi_tree_masks(g):
        word = one_vertex_word(g, qmask)
        yield qmask, activities(g, order, qmask, word)


def expansion_krushkal(emb, order=None):
    """Quasi-tree expansion of the Krushkal polynomial.

    Sum over quasi-trees of
    T_{G_Q}(X, A) T_{G*_Q*}(Y, B) A^(s(F_VI)/2) B^(s(R_VE)/2).
    Needs a connected cellular embedding.
    """
    if isinstance(emb, RibbonGraph):
        emb = EmbeddedGraph(emb)
    if not emb.is_cellular:
        raise RibbonError("the Krushkal expansion needs a cellular embedding")
    g = emb.cellulation
    d = emb.dual_cellulation
    total = LaurentPoly.zero()
    var = LaurentPoly.variable
    for qmask, ap in _each_quasi_tree(g, order):
        gq = _contracted_multigraph(g, g.edge_mask(ap.vi), ap.i_o)
        gstar = _contracted_multigraph(d, d.edge_mask(ap.ve), ap.e_o)
        t_in = tutte(gq).substitute({"Y": var("A")})
        t_out = tutte(gstar).substitute({"X": var("Y"), "Y": var("B")})
        s_vi = g.genus_s(g.edge_mask(ap.vi))
        s_ve = d.genus_s(d.edge_mask(ap.ve))
        total = total + (t_in * t_out
                         * LaurentPoly.term(A=HalfExp(s_vi))
                         * LaurentPoly.term(B=HalfExp(s_ve)))
    return total


def expansion_br(g, order=None):
    """Quasi-tree expansion of the Bollobas-Riordan polynomial.

    Sum over quasi-trees of
    Y^(n(F_VI)) Z^(s(F_VI)) (1+Y)^|E_o| T_{G_Q}(X, Y Z^2).
    Works for any connected ribbon graph.
    """
    if isinstance(g, EmbeddedGraph):
        if not g.is_cellular:
            raise RibbonError("pass the marked ribbon subgraph itself for "
                              "non-cellular embeddings")
        g = g.cellulation
    one_plus_y = 1 + LaurentPoly.variable("Y")
    total = LaurentPoly.zero()
    for qmask, ap in _each_quasi_tree(g, order):
        vi_mask = g.edge_mask(ap.vi)
        gq = _contracted_multigraph(g, vi_mask, ap.i_o)
        t_in = tutte(gq).substitute({"Y": LaurentPoly.term(Y=1, Z=2)})
        head = LaurentPoly.term(Y=g.nullity(vi_mask), Z=g.genus_s(vi_mask))
        total = total + head * one_plus_y ** len(ap.e_o) * t_in
    return total


def expansion_lv(emb, order=None):
    """Quasi-tree expansion of the Las Vergnas polynomial.

    Sum over quasi-trees of
    T_{G_Q}(X-1, Z^-1) T_{G*_Q*}(Y-1, Z) Z^((delta - s(F_VI) + s(R_VE))/2),
    the term-by-term image of the Krushkal expansion under the map that
    carries the Krushkal polynomial to the Las Vergnas one.  Needs a
    connected cellular embedding.
    """
    if isinstance(emb, RibbonGraph):
        emb = EmbeddedGraph(emb)
    if not emb.is_cellular:
        raise RibbonError("the Las Vergnas expansion needs a cellular embedding")
    g = emb.cellulation
    d = emb.dual_cellulation
    _, _, delta = emb.surface_invariants()
    total = LaurentPoly.zero()
    var = LaurentPoly.variable
    for qmask, ap in _each_quasi_tree(g, order):
        gq = _contracted_multigraph(g, g.edge_mask(ap.vi), ap.i_o)
        gstar = _contracted_multigraph(d, d.edge_mask(ap.ve), ap.e_o)
        t_in = tutte(gq).substitute({"X": var("X") - 1,
                                     "Y": LaurentPoly.term(Z=-1)})
        t_out = tutte(gstar).substitute({"X": var("Y") - 1,
                                         "Y": var("Z")})
        s_vi = g.genus_s(g.edge_mask(ap.vi))
        s_ve = d.genus_s(d.edge_mask(ap.ve))
        zfac = LaurentPoly.term(Z=HalfExp(delta - s_vi + s_ve))
        total = total + t_in * t_out * zfac
    return total
