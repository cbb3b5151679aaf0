"""Signed rotation systems (ribbon graphs) and their subgraph topology.

A ribbon graph is stored as a rotation system with twists: every vertex
carries a cyclic sequence of half-edge labels, every edge pairs two half
edges and carries a sign, + for an untwisted ribbon and - for a twisted
one.  This single structure supports all the topology we need: boundary
component counts, orientability, Poincare duals, partial duals, deletion
and contraction.

Boundary walks are traced on *corner points*.  Every half-edge h has two
corners (h, 0) and (h, 1), placed so that walking the vertex disc boundary
along the rotation visits h's attachment interval from (h, 0) to (h, 1)
and then follows a disc arc from (h, 1) to the next half-edge's (·, 0)
corner.  An edge ribbon with halves h, h' contributes its two free sides:
untwisted they join (h, 0)-(h', 1) and (h, 1)-(h', 0), twisted they join
(h, 0)-(h', 0) and (h, 1)-(h', 1).  Disc arcs plus free sides form a
2-regular graph on the corners whose cycles are exactly the boundary
circles of the ribbon neighbourhood; vertices with no half-edge in the
subgraph contribute one circle each.  The same walk, run with attachment
intervals for edges outside a subset H and ribbon sides for edges inside
H, yields the partial dual construction.

Subsets of edges are bitmasks in edge-declaration order throughout, and
graphs are capped at 64 edges.  All values are immutable once built;
operations are pure functions, so everything here is safe to share.
"""

from __future__ import annotations

from .graphs import MultiGraph

__all__ = [
    "RibbonError",
    "RibbonGraph",
    "SpanningSubgraph",
    "EmbeddedGraph",
]


class RibbonError(Exception):
    """A structurally invalid ribbon graph or an unsupported operation."""


_SIGNS = {"+": 1, "-": -1, 1: 1, -1: -1}


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cyclic_min(seq):
    """Lexicographically least rotation of a tuple (cyclic normal form)."""
    if len(seq) < 2:
        return tuple(seq)
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


class RibbonGraph:
    """An immutable signed rotation system.

    vertices: iterable of (name, rotation) pairs, rotation being the cyclic
    sequence of half-edge labels around the vertex (as written).
    edges: iterable of (label, (h1, h2), sign) triples with sign '+', '-',
    +1 or -1.

    All labels are strings.  Every half-edge must occur in exactly one
    rotation and exactly one edge.  Equality compares the rotation system
    itself: rotations match up to cyclic shifts (never reversal), edges
    must pair the same half-edges with the same twists, and vertex display
    names are ignored.
    """

    def __init__(self, vertices, edges):
        verts = []
        for name, rot in vertices:
            verts.append((name, tuple(rot)))
        self.vertices = tuple(verts)
        eds = []
        for label, pair, sign in edges:
            h1, h2 = pair
            if sign not in _SIGNS:
                raise RibbonError("edge %r has invalid sign %r" % (label, sign))
            eds.append((label, (h1, h2), _SIGNS[sign]))
        self.edges = tuple(eds)
        if len(self.edges) > 64:
            raise RibbonError("ribbon graphs are capped at 64 edges")

        for name, _ in self.vertices:
            if not isinstance(name, str):
                raise RibbonError("vertex names must be strings, got %r" % (name,))
        self._vname_index = {}
        for i, (name, _) in enumerate(self.vertices):
            if name in self._vname_index:
                raise RibbonError("duplicate vertex %r" % name)
            self._vname_index[name] = i

        # half-edges are indexed in edge-declaration order: edge i owns
        # half indexes 2i and 2i + 1
        self._edge_index = {}
        self._half_index = {}
        half_labels = []
        for ei, (label, (h1, h2), _) in enumerate(self.edges):
            if not isinstance(label, str):
                raise RibbonError("edge labels must be strings, got %r" % (label,))
            if label in self._edge_index:
                raise RibbonError("duplicate edge label %r" % label)
            self._edge_index[label] = ei
            for h in (h1, h2):
                if not isinstance(h, str):
                    raise RibbonError("half-edge labels must be strings, got %r" % (h,))
                if h in self._half_index:
                    raise RibbonError("half-edge %r appears in more than one edge" % h)
                self._half_index[h] = len(half_labels)
                half_labels.append(h)
        self.half_labels = tuple(half_labels)
        self.edge_labels = tuple(e[0] for e in self.edges)
        self._sign = tuple(e[2] for e in self.edges)

        nh = len(half_labels)
        self._vertex_of = [-1] * nh
        rot_idx = []
        seen = set()
        for vi, (name, rot) in enumerate(self.vertices):
            idxs = []
            for h in rot:
                if h not in self._half_index:
                    raise RibbonError("half-edge %r is not on any edge" % h)
                if h in seen:
                    raise RibbonError("half-edge %r appears twice in the rotations" % h)
                seen.add(h)
                k = self._half_index[h]
                idxs.append(k)
                self._vertex_of[k] = vi
            rot_idx.append(tuple(idxs))
        if len(seen) != nh:
            missing = next(h for h in half_labels if h not in seen)
            raise RibbonError("half-edge %r is missing from the vertex rotations" % missing)
        self._rot_idx = tuple(rot_idx)
        self._vertex_of = tuple(self._vertex_of)

        # precomputed pieces of the equality relation
        self._edge_map = {label: (frozenset(pair), sign)
                          for label, pair, sign in self.edges}
        self._rot_forms = tuple(sorted(_cyclic_min(r) for _, r in self.vertices))

    # ------------------------------------------------------------------
    # basics

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def full_mask(self):
        return (1 << len(self.edges)) - 1

    def twist(self, label):
        """The sign of an edge, +1 or -1."""
        return self._sign[self._edge_index[label]]

    def edge_mask(self, labels):
        mask = 0
        for label in labels:
            try:
                mask |= 1 << self._edge_index[label]
            except KeyError:
                raise RibbonError("unknown edge %r" % (label,)) from None
        return mask

    def mask_labels(self, mask):
        """Edge labels of a bitmask, in declaration order."""
        return tuple(self.edge_labels[i] for i in _iter_bits(mask))

    def _norm_mask(self, edges):
        if edges is None:
            return self.full_mask
        if isinstance(edges, SpanningSubgraph):
            if edges.parent is not self and edges.parent != self:
                raise RibbonError("subgraph belongs to a different graph")
            return edges.mask
        if isinstance(edges, int):
            if edges < 0 or edges > self.full_mask:
                raise RibbonError("edge mask %#x out of range" % edges)
            return edges
        return self.edge_mask(edges)

    def subgraph(self, edges=None):
        return SpanningSubgraph(self, edges)

    def underlying_graph(self, edges=None):
        """The ordinary multigraph on the same vertices and the given edges."""
        mask = self._norm_mask(edges)
        vnames = [name for name, _ in self.vertices]
        eds = []
        for ei in _iter_bits(mask):
            label = self.edge_labels[ei]
            u = self.vertices[self._vertex_of[2 * ei]][0]
            w = self.vertices[self._vertex_of[2 * ei + 1]][0]
            eds.append((label, u, w))
        return MultiGraph(vnames, eds)

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return (self._edge_map == other._edge_map
                and self._rot_forms == other._rot_forms)

    def __hash__(self):
        return hash((self._rot_forms, frozenset(self._edge_map.items())))

    def __repr__(self):
        return "<RibbonGraph v=%d e=%d>" % (len(self.vertices), len(self.edges))

    # ------------------------------------------------------------------
    # subgraph invariants

    def components(self, edges=None):
        """Connected components of the spanning subgraph (all vertices)."""
        mask = self._norm_mask(edges)
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ei in _iter_bits(mask):
            a = find(self._vertex_of[2 * ei])
            b = find(self._vertex_of[2 * ei + 1])
            if a != b:
                parent[a] = b
        return sum(1 for i in range(len(parent)) if find(i) == i)

    def boundary_components(self, edges=None):
        """Boundary circles of the ribbon neighbourhood of the subgraph.

        Counted by tracing the corner-point walk described in the module
        docstring; vertices with no half-edge present count one circle
        each.
        """
        mask = self._norm_mask(edges)
        count = 0
        nh = 2 * len(self.edges)
        arc = [0] * (2 * nh)
        for rot in self._rot_idx:
            present = [h for h in rot if (mask >> (h >> 1)) & 1]
            if not present:
                count += 1
                continue
            m = len(present)
            for i in range(m):
                a = present[i]
                b = present[(i + 1) % m] if i + 1 < m else present[0]
                arc[2 * a + 1] = 2 * b
                arc[2 * b] = 2 * a + 1
        band = [0] * (2 * nh)
        for ei in _iter_bits(mask):
            c00 = 4 * ei
            if self._sign[ei] > 0:
                band[c00] = c00 + 3
                band[c00 + 3] = c00
                band[c00 + 1] = c00 + 2
                band[c00 + 2] = c00 + 1
            else:
                band[c00] = c00 + 2
                band[c00 + 2] = c00
                band[c00 + 1] = c00 + 3
                band[c00 + 3] = c00 + 1
        seen = bytearray(2 * nh)
        for ei in _iter_bits(mask):
            for c0 in (4 * ei, 4 * ei + 1, 4 * ei + 2, 4 * ei + 3):
                if seen[c0]:
                    continue
                count += 1
                c = c0
                while not seen[c]:
                    seen[c] = 1
                    t = band[c]
                    seen[t] = 1
                    c = arc[t]
        return count

    def genus_s(self, edges=None):
        """s(F) = 2c(F) - v + e(F) - bc(F); twice the orientable genus of
        the filled-in surface, or its non-orientable genus."""
        mask = self._norm_mask(edges)
        return (2 * self.components(mask) - len(self.vertices)
                + mask.bit_count() - self.boundary_components(mask))

    def nullity(self, edges=None):
        """n(F) = e(F) - v + c(F)."""
        mask = self._norm_mask(edges)
        return mask.bit_count() - len(self.vertices) + self.components(mask)

    def is_orientable(self, edges=None):
        """Whether some vertex-flip assignment clears every twist of the
        subgraph; a twisted loop is immediately non-orientable."""
        mask = self._norm_mask(edges)
        nv = len(self.vertices)
        adj = [[] for _ in range(nv)]
        for ei in _iter_bits(mask):
            a = self._vertex_of[2 * ei]
            b = self._vertex_of[2 * ei + 1]
            s = self._sign[ei]
            if a == b:
                if s < 0:
                    return False
            else:
                adj[a].append((b, s))
                adj[b].append((a, s))
        sig = [0] * nv
        for start in range(nv):
            if sig[start]:
                continue
            sig[start] = 1
            stack = [start]
            while stack:
                x = stack.pop()
                sx = sig[x]
                for y, s in adj[x]:
                    want = sx * s
                    if sig[y] == 0:
                        sig[y] = want
                        stack.append(y)
                    elif sig[y] != want:
                        return False
        return True

    def subgraph_profile(self):
        """The (c, bc, s, n) vector of every edge subset, indexed by mask.

        Exponential in the edge count; refused above 16 edges.
        """
        if len(self.edges) > 16:
            raise RibbonError("subgraph profile is exponential; refusing e > 16")
        nv = len(self.vertices)
        out = []
        for mask in range(1 << len(self.edges)):
            c = self.components(mask)
            bc = self.boundary_components(mask)
            k = mask.bit_count()
            out.append((c, bc, 2 * c - nv + k - bc, k - nv + c))
        return tuple(out)

    # ------------------------------------------------------------------
    # duality

    def partial_dual(self, edges):
        """The partial dual with respect to an edge subset H.

        Edges keep their labels and half-edge labels; the empty subset
        returns a graph equal to this one, the full subset the Poincare
        dual.  New vertices are the boundary circles of the spanning
        subgraph on H, read off the corner walk: edges in H contribute
        their ribbon sides to the walk, edges outside H their attachment
        intervals, and the two walk directions of each crossed interval
        become the corners of the re-attached half-edge, which determines
        the new twists.
        """
        mask = self._norm_mask(edges)
        nE = len(self.edges)
        if nE == 0:
            return RibbonGraph(self.vertices, ())
        nh = 2 * nE
        arc = [0] * (2 * nh)
        for rot in self._rot_idx:
            m = len(rot)
            for i in range(m):
                a = rot[i]
                b = rot[(i + 1) % m]
                arc[2 * a + 1] = 2 * b
                arc[2 * b] = 2 * a + 1
        link = [0] * (2 * nh)
        token = [0] * (2 * nh)
        for ei in range(nE):
            h1 = 2 * ei
            h2 = h1 + 1
            c00, c01, c10, c11 = 4 * ei, 4 * ei + 1, 4 * ei + 2, 4 * ei + 3
            if (mask >> ei) & 1:
                if self._sign[ei] > 0:
                    link[c00] = c11
                    link[c11] = c00
                    link[c01] = c10
                    link[c10] = c01
                else:
                    link[c00] = c10
                    link[c10] = c00
                    link[c01] = c11
                    link[c11] = c01
                # the ribbon side holding (h1, 0) is re-labelled h1, the
                # other side h2, so the edge pairing survives unchanged
                token[c00] = token[link[c00]] = h1
                token[c01] = token[link[c01]] = h2
            else:
                link[c00] = c01
                link[c01] = c00
                link[c10] = c11
                link[c11] = c10
                token[c00] = token[c01] = h1
                token[c10] = token[c11] = h2

        visited = bytearray(2 * nh)
        role = [None] * (2 * nh)
        walks = []
        for c0 in range(2 * nh):
            if visited[c0]:
                continue
            tokens = []
            c = c0
            while True:
                q = link[c]
                th = token[c]
                tokens.append(th)
                role[c] = (th, 0)
                role[q] = (th, 1)
                visited[c] = 1
                visited[q] = 1
                c = arc[q]
                if c == c0:
                    break
            walks.append(tokens)

        new_vertices = []
        for i, tokens in enumerate(walks):
            name = "v%d" % (i + 1)
            new_vertices.append((name, tuple(self.half_labels[t] for t in tokens)))
        extra = len(walks)
        for name, rot in self.vertices:
            if not rot:
                extra += 1
                new_vertices.append(("v%d" % extra, ()))

        new_edges = []
        for ei, (label, pair, sign) in enumerate(self.edges):
            c00, c01, c10, c11 = 4 * ei, 4 * ei + 1, 4 * ei + 2, 4 * ei + 3
            if (mask >> ei) & 1:
                sides = ((c00, c01), (c10, c11))
            elif sign > 0:
                sides = ((c00, c11), (c01, c10))
            else:
                sides = ((c00, c10), (c01, c11))
            pattern = {role[p][1] + role[q][1] for p, q in sides}
            if pattern == {1}:
                new_sign = 1
            else:
                assert pattern <= {0, 2}, "inconsistent corner pairing on %r" % label
                new_sign = -1
            new_edges.append((label, pair, new_sign))
        return RibbonGraph(new_vertices, new_edges)

    def dual(self):
        """The Poincare dual: one vertex per boundary circle, same edges."""
        return self.partial_dual(self.full_mask)

    # ------------------------------------------------------------------
    # minors

    def delete(self, label):
        """Remove one edge ribbon, keeping all vertices."""
        ei = self._edge_index[label]
        drop = {self.edges[ei][1][0], self.edges[ei][1][1]}
        new_vertices = [(name, tuple(h for h in rot if h not in drop))
                        for name, rot in self.vertices]
        new_edges = [e for e in self.edges if e[0] != label]
        return RibbonGraph(new_vertices, new_edges)

    def contract(self, label):
        """Contract a non-loop edge, splicing the endpoint rotations.

        A twisted edge first flips one endpoint (reversing its rotation
        and toggling the twists of the other edges with exactly one end
        there), after which the splice is the untwisted one.  Contracting
        a loop is an error.
        """
        ei = self._edge_index[label]
        h1, h2 = self.edges[ei][1]
        u = self._vertex_of[2 * ei]
        w = self._vertex_of[2 * ei + 1]
        if u == w:
            raise RibbonError("cannot contract the loop %r" % label)
        flip = self._sign[ei] < 0
        rotu = list(self.vertices[u][1])
        rotw = list(self.vertices[w][1])
        if flip:
            rotw.reverse()
        iu = rotu.index(h1)
        iw = rotw.index(h2)
        merged = tuple(rotu[iu + 1:] + rotu[:iu] + rotw[iw + 1:] + rotw[:iw])
        new_vertices = []
        for vi, (name, rot) in enumerate(self.vertices):
            if vi == u:
                new_vertices.append((name, merged))
            elif vi != w:
                new_vertices.append((name, rot))
        new_edges = []
        for ej, (lab, pair, sign) in enumerate(self.edges):
            if ej == ei:
                continue
            if flip:
                at_w = (self._vertex_of[2 * ej] == w) + (self._vertex_of[2 * ej + 1] == w)
                if at_w == 1:
                    sign = -sign
            new_edges.append((lab, pair, sign))
        return RibbonGraph(new_vertices, new_edges)

    def minor(self, label, mode):
        if mode == "delete":
            return self.delete(label)
        if mode == "contract":
            return self.contract(label)
        raise RibbonError("minor mode must be 'delete' or 'contract', got %r" % (mode,))

    def restrict(self, edges):
        """The spanning ribbon subgraph on an edge subset, as a graph of
        its own (all vertices kept, rotations filtered)."""
        mask = self._norm_mask(edges)
        keep = set()
        for ei in _iter_bits(mask):
            keep.add(self.edges[ei][1][0])
            keep.add(self.edges[ei][1][1])
        new_vertices = [(name, tuple(h for h in rot if h in keep))
                        for name, rot in self.vertices]
        new_edges = [self.edges[ei] for ei in _iter_bits(mask)]
        return RibbonGraph(new_vertices, new_edges)

    def split_components(self):
        """The connected components, each as its own RibbonGraph, ordered
        by first vertex."""
        nv = len(self.vertices)
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ei in range(len(self.edges)):
            a = find(self._vertex_of[2 * ei])
            b = find(self._vertex_of[2 * ei + 1])
            if a != b:
                parent[a] = b
        groups = {}
        for vi in range(nv):
            groups.setdefault(find(vi), []).append(vi)
        out = []
        for root in sorted(groups, key=lambda r: min(groups[r])):
            vset = set(groups[root])
            verts = [self.vertices[vi] for vi in sorted(vset)]
            eds = [e for ei, e in enumerate(self.edges)
                   if self._vertex_of[2 * ei] in vset]
            out.append(RibbonGraph(verts, eds))
        return out

    # ------------------------------------------------------------------
    # flip canonicalization

    def canonical_flip_form(self):
        """A canonical encoding of the graph modulo vertex flips.

        Two graphs with corresponding labels (same edges declared in the
        same order) are related by vertex flips iff their forms are equal.
        Per component there are exactly two flip assignments normalizing
        a spanning tree to all-positive twists; the encoding takes the
        lexicographically smaller of the two.
        """
        nv = len(self.vertices)
        nE = len(self.edges)
        adj = [[] for _ in range(nv)]
        for ei in range(nE):
            a = self._vertex_of[2 * ei]
            b = self._vertex_of[2 * ei + 1]
            if a != b:
                adj[a].append((b, ei))
                adj[b].append((a, ei))
        assigned = [0] * nv
        comp_of = [-1] * nv
        comps = []
        for start in range(nv):
            if comp_of[start] >= 0:
                continue
            ci = len(comps)
            members = [start]
            comp_of[start] = ci
            assigned[start] = 1
            queue = [start]
            qi = 0
            while qi < len(queue):
                x = queue[qi]
                qi += 1
                for y, ei in adj[x]:
                    if comp_of[y] < 0:
                        comp_of[y] = ci
                        assigned[y] = assigned[x] * self._sign[ei]
                        members.append(y)
                        queue.append(y)
            comps.append(members)

        def encode(ci, rootsign):
            members = comps[ci]
            flips = {vi: assigned[vi] * rootsign for vi in members}
            rots = []
            for vi in members:
                rot = self._rot_idx[vi]
                if flips[vi] < 0:
                    rot = tuple(reversed(rot))
                rots.append(_cyclic_min(rot))
            rots.sort()
            signs = []
            for ei in range(nE):
                a = self._vertex_of[2 * ei]
                if comp_of[a] != ci:
                    continue
                b = self._vertex_of[2 * ei + 1]
                s = self._sign[ei]
                if a != b:
                    s *= flips[a] * flips[b]
                signs.append((ei, s))
            return (tuple(rots), tuple(signs))

        forms = []
        for ci in range(len(comps)):
            forms.append(min(encode(ci, 1), encode(ci, -1)))
        forms.sort()
        return tuple(forms)


class SpanningSubgraph:
    """An edge subset of a parent ribbon graph, with all vertices kept."""

    __slots__ = ("parent", "mask", "edges")

    def __init__(self, parent, edges=None):
        self.parent = parent
        self.mask = parent._norm_mask(edges)
        self.edges = frozenset(parent.mask_labels(self.mask))

    @property
    def n_edges(self):
        return self.mask.bit_count()

    def components(self):
        return self.parent.components(self.mask)

    def boundary_components(self):
        return self.parent.boundary_components(self.mask)

    def genus_s(self):
        return self.parent.genus_s(self.mask)

    def nullity(self):
        return self.parent.nullity(self.mask)

    def is_orientable(self):
        return self.parent.is_orientable(self.mask)

    def __contains__(self, label):
        return label in self.edges

    def __len__(self):
        return self.mask.bit_count()

    def __eq__(self, other):
        if not isinstance(other, SpanningSubgraph):
            return NotImplemented
        return self.mask == other.mask and self.parent == other.parent

    def __hash__(self):
        return hash((self.mask, self.parent))

    def __repr__(self):
        return "<SpanningSubgraph {%s}>" % ",".join(sorted(self.edges))


class EmbeddedGraph:
    """A graph embedded in a surface: a cellulation plus marked edges.

    The cellulation carries the surface; the marked subset is the embedded
    graph itself.  With marked == all edges the embedding is cellular.
    """

    def __init__(self, cellulation, marked=None):
        if not isinstance(cellulation, RibbonGraph):
            raise TypeError("cellulation must be a RibbonGraph")
        self.cellulation = cellulation
        if marked is None:
            self.marked_mask = cellulation.full_mask
        else:
            self.marked_mask = cellulation._norm_mask(marked)
        self.marked = frozenset(cellulation.mask_labels(self.marked_mask))

    @property
    def is_cellular(self):
        return self.marked_mask == self.cellulation.full_mask

    @property
    def dual_cellulation(self):
        """dual(G~), computed once and cached on the instance."""
        d = self.__dict__.get("_dual")
        if d is None:
            d = self._dual = self.cellulation.dual()
        return d

    def surface_invariants(self):
        """(c(Sigma), chi(Sigma), delta) of the ambient surface."""
        g = self.cellulation
        c = g.components()
        chi = len(g.vertices) - len(g.edges) + g.boundary_components()
        return (c, chi, 2 * c - chi)

    def complement_invariants(self, edges):
        """(c(Sigma minus F), s_perp(F), kernel dimension) for marked F.

        Computed on the complementary spanning subgraph of the dual
        cellulation, which carries the regular neighbourhood of the
        complement.
        """
        g = self.cellulation
        fmask = g._norm_mask(edges)
        if fmask & ~self.marked_mask:
            raise RibbonError("subset is not contained in the marked edges")
        d = self.dual_cellulation
        co = g.full_mask ^ fmask
        c_minus = d.components(co)
        s_perp = d.genus_s(co)
        return (c_minus, s_perp, c_minus - g.components())

    def ribbon_subgraph(self):
        """The marked edges as a ribbon graph of their own."""
        return self.cellulation.restrict(self.marked_mask)

    def underlying_marked_graph(self):
        return self.cellulation.underlying_graph(self.marked_mask)

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self.cellulation == other.cellulation
                and self.marked == other.marked)

    __hash__ = None

    def __repr__(self):
        tag = "cellular" if self.is_cellular else "%d marked" % len(self.marked)
        return "<EmbeddedGraph v=%d e=%d (%s)>" % (
            len(self.cellulation.vertices), len(self.cellulation.edges), tag)
