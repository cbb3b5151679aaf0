"""Ordinary labelled multigraphs (loops and parallel edges allowed).

This is the underlying-graph side of a ribbon graph: everything a rank
function or a Tutte sum needs, nothing topological.  Edge subsets are
bitmasks in edge declaration order, matching the convention used for
ribbon graphs.
"""

from __future__ import annotations

__all__ = ["MultiGraph"]


class MultiGraph:
    """A multigraph with ordered vertices and labelled edges.

    vertices: iterable of hashable vertex labels.
    edges: iterable of (label, u, w) triples; u and w must be declared
    vertices, u == w gives a loop.
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self._vindex = {}
        for v in self.vertices:
            if v in self._vindex:
                raise ValueError("duplicate vertex %r" % (v,))
            self._vindex[v] = len(self._vindex)
        eds = []
        self._eindex = {}
        for label, u, w in edges:
            if u not in self._vindex or w not in self._vindex:
                raise ValueError("edge %r joins undeclared vertices" % (label,))
            if label in self._eindex:
                raise ValueError("duplicate edge label %r" % (label,))
            self._eindex[label] = len(eds)
            eds.append((label, u, w))
        self.edges = tuple(eds)
        self.edge_labels = tuple(e[0] for e in eds)
        self._ends = tuple((self._vindex[u], self._vindex[w]) for _, u, w in eds)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def full_mask(self):
        return (1 << len(self.edges)) - 1

    def edge_mask(self, labels):
        mask = 0
        for label in labels:
            try:
                mask |= 1 << self._eindex[label]
            except KeyError:
                raise ValueError("unknown edge %r" % (label,)) from None
        return mask

    def _norm_mask(self, mask):
        if mask is None:
            return self.full_mask
        if isinstance(mask, int):
            if mask < 0 or mask > self.full_mask:
                raise ValueError("edge mask %#x out of range" % mask)
            return mask
        return self.edge_mask(mask)

    def components(self, mask=None):
        """Connected components of the spanning subgraph on the given edges."""
        mask = self._norm_mask(mask)
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        m = mask
        while m:
            ei = (m & -m).bit_length() - 1
            m &= m - 1
            a, b = self._ends[ei]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return sum(1 for i, p in enumerate(parent) if find(i) == i)

    def nullity(self, mask=None):
        """Cycle-space dimension e(F) - v + c(F) of the spanning subgraph."""
        mask = self._norm_mask(mask)
        return mask.bit_count() - len(self.vertices) + self.components(mask)

    def __repr__(self):
        return "<MultiGraph v=%d e=%d>" % (len(self.vertices), len(self.edges))
