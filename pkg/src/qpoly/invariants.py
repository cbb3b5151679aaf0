"""Brute-force polynomial invariants and the maps between them.

Everything here is definitional: each polynomial is an exact sum over all
spanning subgraphs (2^e terms), with exponents taken from the topology
modules.  The quasi-tree module reproduces these values by structurally
different sums, which is the point of the whole exercise; these are the
oracles.

Conventions.  The Tutte polynomial uses the Whitney-rank normalization
T(X, Y) = sum over F of X^(c(F)-c(G)) Y^(n(F)), a translate of the
classical one.  The Bollobas-Riordan polynomial carries Z^(s(F)) where
s is the doubled genus of the subgraph neighbourhood.  The Las Vergnas
polynomial is taken over a cellular embedding with ranks from the cycle
matroid of G and the bond matroid of the dual cellulation.
"""

from __future__ import annotations

import enum

from .graphs import MultiGraph
from .laurent import HalfExp, LaurentPoly
from .matroid import bond_matroid, cycle_matroid
from .ribbon import EmbeddedGraph, RibbonError, RibbonGraph

__all__ = [
    "PolyKind",
    "krushkal",
    "tutte",
    "bollobas_riordan",
    "las_vergnas",
    "specialize",
]


class PolyKind(enum.Enum):
    KRUSHKAL = "krushkal"
    TUTTE = "tutte"
    BR = "br"
    LV = "lv"


def _submasks(mask):
    """All submasks of mask, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def krushkal(emb):
    """The Krushkal polynomial of an embedded graph, by direct summation.

    Sum over subsets F of the marked edges of
    X^(c(F)-c(G)) Y^(c(Sigma-F)-c(Sigma)) A^(s(F)/2) B^(s_perp(F)/2),
    with complement data read off the dual cellulation.  Works for
    cellular and non-cellular markings alike.
    """
    if not isinstance(emb, EmbeddedGraph):
        emb = EmbeddedGraph(emb)
    g = emb.cellulation
    d = emb.dual_cellulation
    full = g.full_mask
    marked = emb.marked_mask
    c_g = g.components(marked)
    c_sigma = g.components(full)
    acc = {}
    for f in _submasks(marked):
        co = full ^ f
        key = (2 * (g.components(f) - c_g),
               2 * (d.components(co) - c_sigma),
               g.genus_s(f),
               d.genus_s(co),
               0)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


def tutte(g):
    """Whitney-rank Tutte polynomial of an ordinary multigraph."""
    if isinstance(g, RibbonGraph):
        g = g.underlying_graph()
    if not isinstance(g, MultiGraph):
        raise TypeError("tutte expects a MultiGraph or RibbonGraph")
    full = g.full_mask
    c_g = g.components(full)
    nv = g.n_vertices
    acc = {}
    for f in range(full + 1):
        c = g.components(f)
        n = f.bit_count() - nv + c
        key = (2 * (c - c_g), 2 * n, 0, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


def bollobas_riordan(g):
    """Bollobas-Riordan polynomial of a ribbon graph.

    Sum over spanning subgraphs of X^(c(F)-c(G)) Y^(n(F)) Z^(s(F)).
    """
    if not isinstance(g, RibbonGraph):
        raise TypeError("bollobas_riordan expects a RibbonGraph")
    full = g.full_mask
    c_g = g.components(full)
    nv = g.n_vertices
    acc = {}
    for f in range(full + 1):
        c = g.components(f)
        n = f.bit_count() - nv + c
        key = (2 * (c - c_g), 2 * n, 0, 0, 2 * g.genus_s(f))
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


def las_vergnas(emb):
    """Las Vergnas polynomial of a cellularly embedded graph.

    Sum over F of (X-1)^(r(E)-r(F)) (Y-1)^(|F|-rb(F)) Z^((rb(E)-rb(F))-(r(E)-r(F)))
    where r is the cycle rank of G and rb the rank of the bond matroid of
    the dual graph G*.
    """
    if not isinstance(emb, EmbeddedGraph):
        emb = EmbeddedGraph(emb)
    if not emb.is_cellular:
        raise RibbonError("the Las Vergnas polynomial needs a cellular embedding")
    g = emb.cellulation
    r = cycle_matroid(g.underlying_graph())
    rb = bond_matroid(emb.dual_cellulation.underlying_graph())
    full = g.full_mask
    r_full = r.rank(full)
    rb_full = rb.rank(full)
    xm1 = LaurentPoly.variable("X") - 1
    ym1 = LaurentPoly.variable("Y") - 1
    total = LaurentPoly.zero()
    for f in range(full + 1):
        dr = r_full - r.rank(f)
        nb = f.bit_count() - rb.rank(f)
        dz = (rb_full - rb.rank(f)) - dr
        total = total + xm1 ** dr * ym1 ** nb * LaurentPoly.term(Z=dz)
    return total


def specialize(p, target, *, delta=None, s=None):
    """Push a Krushkal polynomial down to one of its specializations.

    target 'tutte' needs delta (= 2c - chi of the ambient surface) and
    gives Y^(delta/2) p(X, Y, Y, Y^-1); 'br' needs s (= s of the full
    ribbon graph) and gives Y^(s/2) p(X, Y, Y Z^2, Y^-1); 'lv' needs
    delta and gives Z^(delta/2) p(X-1, Y-1, Z^-1, Z).
    """
    kind = PolyKind(target) if not isinstance(target, PolyKind) else target
    if kind is PolyKind.KRUSHKAL:
        return p
    if kind is PolyKind.TUTTE:
        if delta is None:
            raise ValueError("tutte specialization needs delta")
        sub = p.substitute({
            "A": LaurentPoly.variable("Y"),
            "B": LaurentPoly.term(Y=-1),
        })
        return LaurentPoly.term(Y=HalfExp(delta)) * sub
    if kind is PolyKind.BR:
        if s is None:
            raise ValueError("br specialization needs s of the source graph")
        sub = p.substitute({
            "A": LaurentPoly.term(Y=1, Z=2),
            "B": LaurentPoly.term(Y=-1),
        })
        return LaurentPoly.term(Y=HalfExp(s)) * sub
    if kind is PolyKind.LV:
        if delta is None:
            raise ValueError("lv specialization needs delta")
        sub = p.substitute({
            "X": LaurentPoly.variable("X") - 1,
            "Y": LaurentPoly.variable("Y") - 1,
            "A": LaurentPoly.term(Z=-1),
            "B": LaurentPoly.variable("Z"),
        })
        return LaurentPoly.term(Z=HalfExp(delta)) * sub
    raise ValueError("unknown polynomial kind %r" % (target,))
