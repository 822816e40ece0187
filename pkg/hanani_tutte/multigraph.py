# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Reduce multigraph drawings to simple ones and lift embeddings back.

Every edge end at a protected vertex is split off by a short stub through a
new degree-2 vertex; a loop at a protected vertex gets two stubs. Loops and
parallel copies left over are then removed, each parallel copy remembering
the anchor edge it runs alongside. After embedding, the removed edges are
drawn next to their anchors or as empty loops, and the stubs contracted.
"""

import logging
from collections import defaultdict

from hanani_tutte.checks import require_hypotheses
from hanani_tutte.drawing import (
    EdgeEnd,
    ParityDrawing,
    RotationSystem,
    even_vertices,
    genus,
    restrict,
)
from hanani_tutte.errors import ReinsertionBroken
from hanani_tutte.graph import IdAllocator, Multigraph


log = logging.getLogger("hanani-tutte.reduce")


class Chain:
    """The pieces an edge was cut into, from its side-0 end to its side-1 end.

    `head` and `tail` are the stub edges (None where the end was not split);
    the middle piece keeps the original edge id.
    """

    def __init__(self, edge, head=None, head_vertex=None, tail=None, tail_vertex=None):
        self.edge = edge
        self.head = head
        self.head_vertex = head_vertex
        self.tail = tail
        self.tail_vertex = tail_vertex

    def toJSON(self):
        return {
            "edge": self.edge,
            "head": [self.head, self.head_vertex],
            "tail": [self.tail, self.tail_vertex],
        }


class ReductionLog:
    def __init__(self, original, W):
        self.original = original
        self.W = frozenset(W)
        self.chains = {}
        self.removed_loops = []
        self.removed_parallels = []
        self.subdivided = None

    @property
    def w_image(self):
        # W keeps its vertex ids
        return self.W

    @property
    def is_identity(self):
        return not (self.chains or self.removed_loops or self.removed_parallels)

    def new_vertices(self):
        vertices = set()
        for chain in self.chains.values():
            vertices.update(
                v for v in (chain.head_vertex, chain.tail_vertex) if v is not None
            )
        return vertices

    def toJSON(self):
        """Records for the JSON lines dump, one per logged change."""
        for edge in sorted(self.chains):
            yield dict(kind="subdivide", **self.chains[edge].toJSON())
        for edge, vertex in self.removed_loops:
            yield {"kind": "loop", "edge": edge, "vertex": vertex}
        for edge, anchor in self.removed_parallels:
            yield {"kind": "parallel", "edge": edge, "anchor": anchor}
        yield {"kind": "W", "vertices": sorted(self.W)}


def reduce(graph, W, drawing, subdivide_even=False):
    """Return (simple graph, its drawing, ReductionLog)."""
    require_hypotheses(drawing, W)
    reduction = ReductionLog(drawing, W)
    if graph.is_simple():
        reduction.subdivided = drawing
        return graph, drawing, reduction
    protected = set(W)
    if subdivide_even:
        protected |= even_vertices(drawing)
    subdivided = subdivide(drawing, protected, reduction)
    reduction.subdivided = subdivided
    removed = strip(subdivided.graph, reduction)
    simple = subdivided.graph.without_edges(removed)
    log.debug(
        "reduced %d edges to %d: %d subdivided, %d loops, %d parallels removed",
        len(graph.edges),
        len(simple.edges),
        len(reduction.chains),
        len(reduction.removed_loops),
        len(reduction.removed_parallels),
    )
    return simple, restrict(subdivided, simple), reduction


def subdivide(drawing, protected, reduction):
    graph = drawing.graph
    next_vertex = IdAllocator.for_vertices(graph)
    next_edge = IdAllocator.for_edges(graph)
    vertices = set(graph.vertices)
    edges = {}
    cycles = {v: list(cycle) for v, cycle in drawing.rotation.cycles()}
    for edge, (u, v) in graph.edge_items():
        if u not in protected and v not in protected:
            edges[edge] = (u, v)
            continue
        chain = Chain(edge)
        start, end = u, v
        if u in protected:
            chain.head, chain.head_vertex = next_edge(), next_vertex()
            start = chain.head_vertex
            vertices.add(start)
            edges[chain.head] = (u, start)
            _replace(cycles[u], EdgeEnd(edge, 0), EdgeEnd(chain.head, 0))
            cycles[start] = [EdgeEnd(chain.head, 1), EdgeEnd(edge, 0)]
        if v in protected:
            chain.tail, chain.tail_vertex = next_edge(), next_vertex()
            end = chain.tail_vertex
            vertices.add(end)
            edges[chain.tail] = (end, v)
            _replace(cycles[v], EdgeEnd(edge, 1), EdgeEnd(chain.tail, 1))
            cycles[end] = [EdgeEnd(edge, 1), EdgeEnd(chain.tail, 0)]
        edges[edge] = (start, end)
        reduction.chains[edge] = chain
    # stubs cross nothing; the middle pieces keep the parities
    return ParityDrawing(
        Multigraph(vertices, edges), RotationSystem(cycles), drawing.parity
    )


def _replace(cycle, old, new):
    cycle[cycle.index(old)] = new


def strip(graph, reduction):
    """Edge ids of loops and of parallel copies beyond the least one."""
    removed = []
    bundles = defaultdict(list)
    for edge, (u, v) in graph.edge_items():
        if u == v:
            reduction.removed_loops.append((edge, u))
            removed.append(edge)
        else:
            bundles[(min(u, v), max(u, v))].append(edge)
    for bundle in bundles.values():
        anchor = bundle[0]
        for edge in bundle[1:]:
            reduction.removed_parallels.append((edge, anchor))
            removed.append(edge)
    for edge, vertex in reduction.removed_loops:
        log.info("removed loop %d at vertex %d", edge, vertex)
    for edge, anchor in reduction.removed_parallels:
        log.info("removed edge %d parallel to %d", edge, anchor)
    return removed


def reinsert_and_contract(result, reduction):
    """Lift an embedding of the reduced graph to the original multigraph."""
    from hanani_tutte.embed.types import EmbedResult

    if reduction.is_identity:
        return result
    subdivided = reduction.subdivided.graph
    cycles = {v: list(cycle) for v, cycle in result.rotation.cycles()}
    for edge, anchor in reduction.removed_parallels:
        p, q = subdivided.endpoints(anchor)
        side_at_p = 0 if subdivided.endpoints(edge)[0] == p else 1
        at_p = cycles[p]
        at_p.insert(at_p.index(EdgeEnd(anchor, 0)) + 1, EdgeEnd(edge, side_at_p))
        at_q = cycles[q]
        at_q.insert(at_q.index(EdgeEnd(anchor, 1)), EdgeEnd(edge, 1 - side_at_p))
    for edge, vertex in reduction.removed_loops:
        cycles[vertex][:0] = [EdgeEnd(edge, 0), EdgeEnd(edge, 1)]
    reinserted = RotationSystem(cycles)
    if genus(reinserted):
        raise ReinsertionBroken(
            f"reinserted rotation system has genus {genus(reinserted)}"
        )
    for edge, chain in reduction.chains.items():
        if chain.head is not None:
            u = subdivided.endpoints(chain.head)[0]
            _replace(cycles[u], EdgeEnd(chain.head, 0), EdgeEnd(edge, 0))
            del cycles[chain.head_vertex]
        if chain.tail is not None:
            v = subdivided.endpoints(chain.tail)[1]
            _replace(cycles[v], EdgeEnd(chain.tail, 1), EdgeEnd(edge, 1))
            del cycles[chain.tail_vertex]
    rotation = RotationSystem(cycles)
    if genus(rotation):
        raise ReinsertionBroken(
            f"contracted rotation system has genus {genus(rotation)}"
        )
    original = reduction.original.rotation
    preserved = {
        v
        for v in result.preserved
        if v in cycles and rotation.cycle(v) == original.cycle(v)
    }
    return EmbedResult(rotation, preserved)
