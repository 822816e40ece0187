# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Immutable multigraphs.

Vertices and edges are non-negative integers. An edge maps to its ordered
endpoint pair (u, v); the end at u is side 0, the end at v is side 1. Equal
endpoints make a loop. Identifiers are never reused: new vertices and edges
come from `fresh_vertex`/`fresh_edge` or an IdAllocator.
"""

from collections import defaultdict

from hanani_tutte.errors import NotSubgraph, UnknownEdge, UnknownVertex


class Multigraph:
    __slots__ = ("_vertices", "_edges", "_incidence")

    def __init__(self, vertices=(), edges=None):
        edges = dict(edges or {})
        vertex_set = set(vertices)
        for eid, (u, v) in edges.items():
            if u not in vertex_set or v not in vertex_set:
                raise UnknownVertex(u if u not in vertex_set else v)
        self._vertices = tuple(sorted(vertex_set))
        self._edges = {eid: (u, v) for eid, (u, v) in sorted(edges.items())}
        incidence = defaultdict(list)
        for eid, (u, v) in self._edges.items():
            incidence[u].append(eid)
            if v != u:
                incidence[v].append(eid)
        self._incidence = {v: tuple(incidence[v]) for v in self._vertices}

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return tuple(self._edges)

    def endpoints(self, edge):
        try:
            return self._edges[edge]
        except KeyError:
            raise UnknownEdge(edge)

    def edge_items(self):
        return self._edges.items()

    def has_vertex(self, vertex):
        return vertex in self._incidence

    def has_edge(self, edge):
        return edge in self._edges

    def incident(self, vertex):
        """Edges at vertex, sorted by id; a loop is listed once."""
        try:
            return self._incidence[vertex]
        except KeyError:
            raise UnknownVertex(vertex)

    def degree(self, vertex):
        return sum(
            2 if self._edges[e][0] == self._edges[e][1] else 1
            for e in self.incident(vertex)
        )

    def other(self, edge, vertex):
        u, v = self.endpoints(edge)
        if vertex == u:
            return v
        if vertex == v:
            return u
        raise UnknownVertex(vertex)

    def neighbors(self, vertex):
        return sorted({self.other(e, vertex) for e in self.incident(vertex)})

    def edges_between(self, u, v):
        return [e for e in self.incident(u) if set(self._edges[e]) == {u, v}]

    def is_loop(self, edge):
        u, v = self.endpoints(edge)
        return u == v

    def independent(self, e, f):
        return not set(self.endpoints(e)) & set(self.endpoints(f))

    def common_vertices(self, e, f):
        return set(self.endpoints(e)) & set(self.endpoints(f))

    def is_simple(self):
        seen = set()
        for u, v in self._edges.values():
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, vertex):
        return vertex in self._incidence

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return False
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, tuple(self._edges.items())))

    def __repr__(self):
        return "Multigraph(vertices={}, edges={})".format(
            list(self._vertices), dict(self._edges)
        )

    def fresh_vertex(self):
        return (self._vertices[-1] + 1) if self._vertices else 0

    def fresh_edge(self):
        return (max(self._edges) + 1) if self._edges else 0

    # derived graphs

    def induced(self, vertices):
        vertices = set(vertices)
        missing = vertices - set(self._vertices)
        if missing:
            raise NotSubgraph(f"vertices {sorted(missing)} not in graph")
        return Multigraph(
            vertices,
            {
                eid: ends
                for eid, ends in self._edges.items()
                if ends[0] in vertices and ends[1] in vertices
            },
        )

    def subgraph(self, vertices, edges):
        vertices = set(vertices)
        if not vertices <= set(self._vertices):
            raise NotSubgraph(
                f"vertices {sorted(vertices - set(self._vertices))} not in graph"
            )
        picked = {}
        for eid in edges:
            if eid not in self._edges:
                raise NotSubgraph(f"edge {eid} not in graph")
            picked[eid] = self._edges[eid]
        return Multigraph(vertices, picked)

    def without_vertices(self, vertices):
        return self.induced(set(self._vertices) - set(vertices))

    def without_edges(self, edges):
        edges = set(edges)
        return Multigraph(
            self._vertices,
            {eid: ends for eid, ends in self._edges.items() if eid not in edges},
        )

    def with_edge(self, edge, u, v):
        edges = dict(self._edges)
        edges[edge] = (u, v)
        return Multigraph(set(self._vertices) | {u, v}, edges)

    def union(self, other):
        edges = dict(self._edges)
        edges.update(other._edges)
        return Multigraph(set(self._vertices) | set(other._vertices), edges)

    def is_subgraph_of(self, other):
        if not set(self._vertices) <= set(other._vertices):
            return False
        return all(
            other._edges.get(eid) == ends for eid, ends in self._edges.items()
        )

    def relabeled(self, vertex_map, edge_map=None):
        edge_map = edge_map or {}
        return Multigraph(
            [vertex_map.get(v, v) for v in self._vertices],
            {
                edge_map.get(eid, eid): (vertex_map.get(u, u), vertex_map.get(v, v))
                for eid, (u, v) in self._edges.items()
            },
        )


class IdAllocator:
    """Hands out identifiers above everything seen so far."""

    def __init__(self, start=0):
        self.next = start

    @classmethod
    def for_edges(cls, graph):
        return cls(graph.fresh_edge())

    @classmethod
    def for_vertices(cls, graph):
        return cls(graph.fresh_vertex())

    def __call__(self):
        value = self.next
        self.next += 1
        return value
