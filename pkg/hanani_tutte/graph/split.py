# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Splitting a graph at a cut vertex or at a separation pair."""

from hanani_tutte.errors import (
    NoPath,
    NotCutVertex,
    NotSeparationPair,
    NotTwoConnected,
)

from .connectivity import connected_components, cut_vertices, is_separation_pair
from .connectivity import path_between
from .core import IdAllocator, Multigraph


class SplitAtVertex:
    """The parts G_i of a connected graph at its cut vertex v.

    Part i is induced by the i-th component of G - v together with v.
    """

    def __init__(self, vertex, components, parts):
        self.vertex = vertex
        self.components = components
        self.parts = parts

    def part_of_edge(self):
        return {
            edge: index for index, part in enumerate(self.parts) for edge in part.edges
        }

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"SplitAtVertex({self.vertex}, {self.components})"


class SplitAtPair:
    """The parts of a 2-connected graph at a separation pair (u, v).

    `parts[i]` is G'_i: the i-th component of G - {u, v} plus u, v and their
    edges into it. `augmented[i]` is G_i = G'_i plus the virtual edge
    `virtual_edges[i]` joining u and v. When uv is an edge of G, `uv_part`
    is the degenerate part G'_0 holding just that edge.
    """

    def __init__(self, pair, components, parts, augmented, virtual_edges, uv_part):
        self.pair = pair
        self.components = components
        self.parts = parts
        self.augmented = augmented
        self.virtual_edges = virtual_edges
        self.uv_part = uv_part

    @property
    def uv_in_graph(self):
        return self.uv_part is not None

    @property
    def uv_edges(self):
        return self.uv_part.edges if self.uv_part is not None else ()

    def labeled_parts(self):
        """(label, part) pairs; label 0 is the real edge uv when present."""
        labeled = []
        if self.uv_part is not None:
            labeled.append((0, self.uv_part))
        labeled.extend((index + 1, part) for index, part in enumerate(self.parts))
        return labeled

    def part_label_of_edge(self):
        return {
            edge: label for label, part in self.labeled_parts() for edge in part.edges
        }

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"SplitAtPair({self.pair}, {self.components})"


def split_at_cut_vertex(graph, vertex):
    if vertex not in graph or vertex not in cut_vertices(graph):
        raise NotCutVertex(vertex)
    components = connected_components(graph, removed=(vertex,))
    parts = [graph.induced(set(component) | {vertex}) for component in components]
    return SplitAtVertex(vertex, components, parts)


def split_at_pair(graph, u, v, allocate=None):
    if u not in graph or v not in graph or not is_separation_pair(graph, u, v):
        raise NotSeparationPair((u, v))
    if allocate is None:
        allocate = IdAllocator.for_edges(graph)
    uv_edges = set(graph.edges_between(u, v))
    components = connected_components(graph, removed=(u, v))
    parts = []
    augmented = []
    virtual_edges = []
    for component in components:
        vertices = set(component) | {u, v}
        part = graph.induced(vertices).without_edges(uv_edges)
        try:
            path_between(part, u, v)
        except NoPath:
            raise NotTwoConnected(
                f"part {list(component)} at {{{u}, {v}}} has no {u}-{v} path"
            )
        virtual = allocate()
        parts.append(part)
        augmented.append(part.with_edge(virtual, u, v))
        virtual_edges.append(virtual)
    uv_part = None
    if uv_edges:
        uv_part = Multigraph({u, v}, {e: graph.endpoints(e) for e in uv_edges})
    return SplitAtPair((u, v), components, parts, augmented, virtual_edges, uv_part)
