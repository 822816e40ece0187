# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Parity drawings and the local redrawing moves.

A drawing is kept as a rotation system plus the parity of the number of
crossings of every edge pair. Moves never mutate; they return a new
ParityDrawing.
"""

from collections import Counter
from itertools import combinations

from hanani_tutte.errors import (
    AnchorIsEdge,
    DegreeTooSmall,
    EndpointMove,
    InvalidRotation,
    NotEndpoint,
    NotIncident,
    NotSubgraph,
    OddVertexAfterAdjustment,
    UnknownEdge,
)

from .rotation import EdgeEnd, RotationSystem


def pair_key(e, f):
    return (e, f) if e < f else (f, e)


class ParityVector:
    """The set of edge pairs crossing an odd number of times."""

    __slots__ = ("_odd",)

    def __init__(self, odd=()):
        pairs = set()
        for e, f in odd:
            if e == f:
                raise ValueError(f"edge {e} paired with itself")
            pairs.add(pair_key(e, f))
        self._odd = frozenset(pairs)

    def bit(self, e, f):
        return int(pair_key(e, f) in self._odd)

    def flipped(self, pairs):
        """Toggle every pair listed an odd number of times."""
        counts = Counter(pair_key(e, f) for e, f in pairs)
        toggled = {pair for pair, count in counts.items() if count % 2}
        return ParityVector(self._odd ^ toggled)

    def restricted(self, edges):
        edges = set(edges)
        return ParityVector(
            (e, f) for e, f in self._odd if e in edges and f in edges
        )

    def edges(self):
        return {edge for pair in self._odd for edge in pair}

    def __iter__(self):
        return iter(sorted(self._odd))

    def __len__(self):
        return len(self._odd)

    def __eq__(self, other):
        return isinstance(other, ParityVector) and self._odd == other._odd

    def __hash__(self):
        return hash(self._odd)

    def __repr__(self):
        return f"ParityVector({sorted(self._odd)})"


def expected_ends(graph):
    """Map every edge-end of graph to the vertex it belongs at."""
    ends = {}
    for edge, (u, v) in graph.edge_items():
        ends[EdgeEnd(edge, 0)] = u
        ends[EdgeEnd(edge, 1)] = v
    return ends


class ParityDrawing:
    __slots__ = ("graph", "rotation", "parity")

    def __init__(self, graph, rotation, parity=None):
        self.graph = graph
        self.rotation = rotation
        self.parity = parity if parity is not None else ParityVector()
        self._check()

    def _check(self):
        if set(self.rotation.vertices) != set(self.graph.vertices):
            raise InvalidRotation(
                "rotation vertices {} differ from graph vertices {}".format(
                    sorted(self.rotation.vertices), list(self.graph.vertices)
                )
            )
        expected = expected_ends(self.graph)
        placed = set(self.rotation.ends())
        if placed != set(expected):
            extra = sorted(str(end) for end in placed - set(expected))
            missing = sorted(str(end) for end in set(expected) - placed)
            raise InvalidRotation(
                f"rotation ends do not match edges (extra {extra}, "
                f"missing {missing})"
            )
        for end, vertex in expected.items():
            if self.rotation.vertex_of(end) != vertex:
                raise InvalidRotation(
                    f"edge-end {end} placed at {self.rotation.vertex_of(end)}, "
                    f"belongs at {vertex}"
                )
        for edge in self.parity.edges():
            if not self.graph.has_edge(edge):
                raise UnknownEdge(edge)

    @classmethod
    def embedded(cls, graph, rotation):
        """The drawing of an embedding: every pair crosses evenly."""
        return cls(graph, rotation, ParityVector())

    def replace(self, rotation=None, parity=None):
        drawing = object.__new__(ParityDrawing)
        drawing.graph = self.graph
        drawing.rotation = rotation if rotation is not None else self.rotation
        drawing.parity = parity if parity is not None else self.parity
        return drawing

    def __eq__(self, other):
        return (
            isinstance(other, ParityDrawing)
            and self.graph == other.graph
            and self.rotation == other.rotation
            and self.parity == other.parity
        )

    def __hash__(self):
        return hash((self.graph, self.rotation, self.parity))

    def __repr__(self):
        return f"ParityDrawing({self.graph!r}, {self.rotation!r}, {self.parity!r})"


def ends_at(graph, edge, vertex):
    """The ends of `edge` at `vertex`: one, or two for a loop."""
    u, v = graph.endpoints(edge)
    return [EdgeEnd(edge, side) for side, w in ((0, u), (1, v)) if w == vertex]


def parity(drawing, e, f):
    for edge in (e, f):
        if not drawing.graph.has_edge(edge):
            raise UnknownEdge(edge)
    if e == f:
        raise ValueError(f"edge {e} paired with itself")
    return drawing.parity.bit(e, f)


def odd_pairs(drawing):
    return list(drawing.parity)


def is_independently_even(drawing):
    graph = drawing.graph
    return all(not graph.independent(e, f) for e, f in drawing.parity)


def is_even_vertex(drawing, vertex):
    edges = drawing.graph.incident(vertex)
    return not any(drawing.parity.bit(e, f) for e, f in combinations(edges, 2))


def even_vertices(drawing):
    return {v for v in drawing.graph.vertices if is_even_vertex(drawing, v)}


def is_even_drawing(drawing):
    return len(drawing.parity) == 0


def edge_vertex_move(drawing, edge, vertex):
    """Pull `edge` across `vertex`.

    Flips the parity of edge with every edge at vertex. A loop at vertex is
    crossed twice and keeps its parity.
    """
    graph = drawing.graph
    if vertex in graph.endpoints(edge):
        raise EndpointMove(edge, vertex)
    flips = [(edge, f) for f in graph.incident(vertex) if not graph.is_loop(f)]
    return drawing.replace(parity=drawing.parity.flipped(flips))


def twist_edge(drawing, edge, vertex):
    """Wind the end of `edge` once around its own endpoint `vertex`.

    The rotation stays; the parity of edge with every other edge at vertex
    flips.
    """
    graph = drawing.graph
    if vertex not in graph.endpoints(edge):
        raise NotEndpoint(edge, vertex)
    flips = [
        (edge, f)
        for f in graph.incident(vertex)
        if f != edge and not graph.is_loop(f)
    ]
    return drawing.replace(parity=drawing.parity.flipped(flips))


def apply_moves(drawing, moves):
    """Apply many edge-vertex moves and twists with one parity update.

    `moves` holds objects with `edge`, `vertex` and `twist` attributes.
    """
    graph = drawing.graph
    flips = []
    for move in moves:
        endpoints = graph.endpoints(move.edge)
        if move.twist:
            if move.vertex not in endpoints:
                raise NotEndpoint(move.edge, move.vertex)
        elif move.vertex in endpoints:
            raise EndpointMove(move.edge, move.vertex)
        flips.extend(
            (move.edge, f)
            for f in graph.incident(move.vertex)
            if f != move.edge and not graph.is_loop(f)
        )
    return drawing.replace(parity=drawing.parity.flipped(flips))


def adjacent_swap(drawing, vertex, index):
    """Transpose the ends at positions index and index + 1 of vertex.

    Positions count in the canonical cycle, modulo the degree. The result is
    canonical again, so the swapped pair may sit at other positions after
    the swap. Exactly the parity of the two swapped edges flips.
    """
    cycle = list(drawing.rotation.cycle(vertex))
    degree = len(cycle)
    if degree < 2:
        raise DegreeTooSmall(vertex, degree)
    i = index % degree
    j = (i + 1) % degree
    a, b = cycle[i], cycle[j]
    cycle[i], cycle[j] = b, a
    rotation = drawing.rotation.with_cycle(vertex, cycle)
    parity = drawing.parity
    if a.edge != b.edge:
        parity = parity.flipped([(a.edge, b.edge)])
    return drawing.replace(rotation=rotation, parity=parity)


def _end_at(drawing, edge, vertex):
    ends = ends_at(drawing.graph, edge, vertex)
    if not ends:
        raise NotIncident(edge, vertex)
    return ends[0]


def pull_across_anchor(drawing, vertex, edge, anchor):
    """Walk the end of `edge` clockwise until it has passed `anchor`.

    Each step is an adjacent swap, so the end finishes immediately
    clockwise of the anchor's end with parity(edge, anchor) flipped, as is
    the parity of edge with every end passed on the way. Pulling twice
    therefore need not restore the parity.
    """
    if edge == anchor:
        raise AnchorIsEdge(edge, vertex)
    end = _end_at(drawing, edge, vertex)
    anchor_end = _end_at(drawing, anchor, vertex)
    while True:
        cycle = drawing.rotation.cycle(vertex)
        index = cycle.index(end)
        passed = cycle[(index + 1) % len(cycle)]
        drawing = adjacent_swap(drawing, vertex, index)
        if passed == anchor_end:
            return drawing


def odd_pairs_at(drawing, vertex):
    edges = drawing.graph.incident(vertex)
    return [
        (e, f) for e, f in combinations(edges, 2) if drawing.parity.bit(e, f)
    ]


def even_out_vertex(drawing, vertex, anchor):
    """make_vertex_even, also returning the number of pulls and swaps."""
    anchor_end = _end_at(drawing, anchor, vertex)
    cycle = drawing.rotation.cycle(vertex)
    start = cycle.index(anchor_end)
    order = []
    for end in cycle[start + 1 :] + cycle[:start]:
        if end.edge != anchor and end.edge not in order:
            order.append(end.edge)
    pulls = 0
    for edge in order:
        if drawing.parity.bit(edge, anchor):
            drawing = pull_across_anchor(drawing, vertex, edge, anchor)
            pulls += 1
    swaps = 0
    while True:
        cycle = drawing.rotation.cycle(vertex)
        degree = len(cycle)
        position = next(
            (
                i
                for i in range(degree if degree > 1 else 0)
                if cycle[i].edge != cycle[(i + 1) % degree].edge
                and drawing.parity.bit(cycle[i].edge, cycle[(i + 1) % degree].edge)
            ),
            None,
        )
        if position is None:
            break
        drawing = adjacent_swap(drawing, vertex, position)
        swaps += 1
    if not is_even_vertex(drawing, vertex):
        raise OddVertexAfterAdjustment(vertex, odd_pairs_at(drawing, vertex))
    return drawing, pulls, swaps


def make_vertex_even(drawing, vertex, anchor):
    return even_out_vertex(drawing, vertex, anchor)[0]


def restrict(drawing, subgraph):
    if not subgraph.is_subgraph_of(drawing.graph):
        raise NotSubgraph(f"{subgraph!r} is not a subgraph of the drawing")
    edges = subgraph.edges
    return ParityDrawing(
        subgraph,
        drawing.rotation.restricted(subgraph.vertices, edges),
        drawing.parity.restricted(edges),
    )


def insert_edge(drawing, edge, u, v, odd_with=(), after_u=None, before_v=None):
    """Add edge (u, v) to the drawing.

    The end at u goes immediately clockwise of `after_u`, the end at v
    immediately counterclockwise of `before_v`; without a neighbour the end
    is appended. `odd_with` lists the edges the new edge crosses oddly.
    """
    if drawing.graph.has_edge(edge):
        raise InvalidRotation(f"edge {edge} already drawn")
    graph = drawing.graph.with_edge(edge, u, v)
    head, tail = EdgeEnd(edge, 0), EdgeEnd(edge, 1)
    cycles = dict(drawing.rotation.cycles())
    cycle = list(cycles[u])
    cycle.insert(cycle.index(after_u) + 1 if after_u is not None else len(cycle), head)
    cycles[u] = cycle
    cycle = list(cycles[v])
    cycle.insert(cycle.index(before_v) if before_v is not None else len(cycle), tail)
    cycles[v] = cycle
    parity = drawing.parity.flipped((edge, f) for f in set(odd_with))
    return ParityDrawing(graph, RotationSystem(cycles), parity)
