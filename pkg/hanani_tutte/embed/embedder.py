# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Turn a drawing that meets the hypotheses into a planar rotation system.

The recursion follows the connectivity of the graph:

* disconnected: embed the components separately,
* a cut vertex v: embed the parts at v and glue them at v,
* a separation pair {u, v}: embed each part with a virtual edge uv and
  glue the parts along it,
* otherwise: make every vertex even by local swaps, after which the
  rotation system itself is planar.

Every even vertex of the input keeps its rotation. Each level checks this,
together with genus 0, before handing its result up.
"""

import logging

from hanani_tutte.checks import require_hypotheses
from hanani_tutte.drawing import (
    EdgeEnd,
    RotationSystem,
    corners,
    ends_at,
    even_out_vertex,
    even_vertices,
    faces,
    genus,
    insert_edge,
    is_even_drawing,
    is_even_vertex,
    restrict,
)
from hanani_tutte.errors import (
    ClaimAViolated,
    ClaimBViolated,
    HananiTutteError,
    HypothesisViolated,
    NoFaceWithEdge,
    NoIncidentFace,
    OddVertexAfterAdjustment,
    PathNotDisjoint,
    RotationNotPreserved,
    WeakHTViolated,
)
from hanani_tutte.graph import (
    IdAllocator,
    connected_components,
    cut_vertices,
    path_between,
    path_vertices,
    separation_pairs,
    split_at_cut_vertex,
    split_at_pair,
    two_disjoint_paths,
)

from .trace import NullObserver
from .types import EmbedRequest, EmbedResult


log = logging.getLogger("hanani-tutte.embed")


def embed_unified(request, observer=None, subdivide_even=False):
    if not request.graph.is_simple():
        return embed_multigraph(
            request.drawing, request.W, observer, subdivide_even=subdivide_even
        )
    request.check()
    embedder = Embedder(request.graph, observer)
    result = embedder.embed(request.drawing)
    _check_preserved(result.rotation, request.drawing.rotation, request.W)
    return result


def embed_multigraph(drawing, W, observer=None, subdivide_even=False):
    """Reduce to a simple graph, embed that, and lift the embedding back."""
    from hanani_tutte.multigraph import reduce, reinsert_and_contract

    simple, reduced, reduction = reduce(
        drawing.graph, W, drawing, subdivide_even=subdivide_even
    )
    embedder = Embedder(simple, observer)
    for record in reduction.toJSON():
        embedder.notify("reduce", 0, **record)
    result = embedder.embed(reduced)
    lifted = reinsert_and_contract(result, reduction)
    _check_preserved(lifted.rotation, drawing.rotation, W)
    return lifted


def _check_preserved(rotation, original, vertices):
    changed = [v for v in vertices if rotation.cycle(v) != original.cycle(v)]
    if changed:
        raise RotationNotPreserved(changed)


def _check_genus(rotation, where):
    value = genus(rotation)
    if value:
        raise AssertionError(f"{where} produced genus {value}")


class Embedder:
    def __init__(self, graph, observer=None):
        self.observer = observer if observer is not None else NullObserver()
        # virtual edges get ids above everything in the top-level graph
        self.allocate = IdAllocator.for_edges(graph)

    def notify(self, category, depth, **data):
        self.observer.notify(category, depth, data)

    def embed(self, drawing, depth=0):
        graph = drawing.graph
        even = even_vertices(drawing)
        try:
            if len(graph) <= 1:
                self.notify("trivial", depth, vertices=list(graph.vertices))
                result = EmbedResult(drawing.rotation, graph.vertices)
            elif len(connected_components(graph)) > 1:
                result = self.case0(drawing, depth)
            elif cut_vertices(graph):
                result = self.case1(drawing, min(cut_vertices(graph)), depth)
            else:
                pairs = separation_pairs(graph) if len(graph) >= 4 else []
                if pairs:
                    result = self.case2(drawing, pairs[0], depth)
                else:
                    result = case3_three_connected(drawing, even)
                    self.notify("case3", depth, vertices=len(graph))
        except HananiTutteError as error:
            self.notify("error", depth, message=str(error))
            raise
        _check_genus(result.rotation, f"embedding at depth {depth}")
        _check_preserved(result.rotation, drawing.rotation, even)
        return EmbedResult(result.rotation, even)

    def embed_part(self, drawing, depth, required=()):
        """Recurse, after checking the part still meets the hypotheses."""
        require_hypotheses(drawing, set(required) & set(drawing.graph.vertices))
        return self.embed(drawing, depth + 1)

    def case0(self, drawing, depth):
        graph = drawing.graph
        even = even_vertices(drawing)
        components = connected_components(graph)
        self.notify("case0", depth, components=[list(c) for c in components])
        log.debug("depth %d: %d components", depth, len(components))
        return case0_disjoint_union(
            [
                self.embed_part(restrict(drawing, graph.induced(c)), depth, even)
                for c in components
            ]
        )

    def case1(self, drawing, vertex, depth):
        graph = drawing.graph
        split = split_at_cut_vertex(graph, vertex)
        even = is_even_vertex(drawing, vertex)
        self.notify("case1", depth, vertex=vertex, parts=len(split), even=even)
        log.debug("depth %d: cut vertex %d, %d parts", depth, vertex, len(split))
        if not even:
            results = [
                self.embed_part(restrict(drawing, part), depth) for part in split.parts
            ]
            glued = results[0]
            for result in results[1:]:
                glued = glue_at_vertex(glued, result, vertex)
            return glued
        index, order = claim_a_consecutive_part(drawing, vertex, split)
        self.notify("claim", depth, claim="A", vertex=vertex, part=index)
        evens = even_vertices(drawing)
        inner = self.embed_part(restrict(drawing, split.parts[index]), depth, evens)
        rest = graph.without_vertices(split.components[index])
        outer = self.embed_part(restrict(drawing, rest), depth, evens)
        after = drawing.rotation.pred(order[0])
        return glue_at_vertex(outer, inner, vertex, order, after=after)

    def case2(self, drawing, pair, depth):
        graph = drawing.graph
        u, v = pair
        split = split_at_pair(graph, u, v, allocate=self.allocate)
        self.notify(
            "case2", depth, pair=[u, v], parts=len(split), uv=split.uv_in_graph
        )
        log.debug("depth %d: separation pair {%d, %d}", depth, u, v)
        orders = claim_b_check(drawing, u, v, split)
        self.notify(
            "claim",
            depth,
            claim="B",
            pair=[u, v],
            orders={str(x): order for x, order in orders.items()},
        )
        even = even_vertices(drawing)
        labeled = dict(split.labeled_parts())
        results = {}
        for label, part in split.labeled_parts():
            if label == 0:
                continue
            carrier = next(other for other in sorted(labeled) if other != label)
            path = path_between(labeled[carrier], u, v)
            virtual = split.virtual_edges[label - 1]
            odd_with, after_u, before_v = route_edge_along_path(
                drawing, part, u, v, path
            )
            augmented = insert_edge(
                drawing, virtual, u, v, odd_with, after_u=after_u, before_v=before_v
            )
            augmented = restrict(augmented, split.augmented[label - 1])
            results[label] = self.embed_part(augmented, depth, even)
        sequence = gluing_order(orders, u, v, sorted(results))
        first = sequence[0]
        virtual = split.virtual_edges[first - 1]
        glued = results[first]
        for label in sequence[1:]:
            glued = glue_at_edge(
                glued, results[label], u, v, virtual, split.virtual_edges[label - 1]
            )
        return replace_virtual_edge(glued, graph, u, v, virtual, split.uv_edges)


def case0_disjoint_union(results):
    cycles = {}
    preserved = set()
    for result in results:
        cycles.update(result.rotation.cycles())
        preserved |= result.preserved
    return EmbedResult(RotationSystem(cycles), preserved)


def _labels_at(drawing, vertex, label_of_edge):
    return [label_of_edge[end.edge] for end in drawing.rotation.cycle(vertex)]


def _runs(labels, label):
    """Starting positions of maximal cyclic runs of `label`."""
    return [
        i
        for i, value in enumerate(labels)
        if value == label and labels[i - 1] != label
    ]


def claim_a_consecutive_part(drawing, vertex, split):
    """The least part whose edges at vertex are consecutive, and their order."""
    labels = _labels_at(drawing, vertex, split.part_of_edge())
    cycle = drawing.rotation.cycle(vertex)
    for index in range(len(split)):
        starts = _runs(labels, index)
        if len(starts) == 1:
            start = starts[0]
            order = []
            while labels[(start + len(order)) % len(labels)] == index:
                order.append(cycle[(start + len(order)) % len(cycle)])
            return index, order
    raise ClaimAViolated(vertex, labels)


def _corner_face_key(rotation, vertex):
    face_set = faces(rotation)
    return [
        (min(end.edge for end in face_set.face_containing(after)), before)
        for before, after in corners(rotation, vertex)
    ]


def glue_at_vertex(outer, inner, vertex, order=None, after=None):
    """Splice inner's ends at vertex into a corner of outer.

    `order` is inner's rotation at vertex read as a linear order; the
    splice goes immediately clockwise of outer's end `after`, or into the
    corner whose face holds the least edge id.
    """
    inner_cycle = inner.rotation.cycle(vertex)
    if order is None:
        order = list(inner_cycle)
    elif RotationSystem({vertex: order}).cycle(vertex) != inner_cycle:
        raise NoIncidentFace(
            f"inner rotation at {vertex} is not the linear order {order}"
        )
    outer_cycle = list(outer.rotation.cycle(vertex))
    if not outer_cycle:
        cycle = list(order)
    else:
        if after is None:
            after = min(_corner_face_key(outer.rotation, vertex))[1]
        if after not in outer_cycle:
            raise NoIncidentFace(f"no corner after {after} at vertex {vertex}")
        position = outer_cycle.index(after) + 1
        cycle = outer_cycle[:position] + list(order) + outer_cycle[position:]
    cycles = dict(outer.rotation.cycles())
    cycles.update(inner.rotation.cycles())
    cycles[vertex] = cycle
    rotation = RotationSystem(cycles)
    _check_genus(rotation, f"gluing at vertex {vertex}")
    return EmbedResult(rotation, (outer.preserved | inner.preserved) - {vertex})


def route_edge_along_path(drawing, host, u, v, path):
    """Draw a new u-v edge close along `path`.

    Returns the host edges it crosses oddly, and the ends it goes next to:
    clockwise of the path's first end at u, counterclockwise of its last
    end at v.
    """
    graph = drawing.graph
    walk = path_vertices(graph, u, path)
    if not path or walk[-1] != v:
        raise PathNotDisjoint(f"path {path} does not join {u} and {v}")
    inner = set(walk[1:-1])
    if inner & set(host.vertices) or set(path) & set(host.edges):
        raise PathNotDisjoint(f"path {path} meets the host part")
    rotation = drawing.rotation
    # the corridor at an inner vertex: clockwise from arrival to departure
    corridor = set()
    for i, w in enumerate(walk[1:-1], start=1):
        arrive = ends_at(graph, path[i - 1], w)[0]
        depart = ends_at(graph, path[i], w)[0]
        end = rotation.succ(arrive)
        while end != depart:
            corridor.add(end.edge)
            end = rotation.succ(end)
    odd_with = []
    for f in host.edges:
        bit = sum(drawing.parity.bit(e, f) for e in path) + (f in corridor)
        if bit % 2:
            odd_with.append(f)
    after_u = ends_at(graph, path[0], u)[0]
    before_v = ends_at(graph, path[-1], v)[0]
    return odd_with, after_u, before_v


def _cyclic_parts(labels, vertex, pair):
    order = []
    for label in labels:
        if not order or order[-1] != label:
            order.append(label)
    if len(order) > 1 and order[0] == order[-1]:
        order.pop()
    if len(order) != len(set(order)):
        raise ClaimBViolated(
            f"a part is not consecutive in the rotation of {vertex}: {labels}",
            pair,
        )
    return order


def _same_cycle(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = list(b) + list(b)
    return any(doubled[i : i + len(a)] == list(a) for i in range(len(b)))


def claim_b_check(drawing, u, v, split):
    """Cyclic orders of the parts at whichever of u, v is even."""
    label_of_edge = split.part_label_of_edge()
    orders = {}
    for x in (u, v):
        if is_even_vertex(drawing, x):
            orders[x] = _cyclic_parts(
                _labels_at(drawing, x, label_of_edge), x, (u, v)
            )
    if len(orders) == 2 and not _same_cycle(orders[u], orders[v][::-1]):
        raise ClaimBViolated(
            f"orders of the parts at {u} {orders[u]} and at {v} {orders[v]} "
            "are not inverse",
            (u, v),
        )
    return orders


def gluing_order(orders, u, v, labels):
    """Labels in the order their blocks follow the virtual edge at u."""
    if u in orders:
        cycle = list(orders[u])
    elif v in orders:
        cycle = list(reversed(orders[v]))
    else:
        return list(labels)
    start = cycle.index(0) + 1 if 0 in cycle else cycle.index(min(cycle))
    cycle = cycle[start:] + cycle[:start]
    return [label for label in cycle if label != 0]


def _from_end(cycle, end):
    index = cycle.index(end)
    return list(cycle[index:]) + list(cycle[:index])


def glue_at_edge(outer, inner, u, v, virtual, inner_virtual):
    """Glue inner into outer along the virtual edge u-v.

    Both virtual edges run from u (side 0) to v (side 1). Inner's ends go
    immediately counterclockwise of the virtual edge at u and immediately
    clockwise of it at v; the inner virtual edge disappears.
    """
    head, tail = EdgeEnd(virtual, 0), EdgeEnd(virtual, 1)
    inner_head, inner_tail = EdgeEnd(inner_virtual, 0), EdgeEnd(inner_virtual, 1)
    for result, ends in ((outer, (head, tail)), (inner, (inner_head, inner_tail))):
        if not all(result.rotation.has_end(end) for end in ends):
            raise NoFaceWithEdge(f"virtual edge {ends[0].edge} is not drawn")
    at_u = _from_end(outer.rotation.cycle(u), head)
    at_u += _from_end(inner.rotation.cycle(u), inner_head)[1:]
    at_v = _from_end(outer.rotation.cycle(v), tail)
    at_v[1:1] = _from_end(inner.rotation.cycle(v), inner_tail)[1:]
    cycles = dict(outer.rotation.cycles())
    cycles.update(inner.rotation.cycles())
    cycles[u] = at_u
    cycles[v] = at_v
    rotation = RotationSystem(cycles)
    _check_genus(rotation, f"gluing along {{{u}, {v}}}")
    return EmbedResult(rotation, (outer.preserved | inner.preserved) - {u, v})


def replace_virtual_edge(result, graph, u, v, virtual, uv_edges):
    """Swap the virtual edge for the real edge uv, or drop it."""
    cycles = {}
    if uv_edges:
        (real,) = uv_edges
        side_at_u = 0 if graph.endpoints(real)[0] == u else 1
        renamed = {
            EdgeEnd(virtual, 0): EdgeEnd(real, side_at_u),
            EdgeEnd(virtual, 1): EdgeEnd(real, 1 - side_at_u),
        }
        rotation = result.rotation.renamed(renamed)
    else:
        for vertex, cycle in result.rotation.cycles():
            cycles[vertex] = [end for end in cycle if end.edge != virtual]
        rotation = RotationSystem(cycles)
    return EmbedResult(rotation, result.preserved)


def _menger_diagnostic(graph, vertex, pair=None):
    """Two disjoint paths in G - vertex between neighbours of vertex."""
    neighbours = graph.neighbors(vertex)
    if pair is not None:
        sources = sorted({graph.other(e, vertex) for e in pair})
    else:
        sources = neighbours[:2]
    targets = [w for w in neighbours if w not in sources][:2]
    if len(sources) < 2 or len(targets) < 2:
        return {"vertex": vertex, "paths": None}
    paths = two_disjoint_paths(graph.without_vertices([vertex]), sources, targets)
    return {
        "vertex": vertex,
        "sources": sources,
        "targets": targets,
        "paths": [list(p) for p in paths] if paths else None,
    }


def case3_three_connected(drawing, even=None):
    """Even out every vertex, then trust nothing: the genus must be 0."""
    graph = drawing.graph
    if even is None:
        even = even_vertices(drawing)
    evened = drawing
    last = None
    for vertex in graph.vertices:
        if is_even_vertex(evened, vertex):
            continue
        last = vertex
        anchor = min(graph.incident(vertex))
        try:
            evened, pulls, swaps = even_out_vertex(evened, vertex, anchor)
        except OddVertexAfterAdjustment as error:
            error.diagnostic = _menger_diagnostic(graph, vertex, error.odd_pairs[0])
            log.error("vertex %d stays odd: %s", vertex, error.diagnostic)
            raise
        log.debug(
            "evened vertex %d at anchor %d: %d pulls, %d swaps",
            vertex,
            anchor,
            pulls,
            swaps,
        )
    if not is_even_drawing(evened):
        raise WeakHTViolated(
            None, {"odd": list(evened.parity), "vertex": last}
        )
    value = genus(evened.rotation)
    if value:
        diagnostic = _menger_diagnostic(
            graph, last if last is not None else graph.vertices[0]
        )
        log.error("even drawing of genus %d: %s", value, diagnostic)
        raise WeakHTViolated(value, diagnostic)
    return EmbedResult(evened.rotation, even)


def embed_drawing(drawing, W=(), observer=None, subdivide_even=False):
    return embed_unified(EmbedRequest(drawing, W), observer, subdivide_even)


def solve_and_embed(drawing, W=(), observer=None, subdivide_even=False):
    """Embed, redrawing by the solver's moves first if the hypotheses fail.

    Returns (verdict, result); the verdict is None when the drawing could be
    embedded as given, the result is None when the verdict is infeasible.
    """
    from hanani_tutte.solver import decide_unified

    try:
        return None, embed_drawing(drawing, W, observer, subdivide_even)
    except HypothesisViolated:
        if not drawing.graph.is_simple():
            raise
    verdict = decide_unified(drawing.graph, W, drawing)
    if not verdict.feasible:
        log.info("no redrawing meets the hypotheses")
        return verdict, None
    log.info("redrawing with %d moves before embedding", len(verdict.moves))
    return verdict, embed_drawing(verdict.witness, W, observer, subdivide_even)
