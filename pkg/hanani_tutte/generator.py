# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Test instances with known answers.

Planar instances start from a rotation system of genus 0 and are scrambled
by adjacent swaps, which a real drawing can always perform. Infeasible ones
come from a convex straight-line drawing whose rotations are then forced
to the wanted cycles, again by adjacent swaps only.
"""

import random
from itertools import combinations

from hanani_tutte.checks import require_hypotheses
from hanani_tutte.drawing import (
    EdgeEnd,
    ParityDrawing,
    ParityVector,
    RotationSystem,
    adjacent_swap,
    faces,
    genus,
)
from hanani_tutte.errors import NotSimple, Unsatisfiable
from hanani_tutte.graph import Multigraph, connected_components


def _insert_before(cycle, end, new):
    cycle.insert(cycle.index(end), new)


def random_planar_rotation(n, m, seed=0):
    """A connected planar graph on n vertices and m edges, with an embedding.

    Grows a random tree, then adds chords inside faces.
    """
    if n < 1 or m < n - 1 or (n >= 3 and m > 3 * n - 6) or (n < 3 and m > n - 1):
        raise Unsatisfiable(f"no simple connected planar graph with n={n}, m={m}")
    rng = random.Random(seed)
    edges = {}
    cycles = {0: []}
    for child in range(1, n):
        parent = rng.randrange(child)
        edge = len(edges)
        edges[edge] = (parent, child)
        cycles[parent].insert(rng.randint(0, len(cycles[parent])), EdgeEnd(edge, 0))
        cycles[child] = [EdgeEnd(edge, 1)]
    rotation = RotationSystem(cycles)
    adjacent = {frozenset(pair) for pair in edges.values()}
    while len(edges) < m:
        face_set = faces(rotation)
        candidates = []
        for face in face_set:
            for d1, d2 in combinations(face, 2):
                x, y = rotation.vertex_of(d1), rotation.vertex_of(d2)
                if x != y and frozenset((x, y)) not in adjacent:
                    candidates.append((d1, d2))
        if not candidates:
            raise Unsatisfiable(f"stuck at {len(edges)} of {m} edges")
        d1, d2 = rng.choice(candidates)
        x, y = rotation.vertex_of(d1), rotation.vertex_of(d2)
        edge = len(edges)
        edges[edge] = (x, y)
        adjacent.add(frozenset((x, y)))
        cycles = {v: list(cycle) for v, cycle in rotation.cycles()}
        # the face runs into x just before leaving along d1
        _insert_before(cycles[x], d1, EdgeEnd(edge, 0))
        _insert_before(cycles[y], d2, EdgeEnd(edge, 1))
        rotation = RotationSystem(cycles)
    graph = Multigraph(range(n), edges)
    if genus(rotation):
        raise AssertionError("chord insertion left the plane")
    return graph, rotation


def scramble(drawing, W=(), k=10, seed=0):
    """k random adjacent swaps at vertices outside W."""
    rng = random.Random(seed)
    W = set(W)
    candidates = [
        v
        for v in drawing.graph.vertices
        if v not in W and drawing.rotation.degree(v) >= 2
    ]
    if not candidates:
        return drawing
    graph = drawing.graph
    for _ in range(k):
        vertex = rng.choice(candidates)
        cycle = drawing.rotation.cycle(vertex)
        index = rng.randrange(len(cycle))
        e, f = cycle[index].edge, cycle[(index + 1) % len(cycle)].edge
        # parallel edges into W must keep crossing evenly
        if e != f and (graph.common_vertices(e, f) - {vertex}) & W:
            continue
        drawing = adjacent_swap(drawing, vertex, index)
    require_hypotheses(drawing, W)
    return drawing


def convex_position(graph):
    """Vertex id -> (x, x^2): the vertices counterclockwise on a parabola."""
    return {v: (i, i * i) for i, v in enumerate(graph.vertices)}


def convex_drawing(graph):
    """Straight-line drawing with the vertices in convex position.

    Two independent chords cross once iff their endpoints interleave; edges
    sharing an endpoint do not cross. At each vertex the others are seen
    clockwise in decreasing circular order, starting from its predecessor.
    """
    if not graph.is_simple():
        raise NotSimple("straight-line drawings need a simple graph")
    order = {v: i for i, v in enumerate(graph.vertices)}
    n = len(order)
    odd = []
    for e, f in combinations(graph.edges, 2):
        if not graph.independent(e, f):
            continue
        a, b = sorted(order[x] for x in graph.endpoints(e))
        c, d = sorted(order[x] for x in graph.endpoints(f))
        if (a < c < b) != (a < d < b):
            odd.append((e, f))
    cycles = {}
    for vertex in graph.vertices:
        i = order[vertex]
        ends = []
        for edge in graph.incident(vertex):
            u, v = graph.endpoints(edge)
            side, other = (0, v) if u == vertex else (1, u)
            ends.append(((i - order[other]) % n, EdgeEnd(edge, side)))
        cycles[vertex] = [end for _, end in sorted(ends)]
    return ParityDrawing(graph, RotationSystem(cycles), ParityVector(odd))


def realize_rotation(drawing, target):
    """Reach the cycles of `target` by adjacent swaps.

    `target` maps vertices to cycles (or is a RotationSystem); vertices it
    does not mention keep their rotation.
    """
    if isinstance(target, RotationSystem):
        target = dict(target.cycles())
    for vertex, wanted in sorted(target.items()):
        wanted = list(wanted)
        if sorted(wanted) != sorted(drawing.rotation.cycle(vertex)):
            raise ValueError(f"target rotation at {vertex} lists other ends")
        if len(wanted) < 3:
            continue
        first = wanted[0]
        for position in range(1, len(wanted)):
            end = wanted[position]
            while True:
                cycle = drawing.rotation.cycle(vertex)
                offset = (cycle.index(end) - cycle.index(first)) % len(cycle)
                if offset == position:
                    break
                drawing = adjacent_swap(drawing, vertex, cycle.index(end) - 1)
    return drawing


def with_rotations(graph, rotations):
    """A realizable drawing of a simple graph with the given cycles."""
    return realize_rotation(convex_drawing(graph), rotations)


def wheel(k):
    """Hub 0 joined to the cycle 1..k; spokes first."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Multigraph(range(k + 1), dict(enumerate(edges)))


def complete_graph(n):
    return Multigraph(range(n), dict(enumerate(combinations(range(n), 2))))


def complete_bipartite(a, b):
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Multigraph(range(a + b), dict(enumerate(edges)))


def theta_graph(k=3):
    """Vertices 0 and 1 joined by k paths through 2, 3, ..., k + 1."""
    edges = []
    for middle in range(2, k + 2):
        edges += [(0, middle), (middle, 1)]
    return Multigraph(range(k + 2), dict(enumerate(edges)))


def theta_instance(k=3):
    """Θ with the same clockwise order of paths at both poles.

    With W = {0, 1} no planar embedding keeps both rotations.
    """
    graph = theta_graph(k)
    at_u = [EdgeEnd(2 * i, 0) for i in range(k)]
    at_v = [EdgeEnd(2 * i + 1, 1) for i in range(k)]
    return with_rotations(graph, {0: at_u, 1: at_v})


def all_connected_graphs(n):
    """Every connected simple graph on the labeled vertices 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        chosen = [pair for i, pair in enumerate(pairs) if mask >> i & 1]
        graph = Multigraph(range(n), dict(enumerate(chosen)))
        if len(connected_components(graph)) <= 1:
            yield graph


def planar_multigraph(n, m, parallel=1, loops=1, seed=0):
    """A planar embedding with extra parallel copies and loops.

    Up to `parallel` copies are added next to randomly picked edges and up
    to `loops` loops at random corners.
    """
    graph, rotation = random_planar_rotation(n, m, seed)
    rng = random.Random(seed + 1)
    anchors = rng.sample(list(graph.edges), min(parallel, len(graph.edges)))
    degree = {v: rotation.degree(v) for v in graph.vertices}
    for anchor in anchors:
        for vertex in graph.endpoints(anchor):
            degree[vertex] += 1
    corners = []
    for _ in range(loops):
        vertex = rng.randrange(n)
        corners.append((vertex, rng.randint(0, degree[vertex])))
        degree[vertex] += 2
    return with_copies(graph, rotation, anchors, corners)


def with_copies(graph, rotation, anchors=(), loops=()):
    """Add parallel copies and loops to an embedding, keeping it planar.

    Every edge in `anchors` gets a copy next to it, closing a bigon face.
    `loops` lists (vertex, position) pairs; each loop goes into the cycle at
    that position, once the copies and the earlier loops are in.
    """
    edges = dict(graph.edge_items())
    cycles = {v: list(cycle) for v, cycle in rotation.cycles()}
    for anchor in anchors:
        p, q = edges[anchor]
        copy = max(edges) + 1
        edges[copy] = (p, q)
        at_p = cycles[p]
        at_p.insert(at_p.index(EdgeEnd(anchor, 0)) + 1, EdgeEnd(copy, 0))
        _insert_before(cycles[q], EdgeEnd(anchor, 1), EdgeEnd(copy, 1))
    for vertex, position in loops:
        loop = max(edges, default=-1) + 1
        edges[loop] = (vertex, vertex)
        cycles[vertex][position:position] = [EdgeEnd(loop, 0), EdgeEnd(loop, 1)]
    rotation = RotationSystem(cycles)
    if genus(rotation):
        raise AssertionError("multigraph insertion left the plane")
    return Multigraph(graph.vertices, edges), rotation


def planar_instance(n, m, W_size=0, swaps=10, seed=0):
    """An embedding scrambled outside a random W; feasible by construction."""
    graph, rotation = random_planar_rotation(n, m, seed)
    rng = random.Random(seed + 2)
    W = sorted(rng.sample(list(graph.vertices), min(W_size, n)))
    drawing = ParityDrawing.embedded(graph, rotation)
    return scramble(drawing, W, swaps, seed + 3), W
