# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Connectivity queries driving the case analysis of the embedder."""

from collections import deque
from itertools import combinations

from hanani_tutte.errors import NoPath, NotConnected, NotTwoConnected, UnknownVertex


def connected_components(graph, removed=()):
    """Vertex sets of the components of graph minus `removed`.

    Components are returned as sorted tuples, ordered by least vertex.
    """
    removed = set(removed)
    seen = set(removed)
    components = []
    for start in graph.vertices:
        if start in seen:
            continue
        seen.add(start)
        component = [start]
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for edge in graph.incident(vertex):
                other = graph.other(edge, vertex)
                if other not in seen:
                    seen.add(other)
                    component.append(other)
                    queue.append(other)
        components.append(tuple(sorted(component)))
    return components


def is_connected(graph):
    return len(connected_components(graph)) <= 1


def cut_vertices(graph):
    """Articulation points by the DFS lowpoint method."""
    if not is_connected(graph):
        raise NotConnected("cut vertices need a connected graph")
    if len(graph) < 3:
        return set()
    root = graph.vertices[0]
    disc = {root: 0}
    low = {root: 0}
    counter = 1
    result = set()
    root_children = 0
    stack = [(root, None, iter(graph.incident(root)))]
    while stack:
        vertex, parent_edge, pending = stack[-1]
        descended = False
        for edge in pending:
            if edge == parent_edge:
                continue
            other = graph.other(edge, vertex)
            if other == vertex:
                continue
            if other not in disc:
                disc[other] = low[other] = counter
                counter += 1
                stack.append((other, edge, iter(graph.incident(other))))
                descended = True
                break
            low[vertex] = min(low[vertex], disc[other])
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        parent = stack[-1][0]
        low[parent] = min(low[parent], low[vertex])
        if parent == root:
            root_children += 1
        elif low[vertex] >= disc[parent]:
            result.add(parent)
    if root_children > 1:
        result.add(root)
    return result


def is_two_connected(graph):
    return is_connected(graph) and not cut_vertices(graph)


def is_separation_pair(graph, u, v):
    return u != v and len(connected_components(graph, removed=(u, v))) >= 2


def separation_pairs(graph):
    """All pairs {u, v} whose removal disconnects a 2-connected graph.

    Exhaustive removal: quadratic in the number of vertices, which is fine
    for graphs of a few hundred vertices.
    """
    if not is_two_connected(graph):
        raise NotTwoConnected("separation pairs need a 2-connected graph")
    return [
        (u, v)
        for u, v in combinations(graph.vertices, 2)
        if is_separation_pair(graph, u, v)
    ]


def is_three_connected(graph):
    return (
        len(graph) >= 4 and is_two_connected(graph) and not separation_pairs(graph)
    )


def path_between(graph, source, target):
    """Edge ids of a shortest source-target path.

    Breadth first, scanning edges by increasing id, so the result is
    reproducible.
    """
    for vertex in (source, target):
        if vertex not in graph:
            raise UnknownVertex(vertex)
    if source == target:
        return []
    parent = {source: None}
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        for edge in graph.incident(vertex):
            other = graph.other(edge, vertex)
            if other in parent:
                continue
            parent[other] = (vertex, edge)
            if other == target:
                queue.clear()
                break
            queue.append(other)
    if target not in parent:
        raise NoPath(source, target)
    path = []
    vertex = target
    while parent[vertex] is not None:
        vertex, edge = parent[vertex]
        path.append(edge)
    path.reverse()
    return path


def path_vertices(graph, source, edges):
    """The vertex sequence w0=source, w1, ..., wk walked by `edges`."""
    vertices = [source]
    for edge in edges:
        vertices.append(graph.other(edge, vertices[-1]))
    return vertices


def two_disjoint_paths(graph, sources, targets):
    """Two vertex-disjoint paths linking `sources` to `targets`, or None.

    Unit vertex capacities via vertex splitting, two augmenting rounds.
    Paths are returned as vertex lists, the first starting at the lesser
    source.
    """
    sources = sorted(sources)
    targets = sorted(targets)
    source_node, sink_node = ("s",), ("t",)
    capacity = {}
    adjacency = {}
    originals = set()

    def arc(a, b):
        originals.add((a, b))
        capacity[(a, b)] = capacity.get((a, b), 0) + 1
        capacity.setdefault((b, a), 0)
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    for vertex in graph.vertices:
        arc((vertex, "in"), (vertex, "out"))
    for edge, (u, v) in graph.edge_items():
        if u != v:
            arc((u, "out"), (v, "in"))
            arc((v, "out"), (u, "in"))
    for vertex in sources:
        arc(source_node, (vertex, "in"))
    for vertex in targets:
        arc((vertex, "out"), sink_node)

    def augment():
        parent = {source_node: None}
        queue = deque([source_node])
        while queue:
            node = queue.popleft()
            for nxt in sorted(adjacency.get(node, ()), key=repr):
                if nxt not in parent and capacity[(node, nxt)] > 0:
                    parent[nxt] = node
                    if nxt == sink_node:
                        queue.clear()
                        break
                    queue.append(nxt)
        if sink_node not in parent:
            return False
        node = sink_node
        while parent[node] is not None:
            prev = parent[node]
            capacity[(prev, node)] -= 1
            capacity[(node, prev)] += 1
            node = prev
        return True

    for _ in range(2):
        if not augment():
            return None

    def flow(a, b):
        # reverse arcs of originals start empty, so they hold the flow
        return capacity[(b, a)] if (a, b) in originals else 0

    paths = []
    for vertex in sources:
        path = [vertex]
        node = (vertex, "out")
        while True:
            step = next(
                nxt for nxt in sorted(adjacency[node], key=repr) if flow(node, nxt)
            )
            if step == sink_node:
                break
            path.append(step[0])
            node = (step[0], "out")
        paths.append(path)
    return paths[0], paths[1]
