# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Straight-line pictures of planar rotation systems.

Each component gets Tutte's barycentric placement: the vertices of its
longest face go on a convex polygon, every other vertex sits at the mean of
its neighbours. For 3-connected components that is a planar drawing with
the given rotations; otherwise it is a best effort. Components are placed
side by side.
"""

import logging
import math
from collections import defaultdict

import numpy

from hanani_tutte.drawing import faces


log = logging.getLogger("hanani-tutte.io")


def _outer_face(rotation, face_set, members):
    candidates = [
        face for face in face_set if rotation.vertex_of(face[0]) in members
    ]
    if not candidates:
        return []
    face = max(candidates, key=lambda f: (len(f), [-end.edge for end in f]))
    return list(dict.fromkeys(rotation.vertex_of(dart) for dart in face))


def component_layout(graph, rotation, face_set, component):
    """Positions in the unit disk for the vertices of one component."""
    outer = _outer_face(rotation, face_set, set(component))
    if len(outer) <= 1:
        return {vertex: (0.0, 0.0) for vertex in component}
    # faces are traced counterclockwise, except the outer one
    fixed = {}
    for k, vertex in enumerate(outer):
        angle = -2 * math.pi * k / len(outer)
        fixed[vertex] = (math.cos(angle), math.sin(angle))
    inner = [v for v in component if v not in fixed]
    positions = dict(fixed)
    if not inner:
        return positions
    index = {v: i for i, v in enumerate(inner)}
    laplacian = numpy.zeros((len(inner), len(inner)))
    rhs = numpy.zeros((len(inner), 2))
    for v in inner:
        i = index[v]
        for edge in graph.incident(v):
            if graph.is_loop(edge):
                continue
            w = graph.other(edge, v)
            laplacian[i, i] += 1
            if w in index:
                laplacian[i, index[w]] -= 1
            else:
                rhs[i] += fixed[w]
    try:
        solved = numpy.linalg.solve(laplacian, rhs)
    except numpy.linalg.LinAlgError:
        log.warning("singular barycentric system, using least squares")
        solved = numpy.linalg.lstsq(laplacian, rhs, rcond=None)[0]
    for v in inner:
        x, y = solved[index[v]].tolist()
        positions[v] = (x, y)
    return positions


def barycentric_layout(graph, rotation):
    face_set = faces(rotation)
    positions = {}
    for k, component in enumerate(face_set.components):
        layout = component_layout(graph, rotation, face_set, component)
        for vertex, (x, y) in layout.items():
            positions[vertex] = (x + 2.5 * k, y)
    return positions


def _num(value):
    return f"{value:.2f}"


def line(a, b):
    return '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="black"/>' % (
        _num(a[0]), _num(a[1]), _num(b[0]), _num(b[1])
    )


def curve(a, control, b):
    return '<path d="M %s %s Q %s %s %s %s" stroke="black" fill="none"/>' % (
        _num(a[0]), _num(a[1]), _num(control[0]), _num(control[1]),
        _num(b[0]), _num(b[1]),
    )


def circle(center, radius, fill="none"):
    return '<circle cx="%s" cy="%s" r="%s" stroke="black" fill="%s"/>' % (
        _num(center[0]), _num(center[1]), _num(radius), fill
    )


def text(point, label):
    return (
        '<text x="%s" y="%s" font-family="sans-serif" font-size="10" '
        'text-anchor="middle">%s</text>' % (_num(point[0]), _num(point[1] - 6), label)
    )


def render_svg(graph, rotation, size=400):
    """An SVG document as a string; `size` is the height in pixels."""
    margin = 20
    scale = (size - 2 * margin) / 2
    layout = barycentric_layout(graph, rotation)
    # y grows downwards in SVG
    points = {
        v: (margin + scale * (x + 1), margin + scale * (1 - y))
        for v, (x, y) in layout.items()
    }
    width = max([p[0] for p in points.values()] + [0]) + margin + scale
    elements = []
    bundles = defaultdict(list)
    loops = defaultdict(list)
    for edge, (u, v) in graph.edge_items():
        if u == v:
            loops[u].append(edge)
        else:
            bundles[(min(u, v), max(u, v))].append(edge)
    for (u, v), edges in sorted(bundles.items()):
        a, b = points[u], points[v]
        for k, edge in enumerate(edges):
            bend = (k - (len(edges) - 1) / 2) * 12
            if not bend:
                elements.append(line(a, b))
                continue
            length = math.hypot(b[0] - a[0], b[1] - a[1]) or 1
            normal = ((a[1] - b[1]) / length, (b[0] - a[0]) / length)
            middle = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            control = (middle[0] + bend * normal[0], middle[1] + bend * normal[1])
            elements.append(curve(a, control, b))
    for vertex, edges in sorted(loops.items()):
        x, y = points[vertex]
        for k, _ in enumerate(edges):
            radius = 8 + 4 * k
            elements.append(circle((x, y - radius), radius))
    for vertex in graph.vertices:
        elements.append(circle(points[vertex], 3, fill="black"))
        elements.append(text(points[vertex], vertex))
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">'
        % (math.ceil(width), size)
    )
    return "\n".join([header] + elements + ["</svg>"]) + "\n"
