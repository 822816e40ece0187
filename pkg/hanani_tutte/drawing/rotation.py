# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Rotation systems, face tracing and genus.

A rotation system assigns to every vertex the clockwise cyclic order of the
edge-ends at it. Edge-ends rather than neighbours keep loops and parallel
edges apart: the end of edge e at its first endpoint is side 0, the end at
its second endpoint side 1, and a loop puts both ends into one cycle.

Cycles are stored canonically, rotated so that the least edge-end comes
first. Two rotation systems are equal iff their cycles are equal tuples.
"""

from collections import namedtuple

from hanani_tutte.errors import InvalidRotation, OddEulerDefect, UnknownVertex


class EdgeEnd(namedtuple("EdgeEnd", ["edge", "side"])):
    __slots__ = ()

    @property
    def opposite(self):
        return EdgeEnd(self.edge, 1 - self.side)

    def __str__(self):
        return f"{self.edge}.{'ab'[self.side]}"


def canonical_cycle(ends):
    ends = tuple(ends)
    if not ends:
        return ends
    start = ends.index(min(ends))
    return ends[start:] + ends[:start]


class RotationSystem:
    __slots__ = ("_cycles", "_position")

    def __init__(self, cycles):
        self._cycles = {}
        self._position = {}
        for vertex in sorted(cycles):
            cycle = canonical_cycle(EdgeEnd(*end) for end in cycles[vertex])
            for index, end in enumerate(cycle):
                if end in self._position:
                    raise InvalidRotation(
                        f"edge-end {end} appears twice (at vertex {vertex})"
                    )
                self._position[end] = (vertex, index)
            self._cycles[vertex] = cycle

    @property
    def vertices(self):
        return tuple(self._cycles)

    def cycle(self, vertex):
        try:
            return self._cycles[vertex]
        except KeyError:
            raise UnknownVertex(vertex)

    def cycles(self):
        return self._cycles.items()

    def ends(self):
        return self._position.keys()

    def edges(self):
        return sorted({end.edge for end in self._position})

    def has_end(self, end):
        return end in self._position

    def vertex_of(self, end):
        return self._position[end][0]

    def position(self, end):
        return self._position[end][1]

    def degree(self, vertex):
        return len(self.cycle(vertex))

    def succ(self, end):
        """The edge-end following `end` clockwise."""
        vertex, index = self._position[end]
        cycle = self._cycles[vertex]
        return cycle[(index + 1) % len(cycle)]

    def pred(self, end):
        vertex, index = self._position[end]
        cycle = self._cycles[vertex]
        return cycle[index - 1]

    def validate(self):
        """Every edge must have both of its ends placed."""
        for end in self._position:
            if end.opposite not in self._position:
                raise InvalidRotation(f"edge {end.edge} has only one end placed")

    def with_cycle(self, vertex, cycle):
        cycles = dict(self._cycles)
        cycles[vertex] = cycle
        return RotationSystem(cycles)

    def with_cycles(self, updates):
        cycles = dict(self._cycles)
        cycles.update(updates)
        return RotationSystem(cycles)

    def restricted(self, vertices, edges):
        vertices = set(vertices)
        edges = set(edges)
        return RotationSystem(
            {
                vertex: [end for end in cycle if end.edge in edges]
                for vertex, cycle in self._cycles.items()
                if vertex in vertices
            }
        )

    def renamed(self, end_map):
        """Replace edge-ends by `end_map` (missing ends stay as they are)."""
        return RotationSystem(
            {
                vertex: [end_map.get(end, end) for end in cycle]
                for vertex, cycle in self._cycles.items()
            }
        )

    def __eq__(self, other):
        if not isinstance(other, RotationSystem):
            return False
        return self._cycles == other._cycles

    def __hash__(self):
        return hash(tuple(self._cycles.items()))

    def __repr__(self):
        return "RotationSystem({})".format(
            {v: [str(end) for end in cycle] for v, cycle in self._cycles.items()}
        )


def reflect(rotation):
    """Reverse every cycle; the mirror image of the same embedding."""
    return RotationSystem(
        {vertex: tuple(reversed(cycle)) for vertex, cycle in rotation.cycles()}
    )


def corners(rotation, vertex):
    """Consecutive end pairs (a, succ(a)) at `vertex`, in cycle order.

    A face passes through the vertex between the two ends of each corner.
    """
    cycle = rotation.cycle(vertex)
    return [(end, cycle[(i + 1) % len(cycle)]) for i, end in enumerate(cycle)]


class FaceSet:
    """Faces traced from a rotation system.

    Each face is the tuple of darts walked around it; a dart is the
    edge-end it leaves a vertex from.
    """

    def __init__(self, faces, face_of, component_faces, components):
        self.faces = faces
        self.face_of = face_of
        self.component_faces = component_faces
        self.components = components

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def face_containing(self, dart):
        return self.faces[self.face_of[dart]]


def next_dart(rotation, dart):
    return rotation.succ(dart.opposite)


def components(rotation):
    """Vertex sets of the components of the underlying graph."""
    parent = {vertex: vertex for vertex in rotation.vertices}

    def find(vertex):
        while parent[vertex] != vertex:
            parent[vertex] = parent[parent[vertex]]
            vertex = parent[vertex]
        return vertex

    for end in rotation.ends():
        if end.side == 0 and rotation.has_end(end.opposite):
            a = find(rotation.vertex_of(end))
            b = find(rotation.vertex_of(end.opposite))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for vertex in rotation.vertices:
        groups.setdefault(find(vertex), []).append(vertex)
    return [tuple(group) for _, group in sorted(groups.items())]


def faces(rotation):
    rotation.validate()
    face_list = []
    face_of = {}
    for vertex, cycle in rotation.cycles():
        for start in cycle:
            if start in face_of:
                continue
            index = len(face_list)
            face = []
            dart = start
            while dart not in face_of:
                face_of[dart] = index
                face.append(dart)
                dart = next_dart(rotation, dart)
            face_list.append(tuple(face))
    comps = components(rotation)
    component_of = {v: i for i, comp in enumerate(comps) for v in comp}
    component_faces = [0] * len(comps)
    for face in face_list:
        component_faces[component_of[rotation.vertex_of(face[0])]] += 1
    for i, comp in enumerate(comps):
        # an isolated vertex is a sphere with one face
        if len(comp) == 1 and not rotation.cycle(comp[0]):
            component_faces[i] = 1
    return FaceSet(face_list, face_of, component_faces, comps)


def genus(rotation):
    """Sum over components of (2 - V + E - F) / 2."""
    face_set = faces(rotation)
    total = 0
    for comp, face_count in zip(face_set.components, face_set.component_faces):
        edge_ends = sum(rotation.degree(v) for v in comp)
        defect = 2 - len(comp) + edge_ends // 2 - face_count
        if defect % 2 or defect < 0:
            raise OddEulerDefect(
                f"component {list(comp)} has Euler defect {defect}"
            )
        total += defect // 2
    return total


def is_planar_rotation(rotation):
    return genus(rotation) == 0
