# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Helpers for the tests.
"""

import random

import networkx
import toml

from hanani_tutte.config import TOMLParser
from hanani_tutte.drawing import EdgeEnd, RotationSystem, genus, reflect
from hanani_tutte.graph import Multigraph


def graph(pairs, vertices=None):
    """Multigraph whose edge i joins pairs[i]."""
    pairs = list(pairs)
    if vertices is None:
        vertices = {x for pair in pairs for x in pair}
    return Multigraph(vertices, dict(enumerate(pairs)))


def rotation(cycles):
    """RotationSystem from {vertex: "0.a 1.b ..."}."""
    parsed = {}
    for vertex, text in cycles.items():
        ends = []
        for token in text.split():
            edge, side = token.split(".")
            ends.append(EdgeEnd(int(edge), "ab".index(side)))
        parsed[vertex] = ends
    return RotationSystem(parsed)


def to_networkx(multigraph):
    nx_graph = networkx.MultiGraph()
    nx_graph.add_nodes_from(multigraph.vertices)
    for edge, (u, v) in multigraph.edge_items():
        nx_graph.add_edge(u, v, key=edge)
    return nx_graph


def planar_rotation(simple, seed=None):
    """A genus 0 rotation system of a simple graph, None if it is not planar.

    With a seed the vertices are relabeled at random before networkx embeds
    the graph, and the result is mirrored half of the time.
    """
    vertices = list(simple.vertices)
    labels = list(vertices)
    rng = random.Random(seed)
    if seed is not None:
        rng.shuffle(labels)
    label = dict(zip(vertices, labels))
    vertex_of = dict(zip(labels, vertices))
    nx_graph = networkx.Graph()
    nx_graph.add_nodes_from(labels)
    nx_graph.add_edges_from((label[u], label[v]) for _, (u, v) in simple.edge_items())
    planar, embedding = networkx.check_planarity(nx_graph)
    if not planar:
        return None
    cycles = {}
    for vertex in vertices:
        ends = []
        for neighbor in embedding.neighbors_cw_order(label[vertex]):
            (edge,) = simple.edges_between(vertex, vertex_of[neighbor])
            ends.append(EdgeEnd(edge, 0 if simple.endpoints(edge)[0] == vertex else 1))
        cycles[vertex] = ends
    rotation = RotationSystem(cycles)
    if seed is not None and rng.random() < 0.5:
        rotation = reflect(rotation)
    return rotation


class DrawingTestMixin:
    """Assertions on rotation systems."""

    def assertPlanar(self, rotation):
        self.assertEqual(genus(rotation), 0, f"{rotation!r} is not planar")

    def assertPreserved(self, rotation, original, vertices):
        for vertex in vertices:
            self.assertTupleEqual(
                rotation.cycle(vertex),
                original.cycle(vertex),
                f"rotation at {vertex} changed",
            )


class MockTOMLParser(TOMLParser):
    def __init__(self, mock_data):
        self.mock_data = mock_data

    def load(self, ctx):
        ctx.data = toml.loads(self.mock_data[ctx.path])
