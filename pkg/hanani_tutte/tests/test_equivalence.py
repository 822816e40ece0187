# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""The parity system against exhaustive search on small graphs."""

from itertools import islice
import random
import unittest

from hanani_tutte.embed import solve_and_embed
from hanani_tutte.generator import all_connected_graphs, convex_drawing, with_rotations
from hanani_tutte.oracle import exists_embedding_with_rotations
from hanani_tutte.solver import decide_unified
from hanani_tutte.tests import DrawingTestMixin


def shuffled_rotations(drawing, W, rng):
    rotations = {}
    for w in W:
        ends = list(drawing.rotation.cycle(w))
        rng.shuffle(ends)
        rotations[w] = ends
    return rotations


class TestEquivalence(DrawingTestMixin, unittest.TestCase):
    def assertAgrees(self, drawing, W):
        graph = drawing.graph
        verdict = decide_unified(graph, W, drawing)
        expected = exists_embedding_with_rotations(graph, W, drawing.rotation)
        self.assertEqual(bool(verdict), expected, f"{graph!r} with W={W}")
        if not expected:
            return
        _, result = solve_and_embed(drawing, W)
        self.assertPlanar(result.rotation)
        self.assertPreserved(result.rotation, drawing.rotation, W)

    def test_four_vertices(self):
        for graph in all_connected_graphs(4):
            drawing = convex_drawing(graph)
            for W in ((), (0,), (0, 1), (0, 1, 2, 3)):
                self.assertAgrees(drawing, W)

    def test_five_vertices(self):
        rng = random.Random(5)
        for graph in islice(all_connected_graphs(5), 0, None, 11):
            W = sorted(rng.sample(graph.vertices, 2))
            rotations = shuffled_rotations(convex_drawing(graph), W, rng)
            drawing = with_rotations(graph, rotations)
            self.assertAgrees(drawing, W)
