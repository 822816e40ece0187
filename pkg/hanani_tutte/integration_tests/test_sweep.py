# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import random
import time
import unittest

from hanani_tutte.drawing import ParityDrawing, RotationSystem, genus
from hanani_tutte.embed import solve_and_embed
from hanani_tutte.generator import (
    all_connected_graphs,
    complete_bipartite,
    complete_graph,
    convex_drawing,
    planar_instance,
    planar_multigraph,
    scramble,
    with_copies,
    with_rotations,
)
from hanani_tutte.oracle import exists_embedding_with_rotations, min_genus
from hanani_tutte.solver import decide_unified
from hanani_tutte.tests import planar_rotation


def constraints(rng, n):
    """W sets: empty, then all of V, then random proper subsets."""
    yield ()
    yield tuple(range(n))
    if n > 1:
        for _ in range(3):
            yield tuple(sorted(rng.sample(range(n), rng.randrange(1, n))))


class TestSweep(unittest.TestCase):
    def assertAgrees(self, graph, W, drawing):
        verdict = decide_unified(graph, W, drawing)
        expected = exists_embedding_with_rotations(graph, W, drawing.rotation)
        self.assertEqual(bool(verdict), expected, f"{graph!r} with W={W}")
        if expected:
            _, result = solve_and_embed(drawing, W)
            self.assertEqual(genus(result.rotation), 0)
            for w in W:
                self.assertEqual(result.rotation.cycle(w), drawing.rotation.cycle(w))

    def test_planar_rotations(self):
        """Every connected graph on up to five vertices.

        The rotations at W are taken from a random planar embedding when the
        graph has one, and from a random rotation system otherwise.
        """
        rng = random.Random(0)
        for n in range(1, 6):
            for index, graph in enumerate(all_connected_graphs(n)):
                embedding = planar_rotation(graph, seed=index)
                if embedding is None:
                    embedding = RotationSystem(
                        {
                            v: rng.sample(cycle, len(cycle))
                            for v, cycle in convex_drawing(graph).rotation.cycles()
                        }
                    )
                for W in constraints(rng, n):
                    drawing = with_rotations(
                        graph, {w: embedding.cycle(w) for w in W}
                    )
                    self.assertAgrees(graph, W, drawing)

    def test_shuffled_rotations(self):
        """Five vertices, with the rotations at W shuffled at random.

        Most of the larger instances come out infeasible.
        """
        rng = random.Random(0)
        for graph in all_connected_graphs(5):
            base = convex_drawing(graph)
            for W in ((), (rng.randrange(5),), tuple(rng.sample(range(5), 2))):
                rotations = {}
                for w in W:
                    ends = list(base.rotation.cycle(w))
                    rng.shuffle(ends)
                    rotations[w] = ends
                self.assertAgrees(graph, W, with_rotations(graph, rotations))

    def test_nonplanar_families(self):
        for graph in (complete_graph(5), complete_bipartite(3, 3)):
            self.assertFalse(decide_unified(graph, (), convex_drawing(graph)))
            self.assertEqual(min_genus(graph, workers=4), 1)
        k6 = complete_graph(6)
        self.assertFalse(decide_unified(k6, (), convex_drawing(k6)))

    def test_large_generated(self):
        for seed in range(20):
            drawing, W = planar_instance(40, 90, W_size=10, swaps=200, seed=seed)
            _, result = solve_and_embed(drawing, W)
            self.assertEqual(genus(result.rotation), 0)
            for w in W:
                self.assertEqual(result.rotation.cycle(w), drawing.rotation.cycle(w))

    def test_large_multigraphs(self):
        for seed in range(10):
            graph, embedding = planar_multigraph(30, 60, 8, 5, seed)
            W = sorted(random.Random(seed).sample(graph.vertices, 6))
            drawing = scramble(ParityDrawing.embedded(graph, embedding), W, 100, seed)
            _, result = solve_and_embed(drawing, W)
            self.assertEqual(genus(result.rotation), 0)
            for w in W:
                self.assertEqual(result.rotation.cycle(w), embedding.cycle(w))


class TestMultigraphs(unittest.TestCase):
    """Loops and parallel edges on up to four vertices, against the oracle."""

    def variants(self, graph):
        """(anchors, loops): up to three parallel copies and two loops."""
        yield [], []
        for edge in graph.edges:
            yield [edge], []
            yield [edge, edge], []
        for vertex in graph.vertices:
            yield [], [(vertex, 0)]
        if graph.edges:
            first, last = graph.vertices[0], graph.vertices[-1]
            yield [graph.edges[0]], [(first, 0), (last, 1)]

    def test_small_multigraphs(self):
        rng = random.Random(3)
        count = 0
        for n in range(1, 5):
            for index, graph in enumerate(all_connected_graphs(n)):
                embedding = planar_rotation(graph, seed=index)
                for anchors, loops in self.variants(graph):
                    multi, rotation = with_copies(graph, embedding, anchors, loops)
                    W = sorted(rng.sample(multi.vertices, rng.randint(0, n)))
                    drawing = scramble(
                        ParityDrawing.embedded(multi, rotation), W, 10, count
                    )
                    count += 1
                    verdict = decide_unified(multi, W, drawing)
                    self.assertTrue(verdict, f"{multi!r} with W={W}")
                    self.assertTrue(
                        exists_embedding_with_rotations(multi, W, drawing.rotation)
                    )
                    _, result = solve_and_embed(drawing, W)
                    self.assertEqual(genus(result.rotation), 0)
                    for w in W:
                        self.assertEqual(
                            result.rotation.cycle(w), drawing.rotation.cycle(w)
                        )
        self.assertGreater(count, 300)


class TestPerformance(unittest.TestCase):
    """Maximal planar instances with ten vertices in W."""

    def assertDecidedWithin(self, n, seconds):
        drawing, W = planar_instance(n, 3 * n - 6, W_size=10, swaps=200, seed=n)
        start = time.perf_counter()
        verdict = decide_unified(drawing.graph, W, drawing)
        elapsed = time.perf_counter() - start
        self.assertTrue(verdict)
        self.assertLess(elapsed, seconds)

    def test_forty_vertices(self):
        self.assertDecidedWithin(40, 5)

    def test_twenty_five_vertices(self):
        self.assertDecidedWithin(25, 0.5)
