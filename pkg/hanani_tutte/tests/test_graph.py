# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import random
import unittest

import networkx

from hanani_tutte.errors import (
    NoPath,
    NotConnected,
    NotCutVertex,
    NotSeparationPair,
    NotTwoConnected,
    UnknownVertex,
)
from hanani_tutte.generator import all_connected_graphs, theta_graph, wheel
from hanani_tutte.graph import (
    IdAllocator,
    Multigraph,
    connected_components,
    cut_vertices,
    is_three_connected,
    is_two_connected,
    path_between,
    path_vertices,
    separation_pairs,
    split_at_cut_vertex,
    split_at_pair,
    two_disjoint_paths,
)
from hanani_tutte.tests import graph, to_networkx


K4 = graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestMultigraph(unittest.TestCase):
    def test_dangling(self):
        with self.assertRaises(UnknownVertex):
            Multigraph([0, 1], {0: (0, 2)})

    def test_loops_and_parallels(self):
        g = graph([(0, 1), (0, 1), (1, 1)])
        self.assertFalse(g.is_simple())
        self.assertEqual(g.degree(1), 4)
        self.assertEqual(g.incident(1), (0, 1, 2))
        self.assertTrue(g.is_loop(2))
        self.assertEqual(g.edges_between(0, 1), [0, 1])
        self.assertTrue(graph([(0, 1), (1, 2)]).is_simple())

    def test_independent(self):
        g = graph([(0, 1), (2, 3), (1, 2)])
        self.assertTrue(g.independent(0, 1))
        self.assertFalse(g.independent(0, 2))
        self.assertEqual(g.common_vertices(0, 2), {1})

    def test_derived(self):
        g = graph([(0, 1), (1, 2), (2, 0)])
        self.assertEqual(g.without_vertices([2]).edges, (0,))
        self.assertEqual(g.without_edges([1]).edges, (0, 2))
        self.assertTrue(g.induced([0, 1]).is_subgraph_of(g))
        self.assertEqual(g.with_edge(7, 0, 3).endpoints(7), (0, 3))
        self.assertEqual(g.fresh_edge(), 3)
        self.assertEqual(g.fresh_vertex(), 3)

    def test_allocator(self):
        allocate = IdAllocator.for_edges(graph([(0, 1), (1, 2)]))
        self.assertEqual([allocate(), allocate()], [2, 3])


class TestConnectivity(unittest.TestCase):
    def test_components(self):
        g = Multigraph(range(5), {0: (0, 1), 1: (3, 4)})
        self.assertEqual(connected_components(g), [(0, 1), (2,), (3, 4)])
        self.assertEqual(
            connected_components(wheel(4), removed=[0, 2, 4]), [(1,), (3,)]
        )

    def test_cut_vertices_disconnected(self):
        with self.assertRaises(NotConnected):
            cut_vertices(Multigraph(range(2)))

    def test_cut_vertices_against_networkx(self):
        for g in all_connected_graphs(5):
            self.assertSetEqual(
                cut_vertices(g),
                set(networkx.articulation_points(to_networkx(g))),
                repr(g),
            )

    def test_cut_vertices_brute_force(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(2, 7)
            pairs = [(rng.randrange(i), i) for i in range(1, n)]
            pairs += [
                tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(0, n))
            ]
            g = graph(pairs, range(n))
            expected = {
                v
                for v in g.vertices
                if len(connected_components(g, removed=[v])) > 1
            }
            self.assertSetEqual(cut_vertices(g), expected, repr(g))

    def test_separation_pairs_cycle(self):
        cycle = graph([(i, (i + 1) % 5) for i in range(5)])
        self.assertTrue(is_two_connected(cycle))
        self.assertEqual(
            separation_pairs(cycle), [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        )

    def test_separation_pairs_needs_two_connected(self):
        with self.assertRaises(NotTwoConnected):
            separation_pairs(graph([(0, 1), (1, 2)]))

    def test_three_connected(self):
        self.assertTrue(is_three_connected(K4))
        self.assertTrue(is_three_connected(wheel(5)))
        self.assertFalse(is_three_connected(theta_graph(3)))
        self.assertEqual(separation_pairs(theta_graph(3)), [(0, 1)])

    def test_path_between(self):
        g = wheel(6)
        path = path_between(g, 1, 4)
        self.assertEqual(len(path), 2)
        self.assertEqual(path_vertices(g, 1, path), [1, 0, 4])
        self.assertEqual(path_between(g, 3, 3), [])
        with self.assertRaises(NoPath):
            path_between(Multigraph(range(2)), 0, 1)

    def test_two_disjoint_paths(self):
        first, second = two_disjoint_paths(K4, [0, 1], [2, 3])
        self.assertEqual(first[0], 0)
        self.assertEqual(second[0], 1)
        self.assertIn(first[-1], (2, 3))
        self.assertIn(second[-1], (2, 3))
        self.assertFalse(set(first) & set(second))
        star = graph([(0, 2), (1, 2), (2, 3), (2, 4)])
        self.assertIsNone(two_disjoint_paths(star, [0, 1], [3, 4]))


class TestSplit(unittest.TestCase):
    def test_cut_vertex(self):
        bowtie = graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        split = split_at_cut_vertex(bowtie, 0)
        self.assertEqual(len(split), 2)
        self.assertEqual(split.components, [(1, 2), (3, 4)])
        self.assertEqual(split.parts[0].edges, (0, 1, 2))
        self.assertEqual(split.part_of_edge()[4], 1)
        with self.assertRaises(NotCutVertex):
            split_at_cut_vertex(bowtie, 1)

    def test_pair(self):
        split = split_at_pair(theta_graph(3), 0, 1)
        self.assertEqual(len(split), 3)
        self.assertFalse(split.uv_in_graph)
        self.assertEqual(split.virtual_edges, [6, 7, 8])
        self.assertEqual(split.parts[0].edges, (0, 1))
        self.assertEqual(split.augmented[0].endpoints(6), (0, 1))
        self.assertEqual(
            [label for label, _ in split.labeled_parts()], [1, 2, 3]
        )

    def test_pair_with_edge(self):
        g = theta_graph(3).with_edge(6, 0, 1)
        split = split_at_pair(g, 0, 1)
        self.assertTrue(split.uv_in_graph)
        self.assertEqual(split.uv_edges, (6,))
        self.assertEqual(split.virtual_edges, [7, 8, 9])
        self.assertEqual(split.part_label_of_edge()[6], 0)
        self.assertEqual(split.part_label_of_edge()[3], 2)

    def test_not_a_pair(self):
        with self.assertRaises(NotSeparationPair):
            split_at_pair(theta_graph(3), 2, 3)
