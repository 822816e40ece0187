# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import random
import unittest

from hanani_tutte.drawing import (
    EdgeEnd,
    ParityDrawing,
    ParityVector,
    RotationSystem,
    adjacent_swap,
    apply_moves,
    canonical_cycle,
    corners,
    edge_vertex_move,
    even_out_vertex,
    even_vertices,
    faces,
    genus,
    insert_edge,
    is_even_drawing,
    is_independently_even,
    make_vertex_even,
    odd_pairs,
    parity,
    pull_across_anchor,
    reflect,
    restrict,
    twist_edge,
)
from hanani_tutte.errors import (
    AnchorIsEdge,
    DegreeTooSmall,
    EndpointMove,
    InvalidRotation,
    NotEndpoint,
    NotIncident,
    NotSubgraph,
    OddVertexAfterAdjustment,
)
from hanani_tutte.generator import convex_drawing, planar_multigraph, wheel
from hanani_tutte.solver import MoveVariable
from hanani_tutte.tests import DrawingTestMixin, graph, rotation


# 0 in the middle of the triangle 1 (north), 2 (south east), 3 (south west)
K4 = graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
K4_PLANAR = rotation(
    {
        0: "0.a 1.a 2.a",
        1: "0.b 4.a 3.a",
        2: "1.b 3.b 5.a",
        3: "2.b 5.b 4.b",
    }
)


def k4(odd=()):
    return ParityDrawing(K4, K4_PLANAR, ParityVector(odd))


class TestRotationSystem(DrawingTestMixin, unittest.TestCase):
    def test_canonical(self):
        ends = [EdgeEnd(3, 0), EdgeEnd(1, 1), EdgeEnd(2, 0)]
        self.assertEqual(
            canonical_cycle(ends), (EdgeEnd(1, 1), EdgeEnd(2, 0), EdgeEnd(3, 0))
        )
        self.assertEqual(str(EdgeEnd(3, 1)), "3.b")
        self.assertEqual(
            RotationSystem({0: ends}), RotationSystem({0: list(canonical_cycle(ends))})
        )

    def test_duplicate_end(self):
        with self.assertRaises(InvalidRotation):
            RotationSystem({0: [EdgeEnd(0, 0)], 1: [EdgeEnd(0, 0)]})

    def test_succ_pred(self):
        self.assertEqual(K4_PLANAR.succ(EdgeEnd(2, 0)), EdgeEnd(0, 0))
        self.assertEqual(K4_PLANAR.pred(EdgeEnd(0, 0)), EdgeEnd(2, 0))
        self.assertEqual(K4_PLANAR.vertex_of(EdgeEnd(5, 1)), 3)
        self.assertEqual(K4_PLANAR.degree(2), 3)

    def test_corners(self):
        self.assertEqual(
            corners(K4_PLANAR, 0),
            [
                (EdgeEnd(0, 0), EdgeEnd(1, 0)),
                (EdgeEnd(1, 0), EdgeEnd(2, 0)),
                (EdgeEnd(2, 0), EdgeEnd(0, 0)),
            ],
        )

    def test_planar_k4(self):
        face_set = faces(K4_PLANAR)
        self.assertEqual(len(face_set), 4)
        self.assertTrue(all(len(face) == 3 for face in face_set))
        self.assertPlanar(K4_PLANAR)

    def test_reversed_vertex(self):
        cycle = K4_PLANAR.cycle(0)
        twisted = K4_PLANAR.with_cycle(0, reversed(cycle))
        self.assertEqual(genus(twisted), 1)
        self.assertEqual(len(faces(twisted)), 2)

    def test_reflect(self):
        mirror = reflect(K4_PLANAR)
        self.assertPlanar(mirror)
        self.assertEqual(
            mirror.cycle(0), (EdgeEnd(0, 0), EdgeEnd(2, 0), EdgeEnd(1, 0))
        )
        self.assertEqual(reflect(mirror), K4_PLANAR)

    def test_trees_and_isolated_vertices(self):
        path = rotation({0: "0.a", 1: "0.b 1.a", 2: "1.b"})
        self.assertEqual(len(faces(path)), 1)
        self.assertPlanar(path)
        lonely = RotationSystem({0: [], 1: []})
        self.assertEqual(faces(lonely).component_faces, [1, 1])
        self.assertPlanar(lonely)

    def test_loop(self):
        # a loop drawn as an empty circle, and one with the edge inside it
        empty = rotation({0: "0.a 0.b 1.a", 1: "1.b"})
        self.assertPlanar(empty)
        inside = rotation({0: "0.a 1.a 0.b", 1: "1.b"})
        self.assertPlanar(inside)
        self.assertEqual(len(faces(inside)), 2)

    def test_restricted(self):
        sub = K4_PLANAR.restricted([0, 1, 2], [0, 1, 3])
        self.assertEqual(sub.vertices, (0, 1, 2))
        self.assertEqual(sub.cycle(0), (EdgeEnd(0, 0), EdgeEnd(1, 0)))
        self.assertPlanar(sub)

    def test_face_lengths(self):
        # every dart lies on exactly one face, whatever the genus
        rng = random.Random(5)
        for seed in range(10):
            g, embedding = planar_multigraph(9, 14, parallel=2, loops=2, seed=seed)
            shuffled = RotationSystem(
                {v: rng.sample(cycle, len(cycle)) for v, cycle in embedding.cycles()}
            )
            for rotation_system in (embedding, shuffled):
                self.assertEqual(
                    sum(len(face) for face in faces(rotation_system)),
                    2 * len(g.edges),
                )


class TestParityVector(unittest.TestCase):
    def test_symmetric(self):
        vector = ParityVector([(3, 1)])
        self.assertEqual(vector.bit(1, 3), 1)
        self.assertEqual(vector.bit(3, 1), 1)
        self.assertEqual(vector.bit(1, 2), 0)
        self.assertEqual(list(vector), [(1, 3)])

    def test_flipped(self):
        vector = ParityVector([(0, 1)])
        self.assertEqual(vector.flipped([(1, 0), (2, 3)]), ParityVector([(2, 3)]))
        self.assertEqual(vector.flipped([(2, 3), (3, 2)]), vector)

    def test_self_pair(self):
        with self.assertRaises(ValueError):
            ParityVector([(2, 2)])


class TestParityDrawing(DrawingTestMixin, unittest.TestCase):
    def test_misplaced_end(self):
        cycles = dict(K4_PLANAR.cycles())
        cycles[0], cycles[1] = cycles[1], cycles[0]
        with self.assertRaises(InvalidRotation):
            ParityDrawing(K4, RotationSystem(cycles))

    def test_predicates(self):
        drawing = k4([(0, 5), (0, 1)])
        self.assertEqual(parity(drawing, 5, 0), 1)
        self.assertEqual(odd_pairs(drawing), [(0, 1), (0, 5)])
        self.assertFalse(is_independently_even(drawing))
        self.assertEqual(even_vertices(drawing), {1, 2, 3})
        self.assertTrue(is_even_drawing(k4()))

    def test_edge_vertex_move(self):
        moved = edge_vertex_move(k4(), 5, 0)
        self.assertEqual(odd_pairs(moved), [(0, 5), (1, 5), (2, 5)])
        self.assertEqual(moved.rotation, K4_PLANAR)
        self.assertEqual(edge_vertex_move(moved, 5, 0), k4())
        with self.assertRaises(EndpointMove):
            edge_vertex_move(k4(), 5, 2)

    def test_twist(self):
        twisted = twist_edge(k4(), 0, 0)
        self.assertEqual(odd_pairs(twisted), [(0, 1), (0, 2)])
        self.assertEqual(twisted.rotation, K4_PLANAR)
        with self.assertRaises(NotEndpoint):
            twist_edge(k4(), 0, 2)

    def test_apply_moves(self):
        moves = [MoveVariable(5, 0), MoveVariable(0, 0, True)]
        self.assertEqual(
            apply_moves(k4(), moves),
            twist_edge(edge_vertex_move(k4(), 5, 0), 0, 0),
        )
        self.assertEqual(apply_moves(k4(), moves + moves), k4())

    def test_adjacent_swap(self):
        swapped = adjacent_swap(k4(), 0, 0)
        self.assertEqual(
            swapped.rotation.cycle(0), (EdgeEnd(0, 0), EdgeEnd(2, 0), EdgeEnd(1, 0))
        )
        self.assertEqual(odd_pairs(swapped), [(0, 1)])
        self.assertEqual(adjacent_swap(k4(), 0, 3), swapped)
        # positions are canonical: 1 and 0 now sit at 2 and 0
        self.assertEqual(adjacent_swap(swapped, 0, 2), k4())
        again = adjacent_swap(swapped, 0, 0)
        self.assertEqual(again.rotation, K4_PLANAR)
        self.assertEqual(odd_pairs(again), [(0, 1), (0, 2)])

    def test_swap_degree_one(self):
        path = ParityDrawing(
            graph([(0, 1), (1, 2)]), rotation({0: "0.a", 1: "0.b 1.a", 2: "1.b"})
        )
        with self.assertRaises(DegreeTooSmall):
            adjacent_swap(path, 0, 0)

    def test_pull_next_to_anchor(self):
        pulled = pull_across_anchor(k4(), 0, 1, 2)
        self.assertEqual(
            pulled.rotation.cycle(0), (EdgeEnd(0, 0), EdgeEnd(2, 0), EdgeEnd(1, 0))
        )
        self.assertEqual(odd_pairs(pulled), [(1, 2)])

    def test_pull_around(self):
        # 2 passes 0 on its way around to the anchor 1
        pulled = pull_across_anchor(k4(), 0, 2, 1)
        self.assertEqual(pulled.rotation, K4_PLANAR)
        self.assertEqual(odd_pairs(pulled), [(0, 2), (1, 2)])

    def test_pull_twice(self):
        hub = convex_drawing(wheel(4)).replace(parity=ParityVector())
        once = pull_across_anchor(hub, 0, 3, 1)
        self.assertEqual(
            once.rotation.cycle(0),
            (EdgeEnd(0, 0), EdgeEnd(2, 0), EdgeEnd(1, 0), EdgeEnd(3, 0)),
        )
        self.assertEqual(odd_pairs(once), [(1, 3), (2, 3)])
        # the second pull goes all the way round and passes 0 and 2 as well
        twice = pull_across_anchor(once, 0, 3, 1)
        self.assertEqual(twice.rotation, once.rotation)
        self.assertEqual(odd_pairs(twice), [(0, 3)])

    def test_pull_across_itself(self):
        with self.assertRaises(AnchorIsEdge) as context:
            pull_across_anchor(k4(), 0, 1, 1)
        self.assertEqual((context.exception.edge, context.exception.vertex), (1, 0))
        with self.assertRaises(NotIncident):
            pull_across_anchor(k4(), 0, 5, 1)

    def test_even_out(self):
        drawing, pulls, swaps = even_out_vertex(k4([(0, 1)]), 0, 0)
        self.assertEqual((pulls, swaps), (1, 1))
        self.assertTrue(is_even_drawing(drawing))
        self.assertEqual(
            drawing.rotation.cycle(0), (EdgeEnd(0, 0), EdgeEnd(2, 0), EdgeEnd(1, 0))
        )
        self.assertEqual(make_vertex_even(k4([(0, 1)]), 0, 0), drawing)

    def test_even_out_stuck(self):
        # the spokes 1 and 3 are never next to each other at the hub
        drawing = convex_drawing(wheel(4))
        self.assertEqual(
            drawing.rotation.cycle(0),
            (EdgeEnd(0, 0), EdgeEnd(3, 0), EdgeEnd(2, 0), EdgeEnd(1, 0)),
        )
        drawing = drawing.replace(parity=ParityVector([(1, 3)]))
        with self.assertRaises(OddVertexAfterAdjustment) as context:
            even_out_vertex(drawing, 0, 0)
        self.assertEqual(context.exception.odd_pairs, [(1, 3)])

    def test_restrict(self):
        sub = restrict(k4([(0, 5), (1, 3)]), K4.subgraph([0, 1, 2], [0, 1, 3]))
        self.assertEqual(sub.graph.edges, (0, 1, 3))
        self.assertEqual(odd_pairs(sub), [(1, 3)])
        with self.assertRaises(NotSubgraph):
            restrict(k4(), K4.with_edge(9, 0, 1))

    def test_insert_edge(self):
        path = ParityDrawing(
            graph([(0, 1), (1, 2)]), rotation({0: "0.a", 1: "0.b 1.a", 2: "1.b"})
        )
        closed = insert_edge(
            path, 2, 2, 0, odd_with=[0], after_u=EdgeEnd(1, 1), before_v=EdgeEnd(0, 0)
        )
        self.assertEqual(closed.rotation.cycle(0), (EdgeEnd(0, 0), EdgeEnd(2, 1)))
        self.assertEqual(closed.rotation.cycle(2), (EdgeEnd(1, 1), EdgeEnd(2, 0)))
        self.assertEqual(odd_pairs(closed), [(0, 2)])
        self.assertPlanar(closed.rotation)
        with self.assertRaises(InvalidRotation):
            insert_edge(path, 1, 0, 2)
