# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .rotation import (
    EdgeEnd,
    FaceSet,
    RotationSystem,
    canonical_cycle,
    components,
    corners,
    faces,
    genus,
    is_planar_rotation,
    reflect,
)
from .parity import (
    ParityDrawing,
    ParityVector,
    adjacent_swap,
    apply_moves,
    edge_vertex_move,
    ends_at,
    even_out_vertex,
    even_vertices,
    insert_edge,
    is_even_drawing,
    is_even_vertex,
    is_independently_even,
    make_vertex_even,
    odd_pairs,
    odd_pairs_at,
    pair_key,
    parity,
    pull_across_anchor,
    restrict,
    twist_edge,
)

__all__ = [
    "EdgeEnd",
    "FaceSet",
    "ParityDrawing",
    "ParityVector",
    "RotationSystem",
    "adjacent_swap",
    "apply_moves",
    "canonical_cycle",
    "components",
    "corners",
    "edge_vertex_move",
    "ends_at",
    "even_out_vertex",
    "even_vertices",
    "faces",
    "genus",
    "insert_edge",
    "is_even_drawing",
    "is_even_vertex",
    "is_independently_even",
    "is_planar_rotation",
    "make_vertex_even",
    "odd_pairs",
    "odd_pairs_at",
    "pair_key",
    "parity",
    "pull_across_anchor",
    "reflect",
    "restrict",
    "twist_edge",
]
