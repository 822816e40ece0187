# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .core import IdAllocator, Multigraph
from .connectivity import (
    connected_components,
    cut_vertices,
    is_connected,
    is_separation_pair,
    is_three_connected,
    is_two_connected,
    path_between,
    path_vertices,
    separation_pairs,
    two_disjoint_paths,
)
from .split import SplitAtPair, SplitAtVertex, split_at_cut_vertex, split_at_pair

__all__ = [
    "IdAllocator",
    "Multigraph",
    "SplitAtPair",
    "SplitAtVertex",
    "connected_components",
    "cut_vertices",
    "is_connected",
    "is_separation_pair",
    "is_three_connected",
    "is_two_connected",
    "path_between",
    "path_vertices",
    "separation_pairs",
    "split_at_cut_vertex",
    "split_at_pair",
    "two_disjoint_paths",
]
