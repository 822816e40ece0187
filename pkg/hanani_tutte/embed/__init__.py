# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .types import EmbedRequest, EmbedResult
from .trace import NullObserver, Observer
from .embedder import (
    Embedder,
    case0_disjoint_union,
    case3_three_connected,
    claim_a_consecutive_part,
    claim_b_check,
    embed_drawing,
    embed_multigraph,
    embed_unified,
    glue_at_edge,
    glue_at_vertex,
    gluing_order,
    replace_virtual_edge,
    route_edge_along_path,
    solve_and_embed,
)

__all__ = [
    "EmbedRequest",
    "EmbedResult",
    "Embedder",
    "NullObserver",
    "Observer",
    "case0_disjoint_union",
    "case3_three_connected",
    "claim_a_consecutive_part",
    "claim_b_check",
    "embed_drawing",
    "embed_multigraph",
    "embed_unified",
    "glue_at_edge",
    "glue_at_vertex",
    "gluing_order",
    "replace_virtual_edge",
    "route_edge_along_path",
    "solve_and_embed",
]
