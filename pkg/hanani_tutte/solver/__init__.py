# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .gf2 import GF2Matrix, Solution, gf2_solve
from .system import (
    MoveVariable,
    UnifiedSystem,
    Verdict,
    build_system,
    decide_strong,
    decide_unified,
    decide_weak,
)

__all__ = [
    "GF2Matrix",
    "MoveVariable",
    "Solution",
    "UnifiedSystem",
    "Verdict",
    "build_system",
    "decide_strong",
    "decide_unified",
    "decide_weak",
    "gf2_solve",
]
