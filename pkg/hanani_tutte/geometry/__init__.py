# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .drawing import (
    GeometricDrawing,
    Violation,
    crossing_parity,
    jitter,
    rotation_at,
    to_parity_drawing,
    validate_general_position,
)

__all__ = [
    "GeometricDrawing",
    "Violation",
    "crossing_parity",
    "jitter",
    "rotation_at",
    "to_parity_drawing",
    "validate_general_position",
]
