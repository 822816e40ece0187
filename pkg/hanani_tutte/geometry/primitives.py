# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Orientation tests on points given as (x, y) pairs.

Coordinates are Fractions in exact mode and floats otherwise; `epsilon`
is the margin below which a float quantity counts as zero.
"""

from functools import cmp_to_key


def area2(a, b, c):
    """Twice the signed area of the triangle abc; positive when ccw."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def orientation(a, b, c, epsilon=0):
    area = area2(a, b, c)
    if abs(area) <= epsilon:
        return 0
    return 1 if area > 0 else -1


def between(p, q, r, epsilon=0):
    """True if q lies in the closed bounding box of p and r."""
    return (
        min(p[0], r[0]) - epsilon <= q[0] <= max(p[0], r[0]) + epsilon
        and min(p[1], r[1]) - epsilon <= q[1] <= max(p[1], r[1]) + epsilon
    )


def distance2_to_segment(point, p, q):
    dx, dy = q[0] - p[0], q[1] - p[1]
    length2 = dx * dx + dy * dy
    if not length2:
        t = 0
    else:
        t = ((point[0] - p[0]) * dx + (point[1] - p[1]) * dy) / length2
        t = min(max(t, 0), 1)
    x, y = p[0] + t * dx - point[0], p[1] + t * dy - point[1]
    return x * x + y * y


def on_segment(point, p, q, epsilon=0):
    if epsilon:
        return distance2_to_segment(point, p, q) <= epsilon * epsilon
    return orientation(p, q, point) == 0 and between(p, point, q)


class Contact:
    NONE = "none"
    CROSSING = "crossing"
    TOUCH = "touch"
    OVERLAP = "overlap"


def segment_contact(a, b, c, d, epsilon=0):
    """Classify how segment ab meets segment cd.

    Returns (kind, point). A crossing is a single transversal point interior
    to both segments; a touch is any other single common point; an overlap
    is a collinear common piece of positive length.
    """
    o1 = orientation(a, b, c, epsilon)
    o2 = orientation(a, b, d, epsilon)
    o3 = orientation(c, d, a, epsilon)
    o4 = orientation(c, d, b, epsilon)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Contact.CROSSING, intersection_point(a, b, c, d)
    if o1 == o2 == o3 == o4 == 0:
        shared = [
            p for p in (a, b) if between(c, p, d, epsilon)
        ] + [p for p in (c, d) if between(a, p, b, epsilon)]
        if not shared:
            return Contact.NONE, None
        distinct = set(shared)
        if len(distinct) == 1:
            return Contact.TOUCH, shared[0]
        return Contact.OVERLAP, min(distinct)
    for point, p, q, o in ((c, a, b, o1), (d, a, b, o2), (a, c, d, o3), (b, c, d, o4)):
        if o == 0 and between(p, point, q, epsilon):
            return Contact.TOUCH, point
    return Contact.NONE, None


def intersection_point(a, b, c, d):
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    denom = r[0] * s[1] - r[1] * s[0]
    t = ((c[0] - a[0]) * s[1] - (c[1] - a[1]) * s[0]) / denom
    return (a[0] + t * r[0], a[1] + t * r[1])


def _half(vector):
    x, y = vector
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _by_angle(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def sort_clockwise(items, direction):
    """Sort items by decreasing angle of `direction(item)`.

    With the y axis pointing up, decreasing angle is clockwise.
    """
    return sorted(
        items, key=cmp_to_key(lambda a, b: _by_angle(direction(b), direction(a)))
    )
