# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Exhaustive search over rotation systems.

Slow on purpose: this is the ground truth the solver and the embedder are
measured against.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, product
from math import factorial

from hanani_tutte.drawing import RotationSystem, canonical_cycle, ends_at, genus
from hanani_tutte.errors import BudgetExceeded, InvalidRotation


DEFAULT_BUDGET = 10 ** 8

log = logging.getLogger("hanani-tutte.oracle")


def vertex_ends(graph, vertex):
    return sorted(
        end for edge in graph.incident(vertex) for end in ends_at(graph, edge, vertex)
    )


def cyclic_orders(ends):
    """All cyclic orders of `ends`, each listed once with the least end first."""
    ends = sorted(ends)
    if not ends:
        return [()]
    first, rest = ends[0], ends[1:]
    return [(first,) + order for order in permutations(rest)]


class RotationEnumeration:
    """Every rotation system of a graph, with some cycles held fixed."""

    def __init__(self, graph, fixed=None):
        self.graph = graph
        self.fixed = {}
        for vertex, cycle in (fixed or {}).items():
            cycle = canonical_cycle(cycle)
            if sorted(cycle) != vertex_ends(graph, vertex):
                raise InvalidRotation(
                    f"prescribed rotation at {vertex} does not list its edge-ends"
                )
            self.fixed[vertex] = cycle
        self.free = [v for v in graph.vertices if v not in self.fixed]
        self.counts = {
            v: factorial(max(len(vertex_ends(graph, v)) - 1, 0)) for v in self.free
        }

    def __len__(self):
        total = 1
        for count in self.counts.values():
            total *= count
        return total

    def check_budget(self, budget):
        if len(self) > budget:
            raise BudgetExceeded(len(self), budget)

    def options(self, vertex):
        if vertex in self.fixed:
            return [self.fixed[vertex]]
        return cyclic_orders(vertex_ends(self.graph, vertex))

    def __iter__(self):
        vertices = list(self.graph.vertices)
        for choice in product(*(self.options(v) for v in vertices)):
            yield RotationSystem(dict(zip(vertices, choice)))

    def split(self):
        """Sub-enumerations, one per order of the first vertex with a choice."""
        pivot = next((v for v in self.free if self.counts[v] > 1), None)
        if pivot is None:
            return [self]
        parts = []
        for order in self.options(pivot):
            fixed = dict(self.fixed)
            fixed[pivot] = order
            parts.append(RotationEnumeration(self.graph, fixed))
        return parts


def _least_genus(enumeration):
    best = None
    seen = 0
    for rotation in enumeration:
        seen += 1
        value = genus(rotation)
        if best is None or value < best:
            best = value
            if best == 0:
                break
    return best, seen


def _run(enumeration, workers):
    parts = enumeration.split() if workers > 1 else [enumeration]
    if len(parts) == 1:
        return _least_genus(enumeration)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(_least_genus, parts))
    values = [value for value, _ in outcomes if value is not None]
    return (min(values) if values else None), sum(seen for _, seen in outcomes)


def min_genus(graph, budget=DEFAULT_BUDGET, workers=1):
    enumeration = RotationEnumeration(graph)
    enumeration.check_budget(budget)
    value, seen = _run(enumeration, workers)
    log.info(
        "min genus %s after %d of %d rotation systems", value, seen, len(enumeration)
    )
    return value


def _prescribed(W, rotations):
    if isinstance(rotations, RotationSystem):
        return {w: rotations.cycle(w) for w in W}
    return {w: rotations[w] for w in W}


def oracle_report(graph, W=(), rotations=None, budget=DEFAULT_BUDGET, workers=1):
    """Count, least genus and verdict, as the oracle command prints them."""
    enumeration = RotationEnumeration(graph, _prescribed(W, rotations) if W else {})
    enumeration.check_budget(budget)
    value, seen = _run(enumeration, workers)
    log.info(
        "least genus %s after %d of %d rotation systems", value, seen, len(enumeration)
    )
    return {
        "count": len(enumeration),
        "enumerated": seen,
        "min_genus": value,
        "planar": value == 0,
    }


def exists_embedding_with_rotations(
    graph, W, rotations, budget=DEFAULT_BUDGET, workers=1
):
    """Is there a planar rotation system agreeing with `rotations` on W?

    `rotations` is a RotationSystem or a mapping from vertex to cycle.
    """
    return oracle_report(graph, W, rotations, budget, workers)["planar"]
