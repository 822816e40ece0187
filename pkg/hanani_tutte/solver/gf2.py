# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Linear systems over GF(2) on Python integers.

A row is one integer: bit 0 holds the right-hand side, bit j + 1 the
coefficient of variable j. Python integers are arbitrary precision, so a
row is a packed word array and XOR is a row addition.
"""

from collections import namedtuple


def popcount(value):
    return bin(value).count("1")


def pack(columns, rhs=0):
    row = rhs & 1
    for column in columns:
        row ^= 1 << (column + 1)
    return row


def unpack(row):
    """Variable indices set in a row, ascending."""
    columns = []
    row >>= 1
    column = 0
    while row:
        if row & 1:
            columns.append(column)
        row >>= 1
        column += 1
    return columns


Solution = namedtuple("Solution", ["feasible", "assignment", "certificate", "rank"])


class GF2Matrix:
    """Rows are reduced into an echelon basis as they are added.

    Every basis row remembers which original rows it is the sum of, so an
    inconsistent row comes with its certificate.
    """

    def __init__(self, columns):
        self.columns = columns
        self.rows = []
        self._basis = {}
        self._conflict = None

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self._basis)

    def add_row(self, columns, rhs):
        for column in columns:
            if not 0 <= column < self.columns:
                raise IndexError(f"column {column} out of range")
        row = pack(columns, rhs)
        index = len(self.rows)
        self.rows.append(row)
        if self._conflict is None:
            self._insert(row, 1 << index)
        return index

    def _insert(self, row, history):
        while row > 1:
            variables = row & ~1
            pivot = variables & -variables
            if pivot not in self._basis:
                self._basis[pivot] = (row, history)
                return
            basis_row, basis_history = self._basis[pivot]
            row ^= basis_row
            history ^= basis_history
        if row == 1:
            self._conflict = history

    def solve(self):
        if self._conflict is not None:
            certificate = [i for i in range(len(self.rows)) if self._conflict >> i & 1]
            return Solution(False, None, certificate, self.rank)
        # free variables stay 0
        values = 0
        for pivot in sorted(self._basis, reverse=True):
            row, _ = self._basis[pivot]
            rest = row & ~pivot & ~1
            if (row & 1) ^ (popcount(rest & values) & 1):
                values |= pivot
        return Solution(True, unpack(values), None, self.rank)

    def check_certificate(self, certificate):
        total = 0
        for index in certificate:
            total ^= self.rows[index]
        return total == 1

    def check_assignment(self, assignment):
        values = pack(assignment)
        return all(
            popcount(row & ~1 & values) & 1 == row & 1 for row in self.rows
        )


def gf2_solve(system):
    """Solve a GF2Matrix, or the matrix of a UnifiedSystem."""
    return getattr(system, "matrix", system).solve()
