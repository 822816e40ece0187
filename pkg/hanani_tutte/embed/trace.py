# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"Recording the recursion of the embedder"

from collections import Counter


class Observer:
    """Collects one record per recursion step.

    For quiet=1, skip the claim checks, for quiet=2 record only the
    errors.
    """

    def __init__(self, quiet=0):
        self.summary = Counter()
        self.details = []
        self.quiet = quiet
        self.error = False

    def notify(self, category, depth, data):
        self.summary[category] += 1
        if category == "error":
            self.error = True
        elif self.quiet >= 2 or (self.quiet == 1 and category == "claim"):
            return
        record = {"step": len(self.details), "depth": depth, "category": category}
        record.update(data)
        self.details.append(record)

    def toJSON(self):
        return {"summary": dict(self.summary), "details": list(self.details)}

    def serializeSummary(self):
        return "\n".join(
            f"{category:12} {count:6}"
            for category, count in sorted(self.summary.items())
        )

    def __str__(self):
        return "observer"


class NullObserver(Observer):
    def notify(self, category, depth, data):
        pass
