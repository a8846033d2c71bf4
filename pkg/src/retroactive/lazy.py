"""Lazy ADTs and full retroactivity simulated on top of partial retroactivity.

``lazify(adt)`` keeps every update of ``adt``, turns each query ``q`` into an
update ``q†`` that records what ``q`` would have answered at that point, and
adds one query, ``evaluate(k)``, that reads the record left by the k-th update.
Inserting a ``q†`` into the past and reading it back with ``evaluate`` is enough
to answer a query at any past time through a partially retroactive wrapper;
:class:`FullyFromPartial` does exactly that.
"""

from __future__ import annotations

from typing import Any

from .adt import QUERY, UNDEFINED, UPDATE, Adt, AdtInstance, OperationCall
from .errors import PositionError

DAGGER = "†"
EVALUATE = "evaluate"


def dagger(query_name: str) -> str:
    return query_name + DAGGER


class LazyInstance(AdtInstance):
    def __init__(self, base_adt: Adt):
        self.base_adt = base_adt
        self.base = base_adt.new()
        # results[i] answers the (i+1)-th update call; UNDEFINED for plain updates
        self.results: list = []

    def apply_update(self, call: OperationCall) -> None:
        if call.op_name.endswith(DAGGER):
            query = OperationCall(call.op_name[: -len(DAGGER)], QUERY, call.args)
            self.results.append(self.base.apply_query(query))
        else:
            self.base.apply_update(call)
            self.results.append(UNDEFINED)

    def apply_query(self, call: OperationCall) -> Any:
        return self.evaluate(*call.args)

    def evaluate(self, k: int) -> Any:
        if not 1 <= k <= len(self.results):
            raise PositionError(f"evaluate({k}) outside 1..{len(self.results)}")
        return self.results[k - 1]

    def clone(self) -> "LazyInstance":
        other = LazyInstance.__new__(LazyInstance)
        other.base_adt = self.base_adt
        other.base = self.base.clone()
        other.results = list(self.results)
        return other


def lazify(adt: Adt) -> Adt:
    updates = dict(adt.updates)
    for name, domain in adt.queries.items():
        updates[dagger(name)] = domain
    return Adt(
        name=f"Lazy({adt.name})",
        updates=updates,
        queries={EVALUATE: ("int",)},
        factory=lambda: LazyInstance(adt),
        supports_clone=adt.supports_clone,
    )


class FullyFromPartial:
    """Fully retroactive view of a base ADT over a partially retroactive Lazy(ADT).

    Only ``insert_update``, ``delete_update`` and ``query_present`` of the
    wrapped object are used, so any partially retroactive implementation works.
    """

    def __init__(self, partial_lazy):
        self.partial = partial_lazy

    @property
    def timeline(self):
        return self.partial.timeline

    def insert_update(self, k: int, call: OperationCall) -> None:
        self.partial.insert_update(k, call)

    def delete_update(self, k: int) -> None:
        self.partial.delete_update(k)

    def query(self, k: int, query: OperationCall) -> Any:
        """Answer ``query`` as if asked right after the k-th update."""
        self.partial.insert_update(k + 1, OperationCall(dagger(query.op_name), UPDATE, query.args))
        answer = self.partial.query_present(OperationCall(EVALUATE, QUERY, (k + 1,)))
        self.partial.delete_update(k + 1)
        return answer


def fully_from_partial(partial_lazy) -> FullyFromPartial:
    return FullyFromPartial(partial_lazy)
