"""Rollback-based retroactive wrappers over any :class:`~retroactive.adt.Adt`.

Two strategies keep a live instance in sync with the timeline after each
retroactive edit:

``full-replay``
    rebuild from a fresh instance by replaying the whole timeline. Needs
    nothing from the ADT; an edit on a length-m timeline costs m+1 (insert) or
    m-1 (delete) base updates.

``snapshot-suffix``
    keep a checkpoint of the state after every prefix; an edit at position k
    restores checkpoint k-1 and replays only the suffix. Needs ``clone()``.

Every base update executed by a wrapper is counted, so the cost of each edit
can be asserted exactly.
"""

from __future__ import annotations

from typing import Any

from .adt import QUERY, UPDATE, Adt, OperationCall, Timeline, replay_oracle
from .errors import ArgumentError, PositionError

FULL_REPLAY = "full-replay"
SNAPSHOT_SUFFIX = "snapshot-suffix"
STRATEGIES = (FULL_REPLAY, SNAPSHOT_SUFFIX)


class Retroactive:
    """Partially and fully retroactive version of ``adt``.

    ``insert_update``/``delete_update`` edit the timeline, ``query_present``
    answers at the end of the timeline and ``query_at`` after any prefix.
    Every public call is appended to ``call_log``.
    """

    def __init__(self, adt: Adt, strategy: str | None = None):
        if strategy is None:
            strategy = SNAPSHOT_SUFFIX if adt.supports_clone else FULL_REPLAY
        if strategy not in STRATEGIES:
            raise ArgumentError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
        if strategy == SNAPSHOT_SUFFIX and not adt.supports_clone:
            raise ArgumentError(f"{adt.name} cannot be duplicated; use {FULL_REPLAY}")
        self.adt = adt
        self.strategy = strategy
        self.timeline = Timeline()
        self.updates_executed = 0
        self.call_log: list[tuple] = []
        self._live = adt.new()
        # _snapshots[i] is the state after the first i calls; never mutated in place.
        self._snapshots = [self._live] if strategy == SNAPSHOT_SUFFIX else None

    def __repr__(self):
        return f"Retroactive({self.adt.name}, {self.strategy}, m={len(self.timeline)})"

    def base_op_count(self) -> int:
        return self.updates_executed

    @property
    def retro_op_count(self) -> int:
        return len(self.call_log)

    def insert_update(self, k: int, call: OperationCall) -> None:
        self._check_update(call)
        self.timeline.insert(k, call)
        self.call_log.append(("insert", k, call))
        self._resync(k)

    def delete_update(self, k: int) -> None:
        self.timeline.delete(k)
        self.call_log.append(("delete", k))
        self._resync(k)

    def query_present(self, query: OperationCall) -> Any:
        self._check_query(query)
        self.call_log.append(("query", query))
        return self._live.apply_query(query)

    def query_at(self, k: int, query: OperationCall) -> Any:
        self._check_query(query)
        if not 0 <= k <= len(self.timeline):
            raise PositionError(f"query time {k} outside 0..{len(self.timeline)}")
        self.call_log.append(("query_at", k, query))
        if self._snapshots is not None:
            return self._snapshots[k].apply_query(query)
        scratch = self.adt.new()
        self._replay(scratch, self.timeline.prefix(k))
        return scratch.apply_query(query)

    # -- internals -----------------------------------------------------------

    def _check_update(self, call):
        if call.kind != UPDATE:
            raise ArgumentError(f"{call} is not an update")
        self.adt.validate(call)

    def _check_query(self, query):
        if query.kind != QUERY:
            raise ArgumentError(f"{query} is not a query")
        self.adt.validate(query)

    def _replay(self, instance, calls):
        for call in calls:
            instance.apply_update(call)
            self.updates_executed += 1

    def _resync(self, k):
        calls = self.timeline.calls
        if self._snapshots is None:
            self._live = self.adt.new()
            self._replay(self._live, calls)
            return
        del self._snapshots[k:]
        state = self._snapshots[-1]
        for call in calls[k - 1:]:
            state = state.clone()
            self._replay(state, (call,))
            self._snapshots.append(state)
        self._live = state


class OracleRetroactive:
    """Reference wrapper that answers every query with :func:`replay_oracle`.

    Used to cross-check the reduction drivers independently of the
    rollback machinery. It executes no incremental work, so its
    ``base_op_count`` stays at zero.
    """

    strategy = "oracle"

    def __init__(self, adt: Adt):
        self.adt = adt
        self.timeline = Timeline()
        self.call_log: list[tuple] = []

    def base_op_count(self) -> int:
        return 0

    @property
    def retro_op_count(self) -> int:
        return len(self.call_log)

    def insert_update(self, k, call):
        if call.kind != UPDATE:
            raise ArgumentError(f"{call} is not an update")
        self.adt.validate(call)
        self.timeline.insert(k, call)
        self.call_log.append(("insert", k, call))

    def delete_update(self, k):
        self.timeline.delete(k)
        self.call_log.append(("delete", k))

    def query_present(self, query):
        self.call_log.append(("query", query))
        return replay_oracle(self.adt, self.timeline, query)

    def query_at(self, k, query):
        prefix = self.timeline.prefix(k)
        self.call_log.append(("query_at", k, query))
        return replay_oracle(self.adt, prefix, query)


def make_wrapper(adt: Adt, strategy: str):
    """Build a wrapper by strategy name, including the ``oracle`` reference."""
    if strategy == "oracle":
        return OracleRetroactive(adt)
    return Retroactive(adt, strategy)
