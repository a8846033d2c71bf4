"""Abstract data types, operation calls, timelines and the replay oracle.

An ADT is a set of named update operations, a set of named query operations,
and a factory for instances in the initial state. Every argument is drawn from
a small value model so that calls can be written to text and read back:

=========  ===================  ===================
kind       Python value         text token
=========  ===================  ===================
int        int                  ``-12``
bits       str of '0'/'1'       ``b:0110``
ints       tuple of int         ``[3,-1,4]``
circuit    Circuit              ``circuit:2;AND,0,1;out=2``
=========  ===================  ===================
"""

from __future__ import annotations

import copy
import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping

from .circuit import Circuit
from .errors import ArgumentError, PositionError, UndefinedBehaviorError

UPDATE = "update"
QUERY = "query"


class _Undefined(enum.Enum):
    UNDEFINED = "undefined"

    def __repr__(self):
        return "UNDEFINED"


#: Answer returned wherever an ADT leaves behavior undefined.
UNDEFINED = _Undefined.UNDEFINED


# -- value model -------------------------------------------------------------

def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def check_value(kind: str, value: Any) -> bool:
    if kind == "int":
        return _is_int(value)
    if kind == "bits":
        return isinstance(value, str) and set(value) <= {"0", "1"}
    if kind == "ints":
        return isinstance(value, tuple) and all(_is_int(v) for v in value)
    if kind == "circuit":
        return isinstance(value, Circuit)
    raise ArgumentError(f"unknown value kind {kind!r}")


def encode_value(value: Any) -> str:
    if _is_int(value):
        return str(value)
    if isinstance(value, str):
        return "b:" + value
    if isinstance(value, tuple):
        return "[" + ",".join(str(v) for v in value) + "]"
    if isinstance(value, Circuit):
        return value.to_token()
    raise ArgumentError(f"cannot encode {value!r}")


def decode_value(token: str) -> Any:
    try:
        if token.startswith("b:"):
            bits = token[2:]
            if set(bits) - {"0", "1"}:
                raise ValueError(bits)
            return bits
        if token.startswith("["):
            if not token.endswith("]"):
                raise ValueError(token)
            body = token[1:-1]
            return tuple(int(v) for v in body.split(",")) if body else ()
        if token.startswith("circuit:"):
            return Circuit.from_token(token)
        return int(token)
    except ValueError as exc:
        raise ArgumentError(f"malformed argument token {token!r}") from exc


# -- calls and timelines -----------------------------------------------------

@dataclass(frozen=True)
class OperationCall:
    op_name: str
    kind: str = UPDATE
    args: tuple = ()

    def __str__(self):
        return " ".join([self.op_name, *(encode_value(a) for a in self.args)])

    @classmethod
    def parse(cls, line: str, kind: str = UPDATE) -> "OperationCall":
        parts = line.split()
        if not parts:
            raise ArgumentError("empty call")
        return cls(parts[0], kind, tuple(decode_value(t) for t in parts[1:]))


class Timeline:
    """Ordered sequence of update calls with 1-indexed positions."""

    def __init__(self, calls: Iterable[OperationCall] = ()):
        self._calls = list(calls)
        for call in self._calls:
            if call.kind != UPDATE:
                raise ArgumentError(f"timeline holds updates only, got {call}")

    def __len__(self):
        return len(self._calls)

    def __iter__(self) -> Iterator[OperationCall]:
        return iter(self._calls)

    def __eq__(self, other):
        if isinstance(other, Timeline):
            return self._calls == other._calls
        return NotImplemented

    def __repr__(self):
        return f"Timeline({self._calls!r})"

    @property
    def calls(self) -> tuple:
        return tuple(self._calls)

    def at(self, k: int) -> OperationCall:
        if not 1 <= k <= len(self._calls):
            raise PositionError(f"position {k} outside 1..{len(self._calls)}")
        return self._calls[k - 1]

    def prefix(self, k: int) -> tuple:
        if not 0 <= k <= len(self._calls):
            raise PositionError(f"prefix length {k} outside 0..{len(self._calls)}")
        return tuple(self._calls[:k])

    def insert(self, k: int, call: OperationCall) -> None:
        if call.kind != UPDATE:
            raise ArgumentError(f"timeline holds updates only, got {call}")
        if not 1 <= k <= len(self._calls) + 1:
            raise PositionError(f"insert position {k} outside 1..{len(self._calls) + 1}")
        self._calls.insert(k - 1, call)

    def delete(self, k: int) -> OperationCall:
        if not 1 <= k <= len(self._calls):
            raise PositionError(f"delete position {k} outside 1..{len(self._calls)}")
        return self._calls.pop(k - 1)

    def dumps(self) -> str:
        return "".join(f"{call}\n" for call in self._calls)

    @classmethod
    def loads(cls, text: str, adt: "Adt | None" = None) -> "Timeline":
        calls = []
        for line in text.splitlines():
            if not line.strip():
                continue
            call = OperationCall.parse(line)
            if adt is not None:
                adt.validate(call)
            calls.append(call)
        return cls(calls)


# -- ADT contract ------------------------------------------------------------

class AdtInstance:
    """Base class for ADT implementations.

    Operations are methods named after the operation. Calls are dispatched by
    ``apply_update``/``apply_query``; once an update hits undefined behavior the
    instance latches and every later query answers ``UNDEFINED``.
    """

    undefined = False

    def apply_update(self, call: OperationCall) -> None:
        if self.undefined:
            return
        try:
            getattr(self, call.op_name)(*call.args)
        except UndefinedBehaviorError:
            self.undefined = True

    def apply_query(self, call: OperationCall) -> Any:
        if self.undefined:
            return UNDEFINED
        return getattr(self, call.op_name)(*call.args)

    def clone(self) -> "AdtInstance":
        return copy.deepcopy(self)


@dataclass(frozen=True, eq=False)
class Adt:
    """An ADT: declared operations with argument domains, plus an instance factory.

    ``updates`` and ``queries`` map operation names to a tuple of value kinds,
    one per argument.
    """

    name: str
    updates: Mapping[str, tuple]
    queries: Mapping[str, tuple]
    factory: Callable[[], AdtInstance]
    supports_clone: bool = True

    def new(self) -> AdtInstance:
        return self.factory()

    def update(self, op_name: str, *args) -> OperationCall:
        return self.validate(OperationCall(op_name, UPDATE, tuple(args)))

    def query(self, op_name: str, *args) -> OperationCall:
        return self.validate(OperationCall(op_name, QUERY, tuple(args)))

    def validate(self, call: OperationCall) -> OperationCall:
        table = self.updates if call.kind == UPDATE else self.queries
        if call.kind not in (UPDATE, QUERY) or call.op_name not in table:
            raise ArgumentError(f"{self.name} has no {call.kind} operation {call.op_name!r}")
        domain = table[call.op_name]
        if len(call.args) != len(domain) or not all(
            check_value(kind, v) for kind, v in zip(domain, call.args)
        ):
            raise ArgumentError(f"{call} is outside the domain {domain} of {call.op_name}")
        return call


def replay_oracle(adt: Adt, timeline: Iterable[OperationCall], query: OperationCall) -> Any:
    """Answer ``query`` after applying ``timeline`` to a fresh instance.

    This is the executable meaning of an ADT and the reference every
    retroactive wrapper is checked against.
    """
    adt.validate(query)
    if query.kind != QUERY:
        raise ArgumentError(f"{query} is not a query")
    instance = adt.new()
    for call in timeline:
        instance.apply_update(adt.validate(call))
    return instance.apply_query(query)


# -- Dictionary --------------------------------------------------------------

class Dictionary(AdtInstance):
    """A set of integers: ``contains(x)`` iff ``insert(x)`` is more recent than ``delete(x)``."""

    def __init__(self):
        self.items = set()

    def insert(self, x):
        self.items.add(x)

    def delete(self, x):
        self.items.discard(x)

    def contains(self, x):
        return x in self.items

    def clone(self):
        other = Dictionary()
        other.items = set(self.items)
        other.undefined = self.undefined
        return other


def dictionary_adt() -> Adt:
    return Adt(
        name="Dictionary",
        updates={"insert": ("int",), "delete": ("int",)},
        queries={"contains": ("int",)},
        factory=Dictionary,
    )
