"""Retroactive data structures by rollback, the lazy transform, and three hard ADTs."""

from .adt import QUERY, UNDEFINED, UPDATE, Adt, AdtInstance, OperationCall, Timeline, dictionary_adt, replay_oracle
from .circuit import Circuit, eval_circuit
from .engine import FULL_REPLAY, SNAPSHOT_SUFFIX, OracleRetroactive, Retroactive
from .errors import (
    ArgumentError,
    CapExceededError,
    InstanceFormatError,
    PositionError,
    RetroError,
    StateError,
    UndefinedBehaviorError,
)
from .hard import (
    circuit_counter_adt,
    has_good_triple,
    min_plus,
    minplus_multiplier_adt,
    three_summer_adt,
)
from .lazy import FullyFromPartial, fully_from_partial, lazify

__all__ = [
    "QUERY", "UNDEFINED", "UPDATE", "Adt", "AdtInstance", "OperationCall", "Timeline",
    "dictionary_adt", "replay_oracle", "Circuit", "eval_circuit", "FULL_REPLAY",
    "SNAPSHOT_SUFFIX", "OracleRetroactive", "Retroactive", "ArgumentError",
    "CapExceededError", "InstanceFormatError", "PositionError", "RetroError",
    "StateError", "UndefinedBehaviorError", "circuit_counter_adt", "has_good_triple",
    "min_plus", "minplus_multiplier_adt", "three_summer_adt", "FullyFromPartial",
    "fully_from_partial", "lazify",
]
