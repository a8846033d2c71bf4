"""Circuit Counter, (min,+) Multiplier and 3-Summer.

Each ADT answers a question about its whole update history, yet has a cheap
non-retroactive implementation: the answer is maintained incrementally as
updates arrive.
"""

from __future__ import annotations

import copy

from .adt import UNDEFINED, Adt, AdtInstance
from .circuit import eval_circuit
from .errors import ArgumentError, UndefinedBehaviorError


class DimensionError(ArgumentError, UndefinedBehaviorError):
    """An argument's length disagrees with the length fixed earlier in the history."""


# -- Circuit Counter ---------------------------------------------------------

class CircuitCounter(AdtInstance):
    """Remembers a circuit and a current n-bit string.

    ``query()`` is True iff some value the current string has taken via
    ``set``/``increment`` satisfied the circuit. The string starts at 0^n and
    ``increment`` wraps modulo 2^n.
    """

    def __init__(self):
        self.circuit = None
        self.current = None
        self.satisfied_ever = False

    def initialize(self, circuit):
        if self.circuit is not None:
            raise UndefinedBehaviorError("initialize called twice")
        self.circuit = circuit
        self.current = "0" * circuit.n_inputs

    def set(self, bits):
        self._require_circuit()
        if len(bits) != self.circuit.n_inputs:
            raise DimensionError(f"set expects {self.circuit.n_inputs} bits, got {len(bits)}")
        self.current = bits
        self._check()

    def increment(self):
        self._require_circuit()
        n = len(self.current)
        self.current = format((int(self.current, 2) + 1) % (1 << n), f"0{n}b")
        self._check()

    def query(self):
        return self.satisfied_ever

    def clone(self):
        return copy.copy(self)

    def _require_circuit(self):
        if self.circuit is None:
            raise UndefinedBehaviorError("initialize must be the first operation")

    def _check(self):
        if eval_circuit(self.circuit, self.current):
            self.satisfied_ever = True


def circuit_counter_adt() -> Adt:
    return Adt(
        name="CircuitCounter",
        updates={"initialize": ("circuit",), "set": ("bits",), "increment": ()},
        queries={"query": ()},
        factory=CircuitCounter,
    )


# -- (min,+) Multiplier ------------------------------------------------------

def min_plus(a, b):
    """(min,+) inner product ``min_i a[i] + b[i]``; ``UNDEFINED`` if either side is unset."""
    if a is None or b is None:
        return UNDEFINED
    if len(a) != len(b):
        raise ArgumentError(f"length mismatch: {len(a)} vs {len(b)}")
    return min(x + y for x, y in zip(a, b))


class MinPlusMultiplier(AdtInstance):
    """Keeps vectors a, b and the product a⋄b recorded after every update."""

    def __init__(self):
        self.a = None
        self.b = None
        self.dim = None
        self.history = []

    def set_a(self, v):
        self.a = self._fit(v)
        self.history.append(min_plus(self.a, self.b))

    def set_b(self, v):
        self.b = self._fit(v)
        self.history.append(min_plus(self.a, self.b))

    def query(self):
        return tuple(self.history)

    def clone(self):
        other = copy.copy(self)
        other.history = list(self.history)
        return other

    def _fit(self, v):
        if not v:
            raise DimensionError("vectors must be non-empty")
        if self.dim is None:
            self.dim = len(v)
        elif len(v) != self.dim:
            raise DimensionError(f"expected length {self.dim}, got {len(v)}")
        return v


def minplus_multiplier_adt() -> Adt:
    return Adt(
        name="MinPlusMultiplier",
        updates={"set_a": ("ints",), "set_b": ("ints",)},
        queries={"query": ()},
        factory=MinPlusMultiplier,
    )


# -- 3-Summer ----------------------------------------------------------------

def has_good_triple(A, B, C) -> bool:
    """True iff a + b + c == 0 for some a in A, b in B, c in C. O(|A||B| + |C|)."""
    return _has_good_triple(A, B, frozenset(C))


def _has_good_triple(A, B, c_values):
    return any(-a - b in c_values for a in A for b in B)


class ThreeSummer(AdtInstance):
    """Keeps lists A, B, C; ``query()`` is True iff some past (A, B, C) had a good triple."""

    def __init__(self):
        self.A = ()
        self.B = ()
        self.C = ()
        self._c_values = frozenset()
        self.found_ever = False

    def set_a(self, values):
        self.A = values
        self._check()

    def set_b(self, values):
        self.B = values
        self._check()

    def set_c(self, values):
        self.C = values
        self._c_values = frozenset(values)
        self._check()

    def query(self):
        return self.found_ever

    def clone(self):
        return copy.copy(self)

    def _check(self):
        if _has_good_triple(self.A, self.B, self._c_values):
            self.found_ever = True


def three_summer_adt() -> Adt:
    return Adt(
        name="ThreeSummer",
        updates={"set_a": ("ints",), "set_b": ("ints",), "set_c": ("ints",)},
        queries={"query": ()},
        factory=ThreeSummer,
    )
