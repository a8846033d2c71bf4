"""Problem instances for the reductions: types, seeded generators, text formats.

Text formats (whitespace separated base-10 integers, one-line header)::

    circuitsat   the circuit file format of :mod:`retroactive.circuit`
    minplus      MINPLUS <n> / n matrix rows / n vectors, one per line
    3sum         3SUM <n> / A / B / C, one list per line
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .circuit import Circuit, eval_circuit, pad_to_even
from .errors import ArgumentError, CapExceededError, InstanceFormatError

PROBLEMS = ("circuitsat", "minplus", "3sum")

CAPS = {"circuitsat": 20, "minplus": 128, "3sum": 10_000}
MAX_GATES = 64
MINPLUS_WEIGHT = 100


@dataclass(frozen=True)
class CircuitSatInstance:
    """A circuit, padded on construction to an even number of inputs."""

    circuit: Circuit

    def __post_init__(self):
        object.__setattr__(self, "circuit", pad_to_even(self.circuit))

    @property
    def n(self) -> int:
        return self.circuit.n_inputs


@dataclass(frozen=True)
class OnlineMinPlusInstance:
    matrix: tuple
    vectors: tuple

    def __post_init__(self):
        matrix = tuple(tuple(row) for row in self.matrix)
        vectors = tuple(tuple(v) for v in self.vectors)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise ArgumentError("matrix must be square and non-empty")
        if any(len(v) != n for v in vectors):
            raise ArgumentError(f"every vector must have length {n}")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "vectors", vectors)

    @property
    def n(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class ThreeSumInstance:
    A: tuple
    B: tuple
    C: tuple
    pad_value: int = field(default=None)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        bound = 3 * max((abs(x) for x in self.A + self.B + self.C), default=0)
        if self.pad_value is None:
            object.__setattr__(self, "pad_value", bound + 1)
        elif abs(self.pad_value) <= bound:
            raise ArgumentError(f"|pad_value| must exceed {bound}")

    @property
    def n(self) -> int:
        return max(len(self.A), len(self.B), len(self.C))


# -- generators ----------------------------------------------------------------

def check_cap(problem: str, n: int) -> None:
    if problem not in CAPS:
        raise ArgumentError(f"unknown problem {problem!r}; choose from {PROBLEMS}")
    if not 1 <= n <= CAPS[problem]:
        raise CapExceededError(f"{problem} size {n} outside 1..{CAPS[problem]}")


def random_circuit(rng: random.Random, n: int, n_gates: int) -> Circuit:
    gates = []
    for i in range(n_gates):
        wires = n + i
        # bias reads toward recent wires so outputs depend on deep logic
        def pick():
            return max(rng.randrange(wires), rng.randrange(wires))
        op = rng.choice(("AND", "AND", "OR", "OR", "NOT"))
        gates.append(("NOT", pick()) if op == "NOT" else (op, pick(), pick()))
    return Circuit(n, tuple(gates), n + n_gates - 1 if n_gates else 0)


def generate_circuitsat(n: int, seed: int, planted: bool = False) -> CircuitSatInstance:
    check_cap("circuitsat", n)
    rng = random.Random(f"circuitsat:{n}:{seed}:{planted}")
    circuit = random_circuit(rng, n, rng.randint(1, MAX_GATES - 1))
    if planted:
        witness = "".join(rng.choice("01") for _ in range(n))
        if not eval_circuit(circuit, witness):
            gates = circuit.gates + (("NOT", circuit.output),)
            circuit = Circuit(n, gates, circuit.n_wires)
    return CircuitSatInstance(circuit)


def generate_minplus(n: int, seed: int, weight: int = MINPLUS_WEIGHT) -> OnlineMinPlusInstance:
    check_cap("minplus", n)
    rng = random.Random(f"minplus:{n}:{seed}")

    def vec():
        return tuple(rng.randint(-weight, weight) for _ in range(n))

    return OnlineMinPlusInstance(tuple(vec() for _ in range(n)), tuple(vec() for _ in range(n)))


def generate_3sum(n: int, seed: int, planted: bool = False, weight: int | None = None) -> ThreeSumInstance:
    check_cap("3sum", n)
    if weight is None:
        # wide enough that unplanted instances rarely contain a good triple by chance
        weight = max(100, 10 * n**3)
    rng = random.Random(f"3sum:{n}:{seed}:{planted}")

    def values():
        return [rng.randint(-weight, weight) for _ in range(n)]

    A, B, C = values(), values(), values()
    if planted:
        C[rng.randrange(n)] = -rng.choice(A) - rng.choice(B)
    return ThreeSumInstance(tuple(A), tuple(B), tuple(C))


def generate_instance(problem: str, n: int, seed: int, planted: bool = False):
    """Deterministic pseudo-random instance for ``(problem, n, seed, planted)``.

    ``planted`` forces a yes-instance for circuitsat and 3sum; minplus has no
    yes/no answer and ignores it.
    """
    if problem == "circuitsat":
        return generate_circuitsat(n, seed, planted)
    if problem == "minplus":
        return generate_minplus(n, seed)
    if problem == "3sum":
        return generate_3sum(n, seed, planted)
    raise ArgumentError(f"unknown problem {problem!r}; choose from {PROBLEMS}")


# -- text formats --------------------------------------------------------------

def dump_instance(instance) -> str:
    def line(values):
        return " ".join(str(v) for v in values)

    if isinstance(instance, CircuitSatInstance):
        return instance.circuit.dumps()
    if isinstance(instance, OnlineMinPlusInstance):
        rows = [f"MINPLUS {instance.n}"]
        rows += [line(r) for r in instance.matrix]
        rows += [line(v) for v in instance.vectors]
        return "\n".join(rows) + "\n"
    if isinstance(instance, ThreeSumInstance):
        if not len(instance.A) == len(instance.B) == len(instance.C):
            raise ArgumentError("the 3sum file format needs |A| = |B| = |C|")
        return "\n".join([f"3SUM {instance.n}", line(instance.A), line(instance.B), line(instance.C)]) + "\n"
    raise ArgumentError(f"cannot serialize {type(instance).__name__}")


def _int_line(text, lineno, expected=None):
    try:
        values = tuple(int(t) for t in text.split())
    except ValueError:
        raise InstanceFormatError(f"expected integers, got {text.strip()!r}", lineno) from None
    if expected is not None and len(values) != expected:
        raise InstanceFormatError(f"expected {expected} integers, got {len(values)}", lineno)
    return values


def _header(lines, tag):
    parts = lines[0].split() if lines else []
    if len(parts) != 2 or parts[0] != tag:
        raise InstanceFormatError(f"expected '{tag} <n>'", 1)
    (n,) = _int_line(parts[1], 1)
    if n < 1:
        raise InstanceFormatError("n must be positive", 1)
    return n


def load_instance(problem: str, text: str):
    if problem == "circuitsat":
        return CircuitSatInstance(Circuit.loads(text))
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if problem == "minplus":
        n = _header(lines, "MINPLUS")
        if len(lines) != 2 * n + 1:
            raise InstanceFormatError(f"expected {2 * n} rows after the header, found {len(lines) - 1}", len(lines))
        rows = [_int_line(lines[i], i + 1, n) for i in range(1, 2 * n + 1)]
        return OnlineMinPlusInstance(tuple(rows[:n]), tuple(rows[n:]))
    if problem == "3sum":
        n = _header(lines, "3SUM")
        if len(lines) != 4:
            raise InstanceFormatError(f"expected 3 lists after the header, found {len(lines) - 1}", len(lines))
        A, B, C = (_int_line(lines[i], i + 1, n) for i in (1, 2, 3))
        return ThreeSumInstance(A, B, C)
    raise ArgumentError(f"unknown problem {problem!r}; choose from {PROBLEMS}")
