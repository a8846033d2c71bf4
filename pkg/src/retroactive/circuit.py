"""Acyclic boolean circuits over the {AND, OR, NOT} basis.

Wires ``0..n_inputs-1`` are the inputs; gate ``i`` defines wire ``n_inputs + i``.
Gates are stored in definition order, which is a topological order because a
gate may only read wires defined before it.

File format (ASCII, newline terminated)::

    CIRCUIT <n_inputs> <n_gates>
    AND <w1> <w2> | OR <w1> <w2> | NOT <w>     (one line per gate)
    OUTPUT <wire>
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, InstanceFormatError

ARITY = {"AND": 2, "OR": 2, "NOT": 1}


@dataclass(frozen=True)
class Circuit:
    n_inputs: int
    gates: tuple
    output: int

    def __post_init__(self):
        if self.n_inputs < 1:
            raise ArgumentError("a circuit needs at least one input")
        gates = tuple(tuple(g) for g in self.gates)
        object.__setattr__(self, "gates", gates)
        for i, gate in enumerate(gates):
            op, *wires = gate
            if ARITY.get(op) != len(wires):
                raise ArgumentError(f"gate {i}: bad gate {gate!r}")
            wire = self.n_inputs + i
            for w in wires:
                if not isinstance(w, int) or not 0 <= w < wire:
                    raise ArgumentError(f"gate {i} reads wire {w}, which is not defined before wire {wire}")
        if not 0 <= self.output < self.n_wires:
            raise ArgumentError(f"output wire {self.output} does not exist")

    @property
    def n_wires(self) -> int:
        return self.n_inputs + len(self.gates)

    @property
    def size(self) -> int:
        return len(self.gates)

    # -- text forms ----------------------------------------------------------

    def dumps(self) -> str:
        lines = [f"CIRCUIT {self.n_inputs} {len(self.gates)}"]
        lines += [" ".join(str(p) for p in gate) for gate in self.gates]
        lines.append(f"OUTPUT {self.output}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Circuit":
        lines = text.splitlines()
        if not lines:
            raise InstanceFormatError("empty circuit file", 1)

        def ints(parts, lineno):
            try:
                return [int(p) for p in parts]
            except ValueError:
                raise InstanceFormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None

        head = lines[0].split()
        if len(head) != 3 or head[0] != "CIRCUIT":
            raise InstanceFormatError("expected 'CIRCUIT <n_inputs> <n_gates>'", 1)
        n_inputs, n_gates = ints(head[1:], 1)
        if len(lines) != n_gates + 2:
            raise InstanceFormatError(
                f"expected {n_gates} gate lines and an OUTPUT line, found {len(lines) - 1} lines",
                min(len(lines), n_gates + 2),
            )
        gates = []
        for lineno in range(2, n_gates + 2):
            parts = lines[lineno - 1].split()
            if not parts or ARITY.get(parts[0]) != len(parts) - 1:
                raise InstanceFormatError(f"bad gate line {lines[lineno - 1]!r}", lineno)
            gates.append((parts[0], *ints(parts[1:], lineno)))
        tail = lines[-1].split()
        if len(tail) != 2 or tail[0] != "OUTPUT":
            raise InstanceFormatError("expected 'OUTPUT <wire>'", len(lines))
        (output,) = ints(tail[1:], len(lines))
        try:
            return cls(n_inputs, tuple(gates), output)
        except ArgumentError as exc:
            raise InstanceFormatError(str(exc), len(lines)) from None

    def to_token(self) -> str:
        parts = [str(self.n_inputs)]
        parts += [",".join(str(p) for p in gate) for gate in self.gates]
        parts.append(f"out={self.output}")
        return "circuit:" + ";".join(parts)

    @classmethod
    def from_token(cls, token: str) -> "Circuit":
        parts = token[len("circuit:"):].split(";")
        if len(parts) < 2 or not parts[-1].startswith("out="):
            raise ValueError(token)
        gates = []
        for part in parts[1:-1]:
            op, *wires = part.split(",")
            gates.append((op, *(int(w) for w in wires)))
        try:
            return cls(int(parts[0]), tuple(gates), int(parts[-1][4:]))
        except ArgumentError as exc:
            raise ValueError(str(exc)) from exc


def eval_circuit(circuit: Circuit, bits: str) -> int:
    """Evaluate ``circuit`` on ``bits`` (input 0 is ``bits[0]``) in one forward pass."""
    if len(bits) != circuit.n_inputs:
        raise ArgumentError(f"circuit has {circuit.n_inputs} inputs, got {len(bits)} bits")
    values = [b == "1" for b in bits]
    for gate in circuit.gates:
        op = gate[0]
        if op == "AND":
            values.append(values[gate[1]] and values[gate[2]])
        elif op == "OR":
            values.append(values[gate[1]] or values[gate[2]])
        else:
            values.append(not values[gate[1]])
    return int(values[circuit.output])


def pad_to_even(circuit: Circuit) -> Circuit:
    """Return ``circuit`` with one unused input appended if its input count is odd."""
    if circuit.n_inputs % 2 == 0:
        return circuit
    n = circuit.n_inputs

    def shift(w):
        return w + 1 if w >= n else w

    gates = tuple((g[0], *(shift(w) for w in g[1:])) for g in circuit.gates)
    return Circuit(n + 1, gates, shift(circuit.output))
