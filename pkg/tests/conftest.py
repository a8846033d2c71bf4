import pytest

from retroactive.circuit import Circuit

ACCEPTANCE_LINES = []


def recursive_eval(circuit: Circuit, bits: str) -> int:
    """Evaluate by recursion from the output wire; independent of eval_circuit's forward pass."""
    n = circuit.n_inputs

    def wire(w):
        if w < n:
            return bits[w] == "1"
        op, *args = circuit.gates[w - n]
        if op == "AND":
            return wire(args[0]) and wire(args[1])
        if op == "OR":
            return wire(args[0]) or wire(args[1])
        return not wire(args[0])

    return int(wire(circuit.output))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion."""
    from contextlib import contextmanager

    @contextmanager
    def record(name):
        try:
            yield
        except BaseException:
            ACCEPTANCE_LINES.append(f"FAIL  {name}")
            raise
        ACCEPTANCE_LINES.append(f"PASS  {name}")

    return record
