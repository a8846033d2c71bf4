"""Solving CircuitSAT, Online (min,+) Product and 3SUM with partially retroactive ADTs.

Each ``solve_*_retro`` driver takes the wrapper as a parameter and only uses
``insert_update``, ``delete_update`` and ``query_present``, so the same script
runs against any strategy. The ``*_bruteforce``/``*_naive`` functions are the
independent oracles the drivers are checked against.
"""

from __future__ import annotations

import itertools
from math import isqrt
from typing import Iterable, Iterator

import numpy as np

from .adt import UNDEFINED
from .circuit import eval_circuit
from .engine import FULL_REPLAY, SNAPSHOT_SUFFIX
from .errors import ArgumentError, CapExceededError, StateError
from .instances import CircuitSatInstance, OnlineMinPlusInstance, ThreeSumInstance

CIRCUITSAT_BRUTEFORCE_CAP = 20
THREESUM_BRUTEFORCE_CAP = 500


def _require_fresh(wrapper):
    if len(wrapper.timeline) or wrapper.retro_op_count:
        raise StateError("reduction drivers need a fresh wrapper")


def _check_restored(wrapper, before):
    if wrapper.timeline.calls != before:
        raise StateError("timeline was not restored after a probe")


def _probe(wrapper, k, call, query):
    """Insert ``call`` at ``k``, query the present, delete it again."""
    before = wrapper.timeline.calls
    wrapper.insert_update(k, call)
    answer = wrapper.query_present(query)
    wrapper.delete_update(k)
    _check_restored(wrapper, before)
    return answer


# -- CircuitSAT ----------------------------------------------------------------

def solve_circuitsat_retro(instance: CircuitSatInstance, wrapper) -> bool:
    _require_fresh(wrapper)
    adt = wrapper.adt
    half = instance.n // 2
    block = 1 << half
    wrapper.insert_update(1, adt.update("initialize", instance.circuit))
    increment = adt.update("increment")
    for _ in range(block):
        wrapper.insert_update(2, increment)
    query = adt.query("query")
    satisfiable = False
    for y in range(block):
        start = format(y, f"0{half}b") + "0" * half
        # no early exit: the script always probes every block
        if _probe(wrapper, 2, adt.update("set", start), query) is True:
            satisfiable = True
    return satisfiable


def solve_circuitsat_bruteforce(instance: CircuitSatInstance, cap: int = CIRCUITSAT_BRUTEFORCE_CAP) -> bool:
    circuit = instance.circuit
    if circuit.n_inputs > cap:
        raise CapExceededError(f"refusing to enumerate 2^{circuit.n_inputs} assignments (cap {cap})")
    return any(
        eval_circuit(circuit, "".join(bits))
        for bits in itertools.product("01", repeat=circuit.n_inputs)
    )


# -- Online (min,+) product ----------------------------------------------------

def iter_online_minplus_retro(matrix, vectors: Iterable, wrapper) -> Iterator[tuple]:
    """Yield ``matrix ⋄ v`` for each vector, reading the next vector only after yielding."""
    _require_fresh(wrapper)
    adt = wrapper.adt
    n = len(matrix)
    for j, row in enumerate(matrix, start=1):
        wrapper.insert_update(j, adt.update("set_a", tuple(row)))
    query = adt.query("query")
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise ArgumentError(f"vector length {len(v)} does not match matrix size {n}")
        history = _probe(wrapper, 1, adt.update("set_b", v), query)
        # entry 1 is the product recorded before any set_a, i.e. with a unset
        products = history[1:]
        if len(products) != n or UNDEFINED in products:
            raise StateError(f"unexpected multiplier history {history!r}")
        yield tuple(products)


def solve_online_minplus_retro(instance: OnlineMinPlusInstance, wrapper) -> list:
    return list(iter_online_minplus_retro(instance.matrix, instance.vectors, wrapper))


def solve_online_minplus_naive(instance: OnlineMinPlusInstance) -> list:
    out = []
    for v in instance.vectors:
        row_mins = []
        for row in instance.matrix:
            best = None
            for a, b in zip(row, v):
                if best is None or a + b < best:
                    best = a + b
            row_mins.append(best)
        out.append(tuple(row_mins))
    return out


# -- 3SUM ----------------------------------------------------------------------

def chunk_count(n: int) -> int:
    """Smallest s with s*s >= n."""
    return 0 if n <= 0 else isqrt(n - 1) + 1


def _chunks(values, s, pad):
    padded = tuple(values) + (pad,) * (s * s - len(values))
    return [padded[i * s:(i + 1) * s] for i in range(s)]


def solve_3sum_retro(instance: ThreeSumInstance, wrapper) -> bool:
    _require_fresh(wrapper)
    adt = wrapper.adt
    s = chunk_count(max(len(instance.A), len(instance.B)))
    a_chunks = _chunks(instance.A, s, instance.pad_value)
    b_chunks = _chunks(instance.B, s, instance.pad_value)
    wrapper.insert_update(1, adt.update("set_c", instance.C))
    for j, chunk in enumerate(b_chunks, start=1):
        wrapper.insert_update(j + 1, adt.update("set_b", chunk))
    query = adt.query("query")
    found = False
    for chunk in a_chunks:
        if _probe(wrapper, 2, adt.update("set_a", chunk), query) is True:
            found = True
    return found


def solve_3sum_bruteforce(instance: ThreeSumInstance, cap: int = THREESUM_BRUTEFORCE_CAP) -> bool:
    if instance.n > cap:
        raise CapExceededError(f"refusing a cubic scan at n={instance.n} (cap {cap})")
    for a in instance.A:
        for b in instance.B:
            for c in instance.C:
                if a + b + c == 0:
                    return True
    return False


def solve_3sum_sorted(instance: ThreeSumInstance) -> bool:
    """Quadratic oracle for sizes past the brute-force cap: binary search of -a-b in sorted C."""
    C = np.sort(np.asarray(instance.C, dtype=np.int64))
    B = np.asarray(instance.B, dtype=np.int64)
    if C.size == 0 or B.size == 0:
        return False
    for a in instance.A:
        targets = -a - B
        idx = np.minimum(np.searchsorted(C, targets), C.size - 1)
        if np.any(C[idx] == targets):
            return True
    return False


# -- script shape and cost -------------------------------------------------------

def timeline_length(problem: str, n: int) -> int:
    """Length of the standing timeline each driver builds before probing."""
    if problem == "circuitsat":
        return (1 << ((n + n % 2) // 2)) + 1
    if problem == "minplus":
        return n
    if problem == "3sum":
        return chunk_count(n) + 1
    raise ArgumentError(f"unknown problem {problem!r}")


def expected_retro_ops(problem: str, n: int) -> int:
    """Retroactive calls issued by a driver: setup inserts plus 3 per probe."""
    if problem == "circuitsat":
        block = timeline_length(problem, n) - 1
        return 1 + block + 3 * block
    if problem == "minplus":
        return n + 3 * n
    if problem == "3sum":
        s = chunk_count(n)
        return 1 + s + 3 * s
    raise ArgumentError(f"unknown problem {problem!r}")


def expected_base_ops(problem: str, n: int, strategy: str) -> int:
    """Closed-form count of base updates a driver executes.

    A full replay costs m+1 for an insert into a length-m timeline and m-1 for
    a delete. A suffix replay costs m-k+2 for an insert at k (the new call and
    the m-k+1 calls it displaces) and m-k for a delete at k.
    """
    if strategy not in (FULL_REPLAY, SNAPSHOT_SUFFIX):
        raise ArgumentError(f"no closed form for strategy {strategy!r}")
    full = strategy == FULL_REPLAY
    if problem == "circuitsat":
        h = timeline_length(problem, n) - 1
        # initialize, then h increments inserted at 2 into a length-i timeline
        setup = 1 + sum((i + 1) if full else i for i in range(1, h + 1))
        probe = (h + 2) + (h + 1) if full else (h + 1) + h
        return setup + h * probe
    if problem == "minplus":
        setup = sum(j if full else 1 for j in range(1, n + 1))
        return setup + n * ((n + 1) + n)
    if problem == "3sum":
        s = chunk_count(n)
        setup = 1 + sum((j + 1) if full else 1 for j in range(1, s + 1))
        probe = (s + 2) + (s + 1) if full else (s + 1) + s
        return setup + s * probe
    raise ArgumentError(f"unknown problem {problem!r}")
