import itertools

import pytest

from retroactive.circuit import Circuit
from retroactive.engine import FULL_REPLAY, SNAPSHOT_SUFFIX, STRATEGIES, make_wrapper
from retroactive.errors import ArgumentError, CapExceededError, InstanceFormatError, StateError
from retroactive.hard import circuit_counter_adt, minplus_multiplier_adt, three_summer_adt
from retroactive.instances import (
    CircuitSatInstance,
    OnlineMinPlusInstance,
    ThreeSumInstance,
    dump_instance,
    generate_instance,
    load_instance,
)
from retroactive.reductions import (
    chunk_count,
    expected_base_ops,
    expected_retro_ops,
    iter_online_minplus_retro,
    solve_3sum_bruteforce,
    solve_3sum_retro,
    solve_3sum_sorted,
    solve_circuitsat_bruteforce,
    solve_circuitsat_retro,
    solve_online_minplus_naive,
    solve_online_minplus_retro,
    timeline_length,
)

ALL = STRATEGIES + ("oracle",)
all_wrappers = pytest.mark.parametrize("strategy", ALL)

NOT0_AND_1 = Circuit(2, (("NOT", 0), ("AND", 2, 1)), 3)
CONTRADICTION = Circuit(1, (("NOT", 0), ("AND", 0, 1)), 2)


@all_wrappers
def test_circuitsat_examples(strategy):
    sat = CircuitSatInstance(NOT0_AND_1)
    assert solve_circuitsat_bruteforce(sat) is True
    assert solve_circuitsat_retro(sat, make_wrapper(circuit_counter_adt(), strategy)) is True
    unsat = CircuitSatInstance(CONTRADICTION)
    assert unsat.n == 2
    assert solve_circuitsat_bruteforce(unsat) is False
    assert solve_circuitsat_retro(unsat, make_wrapper(circuit_counter_adt(), strategy)) is False


@pytest.mark.parametrize("n", [4, 6, 8, 10])
@pytest.mark.parametrize("seed", range(6))
def test_circuitsat_driver_matches_bruteforce(n, seed):
    inst = generate_instance("circuitsat", n, seed, planted=seed % 2 == 0)
    want = solve_circuitsat_bruteforce(inst)
    for strategy in ALL:
        assert solve_circuitsat_retro(inst, make_wrapper(circuit_counter_adt(), strategy)) == want


def test_circuitsat_bruteforce_cap():
    big = CircuitSatInstance(Circuit(22, (("AND", 0, 1),), 22))
    with pytest.raises(CapExceededError):
        solve_circuitsat_bruteforce(big)


@all_wrappers
def test_minplus_examples(strategy):
    one = OnlineMinPlusInstance(((0,),), ((5,),))
    assert solve_online_minplus_retro(one, make_wrapper(minplus_multiplier_adt(), strategy)) == [(5,)]
    two = OnlineMinPlusInstance(((0, 10), (4, 4)), ((3, 1),))
    expected = [(min(0 + 3, 10 + 1), min(4 + 3, 4 + 1))]
    assert expected == [(3, 5)]
    assert solve_online_minplus_naive(two) == expected
    assert solve_online_minplus_retro(two, make_wrapper(minplus_multiplier_adt(), strategy)) == expected


@pytest.mark.parametrize("n", [4, 9, 16, 25])
def test_minplus_driver_matches_naive(n):
    inst = generate_instance("minplus", n, seed=n)
    want = solve_online_minplus_naive(inst)
    for strategy in ALL:
        assert solve_online_minplus_retro(inst, make_wrapper(minplus_multiplier_adt(), strategy)) == want


def test_minplus_is_online():
    inst = generate_instance("minplus", 4, seed=1)
    read = []

    def vectors():
        for v in inst.vectors:
            read.append(v)
            yield v

    driver = iter_online_minplus_retro(inst.matrix, vectors(), make_wrapper(minplus_multiplier_adt(), FULL_REPLAY))
    for i, product in enumerate(driver, start=1):
        # the next vector is only pulled after this product was produced
        assert len(read) == i
        assert product == solve_online_minplus_naive(OnlineMinPlusInstance(inst.matrix, (read[-1],)))[0]


def test_minplus_dimension_mismatch():
    wrapper = make_wrapper(minplus_multiplier_adt(), FULL_REPLAY)
    with pytest.raises(ArgumentError):
        list(iter_online_minplus_retro(((1, 2), (3, 4)), [(1, 2, 3)], wrapper))
    with pytest.raises(ArgumentError):
        OnlineMinPlusInstance(((1, 2),), ())


@all_wrappers
def test_3sum_examples(strategy):
    assert solve_3sum_retro(ThreeSumInstance((1,), (2,), (-3,)), make_wrapper(three_summer_adt(), strategy)) is True
    positive = ThreeSumInstance((1, 5, 9), (2, 3, 4), (7, 8, 1))
    assert solve_3sum_bruteforce(positive) is False
    assert solve_3sum_retro(positive, make_wrapper(three_summer_adt(), strategy)) is False


@pytest.mark.parametrize("n", [9, 16, 25, 100, 10, 30])
@pytest.mark.parametrize("planted", [False, True])
def test_3sum_driver_matches_bruteforce(n, planted):
    inst = generate_instance("3sum", n, seed=n, planted=planted)
    want = solve_3sum_bruteforce(inst)
    assert solve_3sum_sorted(inst) == want
    if planted:
        assert want is True
    for strategy in ALL:
        assert solve_3sum_retro(inst, make_wrapper(three_summer_adt(), strategy)) == want


def test_3sum_pad_value_is_inert():
    inst = ThreeSumInstance((3, -1), (4,), (-7, 2))
    assert abs(inst.pad_value) > 3 * 7
    with pytest.raises(ArgumentError):
        ThreeSumInstance((3,), (4,), (-7,), pad_value=10)
    # no triple that uses a pad can sum to zero
    P = inst.pad_value
    for x, y in itertools.product((3, -1, 4, -7, 2, P), repeat=2):
        assert P + x + y != 0


def test_3sum_bruteforce_cap():
    inst = generate_instance("3sum", 501, seed=0)
    with pytest.raises(CapExceededError):
        solve_3sum_bruteforce(inst)


def test_chunk_count():
    assert [chunk_count(n) for n in (0, 1, 2, 4, 5, 9, 10, 100)] == [0, 1, 2, 2, 3, 3, 4, 10]


@pytest.mark.parametrize(
    "problem, n",
    [("circuitsat", 4), ("circuitsat", 7), ("circuitsat", 10), ("minplus", 5), ("minplus", 16), ("3sum", 9), ("3sum", 20)],
)
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_script_shape_and_cost(problem, n, strategy):
    make_adt, driver = {
        "circuitsat": (circuit_counter_adt, solve_circuitsat_retro),
        "minplus": (minplus_multiplier_adt, solve_online_minplus_retro),
        "3sum": (three_summer_adt, solve_3sum_retro),
    }[problem]
    inst = generate_instance(problem, n, seed=3)
    wrapper = make_wrapper(make_adt(), strategy)
    driver(inst, wrapper)
    log = wrapper.call_log
    kinds = [entry[0] for entry in log]
    if problem == "circuitsat":
        block = 2 ** (inst.n // 2)
        assert len(log) == 1 + block + 3 * block
    elif problem == "minplus":
        assert len(log) == n + 3 * n
    else:
        s = chunk_count(n)
        assert len(log) == 1 + s + 3 * s
    assert len(log) == expected_retro_ops(problem, n)
    # setup inserts, then insert/query/delete triples
    setup = len(log) - 3 * (kinds.count("query"))
    assert set(kinds[:setup]) == {"insert"}
    assert kinds[setup:] == ["insert", "query", "delete"] * kinds.count("query")
    assert len(wrapper.timeline) == timeline_length(problem, n)
    assert wrapper.base_op_count() == expected_base_ops(problem, n, strategy)


def brute_phi_3sum(s, strategy):
    """Sum per-edit costs by simulating only timeline lengths."""
    m, total = 0, 0
    edits = [("insert", 1)] + [("insert", j + 1) for j in range(1, s + 1)]
    edits += [e for _ in range(s) for e in (("insert", 2), ("delete", 2))]
    for op, k in edits:
        if op == "insert":
            total += (m + 1) if strategy == FULL_REPLAY else (m + 1) - k + 1
            m += 1
        else:
            total += (m - 1) if strategy == FULL_REPLAY else m - k
            m -= 1
    return total


@pytest.mark.parametrize("s", [1, 2, 3, 8, 16, 64])
def test_3sum_closed_form(s):
    assert expected_base_ops("3sum", s * s, FULL_REPLAY) == brute_phi_3sum(s, FULL_REPLAY) == (5 * s * s + 9 * s + 2) // 2
    assert expected_base_ops("3sum", s * s, SNAPSHOT_SUFFIX) == brute_phi_3sum(s, SNAPSHOT_SUFFIX)


def test_phi_ratio_tends_to_four():
    ratios = [expected_base_ops("3sum", (2 * s) ** 2, FULL_REPLAY) / expected_base_ops("3sum", s * s, FULL_REPLAY) for s in (8, 64, 512)]
    assert ratios == sorted(ratios)
    assert abs(ratios[-1] - 4) < 0.01


def test_drivers_require_fresh_wrappers():
    wrapper = make_wrapper(three_summer_adt(), FULL_REPLAY)
    wrapper.insert_update(1, three_summer_adt().update("set_a", (1,)))
    with pytest.raises(StateError):
        solve_3sum_retro(ThreeSumInstance((1,), (2,), (-3,)), wrapper)


def test_hygiene_violation_detected():
    class Leaky:
        def __init__(self):
            self.inner = make_wrapper(three_summer_adt(), FULL_REPLAY)
            self.adt = self.inner.adt
            self.timeline = self.inner.timeline
            self.retro_op_count = 0

        def insert_update(self, k, call):
            self.inner.insert_update(k, call)

        def delete_update(self, k):
            self.inner.delete_update(len(self.inner.timeline))

        def query_present(self, q):
            return self.inner.query_present(q)

    with pytest.raises(StateError):
        solve_3sum_retro(generate_instance("3sum", 9, seed=1), Leaky())


@pytest.mark.parametrize("problem", ["circuitsat", "minplus", "3sum"])
def test_generator_is_deterministic(problem):
    assert generate_instance(problem, 9, 5, True) == generate_instance(problem, 9, 5, True)
    assert generate_instance(problem, 9, 5) != generate_instance(problem, 9, 6)


def test_generator_contracts():
    for seed in range(20):
        assert solve_3sum_bruteforce(generate_instance("3sum", 25, seed, planted=True)) is True
        assert solve_circuitsat_bruteforce(generate_instance("circuitsat", 8, seed, planted=True)) is True
        assert generate_instance("circuitsat", 8, seed).circuit.size <= 64
        mp = generate_instance("minplus", 6, seed)
        assert all(-100 <= x <= 100 for row in mp.matrix + mp.vectors for x in row)
    for problem, n in (("circuitsat", 21), ("minplus", 129), ("3sum", 10_001), ("3sum", 0)):
        with pytest.raises(CapExceededError):
            generate_instance(problem, n, 0)
    with pytest.raises(ArgumentError):
        generate_instance("apsp", 4, 0)


@pytest.mark.parametrize("problem, n", [("circuitsat", 6), ("minplus", 5), ("3sum", 7)])
def test_instance_text_round_trip(problem, n):
    inst = generate_instance(problem, n, seed=2, planted=True)
    assert load_instance(problem, dump_instance(inst)) == inst


def test_instance_text_formats():
    assert dump_instance(OnlineMinPlusInstance(((0,),), ((5,),))) == "MINPLUS 1\n0\n5\n"
    assert dump_instance(ThreeSumInstance((1,), (2,), (-3,))) == "3SUM 1\n1\n2\n-3\n"


@pytest.mark.parametrize(
    "problem, text, line",
    [
        ("minplus", "MINPLUS 2\n1 2\n3 4\n5 6\n", 4),
        ("minplus", "MINPLUS 1\n1 2\n3\n", 2),
        ("minplus", "MINPLUS x\n", 1),
        ("3sum", "3SUM 2\n1 2\n3 4\n5 six\n", 4),
        ("3sum", "TWOSUM 1\n1\n2\n3\n", 1),
        ("3sum", "3SUM 1\n1\n2\n", 3),
    ],
)
def test_instance_format_errors(problem, text, line):
    with pytest.raises(InstanceFormatError) as info:
        load_instance(problem, text)
    assert info.value.line == line
