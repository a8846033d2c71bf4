"""Differential verification suites.

Every suite compares an implementation against an independent reference:
retroactive wrappers against a plain-list model timeline plus the replay
oracle, the lazy adapter against ``query_at``, the hard ADTs against shadow
brute force over their whole history, and the reduction drivers against
exhaustive solvers. A failing random script is shrunk before it is reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .adt import Timeline, dictionary_adt, replay_oracle
from .circuit import eval_circuit
from .engine import STRATEGIES, Retroactive
from .errors import RetroError
from .hard import (
    circuit_counter_adt,
    min_plus,
    minplus_multiplier_adt,
    three_summer_adt,
)
from .instances import generate_instance, random_circuit
from .lazy import fully_from_partial, lazify
from .reductions import (
    solve_3sum_bruteforce,
    solve_3sum_retro,
    solve_circuitsat_bruteforce,
    solve_circuitsat_retro,
    solve_online_minplus_naive,
    solve_online_minplus_retro,
)

REDUCTION_SIZES = {
    "circuitsat": (4, 6, 8, 10),
    "minplus": (4, 9, 16, 25),
    "3sum": (9, 16, 25, 100),
}
SUITES = ("wrapper", "lazy", "adts", "circuitsat", "minplus", "3sum")


@dataclass
class VerifyConfig:
    problems: tuple = SUITES
    seeds: int = 20
    scripts: int = 200
    script_length: int = 50
    strategies: tuple = STRATEGIES


@dataclass
class SuiteResult:
    name: str
    checked: int
    unit: str
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.checked} {self.unit}"
        if self.failures:
            text += f", {len(self.failures)} mismatches"
        return text


# -- retroactive scripts -------------------------------------------------------
#
# A script is a list of steps:
#   ("insert", k, call) | ("delete", k) | ("query", call) | ("query_at", k, call)

def format_script(script) -> str:
    lines = []
    for step in script:
        op, *rest = step
        lines.append(" ".join([op, *(str(p) for p in rest)]))
    return "\n".join(lines) + "\n"


def random_dictionary_script(rng: random.Random, length: int, values: int = 6) -> list:
    adt = dictionary_adt()
    m = 0
    script = []
    for _ in range(length):
        r = rng.random()
        x = rng.randrange(values)
        if m == 0 or r < 0.4:
            op = rng.choice(("insert", "delete"))
            script.append(("insert", rng.randint(1, m + 1), adt.update(op, x)))
            m += 1
        elif r < 0.6:
            script.append(("delete", rng.randint(1, m)))
            m -= 1
        elif r < 0.8:
            script.append(("query", adt.query("contains", x)))
        else:
            script.append(("query_at", rng.randint(0, m), adt.query("contains", x)))
    return script


def check_wrapper_script(adt, script, strategy) -> str | None:
    """Run ``script`` on a wrapper and on a list model; describe the first divergence.

    Returns None when the script agrees everywhere, or when it is not valid
    against the model (which happens to candidates produced while shrinking).
    """
    model = []
    wrapper = Retroactive(adt, strategy)
    for i, step in enumerate(script):
        op = step[0]
        if op == "insert":
            if not 1 <= step[1] <= len(model) + 1:
                return None
            model.insert(step[1] - 1, step[2])
        elif op == "delete":
            if not 1 <= step[1] <= len(model):
                return None
            del model[step[1] - 1]
        elif op == "query_at" and not 0 <= step[1] <= len(model):
            return None
        try:
            if op == "insert":
                wrapper.insert_update(step[1], step[2])
            elif op == "delete":
                wrapper.delete_update(step[1])
            elif op == "query":
                got, want = wrapper.query_present(step[1]), replay_oracle(adt, model, step[1])
                if got != want:
                    return f"step {i + 1}: {step[1]} answered {got!r}, oracle says {want!r}"
            else:
                got, want = wrapper.query_at(step[1], step[2]), replay_oracle(adt, model[: step[1]], step[2])
                if got != want:
                    return f"step {i + 1}: query_at {step[1]} {step[2]} answered {got!r}, oracle says {want!r}"
        except RetroError as exc:
            return f"step {i + 1}: wrapper raised {exc!r}"
        if wrapper.timeline.calls != tuple(model):
            return f"step {i + 1}: wrapper timeline diverged from the model"
    return None


def check_lazy_script(adt, script, strategy) -> str | None:
    """Adapter ``query(k, q)`` against a direct wrapper's ``query_at`` on the same timeline."""
    direct = Retroactive(adt, strategy)
    adapter = fully_from_partial(Retroactive(lazify(adt), strategy))
    for i, step in enumerate(script):
        op = step[0]
        m = len(direct.timeline)
        if op == "insert" and not 1 <= step[1] <= m + 1:
            return None
        if op == "delete" and not 1 <= step[1] <= m:
            return None
        if op == "query_at" and not 0 <= step[1] <= m:
            return None
        try:
            if op == "insert":
                direct.insert_update(step[1], step[2])
                adapter.insert_update(step[1], step[2])
            elif op == "delete":
                direct.delete_update(step[1])
                adapter.delete_update(step[1])
            else:
                k, query = (m, step[1]) if op == "query" else (step[1], step[2])
                before = adapter.timeline.calls
                got = adapter.query(k, query)
                want = direct.query_at(k, query)
                if got != want:
                    return f"step {i + 1}: adapter Query({k}, {query}) = {got!r}, query_at says {want!r}"
                if adapter.timeline.calls != before:
                    return f"step {i + 1}: adapter Query({k}, {query}) changed the timeline"
        except RetroError as exc:
            return f"step {i + 1}: raised {exc!r}"
        if adapter.timeline.calls != direct.timeline.calls:
            return f"step {i + 1}: adapter timeline diverged"
    return None


def shrink(script: list, fails: Callable[[list], bool]) -> list:
    """Greedy delta debugging: drop chunks of steps while the script still fails."""
    chunk = max(1, len(script) // 2)
    while True:
        i = 0
        while i < len(script):
            candidate = script[:i] + script[i + chunk:]
            if fails(candidate):
                script = candidate
            else:
                i += chunk
        if chunk == 1:
            return script
        chunk = max(1, chunk // 2)


def _script_suite(name, checker, config, rng_tag):
    adt = dictionary_adt()
    result = SuiteResult(name, config.scripts, f"scripts x {len(config.strategies)} strategies")
    for seed in range(config.scripts):
        rng = random.Random(f"{rng_tag}:{seed}")
        script = random_dictionary_script(rng, rng.randint(1, config.script_length))
        for strategy in config.strategies:
            if checker(adt, script, strategy) is None:
                continue
            small = shrink(script, lambda s: checker(adt, s, strategy) is not None)
            timeline = Timeline()
            for step in small:
                if step[0] == "insert":
                    timeline.insert(step[1], step[2])
                elif step[0] == "delete":
                    timeline.delete(step[1])
            result.failures.append(
                f"[{strategy}] {checker(adt, small, strategy)}\n"
                f"-- minimal script --\n{format_script(small)}"
                f"-- timeline --\n{timeline.dumps()}"
            )
            break
    return result


def suite_wrapper(config):
    return _script_suite("wrapper-vs-oracle", check_wrapper_script, config, "wrapper")


def suite_lazy(config):
    return _script_suite("lazy-adapter-vs-query_at", check_lazy_script, config, "lazy")


# -- hard ADTs against shadow histories ------------------------------------------

def _shadow_three_summer(rng):
    adt = three_summer_adt()
    instance = adt.new()
    lists = {"set_a": (), "set_b": (), "set_c": ()}
    seen = False
    for _ in range(rng.randint(1, 12)):
        op = rng.choice(tuple(lists))
        values = tuple(rng.randint(-6, 6) for _ in range(rng.randint(0, 3)))
        instance.apply_update(adt.update(op, values))
        lists[op] = values
        seen = seen or any(
            a + b + c == 0 for a in lists["set_a"] for b in lists["set_b"] for c in lists["set_c"]
        )
        got = instance.apply_query(adt.query("query"))
        if got != seen:
            return f"3-Summer answered {got}, history says {seen}"
    return None


def _shadow_circuit_counter(rng):
    adt = circuit_counter_adt()
    n = rng.randint(1, 6)
    circuit = random_circuit(rng, n, rng.randint(1, 16))
    instance = adt.new()
    instance.apply_update(adt.update("initialize", circuit))
    current, visited = "0" * n, set()
    for _ in range(rng.randint(1, 20)):
        if rng.random() < 0.3:
            current = "".join(rng.choice("01") for _ in range(n))
            instance.apply_update(adt.update("set", current))
        else:
            current = format((int(current, 2) + 1) % (1 << n), f"0{n}b")
            instance.apply_update(adt.update("increment"))
        visited.add(current)
        want = any(eval_circuit(circuit, s) for s in visited)
        got = instance.apply_query(adt.query("query"))
        if got != want:
            return f"Circuit Counter answered {got}, visited strings say {want}"
    return None


def _shadow_minplus(rng):
    adt = minplus_multiplier_adt()
    n = rng.randint(1, 4)
    instance = adt.new()
    calls, a, b, want = [], None, None, []
    for _ in range(rng.randint(1, 10)):
        v = tuple(rng.randint(-20, 20) for _ in range(n))
        op = rng.choice(("set_a", "set_b"))
        if op == "set_a":
            a = v
        else:
            b = v
        want.append(min_plus(a, b))
        call = adt.update(op, v)
        calls.append(call)
        instance.apply_update(call)
    got = instance.apply_query(adt.query("query"))
    if got != tuple(want):
        return f"(min,+) Multiplier history {got} != {tuple(want)}"
    if replay_oracle(adt, calls, adt.query("query")) != got:
        return "(min,+) Multiplier history is not reproducible"
    return None


def suite_adts(config):
    result = SuiteResult("adt-shadows", 3 * config.scripts, "histories")
    for seed in range(config.scripts):
        for check in (_shadow_three_summer, _shadow_circuit_counter, _shadow_minplus):
            message = check(random.Random(f"{check.__name__}:{seed}"))
            if message:
                result.failures.append(f"seed {seed}: {message}")
    return result


# -- reductions against brute force ----------------------------------------------

_REDUCTIONS = {
    "circuitsat": (circuit_counter_adt, solve_circuitsat_retro, solve_circuitsat_bruteforce),
    "minplus": (minplus_multiplier_adt, solve_online_minplus_retro, solve_online_minplus_naive),
    "3sum": (three_summer_adt, solve_3sum_retro, solve_3sum_bruteforce),
}


def suite_reduction(problem, config):
    make_adt, driver, oracle = _REDUCTIONS[problem]
    sizes = REDUCTION_SIZES[problem]
    result = SuiteResult(f"reduction-{problem}", config.seeds, f"instances x {len(config.strategies)} strategies")
    for seed in range(config.seeds):
        n = sizes[seed % len(sizes)]
        instance = generate_instance(problem, n, seed, planted=seed % 2 == 0)
        want = oracle(instance)
        for strategy in config.strategies:
            try:
                got = driver(instance, Retroactive(make_adt(), strategy))
            except RetroError as exc:
                got = f"error {exc!r}"
            if got != want:
                result.failures.append(f"[{strategy}] {problem} n={n} seed={seed}: driver {got!r}, oracle {want!r}")
    return result


def run_suites(config: VerifyConfig, emit=print) -> list:
    results = []
    for name in config.problems:
        if name == "wrapper":
            result = suite_wrapper(config)
        elif name == "lazy":
            result = suite_lazy(config)
        elif name == "adts":
            result = suite_adts(config)
        else:
            result = suite_reduction(name, config)
        emit(result.line())
        for failure in result.failures[:3]:
            emit(failure)
        results.append(result)
    return results
