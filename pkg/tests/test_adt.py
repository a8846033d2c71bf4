import pytest
from hypothesis import given, settings, strategies as st

from retroactive.adt import (
    QUERY,
    UNDEFINED,
    UPDATE,
    OperationCall,
    Timeline,
    decode_value,
    dictionary_adt,
    encode_value,
    replay_oracle,
)
from retroactive.circuit import Circuit
from retroactive.errors import ArgumentError, PositionError

D = dictionary_adt()


def ins(x):
    return D.update("insert", x)


def dele(x):
    return D.update("delete", x)


def contains(x):
    return D.query("contains", x)


@pytest.mark.parametrize(
    "timeline, x, expected",
    [
        ([ins(5)], 5, True),
        ([], 7, False),
        ([ins(5), dele(5), ins(5)], 5, True),
        ([ins(3), dele(3)], 3, False),
        ([dele(9)], 9, False),
        ([ins(1), ins(2)], 2, True),
    ],
)
def test_replay_oracle_dictionary(timeline, x, expected):
    assert replay_oracle(D, timeline, contains(x)) is expected


def test_replay_oracle_rejects_malformed_calls():
    with pytest.raises(ArgumentError):
        replay_oracle(D, [OperationCall("insert", UPDATE, ("x",))], contains(1))
    with pytest.raises(ArgumentError):
        replay_oracle(D, [OperationCall("push", UPDATE, (1,))], contains(1))
    with pytest.raises(ArgumentError):
        replay_oracle(D, [], ins(1))
    with pytest.raises(ArgumentError):
        D.update("insert", True)


def test_timeline_positions_are_one_indexed():
    t = Timeline()
    t.insert(1, ins(1))
    t.insert(1, ins(0))
    t.insert(3, ins(2))
    assert [c.args[0] for c in t] == [0, 1, 2]
    assert t.at(1) == ins(0)
    assert t.prefix(2) == (ins(0), ins(1))
    assert t.delete(2) == ins(1)
    with pytest.raises(PositionError):
        t.insert(4, ins(9))
    with pytest.raises(PositionError):
        t.delete(0)
    with pytest.raises(PositionError):
        t.prefix(3)
    with pytest.raises(ArgumentError):
        t.insert(1, contains(1))


values = st.one_of(
    st.integers(-(2**70), 2**70),
    st.text("01", max_size=12),
    st.lists(st.integers(-1000, 1000), max_size=6).map(tuple),
)


@given(values)
def test_value_tokens_round_trip(value):
    assert decode_value(encode_value(value)) == value


def test_circuit_token_round_trip():
    c = Circuit(2, (("AND", 0, 1), ("NOT", 2)), 3)
    call = OperationCall("initialize", UPDATE, (c,))
    assert OperationCall.parse(str(call)) == call


@given(st.lists(st.tuples(st.sampled_from(["insert", "delete"]), st.integers(-50, 50)), max_size=20))
def test_timeline_text_round_trip(ops):
    t = Timeline(D.update(op, x) for op, x in ops)
    text = t.dumps()
    assert len(text.splitlines()) == len(ops)
    assert Timeline.loads(text, D) == t


def test_timeline_text_format():
    t = Timeline([ins(5), dele(-3)])
    assert t.dumps() == "insert 5\ndelete -3\n"
    with pytest.raises(ArgumentError):
        Timeline.loads("insert five\n")
    with pytest.raises(ArgumentError):
        Timeline.loads("push 1\n", D)


dict_calls = st.lists(
    st.tuples(st.sampled_from(["insert", "delete"]), st.integers(0, 4)).map(lambda p: D.update(*p)),
    max_size=15,
)


@given(dict_calls, st.integers(0, 4))
def test_replay_is_deterministic(calls, x):
    assert replay_oracle(D, calls, contains(x)) == replay_oracle(D, calls, contains(x))


@given(dict_calls, st.lists(st.integers(0, 4), max_size=5), st.integers(0, 4))
def test_queries_are_pure(calls, extra, x):
    instance = D.new()
    for call in calls:
        instance.apply_update(call)
    for y in extra:
        instance.apply_query(contains(y))
    assert instance.apply_query(contains(x)) == replay_oracle(D, calls, contains(x))


@given(dict_calls, dict_calls, st.data())
def test_oracle_on_prefix_ignores_suffix(calls, suffix, data):
    k = data.draw(st.integers(0, len(calls)))
    x = data.draw(st.integers(0, 4))
    full = Timeline(calls + suffix)
    assert replay_oracle(D, full.prefix(k), contains(x)) == replay_oracle(D, calls[:k], contains(x))


def test_undefined_marker():
    assert repr(UNDEFINED) == "UNDEFINED"
    assert OperationCall("contains", QUERY, (1,)).kind == QUERY
