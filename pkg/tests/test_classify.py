import json

import pytest
from hypothesis import given, settings, strategies as st

from qbnut.classify import FORBIDDEN_MOD_12, FORBIDDEN_MOD_30, classify, classify_b1, classify_b2, classify_b3
from qbnut.graphs import SpecError, build_graph, make_spec, parse_spec
from qbnut.kernel import nut_oracle
from qbnut.numtheory import is_prime


@pytest.mark.parametrize(
    "args,nut,cond",
    [((6, 2, 2), True, None), ((8, 2, 2), False, "i"), ((10, 2, 4), False, "iv"), ((10, 1, 2), False, "ii"), ((30, 6, 12), False, "iii")],
)
def test_b1(args, nut, cond):
    v = classify_b1(*args)
    assert v.is_nut is nut and v.condition == cond
    assert nut_oracle(build_graph(v.spec)) is nut


def test_b1_witnesses():
    assert classify_b1(30, 6, 12).witness_f == 6
    assert classify_b1(10, 2, 4).witness_f == 10


@pytest.mark.parametrize(
    "args,nut,cond,witness",
    [
        ((24, 4, 6, 3), False, "iii", 12),
        ((30, 1, 4, 6), False, "iv", 30),
        ((4, 1, 1, 1), True, None, None),
        ((6, 2, 2, 2), False, "i", 2),
        ((8, 1, 2, 2), False, "ii", 4),
    ],
)
def test_b2(args, nut, cond, witness):
    v = classify_b2(*args)
    assert (v.is_nut, v.condition, v.witness_f) == (nut, cond, witness)
    assert nut_oracle(build_graph(v.spec)) is nut


@pytest.mark.parametrize("m", [5, 7, 11, 13, 17])
def test_b2_prime_m_exception(m):
    v = classify_b2(m, 1, 1, 2)
    assert not v.is_nut and v.condition == "i"


@pytest.mark.parametrize("args,nut,cond", [((10, 1, 3), True, None), ((8, 1, 3), False, "iii"), ((6, 1, 5), True, None), ((12, 2, 4), False, "i"), ((12, 1, 3), False, "ii")])
def test_b3(args, nut, cond):
    v = classify_b3(*args)
    assert v.is_nut is nut and v.condition == cond
    assert nut_oracle(build_graph(v.spec)) is nut


def test_dispatch():
    v = classify(parse_spec("B4(4;1,2,3)"))
    assert not v.is_nut and v.reason_code == "bipartite-class"
    assert classify(parse_spec("B2(6;1,2,3)")).is_nut
    assert not classify(parse_spec("B1(8;2,2)")).is_nut


def test_record_keys():
    rec = classify(parse_spec("B2(24;4,6,3)")).to_record()
    assert rec == {"class": "B2", "m": 24, "a": 4, "b": 6, "c": 3, "is_nut": False, "reason": "violated-(iii)", "witness_f": 12}
    rec = classify(parse_spec("B2(4;1,1,1)")).to_record()
    assert "witness_f" not in rec and rec["reason"] == "conditions-satisfied"
    json.dumps(rec)


def test_invalid_spec_rejected():
    with pytest.raises(SpecError):
        classify_b2(6, 3, 1, 1)


def test_forbidden_sets_are_sign_closed():
    for table, f in ((FORBIDDEN_MOD_12, 12), (FORBIDDEN_MOD_30, 30)):
        for s, d, c in table:
            assert (-s % f, -d % f, -c % f) in table
            assert (d, s, c) in table


@settings(max_examples=120, deadline=None)
@given(st.integers(3, 20).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, (m - 1) // 2), st.integers(1, (m - 1) // 2), st.integers(1, m // 2))))
def test_b2_verdict_matches_kernel(params):
    m, a, b, c = params
    a, b = sorted((a, b))
    spec = make_spec("B2", m, a, b, c)
    assert classify(spec).is_nut == nut_oracle(build_graph(spec))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.data())
def test_b1_b3_verdicts_match_kernel(h, data):
    m = 2 * h
    a = data.draw(st.integers(1, (m - 1) // 2))
    b = data.draw(st.integers(a, (m - 1) // 2))
    spec = make_spec("B1", m, a, b)
    assert classify(spec).is_nut == nut_oracle(build_graph(spec))
    a = data.draw(st.integers(1, m - 3))
    b = data.draw(st.integers(a + 1, m - 1).filter(lambda x: (x - a) % 2 == 0))
    spec = make_spec("B3", m, a, b)
    try:
        g = build_graph(spec)
    except SpecError:
        return
    assert classify(spec).is_nut == nut_oracle(g)


@given(st.integers(5, 60).filter(is_prime), st.data())
def test_prime_m_only_112_fails(m, data):
    b = data.draw(st.integers(1, (m - 1) // 2))
    c = data.draw(st.integers(1, m // 2))
    assert classify_b2(m, 1, b, c).is_nut == ((b, c) != (1, 2))
