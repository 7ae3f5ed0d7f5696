import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mta import zoo
from mta.asyncalg import async_closure
from mta.core import AutomatonError, MultiTapeAutomaton, accepts
from mta.nfa import NFA
from mta.syncalg import (
    TrackAutomaton,
    column_alphabet,
    conv_automaton,
    decide,
    deconv_automaton,
    determinize_sync,
    is_synchronous,
    padding_validity,
    sync_boolean,
    sync_regular,
)
from mta.wordops import convolve, enumerate_nwords, words_upto

import oracles

LXX = zoo.l_xx()
EMPTY = zoo.empty("ab", 2)
U4 = oracles.universe_of("ab", 2, 4)


def same(a, b, max_len=4):
    return oracles.language(a, max_len) == oracles.language(b, max_len)


def test_conv_of_lxx_is_the_diagonal():
    t = conv_automaton(LXX)
    for x in U4:
        assert t.accepts(x) == (x[0] == x[1])
    assert t.accepts_columns([("a", "a"), ("b", "b")])
    assert not t.accepts_columns([("a", "b")])


def test_conv_of_empty_and_one_tape():
    assert conv_automaton(EMPTY).shortest() is None
    a_star = MultiTapeAutomaton.build("ab", 1, [("q0", (">",), "q", (1,)), ("q", ("a",), "q", (1,))],
                                      "q0", ["q"])
    t = conv_automaton(a_star)
    assert [w for w in words_upto("ab", 3) if t.accepts((w,))] == ["", "a", "aa", "aaa"]


def test_conv_requires_synchronous():
    with pytest.raises(AutomatonError):
        conv_automaton(zoo.l_n2n())


def test_deconv_filters_ill_padded_words():
    cols = column_alphabet(LXX.alphabet, 2)
    # symbol after a pad on track 1
    bad = NFA.from_edges(cols, [(0, ("_", "a"), 1), (1, ("b", "a"), 2)], [0], [2])
    assert oracles.language(deconv_automaton(TrackAutomaton.restricted(bad, 2, "ab")), 3) == set()
    ok = NFA.from_edges(cols, [(0, ("_", "a"), 1)], [0], [1])
    assert oracles.language(deconv_automaton(TrackAutomaton.restricted(ok, 2, "ab")), 3) == {("", "a")}
    assert padding_validity(LXX.alphabet, 2) is padding_validity(LXX.alphabet, 2)


def test_conv_deconv_round_trip():
    assert same(deconv_automaton(conv_automaton(LXX)), LXX)
    assert same(deconv_automaton(conv_automaton(EMPTY)), EMPTY)


def test_boolean_identities():
    assert same(sync_boolean("intersect", LXX, LXX), LXX)
    comp = sync_boolean("complement", LXX)
    assert same(sync_boolean("complement", comp), LXX)
    assert same(sync_boolean("union", EMPTY, LXX), LXX)
    with pytest.raises(AutomatonError):
        sync_boolean("intersect", LXX, zoo.universe("abc", 2))


def test_regular_ops_examples():
    # reversal leaves the synchronous class, so the outer one is asynchronous
    assert same(async_closure("reverse", sync_regular("reverse", LXX)), LXX)
    proj = sync_regular("project", LXX, k=1)
    assert all(accepts(proj, (w,)) for w in words_upto("ab", 4))
    unit = zoo._finite("ab", [("", "")])
    assert oracles.language(sync_regular("star", unit), 3) == {("", "")}
    with pytest.raises(AutomatonError):
        sync_regular("project", LXX, k=3)


def test_determinize_examples():
    d = determinize_sync(LXX)
    assert d.is_deterministic and same(d, LXX)
    one = MultiTapeAutomaton.build(
        "a", 1,
        [("q0", (">",), "p0", (1,)), ("q0", (">",), "r0", (1,)),
         ("p0", ("a",), "p1", (1,)), ("p1", ("a",), "p0", (1,)),
         ("r0", ("a",), "r1", (1,)), ("r1", ("a",), "r2", (1,)), ("r2", ("a",), "r0", (1,))],
        "q0", ["p0", "r0"])
    d1 = determinize_sync(one)
    assert d1.is_deterministic
    for n in range(7):
        assert accepts(d1, ("a" * n,)) == (n % 2 == 0 or n % 3 == 0)
    assert same(determinize_sync(sync_boolean("union", LXX, LXX)), LXX)


def test_decisions():
    comp = sync_boolean("complement", LXX)
    assert decide("empty", EMPTY).answer
    assert decide("disjoint", LXX, comp).answer
    assert decide("equiv", LXX, determinize_sync(LXX)).answer
    assert decide("universal", sync_boolean("union", LXX, comp)).answer
    d = decide("subset", zoo.universe("ab", 2), LXX)
    assert not d.answer and d.witness[0] != d.witness[1]
    assert decide("finite", zoo.lang_e()).answer
    assert not decide("finite", LXX).answer


def test_is_synchronous_classification():
    assert is_synchronous(LXX)
    assert not is_synchronous(zoo.l_n2n())
    assert not is_synchronous(zoo.l_rho())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_boolean_ops_match_sets(s1, s2):
    a, b = oracles.random_sync_machine(s1), oracles.random_sync_machine(s2)
    la, lb = oracles.language(a, 3), oracles.language(b, 3)
    U = oracles.universe_of("ab", 2, 3)
    assert not oracles.agrees(sync_boolean("intersect", a, b), la & lb, U)
    assert not oracles.agrees(sync_boolean("union", a, b), la | lb, U)
    assert not oracles.agrees(sync_boolean("complement", a), U - la, U)
    assert decide("subset", sync_boolean("intersect", a, b), a).answer


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_track_membership_matches_machine(seed):
    t = oracles.random_track_automaton(seed)
    m = deconv_automaton(t)
    for x in enumerate_nwords("ab", 2, 3):
        assert t.accepts(x) == accepts(m, x)
        assert t.accepts_columns(convolve(x)) == t.accepts(x)
