import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mta import zoo
from mta.asyncalg import async_closure, complement_det, decide_empty_async, decide_finite_async, project_tape
from mta.core import AutomatonError, MultiTapeAutomaton, accepts, simulate
from mta.wordops import words_upto

import oracles


def test_union_of_e_and_h():
    u = async_closure("union", zoo.lang_e(), zoo.lang_h())
    assert accepts(u, ("a", "a")) and accepts(u, ("a", ""))
    assert not accepts(u, ("a", "b"))


def widen(m, alphabet):
    return MultiTapeAutomaton.build(alphabet, m.tapes, m.transitions(), m.initial, m.accepting,
                                    states=m.states)


def test_estar_g_hstar_from_parts():
    e, g, h = (widen(m, "abc") for m in (zoo.lang_e(), zoo.lang_g(), zoo.lang_h()))
    e_star = async_closure("star", e)
    h_star = async_closure("star", h)
    built = async_closure("concat", e_star, async_closure("concat", g, h_star))
    assert oracles.language(built, 3) == zoo.predicate_language("EstarGHstar", 3)
    twice = async_closure("reverse", async_closure("reverse", zoo.estar_g_hstar()))
    assert oracles.language(twice, 3) == zoo.predicate_language("EstarGHstar", 3)


def test_star_of_empty_is_unit():
    assert oracles.language(async_closure("star", zoo.empty("ab", 2)), 3) == {("", "")}


def test_closures_of_asynchronous_machines():
    fig1 = zoo.l_n2n()
    lang = oracles.language(fig1, 6)
    star = async_closure("star", fig1)
    assert not oracles.agrees(star, oracles.star_set(lang, 2, 6), oracles.universe_of("a", 2, 6))
    rev = async_closure("reverse", zoo.l_m())
    assert oracles.language(rev, 3) == oracles.reverse_set(oracles.language(zoo.l_m(), 3))


def test_projection_examples():
    p = project_tape(zoo.l_xx(), 2)
    assert all(accepts(p, (w,)) for w in words_upto("ab", 4))
    q = project_tape(zoo.estar_g_hstar(), 1)
    for w in words_upto("abc", 4):
        assert accepts(q, (w,)) == (w.endswith("c") and "c" not in w[:-1])
    assert oracles.language(project_tape(zoo.empty("ab", 2), 1), 3) == set()
    with pytest.raises(AutomatonError):
        project_tape(zoo.l_rho(), 1)


def test_complement_det_examples():
    lxx = zoo.l_xx()
    assert oracles.language(complement_det(complement_det(lxx)), 3) == oracles.language(lxx, 3)
    assert oracles.language(complement_det(zoo.universe("ab", 2)), 3) == set()
    assert accepts(complement_det(lxx), ("a", "b"))
    fig1 = zoo.l_n2n()
    comp = complement_det(fig1)
    for x in oracles.universe_of("a", 2, 6):
        assert accepts(comp, x) != accepts(fig1, x)


def test_emptiness_examples():
    d = decide_empty_async(zoo.l_m())
    assert not d.answer and d.witness == ("b", "b")
    assert decide_empty_async(zoo.l_n2n()).witness == ("", "")
    unreachable = zoo.l_xx().with_accepting([])
    assert decide_empty_async(unreachable).answer


def test_finiteness_examples():
    assert not decide_finite_async(zoo.l_n2n()).answer
    assert decide_finite_async(zoo.empty("ab", 2)).answer
    assert decide_finite_async(zoo._finite("ab", [("a", "b")])).answer


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_decisions_match_guess_oracle(seed):
    a = oracles.random_sync_machine(seed, max_states=3)
    b = oracles.random_sync_machine(seed + 1, max_states=3)
    m = async_closure("concat", a, b)
    empty = decide_empty_async(m)
    assert empty.answer == oracles.guess_emptiness(m)[0]
    if empty.witness is not None:
        assert simulate(m, empty.witness)
    assert decide_finite_async(m).answer == oracles.guess_finiteness(m)
