from hypothesis import given, settings

from mta import zoo
from mta.core import TapedAutomaton, simulate_taped
from mta.intersect import Composite, _Run, async_next, cons, intersect, intersect_report

import oracles
from strategies import taped_machines


def chain():
    return TapedAutomaton.build("ab", ["t1", "t2"], {"q": "t1", "r": "t2"}, [("q", "a", "r")], ["q"], ["r"])


def test_async_next_single_tape():
    m = zoo.taped_a_star()
    q = sorted(m.states)[0]
    assert async_next(m, q) == [(q, ((),))]


def test_async_next_chain():
    assert async_next(chain(), "q") == [("q", ((), ())), ("r", ((("q", "a", "r"),), ()))]


def test_async_next_two_shortest_paths():
    m = TapedAutomaton.build("ab", ["t1", "t2"], {"q": "t1", "u": "t1", "v": "t1", "r": "t2"},
                             [("q", "a", "u"), ("q", "b", "v"), ("u", "a", "r"), ("v", "b", "r")],
                             ["q"], ["r"])
    delayed = [d for d in async_next(m, "q") if d[0] == "r"]
    assert len(delayed) == 2
    assert {tuple(t[1] for t in d[1][0]) for d in delayed} == {("a", "a"), ("b", "b")}


def test_cons():
    a, b, c = ("x", "a", "y"), ("x", "b", "y"), ("x", "c", "y")
    assert cons((), (a, b))
    assert cons((a, b), (a,))
    assert not cons((a, b), (a, c))


def test_new_states():
    a, b = chain(), chain()
    run = _Run(a, b)
    bad = run.new_states([("r", ((("q", "a", "r"),), ()))], [("r", ((("q", "b", "r"),), ()))])
    assert bad == []
    plain = run.new_states([("q", ((), ()))], [("q", ((), ()))])
    assert plain == [Composite("q", "q", "t1", ((), ()), ((), ())), Composite("q", "q", "t2", ((), ()), ((), ()))]
    free = _Run(zoo.taped_a_star(), zoo.taped_b_star())
    p = [(q, ((),)) for q in zoo.taped_a_star().states]
    q = [(s, ((),)) for s in zoo.taped_b_star().states]
    assert len(free.new_states(p, q)) == len(p) * len(q) * 2


def test_compose_with_delay_prefix():
    run = _Run(chain(), chain())
    d = (("q", "a", "r"),)
    run.compose([("q", ((), ()))], [("q", ((), ()))], [d, ()], [(), ()], "a", "src")
    assert all(r.h[0] == d for _, _, r in run.delta)
    before = set(run.delta)
    run.compose([("q", ((), ()))], [("q", ((), ()))], [d, ()], [(), ()], "a", "src")
    assert run.delta == before


def test_free_combination_complete():
    res = intersect(zoo.taped_a_star(), zoo.taped_b_star(), 100, 4)
    assert res.complete
    for i in range(4):
        for j in range(4):
            assert simulate_taped(res.automaton, ("a" * i, "b" * j))
    assert "complete" in intersect_report(res)


def test_reports_name_the_bound():
    res = intersect(zoo.taped_l_m(), zoo.taped_l_xx(), 50, 8)
    assert res.status == "truncated_states"
    assert "state bound 50" in intersect_report(res)
    pcp = intersect(*zoo.pcp_encode([("a", "b")]), 500, 6)
    assert "no accepting composite" in intersect_report(pcp)


@settings(max_examples=30, deadline=None)
@given(taped_machines(max_states=3, max_transitions=6), taped_machines(max_states=3, max_transitions=6))
def test_intersection_is_sound(a, b):
    res = intersect(a, b, 200, 4)
    for x in oracles.universe_of("ab", 2, 3):
        if simulate_taped(res.automaton, x):
            assert simulate_taped(a, x) and simulate_taped(b, x)
