import pytest
from hypothesis import given, settings

from mta import zoo
from mta.core import (
    Alphabet,
    AutomatonError,
    MultiTapeAutomaton,
    accepts,
    from_taped_model,
    shortest_taped_word,
    simulate,
    simulate_taped,
    to_taped_model,
    validate,
    validate_taped,
)
from mta.wordops import enumerate_nwords

from strategies import def1_machines, nwords, taped_machines


def test_alphabet_rejects_markers_and_duplicates():
    with pytest.raises(AutomatonError):
        Alphabet((">", "a"))
    with pytest.raises(AutomatonError):
        Alphabet(("a", "a"))
    assert Alphabet(("a", "b")).extended[-2:] == (">", "<")


def test_l_n2n_run_trace():
    m = zoo.l_n2n()
    res = simulate(m, ("aa", "aaaa"))
    assert res.accepted
    assert res.trace[0] == ("init", (0, 0))
    assert res.trace[-1] == ("done", (3, 5))
    assert not simulate(m, ("a", "aaa"))


def test_word_checks():
    m = zoo.l_xx()
    with pytest.raises(AutomatonError):
        accepts(m, ("a",))
    with pytest.raises(AutomatonError):
        accepts(m, ("c", "c"))


def test_two_way_reversal():
    m = zoo.l_rho()
    assert not m.one_way
    assert accepts(m, ("01#", "#10"))
    assert not accepts(m, ("01", "01"))
    assert accepts(m, ("", ""))


def test_validate_reports_each_problem():
    # the raw constructor skips the state bookkeeping done by build()
    m = MultiTapeAutomaton(
        Alphabet(("a", "b")), 2, ("q0", "q1"),
        {("q0", (">", "<")): frozenset({("q1", (-1, 1))}), ("q0", ("a",)): frozenset({("q2", (1,))})},
        "q0", frozenset({"zz"}), True,
    )
    text = "\n".join(validate(m))
    assert "dangling state 'q2'" in text
    assert "dangling state: accepting state 'zz'" in text
    assert "marker-crossing at q0" in text
    assert "arity mismatch" in text
    assert validate(zoo.l_n2n()) == []


def test_validate_taped():
    assert validate_taped(zoo.taped_l_m()) == []


@pytest.mark.parametrize("name", ["L_n2n", "L_xx", "L_m", "EstarGHstar", "D", "lag1_xx"])
def test_taped_round_trip_preserves_language(name):
    m = zoo.zoo_build(name)
    t = to_taped_model(m)
    back = from_taped_model(t)
    alphabet = m.alphabet.symbols
    max_len = 4 if len(alphabet) <= 2 else 3
    for x in enumerate_nwords(alphabet, m.tapes, max_len):
        assert accepts(m, x) == simulate_taped(t, x) == accepts(back, x), x


def test_shortest_taped_word():
    assert shortest_taped_word(zoo.taped_l_m()) == ("b", "b")
    assert shortest_taped_word(zoo.taped_a_star()) == ("",)


@settings(max_examples=60, deadline=None)
@given(def1_machines(two_way=True), nwords(2, 3))
def test_bfs_agrees_with_kernel(m, x):
    assert simulate(m, x).accepted == accepts(m, x)


@settings(max_examples=60, deadline=None)
@given(def1_machines(), nwords(2, 3))
def test_taped_conversion_property(m, x):
    assert simulate_taped(to_taped_model(m), x) == accepts(m, x)


@settings(max_examples=60, deadline=None)
@given(taped_machines(), nwords(2, 3))
def test_from_taped_property(t, x):
    assert accepts(from_taped_model(t), x) == simulate_taped(t, x)


@settings(max_examples=40, deadline=None)
@given(taped_machines())
def test_shortest_word_is_accepted(t):
    w = shortest_taped_word(t)
    if w is not None:
        assert simulate_taped(t, w)
