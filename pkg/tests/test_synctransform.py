import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mta import zoo
from mta.core import AutomatonError, MultiTapeAutomaton, accepts
from mta.synctransform import (
    check_synchronized,
    check_synchronized_det,
    head_spread,
    replay_witness,
    size_bound,
    synchronize,
)

import oracles


def test_l_n2n_witness_at_s1():
    res = check_synchronized(zoo.l_n2n(), 1)
    assert not res and res.witness.input == ("aa", "aaaa")
    assert res.witness.spread == 2
    assert replay_witness(zoo.l_n2n(), res.witness)


def test_single_tape_always_synchronized():
    m = MultiTapeAutomaton.build("a", 1, [("q0", (">",), "q", (1,)), ("q", ("a",), "q", (1,))], "q0", ["q"])
    assert all(check_synchronized(m, s) for s in range(3))
    assert check_synchronized_det(m) == 0


def test_lag_levels():
    for s in (1, 2):
        m = zoo.lagged_xx(s)
        assert [bool(check_synchronized(m, t)) for t in range(s + 2)] == [t >= s for t in range(s + 2)]
        assert check_synchronized_det(m) == s


def test_det_check_needs_determinism():
    nondet = zoo.lang_e()
    if not nondet.is_deterministic:
        with pytest.raises(AutomatonError):
            check_synchronized_det(nondet)
    with pytest.raises(AutomatonError):
        check_synchronized(zoo.l_rho(), 0)


def test_synchronize_identity_on_synchronous():
    lxx = zoo.l_xx()
    out = synchronize(lxx, 2)
    assert oracles.language(out, 4) == oracles.language(lxx, 4)
    assert out.is_deterministic


def test_head_spread():
    assert head_spread(zoo.l_n2n(), ("aa", "aaaa")) >= 2
    assert head_spread(zoo.l_xx(), ("ab", "ab")) == 0
    # rejected inputs still count: both heads advance together until stuck
    assert head_spread(zoo.l_xx(), ("ab", "ba")) == 0


def test_size_bound_grows_with_s():
    m = zoo.lagged_xx(1)
    assert size_bound(m, 1) < size_bound(m, 2)
    with pytest.raises(AutomatonError):
        size_bound(m, -1)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2))
def test_synchronize_random_synchronous_sources(seed, s):
    m = oracles.random_sync_machine(seed, max_states=3)
    out = synchronize(m, s)
    for x in oracles.universe_of("ab", 2, 3):
        assert accepts(out, x) == accepts(m, x)
    assert check_synchronized(out, 0)
