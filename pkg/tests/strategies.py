"""Hypothesis strategies for random machines and n-words."""

from hypothesis import strategies as st

from mta.core import LEFT, RIGHT, MultiTapeAutomaton, TapedAutomaton

SIGMA = ("a", "b")


def nwords(n, max_len=4, alphabet=SIGMA):
    word = st.text(alphabet="".join(alphabet), max_size=max_len)
    return st.tuples(*[word] * n)


@st.composite
def def1_machines(draw, tapes=2, max_states=4, two_way=False, max_transitions=10):
    size = draw(st.integers(1, max_states))
    states = [f"q{i}" for i in range(size)]
    ext = SIGMA + (LEFT, RIGHT)
    moves_for = {LEFT: (0, 1), RIGHT: (-1, 0) if two_way else (0,)}
    transitions = []
    for _ in range(draw(st.integers(0, max_transitions))):
        syms = tuple(draw(st.sampled_from(ext)) for _ in range(tapes))
        moves = tuple(
            draw(st.sampled_from(moves_for.get(s, (-1, 0, 1) if two_way else (0, 1))))
            for s in syms
        )
        transitions.append((draw(st.sampled_from(states)), syms, draw(st.sampled_from(states)), moves))
    accepting = draw(st.sets(st.sampled_from(states)))
    return MultiTapeAutomaton.build(SIGMA, tapes, transitions, "q0", accepting, states=states)


@st.composite
def taped_machines(draw, tape_ids=("t1", "t2"), max_states=4, max_transitions=10):
    size = draw(st.integers(1, max_states))
    states = [f"p{i}" for i in range(size)]
    tape_of = {q: draw(st.sampled_from(tape_ids)) for q in states}
    syms = SIGMA + (RIGHT,)
    transitions = [
        (draw(st.sampled_from(states)), draw(st.sampled_from(syms)), draw(st.sampled_from(states)))
        for _ in range(draw(st.integers(0, max_transitions)))
    ]
    initial = draw(st.sets(st.sampled_from(states), min_size=1))
    accepting = draw(st.sets(st.sampled_from(states)))
    return TapedAutomaton.build(SIGMA, list(tape_ids), tape_of, transitions, initial, accepting,
                                states=states)
