"""Synchronous machines as regular languages over the padded column alphabet.

A synchronous n-tape machine is turned into a single-tape automaton
reading convolutions (columns over ``(alphabet + "_")^n``).  All closure
operations and decision procedures then reduce to ordinary regular
language constructions in :mod:`mta.nfa`, followed by the inverse
translation back into a multi-tape machine.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from mta import asyncalg
from mta.asyncalg import Decision
from mta.core import LEFT, PAD, RIGHT, Alphabet, AutomatonError, MultiTapeAutomaton, as_alphabet
from mta.nfa import EPSILON, NFA, product, union
from mta.synctransform import check_synchronized
from mta.wordops import convolve, deconvolve

BOOLEAN_OPS = ("complement", "intersect", "union")
REGULAR_OPS = ("concat", "star", "reverse", "project", "generalize")
DECISIONS = ("empty", "universal", "finite", "disjoint", "subset", "equiv")


@functools.lru_cache(maxsize=None)
def column_alphabet(alphabet: Alphabet, n: int) -> tuple:
    """Every column over ``alphabet + PAD`` with at least one real symbol."""
    letters = tuple(alphabet.symbols) + (PAD,)
    return tuple(c for c in itertools.product(letters, repeat=n) if any(x != PAD for x in c))


@functools.lru_cache(maxsize=None)
def padding_validity(alphabet: Alphabet, n: int) -> NFA:
    """DFA for well-padded column words: once a track pads, it pads forever.

    States are the sets of tracks that have ended, encoded as bit masks.
    """
    columns = column_alphabet(alphabet, n)
    edges = []
    for mask in range(1 << n):
        for col in columns:
            if any(mask >> k & 1 and col[k] != PAD for k in range(n)):
                continue
            new = mask | sum(1 << k for k in range(n) if col[k] == PAD)
            edges.append((mask, col, new))
    return NFA.from_edges(columns, edges, [0], range(1 << n), states=range(1 << n))


@dataclass(frozen=True)
class TrackAutomaton:
    """A single-tape automaton over n-track columns, accepting only well-padded words."""

    nfa: NFA
    arity: int
    alphabet: Alphabet

    @classmethod
    def restricted(cls, nfa: NFA, arity: int, alphabet) -> "TrackAutomaton":
        alphabet = as_alphabet(alphabet)
        return cls(product(nfa, padding_validity(alphabet, arity)), arity, alphabet)

    def accepts(self, x) -> bool:
        if len(x) != self.arity:
            raise AutomatonError(f"expected {self.arity} components, got {len(x)}")
        return self.nfa.accepts(convolve(x))

    def accepts_columns(self, columns) -> bool:
        return self.nfa.accepts(tuple(tuple(c) for c in columns))

    def shortest(self):
        word = self.nfa.shortest_word()
        return None if word is None else deconvolve(word, self.arity)

    @property
    def num_states(self) -> int:
        return self.nfa.num_states


def require_synchronous(machine: MultiTapeAutomaton) -> None:
    if not machine.one_way:
        raise AutomatonError("operand is not one-way")
    check = check_synchronized(machine, 0)
    if not check:
        inp = ", ".join(repr(w) for w in check.witness.input)
        raise AutomatonError(
            f"operand is not synchronous: heads {check.witness.tapes} separate on input <{inp}>"
        )


def is_synchronous(machine: MultiTapeAutomaton) -> bool:
    try:
        require_synchronous(machine)
    except AutomatonError:
        return False
    return True


_AHEAD = "L"  # still on the left marker
_AT = "A"  # on the current column's cell
_NEXT = "N"  # on the next, not yet read, column
_END = "E"  # on the right marker


def conv_automaton(machine: MultiTapeAutomaton) -> TrackAutomaton:
    """Track automaton accepting the convolutions of ``L(machine)``.

    Columns are read lazily: a transition that needs a cell no head has
    seen yet reads the next column, which is allowed only once every head
    has left the previous column.  A head that reads the right marker
    pins its track to padding from then on.
    """
    require_synchronous(machine)
    n = machine.tapes
    columns = column_alphabet(machine.alphabet, n)
    by_state: dict[str, list] = {}
    for src, syms, dst, moves in machine.transitions():
        by_state.setdefault(src, []).append((syms, dst, moves))

    start = (machine.initial, (_AHEAD,) * n, None)
    seen = {start}
    stack = [start]
    edges = []
    accepting = []
    while stack:
        node = stack.pop()
        q, status, col = node
        if q in machine.accepting and all(g in (_END, _NEXT) for g in status):
            accepting.append(node)
        for syms, dst, moves in by_state.get(q, ()):
            needs = any(g == _NEXT and c not in (LEFT, RIGHT) for g, c in zip(status, syms))
            if needs and any(g in (_AHEAD, _AT) for g in status):
                continue
            ok = True
            after = list(status)
            read = list(col) if col is not None else None
            if needs:
                read = [PAD if g == _END or c == RIGHT else c for g, c in zip(status, syms)]
            for k, (g, c) in enumerate(zip(status, syms)):
                if g == _AHEAD:
                    ok = c == LEFT
                elif g == _AT:
                    ok = c == read[k]
                elif g == _END:
                    ok = c == RIGHT
                elif c == RIGHT:
                    after[k] = _END
                elif c == LEFT:
                    ok = False
                else:
                    after[k] = _AT
                if not ok:
                    break
            if not ok:
                continue
            for k, d in enumerate(moves):
                if d == 1 and after[k] in (_AHEAD, _AT):
                    after[k] = _NEXT
                elif d != 0:
                    ok = False
            if not ok:
                continue
            after = tuple(after)
            keep = tuple(read) if _AT in after else None
            target = (dst, after, keep)
            edges.append((node, tuple(read) if needs else EPSILON, target))
            if target not in seen:
                seen.add(target)
                stack.append(target)
    nfa = NFA.from_edges(columns, edges, [start], accepting, states=[start])
    return TrackAutomaton.restricted(nfa, n, machine.alphabet)


def deconv_automaton(track: TrackAutomaton) -> MultiTapeAutomaton:
    """Synchronous machine whose heads read one column per step.

    A padded track cell is read as the right marker with the head left in
    place.
    """
    n = track.arity
    if n < 1:
        raise AutomatonError("arity must be at least 1")
    nfa = product(track.nfa, padding_validity(track.alphabet, n)).trim()

    def name(i):
        return f"#s{i}"

    transitions = [("#start", (LEFT,) * n, name(i), (1,) * n) for i in sorted(nfa.initial)]
    for (q, col), targets in sorted(nfa.delta.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        syms = tuple(RIGHT if c == PAD else c for c in col)
        moves = tuple(0 if c == PAD else 1 for c in col)
        for d in sorted(targets):
            transitions.append((name(q), syms, name(d), moves))
    states = ["#start"] + [name(i) for i in range(nfa.num_states)]
    # after the last column every head sits on the right marker
    accepting = [name(q) for q in sorted(nfa.accepting)]
    return MultiTapeAutomaton.build(
        track.alphabet, n, transitions, "#start", accepting, states=states, one_way=True
    )


def _check_pair(a: MultiTapeAutomaton, b: MultiTapeAutomaton) -> None:
    if a.tapes != b.tapes:
        raise AutomatonError(f"arity mismatch: {a.tapes} vs {b.tapes}")
    if a.alphabet != b.alphabet:
        raise AutomatonError("alphabet mismatch")


def _complement_track(t: TrackAutomaton) -> TrackAutomaton:
    return TrackAutomaton.restricted(t.nfa.complement(), t.arity, t.alphabet)


def sync_boolean(kind: str, a: MultiTapeAutomaton, b: MultiTapeAutomaton | None = None) -> MultiTapeAutomaton:
    """Complement (relative to all n-words), intersection or union."""
    if kind not in BOOLEAN_OPS:
        raise AutomatonError(f"unknown boolean operation {kind!r}")
    ta = conv_automaton(a)
    if kind == "complement":
        return deconv_automaton(_complement_track(ta))
    if b is None:
        raise AutomatonError(f"{kind} needs two operands")
    _check_pair(a, b)
    tb = conv_automaton(b)
    combine = product if kind == "intersect" else union
    return deconv_automaton(TrackAutomaton(combine(ta.nfa, tb.nfa), a.tapes, a.alphabet))


def _project_track(t: TrackAutomaton, k: int) -> TrackAutomaton:
    n = t.arity
    columns = column_alphabet(t.alphabet, n - 1)
    edges = []
    for (q, col), targets in t.nfa.delta.items():
        rest = col[: k - 1] + col[k:]
        sym = EPSILON if all(c == PAD for c in rest) else rest
        edges.extend((q, sym, d) for d in targets)
    nfa = NFA.from_edges(columns, edges, t.nfa.initial, t.nfa.accepting, states=t.nfa.initial)
    return TrackAutomaton.restricted(nfa, n - 1, t.alphabet)


def _check_k(machine: MultiTapeAutomaton, k) -> int:
    if machine.tapes < 2:
        raise AutomatonError("projection needs at least 2 tapes")
    if k is None or not 1 <= k <= machine.tapes:
        raise AutomatonError(f"tape index must be in 1..{machine.tapes}")
    return k


def sync_regular(kind: str, a: MultiTapeAutomaton, b: MultiTapeAutomaton | None = None,
                 k: int | None = None) -> MultiTapeAutomaton:
    """Componentwise concatenation, star, reversal; projection and generalization.

    Projection and generalization stay synchronous.  Concatenation, star
    and reversal are computed with the one-way constructions of
    :mod:`mta.asyncalg`, because the synchronous class is not closed under
    them (``{<a^i, ''>} . {<b^j, b^j>}`` is already asynchronous); the
    result is a one-way machine that need not be synchronous.
    """
    if kind not in REGULAR_OPS:
        raise AutomatonError(f"unknown operation {kind!r}")
    if kind == "project":
        k = _check_k(a, k)
        return deconv_automaton(_project_track(conv_automaton(a), k))
    if kind == "generalize":
        k = _check_k(a, k)
        inner = _project_track(_complement_track(conv_automaton(a)), k)
        return deconv_automaton(_complement_track(inner))
    require_synchronous(a)
    if kind == "concat":
        if b is None:
            raise AutomatonError("concat needs two operands")
        _check_pair(a, b)
        require_synchronous(b)
        return asyncalg.async_closure("concat", a, b)
    return asyncalg.async_closure(kind, a)


def determinize_sync(machine: MultiTapeAutomaton) -> MultiTapeAutomaton:
    """Deterministic synchronous machine via the subset construction on columns."""
    t = conv_automaton(machine)
    return deconv_automaton(TrackAutomaton(t.nfa.determinize(), t.arity, t.alphabet))


def decide(kind: str, a: MultiTapeAutomaton, b: MultiTapeAutomaton | None = None) -> Decision:
    """Emptiness, universality, finiteness, disjointness, inclusion, equivalence.

    Witnesses are shortest by convolution length: a member for non-empty,
    a non-member for non-universal, a common member for non-disjoint, a
    member of ``a`` outside ``b`` for non-inclusion and a member of the
    symmetric difference for non-equivalence.
    """
    if kind not in DECISIONS:
        raise AutomatonError(f"unknown decision problem {kind!r}")
    ta = conv_automaton(a)
    if kind == "empty":
        w = ta.shortest()
        return Decision(w is None, w)
    if kind == "universal":
        w = _complement_track(ta).shortest()
        return Decision(w is None, w)
    if kind == "finite":
        return Decision(ta.nfa.is_finite())
    if b is None:
        raise AutomatonError(f"{kind} needs two operands")
    _check_pair(a, b)
    tb = conv_automaton(b)
    if kind == "disjoint":
        w = TrackAutomaton(product(ta.nfa, tb.nfa), a.tapes, a.alphabet).shortest()
        return Decision(w is None, w)
    left = TrackAutomaton(product(ta.nfa, _complement_track(tb).nfa), a.tapes, a.alphabet).shortest()
    if kind == "subset":
        return Decision(left is None, left)
    right = TrackAutomaton(product(tb.nfa, _complement_track(ta).nfa), a.tapes, a.alphabet).shortest()
    found = [w for w in (left, right) if w is not None]
    if not found:
        return Decision(True)
    return Decision(False, min(found, key=lambda w: (len(convolve(w)), w)))
