"""Multi-tape automata: the two-way model, the taped-state model, simulation.

A :class:`MultiTapeAutomaton` reads ``n`` tapes, each delimited by the
left marker ``>`` and the right marker ``<``; a transition reads one symbol
under every head and moves each head by -1, 0 or +1.  A
:class:`TapedAutomaton` assigns every state to one tape and each transition
consumes a single symbol from that tape.  Both are immutable once built.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from mta import _kernels

LEFT = ">"
RIGHT = "<"
PAD = "_"
MARKERS = frozenset({LEFT, RIGHT, PAD})
GENERATED_PREFIX = "#"

# Dense transition tables above this many cells fall back to dict search.
_MAX_TABLE = 1 << 22

NWord = tuple  # tuple[str, ...]: one word per tape


class AutomatonError(ValueError):
    """Raised for malformed machines or inputs that do not fit a machine."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        syms = tuple(self.symbols)
        object.__setattr__(self, "symbols", syms)
        if not syms:
            raise AutomatonError("alphabet must be nonempty")
        if len(set(syms)) != len(syms):
            raise AutomatonError(f"duplicate symbols in alphabet {syms!r}")
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise AutomatonError(f"alphabet symbols must be single characters, got {s!r}")
            if s in MARKERS or s.isspace() or s in "(),=":
                raise AutomatonError(f"reserved character {s!r} in alphabet")

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, item):
        return item in self.symbols

    @property
    def extended(self) -> tuple[str, ...]:
        """The alphabet plus both end markers."""
        return self.symbols + (LEFT, RIGHT)


def as_alphabet(alphabet) -> Alphabet:
    if isinstance(alphabet, Alphabet):
        return alphabet
    if isinstance(alphabet, str):
        return Alphabet(tuple(alphabet))
    return Alphabet(tuple(alphabet))


@dataclass(frozen=True, eq=False)
class MultiTapeAutomaton:
    """Two-way nondeterministic automaton over ``tapes`` input tapes.

    ``delta`` maps ``(state, symbols)`` to a frozenset of ``(target, moves)``;
    pairs missing from the map have no moves.
    """

    alphabet: Alphabet
    tapes: int
    states: tuple[str, ...]
    delta: Mapping[tuple[str, tuple[str, ...]], frozenset]
    initial: str
    accepting: frozenset
    one_way: bool = True

    @classmethod
    def build(
        cls,
        alphabet,
        tapes: int,
        transitions: Iterable[tuple[str, Sequence[str], str, Sequence[int]]],
        initial: str,
        accepting: Iterable[str] = (),
        states: Iterable[str] | None = None,
        one_way: bool | None = None,
    ) -> "MultiTapeAutomaton":
        """Build from ``(source, symbols, target, moves)`` quadruples.

        States default to those mentioned; ``one_way`` defaults to whether
        every move is nonnegative.
        """
        delta: dict = {}
        seen = [] if states is None else list(states)
        known = set(seen)

        def note(q):
            if q not in known:
                known.add(q)
                seen.append(q)

        note(initial)
        all_moves_forward = True
        for src, syms, dst, moves in transitions:
            syms = tuple(syms)
            moves = tuple(int(d) for d in moves)
            if any(d < 0 for d in moves):
                all_moves_forward = False
            note(src)
            note(dst)
            delta.setdefault((src, syms), set()).add((dst, moves))
        accepting = frozenset(accepting)
        for q in sorted(accepting):
            note(q)
        if states is None:
            seen = sorted(seen, key=lambda q: (q != initial, q))
        return cls(
            alphabet=as_alphabet(alphabet),
            tapes=tapes,
            states=tuple(seen),
            delta={k: frozenset(v) for k, v in delta.items()},
            initial=initial,
            accepting=accepting,
            one_way=all_moves_forward if one_way is None else one_way,
        )

    def transitions(self):
        """All transitions as sorted ``(source, symbols, target, moves)``."""
        out = []
        for (src, syms), targets in self.delta.items():
            for dst, moves in targets:
                out.append((src, syms, dst, moves))
        out.sort()
        return out

    @property
    def is_deterministic(self) -> bool:
        return all(len(v) <= 1 for v in self.delta.values())

    def with_accepting(self, accepting) -> "MultiTapeAutomaton":
        return MultiTapeAutomaton(
            self.alphabet, self.tapes, self.states, self.delta, self.initial,
            frozenset(accepting), self.one_way,
        )

    def renamed(self, mapping: Mapping[str, str]) -> "MultiTapeAutomaton":
        return MultiTapeAutomaton.build(
            self.alphabet,
            self.tapes,
            [(mapping[s], y, mapping[d], m) for s, y, d, m in self.transitions()],
            mapping[self.initial],
            [mapping[q] for q in self.accepting],
            states=[mapping[q] for q in self.states],
            one_way=self.one_way,
        )

    @cached_property
    def _encoded(self):
        base = len(self.alphabet) + 2
        table_stride = base ** self.tapes
        if len(self.states) * table_stride > _MAX_TABLE:
            return None
        sym_code = {LEFT: 0, RIGHT: 1}
        for i, s in enumerate(self.alphabet):
            sym_code[s] = i + 2
        index = {q: i for i, q in enumerate(self.states)}
        buckets: dict[int, list] = {}
        for (src, syms), targets in self.delta.items():
            key = index[src] * table_stride
            for k, s in enumerate(syms):
                key += sym_code[s] * base ** k
            buckets.setdefault(key, []).extend(sorted(targets))
        offsets = np.zeros(len(self.states) * table_stride + 1, dtype=np.int64)
        targets, moves = [], []
        for key in sorted(buckets):
            offsets[key + 1] = len(buckets[key])
            for dst, mv in buckets[key]:
                targets.append(index[dst])
                moves.extend(mv)
        offsets = np.cumsum(offsets).astype(np.int64)
        accepting = np.array([q in self.accepting for q in self.states], dtype=np.uint8)
        return (
            base,
            offsets,
            np.array(targets, dtype=np.int64),
            np.array(moves, dtype=np.int8),
            index[self.initial],
            accepting,
            sym_code,
        )


@dataclass(frozen=True, eq=False)
class TapedAutomaton:
    """Automaton whose states each own one tape.

    A transition ``(q, sigma, q2)`` with ``sigma`` in the alphabet consumes
    one symbol from ``tape_of[q]``; with ``sigma == "<"`` it is enabled only
    when that tape is exhausted and consumes nothing.
    """

    alphabet: Alphabet
    tape_ids: tuple[str, ...]
    states: tuple[str, ...]
    tape_of: Mapping[str, str]
    delta: frozenset
    initial: frozenset
    accepting: frozenset

    @classmethod
    def build(cls, alphabet, tape_ids, tape_of, transitions, initial, accepting=(),
              states=None) -> "TapedAutomaton":
        tape_of = dict(tape_of)
        if states is None:
            states = sorted(tape_of)
        return cls(
            alphabet=as_alphabet(alphabet),
            tape_ids=tuple(tape_ids),
            states=tuple(states),
            tape_of=tape_of,
            delta=frozenset((s, y, d) for s, y, d in transitions),
            initial=frozenset(initial),
            accepting=frozenset(accepting),
        )

    @property
    def tapes(self) -> int:
        return len(self.tape_ids)

    def transitions(self):
        return sorted(self.delta)

    @cached_property
    def outgoing(self) -> dict:
        out: dict[str, list] = {q: [] for q in self.states}
        for src, sym, dst in sorted(self.delta):
            out[src].append((src, sym, dst))
        return out

    @cached_property
    def _encoded(self):
        nsym = len(self.alphabet) + 1
        sym_code = {s: i for i, s in enumerate(self.alphabet)}
        sym_code[RIGHT] = nsym - 1
        index = {q: i for i, q in enumerate(self.states)}
        tape_index = {t: i for i, t in enumerate(self.tape_ids)}
        counts = np.zeros(len(self.states) * nsym + 1, dtype=np.int64)
        buckets: dict[int, list] = {}
        for src, sym, dst in sorted(self.delta):
            key = index[src] * nsym + sym_code[sym]
            buckets.setdefault(key, []).append(index[dst])
        targets = []
        for key in sorted(buckets):
            counts[key + 1] = len(buckets[key])
            targets.extend(buckets[key])
        offsets = np.cumsum(counts).astype(np.int64)
        return (
            nsym,
            np.array([tape_index[self.tape_of[q]] for q in self.states], dtype=np.int64),
            offsets,
            np.array(targets, dtype=np.int64),
            sorted(index[q] for q in self.initial),
            np.array([q in self.accepting for q in self.states], dtype=np.uint8),
            sym_code,
        )


# ---------------------------------------------------------------- validation


def validate(machine: MultiTapeAutomaton) -> list[str]:
    """Return one diagnostic string per violated invariant (empty if valid)."""
    problems = []
    states = set(machine.states)
    if len(states) != len(machine.states):
        problems.append("duplicate state ids")
    if machine.tapes < 1:
        problems.append(f"tape count must be positive, got {machine.tapes}")
    if machine.initial not in states:
        problems.append(f"dangling state: initial state {machine.initial!r} is not declared")
    for q in sorted(machine.accepting - states):
        problems.append(f"dangling state: accepting state {q!r} is not declared")
    ext = set(machine.alphabet.extended)
    for src, syms, dst, moves in machine.transitions():
        where = f"{src} ({','.join(syms)}) -> {dst} ({','.join(map(str, moves))})"
        if src not in states:
            problems.append(f"dangling state {src!r} in transition {where}")
        if dst not in states:
            problems.append(f"dangling state {dst!r} in transition {where}")
        if len(syms) != machine.tapes or len(moves) != machine.tapes:
            problems.append(f"arity mismatch in transition {where}")
            continue
        for k, (s, d) in enumerate(zip(syms, moves)):
            if s not in ext:
                problems.append(f"unknown symbol {s!r} on tape {k + 1} in {where}")
            if d not in (-1, 0, 1):
                problems.append(f"bad move {d} on tape {k + 1} in {where}")
            if s == LEFT and d < 0:
                problems.append(f"marker-crossing at {src}: tape {k + 1} moves left of '>' in {where}")
            if s == RIGHT and d > 0:
                problems.append(f"marker-crossing at {src}: tape {k + 1} moves right of '<' in {where}")
            if machine.one_way and d < 0:
                problems.append(f"one-way flag violation at {src}: tape {k + 1} moves left in {where}")
    return problems


def validate_taped(machine: TapedAutomaton) -> list[str]:
    problems = []
    states = set(machine.states)
    tapes = set(machine.tape_ids)
    for q in machine.states:
        if q not in machine.tape_of:
            problems.append(f"state {q!r} has no tape")
        elif machine.tape_of[q] not in tapes:
            problems.append(f"state {q!r} assigned to unknown tape {machine.tape_of[q]!r}")
    for q in sorted((machine.initial | machine.accepting) - states):
        problems.append(f"dangling state {q!r}")
    allowed = set(machine.alphabet) | {RIGHT}
    for src, sym, dst in machine.transitions():
        if src not in states or dst not in states:
            problems.append(f"dangling state in transition {src} {sym} -> {dst}")
        if sym not in allowed:
            problems.append(f"unknown symbol {sym!r} in transition {src} {sym} -> {dst}")
    return problems


def _check_word(alphabet: Alphabet, x: Sequence[str], tapes: int) -> tuple[str, ...]:
    x = tuple(x)
    if len(x) != tapes:
        raise AutomatonError(f"expected {tapes} words, got {len(x)}")
    for k, w in enumerate(x):
        for c in w:
            if c not in alphabet:
                raise AutomatonError(f"symbol {c!r} on tape {k + 1} is not in the alphabet")
    return x


# ---------------------------------------------------------------- simulation


@dataclass(frozen=True)
class SimulationResult:
    accepted: bool
    trace: tuple = field(default=())  # configurations (state, heads)

    def __bool__(self):
        return self.accepted


def accepts(machine: MultiTapeAutomaton, x: Sequence[str]) -> bool:
    """Membership test through the acceleration kernel."""
    x = _check_word(machine.alphabet, x, machine.tapes)
    enc = machine._encoded
    if enc is None:
        return simulate(machine, x).accepted
    base, offsets, targets, moves, initial, accepting, sym_code = enc
    tapes = [[0] + [sym_code[c] for c in w] + [1] for w in x]
    return bool(_kernels.accepts_def1(machine.tapes, base, offsets, targets, moves,
                                      tapes, initial, accepting))


def simulate(machine: MultiTapeAutomaton, x: Sequence[str], trace: bool = True) -> SimulationResult:
    """Breadth-first search of the configuration graph on input ``x``.

    Accepts iff a configuration with an accepting state and every head on
    the right marker is reachable.  The returned trace is a shortest run.
    """
    x = _check_word(machine.alphabet, x, machine.tapes)
    if not trace:
        return SimulationResult(accepts(machine, x))
    tapes = [LEFT + w + RIGHT for w in x]
    ends = tuple(len(w) + 1 for w in x)
    start = (machine.initial, (0,) * machine.tapes)
    parent = {start: None}
    queue = deque([start])
    while queue:
        cfg = queue.popleft()
        q, heads = cfg
        if q in machine.accepting and heads == ends:
            run = []
            while cfg is not None:
                run.append(cfg)
                cfg = parent[cfg]
            return SimulationResult(True, tuple(reversed(run)))
        syms = tuple(tapes[k][h] for k, h in enumerate(heads))
        for dst, moves in sorted(machine.delta.get((q, syms), ())):
            nxt = (dst, tuple(h + d for h, d in zip(heads, moves)))
            if nxt not in parent:
                parent[nxt] = cfg
                queue.append(nxt)
    return SimulationResult(False)


def _taped_words(machine: TapedAutomaton, x) -> tuple[str, ...]:
    if isinstance(x, Mapping):
        if set(x) != set(machine.tape_ids):
            raise AutomatonError(f"input tapes {sorted(x)} do not match {list(machine.tape_ids)}")
        x = tuple(x[t] for t in machine.tape_ids)
    return _check_word(machine.alphabet, x, machine.tapes)


def simulate_taped(machine: TapedAutomaton, x) -> bool:
    """Membership for the taped-state model.

    ``x`` is a tuple in ``tape_ids`` order or a mapping from tape id to word.
    Accepts iff some run from an initial state consumes every tape and stops
    in an accepting state.
    """
    x = _taped_words(machine, x)
    nsym, tape_of, offsets, targets, initials, accepting, sym_code = machine._encoded
    tapes = [[sym_code[c] for c in w] for w in x]
    return bool(_kernels.accepts_taped(nsym, tape_of, offsets, targets, tapes, initials, accepting))


def shortest_taped_word(machine: TapedAutomaton):
    """A shortest accepted n-word (fewest transitions), or None if empty."""
    tape_index = {t: i for i, t in enumerate(machine.tape_ids)}
    n = machine.tapes
    # node: (state, ended) where ended[k] records a right-marker read on tape k
    parent = {}
    queue = deque()
    for q in sorted(machine.initial):
        node = (q, (False,) * n)
        if node not in parent:
            parent[node] = None
            queue.append(node)
    while queue:
        node = queue.popleft()
        q, ended = node
        if q in machine.accepting:
            words = [[] for _ in range(n)]
            while parent[node] is not None:
                node, src, sym = parent[node]
                if sym != RIGHT:
                    words[tape_index[machine.tape_of[src]]].append(sym)
            return tuple("".join(reversed(w)) for w in words)
        k = tape_index[machine.tape_of[q]]
        for _, sym, dst in machine.outgoing[q]:
            if sym == RIGHT:
                nxt = (dst, ended[:k] + (True,) + ended[k + 1:])
            elif ended[k]:
                continue
            else:
                nxt = (dst, ended)
            if nxt not in parent:
                parent[nxt] = (node, q, sym)
                queue.append(nxt)
    return None


# ---------------------------------------------------------------- conversions


def _fresh(counter, prefix="#v"):
    return f"{prefix}{next(counter)}"


def to_taped_model(machine: MultiTapeAutomaton, tape_ids: Sequence[str] | None = None) -> TapedAutomaton:
    """Convert a one-way machine to the taped-state model.

    Each head carries a status: on the left marker, on a cell not yet read,
    on a cell whose symbol was already consumed (and is remembered), or on
    the right marker.  A multi-tape transition first consumes the unread
    cells it inspects, one tape at a time, then applies its moves.
    Transitions that inspect nothing new become epsilon steps, removed by
    closure.
    """
    if not machine.one_way or any(d < 0 for *_, m in machine.transitions() for d in m):
        raise AutomatonError("to_taped_model requires a one-way machine")
    n = machine.tapes
    tape_ids = tuple(tape_ids) if tape_ids is not None else tuple(f"t{k + 1}" for k in range(n))
    if len(tape_ids) != n:
        raise AutomatonError(f"need {n} tape ids, got {len(tape_ids)}")
    UNREAD = "?"
    by_state: dict[str, list] = {}
    for src, syms, dst, moves in machine.transitions():
        by_state.setdefault(src, []).append((syms, dst, moves))

    start = (machine.initial, (LEFT,) * n)
    nodes = [start]
    seen = {start}
    eps: dict = {}
    reads: dict = {}  # node -> list of (chain of (tape, sym), target node)
    queue = deque([start])
    while queue:
        node = queue.popleft()
        q, status = node
        eps[node], reads[node] = [], []
        for syms, dst, moves in by_state.get(q, ()):
            chain = []
            ok = True
            new_status = []
            for k in range(n):
                g, s, d = status[k], syms[k], moves[k]
                if g == UNREAD:
                    if s == LEFT:
                        ok = False
                        break
                    chain.append((k, s))
                elif g != s:
                    ok = False
                    break
                if d == 1:
                    new_status.append(UNREAD)
                else:
                    new_status.append(s)
            if not ok:
                continue
            target = (dst, tuple(new_status))
            if target not in seen:
                seen.add(target)
                nodes.append(target)
                queue.append(target)
            if chain:
                reads[node].append((tuple(chain), target))
            else:
                eps[node].append(target)

    def closure(node):
        out = {node}
        stack = [node]
        while stack:
            for nxt in eps[stack.pop()]:
                if nxt not in out:
                    out.add(nxt)
                    stack.append(nxt)
        return out

    node_id = {node: i for i, node in enumerate(nodes)}
    good = lambda node: node[0] in machine.accepting and all(g in (UNREAD, RIGHT) for g in node[1])
    name = lambda node, k: f"#v{node_id[node]}.{k}"

    tape_of, transitions, accepting = {}, set(), set()
    chain_counter = itertools.count()
    for node in nodes:
        cl = sorted(closure(node), key=node_id.get)
        is_accepting = any(good(m) for m in cl)
        for k in range(n):
            tape_of[name(node, k)] = tape_ids[k]
            if is_accepting:
                accepting.add(name(node, k))
        for member in cl:
            for chain, target in reads[member]:
                k0, s0 = chain[0]
                prev = name(node, k0)
                sym = s0
                for kk, ss in chain[1:]:
                    mid = f"#m{next(chain_counter)}"
                    tape_of[mid] = tape_ids[kk]
                    transitions.add((prev, sym, mid))
                    prev, sym = mid, ss
                for k in range(n):
                    transitions.add((prev, sym, name(target, k)))
    states = sorted(tape_of, key=_natural_key)
    return TapedAutomaton.build(
        machine.alphabet, tape_ids, tape_of, transitions,
        [name(start, k) for k in range(n)], accepting, states=states,
    )


def from_taped_model(machine: TapedAutomaton) -> MultiTapeAutomaton:
    """Convert a taped-state machine to an equivalent one-way machine.

    A fresh initial state steps every head off the left marker and branches
    to the initial states; afterwards each taped transition reads its tape
    and ignores (wildcards) the others.
    """
    n = machine.tapes
    tape_index = {t: i for i, t in enumerate(machine.tape_ids)}
    ext = machine.alphabet.extended
    init = "#init"
    while init in machine.tape_of:
        init = "#" + init
    transitions = [(init, (LEFT,) * n, q, (1,) * n) for q in sorted(machine.initial)]
    for src, sym, dst in machine.transitions():
        k = tape_index[machine.tape_of[src]]
        move = tuple(1 if (j == k and sym != RIGHT) else 0 for j in range(n))
        for others in itertools.product(ext, repeat=n - 1):
            syms = others[:k] + (sym,) + others[k:]
            transitions.append((src, syms, dst, move))
    return MultiTapeAutomaton.build(
        machine.alphabet, n, transitions, init, machine.accepting,
        states=(init,) + tuple(machine.states), one_way=True,
    )


def _natural_key(name: str):
    parts = []
    for is_digit, chunk in itertools.groupby(name, str.isdigit):
        chunk = "".join(chunk)
        parts.append((1, int(chunk), "") if is_digit else (0, 0, chunk))
    return parts
