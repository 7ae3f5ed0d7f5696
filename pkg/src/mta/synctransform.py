"""Synchrony checking and conversion of s-synchronized machines to synchronous ones.

An automaton is *s-synchronized* when, on every run, any two heads that are
not on the right marker stay within ``s`` cells of each other.
:func:`synchronize` builds an equivalent machine whose heads move in
lock-step: each state remembers, per tape, the cells that the original
head still has to read between its position and the common position of
the new heads.
"""

from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass

from mta.core import LEFT, RIGHT, AutomatonError, MultiTapeAutomaton

_ON_LEFT = "L"
_UNREAD = "U"
_ENDED = "E"


@dataclass(frozen=True)
class SyncWitness:
    """A run on which two heads separate by more than ``s`` cells."""

    input: tuple  # one word per tape
    run: tuple  # configurations (state, heads)
    tapes: tuple  # the 1-based pair of tapes that separated

    @property
    def spread(self) -> int:
        heads = self.run[-1][1]
        i, j = self.tapes
        return abs(heads[i - 1] - heads[j - 1])


@dataclass(frozen=True)
class SyncCheck:
    synchronized: bool
    witness: SyncWitness | None = None

    def __bool__(self):
        return self.synchronized


def _require_one_way(machine: MultiTapeAutomaton, what: str):
    if not machine.one_way or any(d < 0 for *_, m in machine.transitions() for d in m):
        raise AutomatonError(f"{what} requires a one-way machine")


def check_synchronized(machine: MultiTapeAutomaton, s: int) -> SyncCheck:
    """Decide whether a one-way machine is ``s``-synchronized.

    Explores abstract configurations: the state, what each head knows about
    the cell under it (left marker, unread, a remembered symbol, or right
    marker) and the head offsets relative to the rearmost unfinished head.
    Offsets never exceed ``s`` without the run being reported, so the
    search space is finite.  Breadth-first order yields a shortest
    violating run.
    """
    if s < 0:
        raise AutomatonError("s must be nonnegative")
    _require_one_way(machine, "check_synchronized")
    n = machine.tapes
    by_state: dict[str, list] = {}
    for src, syms, dst, moves in machine.transitions():
        by_state.setdefault(src, []).append((syms, dst, moves))

    def normalize(status, pos):
        live = [p for g, p in zip(status, pos) if g != _ENDED]
        low = min(live) if live else 0
        return tuple(None if g == _ENDED else p - low for g, p in zip(status, pos))

    start = (machine.initial, (_ON_LEFT,) * n, (0,) * n)
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        q, status, offsets = node
        for syms, dst, moves in by_state.get(q, ()):
            new_status = []
            ok = True
            for g, sym, d in zip(status, syms, moves):
                if g == _ON_LEFT:
                    ok = sym == LEFT
                    after = _UNREAD if d else _ON_LEFT
                elif g == _UNREAD:
                    ok = sym != LEFT
                    after = _ENDED if sym == RIGHT else (_UNREAD if d else sym)
                elif g == _ENDED:
                    ok = sym == RIGHT
                    after = _ENDED
                else:
                    ok = sym == g
                    after = _UNREAD if d else g
                if not ok:
                    break
                new_status.append(after)
            if not ok:
                continue
            new_status = tuple(new_status)
            pos = tuple(0 if o is None else o + d for o, d in zip(offsets, moves))
            live = [k for k in range(n) if new_status[k] != _ENDED]
            if live:
                hi = max(live, key=lambda k: pos[k])
                lo = min(live, key=lambda k: pos[k])
                if pos[hi] - pos[lo] > s:
                    step = (syms, dst, moves)
                    return SyncCheck(False, _witness(machine, parent, node, step, new_status, (lo, hi)))
            nxt = (dst, new_status, normalize(new_status, pos))
            if nxt not in parent:
                parent[nxt] = (node, (syms, dst, moves))
                queue.append(nxt)
    return SyncCheck(True)


def _witness(machine, parent, node, last_step, last_status, pair):
    steps = [last_step]
    while parent[node] is not None:
        node, step = parent[node]
        steps.append(step)
    steps.reverse()
    n = machine.tapes
    words = [[] for _ in range(n)]
    heads = [0] * n
    run = [(machine.initial, tuple(heads))]
    for syms, dst, moves in steps:
        for k in range(n):
            # a head on cell len(word)+1 that reads a symbol fixes that cell
            if syms[k] not in (LEFT, RIGHT) and heads[k] == len(words[k]) + 1:
                words[k].append(syms[k])
        heads = [h + d for h, d in zip(heads, moves)]
        run.append((dst, tuple(heads)))
    for k in pair:
        if last_status[k] == _UNREAD and heads[k] == len(words[k]) + 1:
            words[k].append(machine.alphabet.symbols[0])
    tapes = tuple(sorted(k + 1 for k in pair))
    return SyncWitness(tuple("".join(w) for w in words), tuple(run), tapes)


def check_synchronized_det(machine: MultiTapeAutomaton) -> int | None:
    """Least ``s`` for which a deterministic one-way machine is s-synchronized.

    Returns None ("asynchronous") when it is not ``(|Q|-1)``-synchronized.
    """
    if not machine.is_deterministic:
        raise AutomatonError("check_synchronized_det requires a deterministic machine")
    for s in range(max(len(machine.states), 1)):
        if check_synchronized(machine, s):
            return s
    return None


def replay_witness(machine: MultiTapeAutomaton, witness: SyncWitness) -> bool:
    """Check that ``witness.run`` is a run of ``machine`` on ``witness.input``."""
    tapes = [LEFT + w + RIGHT for w in witness.input]
    run = witness.run
    if run[0] != (machine.initial, (0,) * machine.tapes):
        return False
    for (q, heads), (q2, heads2) in zip(run, run[1:]):
        if any(not 0 <= h < len(t) for h, t in zip(heads2, tapes)):
            return False
        syms = tuple(t[h] for t, h in zip(tapes, heads))
        moves = tuple(b - a for a, b in zip(heads, heads2))
        if (q2, moves) not in machine.delta.get((q, syms), ()):
            return False
    return True


def head_spread(machine: MultiTapeAutomaton, x) -> int:
    """Largest distance between two heads off the right marker, over every
    configuration reachable on input ``x``."""
    tapes = [LEFT + w + RIGHT for w in x]
    ends = [len(w) + 1 for w in x]
    start = (machine.initial, (0,) * machine.tapes)
    seen = {start}
    queue = deque([start])
    worst = 0
    while queue:
        q, heads = queue.popleft()
        live = [h for h, e in zip(heads, ends) if h != e]
        if len(live) > 1:
            worst = max(worst, max(live) - min(live))
        syms = tuple(t[h] for t, h in zip(tapes, heads))
        for dst, moves in machine.delta.get((q, syms), ()):
            nxt = (dst, tuple(h + d for h, d in zip(heads, moves)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return worst


def synchronize(machine: MultiTapeAutomaton, s: int) -> MultiTapeAutomaton:
    """Equivalent synchronous machine for an ``s``-synchronized one-way machine.

    States pair an original state with one buffer per tape: the cells
    between the original head and the common head position, oldest first.
    The common heads advance only when some original head with an empty
    buffer moves right; heads already on the right marker stay put.
    Buffers hold at most ``s + 1`` cells (one more than the lag bound, for
    a head that steps onto the right marker ahead of the others);
    transitions that would overflow are dropped, so on a machine that is
    not s-synchronized the result accepts a subset of the language.

    Deterministic inputs give deterministic outputs.
    """
    if s < 0:
        raise AutomatonError("s must be nonnegative")
    if machine.tapes < 1:
        raise AutomatonError("need at least one tape")
    if not machine.one_way:
        raise AutomatonError(
            "synchronize supports one-way machines; two-way sources are not converted"
        )
    n = machine.tapes
    capacity = s + 1
    free = tuple(machine.alphabet.symbols) + (RIGHT,)
    by_state: dict[str, list] = {}
    for src, syms, dst, moves in machine.transitions():
        by_state.setdefault(src, []).append((syms, dst, moves))

    start = (machine.initial, ((),) * n)
    names = {start: "#y0"}
    queue = deque([start])
    transitions = []
    while queue:
        node = queue.popleft()
        q, bufs = node
        for syms, dst, moves in by_state.get(q, ()):
            if any(bufs[k] and bufs[k][0] != syms[k] for k in range(n)):
                continue
            advance = any(not bufs[k] and moves[k] == 1 for k in range(n))
            choices = [free if bufs[k] else (syms[k],) for k in range(n)]
            for seen_syms in itertools.product(*choices):
                new_bufs = []
                head_moves = []
                for k in range(n):
                    buf = bufs[k]
                    step = 1 if advance and seen_syms[k] != RIGHT else 0
                    if step:
                        buf = buf + (seen_syms[k],)
                    if moves[k] == 1:
                        buf = buf[1:]
                    new_bufs.append(buf)
                    head_moves.append(step)
                if any(len(b) > capacity for b in new_bufs):
                    continue
                target = (dst, tuple(new_bufs))
                if target not in names:
                    names[target] = f"#y{len(names)}"
                    queue.append(target)
                transitions.append((names[node], seen_syms, names[target], tuple(head_moves)))
    accepting = [name for (q, bufs), name in names.items()
                 if q in machine.accepting and not any(bufs)]
    return MultiTapeAutomaton.build(
        machine.alphabet, n, transitions, "#y0", accepting,
        states=list(names.values()), one_way=True,
    )


def size_bound(machine: MultiTapeAutomaton, s: int) -> int:
    """State bound |Q| * |ext|^(n*s) * max(s,1) * |ext| times the constant
    (s+2)^n * |ext|^(n-1) that pays for the extra buffer cell."""
    if s < 0:
        raise AutomatonError("s must be nonnegative")
    ext = len(machine.alphabet) + 2
    n = machine.tapes
    base = len(machine.states) * ext ** (n * s) * max(s, 1) * ext
    return base * (s + 2) ** n * ext ** (n - 1)


def warn_two_way(machine: MultiTapeAutomaton) -> None:
    if not machine.one_way:
        warnings.warn("synchrony of two-way machines is not checked", stacklevel=2)
