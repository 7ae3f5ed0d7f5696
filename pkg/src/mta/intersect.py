"""Bounded intersection of one-way asynchronous machines in the taped-state model.

The two machines run side by side on the union of their tapes.  Either
machine may run ahead of the composite, in which case the transitions it
took are stored as *delays*: per-tape queues of reads still to be matched
against the composite's input.  Delays on a shared tape must agree
symbol by symbol (one a prefix of the other).  Because the class is not
closed under intersection the composite can be infinite, so exploration
is bounded by a state budget and a per-queue delay budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from mta.core import RIGHT, AutomatonError, TapedAutomaton

COMPLETE = "complete"
TRUNCATED_STATES = "truncated_states"
TRUNCATED_DELAY = "truncated_delay"


@dataclass(frozen=True)
class Composite:
    a: str
    b: str
    tape: str
    h: tuple  # delays of A, one tuple of transitions per A tape
    k: tuple  # delays of B, one tuple of transitions per B tape

    def key(self):
        return (self.a, self.b, self.tape, self.h, self.k)

    @property
    def max_delay(self) -> int:
        return max((len(d) for d in self.h + self.k), default=0)

    @property
    def settled(self) -> bool:
        return not any(self.h) and not any(self.k)


@dataclass(frozen=True)
class IntersectionResult:
    automaton: TapedAutomaton
    status: str
    composites: tuple  # Composite for each state #c0, #c1, ...
    stats: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE


def cons(h, k) -> bool:
    """True iff the symbols of one delay sequence are a prefix of the other's."""
    return all(x[1] == y[1] for x, y in zip(h, k))


def async_next(machine: TapedAutomaton, q: str) -> list:
    """Delayed states reachable from ``q``.

    Always contains ``(q, no delays)``.  For every other tape ``t``, each
    shortest path from ``q`` to a state on ``t`` that meets no earlier state
    on ``t`` yields one delayed state: the path's target with the path's
    transitions queued under the tape of their source.
    """
    if q not in machine.tape_of:
        raise AutomatonError(f"unknown state {q!r}")
    tapes = machine.tape_ids
    index = {t: i for i, t in enumerate(tapes)}
    out = machine.outgoing
    result = {(q, ((),) * len(tapes))}
    for ti in tapes:
        if ti == machine.tape_of[q]:
            continue
        dist = {q: 0}
        preds: dict = {}
        queue = deque([q])
        while queue:
            u = queue.popleft()
            if u != q and machine.tape_of[u] == ti:
                continue
            for _, sym, v in out[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    preds.setdefault(v, []).append((u, sym, v))
        for target in sorted(v for v in dist if v != q and machine.tape_of[v] == ti):
            for path in _paths(preds, q, target):
                buckets = [[] for _ in tapes]
                for tr in path:
                    buckets[index[machine.tape_of[tr[0]]]].append(tr)
                result.add((target, tuple(tuple(b) for b in buckets)))
    return sorted(result)


def _paths(preds, source, target):
    """All shortest paths as transition tuples, walking the predecessor DAG."""
    if target == source:
        return [()]
    found = []
    for tr in sorted(set(preds.get(target, ()))):
        for prefix in _paths(preds, source, tr[0]):
            found.append(prefix + (tr,))
    return found


class _Run:
    def __init__(self, a: TapedAutomaton, b: TapedAutomaton):
        if a.alphabet != b.alphabet:
            raise AutomatonError("alphabet mismatch")
        self.a, self.b = a, b
        self.tapes = tuple(a.tape_ids) + tuple(t for t in b.tape_ids if t not in a.tape_ids)
        self.a_index = {t: i for i, t in enumerate(a.tape_ids)}
        self.b_index = {t: i for i, t in enumerate(b.tape_ids)}
        self.shared = [t for t in a.tape_ids if t in self.b_index]
        self.symbols = tuple(a.alphabet.symbols) + (RIGHT,)
        self.expanded: dict = {}  # Composite -> order of expansion
        self.stack: list = []
        self.delta: set = set()
        self._next_cache: dict = {}

    def next_of(self, machine, q):
        key = (id(machine), q)
        if key not in self._next_cache:
            self._next_cache[key] = async_next(machine, q)
        return self._next_cache[key]

    def moves(self, machine, q, sym, tape):
        """Delayed states after a normal transition of ``machine`` from ``q``."""
        if machine.tape_of[q] != tape:
            return []
        out = set()
        for _, y, q2 in machine.outgoing[q]:
            if y == sym:
                out.update(self.next_of(machine, q2))
        return sorted(out)

    def new_states(self, P, Q):
        found = set()
        for p, h in P:
            for q, k in Q:
                if all(cons(h[self.a_index[t]], k[self.b_index[t]]) for t in self.shared):
                    for t in self.tapes:
                        found.add(Composite(p, q, t, h, k))
        ordered = sorted(found, key=Composite.key)
        for r in ordered:
            if r not in self.expanded:
                self.stack.append(r)
        return ordered

    def compose(self, P, Q, dh, dk, sym, r):
        ja = [(p, tuple(x + y for x, y in zip(dh, h))) for p, h in P]
        jb = [(q, tuple(x + y for x, y in zip(dk, k))) for q, k in Q]
        for r2 in self.new_states(ja, jb):
            self.delta.add((r, sym, r2))

    def expand(self, r: Composite):
        a, b = self.a, self.b
        t = r.tape
        h, k = list(r.h), list(r.k)
        ia, ib = self.a_index.get(t), self.b_index.get(t)
        stay_a = [(r.a, ((),) * len(h))]
        stay_b = [(r.b, ((),) * len(k))]
        if ia is not None and ib is not None:
            ht, kt = h[ia], k[ib]
            if ht and kt:
                if ht[0][1] == kt[0][1]:
                    h[ia], k[ib] = ht[1:], kt[1:]
                    self.compose(self.next_of(a, r.a), self.next_of(b, r.b), h, k, ht[0][1], r)
            elif ht:
                sym = ht[0][1]
                h[ia] = ht[1:]
                self.compose(self.next_of(a, r.a), self.moves(b, r.b, sym, t), h, k, sym, r)
            elif kt:
                sym = kt[0][1]
                k[ib] = kt[1:]
                self.compose(self.moves(a, r.a, sym, t), self.next_of(b, r.b), h, k, sym, r)
            else:
                for sym in self.symbols:
                    self.compose(self.moves(a, r.a, sym, t), self.moves(b, r.b, sym, t), h, k, sym, r)
        elif ia is not None:
            if h[ia]:
                sym = h[ia][0][1]
                h[ia] = h[ia][1:]
                self.compose(self.next_of(a, r.a), stay_b, h, k, sym, r)
            else:
                for sym in self.symbols:
                    self.compose(self.moves(a, r.a, sym, t), stay_b, h, k, sym, r)
        else:
            if k[ib]:
                sym = k[ib][0][1]
                k[ib] = k[ib][1:]
                self.compose(stay_a, self.next_of(b, r.b), h, k, sym, r)
            else:
                for sym in self.symbols:
                    self.compose(stay_a, self.moves(b, r.b, sym, t), h, k, sym, r)


def intersect(a: TapedAutomaton, b: TapedAutomaton, max_states: int, max_delay: int) -> IntersectionResult:
    """Intersection of two taped-state machines, explored depth-first.

    Composites are popped from a stack; one whose delay queues exceed
    ``max_delay`` transitions is skipped, and exploration stops once
    ``max_states`` composites have been expanded.  The result keeps only
    expanded composites, so it always accepts a subset of the intersection;
    when nothing was skipped or left on the stack the status is
    ``complete``.  A composite accepts when both machines accept and no
    delay is pending.
    """
    if max_states < 1 or max_delay < 0:
        raise AutomatonError("max_states must be >= 1 and max_delay >= 0")
    run = _Run(a, b)
    ja = sorted({d for i in sorted(a.initial) for d in run.next_of(a, i)})
    jb = sorted({d for i in sorted(b.initial) for d in run.next_of(b, i)})
    initial = run.new_states(ja, jb)
    skipped = 0
    largest = 0
    while run.stack and len(run.expanded) < max_states:
        r = run.stack.pop()
        if r in run.expanded:
            continue
        if r.max_delay > max_delay:
            skipped += 1
            continue
        largest = max(largest, r.max_delay)
        run.expanded[r] = len(run.expanded)
        run.expand(r)
    pending = sum(1 for r in run.stack if r not in run.expanded and r.max_delay <= max_delay)
    if pending:
        status = TRUNCATED_STATES
    elif skipped or any(r.max_delay > max_delay for r in run.stack):
        status = TRUNCATED_DELAY
    else:
        status = COMPLETE

    order = sorted(run.expanded, key=run.expanded.get)
    names = {r: f"#c{i}" for i, r in enumerate(order)}
    machine = TapedAutomaton.build(
        a.alphabet,
        run.tapes,
        {names[r]: r.tape for r in order},
        [(names[r], y, names[r2]) for r, y, r2 in run.delta if r in names and r2 in names],
        [names[r] for r in initial if r in names],
        [names[r] for r in order
         if r.a in a.accepting and r.b in b.accepting and r.settled],
        states=[names[r] for r in order],
    )
    stats = {
        "states": len(order),
        "transitions": len(machine.delta),
        "skipped_delay": skipped,
        "pending": pending,
        "max_delay_observed": largest,
        "max_states": max_states,
        "max_delay": max_delay,
    }
    return IntersectionResult(machine, status, tuple(order), stats)


def intersect_report(result: IntersectionResult) -> str:
    s = result.stats
    lines = [f"status: {result.status}"]
    if result.status == COMPLETE:
        lines.append("complete: the result accepts exactly the intersection")
    elif result.status == TRUNCATED_STATES:
        lines.append(f"state bound {s['max_states']} reached with {s['pending']} composites unexplored;"
                     " the result accepts a subset of the intersection")
    else:
        lines.append(f"delay bound {s['max_delay']} exceeded by {s['skipped_delay']} composites;"
                     " the result accepts a subset of the intersection")
    lines.append(f"states: {s['states']}")
    lines.append(f"transitions: {s['transitions']}")
    lines.append(f"largest delay kept: {s['max_delay_observed']}")
    if not result.automaton.accepting:
        lines.append("no accepting composite: the computed language is empty")
    return "\n".join(lines) + "\n"
