"""Closure constructions and decision procedures for one-way asynchronous machines.

The nondeterministic constructions work in the taped-state model, where
each transition reads one tape.  There the classic single-tape recipes
(disjoint union, epsilon bridges for concatenation and star, reversed
edges) carry over once right-marker tests are removed: a right-marker
read on tape ``t`` becomes a silent step that forbids further reads on
``t``.  Results are converted back to one-way multi-tape machines.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from mta.core import (
    RIGHT,
    AutomatonError,
    MultiTapeAutomaton,
    TapedAutomaton,
    from_taped_model,
    shortest_taped_word,
    to_taped_model,
)
from mta.nfa import EPSILON, NFA

CLOSURES = ("union", "concat", "star", "reverse")
SINK = "#sink"


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.answer


@dataclass
class _Raw:
    """Taped-state automaton under construction; ``None`` labels epsilon edges."""

    tape_ids: tuple
    tape_of: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    initial: list = field(default_factory=list)
    accepting: set = field(default_factory=set)


def _require_one_way(machine: MultiTapeAutomaton) -> None:
    if not machine.one_way or any(d < 0 for *_, m in machine.transitions() for d in m):
        raise AutomatonError("operation requires a one-way machine")


def _check_pair(a: MultiTapeAutomaton, b: MultiTapeAutomaton) -> None:
    if a.tapes != b.tapes:
        raise AutomatonError(f"arity mismatch: {a.tapes} vs {b.tapes}")
    if a.alphabet != b.alphabet:
        raise AutomatonError("alphabet mismatch")


def _raw(machine: MultiTapeAutomaton, tag) -> _Raw:
    t = to_taped_model(machine)
    raw = _Raw(t.tape_ids)
    raw.tape_of = {(tag, q): t.tape_of[q] for q in t.states}
    raw.edges = [((tag, s), y, (tag, d)) for s, y, d in t.transitions()]
    raw.initial = [(tag, q) for q in sorted(t.initial)]
    raw.accepting = {(tag, q) for q in t.accepting}
    return raw


def _free(raw: _Raw) -> _Raw:
    """Replace right-marker reads by silent steps that close the tape."""
    index = {t: i for i, t in enumerate(raw.tape_ids)}
    out_edges: dict = {}
    for s, y, d in raw.edges:
        out_edges.setdefault(s, []).append((y, d))
    out = _Raw(raw.tape_ids)
    start = [(q, 0) for q in raw.initial]
    seen = set(start)
    queue = deque(start)
    while queue:
        node = queue.popleft()
        q, closed = node
        out.tape_of[node] = raw.tape_of[q]
        if q in raw.accepting:
            out.accepting.add(node)
        bit = 1 << index[raw.tape_of[q]]
        for y, d in out_edges.get(q, ()):
            if y == RIGHT:
                target, label = (d, closed | bit), EPSILON
            elif y is EPSILON:
                target, label = (d, closed), EPSILON
            elif closed & bit:
                continue
            else:
                target, label = (d, closed), y
            out.edges.append((node, label, target))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    out.initial = start
    return out


def _eliminate_epsilon(raw: _Raw) -> _Raw:
    eps: dict = {}
    for s, y, d in raw.edges:
        if y is EPSILON:
            eps.setdefault(s, []).append(d)

    cache: dict = {}

    def closure(q):
        if q not in cache:
            out = [q]
            seen = {q}
            i = 0
            while i < len(out):
                for d in eps.get(out[i], ()):
                    if d not in seen:
                        seen.add(d)
                        out.append(d)
                i += 1
            cache[q] = out
        return cache[q]

    out = _Raw(raw.tape_ids, dict(raw.tape_of))
    for s, y, d in raw.edges:
        if y is not EPSILON:
            out.edges.extend((s, y, r) for r in closure(d))
    out.initial = list(dict.fromkeys(r for q in raw.initial for r in closure(q)))
    out.accepting = {q for q in raw.tape_of if any(r in raw.accepting for r in closure(q))}
    return out


def _trim(raw: _Raw) -> _Raw:
    fwd: dict = {}
    back: dict = {}
    for s, y, d in raw.edges:
        fwd.setdefault(s, []).append(d)
        back.setdefault(d, []).append(s)

    def sweep(roots, graph):
        seen = set(roots)
        stack = list(roots)
        while stack:
            for d in graph.get(stack.pop(), ()):
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return seen

    keep = sweep(raw.initial, fwd) & sweep(raw.accepting, back)
    out = _Raw(raw.tape_ids)
    out.tape_of = {q: t for q, t in raw.tape_of.items() if q in keep}
    out.edges = list(dict.fromkeys(e for e in raw.edges if e[0] in keep and e[2] in keep))
    out.initial = [q for q in raw.initial if q in keep]
    out.accepting = {q for q in raw.accepting if q in keep}
    return out


def _finish(raw: _Raw, alphabet) -> TapedAutomaton:
    """Name states ``#a0, #a1, ...`` in breadth-first order."""
    raw = _trim(_eliminate_epsilon(raw))
    succ: dict = {}
    for s, y, d in raw.edges:
        succ.setdefault(s, []).append(d)
    names: dict = {}
    queue = deque()
    for q in raw.initial:
        if q not in names:
            names[q] = f"#a{len(names)}"
            queue.append(q)
    while queue:
        for d in succ.get(queue.popleft(), ()):
            if d not in names:
                names[d] = f"#a{len(names)}"
                queue.append(d)
    return TapedAutomaton.build(
        alphabet,
        raw.tape_ids,
        {names[q]: raw.tape_of[q] for q in names},
        [(names[s], y, names[d]) for s, y, d in raw.edges],
        [names[q] for q in raw.initial],
        [names[q] for q in raw.accepting],
        states=list(names.values()),
    )


def async_closure(kind: str, a: MultiTapeAutomaton, b: MultiTapeAutomaton | None = None) -> MultiTapeAutomaton:
    """Union, componentwise concatenation, Kleene star or reversal."""
    if kind not in CLOSURES:
        raise AutomatonError(f"unknown closure {kind!r}")
    _require_one_way(a)
    if kind in ("union", "concat"):
        if b is None:
            raise AutomatonError(f"{kind} needs two operands")
        _require_one_way(b)
        _check_pair(a, b)
    if kind == "union":
        ra, rb = _raw(a, 0), _raw(b, 1)
        ra.tape_of.update(rb.tape_of)
        ra.edges += rb.edges
        ra.initial += rb.initial
        ra.accepting |= rb.accepting
        out = ra
    elif kind == "concat":
        ra, rb = _free(_raw(a, 0)), _free(_raw(b, 1))
        out = _Raw(ra.tape_ids, {**ra.tape_of, **rb.tape_of}, ra.edges + rb.edges,
                   list(ra.initial), set(rb.accepting))
        for f in sorted(ra.accepting, key=repr):
            out.edges.extend((f, EPSILON, i) for i in rb.initial)
    elif kind == "star":
        ra = _free(_raw(a, 0))
        unit = ("unit",)
        out = _Raw(ra.tape_ids, {**ra.tape_of, unit: ra.tape_ids[0]}, list(ra.edges),
                   [unit] + ra.initial, ra.accepting | {unit})
        for f in sorted(ra.accepting, key=repr):
            out.edges.extend((f, EPSILON, i) for i in ra.initial)
    else:
        out = _reverse(_free(_raw(a, 0)))
    return from_taped_model(_finish(out, a.alphabet))


def _reverse(raw: _Raw) -> _Raw:
    """Reverse every edge.  A reversed state must know which tape the
    original predecessor read, so states become ``(q, tape)`` pairs."""
    raw = _eliminate_epsilon(raw)
    tapes = raw.tape_ids
    out = _Raw(tapes)
    for q in raw.tape_of:
        for t in tapes:
            out.tape_of[(q, t)] = t
    for s, y, d in raw.edges:
        t = raw.tape_of[s]
        out.edges.extend(((d, t), y, (s, u)) for u in tapes)
    out.initial = [(f, t) for f in sorted(raw.accepting, key=repr) for t in tapes]
    out.accepting = {(i, t) for i in raw.initial for t in tapes}
    return out


def _project_raw(raw: _Raw, gone: str) -> _Raw:
    """Turn reads on tape ``gone`` into silent steps."""
    rest = tuple(t for t in raw.tape_ids if t != gone)
    out = _Raw(rest)
    out.tape_of = {q: (rest[0] if t == gone else t) for q, t in raw.tape_of.items()}
    out.edges = [(s, EPSILON if raw.tape_of[s] == gone else y, d) for s, y, d in raw.edges]
    out.initial = list(raw.initial)
    out.accepting = set(raw.accepting)
    return _trim(_eliminate_epsilon(out))


def project_tape(a: MultiTapeAutomaton, k: int) -> MultiTapeAutomaton:
    """Existential projection: drop tape ``k`` (1-based), guessing its contents."""
    _require_one_way(a)
    if a.tapes < 2:
        raise AutomatonError("projection needs at least 2 tapes")
    if not 1 <= k <= a.tapes:
        raise AutomatonError(f"tape index must be in 1..{a.tapes}")
    return from_taped_model(_finish(_project_raw(_free(_raw(a, 0)), f"t{k}"), a.alphabet))


def _single_tape_nfa(raw: _Raw, alphabet) -> NFA:
    return NFA.from_edges(tuple(alphabet), raw.edges, raw.initial, raw.accepting,
                          states=raw.initial)


def decide_empty_async(a: MultiTapeAutomaton) -> Decision:
    """Emptiness by projecting away tapes n, n-1, ..., 2 and testing the
    remaining regular language.  A shortest member is returned as witness."""
    _require_one_way(a)
    raw = _free(_raw(a, 0))
    for k in range(a.tapes, 1, -1):
        raw = _project_raw(raw, f"t{k}")
    empty = _single_tape_nfa(raw, a.alphabet).is_empty()
    if empty:
        return Decision(True)
    return Decision(False, shortest_taped_word(to_taped_model(a)))


def decide_finite_async(a: MultiTapeAutomaton) -> Decision:
    """Finite iff every component language (all other tapes projected away) is finite."""
    _require_one_way(a)
    base = _free(_raw(a, 0))
    for keep in range(1, a.tapes + 1):
        raw = base
        for k in range(a.tapes, 0, -1):
            if k != keep:
                raw = _project_raw(raw, f"t{k}")
        if not _single_tape_nfa(raw, a.alphabet).is_finite():
            return Decision(False)
    return Decision(True)


def complement_det(a: MultiTapeAutomaton) -> MultiTapeAutomaton:
    """Complement of a deterministic one-way machine.

    The machine is first normalized so that every run halts exactly when
    all heads reach the right marker: chains of stationary moves are
    collapsed (a stationary cycle never accepts and is cut), moves on the
    all-right-marker configuration are folded into the accepting set, and
    missing moves go to :data:`SINK`, which runs the heads to the end.
    Swapping accepting states then complements.
    """
    if not a.is_deterministic:
        raise AutomatonError("complement_det requires a deterministic machine")
    _require_one_way(a)
    n = a.tapes
    ext = a.alphabet.extended
    ends = (RIGHT,) * n
    step = {key: next(iter(v)) for key, v in a.delta.items()}

    def finishes(q):
        seen = set()
        while q not in seen:
            if q in a.accepting:
                return True
            seen.add(q)
            nxt = step.get((q, ends))
            if nxt is None:
                return False
            q = nxt[0]
        return False

    def resolve(q, syms):
        """Follow stationary moves on ``syms``; None if the run stops or cycles."""
        seen = set()
        while (q, syms) in step:
            dst, moves = step[(q, syms)]
            if any(moves):
                return dst, moves
            if q in seen:
                return None
            seen.add(q)
            q = dst
        return None

    sink = SINK
    while sink in a.states:  # complementing twice meets our own sink
        sink += "'"
    states = list(a.states) + [sink]
    transitions = []
    for q in states:
        for syms in itertools.product(ext, repeat=n):
            if syms == ends:
                continue
            found = None if q == sink else resolve(q, syms)
            if found is None:
                found = (sink, tuple(0 if s == RIGHT else 1 for s in syms))
            transitions.append((q, syms, found[0], found[1]))
    keep = [q for q in a.states if not finishes(q)] + [sink]
    return MultiTapeAutomaton.build(a.alphabet, n, transitions, a.initial, keep,
                                    states=states, one_way=True)
