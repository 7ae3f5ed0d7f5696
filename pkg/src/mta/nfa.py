"""Single-tape nondeterministic automata over arbitrary hashable symbols.

Used for convolution ("track") automata, whose symbols are column tuples,
and for the one-tape projections of asynchronous machines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

EPSILON = None


@dataclass(frozen=True, eq=False)
class NFA:
    alphabet: tuple
    num_states: int
    delta: dict  # (state, symbol) -> frozenset of states
    initial: frozenset
    accepting: frozenset

    @classmethod
    def from_edges(cls, alphabet: Sequence[Hashable], edges: Iterable[tuple], initial: Iterable,
                   accepting: Iterable, states: Iterable = ()) -> "NFA":
        """Build from ``(src, symbol, dst)`` edges over arbitrary state keys.

        ``symbol`` may be :data:`EPSILON`; epsilon edges are eliminated.
        Only states reachable from ``initial`` are kept.
        """
        edges = list(edges)
        keys: dict = {}
        for q in list(states) + list(initial):
            keys.setdefault(q, len(keys))
        for s, _, d in edges:
            keys.setdefault(s, len(keys))
            keys.setdefault(d, len(keys))
        for q in accepting:
            keys.setdefault(q, len(keys))
        n = len(keys)
        eps = [[] for _ in range(n)]
        out = [[] for _ in range(n)]
        for s, a, d in edges:
            if a is EPSILON:
                eps[keys[s]].append(keys[d])
            else:
                out[keys[s]].append((a, keys[d]))
        acc = {keys[q] for q in accepting}
        closures = [_closure(i, eps) for i in range(n)]
        delta: dict = {}
        for i in range(n):
            for a, d in out[i]:
                delta.setdefault((i, a), set()).update(closures[d])
        init = set()
        for q in initial:
            init |= closures[keys[q]]
        accepting2 = {i for i in range(n) if closures[i] & acc}
        return cls(tuple(alphabet), n, {k: frozenset(v) for k, v in delta.items()},
                   frozenset(init), frozenset(accepting2)).reachable()

    def successors(self, q: int):
        for a in self.alphabet:
            for d in self.delta.get((q, a), ()):
                yield a, d

    def reachable(self) -> "NFA":
        order = []
        seen = set()
        queue = deque(sorted(self.initial))
        seen.update(queue)
        while queue:
            q = queue.popleft()
            order.append(q)
            for _, d in self.successors(q):
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        return self._renumber(order)

    def trim(self) -> "NFA":
        """Keep states that are both reachable and co-reachable."""
        fwd = self.reachable()
        back: dict[int, set] = {}
        for (q, _), ds in fwd.delta.items():
            for d in ds:
                back.setdefault(d, set()).add(q)
        useful = set(fwd.accepting)
        stack = list(useful)
        while stack:
            for p in back.get(stack.pop(), ()):
                if p not in useful:
                    useful.add(p)
                    stack.append(p)
        return fwd._renumber([q for q in range(fwd.num_states) if q in useful])

    def _renumber(self, keep: Sequence[int]) -> "NFA":
        index = {q: i for i, q in enumerate(keep)}
        delta = {}
        for (q, a), ds in self.delta.items():
            if q in index:
                kept = frozenset(index[d] for d in ds if d in index)
                if kept:
                    delta[(index[q], a)] = kept
        return NFA(self.alphabet, len(keep), delta,
                   frozenset(index[q] for q in self.initial if q in index),
                   frozenset(index[q] for q in self.accepting if q in index))

    def accepts(self, word: Sequence) -> bool:
        current = set(self.initial)
        for a in word:
            nxt = set()
            for q in current:
                nxt |= self.delta.get((q, a), frozenset())
            current = nxt
            if not current:
                return False
        return bool(current & self.accepting)

    @property
    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(v) <= 1 for v in self.delta.values())

    def determinize(self) -> "NFA":
        """Subset construction; the result is total over the alphabet."""
        start = frozenset(self.initial)
        index = {start: 0}
        order = [start]
        delta = {}
        queue = deque([start])
        while queue:
            subset = queue.popleft()
            i = index[subset]
            for a in self.alphabet:
                nxt = set()
                for q in subset:
                    nxt |= self.delta.get((q, a), frozenset())
                nxt = frozenset(nxt)
                if nxt not in index:
                    index[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
                delta[(i, a)] = frozenset({index[nxt]})
        accepting = frozenset(i for i, s in enumerate(order) if s & self.accepting)
        return NFA(self.alphabet, len(order), delta, frozenset({0}), accepting)

    def complement(self) -> "NFA":
        dfa = self.determinize()
        return NFA(dfa.alphabet, dfa.num_states, dfa.delta, dfa.initial,
                   frozenset(range(dfa.num_states)) - dfa.accepting)

    def shortest_word(self):
        """A shortest accepted word as a tuple of symbols, or None."""
        parent = {q: None for q in self.initial}
        queue = deque(sorted(self.initial))
        while queue:
            q = queue.popleft()
            if q in self.accepting:
                word = []
                while parent[q] is not None:
                    q, a = parent[q]
                    word.append(a)
                return tuple(reversed(word))
            for a, d in self.successors(q):
                if d not in parent:
                    parent[d] = (q, a)
                    queue.append(d)
        return None

    def is_empty(self) -> bool:
        return self.shortest_word() is None

    def is_finite(self) -> bool:
        """True iff no cycle lies on an accepting path."""
        t = self.trim()
        color = [0] * t.num_states
        for root in range(t.num_states):
            if color[root]:
                continue
            stack = [(root, iter(list(t.successors(root))))]
            color[root] = 1
            while stack:
                q, it = stack[-1]
                for _, d in it:
                    if color[d] == 1:
                        return False
                    if color[d] == 0:
                        color[d] = 1
                        stack.append((d, iter(list(t.successors(d)))))
                        break
                else:
                    color[q] = 2
                    stack.pop()
        return True


def _closure(i: int, eps) -> set:
    out = {i}
    stack = [i]
    while stack:
        for d in eps[stack.pop()]:
            if d not in out:
                out.add(d)
                stack.append(d)
    return out


def product(a: NFA, b: NFA) -> NFA:
    """Intersection by the synchronous product (alphabets must agree)."""
    edges = []
    start = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
    seen = set(start)
    queue = deque(start)
    while queue:
        p, q = queue.popleft()
        for sym in a.alphabet:
            for p2 in a.delta.get((p, sym), ()):
                for q2 in b.delta.get((q, sym), ()):
                    edges.append(((p, q), sym, (p2, q2)))
                    if (p2, q2) not in seen:
                        seen.add((p2, q2))
                        queue.append((p2, q2))
    accepting = [s for s in seen if s[0] in a.accepting and s[1] in b.accepting]
    return NFA.from_edges(a.alphabet, edges, start, accepting, states=start)


def union(a: NFA, b: NFA) -> NFA:
    edges = [((0, s), x, (0, d)) for (s, x), ds in a.delta.items() for d in ds]
    edges += [((1, s), x, (1, d)) for (s, x), ds in b.delta.items() for d in ds]
    initial = [(0, q) for q in sorted(a.initial)] + [(1, q) for q in sorted(b.initial)]
    accepting = [(0, q) for q in a.accepting] + [(1, q) for q in b.accepting]
    return NFA.from_edges(a.alphabet, edges, initial, accepting, states=initial)
