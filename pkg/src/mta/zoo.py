"""Catalog of witness languages, the PCP encoding and the brute-force oracle.

Every catalog entry pairs a machine with a membership predicate written
directly from the set definition, so tests can compare the two by
enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable

from mta.core import (
    LEFT,
    MARKERS,
    RIGHT,
    AutomatonError,
    MultiTapeAutomaton,
    TapedAutomaton,
    accepts,
    simulate_taped,
)
from mta.wordops import enumerate_nwords

MAX_BRUTE_FORCE_LEN = 6


def _def1(alphabet, tapes, transitions, accepting, initial="q0"):
    return MultiTapeAutomaton.build(alphabet, tapes, transitions, initial, accepting)


def _tuples(symbols, n):
    return itertools.product(symbols, repeat=n)


def l_n2n() -> MultiTapeAutomaton:
    """The classic asynchronous example: head 2 moves twice per move of head 1."""
    return MultiTapeAutomaton.build(
        "a", 2,
        [
            ("init", (LEFT, LEFT), "read2n", (1, 1)),
            ("read2n", ("a", "a"), "readn", (0, 1)),
            ("readn", ("a", "a"), "read2n", (1, 1)),
            ("read2n", (RIGHT, RIGHT), "done", (0, 0)),
        ],
        "init", ["done"], states=["init", "read2n", "readn", "done"],
    )


def l_xx() -> MultiTapeAutomaton:
    t = [("q0", (LEFT, LEFT), "eq", (1, 1))]
    t += [("eq", (c, c), "eq", (1, 1)) for c in "ab"]
    return _def1("ab", 2, t, ["eq"])


def l_m() -> MultiTapeAutomaton:
    """Deterministic machine for ``<a^m b a^h, a^k b a^m>``."""
    t = [("q0", (LEFT, LEFT), "skip", (1, 1))]
    for c in ("a", "b", RIGHT):
        t.append(("skip", (c, "a"), "skip", (0, 1)))
        t.append(("skip", (c, "b"), "match", (0, 1)))
    t.append(("match", ("a", "a"), "match", (1, 1)))
    t.append(("match", ("b", RIGHT), "tail", (1, 0)))
    t.append(("tail", ("a", RIGHT), "tail", (1, 0)))
    return _def1("ab", 2, t, ["tail"])


def _finite(alphabet, pairs) -> MultiTapeAutomaton:
    """Deterministic 2-tape machine reading each listed pair in lock-step."""
    t = []
    names = {"": "q0"}
    accepting = []
    for x, y in pairs:
        prefix = ""
        cols = list(itertools.zip_longest(x, y, fillvalue=RIGHT))
        src = "start"
        for i, (c, d) in enumerate(cols):
            prefix += c + d
            names.setdefault(prefix, f"p{len(names)}")
            dst = names[prefix]
            t.append((src, (c, d), dst, (int(c != RIGHT), int(d != RIGHT))))
            src = dst
        accepting.append(src)
    t.insert(0, ("q0", (LEFT, LEFT), "start", (1, 1)))
    return _def1(alphabet, 2, t, accepting)


def lang_e() -> MultiTapeAutomaton:
    return _finite("ab", [("a", "a"), ("b", "b")])


def lang_g() -> MultiTapeAutomaton:
    return _finite("c", [("c", "c")])


def lang_h() -> MultiTapeAutomaton:
    return _finite("ab", [("a", ""), ("b", "")])


def estar_g_hstar() -> MultiTapeAutomaton:
    """Deterministic machine for ``<xcy, xc>``, x, y over {a, b}."""
    t = [("q0", (LEFT, LEFT), "copy", (1, 1))]
    t += [("copy", (c, c), "copy", (1, 1)) for c in "ab"]
    t.append(("copy", ("c", "c"), "rest", (1, 1)))
    t += [("rest", (c, RIGHT), "rest", (1, 0)) for c in "ab"]
    return _def1("abc", 2, t, ["rest"])


def lang_b() -> MultiTapeAutomaton:
    """``<xa, ''>`` for x over {a, b}; nondeterministic guess of the last a."""
    t = [("q0", (LEFT, LEFT), "scan", (1, 1))]
    t += [("scan", (c, RIGHT), "scan", (1, 0)) for c in "ab"]
    t.append(("scan", ("a", RIGHT), "last", (1, 0)))
    return _def1("ab", 2, t, ["last"])


def lang_c() -> MultiTapeAutomaton:
    t = [("q0", (LEFT, LEFT), "bb", (1, 1)), ("bb", ("b", "b"), "bb", (1, 1))]
    return _def1("ab", 2, t, ["bb"])


def lang_d() -> MultiTapeAutomaton:
    t = [("q0", (LEFT, LEFT), "bb", (1, 1)), ("bb", ("b", "b"), "bb", (1, 1)),
         ("bb", ("c", RIGHT), "end", (1, 0))]
    return _def1("bc", 2, t, ["end"])


def l_rho() -> MultiTapeAutomaton:
    """``<x, rev x>``: head 1 runs to the end, then walks back against head 2."""
    sigma = "01#"
    t = [("q0", (LEFT, LEFT), "fwd", (1, 1))]
    for c in sigma:
        for d in sigma + RIGHT:
            t.append(("fwd", (c, d), "fwd", (1, 0)))
    for d in sigma + RIGHT:
        t.append(("fwd", (RIGHT, d), "back", (-1, 0)))
    t += [("back", (c, c), "back", (-1, 1)) for c in sigma]
    t.append(("back", (LEFT, RIGHT), "out", (1, 0)))
    t += [("out", (c, RIGHT), "out", (1, 0)) for c in sigma]
    return MultiTapeAutomaton.build(sigma, 2, t, "q0", ["out"], one_way=False)


def universe(alphabet="ab", tapes=2) -> MultiTapeAutomaton:
    syms = tuple(alphabet) + (RIGHT,)
    t = [("q0", (LEFT,) * tapes, "all", (1,) * tapes)]
    for col in _tuples(syms, tapes):
        if any(c != RIGHT for c in col):
            t.append(("all", col, "all", tuple(int(c != RIGHT) for c in col)))
    return _def1(alphabet, tapes, t, ["all"])


def empty(alphabet="ab", tapes=2) -> MultiTapeAutomaton:
    return _def1(alphabet, tapes, [], [])


def lagged_xx(s: int) -> MultiTapeAutomaton:
    """Deterministic ``s``-synchronized machine for ``<x, x>``.

    Head 1 runs up to ``s`` cells ahead; the state stores the symbols it
    has read that head 2 has not matched yet.
    """
    if s < 1:
        raise AutomatonError("lag must be at least 1")
    words = ["".join(w) for k in range(s + 1) for w in itertools.product("ab", repeat=k)]
    name = lambda w: "w" + w
    t = [("q0", (LEFT, LEFT), name(""), (1, 1))]
    for w in words:
        for c in "ab":
            if len(w) < s:
                for d in ("a", "b", RIGHT):
                    t.append((name(w), (c, d), name(w + c), (1, 0)))
            else:
                t.append((name(w), (c, w[0]), name(w[1:] + c), (1, 1)))
        if w:
            t.append((name(w), (RIGHT, w[0]), name(w[1:]), (0, 1)))
    return _def1("ab", 2, t, [name("")])


# ------------------------------------------------------------ taped forms


def taped_a_star() -> TapedAutomaton:
    return TapedAutomaton.build("ab", ["t1"], {"u": "t1"}, [("u", "a", "u")], ["u"], ["u"])


def taped_b_star() -> TapedAutomaton:
    return TapedAutomaton.build("ab", ["t2"], {"v": "t2"}, [("v", "b", "v")], ["v"], ["v"])


def taped_l_xx() -> TapedAutomaton:
    tape_of = {"u0": "t1", "ua": "t2", "ub": "t2"}
    t = [("u0", "a", "ua"), ("ua", "a", "u0"), ("u0", "b", "ub"), ("ub", "b", "u0")]
    return TapedAutomaton.build("ab", ["t1", "t2"], tape_of, t, ["u0"], ["u0"])


def taped_l_m() -> TapedAutomaton:
    """Reads ``a^k b`` on tape 2, then matches ``a^m`` alternately, then ``b a^h`` on tape 1."""
    tape_of = {"s0": "t2", "s1": "t1", "s2": "t2", "s4": "t1"}
    t = [("s0", "a", "s0"), ("s0", "b", "s1"), ("s1", "a", "s2"), ("s2", "a", "s1"),
         ("s1", "b", "s4"), ("s4", "a", "s4")]
    return TapedAutomaton.build("ab", ["t1", "t2"], tape_of, t, ["s0"], ["s4"])


def taped_estar_g_hstar() -> TapedAutomaton:
    tape_of = {"p0": "t1", "pa": "t2", "pb": "t2", "pc": "t2", "p2": "t1"}
    t = [("p0", "a", "pa"), ("pa", "a", "p0"), ("p0", "b", "pb"), ("pb", "b", "p0"),
         ("p0", "c", "pc"), ("pc", "c", "p2"), ("p2", "a", "p2"), ("p2", "b", "p2")]
    return TapedAutomaton.build("abc", ["t1", "t2"], tape_of, t, ["p0"], ["p2"])


# ------------------------------------------------------------ predicates


def _is_a_n_b_a_m(w):
    """Split ``a^i b a^j`` into (i, j), else None."""
    if w.count("b") != 1 or set(w) - {"a", "b"}:
        return None
    i = w.index("b")
    return i, len(w) - i - 1


def _pred_l_m(x, y):
    u, v = _is_a_n_b_a_m(x), _is_a_n_b_a_m(y)
    return u is not None and v is not None and u[0] == v[1]


def _pred_estar(x, y):
    return (set(x + y) <= set("abc") and y.endswith("c") and y.count("c") == 1
            and x.startswith(y) and "c" not in x[len(y):])


@dataclass(frozen=True)
class Entry:
    name: str
    description: str
    build: Callable
    member: Callable  # predicate on the n-word
    form: str = "def1"


CATALOG = {
    e.name: e
    for e in [
        Entry("L_n2n", "<a^n, a^2n>; head 2 moves twice per move of head 1", l_n2n,
              lambda x: set(x[0] + x[1]) <= {"a"} and len(x[1]) == 2 * len(x[0])),
        Entry("L_xx", "<x, x> over {a,b}", l_xx, lambda x: x[0] == x[1]),
        Entry("L_m", "<a^m b a^h, a^k b a^m>", l_m, lambda x: _pred_l_m(*x)),
        Entry("E", "{<a,a>, <b,b>}", lang_e, lambda x: x in {("a", "a"), ("b", "b")}),
        Entry("G", "{<c,c>}", lang_g, lambda x: x == ("c", "c")),
        Entry("H", "{<a,''>, <b,''>}", lang_h, lambda x: x in {("a", ""), ("b", "")}),
        Entry("EstarGHstar", "<xcy, xc> with x, y over {a,b}", estar_g_hstar,
              lambda x: _pred_estar(*x)),
        Entry("B", "<xa, ''> with x over {a,b}", lang_b, lambda x: x[0].endswith("a") and x[1] == ""),
        Entry("C", "<b^m, b^m>", lang_c, lambda x: x[0] == x[1] and set(x[0]) <= {"b"}),
        Entry("D", "<b^m c, b^m>", lang_d,
              lambda x: x[0] == x[1] + "c" and set(x[1]) <= {"b"}),
        Entry("L_rho", "<x, reverse x> over {0,1,#}, two-way", l_rho, lambda x: x[1] == x[0][::-1]),
        Entry("universe", "every 2-word over {a,b}", universe, lambda x: True),
        Entry("empty", "no 2-word over {a,b}", empty, lambda x: False),
        Entry("lag1_xx", "<x, x> read with head 1 up to 1 cell ahead", lambda: lagged_xx(1),
              lambda x: x[0] == x[1]),
        Entry("lag2_xx", "<x, x> read with head 1 up to 2 cells ahead", lambda: lagged_xx(2),
              lambda x: x[0] == x[1]),
        Entry("a_star", "a* on tape t1 (taped)", taped_a_star,
              lambda x: set(x[0]) <= {"a"}, "taped"),
        Entry("b_star", "b* on tape t2 (taped)", taped_b_star,
              lambda x: set(x[0]) <= {"b"}, "taped"),
        Entry("L_xx_taped", "<x, x> (taped)", taped_l_xx, lambda x: x[0] == x[1], "taped"),
        Entry("L_m_taped", "<a^m b a^h, a^k b a^m> (taped)", taped_l_m,
              lambda x: _pred_l_m(*x), "taped"),
        Entry("EstarGHstar_taped", "<xcy, xc> (taped)", taped_estar_g_hstar,
              lambda x: _pred_estar(*x), "taped"),
    ]
}


def zoo_build(name: str, **params):
    """Build catalog machine ``name``; only universe/empty take parameters."""
    if name not in CATALOG:
        raise AutomatonError(f"unknown zoo entry {name!r}")
    if params and name not in ("universe", "empty"):
        raise AutomatonError(f"{name} takes no parameters")
    return CATALOG[name].build(**params)


def zoo_names() -> list[str]:
    return list(CATALOG)


# ------------------------------------------------------------ PCP


def pcp_encode(pairs) -> tuple[TapedAutomaton, TapedAutomaton]:
    """Automata for ``X+`` and ``Y+`` with ``X = {<x_i, i>}``, ``Y = {<y_i, i>}``.

    Tape ``t1`` carries the word, tape ``t2`` the index sequence (digits
    1..9).  The instance has a solution iff the intersection is nonempty.
    Plain Kleene stars would always share the empty pair, hence the ``+``.
    """
    pairs = [(str(x), str(y)) for x, y in pairs]
    if not pairs:
        raise AutomatonError("PCP instance needs at least one pair")
    if len(pairs) > 9:
        raise AutomatonError("at most 9 pairs: indices are single digits")
    letters = sorted(set("".join(x + y for x, y in pairs)))
    bad = [c for c in letters if c in MARKERS or c.isdigit() or c.isspace()]
    if bad:
        raise AutomatonError(f"invalid symbols in PCP pairs: {bad}")
    alphabet = letters + [str(i) for i in range(1, len(pairs) + 1)]

    def plus(words, tag):
        tape_of = {"s": "t2", "r": "t2"}
        t = []
        for i, w in enumerate(words, start=1):
            chain = [f"{tag}{i}.{j}" for j in range(len(w))] + ["r"]
            for q in chain[:-1]:
                tape_of[q] = "t1"
            for src in ("s", "r"):
                t.append((src, str(i), chain[0]))
            for j, c in enumerate(w):
                t.append((chain[j], c, chain[j + 1]))
        return TapedAutomaton.build(alphabet, ["t1", "t2"], tape_of, t, ["s"], ["r"])

    return plus([x for x, _ in pairs], "x"), plus([y for _, y in pairs], "y")


def pcp_solutions(pairs, max_len: int) -> list[str]:
    """Index sequences of length <= ``max_len`` solving the instance, shortest first."""
    found = []
    queue = deque([("", "", "")])
    while queue:
        idx, x, y = queue.popleft()
        if idx and x == y:
            found.append(idx)
        if len(idx) == max_len:
            continue
        for i, (u, v) in enumerate(pairs, start=1):
            nx, ny = x + u, y + v
            if nx.startswith(ny) or ny.startswith(nx):
                queue.append((idx + str(i), nx, ny))
    return found


# ------------------------------------------------------------ oracle


def brute_force_language(machine, max_len: int) -> set:
    """All accepted n-words whose components have length at most ``max_len``."""
    if max_len > MAX_BRUTE_FORCE_LEN:
        raise AutomatonError(f"max_len above {MAX_BRUTE_FORCE_LEN} is refused")
    n = machine.tapes
    check = simulate_taped if isinstance(machine, TapedAutomaton) else accepts
    return {x for x in enumerate_nwords(machine.alphabet.symbols, n, max_len) if check(machine, x)}


def predicate_language(name: str, max_len: int) -> set:
    """The catalog entry's set definition, enumerated to ``max_len``."""
    entry = CATALOG[name]
    machine = entry.build()
    return {x for x in enumerate_nwords(machine.alphabet.symbols, machine.tapes, max_len)
            if entry.member(x)}
