"""Line-oriented text format for automata (``.mta`` files).

Example (two tapes)::

    model: def1
    tapes: 2
    alphabet: a
    states: init read2n readn done
    initial: init
    accepting: done
    init (>,>) -> read2n (1,1)
    read2n (a,a) -> readn (0,1)

Taped-state machines use ``model: taped``, list tape ids after ``tapes:``,
assign tapes with ``tape-of: q=t1 ...`` and write transitions as
``q s -> q2``.  A line whose first non-blank character is ``#`` followed
by a space (or nothing) is a comment; ``#`` alone is a valid symbol and
``#x`` a valid state name.
"""

from __future__ import annotations

import re

from mta.core import (
    RIGHT,
    Alphabet,
    AutomatonError,
    MultiTapeAutomaton,
    TapedAutomaton,
    _natural_key,
    validate,
    validate_taped,
)

HEADERS = ("model", "tapes", "alphabet", "states", "initial", "accepting", "tape-of", "one-way")
_DEF1_LINE = re.compile(r"^(\S+)\s*\(([^()]*)\)\s*->\s*(\S+)\s*\(([^()]*)\)\s*$")


class FormatError(AutomatonError):
    """Syntax or consistency error, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _is_comment(stripped: str) -> bool:
    return stripped == "#" or stripped.startswith(("# ", "#\t"))


def parse_automaton(text: str, check: bool = True):
    """Parse a document into a :class:`MultiTapeAutomaton` or :class:`TapedAutomaton`.

    With ``check`` the machine must also pass :func:`mta.core.validate`.
    """
    headers: dict = {}
    body = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        indent = len(raw) - len(raw.lstrip()) + 1
        if not stripped or _is_comment(stripped):
            continue
        key, sep, value = stripped.partition(":")
        if sep and key in HEADERS and "->" not in stripped:
            if key in headers:
                raise FormatError(f"duplicate header '{key}' (first on line {headers[key][1]})",
                                  lineno, indent)
            headers[key] = (value.split(), lineno, indent + len(key) + 1)
            continue
        if sep and re.fullmatch(r"[a-z-]+", key) and "->" not in stripped:
            raise FormatError(f"unknown header '{key}'", lineno, indent)
        body.append((lineno, indent, stripped))
    if not headers and not body:
        raise FormatError("empty document", 1)
    for key in ("model", "tapes", "alphabet", "states", "initial"):
        if key not in headers:
            raise FormatError(f"missing header '{key}:'", 1)
    model_vals, line, col = headers["model"]
    if model_vals not in (["def1"], ["taped"]):
        raise FormatError("model must be 'def1' or 'taped'", line, col)
    alpha_vals, line, col = headers["alphabet"]
    try:
        alphabet = Alphabet(tuple(alpha_vals))
    except AutomatonError as exc:
        raise FormatError(str(exc), line, col) from None

    states_vals, sline, scol = headers["states"]
    seen: dict = {}
    for q in states_vals:
        if q in seen:
            raise FormatError(f"duplicate state declaration {q!r} on line {sline}", sline, scol)
        seen[q] = True
    states = list(states_vals)

    def declared(q, line, col):
        if q not in seen:
            raise FormatError(f"undeclared state {q!r}", line, col)
        return q

    initial_vals, line, col = headers["initial"]
    accepting_vals, aline, acol = headers.get("accepting", ([], 1, 1))
    accepting = [declared(q, aline, acol) for q in accepting_vals]
    if len(set(accepting)) != len(accepting):
        raise FormatError("duplicate accepting state", aline, acol)

    if model_vals == ["def1"]:
        if "tape-of" in headers:
            raise FormatError("tape-of is only valid for taped machines", headers["tape-of"][1])
        if len(initial_vals) != 1:
            raise FormatError("def1 machines have exactly one initial state", line, col)
        initial = declared(initial_vals[0], line, col)
        tvals, tline, tcol = headers["tapes"]
        if len(tvals) != 1 or not tvals[0].isdigit() or int(tvals[0]) < 1:
            raise FormatError("tapes must be a positive integer", tline, tcol)
        n = int(tvals[0])
        transitions = [_def1_transition(alphabet, n, declared, *item) for item in body]
        one_way = None
        if "one-way" in headers:
            vals, oline, ocol = headers["one-way"]
            if vals not in (["yes"], ["no"]):
                raise FormatError("one-way must be 'yes' or 'no'", oline, ocol)
            one_way = vals == ["yes"]
            if one_way:
                for (lineno, indent, _), (_, _, _, moves) in zip(body, transitions):
                    if any(d < 0 for d in moves):
                        raise FormatError("left move in a machine declared one-way", lineno, indent)
        machine = MultiTapeAutomaton.build(alphabet, n, transitions, initial, accepting,
                                           states=states, one_way=one_way)
        problems = validate(machine)
    else:
        if "one-way" in headers:
            raise FormatError("one-way is only valid for def1 machines", headers["one-way"][1])
        tape_ids, tline, tcol = headers["tapes"]
        if not tape_ids or len(set(tape_ids)) != len(tape_ids):
            raise FormatError("tapes must list distinct tape ids", tline, tcol)
        initial = [declared(q, line, col) for q in initial_vals]
        tape_of = {}
        tvals, oline, ocol = headers.get("tape-of", ([], 1, 1))
        for item in tvals:
            q, eq, t = item.partition("=")
            if not eq:
                raise FormatError(f"expected state=tape, got {item!r}", oline, ocol)
            declared(q, oline, ocol)
            if t not in tape_ids:
                raise FormatError(f"unknown tape {t!r}", oline, ocol)
            if q in tape_of:
                raise FormatError(f"tape of {q!r} assigned twice", oline, ocol)
            tape_of[q] = t
        missing = [q for q in states if q not in tape_of]
        if missing:
            raise FormatError(f"no tape assigned to {missing[0]!r}", oline, ocol)
        transitions = [_taped_transition(alphabet, declared, *item) for item in body]
        machine = TapedAutomaton.build(alphabet, tape_ids, tape_of, transitions, initial,
                                       accepting, states=states)
        problems = validate_taped(machine)
    if problems and check:
        raise FormatError(problems[0], 1)
    return machine


def _def1_transition(alphabet, n, declared, lineno, indent, line):
    m = _DEF1_LINE.match(line)
    if not m:
        raise FormatError("expected 'q (s1,...,sn) -> q2 (d1,...,dn)'", lineno, indent)
    src, syms, dst, moves = m.groups()
    declared(src, lineno, indent + m.start(1))
    declared(dst, lineno, indent + m.start(3))
    syms = [s.strip() for s in syms.split(",")]
    moves_txt = [d.strip() for d in moves.split(",")]
    if len(syms) != n:
        raise FormatError(f"expected {n} symbols, got {len(syms)}", lineno, indent + m.start(2))
    if len(moves_txt) != n:
        raise FormatError(f"expected {n} moves, got {len(moves_txt)}", lineno, indent + m.start(4))
    ext = set(alphabet.extended)
    for s in syms:
        if s not in ext:
            raise FormatError(f"unknown symbol {s!r}", lineno, indent + m.start(2))
    try:
        mv = tuple(int(d) for d in moves_txt)
    except ValueError:
        raise FormatError("moves must be -1, 0 or 1", lineno, indent + m.start(4)) from None
    for s, d in zip(syms, mv):
        if d not in (-1, 0, 1):
            raise FormatError("moves must be -1, 0 or 1", lineno, indent + m.start(4))
        if (s == ">" and d < 0) or (s == RIGHT and d > 0):
            raise FormatError(f"marker-crossing at {src}", lineno, indent + m.start(4))
    return src, tuple(syms), dst, mv


def _taped_transition(alphabet, declared, lineno, indent, line):
    parts = line.split()
    if len(parts) != 4 or parts[2] != "->":
        raise FormatError("expected 'q s -> q2'", lineno, indent)
    src, sym, _, dst = parts
    declared(src, lineno, indent)
    declared(dst, lineno, indent + line.rindex(dst))
    if sym not in alphabet and sym != RIGHT:
        raise FormatError(f"unknown symbol {sym!r}", lineno, indent + line.index(sym, len(src)))
    return src, sym, dst


def serialize_automaton(machine) -> str:
    """Canonical document: header lines, then transitions in sorted order."""
    if isinstance(machine, TapedAutomaton):
        lines = [
            "model: taped",
            "tapes: " + " ".join(machine.tape_ids),
            "alphabet: " + " ".join(machine.alphabet),
            "states: " + " ".join(machine.states),
            "initial: " + " ".join(sorted(machine.initial, key=_natural_key)),
            "accepting: " + " ".join(sorted(machine.accepting, key=_natural_key)),
            "tape-of: " + " ".join(f"{q}={machine.tape_of[q]}" for q in machine.states),
        ]
        order = {q: i for i, q in enumerate(machine.states)}
        for src, sym, dst in sorted(machine.delta, key=lambda t: (order[t[0]], t[1], order[t[2]])):
            lines.append(f"{src} {sym} -> {dst}")
    else:
        lines = [
            "model: def1",
            f"tapes: {machine.tapes}",
            "alphabet: " + " ".join(machine.alphabet),
            "states: " + " ".join(machine.states),
            f"initial: {machine.initial}",
            "accepting: " + " ".join(q for q in machine.states if q in machine.accepting),
        ]
        if not machine.one_way and not any(d < 0 for *_, m in machine.transitions() for d in m):
            lines.append("one-way: no")
        order = {q: i for i, q in enumerate(machine.states)}
        for src, syms, dst, moves in sorted(machine.transitions(),
                                            key=lambda t: (order[t[0]], t[1], order[t[2]], t[3])):
            lines.append(f"{src} ({','.join(syms)}) -> {dst} ({','.join(map(str, moves))})")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def load(path: str, check: bool = True):
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read(), check)


def dump(machine, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_automaton(machine))


def structurally_equal(a, b) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, TapedAutomaton):
        return (a.alphabet == b.alphabet and a.tape_ids == b.tape_ids and a.states == b.states
                and a.tape_of == b.tape_of and a.delta == b.delta and a.initial == b.initial
                and a.accepting == b.accepting)
    return (a.alphabet == b.alphabet and a.tapes == b.tapes and a.states == b.states
            and dict(a.delta) == dict(b.delta) and a.initial == b.initial
            and a.accepting == b.accepting and a.one_way == b.one_way)


__all__ = ["FormatError", "parse_automaton", "serialize_automaton", "load", "dump",
           "structurally_equal"]
