"""Command-line interface: ``mta <command> ...``.

Exit codes: 0 success or "true", 1 rejected or "false", 2 usage or parse
error, 3 operation not applicable to the given machines (for example a
question that is undecidable outside the synchronous class).
"""

from __future__ import annotations

import argparse
import json
import sys

from mta import asyncalg, syncalg, synctransform, zoo
from mta.core import (
    AutomatonError,
    MultiTapeAutomaton,
    TapedAutomaton,
    accepts,
    from_taped_model,
    simulate,
    simulate_taped,
    shortest_taped_word,
    to_taped_model,
    validate,
    validate_taped,
)
from mta.intersect import intersect, intersect_report
from mta.textformat import FormatError, load, serialize_automaton
from mta.wordops import PaddingError, convolve, deconvolve

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INAPPLICABLE = 0, 1, 2, 3


class Inapplicable(Exception):
    """The request is outside what can be computed for these machines."""


def _out(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_def1(machine) -> MultiTapeAutomaton:
    return from_taped_model(machine) if isinstance(machine, TapedAutomaton) else machine


def _certified(machine) -> bool:
    """One-way and 0-synchronized (checked, not assumed)."""
    return isinstance(machine, MultiTapeAutomaton) and syncalg.is_synchronous(machine)


def _word(x) -> str:
    return json.dumps(list(x))


def cmd_run(args) -> int:
    m = load(args.file)
    if isinstance(m, TapedAutomaton):
        ok = simulate_taped(m, args.words)
    else:
        ok = accepts(m, args.words)
    print("accept" if ok else "reject")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_trace(args) -> int:
    m = load(args.file)
    if isinstance(m, TapedAutomaton):
        raise Inapplicable("trace needs a def1 machine; convert with 'mta zoo emit' or op")
    result = simulate(m, args.words)
    if not result.accepted:
        print("reject")
        return EXIT_FALSE
    for q, heads in result.trace:
        print(f"{q} {' '.join(map(str, heads))}")
    print("accept")
    return EXIT_TRUE


def cmd_validate(args) -> int:
    m = load(args.file, check=False)
    problems = validate_taped(m) if isinstance(m, TapedAutomaton) else validate(m)
    for p in problems:
        print(p)
    if not problems:
        print("valid")
    return EXIT_FALSE if problems else EXIT_TRUE


def cmd_convolve(args) -> int:
    for col in convolve(args.words):
        print("".join(col))
    return EXIT_TRUE


def cmd_deconvolve(args) -> int:
    print(_word(deconvolve([tuple(c) for c in args.columns], args.arity)))
    return EXIT_TRUE


def cmd_op(args) -> int:
    a = _as_def1(load(args.a))
    b = _as_def1(load(args.b)) if args.b else None
    needs_b = args.kind in ("union", "intersect", "concat")
    if needs_b != (b is not None):
        raise AutomatonError(f"op {args.kind} takes {'two operands' if needs_b else 'one operand'}")
    if args.kind in ("project", "generalize") and args.k is None:
        raise AutomatonError(f"op {args.kind} needs --k")
    sync = _certified(a) and (b is None or _certified(b))
    if sync:
        if args.kind in syncalg.BOOLEAN_OPS:
            result = syncalg.sync_boolean(args.kind, a, b)
        elif args.kind == "determinize":
            result = syncalg.determinize_sync(a)
        else:
            result = syncalg.sync_regular(args.kind, a, b, k=args.k)
    elif args.kind in asyncalg.CLOSURES:
        result = asyncalg.async_closure(args.kind, a, b)
    elif args.kind == "project":
        result = asyncalg.project_tape(a, args.k)
    elif args.kind == "complement" and a.is_deterministic and a.one_way:
        result = asyncalg.complement_det(a)
    else:
        raise Inapplicable(
            f"op {args.kind} is not available for machines that are not certified synchronous "
            "(the asynchronous classes are not closed under it)"
        )
    _out(args, serialize_automaton(result))
    return EXIT_TRUE


ASYNC_DECIDABLE = ("empty", "finite")


def cmd_decide(args) -> int:
    a = _as_def1(load(args.a))
    b = _as_def1(load(args.b)) if args.b else None
    if (args.kind in ("empty", "universal", "finite")) != (b is None):
        raise AutomatonError(f"decide {args.kind} takes {'one operand' if b is None else 'two operands'}")
    if _certified(a) and (b is None or _certified(b)):
        d = syncalg.decide(args.kind, a, b)
    elif args.kind in ASYNC_DECIDABLE:
        if not a.one_way:
            raise Inapplicable(f"decide {args.kind} needs a one-way machine")
        d = asyncalg.decide_empty_async(a) if args.kind == "empty" else asyncalg.decide_finite_async(a)
    else:
        raise Inapplicable(
            f"decide {args.kind} is undecidable for machines not certified synchronous; refusing"
        )
    print("true" if d.answer else "false")
    if d.witness is not None:
        print(f"witness: {_word(d.witness)}")
    return EXIT_TRUE if d.answer else EXIT_FALSE


def cmd_synchronize(args) -> int:
    a = _as_def1(load(args.file))
    if not a.one_way:
        raise Inapplicable("synchronize converts one-way machines only")
    _out(args, serialize_automaton(synctransform.synchronize(a, args.s)))
    return EXIT_TRUE


def cmd_check_sync(args) -> int:
    a = _as_def1(load(args.file))
    if not a.one_way:
        raise Inapplicable("synchrony is checked for one-way machines only")
    if args.s is None:
        if not a.is_deterministic:
            raise Inapplicable("without --s the machine must be deterministic")
        s = synctransform.check_synchronized_det(a)
        print("asynchronous" if s is None else f"synchronized: s={s}")
        return EXIT_FALSE if s is None else EXIT_TRUE
    check = synctransform.check_synchronized(a, args.s)
    print("true" if check else "false")
    if not check:
        w = check.witness
        print(f"witness input: {_word(w.input)}")
        print(f"tapes {w.tapes[0]} and {w.tapes[1]} are {w.spread} cells apart after:")
        for q, heads in w.run:
            print(f"  {q} {' '.join(map(str, heads))}")
    return EXIT_TRUE if check else EXIT_FALSE


def _as_taped(machine) -> TapedAutomaton:
    if isinstance(machine, TapedAutomaton):
        return machine
    if not machine.one_way:
        raise Inapplicable("intersection works on one-way machines only")
    return to_taped_model(machine)


def cmd_intersect(args) -> int:
    a, b = _as_taped(load(args.a)), _as_taped(load(args.b))
    result = intersect(a, b, args.max_states, args.max_delay)
    _out(args, serialize_automaton(result.automaton))
    sys.stderr.write(intersect_report(result))
    return EXIT_TRUE


def cmd_zoo(args) -> int:
    if args.action == "list":
        for name, entry in zoo.CATALOG.items():
            print(f"{name:18} {entry.form:6} {entry.description}")
        return EXIT_TRUE
    if not args.name:
        raise AutomatonError("zoo emit needs a NAME")
    m = zoo.zoo_build(args.name)
    if args.form == "taped" and isinstance(m, MultiTapeAutomaton):
        if not m.one_way:
            raise Inapplicable(f"{args.name} is two-way and has no taped form")
        m = to_taped_model(m)
    elif args.form == "def1":
        m = _as_def1(m)
    _out(args, serialize_automaton(m))
    return EXIT_TRUE


def _pair(text: str):
    x, sep, y = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected x:y, got {text!r}")
    return x, y


def cmd_pcp(args) -> int:
    x_plus, y_plus = zoo.pcp_encode(args.pairs)
    if args.emit:
        _out(args, serialize_automaton(x_plus) + "\n" + serialize_automaton(y_plus))
        return EXIT_TRUE
    result = intersect(x_plus, y_plus, args.max_states, args.max_delay)
    w = shortest_taped_word(result.automaton)
    sys.stderr.write(intersect_report(result))
    if w is None:
        print("no solution found within the bounds")
        return EXIT_FALSE
    print(f"solution: indices {w[1]} spell {w[0]!r}")
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mta", description="Multi-tape automata toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_words(sp):
        sp.add_argument("words", nargs="*", help="one word per tape, after --; '' is empty")

    for name, fn, help_ in (("run", cmd_run, "simulate on an input"),
                            ("accepts", cmd_run, "exit 0 iff the input is accepted"),
                            ("trace", cmd_trace, "print an accepting run")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        with_words(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("validate", help="check a document for invariant violations")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("convolve", help="print the convolution of an n-word, one column per line")
    with_words(sp)
    sp.set_defaults(func=cmd_convolve)

    sp = sub.add_parser("deconvolve", help="inverse of convolve")
    sp.add_argument("columns", nargs="*")
    sp.add_argument("--arity", type=int, help="needed for the empty convolution")
    sp.set_defaults(func=cmd_deconvolve)

    sp = sub.add_parser("op", help="closure operation")
    sp.add_argument("kind", choices=["complement", "union", "intersect", "concat", "star",
                                     "reverse", "project", "generalize", "determinize"])
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    sp.add_argument("--k", type=int, help="tape index for project/generalize")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("decide", help="decision procedure")
    sp.add_argument("kind", choices=list(syncalg.DECISIONS))
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("synchronize", help="equivalent synchronous machine")
    sp.add_argument("file")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_synchronize)

    sp = sub.add_parser("check-sync", help="check s-synchronization")
    sp.add_argument("file")
    sp.add_argument("--s", type=int, help="omit for the least s of a deterministic machine")
    sp.set_defaults(func=cmd_check_sync)

    sp = sub.add_parser("intersect-async", help="bounded intersection of one-way machines")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--max-states", type=int, default=1000)
    sp.add_argument("--max-delay", type=int, default=8)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_intersect)

    sp = sub.add_parser("zoo", help="catalog of witness machines")
    sp.add_argument("action", choices=["list", "emit"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--form", choices=["def1", "taped"])
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_zoo)

    sp = sub.add_parser("pcp", help="search a PCP instance via bounded intersection")
    sp.add_argument("pairs", nargs="+", type=_pair, help="pairs written x:y")
    sp.add_argument("--max-states", type=int, default=1000)
    sp.add_argument("--max-delay", type=int, default=6)
    sp.add_argument("--emit", action="store_true", help="print the two encoding machines")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_pcp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Inapplicable as exc:
        print(f"mta: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (FormatError, PaddingError, AutomatonError, ValueError, OSError) as exc:
        print(f"mta: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
