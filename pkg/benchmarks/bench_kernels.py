"""Compare the compiled acceptance kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from mta import _kernels, zoo
from mta.core import to_taped_model
from mta.wordops import enumerate_nwords


def _def1_args(m, x):
    base, offsets, targets, moves, initial, accepting, sym_code = m._encoded
    tapes = [[0] + [sym_code[c] for c in w] + [1] for w in x]
    return (m.tapes, base, offsets, targets, moves, tapes, initial, accepting)


def _taped_args(t, x):
    nsym, tape_of, offsets, targets, initials, accepting, sym_code = t._encoded
    tapes = [[sym_code[c] for c in w] for w in x]
    return (nsym, tape_of, offsets, targets, tapes, initials, accepting)


def _time(fn, calls, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in calls:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--max-len", type=int, default=4)
    args = p.parse_args(argv)
    print(f"compiled backend available: {_kernels.BACKEND == 'cython'}")
    cases = [("L_n2n", "a"), ("L_xx", "ab"), ("L_m", "ab"), ("lag2_xx", "ab")]
    print(f"{'machine':10} {'kernel':6} {'calls':>7} {'python s':>9} {'active s':>9} {'speedup':>8}")
    for name, sigma in cases:
        m = zoo.zoo_build(name)
        words = list(enumerate_nwords(sigma, m.tapes, args.max_len))
        t = to_taped_model(m)
        for label, fast, slow, calls in (
            ("def1", _kernels.accepts_def1, _kernels.python_kernels.accepts_def1,
             [_def1_args(m, x) for x in words]),
            ("taped", _kernels.accepts_taped, _kernels.python_kernels.accepts_taped,
             [_taped_args(t, x) for x in words]),
        ):
            assert all(bool(fast(*c)) == bool(slow(*c)) for c in calls)
            ts = _time(slow, calls, args.repeat)
            tf = _time(fast, calls, args.repeat)
            print(f"{name:10} {label:6} {len(calls):7d} {ts:9.4f} {tf:9.4f} {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
