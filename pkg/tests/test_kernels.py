"""Parity between the compiled kernels and the pure-Python fallback."""

import os
import subprocess
import sys

from hypothesis import given, settings

from mta import _kernels
from mta.core import from_taped_model

from strategies import def1_machines, nwords, taped_machines


def _def1_python(m, x):
    base, offsets, targets, moves, initial, accepting, sym_code = m._encoded
    tapes = [[0] + [sym_code[c] for c in w] + [1] for w in x]
    args = (m.tapes, base, offsets, targets, moves, tapes, initial, accepting)
    return (bool(_kernels.accepts_def1(*args)), bool(_kernels.python_kernels.accepts_def1(*args)))


@settings(max_examples=80, deadline=None)
@given(def1_machines(two_way=True), nwords(2, 4))
def test_def1_parity(m, x):
    if m._encoded is not None:
        fast, slow = _def1_python(m, x)
        assert fast == slow


@settings(max_examples=80, deadline=None)
@given(taped_machines(), nwords(2, 4))
def test_taped_parity(t, x):
    nsym, tape_of, offsets, targets, initials, accepting, sym_code = t._encoded
    tapes = [[sym_code[c] for c in w] for w in x]
    args = (nsym, tape_of, offsets, targets, tapes, initials, accepting)
    assert bool(_kernels.accepts_taped(*args)) == bool(_kernels.python_kernels.accepts_taped(*args))
    assert from_taped_model(t) is not None


def test_fallback_selected_by_environment():
    env = dict(os.environ, MTA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from mta import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
