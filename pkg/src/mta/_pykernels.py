"""Pure-Python acceptance kernels.

Same signatures as the compiled ``_ckernels`` module; :mod:`mta._kernels`
picks whichever is importable.  Both operate on integer-encoded machines:

* tape symbols: ``0`` is the left marker, ``1`` the right marker, ``2..``
  the alphabet (multi-tape model); the taped model has no left marker and
  uses ``len(alphabet)`` for the right marker.
* transition tables are CSR arrays: ``offsets[key]..offsets[key + 1]``
  index into ``targets`` (and ``moves``, ``n`` entries per transition).
"""

from collections import deque


def accepts_def1(n, base, offsets, targets, moves, tapes, initial, accepting):
    lengths = [len(t) for t in tapes]
    strides = []
    size = 1
    for k in range(n):
        strides.append(size)
        size *= lengths[k]
    num_states = len(accepting)
    seen = bytearray(num_states * size)
    sym_pow = [base ** k for k in range(n)]
    table_stride = base ** n

    heads0 = [0] * n
    seen[initial * size] = 1
    queue = deque([(initial, heads0)])
    while queue:
        q, heads = queue.popleft()
        if accepting[q]:
            for k in range(n):
                if heads[k] != lengths[k] - 1:
                    break
            else:
                return True
        key = q * table_stride
        for k in range(n):
            key += tapes[k][heads[k]] * sym_pow[k]
        for e in range(offsets[key], offsets[key + 1]):
            target = targets[e]
            new_heads = [heads[k] + moves[e * n + k] for k in range(n)]
            code = target * size
            for k in range(n):
                code += new_heads[k] * strides[k]
            if not seen[code]:
                seen[code] = 1
                queue.append((target, new_heads))
    return False


def accepts_taped(nsym, tape_of, offsets, targets, tapes, initials, accepting):
    n = len(tapes)
    lengths = [len(t) + 1 for t in tapes]
    strides = []
    size = 1
    for k in range(n):
        strides.append(size)
        size *= lengths[k]
    num_states = len(accepting)
    seen = bytearray(num_states * size)
    end = nsym - 1

    queue = deque()
    for q in initials:
        if not seen[q * size]:
            seen[q * size] = 1
            queue.append((q, [0] * n))
    while queue:
        q, heads = queue.popleft()
        if accepting[q]:
            for k in range(n):
                if heads[k] != lengths[k] - 1:
                    break
            else:
                return True
        t = tape_of[q]
        pos = heads[t]
        if pos == lengths[t] - 1:
            sym = end
            step = 0
        else:
            sym = tapes[t][pos]
            step = 1
        key = q * nsym + sym
        for e in range(offsets[key], offsets[key + 1]):
            target = targets[e]
            new_heads = list(heads)
            new_heads[t] += step
            code = target * size
            for k in range(n):
                code += new_heads[k] * strides[k]
            if not seen[code]:
                seen[code] = 1
                queue.append((target, new_heads))
    return False
