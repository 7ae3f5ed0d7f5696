# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled acceptance kernels; see ``_pykernels`` for the encoding."""

from libc.stdlib cimport malloc, calloc, free


cdef long _prep_tapes(object tapes, long n, long **flat, long **starts, long **lengths, long extra):
    cdef long total = 0, k, i
    for t in tapes:
        total += len(t)
    flat[0] = <long *> malloc((total + 1) * sizeof(long))
    starts[0] = <long *> malloc((n + 1) * sizeof(long))
    lengths[0] = <long *> malloc((n + 1) * sizeof(long))
    i = 0
    for k in range(n):
        t = tapes[k]
        starts[0][k] = i
        lengths[0][k] = len(t) + extra
        for s in t:
            flat[0][i] = s
            i += 1
    return total


def accepts_def1(long n, long base, long[:] offsets, long[:] targets, signed char[:] moves,
                 object tapes, long initial, unsigned char[:] accepting):
    cdef long *flat
    cdef long *starts
    cdef long *lengths
    _prep_tapes(tapes, n, &flat, &starts, &lengths, 0)
    cdef long num_states = accepting.shape[0]
    cdef long k, size = 1, key, e, code, q, cfg, rest, head, table_stride = 1
    cdef long strides[64]
    cdef long heads[64]
    cdef long sym_pow[64]
    for k in range(n):
        strides[k] = size
        size *= lengths[k]
        sym_pow[k] = table_stride
        table_stride *= base
    cdef long total = num_states * size
    cdef unsigned char *seen = <unsigned char *> calloc(total, 1)
    cdef long *queue = <long *> malloc(total * sizeof(long))
    cdef long qhead = 0, qtail = 0
    cdef bint found = False, at_end
    seen[initial * size] = 1
    queue[qtail] = initial * size
    qtail += 1
    while qhead < qtail:
        cfg = queue[qhead]
        qhead += 1
        q = cfg // size
        rest = cfg - q * size
        at_end = True
        for k in range(n):
            heads[k] = (rest // strides[k]) % lengths[k]
            if heads[k] != lengths[k] - 1:
                at_end = False
        if at_end and accepting[q]:
            found = True
            break
        key = q * table_stride
        for k in range(n):
            key += flat[starts[k] + heads[k]] * sym_pow[k]
        for e in range(offsets[key], offsets[key + 1]):
            code = targets[e] * size
            for k in range(n):
                code += (heads[k] + moves[e * n + k]) * strides[k]
            if not seen[code]:
                seen[code] = 1
                queue[qtail] = code
                qtail += 1
    free(seen)
    free(queue)
    free(flat)
    free(starts)
    free(lengths)
    return found


def accepts_taped(long nsym, long[:] tape_of, long[:] offsets, long[:] targets,
                  object tapes, object initials, unsigned char[:] accepting):
    cdef long n = len(tapes)
    cdef long *flat
    cdef long *starts
    cdef long *lengths
    _prep_tapes(tapes, n, &flat, &starts, &lengths, 1)
    cdef long num_states = accepting.shape[0]
    cdef long k, size = 1, key, e, code, q, cfg, rest, t, pos, sym, step
    cdef long strides[64]
    cdef long heads[64]
    for k in range(n):
        strides[k] = size
        size *= lengths[k]
    cdef long total = num_states * size
    cdef unsigned char *seen = <unsigned char *> calloc(total, 1)
    cdef long *queue = <long *> malloc(total * sizeof(long))
    cdef long qhead = 0, qtail = 0
    cdef bint found = False, at_end
    for init in initials:
        q = init
        if not seen[q * size]:
            seen[q * size] = 1
            queue[qtail] = q * size
            qtail += 1
    while qhead < qtail:
        cfg = queue[qhead]
        qhead += 1
        q = cfg // size
        rest = cfg - q * size
        at_end = True
        for k in range(n):
            heads[k] = (rest // strides[k]) % lengths[k]
            if heads[k] != lengths[k] - 1:
                at_end = False
        if at_end and accepting[q]:
            found = True
            break
        t = tape_of[q]
        pos = heads[t]
        if pos == lengths[t] - 1:
            sym = nsym - 1
            step = 0
        else:
            sym = flat[starts[t] + pos]
            step = 1
        key = q * nsym + sym
        for e in range(offsets[key], offsets[key + 1]):
            code = cfg - q * size + targets[e] * size + step * strides[t]
            if not seen[code]:
                seen[code] = 1
                queue[qtail] = code
                qtail += 1
    free(seen)
    free(queue)
    free(flat)
    free(starts)
    free(lengths)
    return found
