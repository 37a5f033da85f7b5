# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Must stay result-identical to ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int32_t idx_t


def assoc_violations(const idx_t[:, ::1] op):
    cdef Py_ssize_t n = op.shape[0], a, b, c
    cdef long count = 0
    cdef Py_ssize_t wa = -1, wb = -1, wc = -1
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if op[op[a, b], c] != op[a, op[b, c]]:
                    if count == 0:
                        wa, wb, wc = a, b, c
                    count += 1
    return count, (wa, wb, wc)


def left_distrib_violations(const idx_t[:, ::1] add, const idx_t[:, ::1] mul):
    # a(b+c) = ab + ac
    cdef Py_ssize_t n = add.shape[0], a, b, c
    cdef long count = 0
    cdef Py_ssize_t wa = -1, wb = -1, wc = -1
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    if count == 0:
                        wa, wb, wc = a, b, c
                    count += 1
    return count, (wa, wb, wc)


def right_distrib_violations(const idx_t[:, ::1] add, const idx_t[:, ::1] mul):
    # (a+b)c = ac + bc
    cdef Py_ssize_t n = add.shape[0], a, b, c
    cdef long count = 0
    cdef Py_ssize_t wa = -1, wb = -1, wc = -1
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[a, b], c] != add[mul[a, c], mul[b, c]]:
                    if count == 0:
                        wa, wb, wc = a, b, c
                    count += 1
    return count, (wa, wb, wc)


def quasi_regular_witnesses(const idx_t[:, ::1] add, const idx_t[:, ::1] mul, bint left):
    cdef Py_ssize_t n = add.shape[0], x, k
    cdef idx_t prod
    out = np.full(n, -1, dtype=np.int32)
    cdef idx_t[::1] w = out
    for x in range(n):
        for k in range(n):
            prod = mul[k, x] if left else mul[x, k]
            if add[add[x, k], prod] == 0:
                w[x] = <idx_t>k
                break
    return out


def closure(const idx_t[:, ::1] add, const cnp.uint8_t[::1] seed, const idx_t[:, ::1] ops):
    """Least additive subgroup containing ``seed`` and stable under every
    row map of ``ops`` (x -> ops[m, x])."""
    cdef Py_ssize_t n = add.shape[0], m_ops = ops.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] mask = out
    members = np.zeros(n, dtype=np.int32)
    cdef idx_t[::1] mem = members
    cdef Py_ssize_t size = 1, done = 0, old, i, m, x, g, steps
    cdef idx_t c
    # pending generators, processed as a stack
    gens = np.zeros(n + n * m_ops + 1, dtype=np.int32)
    cdef idx_t[::1] stack = gens
    cdef Py_ssize_t top = 0
    mask[0] = 1
    mem[0] = 0
    for x in range(n):
        if seed[x] and not mask[x]:
            stack[top] = <idx_t>x
            top += 1
    while True:
        while top > 0:
            top -= 1
            g = stack[top]
            if mask[g]:
                continue
            # coset expansion: H <- H + <g>
            old = size
            c = <idx_t>g
            steps = 0
            # steps bound keeps non-group tables from looping forever
            while not mask[c] and steps < n:
                steps += 1
                for i in range(old):
                    x = add[mem[i], c]
                    if not mask[x]:
                        mask[x] = 1
                        mem[size] = <idx_t>x
                        size += 1
                c = add[c, g]
        if done == size:
            break
        # operator images of newly added members
        while done < size:
            x = mem[done]
            done += 1
            for m in range(m_ops):
                c = ops[m, x]
                if not mask[c]:
                    if top >= stack.shape[0]:
                        gens = np.concatenate([gens, np.zeros(n, dtype=np.int32)])
                        stack = gens
                    stack[top] = c
                    top += 1
    return out
