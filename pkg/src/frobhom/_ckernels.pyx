# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; see ``_kernels_py.py`` for the reference versions."""


DEF MAXN = 256


def perm_cycles(perm):
    cdef Py_ssize_t n = len(perm)
    cdef Py_ssize_t i, start, j
    cdef int p[MAXN]
    cdef char seen[MAXN]
    cdef list cycles = []
    cdef list cyc
    if n > MAXN:
        raise ValueError("permutation too long for the compiled kernel")
    for i in range(n):
        p[i] = perm[i]
        seen[i] = 0
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = 1
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = 1
            j = p[j]
        cycles.append(cyc)
    return cycles


def orbit_labels(perm):
    cdef Py_ssize_t n = len(perm)
    cdef Py_ssize_t i, start, j
    cdef int p[MAXN]
    cdef int label[MAXN]
    if n > MAXN:
        raise ValueError("permutation too long for the compiled kernel")
    for i in range(n):
        p[i] = perm[i]
        label[i] = -1
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        j = p[start]
        while j != start:
            label[j] = start
            j = p[j]
    return [label[i] for i in range(n)]


def assoc_witness(int[::1] table, int n):
    cdef int i, j, k, ij
    for i in range(n):
        for j in range(n):
            ij = table[i * n + j]
            for k in range(n):
                if table[ij * n + k] != table[i * n + table[j * n + k]]:
                    return (i, j, k)
    return None


def partial_conflict(int[::1] table, int n):
    cdef int i, j, k, ij, jk, left, right
    for i in range(n):
        for j in range(n):
            ij = table[i * n + j]
            if ij < 0:
                continue
            for k in range(n):
                jk = table[j * n + k]
                if jk < 0:
                    continue
                left = table[ij * n + k]
                right = table[i * n + jk]
                if left >= 0 and right >= 0 and left != right:
                    return (i, j, k)
    return None


cdef inline bint _assign(int[::1] table, int[::1] opt_a, int[::1] opt_b,
                         int n, int x, int y, int v):
    cdef int c = x * n + y
    cdef int a = opt_a[c]
    cdef int b = opt_b[c]
    cdef int w
    if v == a:
        w = b
    elif v == b:
        w = a
    else:
        return False
    table[c] = v
    table[y * n + x] = w
    return True


def propagate(int[::1] table, int[::1] opt_a, int[::1] opt_b, int n):
    cdef bint changed = True
    cdef int i, j, k, ij, jk, left, right
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                ij = table[i * n + j]
                if ij < 0:
                    continue
                for k in range(n):
                    jk = table[j * n + k]
                    if jk < 0:
                        continue
                    left = table[ij * n + k]
                    right = table[i * n + jk]
                    if left >= 0 and right >= 0:
                        if left != right:
                            return False
                    elif left >= 0:
                        if not _assign(table, opt_a, opt_b, n, i, jk, left):
                            return False
                        changed = True
                    elif right >= 0:
                        if not _assign(table, opt_a, opt_b, n, ij, k, right):
                            return False
                        changed = True
    return True


def is_homomorphism(int[::1] tg, int[::1] th, phi, int n):
    cdef int i, j, pi
    cdef list p = list(phi)
    for i in range(n):
        pi = p[i]
        for j in range(n):
            if p[tg[i * n + j]] != th[pi * n + <int>p[j]]:
                return False
    return True
