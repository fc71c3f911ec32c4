"""Pure-Python versions of the integer kernels in ``_ckernels.pyx``.

Tables are flat ``array('i')`` buffers of length ``n*n`` with ``-1`` meaning
unknown.  Both implementations must agree exactly; ``tests/test_kernels.py``
runs them side by side.
"""
from __future__ import annotations


def perm_cycles(perm):
    """Cycles of a permutation of ``range(n)``; each starts at its minimum, ordered by minimum."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cyc)
    return cycles


def orbit_labels(perm):
    """Block label (index of the cycle minimum) for every point."""
    n = len(perm)
    label = [-1] * n
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        j = perm[start]
        while j != start:
            label[j] = start
            j = perm[j]
    return label


def assoc_witness(table, n):
    """First ``(i, j, k)`` with ``(ij)k != i(jk)`` in a complete table, else ``None``."""
    for i in range(n):
        ri = i * n
        for j in range(n):
            ij = table[ri + j]
            rij = ij * n
            rj = j * n
            for k in range(n):
                if table[rij + k] != table[ri + table[rj + k]]:
                    return (i, j, k)
    return None


def partial_conflict(table, n):
    """First triple whose four products are all known and disagree, else ``None``."""
    for i in range(n):
        ri = i * n
        for j in range(n):
            ij = table[ri + j]
            if ij < 0:
                continue
            rj = j * n
            for k in range(n):
                jk = table[rj + k]
                if jk < 0:
                    continue
                left = table[ij * n + k]
                right = table[ri + jk]
                if left >= 0 and right >= 0 and left != right:
                    return (i, j, k)
    return None


def _assign(table, opt_a, opt_b, n, x, y, v):
    # set cell (x, y) to v and its transpose to the other option
    c = x * n + y
    a, b = opt_a[c], opt_b[c]
    if v == a:
        w = b
    elif v == b:
        w = a
    else:
        return False
    table[c] = v
    table[y * n + x] = w
    return True


def propagate(table, opt_a, opt_b, n):
    """Unit propagation of associativity on a partial Cayley table.

    An unknown cell ``(x, y)`` with ``x != y`` has options ``opt_a``/``opt_b``;
    fixing it fixes ``(y, x)`` to the other option.  Returns ``False`` on a
    conflict; otherwise the table is extended in place to a fixpoint.
    """
    changed = True
    while changed:
        changed = False
        for i in range(n):
            ri = i * n
            for j in range(n):
                ij = table[ri + j]
                if ij < 0:
                    continue
                rj = j * n
                for k in range(n):
                    jk = table[rj + k]
                    if jk < 0:
                        continue
                    lc = ij * n + k
                    rc = ri + jk
                    left = table[lc]
                    right = table[rc]
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


def is_homomorphism(tg, th, phi, n):
    """Does ``phi`` (list, G-index -> H-index) respect multiplication?"""
    for i in range(n):
        pi = phi[i]
        ri = i * n
        for j in range(n):
            if phi[tg[ri + j]] != th[pi * n + phi[j]]:
                return False
    return True
