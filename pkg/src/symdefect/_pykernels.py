"""Pure-Python multiplicity kernels.

Graded multiplicities are stored as int64 arrays of shape ``(L + 1, 2)``:
``a[l, 0]`` counts ``V(l,+)`` and ``a[l, 1]`` counts ``V(l,-)``.  Ungraded
multiplicities are 1-d arrays indexed by highest weight.  ``_ckernels.pyx``
implements the same functions with identical semantics.
"""

import numpy as np

BACKEND = "python"


def _irrep_defect(l, s):
    # +: floor(l/2); -: -floor(l/2) - 1
    return l // 2 if s == 0 else -(l // 2) - 1


def empty_counts(max_lambda):
    return np.zeros((max_lambda + 1, 2), dtype=np.int64)


def defect_counts(a):
    total = 0
    for l in range(a.shape[0]):
        total += int(a[l, 0]) * (l // 2) - int(a[l, 1]) * (l // 2 + 1)
    return total


def dual_counts(a):
    out = np.zeros_like(a)
    for l in range(a.shape[0]):
        flip = l & 1
        out[l, flip] += a[l, 0]
        out[l, 1 ^ flip] += a[l, 1]
    return out


def _add_tensor(out, l1, s1, l2, s2, m):
    for i in range(min(l1, l2) + 1):
        out[l1 + l2 - 2 * i, s1 ^ s2 ^ (i & 1)] += m


def tensor_counts(a, b):
    la, lb = a.shape[0] - 1, b.shape[0] - 1
    out = np.zeros((la + lb + 1, 2), dtype=np.int64)
    for l1 in range(la + 1):
        for s1 in range(2):
            m1 = int(a[l1, s1])
            if not m1:
                continue
            for l2 in range(lb + 1):
                for s2 in range(2):
                    m2 = int(b[l2, s2])
                    if m2:
                        _add_tensor(out, l1, s1, l2, s2, m1 * m2)
    return out


def tensor_defect(a, b):
    total = 0
    for l1 in range(a.shape[0]):
        for s1 in range(2):
            m1 = int(a[l1, s1])
            if not m1:
                continue
            for l2 in range(b.shape[0]):
                for s2 in range(2):
                    m2 = int(b[l2, s2])
                    if not m2:
                        continue
                    d = 0
                    for i in range(min(l1, l2) + 1):
                        d += _irrep_defect(l1 + l2 - 2 * i, s1 ^ s2 ^ (i & 1))
                    total += m1 * m2 * d
    return total


def _keys(a):
    return [(l, s, int(a[l, s])) for l in range(a.shape[0]) for s in range(2) if a[l, s]]


def wedge2_counts(a):
    lmax = a.shape[0] - 1
    out = np.zeros((2 * lmax + 1, 2), dtype=np.int64)
    keys = _keys(a)
    for idx, (l, s, m) in enumerate(keys):
        for i in range((l - 1) // 2 + 1):
            out[2 * l - 4 * i - 2, 1] += m
        pairs = m * (m - 1) // 2
        if pairs:
            _add_tensor(out, l, s, l, s, pairs)
        for l2, s2, m2 in keys[idx + 1:]:
            _add_tensor(out, l, s, l2, s2, m * m2)
    return out


def wedge2_defect(a):
    return defect_counts(wedge2_counts(a))


def bar_sum_counts(u):
    out = np.zeros((u.shape[0], 2), dtype=np.int64)
    out[:, 0] = u
    out[:, 1] = u
    return out


def bar_sum_defect(u):
    # each V(l,+) + V(l,-) pair contributes floor(l/2) - floor(l/2) - 1
    return -int(u.sum())


def bar_tensor_counts(u):
    lmax = u.shape[0] - 1
    out = np.zeros((2 * lmax + 1, 2), dtype=np.int64)
    for l in range(lmax + 1):
        m = int(u[l])
        if not m:
            continue
        pairs = m * (m - 1) // 2
        for i in range(l + 1):
            out[2 * l - 2 * i, 1] += m + pairs
            out[2 * l - 2 * i, 0] += pairs
        for l2 in range(l + 1, lmax + 1):
            m2 = int(u[l2])
            if not m2:
                continue
            for i in range(l + 1):
                nu = l + l2 - 2 * i
                out[nu, 0] += m * m2
                out[nu, 1] += m * m2
    return out


def bar_tensor_defect(u):
    return defect_counts(bar_tensor_counts(u))
