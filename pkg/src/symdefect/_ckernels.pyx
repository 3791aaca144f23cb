# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled multiplicity kernels; same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int64_t i64


cdef inline i64 _irrep_defect(Py_ssize_t l, int s) nogil:
    if s == 0:
        return l // 2
    return -(l // 2) - 1


cdef inline Py_ssize_t _min(Py_ssize_t a, Py_ssize_t b) nogil:
    return a if a < b else b


cdef inline void _add_tensor(i64[:, ::1] out, Py_ssize_t l1, int s1,
                             Py_ssize_t l2, int s2, i64 m) nogil:
    cdef Py_ssize_t i
    for i in range(_min(l1, l2) + 1):
        out[l1 + l2 - 2 * i, s1 ^ s2 ^ (i & 1)] += m


cdef inline i64 _tensor_irrep_defect(Py_ssize_t l1, int s1, Py_ssize_t l2, int s2) nogil:
    cdef Py_ssize_t i
    cdef i64 d = 0
    for i in range(_min(l1, l2) + 1):
        d += _irrep_defect(l1 + l2 - 2 * i, s1 ^ s2 ^ (i & 1))
    return d


def empty_counts(Py_ssize_t max_lambda):
    return np.zeros((max_lambda + 1, 2), dtype=np.int64)


cdef i64 _defect(i64[:, ::1] a) nogil:
    cdef Py_ssize_t l
    cdef i64 total = 0
    for l in range(a.shape[0]):
        total += a[l, 0] * (l // 2) - a[l, 1] * (l // 2 + 1)
    return total


def defect_counts(a):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    return int(_defect(av))


def dual_counts(a):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    out = np.zeros((av.shape[0], 2), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    cdef Py_ssize_t l
    cdef int flip
    for l in range(av.shape[0]):
        flip = l & 1
        ov[l, flip] += av[l, 0]
        ov[l, 1 ^ flip] += av[l, 1]
    return out


def tensor_counts(a, b):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    out = np.zeros((av.shape[0] + bv.shape[0] - 1, 2), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    cdef Py_ssize_t l1, l2
    cdef int s1, s2
    cdef i64 m1, m2
    with nogil:
        for l1 in range(av.shape[0]):
            for s1 in range(2):
                m1 = av[l1, s1]
                if m1 == 0:
                    continue
                for l2 in range(bv.shape[0]):
                    for s2 in range(2):
                        m2 = bv[l2, s2]
                        if m2 != 0:
                            _add_tensor(ov, l1, s1, l2, s2, m1 * m2)
    return out


def tensor_defect(a, b):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[:, ::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t l1, l2
    cdef int s1, s2
    cdef i64 m1, m2, total = 0
    with nogil:
        for l1 in range(av.shape[0]):
            for s1 in range(2):
                m1 = av[l1, s1]
                if m1 == 0:
                    continue
                for l2 in range(bv.shape[0]):
                    for s2 in range(2):
                        m2 = bv[l2, s2]
                        if m2 != 0:
                            total += m1 * m2 * _tensor_irrep_defect(l1, s1, l2, s2)
    return int(total)


cdef void _wedge2(i64[:, ::1] av, i64[:, ::1] ov) nogil:
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t l, l2, i, start2
    cdef int s, s2
    cdef i64 m, m2
    for l in range(n):
        for s in range(2):
            m = av[l, s]
            if m == 0:
                continue
            if l >= 1:
                for i in range((l - 1) // 2 + 1):
                    ov[2 * l - 4 * i - 2, 1] += m
            if m > 1:
                _add_tensor(ov, l, s, l, s, m * (m - 1) // 2)
            # later keys in (l, s) order
            for l2 in range(l, n):
                for s2 in range(2):
                    if l2 == l and s2 <= s:
                        continue
                    m2 = av[l2, s2]
                    if m2 != 0:
                        _add_tensor(ov, l, s, l2, s2, m * m2)


def wedge2_counts(a):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    out = np.zeros((2 * av.shape[0] - 1, 2), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    with nogil:
        _wedge2(av, ov)
    return out


def wedge2_defect(a):
    cdef i64[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t l, l2, i
    cdef int s, s2
    cdef i64 m, m2, total = 0
    with nogil:
        for l in range(n):
            for s in range(2):
                m = av[l, s]
                if m == 0:
                    continue
                if l >= 1:
                    for i in range((l - 1) // 2 + 1):
                        total += m * _irrep_defect(2 * l - 4 * i - 2, 1)
                if m > 1:
                    total += (m * (m - 1) // 2) * _tensor_irrep_defect(l, s, l, s)
                for l2 in range(l, n):
                    for s2 in range(2):
                        if l2 == l and s2 <= s:
                            continue
                        m2 = av[l2, s2]
                        if m2 != 0:
                            total += m * m2 * _tensor_irrep_defect(l, s, l2, s2)
    return int(total)


def bar_sum_counts(u):
    cdef i64[::1] uv = np.ascontiguousarray(u, dtype=np.int64)
    out = np.zeros((uv.shape[0], 2), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    cdef Py_ssize_t l
    for l in range(uv.shape[0]):
        ov[l, 0] = uv[l]
        ov[l, 1] = uv[l]
    return out


def bar_sum_defect(u):
    cdef i64[::1] uv = np.ascontiguousarray(u, dtype=np.int64)
    cdef Py_ssize_t l
    cdef i64 total = 0
    for l in range(uv.shape[0]):
        total += uv[l] * (_irrep_defect(l, 0) + _irrep_defect(l, 1))
    return int(total)


cdef void _bar_tensor(i64[::1] uv, i64[:, ::1] ov) nogil:
    cdef Py_ssize_t n = uv.shape[0]
    cdef Py_ssize_t l, l2, i, nu
    cdef i64 m, m2, pairs
    for l in range(n):
        m = uv[l]
        if m == 0:
            continue
        pairs = m * (m - 1) // 2
        for i in range(l + 1):
            ov[2 * l - 2 * i, 1] += m + pairs
            ov[2 * l - 2 * i, 0] += pairs
        for l2 in range(l + 1, n):
            m2 = uv[l2]
            if m2 == 0:
                continue
            for i in range(l + 1):
                nu = l + l2 - 2 * i
                ov[nu, 0] += m * m2
                ov[nu, 1] += m * m2


def bar_tensor_counts(u):
    cdef i64[::1] uv = np.ascontiguousarray(u, dtype=np.int64)
    out = np.zeros((2 * uv.shape[0] - 1, 2), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    with nogil:
        _bar_tensor(uv, ov)
    return out


def bar_tensor_defect(u):
    cdef i64[::1] uv = np.ascontiguousarray(u, dtype=np.int64)
    cdef Py_ssize_t n = uv.shape[0]
    cdef Py_ssize_t l, l2, i, nu
    cdef i64 m, m2, pairs, total = 0
    with nogil:
        for l in range(n):
            m = uv[l]
            if m == 0:
                continue
            pairs = m * (m - 1) // 2
            for i in range(l + 1):
                nu = 2 * l - 2 * i
                total += (m + pairs) * _irrep_defect(nu, 1) + pairs * _irrep_defect(nu, 0)
            for l2 in range(l + 1, n):
                m2 = uv[l2]
                if m2 == 0:
                    continue
                for i in range(l + 1):
                    nu = l + l2 - 2 * i
                    total += m * m2 * (_irrep_defect(nu, 0) + _irrep_defect(nu, 1))
    return int(total)
