# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()


cdef double _max_off(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef double m = 0.0, x
    for i in range(n):
        for j in range(i + 1, n):
            x = fabs(a[i, j])
            if x > m:
                m = x
    return m


def jacobi_eigh(a_in, double tol, int max_sweeps):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] a_arr = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef Py_ssize_t n = a_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, k
    cdef double apq, diff, theta, t, c, s, x, y
    cdef int sweeps = 0
    cdef double off
    with nogil:
        off = _max_off(a, n)
        while off >= tol and sweeps < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    diff = a[q, q] - a[p, p]
                    if fabs(apq) < 1e-150 * fabs(diff):
                        t = apq / diff  # 1 / (2 theta); theta itself would overflow
                    else:
                        theta = diff / (2.0 * apq)
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        x = a[k, p]
                        y = a[k, q]
                        a[k, p] = c * x - s * y
                        a[k, q] = s * x + c * y
                    for k in range(n):
                        x = a[p, k]
                        y = a[q, k]
                        a[p, k] = c * x - s * y
                        a[q, k] = s * x + c * y
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for k in range(n):
                        x = v[k, p]
                        y = v[k, q]
                        v[k, p] = c * x - s * y
                        v[k, q] = s * x + c * y
            sweeps += 1
            off = _max_off(a, n)
    return np.diag(a_arr).copy(), v_arr, sweeps, off


def enumerate_cycles(indptr_in, indices_in, dist_in, Py_ssize_t n, Py_ssize_t length, long long node_limit):
    cdef int[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.intc)
    cdef int[::1] indices = np.ascontiguousarray(indices_in, dtype=np.intc)
    cdef int[:, ::1] dist = np.ascontiguousarray(dist_in, dtype=np.intc)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] adj_arr = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] adj = adj_arr
    cdef int[::1] on_path = np.zeros(n, dtype=np.intc)
    cdef int[::1] path = np.zeros(max(length, 1), dtype=np.intc)
    cdef int[::1] stack = np.zeros(max(length, 1), dtype=np.intc)
    cdef Py_ssize_t u, r, depth, pos, end, remaining, i
    cdef int w
    cdef long long nodes = 0
    cdef bint advanced
    found = []

    for u in range(n):
        for pos in range(indptr[u], indptr[u + 1]):
            adj[u, indices[pos]] = 1

    for r in range(n):
        path[0] = <int>r
        on_path[r] = 1
        depth = 0
        stack[0] = indptr[r]
        while depth >= 0:
            u = path[depth]
            pos = stack[depth]
            end = indptr[u + 1]
            advanced = False
            while pos < end:
                w = indices[pos]
                pos += 1
                if w <= r or on_path[w]:
                    continue
                remaining = length - depth - 1
                if dist[r, w] < 0 or dist[r, w] > remaining:
                    continue
                nodes += 1
                if nodes > node_limit:
                    return found, nodes, True
                if depth + 1 == length - 1:
                    if adj[r, w] and path[1] < w:
                        path[depth + 1] = w
                        found.append(tuple([path[i] for i in range(length)]))
                    continue
                stack[depth] = <int>pos
                depth += 1
                path[depth] = w
                on_path[w] = 1
                stack[depth] = indptr[w]
                advanced = True
                break
            if advanced:
                continue
            on_path[path[depth]] = 0
            depth -= 1
    return found, nodes, False
