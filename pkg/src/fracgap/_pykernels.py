"""Pure-Python (numpy-vectorized) versions of the hot kernels.

Both kernels mirror ``_ckernels.pyx`` exactly, step for step, so the two
backends produce identical results up to floating-point reassociation.
"""

from __future__ import annotations

import math

import numpy as np


def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic Jacobi on a symmetric matrix.

    Returns ``(diag, vectors, sweeps, off)``: the diagonal after the last
    sweep, the accumulated rotation product, the number of sweeps performed
    and the final max off-diagonal magnitude. Works in place on a copy.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    sweeps = 0
    off = _max_off(a)
    while off >= tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # 1 / (2 theta); theta itself would overflow
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _max_off(a)
    return np.diag(a).copy(), v, sweeps, off


def _max_off(a):
    n = a.shape[0]
    if n < 2:
        return 0.0
    return float(np.max(np.abs(a[np.triu_indices(n, 1)])))


def enumerate_cycles(indptr, indices, dist, n, length, node_limit):
    """All simple cycles with ``length`` vertices, anchored at their smallest vertex.

    The graph is given in CSR form (sorted neighbor lists). A cycle is
    reported once as ``(r, v1, ..., v_{L-1})`` with ``r`` minimal and
    ``v1 < v_{L-1}``. Branches are cut when the BFS distance back to the root
    exceeds the remaining budget. Returns ``(cycles, nodes, aborted)``.
    """
    nbrs = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    adj = [set(x) for x in nbrs]
    dist = np.asarray(dist)
    found = []
    nodes = 0
    on_path = [False] * n
    path = [0] * length

    for r in range(n):
        dr = dist[r].tolist()
        path[0] = r
        on_path[r] = True
        # stack of (depth, neighbor iterator position)
        stack = [0]
        depth = 0
        while stack:
            u = path[depth]
            pos = stack[-1]
            row = nbrs[u]
            advanced = False
            while pos < len(row):
                w = row[pos]
                pos += 1
                if w <= r or on_path[w]:
                    continue
                remaining = length - depth - 1
                if dr[w] < 0 or dr[w] > remaining:
                    continue
                nodes += 1
                if nodes > node_limit:
                    on_path[r] = False
                    return found, nodes, True
                if depth + 1 == length - 1:
                    if r in adj[w] and path[1] < w:
                        path[depth + 1] = w
                        found.append(tuple(path))
                    continue
                stack[-1] = pos
                depth += 1
                path[depth] = w
                on_path[w] = True
                stack.append(0)
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            on_path[path[depth]] = False
            depth -= 1
        on_path[r] = False
    return found, nodes, False
