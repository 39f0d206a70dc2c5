# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the per-source pair-graph searches.

Mirrors `_kernels_py` exactly: same contracts, same canonical enumeration
orders, bit-identical tables and witnesses.  See that module for the order
conventions.
"""

from libc.string cimport memset

import numpy as np

BACKEND_NAME = "compiled"

EMPTY = -1
ILL_DEFINED = -2


cdef void _bfs(int src, int n, int g, const int[:, ::1] delta,
               unsigned char[::1] visited, int[::1] queue) noexcept:
    cdef int head = 0, tail = 1, v, a, b, j, w
    memset(&visited[0], 0, n * n)
    visited[src] = 1
    queue[0] = src
    while head < tail:
        v = queue[head]
        head += 1
        a = v / n
        b = v % n
        for j in range(g):
            w = delta[a, j] * n + delta[b, j]
            if visited[w] == 0:
                visited[w] = 1
                queue[tail] = w
                tail += 1


def pair_reach(int n, int g, delta, int src):
    cdef const int[:, ::1] d = np.ascontiguousarray(delta, dtype=np.intc)
    visited_arr = np.zeros(n * n, dtype=np.uint8)
    queue_arr = np.empty(n * n, dtype=np.intc)
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] queue = queue_arr
    _bfs(src, n, g, d, visited, queue)
    return visited_arr


def condition2(int n, int g, delta, reach, cyc_pair):
    cdef const int[:, ::1] d = np.ascontiguousarray(delta, dtype=np.intc)
    cdef const unsigned char[:, ::1] re = np.ascontiguousarray(reach, dtype=np.uint8)
    cdef const unsigned char[::1] cyc = np.ascontiguousarray(cyc_pair, dtype=np.uint8)
    visited_arr = np.zeros(n * n, dtype=np.uint8)
    queue_arr = np.empty(n * n, dtype=np.intc)
    ex_arr = np.empty(n, dtype=np.uint8)
    between_arr = np.empty(n, dtype=np.uint8)
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] queue = queue_arr
    cdef unsigned char[::1] ex = ex_arr
    cdef unsigned char[::1] between = between_arr
    cdef int p, s, q, t, r, cnt, any_t, base, e
    for p in range(n):
        for s in range(n):
            if cyc[p * n + s] == 0:
                continue
            cnt = 0
            for r in range(n):
                between[r] = re[p, r] & re[r, s]
                cnt += between[r]
            if cnt == 0:
                continue
            any_t = 0
            for t in range(n):
                e = 0
                for r in range(n):
                    if between[r] != 0 and cyc[r * n + t] != 0:
                        e = 1
                        break
                ex[t] = e
                any_t |= e
            if any_t == 0:
                continue
            _bfs(p * n + s, n, g, d, visited, queue)
            for q in range(n):
                base = q * n
                for t in range(n):
                    if visited[base + t] != 0 and ex[t] != 0 and re[q, t] == 0:
                        for r in range(n):
                            if between[r] != 0 and cyc[r * n + t] != 0:
                                return (p, s, q, t, r)
    return None


def scc_table(int n, int g, delta, reach, cyc_pair, comp_of):
    cdef const int[:, ::1] d = np.ascontiguousarray(delta, dtype=np.intc)
    cdef const unsigned char[:, ::1] re = np.ascontiguousarray(reach, dtype=np.uint8)
    cdef const unsigned char[::1] cyc = np.ascontiguousarray(cyc_pair, dtype=np.uint8)
    cdef const int[::1] comp = np.ascontiguousarray(comp_of, dtype=np.intc)
    table_arr = np.full(n * n * n, EMPTY, dtype=np.intc)
    visited_arr = np.zeros(n * n, dtype=np.uint8)
    queue_arr = np.empty(n * n, dtype=np.intc)
    cdef int[::1] table = table_arr
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] queue = queue_arr
    cdef int p, s, q, t, r, c, ct, has_r, ill, base, t1, t2
    cdef Py_ssize_t idx, total = <Py_ssize_t>n * n * n
    for p in range(n):
        for s in range(n):
            if cyc[p * n + s] == 0 or re[p, s] == 0:
                continue
            _bfs(p * n + s, n, g, d, visited, queue)
            for q in range(n):
                if re[p, q] == 0:
                    continue
                has_r = 0
                for r in range(n):
                    if re[p, r] != 0 and re[r, s] != 0 and cyc[q * n + r] != 0:
                        has_r = 1
                        break
                if has_r == 0:
                    continue
                base = q * n
                c = -1
                ill = 0
                for t in range(n):
                    if visited[base + t] != 0 and re[q, t] != 0 and cyc[base + t] != 0:
                        ct = comp[t]
                        if c == -1:
                            c = ct
                        elif ct != c:
                            ill = 1
                            break
                if ill != 0:
                    table[(<Py_ssize_t>p * n + q) * n + s] = ILL_DEFINED
                elif c != -1:
                    table[(<Py_ssize_t>p * n + q) * n + s] = c
    idx = -1
    for idx in range(total):
        if table[idx] == ILL_DEFINED:
            break
    else:
        return table_arr, None
    if table[idx] != ILL_DEFINED:
        return table_arr, None
    p = <int>(idx / (n * n))
    q = <int>((idx / n) % n)
    s = <int>(idx % n)
    _bfs(p * n + s, n, g, d, visited, queue)
    base = q * n
    t1 = -1
    t2 = -1
    for t in range(n):
        if visited[base + t] != 0 and re[q, t] != 0 and cyc[base + t] != 0:
            if t1 == -1:
                t1 = t
            elif comp[t] != comp[t1]:
                t2 = t
                break
    return table_arr, (p, q, s, t1, t2)


cdef void _distinct_vals(int n, const int[::1] table, const unsigned char[::1] cyc,
                         int[::1] vals) noexcept:
    cdef int p, x, s, v0, ent
    cdef Py_ssize_t base
    for p in range(n):
        for x in range(n):
            base = (<Py_ssize_t>p * n + x) * n
            v0 = -1
            for s in range(n):
                if cyc[p * n + s] != 0:
                    ent = table[base + s]
                    if ent >= 0:
                        if v0 == -1:
                            v0 = ent
                        elif ent != v0:
                            v0 = -3
                            break
            vals[p * n + x] = v0


def lemma15(int n, int g, delta, reach, cyc_pair, cyc_state, table_in):
    cdef const int[:, ::1] d = np.ascontiguousarray(delta, dtype=np.intc)
    cdef const unsigned char[:, ::1] re = np.ascontiguousarray(reach, dtype=np.uint8)
    cdef const unsigned char[::1] cyc = np.ascontiguousarray(cyc_pair, dtype=np.uint8)
    cdef const unsigned char[::1] cst = np.ascontiguousarray(cyc_state, dtype=np.uint8)
    cdef const int[::1] table = np.ascontiguousarray(table_in, dtype=np.intc)
    visited_arr = np.zeros(n * n, dtype=np.uint8)
    queue_arr = np.empty(n * n, dtype=np.intc)
    vals_arr = np.empty(n * n, dtype=np.intc)
    rset_arr = np.empty(n, dtype=np.intc)
    pset_arr = np.empty(n, dtype=np.intc)
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] queue = queue_arr
    cdef int[::1] vals = vals_arr
    cdef int[::1] rset = rset_arr
    cdef int[::1] pset = pset_arr
    cdef int q, r, q1, p, r1, ent, has_p, np_, nr, i, j, base, first_val, first_r1
    cdef Py_ssize_t pbase
    _distinct_vals(n, table, cyc, vals)
    for q in range(n):
        for r in range(n):
            if cyc[q * n + r] == 0:
                continue
            has_p = 0
            np_ = 0
            for p in range(n):
                if cst[p] != 0 and re[p, q] != 0 and re[p, r] != 0:
                    has_p = 1
                    if vals[p * n + q] == -3:
                        pset[np_] = p
                        np_ += 1
            if has_p == 0 or np_ == 0:
                continue
            _bfs(q * n + r, n, g, d, visited, queue)
            for q1 in range(n):
                base = q1 * n
                nr = 0
                for r1 in range(n):
                    if visited[base + r1] != 0 and cyc[base + r1] != 0:
                        rset[nr] = r1
                        nr += 1
                if nr < 2:
                    continue
                for i in range(np_):
                    p = pset[i]
                    pbase = (<Py_ssize_t>p * n + q) * n
                    first_val = -1
                    first_r1 = -1
                    for j in range(nr):
                        r1 = rset[j]
                        if cyc[p * n + r1] == 0:
                            continue
                        ent = table[pbase + r1]
                        if ent < 0:
                            continue
                        if first_val == -1:
                            first_val = ent
                            first_r1 = r1
                        elif ent != first_val:
                            return (p, q, r, q1, first_r1, r1)
    return None


def condition4(int n, int g, delta, reach, cyc_pair, cyc_state, table_in):
    cdef const int[:, ::1] d = np.ascontiguousarray(delta, dtype=np.intc)
    cdef const unsigned char[:, ::1] re = np.ascontiguousarray(reach, dtype=np.uint8)
    cdef const unsigned char[::1] cyc = np.ascontiguousarray(cyc_pair, dtype=np.uint8)
    cdef const unsigned char[::1] cst = np.ascontiguousarray(cyc_state, dtype=np.uint8)
    cdef const int[::1] table = np.ascontiguousarray(table_in, dtype=np.intc)
    visited_arr = np.zeros(n * n, dtype=np.uint8)
    queue_arr = np.empty(n * n, dtype=np.intc)
    vals_arr = np.empty(n * n, dtype=np.intc)
    pset_arr = np.empty(n, dtype=np.intc)
    cdef unsigned char[::1] visited = visited_arr
    cdef int[::1] queue = queue_arr
    cdef int[::1] vals = vals_arr
    cdef int[::1] pset = pset_arr
    cdef int q, r, q1, p, r1, va, vb, np_, i, base, a_ent, b_ent
    cdef Py_ssize_t pq, pr
    _distinct_vals(n, table, cyc, vals)
    for q in range(n):
        for r in range(n):
            if cyc[q * n + r] == 0:
                continue
            np_ = 0
            for p in range(n):
                if cst[p] != 0 and re[p, q] != 0 and re[p, r] != 0:
                    va = vals[p * n + q]
                    vb = vals[p * n + r]
                    if va == -3 or vb == -3 or (va >= 0 and vb >= 0 and va != vb):
                        pset[np_] = p
                        np_ += 1
            if np_ == 0:
                continue
            _bfs(q * n + r, n, g, d, visited, queue)
            for i in range(np_):
                p = pset[i]
                pq = (<Py_ssize_t>p * n + q) * n
                pr = (<Py_ssize_t>p * n + r) * n
                for q1 in range(n):
                    if cyc[p * n + q1] == 0:
                        continue
                    b_ent = table[pr + q1]
                    if b_ent < 0:
                        continue
                    base = q1 * n
                    for r1 in range(n):
                        if visited[base + r1] == 0:
                            continue
                        if cyc[p * n + r1] == 0:
                            continue
                        a_ent = table[pq + r1]
                        if a_ent >= 0 and a_ent != b_ent:
                            return (p, q, r, q1, r1)
    return None
