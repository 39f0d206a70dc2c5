"""Pure-Python kernels for the per-source pair-graph searches.

Same contracts and the same canonical enumeration orders as the compiled
backend (`_speedups`), so both return bit-identical tables and witnesses:

* condition2   scans sources (p,s) lexicographically, then (q,t); the witness
  carries the smallest qualifying r.
* scc_table    fills the dense (p,q,s) table; the ill-defined witness is the
  lexicographically smallest such triple, with t1 = min of its t-set and
  t2 = the first member in a different component.
* lemma15      scans (q, r, q1, p, r1); r1/r2 are the first defined pair of
  entries that disagree.
* condition4   scans (q, r, p, q1, r1).

Table entries: component id >= 0, EMPTY = -1, ILL_DEFINED = -2.

Inputs are numpy arrays: delta (n,g) int32, reach (n,n) uint8,
cyc_pair (n*n,) uint8, cyc_state (n,) uint8, comp_of (n,) int32.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

EMPTY = -1
ILL_DEFINED = -2


def _bit_rows(mat) -> list[int]:
    # mat: (n,n) uint8 -> per-row bitmask ints (bit q of rows[p] = mat[p,q])
    out = []
    for row in np.asarray(mat, dtype=np.uint8):
        out.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return out


def _bit_cols(mat) -> list[int]:
    return _bit_rows(np.asarray(mat, dtype=np.uint8).T)


def _pair_masks(cyc: list[int], n: int) -> tuple[list[int], list[int]]:
    # by_first[q] has bit r set iff (q,r) is a cycle pair; by_second[t] iff (r=bit, t).
    by_first = [0] * n
    by_second = [0] * n
    for v, flag in enumerate(cyc):
        if flag:
            q, r = divmod(v, n)
            by_first[q] |= 1 << r
            by_second[r] |= 1 << q
    return by_first, by_second


def _bfs(n: int, g: int, drows, src: int) -> bytearray:
    visited = bytearray(n * n)
    visited[src] = 1
    queue = [src]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        a, b = divmod(v, n)
        ra = drows[a]
        rb = drows[b]
        for j in range(g):
            w = ra[j] * n + rb[j]
            if not visited[w]:
                visited[w] = 1
                queue.append(w)
    return visited


def pair_reach(n: int, g: int, delta, src: int) -> np.ndarray:
    drows = [tuple(r) for r in np.asarray(delta).tolist()]
    return np.frombuffer(bytes(_bfs(n, g, drows, src)), dtype=np.uint8).copy()


def condition2(n, g, delta, reach, cyc_pair):
    drows = [tuple(r) for r in np.asarray(delta).tolist()]
    rows = _bit_rows(reach)
    cols = _bit_cols(reach)
    cyc = np.asarray(cyc_pair).tolist()
    _, cyc_by_second = _pair_masks(cyc, n)
    for p in range(n):
        rp = rows[p]
        for s in range(n):
            if not cyc[p * n + s]:
                continue
            between = rp & cols[s]  # r with p >= r >= s
            if not between:
                continue
            ex = [between & cyc_by_second[t] for t in range(n)]
            if not any(ex):
                continue
            visited = _bfs(n, g, drows, p * n + s)
            for q in range(n):
                rq = rows[q]
                base = q * n
                for t in range(n):
                    if visited[base + t] and ex[t] and not (rq >> t) & 1:
                        m = ex[t]
                        r = (m & -m).bit_length() - 1
                        return (p, s, q, t, r)
    return None


def scc_table(n, g, delta, reach, cyc_pair, comp_of):
    drows = [tuple(r) for r in np.asarray(delta).tolist()]
    rows = _bit_rows(reach)
    cols = _bit_cols(reach)
    cyc = np.asarray(cyc_pair).tolist()
    comp = np.asarray(comp_of).tolist()
    cyc_by_first, _ = _pair_masks(cyc, n)
    tl = [EMPTY] * (n * n * n)
    for p in range(n):
        rp = rows[p]
        pbase = p * n
        for s in range(n):
            if not cyc[pbase + s] or not (rp >> s) & 1:
                continue
            between = rp & cols[s]
            visited = _bfs(n, g, drows, pbase + s)
            for q in range(n):
                if not (rp >> q) & 1:
                    continue
                if not between & cyc_by_first[q]:
                    continue  # no r with (q,r) a cycle pair and p >= r >= s
                rq = rows[q]
                base = q * n
                c = -1
                ill = False
                for t in range(n):
                    if visited[base + t] and (rq >> t) & 1 and cyc[base + t]:
                        ct = comp[t]
                        if c == -1:
                            c = ct
                        elif ct != c:
                            ill = True
                            break
                if ill:
                    tl[(pbase + q) * n + s] = ILL_DEFINED
                elif c != -1:
                    tl[(pbase + q) * n + s] = c
    table = np.array(tl, dtype=np.int32)
    ill_at = np.flatnonzero(table == ILL_DEFINED)
    if ill_at.size == 0:
        return table, None
    idx = int(ill_at[0])
    p, rem = divmod(idx, n * n)
    q, s = divmod(rem, n)
    visited = _bfs(n, g, drows, p * n + s)
    rq = rows[q]
    base = q * n
    t1 = -1
    t2 = -1
    for t in range(n):
        if visited[base + t] and (rq >> t) & 1 and cyc[base + t]:
            if t1 == -1:
                t1 = t
            elif comp[t] != comp[t1]:
                t2 = t
                break
    return table, (p, q, s, t1, t2)


def _distinct_vals(n: int, tl: list[int], cyc: list[int]) -> list[int]:
    # per (p,x): -1 if no defined entry over cycle-pair third slots,
    # the single component if exactly one distinct value, -3 if several.
    vals = [-1] * (n * n)
    for p in range(n):
        pn = p * n
        for x in range(n):
            base = (pn + x) * n
            v0 = -1
            for s in range(n):
                if cyc[pn + s]:
                    ent = tl[base + s]
                    if ent >= 0:
                        if v0 == -1:
                            v0 = ent
                        elif ent != v0:
                            v0 = -3
                            break
            vals[pn + x] = v0
    return vals


def lemma15(n, g, delta, reach, cyc_pair, cyc_state, table):
    drows = [tuple(r) for r in np.asarray(delta).tolist()]
    cols = _bit_cols(reach)
    cyc = np.asarray(cyc_pair).tolist()
    cst = np.asarray(cyc_state).tolist()
    tl = np.asarray(table).tolist()
    vals = _distinct_vals(n, tl, cyc)
    cyc_state_mask = 0
    for p in range(n):
        if cst[p]:
            cyc_state_mask |= 1 << p
    # Only p with several distinct defined entries for (p,q,.) can violate.
    sus_by_x = [0] * n
    for p in range(n):
        if cst[p]:
            for x in range(n):
                if vals[p * n + x] == -3:
                    sus_by_x[x] |= 1 << p
    for q in range(n):
        sus_q = sus_by_x[q]
        for r in range(n):
            if not cyc[q * n + r]:
                continue
            pmask = cyc_state_mask & cols[q] & cols[r]
            if not pmask:
                continue
            cand = pmask & sus_q
            if not cand:
                continue
            visited = _bfs(n, g, drows, q * n + r)
            for q1 in range(n):
                base = q1 * n
                rset = [r1 for r1 in range(n) if visited[base + r1] and cyc[base + r1]]
                if len(rset) < 2:
                    continue
                pm = cand
                while pm:
                    p = (pm & -pm).bit_length() - 1
                    pm &= pm - 1
                    pn = p * n
                    pbase = (pn + q) * n
                    first_val = -1
                    first_r1 = -1
                    for r1 in rset:
                        if not cyc[pn + r1]:
                            continue
                        ent = tl[pbase + r1]
                        if ent < 0:
                            continue
                        if first_val == -1:
                            first_val = ent
                            first_r1 = r1
                        elif ent != first_val:
                            return (p, q, r, q1, first_r1, r1)
    return None


def condition4(n, g, delta, reach, cyc_pair, cyc_state, table):
    drows = [tuple(r) for r in np.asarray(delta).tolist()]
    cols = _bit_cols(reach)
    cyc = np.asarray(cyc_pair).tolist()
    cst = np.asarray(cyc_state).tolist()
    tl = np.asarray(table).tolist()
    vals = _distinct_vals(n, tl, cyc)
    cyc_state_mask = 0
    for p in range(n):
        if cst[p]:
            cyc_state_mask |= 1 << p
    for q in range(n):
        for r in range(n):
            if not cyc[q * n + r]:
                continue
            pmask = cyc_state_mask & cols[q] & cols[r]
            if not pmask:
                continue
            # p can only violate if the (p,q,.) and (p,r,.) entry sets can disagree
            cand = []
            pm = pmask
            while pm:
                p = (pm & -pm).bit_length() - 1
                pm &= pm - 1
                va = vals[p * n + q]
                vb = vals[p * n + r]
                if va == -3 or vb == -3 or (va >= 0 and vb >= 0 and va != vb):
                    cand.append(p)
            if not cand:
                continue
            visited = _bfs(n, g, drows, q * n + r)
            for p in cand:
                pn = p * n
                pq = (pn + q) * n
                pr = (pn + r) * n
                for q1 in range(n):
                    if not cyc[pn + q1]:
                        continue
                    b_ent = tl[pr + q1]
                    if b_ent < 0:
                        continue
                    base = q1 * n
                    for r1 in range(n):
                        if not visited[base + r1]:
                            continue
                        if not cyc[pn + r1]:
                            continue
                        a_ent = tl[pq + r1]
                        if a_ent >= 0 and a_ent != b_ent:
                            return (p, q, r, q1, r1)
    return None
