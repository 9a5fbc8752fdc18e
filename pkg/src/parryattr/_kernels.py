"""Compiled suffix-automaton kernels behind ``verifier.is_attractor``.

A state of the automaton is a class of factors sharing one end-position set E;
its factors have lengths in ``(len(link), len]``. With ``h(e)`` the distance
from ``e`` back to the nearest attractor position at or before ``e``, the
occurrence of length L ending at e crosses the set iff ``h(e) < L``. The whole
class is covered iff ``min_{e in E} h(e) <= len(link)``.
"""
import numpy as np
from numba import njit

BIG = np.int64(1) << 40


@njit(cache=True)
def build_sam(w, sigma):
    n = w.shape[0]
    size = 2 * n + 2
    nxt = np.full((size, sigma), -1, np.int32)
    link = np.full(size, -1, np.int32)
    length = np.zeros(size, np.int32)
    firstpos = np.zeros(size, np.int32)
    endpos = np.full(size, -1, np.int32)
    last = 0
    cnt = 1
    for i in range(n):
        c = w[i]
        cur = cnt
        cnt += 1
        length[cur] = length[last] + 1
        firstpos[cur] = i
        endpos[cur] = i
        p = last
        while p != -1 and nxt[p, c] == -1:
            nxt[p, c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p, c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = cnt
                cnt += 1
                length[clone] = length[p] + 1
                for a in range(sigma):
                    nxt[clone, a] = nxt[q, a]
                link[clone] = link[q]
                firstpos[clone] = firstpos[q]
                while p != -1 and nxt[p, c] == q:
                    nxt[p, c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    # states by decreasing length, root excluded
    counts = np.zeros(n + 2, np.int64)
    for s in range(1, cnt):
        counts[length[s]] += 1
    starts = np.zeros(n + 2, np.int64)
    acc = 0
    for L in range(n, 0, -1):
        starts[L] = acc
        acc += counts[L]
    order = np.empty(cnt - 1, np.int32)
    for s in range(1, cnt):
        L = length[s]
        order[starts[L]] = s
        starts[L] += 1
    return link[:cnt].copy(), length[:cnt].copy(), firstpos[:cnt].copy(), endpos[:cnt].copy(), order


@njit(cache=True)
def check_sam(link, length, firstpos, endpos, order, n, mask):
    """Return (shortest uncovered length or 0, its leftmost start, distinct count, covered count)."""
    cnt = link.shape[0]
    h = np.empty(n, np.int64)
    prev = -1
    for e in range(n):
        if mask[e]:
            prev = e
        h[e] = e - prev if prev >= 0 else BIG
    minh = np.full(cnt, BIG, np.int64)
    for s in range(1, cnt):
        if endpos[s] >= 0:
            minh[s] = h[endpos[s]]
    for idx in range(order.shape[0]):
        s = order[idx]
        parent = link[s]
        if minh[s] < minh[parent]:
            minh[parent] = minh[s]
    best_len = BIG
    best_start = BIG
    distinct = 0
    covered = 0
    for s in range(1, cnt):
        base = length[link[s]]
        distinct += length[s] - base
        # lengths L > minh[s] are covered
        if minh[s] < length[s]:
            covered += length[s] - max(base, minh[s])
        if minh[s] > base:
            L = base + 1
            start = firstpos[s] - L + 1
            if L < best_len or (L == best_len and start < best_start):
                best_len = L
                best_start = start
    if best_len == BIG:
        return 0, -1, distinct, covered
    return best_len, best_start, distinct, covered
