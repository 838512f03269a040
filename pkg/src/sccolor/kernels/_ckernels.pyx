# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Signatures and outputs match the pure-Python versions exactly; the test
suite runs both and compares.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()


cdef inline void _sift_up(int64_t[::1] heap, Py_ssize_t i) noexcept nogil:
    cdef int64_t item = heap[i]
    cdef Py_ssize_t parent
    while i > 0:
        parent = (i - 1) >> 1
        if heap[parent] <= item:
            break
        heap[i] = heap[parent]
        i = parent
    heap[i] = item


cdef inline void _sift_down(int64_t[::1] heap, Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t i = 0, child
    cdef int64_t item = heap[0]
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        if child + 1 < size and heap[child + 1] < heap[child]:
            child += 1
        if heap[child] >= item:
            break
        heap[i] = heap[child]
        i = child
    heap[i] = item


def smallest_last(Py_ssize_t n, indptr_in, nbrs_in):
    cdef int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef int64_t[::1] nbrs = np.ascontiguousarray(nbrs_in, dtype=np.int64)
    cdef Py_ssize_t m2 = nbrs.shape[0]
    cdef int64_t[::1] deg = np.empty(n, dtype=np.int64)
    cdef uint8_t[::1] removed = np.zeros(n, dtype=np.uint8)
    # lazy-deletion heap keyed by deg * (n + 1) + id
    cdef int64_t[::1] heap = np.empty(n + m2 + 1, dtype=np.int64)
    order_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] order = order_arr
    cdef Py_ssize_t size = 0, v, u, j, pos = n
    cdef int64_t key, dv, d = 0, base = n + 1
    with nogil:
        for v in range(n):
            deg[v] = indptr[v + 1] - indptr[v]
            heap[size] = deg[v] * base + v
            size += 1
            _sift_up(heap, size - 1)
        while size > 0:
            key = heap[0]
            size -= 1
            if size > 0:
                heap[0] = heap[size]
                _sift_down(heap, size)
            v = key % base
            dv = key // base
            if removed[v] or dv != deg[v]:
                continue
            removed[v] = 1
            pos -= 1
            order[pos] = v
            if dv > d:
                d = dv
            for j in range(indptr[v], indptr[v + 1]):
                u = nbrs[j]
                if not removed[u]:
                    deg[u] -= 1
                    heap[size] = deg[u] * base + u
                    size += 1
                    _sift_up(heap, size - 1)
    return order_arr, int(d)


def prune(S_in, tails_in, heads_in, ctail_in, chead_in):
    S_arr = np.ascontiguousarray(S_in, dtype=bool)
    cdef uint8_t[:, ::1] S = S_arr.view(np.uint8)
    out_arr = S_arr.copy()
    cdef uint8_t[:, ::1] out = out_arr.view(np.uint8)
    cdef int64_t[::1] tails = np.ascontiguousarray(tails_in, dtype=np.int64)
    cdef int64_t[::1] heads = np.ascontiguousarray(heads_in, dtype=np.int64)
    cdef int64_t[::1] ctail = np.ascontiguousarray(ctail_in, dtype=np.int64)
    cdef int64_t[::1] chead = np.ascontiguousarray(chead_in, dtype=np.int64)
    cdef Py_ssize_t e, m = tails.shape[0]
    with nogil:
        for e in range(m):
            if S[tails[e], ctail[e]] and S[heads[e], chead[e]]:
                out[tails[e], ctail[e]] = 0
    return out_arr


def greedy_color(Py_ssize_t n, Py_ssize_t k, order_in, indptr_in, other_in,
                 self_cc_in, other_cc_in):
    cdef int64_t[::1] order = np.ascontiguousarray(order_in, dtype=np.int64)
    cdef int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef int64_t[::1] other = np.ascontiguousarray(other_in, dtype=np.int64)
    cdef int64_t[::1] self_cc = np.ascontiguousarray(self_cc_in, dtype=np.int64)
    cdef int64_t[::1] other_cc = np.ascontiguousarray(other_cc_in, dtype=np.int64)
    color_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] color = color_arr
    cdef int64_t[::1] stamp = np.full(max(k, 1), -1, dtype=np.int64)
    cdef Py_ssize_t i, v, j, c
    cdef int64_t cu
    with nogil:
        for i in range(order.shape[0]):
            v = order[i]
            for j in range(indptr[v], indptr[v + 1]):
                cu = color[other[j]]
                if cu >= 0 and cu == other_cc[j]:
                    stamp[self_cc[j]] = i
            for c in range(k):
                if stamp[c] != i:
                    color[v] = c
                    break
            if color[v] < 0:
                break
    return color_arr


cdef struct _Search:
    Py_ssize_t n
    Py_ssize_t k
    int64_t* order
    int64_t* indptr
    int64_t* other
    int64_t* self_cc
    int64_t* other_cc
    int64_t* blocked
    int64_t* avail
    int64_t* color
    int64_t* trail
    Py_ssize_t top


cdef bint _assign(_Search* s, Py_ssize_t i) noexcept nogil:
    if i == s.n:
        return True
    cdef Py_ssize_t v = s.order[i]
    cdef Py_ssize_t c, j, u, oc, start, t
    cdef bint ok
    for c in range(s.k):
        if s.blocked[v * s.k + c]:
            continue
        s.color[v] = c
        start = s.top
        ok = True
        for j in range(s.indptr[v], s.indptr[v + 1]):
            if s.self_cc[j] != c:
                continue
            u = s.other[j]
            if s.color[u] >= 0:
                continue
            oc = s.other_cc[j]
            s.blocked[u * s.k + oc] += 1
            s.trail[s.top] = u * s.k + oc
            s.top += 1
            if s.blocked[u * s.k + oc] == 1:
                s.avail[u] -= 1
                if s.avail[u] == 0:
                    ok = False
                    break
        if ok and _assign(s, i + 1):
            return True
        for t in range(start, s.top):
            s.blocked[s.trail[t]] -= 1
            if s.blocked[s.trail[t]] == 0:
                s.avail[s.trail[t] // s.k] += 1
        s.top = start
        s.color[v] = -1
    return False


def backtrack(Py_ssize_t n, Py_ssize_t k, order_in, indptr_in, other_in,
              self_cc_in, other_cc_in):
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if k == 0:
        return None
    cdef int64_t[::1] order = np.ascontiguousarray(order_in, dtype=np.int64)
    cdef int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef int64_t[::1] other = np.ascontiguousarray(other_in, dtype=np.int64)
    cdef int64_t[::1] self_cc = np.ascontiguousarray(self_cc_in, dtype=np.int64)
    cdef int64_t[::1] other_cc = np.ascontiguousarray(other_cc_in, dtype=np.int64)
    cdef int64_t[::1] blocked = np.zeros(n * k, dtype=np.int64)
    cdef int64_t[::1] avail = np.full(n, k, dtype=np.int64)
    color_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] color = color_arr
    cdef int64_t[::1] trail = np.zeros(other.shape[0] + 1, dtype=np.int64)
    cdef _Search s
    s.n = n
    s.k = k
    s.order = &order[0]
    s.indptr = &indptr[0]
    s.other = &other[0] if other.shape[0] else &trail[0]
    s.self_cc = &self_cc[0] if other.shape[0] else &trail[0]
    s.other_cc = &other_cc[0] if other.shape[0] else &trail[0]
    s.blocked = &blocked[0]
    s.avail = &avail[0]
    s.color = &color[0]
    s.trail = &trail[0]
    s.top = 0
    cdef bint found
    with nogil:
        found = _assign(&s, 0)
    return color_arr if found else None
