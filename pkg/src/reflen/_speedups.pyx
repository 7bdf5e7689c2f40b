# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS kernel: word lengths over a generating set.

Same contract as reflen._bfs_py.bfs_lengths, but elements are packed into
int64 mixed-radix keys and looked up by binary search, so the hot loop runs
without Python objects.  Callers must check key_fits() first.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

UNREACHED = -1


def key_fits(int m, long p):
    """True when p**m fits comfortably in an int64 key."""
    cdef object bound = 1
    for _ in range(m):
        bound = bound * p
    return bound < (1 << 62)


def bfs_lengths(elements, gen_ids, int dim, long p, Py_ssize_t identity_id):
    cdef Py_ssize_t n = len(elements)
    cdef int m = dim * dim
    cdef cnp.ndarray[cnp.int64_t, ndim=2] elems = np.asarray(elements, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] gens = np.asarray(gen_ids, dtype=np.int64)
    cdef Py_ssize_t ngens = gens.shape[0]

    # Mixed-radix key per element, sorted for binary-search lookup.
    cdef cnp.ndarray[cnp.int64_t, ndim=1] keys = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t i, j, k, t
    cdef long long acc
    for i in range(n):
        acc = 0
        for t in range(m):
            acc = acc * p + elems[i, t]
        keys[i] = acc
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order = np.argsort(keys, kind="stable").astype(np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sorted_keys = keys[order]

    cdef cnp.ndarray[cnp.int64_t, ndim=1] lengths = np.full(n, UNREACHED, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t head = 0, tail = 0
    lengths[identity_id] = 0
    queue[tail] = identity_id
    tail += 1

    cdef cnp.ndarray[cnp.int64_t, ndim=1] prod = np.zeros(m, dtype=np.int64)
    cdef Py_ssize_t cur, gid, lo, hi, mid, found
    cdef long long key, s
    while head < tail:
        cur = queue[head]
        head += 1
        for j in range(ngens):
            gid = gens[j]
            # prod = elems[cur] @ elems[gid] (dim x dim, mod p)
            for i in range(dim):
                for k in range(dim):
                    s = 0
                    for t in range(dim):
                        s += elems[cur, i * dim + t] * elems[gid, t * dim + k]
                    prod[i * dim + k] = s % p
            key = 0
            for t in range(m):
                key = key * p + prod[t]
            # binary search in sorted_keys
            lo = 0
            hi = n
            while lo < hi:
                mid = (lo + hi) >> 1
                if sorted_keys[mid] < key:
                    lo = mid + 1
                else:
                    hi = mid
            found = order[lo]
            if lengths[found] == UNREACHED:
                lengths[found] = lengths[cur] + 1
                queue[tail] = found
                tail += 1
    return lengths.tolist()
