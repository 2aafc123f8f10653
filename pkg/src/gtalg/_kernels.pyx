# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; see _kernels_py.py for the reference semantics."""


cpdef int pairing(int x, int y):
    if (x ^ y) == 1:
        return y - x
    return 0


cpdef dict cyclic_sum(tuple w):
    cdef dict out = {}
    cdef Py_ssize_t m = len(w), p
    cdef tuple r
    for p in range(m):
        r = w[p:] + w[:p]
        out[r] = out.get(r, 0) + 1
    return out


cpdef dict dynkin(tuple w):
    cdef Py_ssize_t m = len(w), p
    cdef dict acc, new
    cdef tuple x, u, left, right
    cdef object c
    if m == 0:
        raise ValueError("Dynkin map is undefined on the empty word")
    acc = {(w[m - 1],): 1}
    for p in range(m - 2, -1, -1):
        x = (w[p],)
        new = {}
        for u, c in acc.items():
            left = x + u
            right = u + x
            new[left] = new.get(left, 0) + c
            new[right] = new.get(right, 0) - c
        acc = {u: c for u, c in new.items() if c}
    return acc


cpdef dict coproduct(tuple w):
    cdef Py_ssize_t m = len(w), p
    cdef long mask
    cdef list left, right
    cdef tuple key
    cdef dict out = {}
    for mask in range(1 << m):
        left = []
        right = []
        for p in range(m):
            if (mask >> p) & 1:
                left.append(w[p])
            else:
                right.append(w[p])
        key = (tuple(left), tuple(right))
        out[key] = out.get(key, 0) + 1
    return out


cpdef dict schedler(tuple w):
    cdef Py_ssize_t m = len(w), i, j
    cdef int c
    cdef long k
    cdef tuple inner, outer, a, b
    cdef dict n_in, n_out
    cdef dict out = {}
    cdef object ca, cb
    for i in range(m):
        for j in range(i + 1, m):
            c = pairing(w[i], w[j])
            if c == 0:
                continue
            inner = w[i + 1:j]
            outer = w[j + 1:] + w[:i]
            if len(inner) == 0 or len(outer) == 0:
                continue
            n_in = cyclic_sum(inner)
            n_out = cyclic_sum(outer)
            for a, ca in n_in.items():
                for b, cb in n_out.items():
                    k = c * ca * cb
                    out[(a, b)] = out.get((a, b), 0) - k
                    out[(b, a)] = out.get((b, a), 0) + k
    return {key: v for key, v in out.items() if v}


cpdef dict mu_alg(tuple w):
    cdef Py_ssize_t m = len(w), i, j
    cdef int c
    cdef tuple first, b, key
    cdef object cb
    cdef dict out = {}
    for i in range(m):
        for j in range(i + 2, m):
            c = pairing(w[i], w[j])
            if c == 0:
                continue
            first = w[:i] + w[j + 1:]
            for b, cb in cyclic_sum(w[i + 1:j]).items():
                key = (first, b)
                out[key] = out.get(key, 0) + c * cb
    return {key: v for key, v in out.items() if v}


cpdef dict mu_zero_scaled(tuple w):
    cdef Py_ssize_t m = len(w), i, j
    cdef int sign
    cdef tuple prefix, suffix, inner, a, b, rb, first, second, n, key
    cdef object c, cn
    cdef dict out = {}
    for i in range(m):
        for j in range(i + 1, m):
            prefix = w[:i]
            suffix = w[j + 1:]
            inner = w[i + 1:j]
            for (a, b), c in coproduct((w[i], w[j])).items():
                sign = -1 if len(b) % 2 else 1
                rb = b[::-1]
                first = prefix + a + suffix
                second = rb + inner
                if len(second) == 0:
                    continue
                for n, cn in cyclic_sum(second).items():
                    key = (first, n)
                    out[key] = out.get(key, 0) + sign * c * cn
    for i in range(m):
        key = (w[:i] + w[i + 1:], (w[i],))
        out[key] = out.get(key, 0) + 1
    return {key: v for key, v in out.items() if v}


cpdef dict derive_word(tuple d, tuple w):
    cdef int head = d[0]
    cdef tuple tail = d[1:]
    cdef Py_ssize_t p, m = len(w)
    cdef int c
    cdef tuple key
    cdef dict out = {}
    for p in range(m):
        c = pairing(w[p], head)
        if c != 0:
            key = w[:p] + tail + w[p + 1:]
            out[key] = out.get(key, 0) + c
    return {key: v for key, v in out.items() if v}


cpdef tuple contract_first(tuple w):
    return pairing(w[0], w[1]), w[2:]


cpdef tuple bullet(tuple u, tuple v):
    return pairing(u[len(u) - 1], v[0]), u[:len(u) - 1] + v[1:]
