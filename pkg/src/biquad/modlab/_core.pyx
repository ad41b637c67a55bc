# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled module-lab kernels; mirrors ``_core_py`` exactly."""

import numpy as np
cimport numpy as cnp

from ._common import allowed_steps, digits_table, entry_radix, weights

ctypedef long long i64

cnp.import_array()


cdef class _Arith:
    cdef i64[:, ::1] d
    cdef i64[::1] n
    cdef i64[::1] w
    cdef int k

    def __init__(self, orders):
        self.n = np.ascontiguousarray(orders, dtype=np.int64)
        self.w = np.ascontiguousarray(weights(orders), dtype=np.int64)
        self.d = np.ascontiguousarray(digits_table(orders), dtype=np.int64)
        self.k = len(orders)

    cdef inline i64 add(self, i64 x, i64 y) nogil:
        cdef i64 r = 0, s
        cdef int j
        for j in range(self.k):
            s = self.d[x, j] + self.d[y, j]
            if s >= self.n[j]:
                s -= self.n[j]
            r += s * self.w[j]
        return r

    cdef inline i64 sub(self, i64 x, i64 y) nogil:
        cdef i64 r = 0, s
        cdef int j
        for j in range(self.k):
            s = self.d[x, j] - self.d[y, j]
            if s < 0:
                s += self.n[j]
            r += s * self.w[j]
        return r


def qh90_check(orders, t_in):
    cdef i64[::1] t = np.ascontiguousarray(t_in, dtype=np.int64)
    cdef _Arith ar = _Arith(orders)
    cdef Py_ssize_t size = t.shape[0], x
    cdef unsigned char[::1] image = np.zeros(size, dtype=np.uint8)
    with nogil:
        for x in range(size):
            image[ar.sub(x, t[x])] = 1
        for x in range(size):
            if ar.add(x, t[x]) == 0 and not image[x]:
                break
        else:
            x = -1
    return (x == -1, int(x))


def kernel_equality(orders, t1_in, t2_in):
    cdef i64[::1] t1 = np.ascontiguousarray(t1_in, dtype=np.int64)
    cdef i64[::1] t2 = np.ascontiguousarray(t2_in, dtype=np.int64)
    cdef _Arith ar = _Arith(orders)
    cdef Py_ssize_t size = t1.shape[0], x, a, b, n1 = 0, n2 = 0
    cdef unsigned char[::1] lhs = np.zeros(size, dtype=np.uint8)
    cdef unsigned char[::1] rhs = np.zeros(size, dtype=np.uint8)
    cdef i64[::1] k1 = np.empty(size, dtype=np.int64)
    cdef i64[::1] k2 = np.empty(size, dtype=np.int64)
    cdef i64 extra = -1, missing = -1
    with nogil:
        for x in range(size):
            if ar.add(ar.sub(ar.sub(x, t1[x]), t2[x]), t1[t2[x]]) == 0:
                lhs[x] = 1
            if t1[x] == x:
                k1[n1] = x
                n1 += 1
            if t2[x] == x:
                k2[n2] = x
                n2 += 1
        for a in range(n1):
            for b in range(n2):
                rhs[ar.add(k1[a], k2[b])] = 1
        for x in range(size):
            if rhs[x] and not lhs[x]:
                extra = x
                break
        if extra < 0:
            for x in range(size):
                if lhs[x] and not rhs[x]:
                    missing = x
                    break
    if extra >= 0:
        return False, False, int(extra)
    if missing >= 0:
        return False, True, int(missing)
    return True, True, -1


def implication(orders, t1_in, t2_in):
    cdef i64[::1] t1 = np.ascontiguousarray(t1_in, dtype=np.int64)
    cdef i64[::1] t2 = np.ascontiguousarray(t2_in, dtype=np.int64)
    cdef _Arith ar = _Arith(orders)
    cdef Py_ssize_t size = t1.shape[0], x, a, b, n1 = 0, n2 = 0
    cdef unsigned char[::1] reach = np.zeros(size * size, dtype=np.uint8)
    cdef i64[::1] k1 = np.empty(size, dtype=np.int64)
    cdef i64[::1] k2 = np.empty(size, dtype=np.int64)
    cdef i64 m1, m2, bad1 = -1, bad2 = -1
    with nogil:
        for x in range(size):
            reach[ar.sub(x, t1[x]) * size + ar.sub(x, t2[x])] = 1
            if ar.add(x, t1[x]) == 0:
                k1[n1] = x
                n1 += 1
            if ar.add(x, t2[x]) == 0:
                k2[n2] = x
                n2 += 1
        for a in range(n1):
            m1 = k1[a]
            for b in range(n2):
                m2 = k2[b]
                if ar.add(m1, t1[m2]) != ar.add(m2, t2[m1]):
                    continue
                if not reach[m1 * size + m2]:
                    bad1 = m1
                    bad2 = m2
                    break
            if bad1 >= 0:
                break
    if bad1 >= 0:
        return False, int(bad1), int(bad2)
    return True, -1, -1


def end_involutions(orders_in):
    orders_arr = np.ascontiguousarray(orders_in, dtype=np.int64)
    cdef int k = len(orders_arr)
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    cdef i64[::1] n = orders_arr
    cdef i64[:, ::1] radix = np.ascontiguousarray(entry_radix(orders_arr), dtype=np.int64)
    cdef i64[:, ::1] step = np.ascontiguousarray(allowed_steps(orders_arr), dtype=np.int64)
    cdef i64[:, ::1] X = np.zeros((k, k), dtype=np.int64)
    cdef int i, j, l, pos
    cdef i64 s, code
    cdef bint ok
    out = []
    while True:
        ok = True
        for i in range(k):
            for j in range(k):
                s = 0
                for l in range(k):
                    s += X[i, l] * X[l, j]
                s %= n[i]
                if s != (1 if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            code = 0
            for i in range(k):
                for j in range(k):
                    code += X[i, j] * radix[i, j]
            out.append(code)
        # odometer over allowed entries, last entry fastest
        pos = k * k - 1
        while pos >= 0:
            i = pos // k
            j = pos % k
            X[i, j] += step[i, j]
            if X[i, j] < n[i]:
                break
            X[i, j] = 0
            pos -= 1
        if pos < 0:
            break
    return np.sort(np.array(out, dtype=np.int64))


cdef inline void _decode(i64 code, i64[::1] n, i64[:, ::1] radix, i64[:, ::1] out, int k) nogil:
    cdef int i, j
    for i in range(k):
        for j in range(k):
            out[i, j] = (code // radix[i, j]) % n[i]


cdef inline i64 _conj_code(i64[:, ::1] X, i64[:, ::1] g, i64[:, ::1] gi, i64[::1] n,
                           i64[:, ::1] radix, i64[:, ::1] tmp, int k) nogil:
    cdef int i, j, l
    cdef i64 s, code = 0
    for i in range(k):
        for j in range(k):
            s = 0
            for l in range(k):
                s += X[i, l] * gi[l, j]
            tmp[i, j] = s % n[i]
    for i in range(k):
        for j in range(k):
            s = 0
            for l in range(k):
                s += g[i, l] * tmp[l, j]
            code += (s % n[i]) * radix[i, j]
    return code


cdef inline Py_ssize_t _find(i64[::1] codes, i64 key) nogil:
    cdef Py_ssize_t lo = 0, hi = codes.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if codes[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    if lo < codes.shape[0] and codes[lo] == key:
        return lo
    return -1


cdef inline Py_ssize_t _root(i64[::1] parent, Py_ssize_t x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_labels(codes_in, orders_in, gens, gens_inv):
    cdef i64[::1] codes = np.ascontiguousarray(codes_in, dtype=np.int64)
    orders_arr = np.ascontiguousarray(orders_in, dtype=np.int64)
    cdef i64[::1] n = orders_arr
    cdef int k = len(orders_arr)
    cdef Py_ssize_t m = codes.shape[0], x, y, rx, ry
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    cdef i64[:, ::1] radix = np.ascontiguousarray(entry_radix(orders_arr), dtype=np.int64)
    cdef i64[::1] parent = np.arange(m, dtype=np.int64)
    cdef i64[:, ::1] X = np.zeros((k, k), dtype=np.int64)
    cdef i64[:, ::1] tmp = np.zeros((k, k), dtype=np.int64)
    cdef i64[:, ::1] g
    cdef i64[:, ::1] gi
    cdef bint closed = True
    for gm, gim in zip(gens, gens_inv):
        g = np.ascontiguousarray(gm, dtype=np.int64)
        gi = np.ascontiguousarray(gim, dtype=np.int64)
        with nogil:
            for x in range(m):
                _decode(codes[x], n, radix, X, k)
                y = _find(codes, _conj_code(X, g, gi, n, radix, tmp, k))
                if y < 0:
                    closed = False
                    break
                rx = _root(parent, x)
                ry = _root(parent, y)
                if rx != ry:
                    # keep the smaller index as root so labels are orbit minima
                    if rx < ry:
                        parent[ry] = rx
                    else:
                        parent[rx] = ry
        if not closed:
            raise ValueError("candidate set is not closed under the generators")
    labels = np.empty(m, dtype=np.int64)
    cdef i64[::1] lab = labels
    for x in range(m):
        lab[x] = _root(parent, x)
    return labels
