# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (same contract as ``_kernels_py``)."""

from math import gcd


cpdef list trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


cpdef object content(list c):
    cdef object g = 0
    for v in c:
        g = gcd(g, v)
        if g == 1:
            break
    return g


cpdef list primitive(list c):
    cdef object g = content(c)
    if g <= 1:
        return list(c)
    return [v // g for v in c]


cpdef list derivative(list c):
    cdef Py_ssize_t i
    return [i * c[i] for i in range(1, len(c))]


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef object ai
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] += ai * b[j]
    return out


cpdef object eval_homog(list c, object num, object den):
    cdef Py_ssize_t i, n = len(c)
    if n == 0:
        return 0
    cdef object acc = c[n - 1]
    cdef object dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + c[i] * dpow
    return acc


cpdef int sign_at(list c, object num, object den):
    cdef object v = eval_homog(c, num, den)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cpdef int sign_at_inf(list c, bint positive):
    cdef int s
    if not c:
        return 0
    s = 1 if c[len(c) - 1] > 0 else -1
    if not positive and (len(c) - 1) % 2 == 1:
        s = -s
    return s


cpdef list prem(list a, list b):
    cdef list r = list(a)
    cdef Py_ssize_t db = len(b) - 1, k, j
    cdef object lb = b[db]
    cdef object big = lb if lb > 0 else -lb
    cdef int sb = 1 if lb > 0 else -1
    cdef object f
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        f = sb * r[len(r) - 1]
        r = [big * v for v in r]
        for j in range(db + 1):
            r[k + j] -= f * b[j]
        r = trim(r)
    return r


cpdef list gcd_poly(list a, list b):
    a = primitive(trim(a))
    b = primitive(trim(b))
    cdef list r
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(prem(a, b))
        a, b = b, r
    if a and a[len(a) - 1] < 0:
        a = [-v for v in a]
    return a


cpdef list sturm_sequence(list c):
    cdef list seq = [primitive(c)]
    cdef list d = primitive(derivative(c))
    cdef list r
    if not d:
        return seq
    seq.append(d)
    while True:
        r = prem(seq[len(seq) - 2], seq[len(seq) - 1])
        if not r:
            return seq
        seq.append([-v for v in primitive(r)])


cpdef int variations(list seq, object num, object den):
    cdef int count = 0, last = 0, s
    for c in seq:
        s = sign_at(c, num, den)
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count


cpdef int variations_inf(list seq, bint positive):
    cdef int count = 0, last = 0, s
    for c in seq:
        s = sign_at_inf(c, positive)
        if s == 0:
            continue
        if last != 0 and s != last:
            count += 1
        last = s
    return count
