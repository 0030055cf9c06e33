"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints in ascending degree with no trailing
zeros; ``[]`` is the zero polynomial.  Every function here has a twin with the
same signature in the compiled ``_kernels`` extension.
"""

from math import gcd


def trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def content(c):
    g = 0
    for v in c:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def primitive(c):
    """Divide by the (positive) content; the sign of the polynomial is kept."""
    g = content(c)
    if g <= 1:
        return list(c)
    return [v // g for v in c]


def derivative(c):
    return [i * c[i] for i in range(1, len(c))]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def eval_homog(c, num, den):
    """Return den**deg * p(num/den) as an integer."""
    n = len(c)
    if n == 0:
        return 0
    acc = c[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + c[i] * dpow
    return acc


def sign_at(c, num, den):
    """Sign of p(num/den); ``den`` must be positive."""
    v = eval_homog(c, num, den)
    return (v > 0) - (v < 0)


def sign_at_inf(c, positive):
    if not c:
        return 0
    s = 1 if c[-1] > 0 else -1
    if not positive and (len(c) - 1) % 2 == 1:
        s = -s
    return s


def prem(a, b):
    """Positive multiple of the remainder of ``a`` modulo ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    big = lb if lb > 0 else -lb
    sb = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [big * v for v in r]
        f = sb * lr
        for j in range(db + 1):
            r[k + j] -= f * b[j]
        r = trim(r)
    return r


def gcd_poly(a, b):
    """Primitive gcd with positive leading coefficient."""
    a = primitive(trim(a))
    b = primitive(trim(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(prem(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-v for v in a]
    return a


def sturm_sequence(c):
    seq = [primitive(c)]
    d = primitive(derivative(c))
    if not d:
        return seq
    seq.append(d)
    while True:
        r = prem(seq[-2], seq[-1])
        if not r:
            return seq
        seq.append([-v for v in primitive(r)])


def variations(seq, num, den):
    count = 0
    last = 0
    for c in seq:
        s = sign_at(c, num, den)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def variations_inf(seq, positive):
    count = 0
    last = 0
    for c in seq:
        s = sign_at_inf(c, positive)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count
