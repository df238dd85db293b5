# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled repetition kernels; contracts identical to apavoid._kernels_py.

The cores run without the GIL so callers may scan independent words from
worker threads.
"""

from libc.stdlib cimport free, malloc


cdef inline bint _passes(long long m, long long p, long long t_num,
                         long long t_den, bint strict) nogil:
    cdef long long lhs = m * t_den
    cdef long long rhs = p * t_num
    if strict:
        return lhs > rhs
    return lhs >= rhs


cdef Py_ssize_t _smallest_period(const unsigned char* s, Py_ssize_t n,
                                 Py_ssize_t* pi) nogil:
    cdef Py_ssize_t k = 0, i
    cdef unsigned char c
    if n == 0:
        return 0
    pi[0] = 0
    for i in range(1, n):
        c = s[i]
        while k and s[k] != c:
            k = pi[k - 1]
        if s[k] == c:
            k += 1
        pi[i] = k
    return n - pi[n - 1]


cdef bint _first_rep(const unsigned char* s, Py_ssize_t n, long long t_num,
                     long long t_den, bint strict, Py_ssize_t min_period,
                     Py_ssize_t* pi, Py_ssize_t* out_o, Py_ssize_t* out_p,
                     Py_ssize_t* out_m) nogil:
    cdef Py_ssize_t o, i, k, m, p, ln, best_p, best_m
    cdef const unsigned char* sub
    cdef unsigned char c
    for o in range(n):
        sub = s + o
        ln = n - o
        best_p = 0
        best_m = 0
        if min_period <= 1 and _passes(1, 1, t_num, t_den, strict):
            best_p = 1
            best_m = 1
        k = 0
        pi[0] = 0
        for i in range(1, ln):
            c = sub[i]
            while k and sub[k] != c:
                k = pi[k - 1]
            if sub[k] == c:
                k += 1
            pi[i] = k
            m = i + 1
            p = m - k
            if best_p:
                # smallest periods of prefixes never decrease
                if p == best_p:
                    best_m = m
                elif p > best_p:
                    break
            elif p >= min_period and _passes(m, p, t_num, t_den, strict):
                best_p = p
                best_m = m
        if best_p:
            out_o[0] = o
            out_p[0] = best_p
            out_m[0] = best_m
            return True
    return False


cdef bint _clean(const unsigned char* s, Py_ssize_t n, long long t_num,
                 long long t_den, bint strict, Py_ssize_t min_period,
                 Py_ssize_t* pi) nogil:
    cdef Py_ssize_t p = min_period, run, i
    cdef long long cost, bound
    while True:
        cost = p * t_num
        bound = n * t_den
        if cost > bound or (strict and cost == bound):
            return True
        run = p
        i = n - p - 1
        while i >= 0 and s[i] == s[i + p]:
            run += 1
            i -= 1
        if _passes(run, p, t_num, t_den, strict):
            if _smallest_period(s + (n - run), run, pi) == p:
                return False
        p += 1


cdef void _max_exp(const unsigned char* s, Py_ssize_t n, Py_ssize_t* pi,
                   Py_ssize_t* out_m, Py_ssize_t* out_p) nogil:
    cdef Py_ssize_t o, i, k, m, p, ln
    cdef Py_ssize_t best_m = 1, best_p = 1
    cdef const unsigned char* sub
    cdef unsigned char c
    for o in range(n):
        sub = s + o
        ln = n - o
        k = 0
        pi[0] = 0
        for i in range(1, ln):
            c = sub[i]
            while k and sub[k] != c:
                k = pi[k - 1]
            if sub[k] == c:
                k += 1
            pi[i] = k
            m = i + 1
            p = m - k
            if m * best_p > best_m * p:
                best_m = m
                best_p = p
    out_m[0] = best_m
    out_p[0] = best_p


def first_repetition(bytes s, long long t_num, long long t_den, bint strict,
                     Py_ssize_t min_period):
    """Earliest repetition: (offset, period, run_length), or None."""
    cdef Py_ssize_t n = len(s)
    if n == 0:
        return None
    cdef const unsigned char* ptr = s
    cdef Py_ssize_t* pi = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if pi == NULL:
        raise MemoryError()
    cdef Py_ssize_t o = 0, p = 0, m = 0
    cdef bint found
    try:
        with nogil:
            found = _first_rep(ptr, n, t_num, t_den, strict, min_period, pi,
                               &o, &p, &m)
    finally:
        free(pi)
    if found:
        return o, p, m
    return None


def clean_after_append(bytes s, long long t_num, long long t_den, bint strict,
                       Py_ssize_t min_period):
    """True when no suffix of s reaches the threshold."""
    cdef Py_ssize_t n = len(s)
    if n == 0:
        return True
    cdef const unsigned char* ptr = s
    cdef Py_ssize_t* pi = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if pi == NULL:
        raise MemoryError()
    cdef bint ok
    try:
        with nogil:
            ok = _clean(ptr, n, t_num, t_den, strict, min_period, pi)
    finally:
        free(pi)
    return ok


def max_exponent_pair(bytes s):
    """(length, period) maximizing length/period over all factors of s."""
    cdef Py_ssize_t n = len(s)
    cdef const unsigned char* ptr = s
    cdef Py_ssize_t* pi
    cdef Py_ssize_t m = 1, p = 1
    if n == 0:
        return 1, 1
    pi = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if pi == NULL:
        raise MemoryError()
    try:
        with nogil:
            _max_exp(ptr, n, pi, &m, &p)
    finally:
        free(pi)
    return m, p
