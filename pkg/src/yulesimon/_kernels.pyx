# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled hot kernels: the 3F2-at-unity term recurrence and the
frequency-sample log-likelihood sum.

Semantics are mirrored by the pure-numpy fallback in ``_kernels_py``; the
backend is chosen at import time by ``_backend``.
"""

from libc.math cimport lgamma, log


def hyp3f2_series(double a, double b, double rel_tol, long max_terms):
    """Tail of the series  S = sum_{l>=0} l! (a)_l / (b)_l^2  past its
    leading 1, i.e. F1 = S - 1 summed directly from l = 1.

    Returning F1 instead of S lets callers form expressions like
    (3-alpha)(1-alpha) - F1 without catastrophic cancellation when S is
    close to 1 (alpha near 1).

    Stops once the current term and the analytic tail bound
    t_l (l+1)/(b-2) both fall below rel_tol * (1 + F1); requires b > 2.

    Returns (f1, terms_used, tail_bound, converged); terms_used counts all
    summed terms including the implicit l = 0 one.
    """
    cdef double f1 = 0.0
    cdef double t = 1.0           # t_0
    cdef double tail = 0.0
    cdef double total, denom
    cdef long l = 0
    while l < max_terms:
        total = 1.0 + f1
        if t <= rel_tol * total:
            tail = t * (l + 1) / (b - 2.0)
            if tail <= rel_tol * total:
                return f1, l + 1, tail, True
        denom = b + l
        t *= (l + 1) * (a + l) / (denom * denom)
        f1 += t
        l += 1
    tail = t * (l + 1) / (b - 2.0)
    return f1, l, tail, False


def log_likelihood_sum(double[::1] ks, double[::1] counts, double alpha):
    """Yule-Simon log-likelihood of a (value, multiplicity) sample.

    sum_i counts[i] * [log c + lgamma(k_i) + lgamma(c+1) - lgamma(k_i+c+1)]
    with c = 1/(1-alpha).
    """
    cdef double c = 1.0 / (1.0 - alpha)
    cdef double lg_c1 = lgamma(c + 1.0)
    cdef double log_c = log(c)
    cdef double acc = 0.0
    cdef Py_ssize_t i, n = ks.shape[0]
    for i in range(n):
        acc += counts[i] * (log_c + lgamma(ks[i]) + lg_c1 - lgamma(ks[i] + c + 1.0))
    return acc
