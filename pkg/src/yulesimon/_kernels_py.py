"""Pure-Python (blocked numpy) fallback for the compiled kernels.

Same call signatures and stopping rules as ``_kernels.pyx``; the series is
advanced a block at a time with a cumulative product, so results agree with
the compiled path to within the requested tolerance (not bit-for-bit).
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaln

_BLOCK = 4096


def hyp3f2_series(a, b, rel_tol, max_terms):
    """F1 = sum_{l>=1} l! (a)_l / (b)_l^2 (the series past its leading 1)."""
    f1 = 0.0
    t = 1.0  # t_0
    l = 0
    while l < max_terms:
        total = 1.0 + f1
        if t <= rel_tol * total:
            tail = t * (l + 1) / (b - 2.0)
            if tail <= rel_tol * total:
                return f1, l + 1, tail, True
        m = np.arange(l, min(l + _BLOCK, max_terms), dtype=np.float64)
        terms = t * np.cumprod((m + 1.0) * (a + m) / ((b + m) * (b + m)))
        f1 += terms.sum()
        t = terms[-1]
        l += len(m)
    tail = t * (l + 1) / (b - 2.0)
    return f1, l, tail, False


def log_likelihood_sum(ks, counts, alpha):
    ks = np.asarray(ks, dtype=np.float64)
    counts = np.asarray(counts, dtype=np.float64)
    c = 1.0 / (1.0 - alpha)
    log_beta = gammaln(ks) + gammaln(c + 1.0) - gammaln(ks + c + 1.0)
    return float(np.dot(counts, np.log(c) + log_beta))
