"""Pure-Python reference kernels.

Same signatures and semantics as the compiled ``_ckernels`` module; used
when the extension is not built or when ``FRACSTEFAN_PURE_PYTHON`` is set.
"""

import math

import numpy as np

NAME = "python"


def rgamma(x):
    """Reciprocal Gamma, exactly zero at the poles 0, -1, -2, ..."""
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    if x > 171.5:
        return 0.0
    if x < -170.0:
        # 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi overflows here
        return math.copysign(math.inf, math.sin(math.pi * x))
    return 1.0 / math.gamma(x)


def wright_series(z, a, b, rel_tol, abs_tol, max_terms, first=0):
    """Sum ``z**n / (n! Gamma(n*a + b))`` for ``n >= first`` with Neumaier compensation.

    ``first`` is 0 or 1; dropping the constant term avoids cancellation when
    the caller needs ``W - 1/Gamma(b)`` near ``z = 0``.

    Returns ``(value, abs_sum, n_terms)``; ``n_terms`` is -1 when two
    consecutive terms never both fell below the stopping threshold.
    ``abs_sum`` is the sum of term magnitudes, i.e. the cancellation scale.
    """
    if first:
        s = 0.0
        abs_sum = 0.0
        prev = math.inf
    else:
        s = rgamma(b)
        abs_sum = abs(s)
        prev = s
    comp = 0.0
    p = 1.0
    for n in range(1, max_terms):
        p *= z / n
        t = p * rgamma(b + n * a)
        tmp = s + t
        if abs(s) >= abs(t):
            comp += (s - tmp) + t
        else:
            comp += (t - tmp) + s
        s = tmp
        abs_sum += abs(t)
        thresh = max(abs_tol, rel_tol * abs(s + comp))
        if abs(t) < thresh and abs(prev) < thresh:
            return s + comp, abs_sum, n + 1
        prev = t
    return s + comp, abs_sum, -1


def wright_many(zs, a, b, rel_tol, abs_tol, max_terms, first=0):
    zs = np.asarray(zs, dtype=float)
    values = np.empty(zs.shape)
    abs_sums = np.empty(zs.shape)
    nterms = np.empty(zs.shape, dtype=np.int64)
    for i, z in enumerate(zs.flat):
        values.flat[i], abs_sums.flat[i], nterms.flat[i] = wright_series(
            float(z), a, b, rel_tol, abs_tol, max_terms, first
        )
    return values, abs_sums, nterms


def l1_history_sum(f, alpha):
    """Sum ``b_j (f[n-j] - f[n-j-1])`` over the whole history, ``b_0 = 1``."""
    f = np.asarray(f, dtype=float)
    n = f.size - 1
    j = np.arange(n, dtype=float)
    weights = (j + 1.0) ** (1.0 - alpha) - j ** (1.0 - alpha)
    weights[0] = 1.0
    # increments ordered newest first to line up with b_j
    increments = np.diff(f)[::-1]
    return math.fsum(weights * increments)
