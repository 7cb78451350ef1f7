"""Independent reference computations used to derive expected values.

Nothing here imports fracstefan: the Wright series is summed in 60-digit
arithmetic with mpmath, erf comes from its Maclaurin series, and roots are
found with mpmath's own solvers.
"""

import math

import mpmath as mp

mp.mp.dps = 60


def wright_mp(z, a, b, n_terms=300):
    z, a, b = mp.mpf(z), mp.mpf(a), mp.mpf(b)
    return mp.fsum(z**n / mp.factorial(n) * mp.rgamma(n * a + b) for n in range(n_terms))


def wright_ref(z, a, b):
    return float(wright_mp(z, a, b))


def g3_ref(alpha, x):
    return float(1 - wright_mp(-x, -mp.mpf(alpha) / 2, 1))


def mainardi_ref(nu, x):
    nu = mp.mpf(nu)
    return float(wright_mp(-x, -nu, 1 - nu))


def f4_ref(alpha, x):
    alpha = mp.mpf(alpha)
    g = 1 - wright_mp(-x, -alpha / 2, 1)
    m = wright_mp(-x, -alpha / 2, 1 - alpha / 2)
    return float(x * g / m)


def erf_maclaurin(x, n_terms=200):
    """erf from ``2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1))`` in 60 digits."""
    x = mp.mpf(x)
    total = mp.fsum(
        (-1) ** n * x ** (2 * n + 1) / (mp.factorial(n) * (2 * n + 1))
        for n in range(n_terms)
    )
    return float(2 / mp.sqrt(mp.pi) * total)


def root_mp(func, lo, hi):
    return float(mp.findroot(func, (mp.mpf(lo), mp.mpf(hi)), solver="anderson"))
