"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import mpmath as mp
import numpy as np


def spin_matrices(j2: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Float spin matrices built from the raising operator (basis m descending)."""
    j = j2 / 2
    ms = [j - k for k in range(j2 + 1)]
    jp = np.zeros((j2 + 1, j2 + 1), dtype=complex)
    for col, m in enumerate(ms):
        if col > 0:
            jp[col - 1, col] = np.sqrt(j * (j + 1) - m * (m + 1))
    jm = jp.conj().T
    return (jp + jm) / 2, (jp - jm) / 2j, np.diag(ms).astype(complex)


def lambda_oracle(two_l: int, two_ldot: int, j: int, c: float = 1.0) -> np.ndarray:
    """Kronecker-product form of the interlocking matrices (dotted factor outer)."""
    J = spin_matrices(two_l)
    Jd = spin_matrices(two_ldot)
    if two_ldot == 0:
        return c * J[j - 1]
    if two_l == 0:
        return c * np.array([-1, -1, 1])[j - 1] * Jd[j - 1]
    if j == 3:
        return c * np.kron(Jd[2], J[2])
    return c * (np.kron(Jd[2], J[j - 1]) - np.kron(Jd[j - 1], J[2]))


def census_bruteforce(two_l: int, two_ldot: int) -> Counter:
    """Multiset of m * mdot over the helicity basis."""
    return Counter(
        Fraction(tm * tmd, 4)
        for tm in range(-two_l, two_l + 1, 2)
        for tmd in range(-two_ldot, two_ldot + 1, 2)
    )


mp.mp.dps = 40


def reg2f1(a, b, c, z):
    """2F1(a, b; c; z) / Gamma(c), summed termwise."""
    s = mp.mpc(0)
    k = 0
    while True:
        term = mp.rf(a, k) * mp.rf(b, k) / mp.factorial(k) * mp.rgamma(c + k) * z**k
        s += term
        k += 1
        if k > 4000 or (k > 10 and abs(term) < mp.mpf(10) ** -38):
            return s


def _pow(x, e):
    # the paired regularized factor vanishes to the matching order at x = 0
    return mp.mpf(0) if x == 0 and e != 0 else x**e


def hsf_oracle(rho, l0, m, n, theta, tau, phi=0, psi=0, eps_m=0, eps_n=0) -> complex:
    """Arbitrary-precision evaluation of the hyperspherical function.

    Non-positive denominator parameters use the regularized hypergeometric
    function; the principal square root takes a negative real ratio to +i.
    """
    rho, l0, m, n = (mp.mpf(float(x)) for x in (rho, l0, m, n))
    theta, tau = mp.mpf(theta), mp.mpf(tau)
    pre = mp.exp(-m * (eps_m + 1j * phi) - n * (eps_n + 1j * psi))
    ratio = (mp.gamma(l0 + m + 1) * mp.gamma(1j * rho - n + 0.5)
             / (mp.gamma(l0 - m + 1) * mp.gamma(1j * rho + n + 0.5)))
    if abs(mp.im(ratio)) < mp.mpf(10) ** -30 * abs(ratio):
        ratio = mp.re(ratio)
    pre *= mp.sqrt(ratio)
    pre *= mp.cos(theta / 2) ** (2 * l0) * mp.cosh(tau / 2) ** (-1 + 2j * rho)
    tn, th = mp.tan(theta / 2), mp.tanh(tau / 2)
    total = mp.mpc(0)
    t = -l0
    while t <= l0:
        c1, c2 = m - t + 1, t - n + 1
        f1 = reg2f1(m - l0, -t - l0, c1, -tn**2) * (mp.gamma(c1) if c1 > 0 else 1)
        f2 = reg2f1(t - 1j * rho + 0.5, -n - 1j * rho + 0.5, c2, th**2) * (mp.gamma(c2) if c2 > 0 else 1)
        total += mp.mpc(0, 1) ** int(m - t) * _pow(tn, m - t) * f1 * _pow(th, t - n) * f2
        t += 1
    return complex(pre * total)
