"""Principal-series hyperspherical functions via Gauss hypergeometric series."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.special import loggamma

from .exactnum import HalfInt

TANH2_CAP = 1 - 1e-6


class ConvergenceError(ArithmeticError):
    pass


def _nonpos_int(x: complex) -> int | None:
    """Return -x when x is a non-positive integer, else None."""
    x = complex(x)
    if x.imag == 0 and x.real <= 0 and float(x.real).is_integer():
        return int(-x.real)
    return None


def gauss_2f1(a: complex, b: complex, c: complex, z: complex, tol: float = 1e-12,
              max_terms: int = 200_000) -> complex:
    """2F1(a, b; c; z) by direct power series.

    Terminates exactly when a or b is a non-positive integer; otherwise needs
    |z| < 1.  A non-positive integer ``c`` reached before termination raises
    ZeroDivisionError, the cue for the regularized path.
    """
    na, nb = _nonpos_int(a), _nonpos_int(b)
    stops = [n for n in (na, nb) if n is not None]
    last = min(stops) if stops else None
    nc = _nonpos_int(c)
    if nc is not None and (last is None or nc < last):
        raise ZeroDivisionError(f"c = {c} is a non-positive integer; use the regularized form")
    if last is None and abs(z) >= 1:
        raise ConvergenceError(f"series diverges or converges too slowly at |z| = {abs(z)}")
    term = complex(1.0)
    total = complex(1.0)
    k = 0
    small = 0
    while True:
        if last is not None and k >= last:
            return total
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        k += 1
        if last is None:
            if abs(term) <= tol * abs(total):
                small += 1
                if small >= 3:
                    return total
            else:
                small = 0
            if k >= max_terms:
                raise ConvergenceError(f"no convergence after {max_terms} terms")


def _poch(x: complex, n: int) -> complex:
    out = complex(1.0)
    for k in range(n):
        out *= x + k
    return out


def regularized_tail(a: complex, b: complex, n: int, z: complex, tol: float = 1e-12) -> complex:
    """(a)_n (b)_n / n! * 2F1(a+n, b+n; n+1; z).

    Times z^n this is the limit of 2F1(a, b; c; z) / Gamma(c) as c -> 1 - n.
    """
    return _poch(a, n) * _poch(b, n) / math.factorial(n) * gauss_2f1(a + n, b + n, n + 1, z, tol)


def terminating_2f1_exact(a: int, b: Fraction, c: Fraction, z: Fraction) -> Fraction:
    """Exact rational value of a terminating series (a a non-positive integer)."""
    if a > 0:
        raise ValueError("first parameter must be a non-positive integer")
    total = term = Fraction(1)
    for k in range(-a):
        if c + k == 0:
            raise ZeroDivisionError("denominator parameter hits zero before termination")
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HsfParams:
    rho: float
    l0: HalfInt
    m: HalfInt
    n: HalfInt
    theta: float = 0.0
    tau: float = 0.0
    phi: float = 0.0
    psi: float = 0.0
    eps_m: float = 0.0  # epsilon paired with m
    eps_n: float = 0.0  # epsilon paired with n

    def __post_init__(self) -> None:
        for name in ("l0", "m", "n"):
            object.__setattr__(self, name, HalfInt.of(getattr(self, name)))
        if self.l0.twice < 0:
            raise ValueError("l0 must be non-negative")
        for name in ("m", "n"):
            v = getattr(self, name)
            if abs(v.twice) > self.l0.twice or (self.l0.twice - v.twice) % 2:
                raise ValueError(f"{name} = {v} is not a weight of l0 = {self.l0}")
        if self.m < self.n:
            raise ValueError("the expansion requires m >= n")
        if not 0 <= self.theta < math.pi:
            raise ValueError("theta must lie in [0, pi)")
        if self.tau < 0:
            raise ValueError("tau must be non-negative")
        if math.tanh(self.tau / 2) ** 2 > TANH2_CAP:
            raise ValueError("tau too large: tanh^2(tau/2) exceeds the convergence cap")


def _i_pow(k: int) -> complex:
    return (1, 1j, -1, -1j)[k % 4]


def _gamma_ratio_sqrt(p: HsfParams) -> complex:
    l0, m, n = float(p.l0.value), float(p.m.value), float(p.n.value)
    top = complex(0.5 - n, p.rho)
    bot = complex(0.5 + n, p.rho)
    for arg in (top, bot):
        if _nonpos_int(arg) is not None:
            raise ValueError(f"Gamma pole at {arg}")
    s = (loggamma(l0 + m + 1) + loggamma(top) - loggamma(l0 - m + 1) - loggamma(bot))
    # principal branch, arg in (-pi, pi]; integer n puts the ratio on the cut
    im = math.remainder(s.imag, 2 * math.pi)
    if abs(abs(im) - math.pi) < 1e-9:
        im = math.pi
    return cmath.exp(0.5 * complex(s.real, im))


def hyperspherical_terms(p: HsfParams, tol: float = 1e-12) -> list[complex]:
    """Summands over t = -l0 ... l0 (without the common prefactor)."""
    m2, n2, l2 = p.m.twice, p.n.twice, p.l0.twice
    m, n = p.m.value, p.n.value
    tan = math.tan(p.theta / 2)
    th = math.tanh(p.tau / 2)
    z1 = -tan * tan
    z2 = th * th
    out = []
    for t2 in range(-l2, l2 + 1, 2):
        t = Fraction(t2, 2)
        a1, b1 = float(m - p.l0.value), float(-t - p.l0.value)
        if t2 <= m2:
            f1 = tan ** int(m - t) * gauss_2f1(a1, b1, float(m - t + 1), z1, tol)
        else:
            k = int(t - m)
            # tan^{m-t} (-tan^2)^k folds to (-1)^k tan^k
            f1 = (-1) ** k * tan ** k * regularized_tail(a1, b1, k, z1, tol)
        a2 = complex(float(t) + 0.5, -p.rho)
        b2 = complex(float(-n) + 0.5, -p.rho)
        if t2 >= n2:
            f2 = th ** int(t - n) * gauss_2f1(a2, b2, float(t - n + 1), z2, tol)
        else:
            k = int(n - t)
            f2 = th ** k * regularized_tail(a2, b2, k, z2, tol)
        out.append(_i_pow(int(m - t)) * f1 * f2)
    return out


def hyperspherical_m(p: HsfParams, tol: float = 1e-12) -> complex:
    m, n = float(p.m.value), float(p.n.value)
    pre = cmath.exp(-m * complex(p.eps_m, p.phi) - n * complex(p.eps_n, p.psi))
    pre *= _gamma_ratio_sqrt(p)
    pre *= math.cos(p.theta / 2) ** p.l0.twice
    pre *= cmath.exp(complex(-1.0, 2 * p.rho) * math.log(math.cosh(p.tau / 2)))
    terms = hyperspherical_terms(p, tol)
    # fsum makes the result independent of summation order
    total = complex(math.fsum(x.real for x in terms), math.fsum(x.imag for x in terms))
    return pre * total
