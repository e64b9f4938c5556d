"""Exact arithmetic: half-integers, square-root surds, Gaussian surds and
rational polynomials.

Rationals are plain :class:`fractions.Fraction` values throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Union

RationalLike = Union[int, Fraction]


class ExactArithmeticError(ArithmeticError):
    """Raised when an exact operation has no closed-form result in our types."""


def as_fraction(x: RationalLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


# --------------------------------------------------------------------------
# Half-integers
# --------------------------------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A number in (1/2)Z, stored as its double."""

    twice: int

    @classmethod
    def of(cls, value: RationalLike | str | "HalfInt") -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        q = as_fraction(value) * 2
        if q.denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(q.numerator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: HalfInt | int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt(self.twice + 2 * other)
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt(self.twice - 2 * other)
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        return NotImplemented

    def __rsub__(self, other: int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt(2 * other - self.twice)
        return NotImplemented

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.twice))

    def __mul__(self, other: HalfInt | int) -> HalfInt | Fraction:
        if isinstance(other, int):
            return HalfInt(self.twice * other)
        if isinstance(other, HalfInt):
            return Fraction(self.twice * other.twice, 4)
        return NotImplemented

    __rmul__ = __mul__

    def __lt__(self, other: HalfInt | int) -> bool:
        if isinstance(other, int):
            return self.twice < 2 * other
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, int):
            return self.twice == 2 * other
        if isinstance(other, Fraction):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def to_json(self) -> dict:
        return {"two": self.twice}

    @classmethod
    def from_json(cls, obj: dict) -> HalfInt:
        return cls(int(obj["two"]))


def halfint_range(top: HalfInt) -> list[HalfInt]:
    """``top, top-1, ..., -top`` (descending)."""
    return [HalfInt(t) for t in range(top.twice, -top.twice - 1, -2)]


# --------------------------------------------------------------------------
# Surds
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``n == s*s*f`` and ``f`` squarefree."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n == 0:
        return 0, 1
    outer, rest = 1, n
    p = 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            outer *= p
        p += 1
    return outer, rest


@dataclass(frozen=True)
class Surd:
    """The real number ``coeff * sqrt(radicand)`` with squarefree radicand."""

    coeff: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")
        outer, rest = squarefree_split(self.radicand)
        coeff = self.coeff * outer
        if coeff == 0 or outer == 0:
            coeff, rest = Fraction(0), 1
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", rest)

    @classmethod
    def sqrt(cls, n: RationalLike) -> Surd:
        """Exact square root of a non-negative rational."""
        q = as_fraction(n)
        if q < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(a/b) = sqrt(a*b)/b
        return cls(Fraction(1, q.denominator), q.numerator * q.denominator)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def __float__(self) -> float:
        return float(self.coeff) * math.sqrt(self.radicand)

    def __neg__(self) -> Surd:
        return Surd(-self.coeff, self.radicand)

    def __add__(self, other: Surd | RationalLike) -> Surd:
        if not isinstance(other, Surd):
            other = Surd(as_fraction(other))
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.radicand != other.radicand:
            raise ExactArithmeticError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        return Surd(self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __sub__(self, other: Surd | RationalLike) -> Surd:
        if not isinstance(other, Surd):
            other = Surd(as_fraction(other))
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> Surd:
        return Surd(as_fraction(other)) - self

    def __mul__(self, other: Surd | RationalLike) -> Surd:
        if isinstance(other, Surd):
            return surd_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Surd(self.coeff * other, self.radicand)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> Surd:
        if isinstance(other, (int, Fraction)):
            return Surd(self.coeff / other, self.radicand)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Surd):
            return self.coeff == other.coeff and self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return self.radicand == 1 and self.coeff == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeff, self.radicand))

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        if self.coeff == -1:
            return f"-sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"

    def __repr__(self) -> str:
        return f"Surd({self})"

    def to_json(self) -> dict:
        return {"q": fraction_str(self.coeff), "rad": self.radicand}

    @classmethod
    def from_json(cls, obj: dict) -> Surd:
        return cls(Fraction(obj["q"]), int(obj["rad"]))


def surd_normalize(coeff: RationalLike, radicand: int) -> Surd:
    return Surd(as_fraction(coeff), radicand)


def surd_mul(a: Surd, b: Surd) -> Surd:
    if a.radicand == b.radicand:
        return Surd(a.coeff * b.coeff * a.radicand, 1)
    g = math.gcd(a.radicand, b.radicand)
    # sqrt(a)sqrt(b) = g*sqrt(a*b/g^2); both squarefree so a*b/g^2 is squarefree
    return Surd(a.coeff * b.coeff * g, (a.radicand // g) * (b.radicand // g))


# --------------------------------------------------------------------------
# Gaussian surds (value or value*i)
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussSurd:
    value: Surd
    imaginary: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.value, Surd):
            object.__setattr__(self, "value", Surd(as_fraction(self.value)))
        if self.value.is_zero():
            object.__setattr__(self, "imaginary", False)

    @classmethod
    def real(cls, x: Surd | RationalLike) -> GaussSurd:
        return cls(x if isinstance(x, Surd) else Surd(as_fraction(x)), False)

    @classmethod
    def imag(cls, x: Surd | RationalLike) -> GaussSurd:
        return cls(x if isinstance(x, Surd) else Surd(as_fraction(x)), True)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def conjugate(self) -> GaussSurd:
        return GaussSurd(-self.value, True) if self.imaginary else self

    def abs2(self) -> Fraction:
        return self.value.square()

    def __complex__(self) -> complex:
        v = float(self.value)
        return complex(0.0, v) if self.imaginary else complex(v, 0.0)

    def __neg__(self) -> GaussSurd:
        return GaussSurd(-self.value, self.imaginary)

    def _coerce(self, other) -> GaussSurd | None:
        if isinstance(other, GaussSurd):
            return other
        if isinstance(other, Surd):
            return GaussSurd(other)
        if isinstance(other, (int, Fraction)):
            return GaussSurd(Surd(other))
        if isinstance(other, complex) and other in (1j, -1j):
            return GaussSurd(Surd(int(other.imag)), True)
        return None

    def __add__(self, other) -> GaussSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if o.imaginary != self.imaginary:
            raise ExactArithmeticError("cannot add real and imaginary surds")
        return GaussSurd(self.value + o.value, self.imaginary)

    __radd__ = __add__

    def __sub__(self, other) -> GaussSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other) -> GaussSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = self.value * o.value
        if self.imaginary and o.imaginary:
            return GaussSurd(-v, False)
        return GaussSurd(v, self.imaginary or o.imaginary)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> GaussSurd:
        return GaussSurd(self.value / other, self.imaginary)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value and self.imaginary == o.imaginary

    def __hash__(self) -> int:
        return hash((self.value, self.imaginary))

    def __str__(self) -> str:
        return f"{self.value}*i" if self.imaginary else str(self.value)

    def __repr__(self) -> str:
        return f"GaussSurd({self})"

    def to_json(self) -> dict:
        d = self.value.to_json()
        d["imag"] = self.imaginary
        return d

    @classmethod
    def from_json(cls, obj: dict) -> GaussSurd:
        return cls(Surd.from_json(obj), bool(obj.get("imag", False)))


ZERO = GaussSurd(Surd(0))
ONE = GaussSurd(Surd(1))
I_UNIT = GaussSurd(Surd(1), True)


# --------------------------------------------------------------------------
# Polynomials over Q
# --------------------------------------------------------------------------


class RationalPolynomial:
    """Dense polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> RationalPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def linear_root(cls, root: RationalLike) -> RationalPolynomial:
        """The monic factor ``x - root``."""
        return cls([-as_fraction(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> RationalPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls.linear_root(r)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other: RationalPolynomial | RationalLike) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RationalPolynomial:
        out = RationalPolynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def synthetic_division(self, root: RationalLike) -> tuple[RationalPolynomial, Fraction]:
        """Divide by ``x - root``; returns ``(quotient, remainder)``."""
        r = as_fraction(root)
        if not self.coeffs:
            return RationalPolynomial(), Fraction(0)
        out = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return RationalPolynomial(reversed(out)), rem

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                x = "x" if k == 1 else f"x^{k}"
                body = x if mag == 1 else f"{mag}*{x}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"

    def to_json(self) -> list[str]:
        return [fraction_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj: list[str]) -> RationalPolynomial:
        return cls(Fraction(c) for c in obj)


def _root_bound(p: RationalPolynomial) -> Fraction:
    """Upper bound on root magnitudes (Fujiwara's refinement of Cauchy's bound)."""
    n = p.degree
    lead = abs(p.leading())
    best = 0.0
    for i in range(1, n + 1):
        c = abs(p.coeffs[n - i])
        if c == 0:
            continue
        ratio = c / lead
        if i == n:
            ratio /= 2
        # float on logs so huge integers do not overflow
        log_r = (math.log(ratio.numerator) - math.log(ratio.denominator)) / i
        best = max(best, math.exp(log_r))
    return Fraction(math.ceil(2 * best * (1 + 1e-9)) + 1)


def _integer_coeffs(p: RationalPolynomial) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in p.coeffs]


def poly_grid_roots(
    p: RationalPolynomial, den: int = 2
) -> tuple[list[tuple[Fraction, int]], RationalPolynomial]:
    """Roots of ``p`` of the form ``t/den`` with exact multiplicities.

    Returns ``(roots, remainder)`` with ``p == prod (x - r)^k * remainder``;
    ``remainder`` has no root on the grid.  Roots come in descending order.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root set")
    if den < 1:
        raise ValueError("grid denominator must be positive")
    roots: list[tuple[Fraction, int]] = []
    rest = p
    zero_mult = 0
    while rest.coeffs and rest.coeffs[0] == 0:
        rest = RationalPolynomial(rest.coeffs[1:])
        zero_mult += 1
    if rest.degree > 0:
        limit = int(den * _root_bound(rest))
        ints = _integer_coeffs(rest)
        for t in range(limit, -limit - 1, -1):
            if t == 0:
                continue
            # den^n * rest(t/den), exactly in integers
            n = len(ints) - 1
            acc = 0
            for idx in range(n, -1, -1):
                acc = acc * t + ints[idx] * den ** (n - idx)
            if acc != 0:
                continue
            root = Fraction(t, den)
            mult = 0
            while rest.degree > 0:
                q, r = rest.synthetic_division(root)
                if r != 0:
                    break
                rest = q
                mult += 1
            roots.append((root, mult))
            if rest.degree <= 0:
                break
            ints = _integer_coeffs(rest)
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    roots.sort(key=lambda rm: rm[0], reverse=True)
    return roots, rest


def poly_halfint_roots(
    p: RationalPolynomial,
) -> tuple[list[tuple[HalfInt, int]], RationalPolynomial]:
    """Roots of ``p`` on the half-integer grid; see :func:`poly_grid_roots`."""
    roots, rest = poly_grid_roots(p, 2)
    return [(HalfInt(int(r * 2)), k) for r, k in roots], rest
