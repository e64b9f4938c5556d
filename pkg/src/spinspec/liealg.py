"""Exact matrix realizations of the Lorentz-algebra generators.

Matrices are stored sparsely as ``{(row, col): GaussSurd}``.  Each entry is a
rational multiple of a square root, optionally times ``i``; sums that would
mix radicands or real and imaginary parts raise :class:`ExactArithmeticError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .exactnum import (
    ExactArithmeticError,
    GaussSurd,
    HalfInt,
    I_UNIT,
    Surd,
    as_fraction,
)
from .repcat import RepLabel

Scalar = GaussSurd | Surd | Fraction | int | complex

_Key = tuple[int, bool]  # (radicand, imaginary)


def _to_gauss(x: Scalar) -> GaussSurd:
    if isinstance(x, GaussSurd):
        return x
    if isinstance(x, Surd):
        return GaussSurd(x)
    if isinstance(x, complex):
        if x.real == 0 and x.imag in (1, -1):
            return GaussSurd(Surd(int(x.imag)), True)
        raise TypeError(f"unsupported complex scalar {x!r}")
    return GaussSurd(Surd(as_fraction(x)))


def _collapse(acc: dict[_Key, Fraction], where) -> GaussSurd | None:
    live = [(k, v) for k, v in acc.items() if v != 0]
    if not live:
        return None
    if len(live) > 1:
        raise ExactArithmeticError(f"entry {where} mixes incompatible surd terms {live}")
    (rad, imag), coeff = live[0]
    return GaussSurd(Surd(coeff, rad), imag)


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Square sparse matrix with exact Gaussian-surd entries."""

    dim: int
    entries: Mapping[tuple[int, int], GaussSurd] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise IndexError(f"entry ({i}, {j}) outside {self.dim}x{self.dim}")
            v = _to_gauss(v)
            if not v.is_zero():
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, dim: int) -> OperatorMatrix:
        return cls(dim, {})

    @classmethod
    def identity(cls, dim: int) -> OperatorMatrix:
        return cls(dim, {(i, i): GaussSurd(Surd(1)) for i in range(dim)})

    @classmethod
    def diagonal_of(cls, values: Iterable[Scalar]) -> OperatorMatrix:
        vals = list(values)
        return cls(len(vals), {(i, i): v for i, v in enumerate(vals)})

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> GaussSurd:
        i, j = ij
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(ij)
        return self.entries.get((i, j), GaussSurd(Surd(0)))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def is_tridiagonal(self) -> bool:
        return all(abs(i - j) <= 1 for i, j in self.entries)

    def diagonal(self) -> list[GaussSurd]:
        return [self[i, i] for i in range(self.dim)]

    def trace(self) -> GaussSurd:
        acc: dict[_Key, Fraction] = {}
        for i in range(self.dim):
            v = self.entries.get((i, i))
            if v is not None:
                key = (v.value.radicand, v.imaginary)
                acc[key] = acc.get(key, Fraction(0)) + v.value.coeff
        return _collapse(acc, "trace") or GaussSurd(Surd(0))

    # -- algebra ------------------------------------------------------------

    def _check(self, other: OperatorMatrix) -> None:
        if not isinstance(other, OperatorMatrix):
            raise TypeError("expected an OperatorMatrix")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")

    def __add__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return OperatorMatrix(self.dim, out)

    def __neg__(self) -> OperatorMatrix:
        return OperatorMatrix(self.dim, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: OperatorMatrix) -> OperatorMatrix:
        return self + (-other)

    def scale(self, s: Scalar) -> OperatorMatrix:
        g = _to_gauss(s)
        return OperatorMatrix(self.dim, {k: v * g for k, v in self.entries.items()})

    def __mul__(self, s: Scalar) -> OperatorMatrix:
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check(other)
        rows: dict[int, list[tuple[int, GaussSurd]]] = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], dict[_Key, Fraction]] = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                p = a * b
                cell = acc.setdefault((i, j), {})
                key = (p.value.radicand, p.imaginary)
                cell[key] = cell.get(key, Fraction(0)) + p.value.coeff
        out = {}
        for ij, cell in acc.items():
            v = _collapse(cell, ij)
            if v is not None:
                out[ij] = v
        return OperatorMatrix(self.dim, out)

    def adjoint(self) -> OperatorMatrix:
        return OperatorMatrix(self.dim, {(j, i): v.conjugate() for (i, j), v in self.entries.items()})

    def transpose(self) -> OperatorMatrix:
        return OperatorMatrix(self.dim, {(j, i): v for (i, j), v in self.entries.items()})

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def is_antihermitian(self) -> bool:
        return self == -self.adjoint()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.entries.items())))

    # -- conversion ---------------------------------------------------------

    def to_numpy(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for (i, j), v in self.entries.items():
            out[i, j] = complex(v)
        return out

    def dense(self) -> list[list[GaussSurd]]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [
                {"i": i, "j": j, **v.to_json()} for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> OperatorMatrix:
        return cls(
            int(obj["dim"]),
            {(int(e["i"]), int(e["j"])): GaussSurd.from_json(e) for e in obj["entries"]},
        )

    def __repr__(self) -> str:
        return f"OperatorMatrix(dim={self.dim}, nnz={self.nnz})"


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a @ b - b @ a


def kron(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """Kronecker product; ``a`` indexes the outer (slow) factor."""
    n = b.dim
    out = {}
    for (i, j), x in a.entries.items():
        for (k, l), y in b.entries.items():
            out[(i * n + k, j * n + l)] = x * y
    return OperatorMatrix(a.dim * n, out)


# --------------------------------------------------------------------------
# su(2) generators
# --------------------------------------------------------------------------


def _raise_coeff(two_l: int, two_m: int) -> Surd:
    """sqrt((l - m)(l + m + 1)), the J+ matrix element from m to m + 1."""
    return Surd.sqrt(Fraction((two_l - two_m) * (two_l + two_m + 2), 4))


def _lower_coeff(two_l: int, two_m: int) -> Surd:
    """sqrt((l + m)(l - m + 1)), the J- matrix element from m to m - 1."""
    return Surd.sqrt(Fraction((two_l + two_m) * (two_l - two_m + 2), 4))


def su2_ladder(two_l: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    """(J+, J-) in the basis m = l, l-1, ..., -l."""
    if two_l < 0:
        raise ValueError("two_l must be non-negative")
    dim = two_l + 1
    plus = {}
    for i in range(1, dim):
        two_m = two_l - 2 * i  # state at index i, raised to index i - 1
        plus[(i - 1, i)] = GaussSurd(_raise_coeff(two_l, two_m))
    jp = OperatorMatrix(dim, plus)
    return jp, jp.transpose()


def su2_generators(two_l: int) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    jp, jm = su2_ladder(two_l)
    j1 = (jp + jm).scale(Fraction(1, 2))
    # J2 = (J+ - J-) / (2i)
    j2 = (jp - jm).scale(GaussSurd(Surd(Fraction(-1, 2)), True))
    j3 = OperatorMatrix.diagonal_of(Fraction(two_l - 2 * i, 2) for i in range(two_l + 1))
    return j1, j2, j3


# --------------------------------------------------------------------------
# Complex envelope and the A, B basis
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Envelope:
    rep: RepLabel
    X: tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]
    Y: tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]

    @property
    def dim(self) -> int:
        return self.rep.degree

    def x_ladder(self) -> tuple[OperatorMatrix, OperatorMatrix]:
        x1, x2, _ = self.X
        ix2 = x2.scale(I_UNIT)
        return x1 + ix2, x1 - ix2

    def y_ladder(self) -> tuple[OperatorMatrix, OperatorMatrix]:
        y1, y2, _ = self.Y
        iy2 = y2.scale(I_UNIT)
        return y1 + iy2, y1 - iy2


def envelope_xy(rep: RepLabel) -> Envelope:
    """Commuting su(2) triples on the helicity basis (ldot outer, l inner).

    X acts on the undotted factor.  Y acts on the dotted factor through the
    triple (-J1, -J2, J3), a pi rotation of the standard one about the third
    axis; with this choice the interlocking-matrix commutators hold exactly.
    """
    j = su2_generators(rep.two_l)
    jd = su2_generators(rep.two_ldot)
    one = OperatorMatrix.identity(rep.two_l + 1)
    one_d = OperatorMatrix.identity(rep.two_ldot + 1)
    X = tuple(kron(one_d, ji) for ji in j)
    k = (-jd[0], -jd[1], jd[2])
    Y = tuple(kron(ki, one) for ki in k)
    return Envelope(rep, X, Y)  # type: ignore[arg-type]


def ab_from_xy(env: Envelope) -> tuple[tuple[OperatorMatrix, ...], tuple[OperatorMatrix, ...]]:
    """A_i = -i(X_i + Y_i) and B_i = Y_i - X_i."""
    minus_i = -I_UNIT
    A = tuple((x + y).scale(minus_i) for x, y in zip(env.X, env.Y))
    B = tuple(y - x for x, y in zip(env.X, env.Y))
    return A, B


_LADDERS = ("X+", "X-", "Y+", "Y-", "X3", "Y3")


def ladder_apply(
    rep: RepLabel, which: str, state: tuple[HalfInt, HalfInt]
) -> tuple[Surd, tuple[HalfInt, HalfInt]]:
    """Coefficient and target state of a ladder or Cartan operator on |m; mdot>.

    Y+- carry an overall minus sign from the rotated dotted triple.
    """
    if which not in _LADDERS:
        raise ValueError(f"unknown operator {which!r}; expected one of {_LADDERS}")
    m, md = HalfInt.of(state[0]), HalfInt.of(state[1])
    for val, top in ((m, rep.two_l), (md, rep.two_ldot)):
        if abs(val.twice) > top or (top - val.twice) % 2:
            raise ValueError(f"state ({m}, {md}) outside rep {rep}")
    if which == "X3":
        return Surd(m.value), (m, md)
    if which == "Y3":
        return Surd(md.value), (m, md)
    if which == "X+":
        return _raise_coeff(rep.two_l, m.twice), (m + HalfInt(2), md)
    if which == "X-":
        return _lower_coeff(rep.two_l, m.twice), (m - HalfInt(2), md)
    if which == "Y+":
        return -_raise_coeff(rep.two_ldot, md.twice), (m, md + HalfInt(2))
    return -_lower_coeff(rep.two_ldot, md.twice), (m, md - HalfInt(2))


# --------------------------------------------------------------------------
# Relation suites
# --------------------------------------------------------------------------

_EPS = {(0, 1): (2, 1), (1, 2): (0, 1), (2, 0): (1, 1), (1, 0): (2, -1), (2, 1): (0, -1), (0, 2): (1, -1)}


def com1_residuals(A, B) -> dict[str, OperatorMatrix]:
    """[A_i,A_j] = e_ijk A_k, [B_i,B_j] = -e_ijk A_k, [A_i,B_j] = e_ijk B_k."""
    dim = A[0].dim
    out = {}
    for i in range(3):
        for j in range(3):
            if (i, j) in _EPS:
                k, s = _EPS[(i, j)]
                if i < j:
                    out[f"[A{i+1},A{j+1}]"] = commutator(A[i], A[j]) - A[k].scale(s)
                    out[f"[B{i+1},B{j+1}]"] = commutator(B[i], B[j]) + A[k].scale(s)
                out[f"[A{i+1},B{j+1}]"] = commutator(A[i], B[j]) - B[k].scale(s)
            else:
                out[f"[A{i+1},B{j+1}]"] = commutator(A[i], B[j]) - OperatorMatrix.zeros(dim)
    return out


def com2_residuals(env: Envelope) -> dict[str, OperatorMatrix]:
    """[X_i,X_j] = i e_ijk X_k, same for Y, and [X_i,Y_j] = 0."""
    out = {}
    for i in range(3):
        for j in range(3):
            out[f"[X{i+1},Y{j+1}]"] = commutator(env.X[i], env.Y[j])
            if (i, j) in _EPS and i < j:
                k, s = _EPS[(i, j)]
                f = GaussSurd(Surd(s), True)
                out[f"[X{i+1},X{j+1}]"] = commutator(env.X[i], env.X[j]) - env.X[k].scale(f)
                out[f"[Y{i+1},Y{j+1}]"] = commutator(env.Y[i], env.Y[j]) - env.Y[k].scale(f)
    return out


def ladder_residuals(env: Envelope) -> dict[str, OperatorMatrix]:
    """[T3, T+-] = +-T+- and [T+, T-] = 2 T3 for T in {X, Y}."""
    out = {}
    for name, (tp, tm), t3 in (("X", env.x_ladder(), env.X[2]), ("Y", env.y_ladder(), env.Y[2])):
        out[f"[{name}3,{name}+]"] = commutator(t3, tp) - tp
        out[f"[{name}3,{name}-]"] = commutator(t3, tm) + tm
        out[f"[{name}+,{name}-]"] = commutator(tp, tm) - t3.scale(2)
    return out
