"""Exact characteristic polynomials and degeneracy profiles of Lambda matrices."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .exactnum import (
    GaussSurd,
    RationalPolynomial,
    Surd,
    fraction_str,
    poly_grid_roots,
)
from .liealg import OperatorMatrix
from .rwegen import LambdaMatrix
from .repcat import RepLabel


class UnsupportedShapeError(ValueError):
    """The exact path handles diagonal and Hermitian tridiagonal matrices only."""


class NonGridEigenvalueError(ArithmeticError):
    def __init__(self, message: str, remainder: RationalPolynomial | None = None):
        super().__init__(message)
        self.remainder = remainder


class SnapFailure(ArithmeticError):
    pass


DEFAULT_GRID = 4  # quarter-integer grid: products m*mdot of two half-odd labels


def _matrix(m: LambdaMatrix | OperatorMatrix) -> OperatorMatrix:
    return m.matrix if isinstance(m, LambdaMatrix) else m


def _real_rational(g: GaussSurd, what: str) -> Fraction:
    if g.imaginary and not g.is_zero():
        raise UnsupportedShapeError(f"{what} is imaginary")
    if g.value.radicand != 1:
        raise UnsupportedShapeError(f"{what} is irrational")
    return g.value.coeff


# --------------------------------------------------------------------------
# Characteristic polynomial
# --------------------------------------------------------------------------


def _diag_charpoly(diag: list[GaussSurd]) -> RationalPolynomial:
    rational: Counter[Fraction] = Counter()
    irrational: Counter[Surd] = Counter()
    for g in diag:
        if g.imaginary:
            raise UnsupportedShapeError("imaginary diagonal entry")
        if g.value.radicand == 1:
            rational[g.value.coeff] += 1
        else:
            irrational[g.value] += 1
    poly = RationalPolynomial([1])
    for root, k in sorted(rational.items()):
        poly = poly * RationalPolynomial.linear_root(root) ** k
    # +-q*sqrt(r) pairs combine to x^2 - q^2 r
    for s, k in sorted(irrational.items(), key=lambda it: (it[0].radicand, it[0].coeff)):
        if s.coeff < 0:
            continue
        if irrational.get(-s, 0) != k:
            raise UnsupportedShapeError(f"irrational eigenvalue {s} without its conjugate")
        poly = poly * RationalPolynomial([-s.square(), 0, 1]) ** k
    return poly


def _tridiag_charpoly(mat: OperatorMatrix) -> RationalPolynomial:
    n = mat.dim
    d = [_real_rational(mat[k, k], f"diagonal entry {k}") for k in range(n)]
    b2 = []
    for k in range(1, n):
        up, lo = mat[k - 1, k], mat[k, k - 1]
        if up.conjugate() != lo:
            raise UnsupportedShapeError("tridiagonal matrix is not Hermitian")
        b2.append(up.abs2())
    p_prev, p = RationalPolynomial([1]), RationalPolynomial([-d[0], 1]) if n else RationalPolynomial([1])
    for k in range(1, n):
        p_prev, p = p, RationalPolynomial([-d[k], 1]) * p - p_prev * b2[k - 1]
    return p


def charpoly_exact(m: LambdaMatrix | OperatorMatrix) -> RationalPolynomial:
    """det(x I - M) for diagonal or Hermitian tridiagonal input."""
    mat = _matrix(m)
    if mat.is_diagonal():
        return _diag_charpoly(mat.diagonal())
    if mat.is_tridiagonal():
        return _tridiag_charpoly(mat)
    raise UnsupportedShapeError("matrix is neither diagonal nor tridiagonal; use spectrum_numeric")


# --------------------------------------------------------------------------
# Profiles
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DegeneracyProfile:
    entries: Mapping[Fraction, int]

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    @property
    def distinct(self) -> int:
        return len(self.entries)

    def eigenvalues(self) -> list[Fraction]:
        return sorted(self.entries, reverse=True)

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.entries.values())

    def is_negation_symmetric(self) -> bool:
        return all(self.entries.get(-e) == k for e, k in self.entries.items())

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.entries.values()).items()))

    def with_multiplicity(self, k: int) -> list[Fraction]:
        return sorted((e for e, n in self.entries.items() if n == k), reverse=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegeneracyProfile):
            return NotImplemented
        return dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def to_json(self) -> list[dict]:
        return [{"eig": fraction_str(e), "alg": self.entries[e]} for e in self.eigenvalues()]


def profile_from_values(values) -> DegeneracyProfile:
    return DegeneracyProfile(dict(Counter(Fraction(v) for v in values)))


def profile(m: LambdaMatrix | OperatorMatrix, den: int = DEFAULT_GRID) -> DegeneracyProfile:
    """Eigenvalue -> algebraic multiplicity, by diagonal counting or grid roots."""
    mat = _matrix(m)
    if mat.is_diagonal():
        diag = mat.diagonal()
        for g in diag:
            if g.imaginary or g.value.radicand != 1:
                raise NonGridEigenvalueError(f"diagonal entry {g} is not rational")
        return profile_from_values(g.value.coeff for g in diag)
    poly = charpoly_exact(mat)
    roots, rest = poly_grid_roots(poly, den)
    if rest.degree > 0:
        raise NonGridEigenvalueError(f"eigenvalues off the 1/{den} grid: factor {rest}", rest)
    return DegeneracyProfile({r: k for r, k in roots})


def spectrum_numeric(
    m: LambdaMatrix | OperatorMatrix, tol: float = 1e-7, den: int = DEFAULT_GRID
) -> DegeneracyProfile:
    """Hermitian eigensolve, then snap every eigenvalue onto the 1/den grid."""
    if not 0 < tol < 1 / (2 * den):
        raise ValueError(f"tol must lie in (0, {1 / (2 * den)})")
    mat = _matrix(m)
    if mat.dim == 0:
        return DegeneracyProfile({})
    arr = mat.to_numpy()
    vals, vecs = np.linalg.eigh(arr)
    scale = max(1.0, float(np.linalg.norm(arr, 2)))
    resid = np.linalg.norm(arr @ vecs - vecs * vals, axis=0)
    if np.any(resid > tol * scale):
        raise SnapFailure("eigensolver residual exceeds tolerance")
    snapped = []
    for v in vals:
        t = round(v * den)
        if abs(v - t / den) > tol * scale:
            raise SnapFailure(f"eigenvalue {v:.12g} is off the 1/{den} grid")
        snapped.append(Fraction(t, den))
    prof = profile_from_values(snapped)
    try:
        exact = profile(mat, den)
    except (UnsupportedShapeError, NonGridEigenvalueError):
        return prof
    if exact != prof:
        raise SnapFailure("numeric spectrum disagrees with the exact characteristic polynomial")
    return prof


# --------------------------------------------------------------------------
# Geometric multiplicities and reports
# --------------------------------------------------------------------------


def _tridiag_blocks(mat: OperatorMatrix) -> list[tuple[int, int]]:
    cuts = [0]
    for k in range(1, mat.dim):
        if mat[k, k - 1].is_zero() and mat[k - 1, k].is_zero():
            cuts.append(k)
    cuts.append(mat.dim)
    return list(zip(cuts, cuts[1:]))


def geometric_multiplicities(
    m: LambdaMatrix | OperatorMatrix, prof: DegeneracyProfile
) -> dict[Fraction, int]:
    """dim ker(x I - M) for each eigenvalue x of the profile."""
    mat = _matrix(m)
    if mat.is_diagonal():
        return dict(prof.entries)
    if mat.is_tridiagonal():
        # irreducible Hermitian tridiagonal blocks have simple spectra
        out = {e: 0 for e in prof.entries}
        for lo, hi in _tridiag_blocks(mat):
            sub = OperatorMatrix(
                hi - lo,
                {(i - lo, j - lo): v for (i, j), v in mat.entries.items() if lo <= i < hi},
            )
            poly = _tridiag_charpoly(sub)
            for e in out:
                if poly(e) == 0:
                    out[e] += 1
        return out
    arr = mat.to_numpy()
    n = mat.dim
    return {
        e: n - int(np.linalg.matrix_rank(float(e) * np.eye(n) - arr, tol=1e-8))
        for e in prof.entries
    }


class Classification(str, enum.Enum):
    SIMPLE = "simple"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SpectrumReport:
    rep: RepLabel
    j: int
    dual: bool
    charpoly: RationalPolynomial | None
    profile: DegeneracyProfile
    geometric: Mapping[Fraction, int]

    @property
    def distinct_count(self) -> int:
        return self.profile.distinct

    @property
    def classification(self) -> Classification:
        return Classification.SIMPLE if self.profile.is_simple() else Classification.DEGENERATE

    def elementary_divisors(self) -> str:
        parts = []
        for e in self.profile.eigenvalues():
            k = self.profile.entries[e]
            if e == 0:
                base = "x"
            elif e > 0:
                base = f"(x-{e})"
            else:
                base = f"(x+{-e})"
            parts.append(base if k == 1 else f"{base}^{k}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "rep": self.rep.to_json(),
            "j": self.j,
            "dual": self.dual,
            "charpoly": self.charpoly.to_json() if self.charpoly is not None else None,
            "profile": [
                {"eig": fraction_str(e), "alg": self.profile.entries[e], "geom": self.geometric[e]}
                for e in self.profile.eigenvalues()
            ],
            "distinct": self.distinct_count,
            "class": self.classification.value,
        }


def classify(
    m: LambdaMatrix,
    with_charpoly: bool = True,
    tol: float = 1e-7,
    den: int = DEFAULT_GRID,
) -> SpectrumReport:
    """Exact report where possible, grid-snapped numeric profile otherwise."""
    mat = m.matrix
    poly = None
    if with_charpoly:
        try:
            poly = charpoly_exact(mat)
        except UnsupportedShapeError:
            poly = None
    try:
        prof = profile(mat, den)
    except UnsupportedShapeError:
        prof = spectrum_numeric(mat, tol, den)
    geom = geometric_multiplicities(mat, prof)
    return SpectrumReport(m.rep, m.j, m.dual, poly, prof, geom)
