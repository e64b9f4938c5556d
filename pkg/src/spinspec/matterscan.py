"""Stability-level search on the spin-1/2 line and the proton-level census."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import HalfInt, RationalLike, as_fraction, fraction_str
from .repcat import RepLabel, cell_index, cone, mass
from .rwegen import build_lambda
from .spectral import DegeneracyProfile, profile

PROTON_LEVEL = RepLabel(30, 29)


@dataclass(frozen=True)
class StabilityResult:
    rep: RepLabel
    degree: int
    target_degree: float
    ratio_used: float
    cell: int
    boundary_distance: HalfInt

    def to_json(self) -> dict:
        return {
            "rep": self.rep.to_json(),
            "degree": self.degree,
            "target_degree": self.target_degree,
            "ratio": self.ratio_used,
            "cell": self.cell,
            "boundary_distance": self.boundary_distance.to_json(),
        }


def stability_search(ratio: float) -> StabilityResult:
    """Node (l, l - 1/2) whose degree is nearest ratio / 2; ties go to the larger degree."""
    if not ratio > 1:
        raise ValueError("ratio must exceed 1")
    target = ratio / 2
    best: RepLabel | None = None
    best_gap = float("inf")
    two_l = 1
    while True:
        rep = RepLabel(two_l, two_l - 1)
        gap = abs(rep.degree - target)
        if gap <= best_gap:
            best, best_gap = rep, gap
        if rep.degree > target:
            break
        two_l += 1
    assert best is not None
    cell, dist = cell_index(best)
    return StabilityResult(best, best.degree, target, ratio, cell, dist)


@dataclass(frozen=True)
class CensusReport:
    rep: RepLabel
    profile: DegeneracyProfile

    @property
    def distinct_count(self) -> int:
        return self.profile.distinct

    @property
    def zero_multiplicity(self) -> int:
        return self.profile.entries.get(Fraction(0), 0)

    @property
    def multiplicity_histogram(self) -> dict[int, int]:
        """multiplicity -> number of distinct non-zero eigenvalues."""
        nonzero = DegeneracyProfile({e: k for e, k in self.profile.entries.items() if e != 0})
        return nonzero.histogram()

    def with_multiplicity(self, k: int) -> list[Fraction]:
        return [e for e in self.profile.with_multiplicity(k) if e != 0]

    @property
    def consistency_sum(self) -> int:
        return self.profile.dim

    def to_json(self) -> dict:
        hist = self.multiplicity_histogram
        return {
            "rep": self.rep.to_json(),
            "distinct": self.distinct_count,
            "zero_multiplicity": self.zero_multiplicity,
            "histogram": {str(k): v for k, v in hist.items()},
            "classes": {str(k): [fraction_str(e) for e in self.with_multiplicity(k)] for k in hist},
            "consistency_sum": self.consistency_sum,
        }

    def rows(self) -> list[dict]:
        return [
            {"eig": fraction_str(e), "multiplicity": self.profile.entries[e]}
            for e in self.profile.eigenvalues()
        ]


def census(rep: RepLabel) -> CensusReport:
    """Degeneracy census of Lambda_3 at unit coefficient, from the diagonal."""
    return CensusReport(rep, profile(build_lambda(rep, 3)))


def proton_census() -> CensusReport:
    return census(PROTON_LEVEL)


MATTER_COLUMNS = ("two_l", "two_ldot", "degree", "spin", "mass_num", "mass_den", "cell")


def matter_table(max_weight: HalfInt | RationalLike, mu0: RationalLike = 1) -> list[dict]:
    mu0 = as_fraction(mu0)
    rows = []
    for rep in cone(max_weight):
        m = mass(rep, mu0)
        rows.append(
            {
                "two_l": rep.two_l,
                "two_ldot": rep.two_ldot,
                "degree": rep.degree,
                "spin": str(rep.spin),
                "mass_num": m.numerator,
                "mass_den": m.denominator,
                "cell": cell_index(rep)[0],
            }
        )
    return rows
