"""Invariant suites exercised by ``spinspec verify``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .exactnum import HalfInt, RationalPolynomial, Surd, poly_halfint_roots, surd_mul
from .liealg import (
    ab_from_xy,
    com1_residuals,
    com2_residuals,
    commutator,
    envelope_xy,
    ladder_residuals,
)
from .matterscan import proton_census
from .repcat import RepLabel, chain, classify_clifford, cell_index, su2_restriction
from .rwegen import build_lambda, lambda_triple
from .spectral import charpoly_exact, profile, spectrum_numeric
from .special import HsfParams, hyperspherical_m


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "ok": self.ok, "detail": self.detail}


def _reps(max_two: int) -> Iterator[RepLabel]:
    for k in range(max_two + 1):
        for r in range(max_two + 1):
            yield RepLabel(k, r)


def _first_failure(items) -> str:
    for label, ok in items:
        if not ok:
            return str(label)
    return ""


def exactnum_suite() -> list[tuple[str, bool, str]]:
    rng = random.Random(0)
    bad_mul = []
    for _ in range(2000):
        a = Surd(Fraction(rng.randint(-50, 50), rng.randint(1, 20)), rng.randint(0, 200))
        b = Surd(Fraction(rng.randint(-50, 50), rng.randint(1, 20)), rng.randint(0, 200))
        prod, ref = float(surd_mul(a, b)), float(a) * float(b)
        if not math.isclose(prod, ref, rel_tol=1e-12, abs_tol=1e-300):
            bad_mul.append((a, b))
    bad_half = []
    for _ in range(20000):
        x, y = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        hx, hy = HalfInt(x), HalfInt(y)
        fx, fy = Fraction(x, 2), Fraction(y, 2)
        if (hx + hy).value != fx + fy or (hx - hy).value != fx - fy or (hx < hy) != (fx < fy):
            bad_half.append((x, y))
    bad_roots = []
    for _ in range(200):
        roots = [Fraction(rng.randint(-12, 12), 2) for _ in range(rng.randint(1, 6))]
        extra = RationalPolynomial([rng.choice([2, 3, 5, 7]), 0, 1])
        p = RationalPolynomial.from_roots(roots) * extra * rng.randint(1, 9)
        found, rest = poly_halfint_roots(p)
        back = rest
        for r, k in found:
            back = back * RationalPolynomial.linear_root(r.value) ** k
        if back != p:
            bad_roots.append(roots)
    return [
        ("surd product matches float product", not bad_mul, str(bad_mul[:1])),
        ("half-integer arithmetic matches rationals", not bad_half, str(bad_half[:1])),
        ("grid roots re-expand to the polynomial", not bad_roots, str(bad_roots[:1])),
    ]


def catalog_suite() -> list[tuple[str, bool, str]]:
    small = [RepLabel(k, r) for k in range(40) for r in range(40) if (k + 1) * (r + 1) <= 400]
    dims = [(rep, sum(s.twice + 1 for s in su2_restriction(rep)) == rep.degree) for rep in small]
    rev = [(rep, list(reversed(chain(rep).links)) == list(chain(rep.swapped()).links)) for rep in small]

    def spins_ok(rep: RepLabel) -> bool:
        ch = chain(rep)
        vals = ch.spins()
        w = Fraction(abs(rep.two_l - rep.two_ldot), 2)
        return all(b - a == (1 if rep.two_l < rep.two_ldot else -1) for a, b in zip(vals, vals[1:])) and (
            abs(vals[0]) == w and abs(vals[-1]) == w
        )

    spins = [(rep, spins_ok(rep)) for rep in small]
    cliff = [
        ((p, q), classify_clifford(p, q).ring
         == classify_clifford(p + 8, q).ring
         == classify_clifford(p, q + 8).ring
         == classify_clifford(p + 1, q + 1).ring)
        for p in range(9) for q in range(9)
    ]
    cells = [(rep, 0 <= cell_index(rep)[1].value < 4) for rep in small]
    return [
        ("su2 restriction dimensions sum to the degree", all(ok for _, ok in dims), _first_failure(dims)),
        ("reversed chain equals chain of swapped labels", all(ok for _, ok in rev), _first_failure(rev)),
        ("chain spins step by one between the endpoints", all(ok for _, ok in spins), _first_failure(spins)),
        ("Clifford class depends on p - q mod 8 only", all(ok for _, ok in cliff), _first_failure(cliff)),
        ("cell boundary distance lies in [0, 4)", all(ok for _, ok in cells), _first_failure(cells)),
    ]


def algebra_suite(max_two: int = 5) -> list[tuple[str, bool, str]]:
    com1, com2, ladd, herm = [], [], [], []
    for rep in _reps(max_two):
        env = envelope_xy(rep)
        A, B = ab_from_xy(env)
        com1.append((rep, all(v.is_zero() for v in com1_residuals(A, B).values())))
        com2.append((rep, all(v.is_zero() for v in com2_residuals(env).values())))
        ladd.append((rep, all(v.is_zero() for v in ladder_residuals(env).values())))
        herm.append((rep, all(x.is_hermitian() for x in env.X + env.Y)
                     and all(a.is_antihermitian() for a in A)
                     and all(b.is_hermitian() for b in B)))
    return [
        ("Lorentz-algebra relations for A, B", all(ok for _, ok in com1), _first_failure(com1)),
        ("envelope relations for X, Y", all(ok for _, ok in com2), _first_failure(com2)),
        ("ladder relations", all(ok for _, ok in ladd), _first_failure(ladd)),
        ("X, B Hermitian and A anti-Hermitian", all(ok for _, ok in herm), _first_failure(herm)),
    ]


def lambda_suite(max_two: int = 5) -> list[tuple[str, bool, str]]:
    comm, herm, trace, negsym, diag = [], [], [], [], []
    for rep in _reps(max_two):
        env = envelope_xy(rep)
        A, _ = ab_from_xy(env)
        xp, xm = env.x_ladder()
        yp, ym = env.y_ladder()
        for dual, s in ((False, 1), (True, -1)):
            L1, L2, L3 = (lm.matrix for lm in lambda_triple(rep, dual=dual))
            ok = (commutator(A[1], L3) - L1.scale(s)).is_zero()
            ok &= (commutator(A[0], L3) + L2.scale(s)).is_zero()
            if rep.two_l:
                ok &= (commutator(commutator(L3, xm), xp) - L3.scale(2)).is_zero()
            if rep.two_ldot:
                ok &= (commutator(commutator(L3, ym), yp) - L3.scale(2)).is_zero()
            comm.append(((rep, dual), ok))
    for rep in (RepLabel(k, r) for k in range(16) for r in range(16) if (k + 1) * (r + 1) <= 64):
        trip = [lm.matrix for lm in lambda_triple(rep)]
        herm.append((rep, all(m.is_hermitian() for m in trip)))
        trace.append((rep, all(m.trace().is_zero() for m in trip)))
        d = [g.value.coeff for g in trip[2].diagonal()]
        negsym.append((rep, sorted(d) == sorted(-x for x in d)))
        want = [Fraction(m.twice * md.twice, 4) if rep.two_l and rep.two_ldot else
                Fraction(m.twice if rep.two_l else md.twice, 2)
                for md in (HalfInt(t) for t in range(rep.two_ldot, -rep.two_ldot - 1, -2))
                for m in (HalfInt(t) for t in range(rep.two_l, -rep.two_l - 1, -2))]
        diag.append((rep, d == want))
    return [
        ("Lambda commutator construction", all(ok for _, ok in comm), _first_failure(comm)),
        ("Lambda matrices Hermitian", all(ok for _, ok in herm), _first_failure(herm)),
        ("Lambda matrices traceless", all(ok for _, ok in trace), _first_failure(trace)),
        ("Lambda_3 diagonal negation symmetric", all(ok for _, ok in negsym), _first_failure(negsym)),
        ("Lambda_3 equals diag(m * mdot)", all(ok for _, ok in diag), _first_failure(diag)),
    ]


def spectral_suite() -> list[tuple[str, bool, str]]:
    simple = []
    for k in range(1, 13):
        want = {Fraction(t, 2): 1 for t in range(k, -k - 1, -2)}
        for j in (1, 2, 3):
            simple.append(((k, j), dict(profile(build_lambda(RepLabel(k, 0), j)).entries) == want))
    pairs, sums, agree = [], [], []
    for rep in (RepLabel(k, r) for k in range(1, 16) for r in range(1, 16) if (k + 1) * (r + 1) <= 64):
        prof = profile(build_lambda(rep, 3))
        pairs.append((rep, all(n >= 2 for e, n in prof.entries.items() if e != 0)))
        sums.append((rep, prof.is_negation_symmetric() and prof.dim == rep.degree))
        cp = charpoly_exact(build_lambda(rep, 3))
        ref = RationalPolynomial([1])
        for e, n in prof.entries.items():
            ref = ref * RationalPolynomial.linear_root(e) ** n
        agree.append((rep, cp == ref))
    numeric = []
    for k in range(1, 9):
        for j in (1, 2, 3):
            lm = build_lambda(RepLabel(k, 0), j)
            numeric.append(((k, j), spectrum_numeric(lm) == profile(lm)))
    return [
        ("edge spectra simple", all(ok for _, ok in simple), _first_failure(simple)),
        ("non-zero Lambda_3 eigenvalues at least twofold", all(ok for _, ok in pairs), _first_failure(pairs)),
        ("profiles negation symmetric and sum to degree", all(ok for _, ok in sums), _first_failure(sums)),
        ("Lambda_3 charpoly equals product over the profile", all(ok for _, ok in agree), _first_failure(agree)),
        ("numeric and exact spectra agree", all(ok for _, ok in numeric), _first_failure(numeric)),
    ]


def census_suite() -> list[tuple[str, bool, str]]:
    c = proton_census()
    hist = c.multiplicity_histogram
    total = c.zero_multiplicity + sum(k * n for k, n in hist.items())
    return [
        ("census multiplicities sum to the degree", total == c.consistency_sum == c.rep.degree, str(total)),
    ]


def special_suite() -> list[tuple[str, bool, str]]:
    trivial = []
    for two_l0 in range(0, 7):
        for m in range(-two_l0, two_l0 + 1, 2):
            for n in range(-two_l0, m + 1, 2):
                val = hyperspherical_m(HsfParams(0.8, HalfInt(two_l0), HalfInt(m), HalfInt(n)))
                if m != n:
                    trivial.append(((two_l0, m, n), val == 0))
    unit = [(rho, hyperspherical_m(HsfParams(rho, 2, 0, 0)) == 1) for rho in (0.0, 0.5, 3.0)]
    return [
        ("vanishes at the identity for m != n", all(ok for _, ok in trivial), _first_failure(trivial)),
        ("equals one at the identity for m = n = 0", all(ok for _, ok in unit), _first_failure(unit)),
    ]


SUITES: dict[str, Callable[[], list[tuple[str, bool, str]]]] = {
    "exactnum": exactnum_suite,
    "catalog": catalog_suite,
    "algebra": algebra_suite,
    "lambda": lambda_suite,
    "spectral": spectral_suite,
    "census": census_suite,
    "special": special_suite,
}


def run_all(names: list[str] | None = None) -> list[CheckResult]:
    out = []
    for suite in names or list(SUITES):
        for name, ok, detail in SUITES[suite]():
            out.append(CheckResult(suite, name, bool(ok), detail if not ok else ""))
    return out
