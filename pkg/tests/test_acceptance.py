"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
"""

from __future__ import annotations

import io
import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import census_bruteforce, hsf_oracle
from spinspec.cli import EXIT_OK, run
from spinspec.exactnum import GaussSurd, HalfInt, I_UNIT, RationalPolynomial, Surd
from spinspec.liealg import (
    OperatorMatrix,
    ab_from_xy,
    com1_residuals,
    com2_residuals,
    commutator,
    envelope_xy,
    ladder_residuals,
)
from spinspec.matterscan import proton_census, stability_search
from spinspec.repcat import (
    RepLabel,
    Ring,
    classify_clifford,
    degree,
    fractal_dimension,
    mass,
    su2_restriction,
)
from spinspec.rwegen import ALPHA_CROSS_SIGN, CoefficientSet, build_lambda, lambda_triple, mo_alpha, pauli_matrices
from spinspec.spectral import charpoly_exact, profile
from spinspec.special import HsfParams, gauss_2f1, hyperspherical_m, terminating_2f1_exact

F = Fraction
R = RepLabel.of


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))

    return emit


def _poly(*coeffs) -> RationalPolynomial:
    """Coefficients given highest degree first."""
    return RationalPolynomial([F(c) for c in reversed(coeffs)])


def _timed_charpoly(rep: RepLabel, j: int, c=1):
    t0 = time.perf_counter()
    p = charpoly_exact(build_lambda(rep, j, CoefficientSet(default=c)))
    return p, time.perf_counter() - t0


CHARPOLY_CASES = [
    ("(1/2,0)", RepLabel(1, 0), (1, 2, 3), 1, _poly(1, 0, F(-1, 4))),
    ("(1,0) c=sqrt2", RepLabel(2, 0), (1, 2, 3), Surd(1, 2), _poly(1, 0, -2, 0)),
    ("(2,0)", RepLabel(4, 0), (1,), 1, _poly(1, 0, -5, 0, 4, 0)),
    ("(5/2,0)", RepLabel(5, 0), (1,), 1, _poly(1, 0, F(-35, 4), 0, F(259, 16), 0, F(-225, 64))),
]


def _check_charpolys(cases):
    bad = []
    for name, rep, js, c, want in cases:
        for j in js:
            got, dt = _timed_charpoly(rep, j, c)
            if got != want or dt >= 1.0:
                bad.append(f"{name} j={j}: got {got} in {dt:.3f}s")
    return bad


@pytest.mark.xfail(
    strict=True,
    reason="the listed middle coefficient 5/4 for (3/2,0) j=1 is inconsistent with its own roots +-3/2, +-1/2",
)
def test_criterion_01_charpolys_as_listed(report):
    bad = _check_charpolys(CHARPOLY_CASES + [("(3/2,0)", RepLabel(3, 0), (1,), 1, _poly(1, 0, F(-5, 4), 0, F(9, 16)))])
    report(1, not bad, "; ".join(bad))
    assert not bad


def test_criterion_01_charpolys_corrected():
    bad = _check_charpolys(CHARPOLY_CASES + [("(3/2,0)", RepLabel(3, 0), (1,), 1, _poly(1, 0, F(-5, 2), 0, F(9, 16)))])
    assert not bad, bad
    roots = np.roots([16, 0, -40, 0, 9])
    assert np.allclose(sorted(roots.real), [-1.5, -0.5, 0.5, 1.5])


def test_criterion_02_edge_spectra_simple(report):
    t0 = time.perf_counter()
    bad = []
    for k in range(1, 13):
        want = {F(t, 2): 1 for t in range(k, -k - 1, -2)}
        for j in (1, 2, 3):
            lm = build_lambda(RepLabel(k, 0), j)
            shape_ok = lm.matrix.is_diagonal() if j == 3 else lm.matrix.is_tridiagonal()
            if not shape_ok or dict(profile(lm).entries) != want:
                bad.append(f"2l={k} j={j}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5.0
    report(2, ok, f"{dt:.2f}s " + ", ".join(bad))
    assert ok


def _pm(pairs: dict) -> dict:
    out = {}
    for e, k in pairs.items():
        out[F(e)] = k
        out[-F(e)] = k
    return out


def test_criterion_03_chain_profiles(report):
    cases = {
        R(1, F(1, 2)): _pm({F(1, 2): 2}) | {F(0): 2},
        R(F(3, 2), 1): _pm({F(3, 2): 2, F(1, 2): 2}) | {F(0): 4},
        R(2, F(3, 2)): _pm({3: 2, F(3, 2): 2, 1: 2, F(1, 2): 2}) | {F(0): 4},
    }
    bad = [str(rep) for rep, want in cases.items() if dict(profile(build_lambda(rep, 3)).entries) != want]
    big = dict(profile(build_lambda(R(F(7, 2), 3), 3)).entries)
    others_squared = all(k == 2 for e, k in big.items() if e not in (0, F(3, 2), F(-3, 2)))
    if not (big.get(F(0)) == 8 and big.get(F(3, 2)) == big.get(F(-3, 2)) == 4 and others_squared):
        bad.append("(7/2,3)")
    report(3, not bad, ", ".join(bad))
    assert not bad


MULT6 = _pm({F(9, 2): 1, F(21, 2): 1, F(27, 2): 1, 15: 1, 21: 1, F(63, 2): 1, F(75, 2): 1, F(105, 2): 1, F(135, 2): 1})
MULT4_POSITIVE = [
    F(3, 2), F(5, 2), 3, F(7, 2), 5, F(11, 2), 6, F(13, 2), 7, 9, F(25, 2), F(33, 2), F(35, 2),
    18, F(39, 2), 25, 27, F(55, 2), 30, F(65, 2), 35, F(77, 2), F(81, 2), 42, 45,
    F(91, 2), F(99, 2), 54, F(117, 2), 63, F(143, 2), 75, F(165, 2), F(189, 2), F(195, 2), 105, F(225, 2),
]
MULT4 = set(_pm({e: 1 for e in MULT4_POSITIVE}))


def test_criterion_04_proton_census(report):
    t0 = time.perf_counter()
    c = proton_census()
    dt = time.perf_counter() - t0
    checks = {
        "distinct=329": c.distinct_count == 329,
        "mult8": set(c.with_multiplicity(8)) == {F(15, 2), F(-15, 2), F(45, 2), F(-45, 2)},
        "mult6": set(c.with_multiplicity(6)) == set(MULT6) and len(c.with_multiplicity(6)) == 18,
        "mult4": set(c.with_multiplicity(4)) == MULT4 and len(c.with_multiplicity(4)) == 74,
        "zero=30": c.zero_multiplicity == 30,
        "mult2=232": c.multiplicity_histogram.get(2) == 232,
        "sum=930": c.consistency_sum == 930,
        "bruteforce": dict(c.profile.entries) == dict(census_bruteforce(30, 29)),
        "runtime<1s": dt < 1.0,
    }
    bad = [k for k, v in checks.items() if not v]
    diff = ""
    if bad:
        got4 = set(c.with_multiplicity(4))
        diff = f" missing4={sorted(MULT4 - got4)} extra4={sorted(got4 - MULT4)}"
    report(4, not bad, ", ".join(bad) + diff)
    assert not bad


def _exact(rows) -> OperatorMatrix:
    ent = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v != 0:
                ent[(i, j)] = v if isinstance(v, GaussSurd) else GaussSurd(Surd(v))
    return OperatorMatrix(len(rows), ent)


def test_criterion_05_pauli_maxwell(report):
    bad = []
    c2 = CoefficientSet(default=2)
    if [lm.matrix for lm in lambda_triple(RepLabel(1, 0), c2)] != list(pauli_matrices()):
        bad.append("pauli")
    i = I_UNIT
    displays = [
        _exact([[0, 1, 0], [1, 0, 1], [0, 1, 0]]),
        _exact([[0, -i, 0], [i, 0, -i], [0, i, 0]]),
        _exact([[GaussSurd(Surd(1, 2)), 0, 0], [0, 0, 0], [0, 0, GaussSurd(Surd(-1, 2))]]),
    ]
    sq2 = CoefficientSet(default=Surd(1, 2))
    if [lm.matrix for lm in lambda_triple(RepLabel(2, 0), sq2)] != displays:
        bad.append("(1,0) displays")
    alphas = [
        _exact([[0, 0, 0], [0, 0, i], [0, -i, 0]]),
        _exact([[0, 0, -i], [0, 0, 0], [i, 0, 0]]),
        _exact([[0, i, 0], [-i, 0, 0], [0, 0, 0]]),
    ]
    if list(mo_alpha()) != alphas:
        bad.append("alpha")
    eye = np.eye(3)
    for k, a in enumerate(mo_alpha()):
        for m in range(3):
            if not np.allclose(a.to_numpy() @ eye[m], ALPHA_CROSS_SIGN * np.cross(eye[k], eye[m])):
                bad.append(f"cross e{k + 1} x e{m + 1}")
    report(5, not bad, ", ".join(bad))
    assert not bad


def _commut_ok(rep: RepLabel) -> bool:
    env = envelope_xy(rep)
    A, _ = ab_from_xy(env)
    L1, L2, L3 = (lm.matrix for lm in lambda_triple(rep))
    ok = commutator(A[1], L3) == L1 and commutator(A[0], L3) == -L2
    # the double commutator needs the ladder acting on a non-trivial factor
    plus, minus = env.x_ladder() if rep.two_l else env.y_ladder()
    return ok and commutator(commutator(L3, minus), plus) == L3.scale(2)


def test_criterion_06_algebra_suites(report):
    bad = []
    for k in range(6):
        for r in range(6):
            rep = RepLabel(k, r)
            env = envelope_xy(rep)
            A, B = ab_from_xy(env)
            res = {**com1_residuals(A, B), **com2_residuals(env), **ladder_residuals(env)}
            bad += [f"{rep} {name}" for name, m in res.items() if not m.is_zero()]
            if not _commut_ok(rep):
                bad.append(f"{rep} commut")
    report(6, not bad, ", ".join(bad[:5]))
    assert not bad


CLIFFORD_RINGS = {0: Ring.R, 1: Ring.R_PLUS_R, 2: Ring.R, 3: Ring.C, 4: Ring.H, 5: Ring.H_PLUS_H, 6: Ring.H, 7: Ring.C}


def test_criterion_07_catalog(report):
    small = [RepLabel(k, r) for k in range(400) for r in range(400) if (k + 1) * (r + 1) <= 400]
    checks = {
        "su2 sums": all(sum(s.twice + 1 for s in su2_restriction(rep)) == rep.degree for rep in small),
        "degree(15,29/2)": degree(R(15, F(29, 2))) == 930,
        "degree(7/2,3)": degree(R(F(7, 2), 3)) == 56,
        "mass": mass(R(15, F(29, 2)), F(3)) == F(465, 2) * 3,
        "fractal": abs(fractal_dimension() - 1.9924) <= 1e-4,
        "clifford": all(
            classify_clifford(p, q).ring is CLIFFORD_RINGS[(p - q) % 8]
            for p in range(9) for q in range(9) if p + q <= 8
        ),
    }
    bad = [k for k, v in checks.items() if not v]
    report(7, not bad, ", ".join(bad))
    assert not bad


def test_criterion_08_stability_search(report):
    res = stability_search(1836.57)
    ok = res.rep == R(15, F(29, 2)) and res.cell == 8 and res.boundary_distance == HalfInt.of(F(1, 2))
    report(8, ok, f"{res.rep} cell {res.cell} distance {res.boundary_distance}")
    assert ok


HSF_POINTS = [
    (0.7, F(1, 2), F(1, 2), F(-1, 2), 0.9, 0.4),
    (1.3, F(1), F(1), F(0), 0.5, 0.8),
    (0.25, F(3, 2), F(1, 2), F(-3, 2), 1.7, 1.1),
]


def test_criterion_09_hyperspherical(report):
    bad = []
    for two_l0 in range(0, 7):
        for tm in range(-two_l0, two_l0 + 1, 2):
            for tn in range(-two_l0, tm + 1, 2):
                if tm == tn and tm != 0:
                    continue
                val = hyperspherical_m(HsfParams(0.9, HalfInt(two_l0), HalfInt(tm), HalfInt(tn)))
                if val != (1 if tm == tn else 0):
                    bad.append(f"trivial l0={two_l0}/2 m={tm}/2 n={tn}/2")
    for rho, l0, m, n, theta, tau in HSF_POINTS:
        got = hyperspherical_m(HsfParams(rho, l0, m, n, theta, tau))
        want = hsf_oracle(rho, l0, m, n, theta, tau)
        if abs(got - want) > 1e-9 * abs(want):
            bad.append(f"point l0={l0} m={m} n={n}: {got} vs {want}")
    for two_l0 in range(0, 7):
        l0 = F(two_l0, 2)
        for tm in range(-two_l0, two_l0 + 1, 2):
            for tt in range(-two_l0, tm + 1, 2):
                m, t = F(tm, 2), F(tt, 2)
                for z in (F(-1, 4), F(-3)):
                    exact = terminating_2f1_exact(int(m - l0), -t - l0, m - t + 1, z)
                    approx = gauss_2f1(float(m - l0), float(-t - l0), float(m - t + 1), float(z))
                    if abs(approx - float(exact)) > 1e-12 * max(1.0, abs(float(exact))):
                        bad.append(f"terminating l0={l0} m={m} t={t} z={z}")
    report(9, not bad, ", ".join(bad[:3]))
    assert not bad


def test_criterion_10_determinism(report, tmp_path):
    codes = []
    for d in ("first", "second"):
        for argv in (["verify"], ["census"], ["census", "--format", "csv"]):
            codes.append(run(argv + ["--out-dir", str(tmp_path / d)], stdout=io.StringIO()))
    names = sorted(p.name for p in (tmp_path / "first").iterdir())
    same = all((tmp_path / "first" / n).read_bytes() == (tmp_path / "second" / n).read_bytes() for n in names)
    ok = all(c == EXIT_OK for c in codes) and same and len(names) == 3
    report(10, ok, ", ".join(names))
    assert ok
