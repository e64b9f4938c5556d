from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from oracles import lambda_oracle
from spinspec.exactnum import Surd
from spinspec.repcat import RepLabel, chain
from spinspec.rwegen import (
    ALPHA_CROSS_SIGN,
    CoefficientSet,
    assemble_system,
    basis,
    build_block,
    build_lambda,
    dirac_system,
    lambda_triple,
    maxwell_system,
    mo_alpha,
    pauli_check,
    pauli_matrices,
)

REPS = [RepLabel(k, r) for k in range(7) for r in range(7)]


@pytest.mark.parametrize("rep", REPS, ids=str)
def test_lambda_matches_kronecker_oracle(rep):
    for j in (1, 2, 3):
        ours = build_lambda(rep, j).to_numpy()
        assert np.allclose(ours, lambda_oracle(rep.two_l, rep.two_ldot, j), atol=1e-13)


@pytest.mark.parametrize("rep", REPS, ids=str)
def test_starring_flips_transverse_axes(rep):
    for j, s in ((1, -1), (2, -1), (3, 1)):
        assert build_lambda(rep, j, dual=True).matrix == build_lambda(rep, j).matrix.scale(s)


def test_coefficient_scales_linearly():
    rep = RepLabel(2, 1)
    c = CoefficientSet(default=Surd(3, 2))
    for j in (1, 2, 3):
        assert build_lambda(rep, j, c).matrix == build_lambda(rep, j).matrix.scale(Surd(3, 2))
    per_node = CoefficientSet(diagonal={rep: 5})
    assert build_lambda(rep, 3, per_node).coeff == 5
    assert build_lambda(RepLabel(1, 1), 3, per_node).coeff == 1


def test_half_zero_display():
    # Lambda^{1/2,0} at unit coefficient is sigma / 2
    sig = pauli_matrices()
    for lm, s in zip(lambda_triple(RepLabel(1, 0)), sig):
        assert lm.matrix == s.scale(Fraction(1, 2))


def test_half_half_display():
    lam3 = build_lambda(RepLabel(1, 1), 3).to_numpy()
    assert np.allclose(lam3, np.diag([0.25, -0.25, -0.25, 0.25]))
    lam1 = build_lambda(RepLabel(1, 1), 1).to_numpy()
    want = 0.25 * np.array([[0, 1, -1, 0], [1, 0, 0, 1], [-1, 0, 0, -1], [0, 1, -1, 0]])
    assert np.allclose(lam1, want)


def test_pauli():
    assert pauli_check(2).ok
    rep = pauli_check(1)
    assert not rep.ok and rep.factors == (Fraction(1, 2),) * 3


def test_alpha_is_cross_product():
    rng = np.random.default_rng(1)
    alphas = [a.to_numpy() for a in mo_alpha()]
    for _ in range(20):
        w = rng.normal(size=3) + 1j * rng.normal(size=3)
        for k in range(3):
            e = np.eye(3)[k]
            assert np.allclose(alphas[k] @ w, ALPHA_CROSS_SIGN * np.cross(e, w))


def test_alpha_spin_one_algebra():
    a = [x.to_numpy() for x in mo_alpha()]
    # alpha = -S for the standard spin-1 matrices S_k = -i eps_k
    assert np.allclose(a[0] @ a[1] - a[1] @ a[0], -1j * a[2])
    for k in range(3):
        assert np.allclose(np.linalg.eigvalsh(a[k]), [-1, 0, 1])
        lam = build_lambda(RepLabel(2, 0), k + 1).to_numpy()
        assert np.allclose(np.linalg.eigvalsh(lam), np.linalg.eigvalsh(a[k]))


def test_basis_order():
    b = basis(RepLabel(1, 1))
    assert len(b) == 4
    assert b.index(b.order[2][0], b.order[2][1]) == 2
    assert [(m.twice, md.twice) for m, md in b.order] == [(1, 1), (-1, 1), (1, -1), (-1, -1)]


def test_off_diagonal_rejected_in_diagonal_builder():
    c = CoefficientSet(off_diagonal={(RepLabel(3, 0), RepLabel(1, 0)): 1})
    with pytest.raises(ValueError):
        build_lambda(RepLabel(1, 0), 1, c)
    with pytest.raises(ValueError):
        build_lambda(RepLabel(1, 0), 4)


@pytest.mark.parametrize("low", [1, 2, 3, 4])
def test_edge_blocks_mutually_adjoint(low):
    a, b = RepLabel(low + 2, 0), RepLabel(low, 0)
    cs = CoefficientSet(off_diagonal={(a, b): 1, (b, a): 1})
    for j in (1, 2, 3):
        up, dn = build_block(a, b, j, cs), build_block(b, a, j, cs)
        assert up.shape == (a.degree, b.degree)
        U = np.zeros(up.shape, complex)
        D = np.zeros(dn.shape, complex)
        for (i, k), v in up.entries.items():
            U[i, k] = complex(v)
        for (i, k), v in dn.entries.items():
            D[i, k] = complex(v)
        assert np.allclose(U, D.conj().T)


def test_block_validation():
    cs = CoefficientSet()
    with pytest.raises(ValueError):
        build_block(RepLabel(2, 1), RepLabel(1, 0), 1, cs)
    with pytest.raises(ValueError):
        build_block(RepLabel(5, 0), RepLabel(1, 0), 1, cs)
    same = build_block(RepLabel(1, 0), RepLabel(1, 0), 3, cs)
    assert same.entries == build_lambda(RepLabel(1, 0), 3).matrix.entries


def test_dirac_system():
    sys = dirac_system()
    assert [lk.rep for lk in sys.links] == [RepLabel(1, 0), RepLabel(0, 1)]
    fwd, dual = sys.links
    assert (fwd.is_dual, fwd.conj_sign) == (False, -1j)
    assert (dual.is_dual, dual.conj_sign) == (True, 1j)
    assert fwd.mass == dual.mass == Fraction(1, 2)
    for lm, s in zip(fwd.active, pauli_matrices()):
        assert lm.matrix == s
    for lm, s in zip(dual.active, pauli_matrices()):
        assert lm.matrix == s


def test_maxwell_system():
    sys = maxwell_system()
    assert [lk.rep for lk in sys.links] == [RepLabel(2, 0), RepLabel(0, 2)]
    assert all(lk.mass == 0 for lk in sys.links)
    for lm, a in zip(sys.links[0].active, mo_alpha()):
        assert np.allclose(np.linalg.eigvalsh(lm.to_numpy()), np.sqrt(2) * np.linalg.eigvalsh(a.to_numpy()))


def test_assembled_chain_order_and_manifest():
    sys = assemble_system(chain(RepLabel(0, 3)), mu0=2)
    assert [lk.rep.two_l for lk in sys.links] == [3, 2, 1, 0]
    assert [lk.is_dual for lk in sys.links] == [False, False, True, True]
    man = sys.manifest()
    assert man["mu0"] == "2"
    assert [x["conj_sign"] for x in man["links"]] == ["-i", "-i", "+i", "+i"]
    assert sum(x["dim"] for x in man["links"]) == 4 + 6 + 6 + 4
