from __future__ import annotations

import math
from fractions import Fraction

import pytest

from spinspec.exactnum import HalfInt
from spinspec.repcat import (
    Charge,
    ChargeClass,
    RepLabel,
    Ring,
    SpinChain,
    cell_index,
    chain,
    classify_clifford,
    cone,
    degree,
    fractal_dimension,
    mass,
    reduced_chain,
    spin_line,
    state_descriptor,
    su2_restriction,
    substrate,
)

R = RepLabel.of


def test_degree_examples():
    assert degree(R(Fraction(1, 2), 0)) == 2
    assert degree(R(15, Fraction(29, 2))) == 930
    assert degree(R(Fraction(7, 2), 3)) == 56


def test_mass_examples():
    assert mass(R(Fraction(1, 2), Fraction(1, 2)), 1) == 1
    assert mass(R(15, Fraction(29, 2)), 1) == Fraction(465, 2)
    assert mass(R(0, 0), 4) == 1
    with pytest.raises(ValueError):
        mass(R(0, 0), 0)


def test_su2_restriction_examples():
    assert su2_restriction(R(1, Fraction(1, 2))) == [HalfInt(3), HalfInt(1)]
    assert su2_restriction(R(Fraction(1, 2), Fraction(1, 2))) == [HalfInt(2), HalfInt(0)]
    spins = su2_restriction(R(2, Fraction(3, 2)))
    assert [s.twice for s in spins] == [7, 5, 3, 1]
    assert sum(s.twice + 1 for s in spins) == 20


def test_su2_dimension_sum_brute_force():
    for k in range(25):
        for r in range(25):
            rep = RepLabel(k, r)
            # brute-force Clebsch-Gordan: count (m, mdot) pairs
            assert sum(s.twice + 1 for s in su2_restriction(rep)) == (k + 1) * (r + 1)


def test_chain_examples():
    assert chain(R(0, Fraction(3, 2))).links == (
        RepLabel(0, 3), RepLabel(1, 2), RepLabel(2, 1), RepLabel(3, 0)
    )
    assert chain(R(0, 1)).links == (RepLabel(0, 2), RepLabel(1, 1), RepLabel(2, 0))
    assert chain(R(1, 1)).links == (RepLabel(2, 2),)


def test_chain_reverse_property():
    for k in range(12):
        for r in range(12):
            rep = RepLabel(k, r)
            assert tuple(reversed(chain(rep).links)) == chain(rep.swapped()).links
            assert len({link.weight for link in chain(rep)}) == 1


def test_chain_validation():
    with pytest.raises(ValueError):
        SpinChain((RepLabel(2, 0), RepLabel(0, 2)))
    assert reduced_chain(RepLabel(2, 0)).links == (RepLabel(2, 0), RepLabel(0, 2))


def test_spin_line():
    assert spin_line(Fraction(1, 2), 3) == [RepLabel(1, 0), RepLabel(2, 1), RepLabel(3, 2)]
    assert spin_line(Fraction(1, 2), 30)[-1] == R(15, Fraction(29, 2))
    assert spin_line(0, 2) == [RepLabel(0, 0), RepLabel(1, 1)]
    assert spin_line(Fraction(-1), 1) == [RepLabel(0, 2)]


def test_cell_index():
    assert cell_index(R(15, Fraction(29, 2))) == (8, HalfInt(1))
    assert cell_index(R(Fraction(1, 2), 0)) == (1, HalfInt(3))
    assert cell_index(R(0, 0)) == (1, HalfInt(4))
    # boundary rows w = 4n - 2 close cell n
    assert cell_index(R(1, 1)) == (1, HalfInt(0))
    assert cell_index(R(1, Fraction(3, 2))) == (2, HalfInt(7))
    for rep in cone(40):
        n, d = cell_index(rep)
        assert 0 <= d.value < 4 or (n == 1 and d.value == 2) or d.value <= 2
        w = rep.weight.value
        assert (4 * n - 6 < w <= 4 * n - 2) or (n == 1 and w == 0)


CLIFFORD_TABLE = {
    0: Ring.R, 1: Ring.R_PLUS_R, 2: Ring.R, 3: Ring.C,
    4: Ring.H, 5: Ring.H_PLUS_H, 6: Ring.H, 7: Ring.C,
}


def test_clifford_examples():
    assert classify_clifford(1, 3).ring is Ring.H
    assert classify_clifford(1, 3).charge_class is ChargeClass.NEUTRAL
    assert classify_clifford(0, 3).ring is Ring.H_PLUS_H
    assert classify_clifford(2, 0).charge_class is ChargeClass.TRULY_NEUTRAL
    assert classify_clifford(3, 0).charge_class is ChargeClass.CHARGED


def test_clifford_periodicity():
    for p in range(12):
        for q in range(12):
            cls = classify_clifford(p, q)
            assert cls.mod8 == (p - q) % 8
            assert cls.ring is CLIFFORD_TABLE[cls.mod8]


def test_fractal_dimension():
    d = fractal_dimension()
    assert abs(d - 1.9924) < 1e-4
    assert math.isclose(8**d, 63, rel_tol=1e-9)
    assert 1 < d < 2


def test_descriptors():
    sub = substrate(RepLabel(2, 1))
    assert (sub.spinspace_dim, sub.sym_dim) == (8, 6)
    st = state_descriptor(RepLabel(1, 1), Charge.ZERO_BAR)
    assert st.mass == 1 and st.charge is Charge.ZERO_BAR


def test_cone_order():
    assert cone(1) == [
        RepLabel(0, 0), RepLabel(1, 0), RepLabel(0, 1), RepLabel(2, 0), RepLabel(1, 1), RepLabel(0, 2)
    ]
    assert len(cone(15)) == sum(w + 1 for w in range(31))


def test_label_json_roundtrip():
    rep = RepLabel(30, 29)
    assert RepLabel.from_json(rep.to_json()) == rep
    with pytest.raises(ValueError):
        RepLabel(-1, 0)
