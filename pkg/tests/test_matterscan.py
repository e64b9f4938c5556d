from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from oracles import census_bruteforce
from spinspec.exactnum import HalfInt
from spinspec.matterscan import (
    MATTER_COLUMNS,
    PROTON_LEVEL,
    census,
    matter_table,
    proton_census,
    stability_search,
)
from spinspec.repcat import RepLabel, cone

F = Fraction


def test_proton_census_against_bruteforce():
    rep = proton_census()
    ref = census_bruteforce(30, 29)
    assert dict(rep.profile.entries) == dict(ref)
    nonzero = Counter(k for e, k in ref.items() if e != 0)
    assert rep.multiplicity_histogram == dict(nonzero)
    assert rep.zero_multiplicity == ref[F(0)]
    assert rep.consistency_sum == sum(ref.values()) == 930


@pytest.mark.parametrize("rep", [RepLabel(k, k - 1) for k in range(3, 31, 4)], ids=str)
def test_census_on_spin_half_line(rep):
    ref = census_bruteforce(rep.two_l, rep.two_ldot)
    c = census(rep)
    assert c.distinct_count == len(ref)
    assert set(c.with_multiplicity(2)) == {e for e, k in ref.items() if k == 2 and e != 0}


def test_census_json_and_rows():
    c = proton_census()
    doc = c.to_json()
    assert doc["distinct"] == 329
    assert sorted(doc["classes"]["8"]) == sorted(["15/2", "45/2", "-15/2", "-45/2"])
    rows = c.rows()
    assert len(rows) == 329
    assert rows[0]["eig"] == "435/2"
    assert sum(r["multiplicity"] for r in rows) == 930


def test_stability_search():
    res = stability_search(1836.57)
    assert res.rep == PROTON_LEVEL
    assert (res.degree, res.cell, res.boundary_distance) == (930, 8, HalfInt(1))
    assert stability_search(4.0).rep == RepLabel(1, 0)
    with pytest.raises(ValueError):
        stability_search(1.0)


def test_stability_search_is_nearest():
    for ratio in (10.0, 100.0, 555.5, 3000.0):
        res = stability_search(ratio)
        gaps = [abs(RepLabel(k, k - 1).degree - ratio / 2) for k in range(1, 80)]
        assert abs(res.degree - ratio / 2) == min(gaps)


def test_matter_table():
    rows = matter_table(2, mu0=2)
    assert len(rows) == len(cone(2))
    assert set(rows[0]) == set(MATTER_COLUMNS)
    half = next(r for r in rows if (r["two_l"], r["two_ldot"]) == (1, 1))
    assert F(half["mass_num"], half["mass_den"]) == 2
