"""Catalog of the interlocking Lorentz-group representations tau_{l,ldot}.

Every node is keyed by a :class:`RepLabel` holding the doubled labels
``(2l, 2ldot)``.  The helpers here cover degrees, the mass formula, SU(2)
content, spin chains and lines, chessboard cells and the real Clifford
classification used for charge classes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import HalfInt, RationalLike, as_fraction


@dataclass(frozen=True, order=True)
class RepLabel:
    two_l: int
    two_ldot: int

    def __post_init__(self) -> None:
        if self.two_l < 0 or self.two_ldot < 0:
            raise ValueError(f"labels must be non-negative, got ({self.two_l}, {self.two_ldot})")

    @classmethod
    def of(cls, l, ldot) -> RepLabel:
        return cls(HalfInt.of(l).twice, HalfInt.of(ldot).twice)

    @property
    def l(self) -> HalfInt:
        return HalfInt(self.two_l)

    @property
    def ldot(self) -> HalfInt:
        return HalfInt(self.two_ldot)

    @property
    def weight(self) -> HalfInt:
        """l + ldot, constant along a spin chain."""
        return HalfInt(self.two_l + self.two_ldot)

    @property
    def spin(self) -> HalfInt:
        return HalfInt(abs(self.two_l - self.two_ldot))

    @property
    def degree(self) -> int:
        return (self.two_l + 1) * (self.two_ldot + 1)

    def swapped(self) -> RepLabel:
        return RepLabel(self.two_ldot, self.two_l)

    def __str__(self) -> str:
        return f"({self.l},{self.ldot})"

    def to_json(self) -> dict:
        return {"two_l": self.two_l, "two_ldot": self.two_ldot}

    @classmethod
    def from_json(cls, obj: dict) -> RepLabel:
        return cls(int(obj["two_l"]), int(obj["two_ldot"]))


def degree(rep: RepLabel) -> int:
    return rep.degree


def mass(rep: RepLabel, mu0: RationalLike = 1) -> Fraction:
    """mu0 * (l + 1/2) * (ldot + 1/2)."""
    mu0 = as_fraction(mu0)
    if mu0 <= 0:
        raise ValueError("mu0 must be positive")
    return mu0 * Fraction((rep.two_l + 1) * (rep.two_ldot + 1), 4)


def su2_restriction(rep: RepLabel) -> list[HalfInt]:
    """Clebsch-Gordan content of tau_{l,ldot} restricted to SU(2), largest spin first."""
    k, r = rep.two_l, rep.two_ldot
    return [HalfInt(t) for t in range(k + r, abs(k - r) - 1, -2)]


# --------------------------------------------------------------------------
# Substrate and state descriptors
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SubstrateDescriptor:
    k: int
    r: int

    @property
    def spinspace_dim(self) -> int:
        return 2 ** (self.k + self.r)

    @property
    def sym_dim(self) -> int:
        return (self.k + 1) * (self.r + 1)


def substrate(rep: RepLabel) -> SubstrateDescriptor:
    return SubstrateDescriptor(k=rep.two_l, r=rep.two_ldot)


class Ring(str, enum.Enum):
    R = "R"
    R_PLUS_R = "R+R"
    C = "C"
    H = "H"
    H_PLUS_H = "H+H"


class ChargeClass(str, enum.Enum):
    CHARGED = "charged"
    NEUTRAL = "neutral"
    TRULY_NEUTRAL = "truly_neutral"


class Charge(str, enum.Enum):
    MINUS = "-1"
    ZERO = "0"
    PLUS = "+1"
    ZERO_BAR = "0bar"


_MOD8_RING = {
    0: Ring.R,
    1: Ring.R_PLUS_R,
    2: Ring.R,
    3: Ring.C,
    4: Ring.H,
    5: Ring.H_PLUS_H,
    6: Ring.H,
    7: Ring.C,
}

_RING_CHARGE = {
    Ring.C: ChargeClass.CHARGED,
    Ring.H: ChargeClass.NEUTRAL,
    Ring.H_PLUS_H: ChargeClass.NEUTRAL,
    Ring.R: ChargeClass.TRULY_NEUTRAL,
    Ring.R_PLUS_R: ChargeClass.TRULY_NEUTRAL,
}


@dataclass(frozen=True)
class CliffordClass:
    p: int
    q: int
    mod8: int
    ring: Ring
    charge_class: ChargeClass


def classify_clifford(p: int, q: int) -> CliffordClass:
    if p < 0 or q < 0:
        raise ValueError("signature entries must be non-negative")
    mod8 = (p - q) % 8
    ring = _MOD8_RING[mod8]
    return CliffordClass(p, q, mod8, ring, _RING_CHARGE[ring])


@dataclass(frozen=True)
class ParticleStateDescriptor:
    rep: RepLabel
    substrate: SubstrateDescriptor
    charge: Charge
    mass: Fraction


def state_descriptor(rep: RepLabel, charge: Charge = Charge.ZERO, mu0: RationalLike = 1) -> ParticleStateDescriptor:
    return ParticleStateDescriptor(rep, substrate(rep), Charge(charge), mass(rep, mu0))


# --------------------------------------------------------------------------
# Chains, lines, cells
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinChain:
    links: tuple[RepLabel, ...]
    reduced: bool = False

    def __post_init__(self) -> None:
        if not self.links:
            raise ValueError("empty chain")
        w = self.links[0].weight
        for a, b in zip(self.links, self.links[1:]):
            if b.weight != w:
                raise ValueError("l + ldot must be constant along a chain")
            if not self.reduced and abs(b.two_l - a.two_l) != 1:
                raise ValueError(f"links {a} and {b} are not adjacent")
        if self.links[-1] != self.links[0].swapped():
            raise ValueError("a chain must run from (l, ldot) to (ldot, l)")

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    def spins(self) -> list[Fraction]:
        """Signed spins l - ldot along the chain."""
        return [Fraction(r.two_l - r.two_ldot, 2) for r in self.links]


def chain(rep: RepLabel) -> SpinChain:
    k, r = rep.two_l, rep.two_ldot
    step = 1 if k < r else -1
    links = tuple(RepLabel(k + step * i, r - step * i) for i in range(abs(r - k) + 1))
    return SpinChain(links)


def reduced_chain(rep: RepLabel) -> SpinChain:
    """Only the two endpoints, e.g. (1,0) <-> (0,1) once spin 0 is dropped."""
    if rep.two_l == rep.two_ldot:
        return SpinChain((rep,), reduced=True)
    return SpinChain((rep, rep.swapped()), reduced=True)


def spin_line(s: HalfInt | RationalLike, count: int) -> list[RepLabel]:
    """The first ``count`` nodes with l - ldot = s, ascending in l."""
    if count < 1:
        raise ValueError("count must be >= 1")
    two_s = HalfInt.of(s).twice
    start_l, start_ld = (two_s, 0) if two_s >= 0 else (0, -two_s)
    return [RepLabel(start_l + n, start_ld + n) for n in range(count)]


def cone(max_weight: HalfInt | RationalLike) -> list[RepLabel]:
    """Every node with l + ldot <= max_weight, by weight then descending l."""
    two_w = HalfInt.of(max_weight).twice
    if two_w < 0:
        raise ValueError("max_weight must be non-negative")
    return [RepLabel(k, w - k) for w in range(two_w + 1) for k in range(w, -1, -1)]


def cell_index(rep: RepLabel) -> tuple[int, HalfInt]:
    """Chessboard cell of a node and its distance to the upper cell boundary.

    Cell ``n`` covers weights ``w = l + ldot`` in ``(4n - 6, 4n - 2]``; cell 1
    also contains ``w = 0``.
    """
    two_w = rep.two_l + rep.two_ldot
    # smallest n with 2w <= 8n - 4
    n = max(1, -(-(two_w + 4) // 8))
    return n, HalfInt(8 * n - 4 - two_w)


def fractal_dimension() -> float:
    return math.log(63) / math.log(8)
