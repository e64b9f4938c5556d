"""Relativistic-wave-equation matrices Lambda^{l,ldot}_j and chain systems.

Single-node matrices use the diagonal interlocking coefficient only; the
off-diagonal coefficients c_{l+-1,l} couple distinct nodes and live in
:func:`build_block`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactnum import GaussSurd, HalfInt, I_UNIT, RationalLike, Surd, as_fraction
from .liealg import OperatorMatrix
from .repcat import RepLabel, SpinChain, chain, mass

Coefficient = Surd | RationalLike


def _surd(c: Coefficient) -> Surd:
    return c if isinstance(c, Surd) else Surd(as_fraction(c))


# --------------------------------------------------------------------------
# Basis and coefficients
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HelicityBasis:
    rep: RepLabel
    order: tuple[tuple[HalfInt, HalfInt], ...]

    def __len__(self) -> int:
        return len(self.order)

    def index(self, m: HalfInt, mdot: HalfInt) -> int:
        return _index(self.rep, m.twice, mdot.twice)


def _index(rep: RepLabel, two_m: int, two_md: int) -> int:
    return ((rep.two_ldot - two_md) // 2) * (rep.two_l + 1) + (rep.two_l - two_m) // 2


def basis(rep: RepLabel) -> HelicityBasis:
    """mdot outer and descending, m inner and descending."""
    order = tuple(
        (HalfInt(tm), HalfInt(tmd))
        for tmd in range(rep.two_ldot, -rep.two_ldot - 1, -2)
        for tm in range(rep.two_l, -rep.two_l - 1, -2)
    )
    return HelicityBasis(rep, order)


@dataclass(frozen=True)
class CoefficientSet:
    """Interlocking constants.

    ``default`` is the diagonal c_{ll} (or c_{ll;ldot ldot}) used for every
    node without an entry in ``diagonal``.  ``off_diagonal`` maps
    ``(row_rep, col_rep)`` to c_{l', l}; it defaults to zero.
    """

    default: Coefficient = 1
    diagonal: Mapping[RepLabel, Coefficient] = field(default_factory=dict)
    off_diagonal: Mapping[tuple[RepLabel, RepLabel], Coefficient] = field(default_factory=dict)

    def diag(self, rep: RepLabel) -> Surd:
        return _surd(self.diagonal.get(rep, self.default))

    def off(self, row: RepLabel, col: RepLabel) -> Surd:
        return _surd(self.off_diagonal.get((row, col), 0))

    def has_off_diagonal(self) -> bool:
        return any(not _surd(v).is_zero() for v in self.off_diagonal.values())


# --------------------------------------------------------------------------
# Lambda matrices
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LambdaMatrix:
    rep: RepLabel
    j: int
    dual: bool
    coeff: Surd
    matrix: OperatorMatrix

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def to_numpy(self):
        return self.matrix.to_numpy()


def _sqrt4(n: int) -> Surd:
    """sqrt(n / 4) for the doubled-label products used below."""
    return Surd.sqrt(Fraction(n, 4))


def _ladder_entries(two_l: int):
    """Yield (two_m_from, two_m_to, sqrt coefficient) for m -> m-1 and m -> m+1."""
    for tm in range(two_l, -two_l - 1, -2):
        if tm > -two_l:  # m -> m - 1: sqrt((l+m)(l-m+1))
            yield tm, tm - 2, _sqrt4((two_l + tm) * (two_l - tm + 2))
        if tm < two_l:  # m -> m + 1: sqrt((l+m+1)(l-m))
            yield tm, tm + 2, _sqrt4((two_l + tm + 2) * (two_l - tm))


_HALF = Fraction(1, 2)
_HALF_I = GaussSurd(Surd(_HALF), True)


def _edge_matrix(two_l: int, j: int, c: Surd) -> OperatorMatrix:
    """Diagonal block of the single-label tables; m indexes the basis."""
    dim = two_l + 1
    ent: dict[tuple[int, int], GaussSurd] = {}
    idx = lambda tm: (two_l - tm) // 2  # noqa: E731
    if j == 3:
        for tm in range(two_l, -two_l - 1, -2):
            ent[(idx(tm), idx(tm))] = GaussSurd(c * Fraction(tm, 2))
        return OperatorMatrix(dim, ent)
    for tm, tn, root in _ladder_entries(two_l):
        val = c * root * _HALF
        if j == 1:
            ent[(idx(tn), idx(tm))] = GaussSurd(val)
        else:
            # +i/2 on the lowering side, -i/2 on the raising side
            ent[(idx(tn), idx(tm))] = GaussSurd(val if tn < tm else -val, True)
    return OperatorMatrix(dim, ent)


def _tensor_matrix(rep: RepLabel, j: int, c: Surd) -> OperatorMatrix:
    """Diagonal block of the two-label tables."""
    k, r = rep.two_l, rep.two_ldot
    ent: dict[tuple[int, int], GaussSurd] = {}
    if j == 3:
        for tmd in range(r, -r - 1, -2):
            for tm in range(k, -k - 1, -2):
                i = _index(rep, tm, tmd)
                ent[(i, i)] = GaussSurd(c * Fraction(tm * tmd, 4))
        return OperatorMatrix(rep.degree, ent)
    imag = j == 2
    for tmd in range(r, -r - 1, -2):
        # undotted step weighted by mdot
        for tm, tn, root in _ladder_entries(k):
            val = c * root * Fraction(tmd, 4)
            if imag and tn > tm:
                val = -val
            ent[(_index(rep, tn, tmd), _index(rep, tm, tmd))] = GaussSurd(val, imag)
    for tm in range(k, -k - 1, -2):
        # dotted step weighted by -m
        for tmd, tnd, root in _ladder_entries(r):
            val = -(c * root * Fraction(tm, 4))
            if imag and tnd > tmd:
                val = -val
            ent[(_index(rep, tm, tnd), _index(rep, tm, tmd))] = GaussSurd(val, imag)
    return OperatorMatrix(rep.degree, ent)


def build_lambda(
    rep: RepLabel, j: int, coeffs: CoefficientSet | None = None, dual: bool = False
) -> LambdaMatrix:
    """Lambda^{l,ldot}_j (or its starred counterpart) in the helicity basis."""
    if j not in (1, 2, 3):
        raise ValueError(f"axis index must be 1, 2 or 3, got {j}")
    coeffs = coeffs or CoefficientSet()
    if coeffs.has_off_diagonal():
        raise ValueError(
            "off-diagonal interlocking coefficients couple distinct nodes; use build_block"
        )
    c = coeffs.diag(rep)
    # Starring flips the sign of the j = 1, 2 matrices.  The (0, ldot) table
    # is itself the starred one, so there the unstarred matrices are flipped.
    if rep.two_ldot == 0:
        mat, starred_table = _edge_matrix(rep.two_l, j, c), False
    elif rep.two_l == 0:
        mat, starred_table = _edge_matrix(rep.two_ldot, j, c), True
    else:
        mat, starred_table = _tensor_matrix(rep, j, c), False
    if j in (1, 2) and dual != starred_table:
        mat = -mat
    return LambdaMatrix(rep, j, dual, c, mat)


def lambda_triple(
    rep: RepLabel, coeffs: CoefficientSet | None = None, dual: bool = False
) -> tuple[LambdaMatrix, LambdaMatrix, LambdaMatrix]:
    return tuple(build_lambda(rep, j, coeffs, dual) for j in (1, 2, 3))  # type: ignore[return-value]


@dataclass(frozen=True)
class Block:
    """Rectangular block coupling ``col_rep`` into ``row_rep``."""

    row_rep: RepLabel
    col_rep: RepLabel
    j: int
    entries: dict[tuple[int, int], GaussSurd]

    @property
    def shape(self) -> tuple[int, int]:
        return self.row_rep.degree, self.col_rep.degree


def build_block(
    row_rep: RepLabel, col_rep: RepLabel, j: int, coeffs: CoefficientSet, dual: bool = False
) -> Block:
    """Off-diagonal block between edge nodes (l', 0) and (l, 0) with l' = l +- 1.

    Dual edge nodes (0, l') and (0, l) use the same element formulas.  Blocks
    between interior nodes are not supported.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"axis index must be 1, 2 or 3, got {j}")
    if row_rep == col_rep:
        return Block(row_rep, col_rep, j, dict(build_lambda(row_rep, j, coeffs, dual).matrix.entries))
    if row_rep.two_ldot == 0 and col_rep.two_ldot == 0:
        tp, tl = row_rep.two_l, col_rep.two_l
    elif row_rep.two_l == 0 and col_rep.two_l == 0:
        tp, tl = row_rep.two_ldot, col_rep.two_ldot
    else:
        raise ValueError("off-diagonal blocks are only supported between edge nodes")
    if abs(tp - tl) != 2:
        raise ValueError(f"no table entries couple {col_rep} into {row_rep}")
    c = coeffs.off(row_rep, col_rep)
    up = tp > tl
    ent: dict[tuple[int, int], GaussSurd] = {}
    row_idx = lambda tm: (tp - tm) // 2  # noqa: E731
    col_idx = lambda tm: (tl - tm) // 2  # noqa: E731
    for tm in range(tl, -tl - 1, -2):
        if j == 3:
            # sqrt(l^2 - m^2) down, sqrt((l+1)^2 - m^2) up
            top = tl + 2 if up else tl
            if abs(tm) <= tp:
                ent[(row_idx(tm), col_idx(tm))] = GaussSurd(c * _sqrt4(top * top - tm * tm))
            continue
        for step in (-2, 2):
            tn = tm + step
            if abs(tn) > tp:
                continue
            if up:
                if step < 0:  # (l-m+1)(l-m+2), +
                    root, sign = _sqrt4((tl - tm + 2) * (tl - tm + 4)), 1
                else:  # (l+m+1)(l+m+2), -
                    root, sign = _sqrt4((tl + tm + 2) * (tl + tm + 4)), -1
            else:
                if step < 0:  # (l+m)(l+m-1), -
                    root, sign = _sqrt4((tl + tm) * (tl + tm - 2)), -1
                else:  # (l-m)(l-m-1), +
                    root, sign = _sqrt4((tl - tm) * (tl - tm - 2)), 1
            val = c * root * _HALF
            if j == 1:
                g = GaussSurd(val * sign)
            else:
                # imaginary table: sign is fixed by the direction of l
                g = GaussSurd(val if up else -val, True)
            if not g.is_zero():
                ent[(row_idx(tn), col_idx(tm))] = g
    return Block(row_rep, col_rep, j, ent)


# --------------------------------------------------------------------------
# Fixed displays
# --------------------------------------------------------------------------


def pauli_matrices() -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    one, i = GaussSurd(Surd(1)), I_UNIT
    return (
        OperatorMatrix(2, {(0, 1): one, (1, 0): one}),
        OperatorMatrix(2, {(0, 1): -i, (1, 0): i}),
        OperatorMatrix(2, {(0, 0): one, (1, 1): -one}),
    )


@dataclass(frozen=True)
class PauliReport:
    ok: bool
    factors: tuple[Fraction | None, ...]


def pauli_check(c: Coefficient = 2) -> PauliReport:
    """Compare Lambda^{1/2,0}_j at coefficient ``c`` with sigma_j.

    ``factors`` gives the rational ratio Lambda_j / sigma_j per axis, or None
    when the two are not proportional.
    """
    coeffs = CoefficientSet(default=c)
    facs = []
    for sig, lam in zip(pauli_matrices(), lambda_triple(RepLabel(1, 0), coeffs)):
        (key, s0), = list(sig.entries.items())[:1]
        v = lam.matrix[key]
        ratio = None
        if v.imaginary == s0.imaginary and v.value.radicand == 1:
            q = v.value.coeff / s0.value.coeff
            if lam.matrix == sig.scale(q):
                ratio = q
        facs.append(ratio)
    return PauliReport(all(f == 1 for f in facs), tuple(facs))


def mo_alpha() -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    i = I_UNIT
    return (
        OperatorMatrix(3, {(1, 2): i, (2, 1): -i}),
        OperatorMatrix(3, {(0, 2): -i, (2, 0): i}),
        OperatorMatrix(3, {(0, 1): i, (1, 0): -i}),
    )


# alpha_k w = ALPHA_CROSS_SIGN * (e_k x w), fixed by direct expansion
ALPHA_CROSS_SIGN = -1j


# --------------------------------------------------------------------------
# Systems
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RweLink:
    rep: RepLabel
    forward: tuple[LambdaMatrix, LambdaMatrix, LambdaMatrix]
    starred: tuple[LambdaMatrix, LambdaMatrix, LambdaMatrix]
    mass: Fraction
    is_dual: bool

    @property
    def active(self) -> tuple[LambdaMatrix, LambdaMatrix, LambdaMatrix]:
        return self.starred if self.is_dual else self.forward

    @property
    def conj_sign(self) -> complex:
        """Factor in front of the conjugate-parameter derivative block."""
        return 1j if self.is_dual else -1j

    @property
    def spin(self) -> Fraction:
        return Fraction(self.rep.two_l - self.rep.two_ldot, 2)


@dataclass(frozen=True)
class RweSystem:
    chain: SpinChain
    links: tuple[RweLink, ...]
    mu0: Fraction

    def manifest(self) -> dict:
        return {
            "mu0": str(self.mu0),
            "links": [
                {
                    "rep": lk.rep.to_json(),
                    "dual": lk.is_dual,
                    "conj_sign": "+i" if lk.is_dual else "-i",
                    "mass": str(lk.mass),
                    "dim": lk.rep.degree,
                }
                for lk in self.links
            ],
        }


def assemble_system(
    spin_chain: SpinChain,
    mu0: RationalLike = 1,
    coeffs: CoefficientSet | None = None,
    massless: bool = False,
) -> RweSystem:
    """One equation per link, ordered by descending l.

    Links with l >= ldot carry Lambda and the -i pattern; links with l < ldot
    carry the starred matrices and +i.
    """
    coeffs = coeffs or CoefficientSet()
    mu0 = as_fraction(mu0)
    links = sorted(spin_chain.links, key=lambda r: -r.two_l)
    out = []
    for rep in links:
        m = Fraction(0) if massless else mass(rep, mu0)
        out.append(
            RweLink(
                rep=rep,
                forward=lambda_triple(rep, coeffs, dual=False),
                starred=lambda_triple(rep, coeffs, dual=True),
                mass=m,
                is_dual=rep.two_l < rep.two_ldot,
            )
        )
    return RweSystem(spin_chain, tuple(out), mu0)


def dirac_system(mu0: RationalLike = 1, c: Coefficient = 2) -> RweSystem:
    return assemble_system(chain(RepLabel(1, 0)), mu0, CoefficientSet(default=c))


def maxwell_system(c: Coefficient | None = None) -> RweSystem:
    """Massless (1,0) + (0,1) system with the spin-0 node dropped."""
    from .repcat import reduced_chain

    coeff = c if c is not None else Surd(1, 2)
    return assemble_system(reduced_chain(RepLabel(2, 0)), 1, CoefficientSet(default=coeff), massless=True)
