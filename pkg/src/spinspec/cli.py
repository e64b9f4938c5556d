"""Command-line driver.

All spin labels are passed as doubled integers: ``rep 29 30`` is the node
(29/2, 15).  Machine output goes to stdout as JSON unless an output
directory is configured, in which case files are written there and stdout
carries a short summary.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from . import export
from .exactnum import ExactArithmeticError, HalfInt, Surd, fraction_str
from .matterscan import MATTER_COLUMNS, census, matter_table, stability_search
from .repcat import (
    RepLabel,
    cell_index,
    chain,
    mass,
    reduced_chain,
    substrate,
    su2_restriction,
)
from .rwegen import CoefficientSet, assemble_system, build_lambda
from .spectral import NonGridEigenvalueError, SnapFailure, UnsupportedShapeError, charpoly_exact, classify
from .special import ConvergenceError, HsfParams, hyperspherical_m
from .suites import SUITES, run_all

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64

CONFIG_ENV = "SPINSPEC_CONFIG"
FORMATS = ("json", "csv", "matrixmarket")


class UsageError(Exception):
    pass


_COEFF_RE = re.compile(
    r"^\s*(?:(?P<q>[+-]?\d+(?:/\d+)?)\s*\*?\s*)?(?:sqrt\((?P<r>\d+)\))?\s*$"
)


def parse_coefficient(text: str) -> Surd:
    """Accepts ``p/q``, ``sqrt(n)`` or ``p/q*sqrt(n)``."""
    m = _COEFF_RE.match(str(text))
    if not m or (m.group("q") is None and m.group("r") is None):
        raise ValueError(f"cannot parse coefficient {text!r}")
    q = Fraction(m.group("q")) if m.group("q") is not None else Fraction(1)
    r = int(m.group("r")) if m.group("r") is not None else 1
    return Surd(q, r)


@dataclass(frozen=True)
class Config:
    coefficient: str = "1"
    snap_tol: float = 1e-7
    hsf_tol: float = 1e-12
    output_dir: str | None = None
    format: str = "json"

    def __post_init__(self) -> None:
        if not (self.snap_tol > 0 and self.hsf_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        parse_coefficient(self.coefficient)

    @classmethod
    def from_file(cls, path: str | Path) -> Config:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "coefficient" in data:
            data["coefficient"] = str(data["coefficient"])
        return cls(**data)


def load_config(args: argparse.Namespace) -> Config:
    """File from --config, else from $SPINSPEC_CONFIG; flags override file values."""
    path = args.config or os.environ.get(CONFIG_ENV)
    cfg = Config.from_file(path) if path else Config()
    overrides = {
        "coefficient": args.c,
        "snap_tol": args.snap_tol,
        "hsf_tol": args.hsf_tol,
        "output_dir": args.out_dir,
        "format": args.format,
    }
    return replace(cfg, **{k: v for k, v in overrides.items() if v is not None})


# --------------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401
        raise UsageError(f"{self.prog}: {message}")


def _label(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a doubled spin label (integer), got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("spin labels are non-negative")
    return v


def _signed_label(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a doubled integer, got {text!r}")


def _global_options(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--config", default=default, help=f"JSON config file (default: ${CONFIG_ENV})")
    parser.add_argument("--c", default=default,
                        help="diagonal interlocking coefficient, e.g. 1, 2, sqrt(2), 1/2*sqrt(2)")
    parser.add_argument("--snap-tol", type=float, default=default, help="grid-snap tolerance for numeric spectra")
    parser.add_argument("--hsf-tol", type=float, default=default, help="series tolerance for hypergeometric sums")
    parser.add_argument("--out-dir", default=default, help="write machine output files here")
    parser.add_argument("--format", choices=FORMATS, default=default, help="machine output format")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="spinspec",
        description="Lorentz-group representation catalog and RWE spectra. "
        "Spin labels are doubled integers: 29 means 29/2.",
    )
    _global_options(p, None)
    # the same options are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)  # type: ignore[method-assign]

    def with_rep(sp):
        sp.add_argument("two_l", type=_label, help="2l")
        sp.add_argument("two_ldot", type=_label, help="2ldot")
        return sp

    with_rep(sub.add_parser("rep", help="catalog data for one node"))
    sp = with_rep(sub.add_parser("chain", help="spin chain and its RWE system manifest"))
    sp.add_argument("--mu0", default="1", help="mass unit (rational)")
    sp.add_argument("--reduced", action="store_true", help="keep only the chain endpoints")
    sp.add_argument("--massless", action="store_true")
    for name, helptext in (
        ("lambda", "export a Lambda matrix"),
        ("charpoly", "exact characteristic polynomial"),
        ("spectrum", "degeneracy profile and classification"),
    ):
        sp = with_rep(sub.add_parser(name, help=helptext))
        sp.add_argument("--j", type=int, choices=(1, 2, 3), default=3)
        sp.add_argument("--dual", action="store_true", help="starred matrix")
    sp = sub.add_parser("census", help="Lambda_3 degeneracy census (default: the (15, 29/2) node)")
    sp.add_argument("--two-l", type=_label, default=30)
    sp.add_argument("--two-ldot", type=_label, default=29)
    sp = sub.add_parser("search", help="stability-level search on the spin-1/2 line")
    sp.add_argument("--ratio", type=float, default=1836.57)
    sp = sub.add_parser("hsf", help="principal-series hyperspherical function")
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--l0", type=_label, required=True, help="2*l0")
    sp.add_argument("--m", type=_signed_label, required=True, help="2*m")
    sp.add_argument("--n", type=_signed_label, required=True, help="2*n")
    sp.add_argument("--theta", type=float, default=0.0)
    sp.add_argument("--tau", type=float, default=0.0)
    sp.add_argument("--phi", type=float, default=0.0)
    sp.add_argument("--psi", type=float, default=0.0)
    sp.add_argument("--eps-m", type=float, default=0.0)
    sp.add_argument("--eps-n", type=float, default=0.0)
    sp = sub.add_parser("verify", help="run the invariant suites")
    sp.add_argument("--suite", action="append", choices=sorted(SUITES), help="restrict to a suite")
    sp = sub.add_parser("table", help="catalog table for the representation cone")
    sp.add_argument("--max-weight", type=_label, required=True, help="2*(l + ldot) bound")
    sp.add_argument("--mu0", default="1")
    return p


# --------------------------------------------------------------------------
# Output
# --------------------------------------------------------------------------


class Output:
    def __init__(self, cfg: Config, stdout=None):
        self.cfg = cfg
        self.stdout = stdout or sys.stdout
        self.written: list[Path] = []

    @property
    def to_files(self) -> bool:
        return self.cfg.output_dir is not None

    def _path(self, stem: str, ext: str) -> Path:
        return Path(self.cfg.output_dir) / f"{stem}.{ext}"

    def say(self, text: str) -> None:
        print(text, file=self.stdout)

    def emit_json(self, stem: str, obj, summary: str) -> None:
        if self.to_files:
            self.written.append(export.write_json(obj, self._path(stem, "json")))
            self.say(summary)
        else:
            self.stdout.write(export.dumps_json(obj))

    def emit_rows(self, stem: str, rows: list[dict], columns, obj, summary: str) -> None:
        if self.cfg.format == "csv":
            if self.to_files:
                self.written.append(export.write_csv(rows, columns, self._path(stem, "csv")))
                self.say(summary)
            else:
                import csv

                w = csv.DictWriter(self.stdout, fieldnames=list(columns), lineterminator="\n")
                w.writeheader()
                w.writerows(rows)
        else:
            self.emit_json(stem, obj, summary)


def _rep(args) -> RepLabel:
    return RepLabel(args.two_l, args.two_ldot)


def _coeffs(cfg: Config) -> CoefficientSet:
    return CoefficientSet(default=parse_coefficient(cfg.coefficient))


def _stem(prefix: str, rep: RepLabel, args=None) -> str:
    s = f"{prefix}_{rep.two_l}_{rep.two_ldot}"
    if args is not None and hasattr(args, "j"):
        s += f"_j{args.j}" + ("_dual" if args.dual else "")
    return s


def cmd_rep(args, cfg: Config, out: Output) -> int:
    rep = _rep(args)
    cell, dist = cell_index(rep)
    sub = substrate(rep)
    obj = {
        "rep": rep.to_json(),
        "degree": rep.degree,
        "spin": rep.spin.to_json(),
        "weight": rep.weight.to_json(),
        "mass": fraction_str(mass(rep)),
        "cell": cell,
        "boundary_distance": dist.to_json(),
        "su2_restriction": [s.to_json() for s in su2_restriction(rep)],
        "substrate": {"k": sub.k, "r": sub.r, "spinspace_dim": sub.spinspace_dim, "sym_dim": sub.sym_dim},
    }
    out.emit_json(_stem("rep", rep), obj, f"{rep}: degree {rep.degree}, spin {rep.spin}, cell {cell}")
    return EXIT_OK


def cmd_chain(args, cfg: Config, out: Output) -> int:
    rep = _rep(args)
    ch = reduced_chain(rep) if args.reduced else chain(rep)
    system = assemble_system(ch, Fraction(args.mu0), _coeffs(cfg), massless=args.massless)
    obj = system.manifest()
    obj["links_in_chain_order"] = [r.to_json() for r in ch.links]
    out.emit_json(_stem("chain", rep), obj, " <-> ".join(str(r) for r in ch.links))
    return EXIT_OK


def cmd_lambda(args, cfg: Config, out: Output) -> int:
    rep = _rep(args)
    lm = build_lambda(rep, args.j, _coeffs(cfg), args.dual)
    meta = {"rep": rep.to_json(), "j": args.j, "dual": args.dual, "coefficient": lm.coeff.to_json()}
    stem = _stem("lambda", rep, args)
    if out.to_files and cfg.format == "matrixmarket":
        path = export.write_matrix_market(lm.matrix, Path(cfg.output_dir) / f"{stem}.mtx", meta)
        out.written.extend([path, export.sidecar_path(path)])
        out.say(f"{stem}: {lm.dim}x{lm.dim}, {lm.matrix.nnz} non-zeros")
    else:
        out.emit_json(stem, {"meta": meta, "matrix": lm.matrix.to_json()}, f"{stem}: {lm.matrix.nnz} non-zeros")
    return EXIT_OK


def cmd_charpoly(args, cfg: Config, out: Output) -> int:
    rep = _rep(args)
    poly = charpoly_exact(build_lambda(rep, args.j, _coeffs(cfg), args.dual))
    obj = {"rep": rep.to_json(), "j": args.j, "dual": args.dual, "coeffs": poly.to_json(), "text": str(poly)}
    out.emit_json(_stem("charpoly", rep, args), obj, str(poly))
    return EXIT_OK


def cmd_spectrum(args, cfg: Config, out: Output) -> int:
    rep = _rep(args)
    report = classify(build_lambda(rep, args.j, _coeffs(cfg), args.dual), tol=cfg.snap_tol)
    out.emit_json(
        _stem("spectrum", rep, args),
        report.to_json(),
        f"{report.classification.value}: {report.elementary_divisors()}",
    )
    return EXIT_OK


def cmd_census(args, cfg: Config, out: Output) -> int:
    rep = RepLabel(args.two_l, args.two_ldot)
    report = census(rep)
    out.emit_rows(
        _stem("census", rep),
        report.rows(),
        ("eig", "multiplicity"),
        report.to_json(),
        f"{rep}: {report.distinct_count} distinct eigenvalues, histogram {report.multiplicity_histogram}",
    )
    return EXIT_OK


def cmd_search(args, cfg: Config, out: Output) -> int:
    res = stability_search(args.ratio)
    out.emit_json("search", res.to_json(), f"{res.rep}: degree {res.degree}, cell {res.cell}")
    return EXIT_OK


HSF_COLUMNS = ("rho", "two_l0", "two_m", "two_n", "theta", "tau", "phi", "psi", "eps_m", "eps_n", "re", "im")


def cmd_hsf(args, cfg: Config, out: Output) -> int:
    p = HsfParams(
        args.rho, HalfInt(args.l0), HalfInt(args.m), HalfInt(args.n),
        args.theta, args.tau, args.phi, args.psi, args.eps_m, args.eps_n,
    )
    val = hyperspherical_m(p, cfg.hsf_tol)
    row = {
        "rho": repr(args.rho), "two_l0": args.l0, "two_m": args.m, "two_n": args.n,
        "theta": repr(args.theta), "tau": repr(args.tau), "phi": repr(args.phi), "psi": repr(args.psi),
        "eps_m": repr(args.eps_m), "eps_n": repr(args.eps_n),
        "re": repr(val.real), "im": repr(val.imag),
    }
    out.emit_rows("hsf", [row], HSF_COLUMNS, row, f"{val.real!r} {val.imag:+.17g}i")
    return EXIT_OK


def cmd_verify(args, cfg: Config, out: Output) -> int:
    results = run_all(args.suite)
    failed = [r for r in results if not r.ok]
    obj = {"checks": [r.to_json() for r in results], "failed": len(failed), "total": len(results)}
    summary = "\n".join(f"{'PASS' if r.ok else 'FAIL'} {r.suite}: {r.name}" for r in results)
    out.emit_json("verify", obj, summary)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_table(args, cfg: Config, out: Output) -> int:
    rows = matter_table(HalfInt(args.max_weight), Fraction(args.mu0))
    out.emit_rows("table", rows, MATTER_COLUMNS, {"rows": rows}, f"{len(rows)} nodes")
    return EXIT_OK


COMMANDS = {
    "rep": cmd_rep,
    "chain": cmd_chain,
    "lambda": cmd_lambda,
    "charpoly": cmd_charpoly,
    "spectrum": cmd_spectrum,
    "census": cmd_census,
    "search": cmd_search,
    "hsf": cmd_hsf,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stderr = sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        cfg = load_config(args)
        out = Output(cfg, stdout)
        return COMMANDS[args.command](args, cfg, out)
    except (
        ValueError,
        ArithmeticError,
        ExactArithmeticError,
        UnsupportedShapeError,
        NonGridEigenvalueError,
        SnapFailure,
        ConvergenceError,
        OSError,
    ) as exc:
        print(f"spinspec: error: {exc}", file=stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
