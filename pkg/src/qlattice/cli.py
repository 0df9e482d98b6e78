"""Command-line front end: ``qlattice verify`` runs check suites, ``qlattice dump`` writes matrices."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .kernels import BACKEND
from .report import CheckReport

SUITES = (
    "qcomb", "hopf", "ribbon", "integral", "factorizability",
    "schroedinger-triangularity", "schroedinger-integrality",
    "hkl-integrality", "hkl-equivariance", "mcg-relations", "appendix", "grading",
)

# size limits that keep large-r runs bounded; skipped work is reported as a warning
HKL_MAX_DIM = 729
GRADING_MAX_DIM = 15625
QG_MAX_R = {"hopf": 5, "ribbon": 7, "integral": 7, "factorizability": 11}


@dataclass
class SuiteConfig:
    r: int
    genus: int = 1
    suites: tuple = SUITES
    ranges: dict = field(default_factory=dict)
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        if not _is_prime(self.r) or self.r < 3:
            raise ValueError(f"r must be an odd prime, got {self.r}")
        if self.genus < 1:
            raise ValueError("genus must be at least 1")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"unknown suite(s): {', '.join(bad)}")


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


# ---------------------------------------------------------------------------
# Suites


def _skip(suite: str, check: str, params: dict, why: str) -> CheckReport:
    return CheckReport.warned(suite, check, params, detail={"skipped": why})


def _qg_suite(name, runner):
    def run(r, genus, ranges):
        from .arith import context

        if r > QG_MAX_R[name]:
            return [_skip(name, "all", {"r": r}, f"quantum group suite limited to r <= {QG_MAX_R[name]}")]
        return runner()(context(r))
    return run


def _axioms(fn_name):
    def load():
        from . import axioms
        return getattr(axioms, fn_name)
    return load


def _qcomb(r, genus, ranges):
    from .appendix import check_binomial_inversion, check_bracket_units, check_inversion_symmetry, check_pascal, default_ranges
    from .arith import context

    n = {**default_ranges(r), **ranges}["pascal"]
    ctx = context(r)
    return [check_pascal(n), check_inversion_symmetry(n), check_binomial_inversion(ctx), check_bracket_units(ctx)]


def _triangularity(r, genus, ranges):
    from .arith import context
    from .schroedinger import run_triangularity_suite

    return [rep for g in range(1, genus + 1) for rep in run_triangularity_suite(context(r), g)]


def _schroedinger_integrality(r, genus, ranges):
    from .arith import context
    from .mcg import generators
    from .schroedinger import check_basis_consistency, run_integrality_suite

    ctx = context(r)
    out = []
    for g in range(1, genus + 1):
        out += run_integrality_suite(ctx, g)
        out += [check_basis_consistency(gen, g, ctx) for gen in generators(g)]
    return out


def _hkl_genera(r, genus, suite, check, limit=HKL_MAX_DIM):
    """Genera small enough for the HKL side, plus skip reports for the rest."""
    ok, skipped = [], []
    for g in range(1, genus + 1):
        dim = r ** (3 * g)
        if dim <= limit:
            ok.append(g)
        else:
            skipped.append(_skip(suite, check, {"r": r, "g": g},
                                 f"dimension {dim} exceeds the limit {limit}"))
    return ok, skipped


def _hkl_integrality(r, genus, ranges):
    from .arith import context
    from .hkl import check_hkl_integrality
    from .mcg import generators

    ctx = context(r)
    gs, out = _hkl_genera(r, genus, "hkl-integrality", "integrality")
    for g in gs:
        for gen in generators(g):
            out.append(check_hkl_integrality(gen, g, ctx))
            out.append(check_hkl_integrality(gen.inverse(), g, ctx))
    return out


def _hkl_equivariance(r, genus, ranges):
    from .arith import context
    from .hkl import check_adjoint_equivariance
    from .mcg import generators

    ctx = context(r)
    gs, out = _hkl_genera(r, genus, "hkl-equivariance", "adjoint_equivariance")
    for g in gs:
        out += [check_adjoint_equivariance(gen, g, ctx) for gen in generators(g)]
    return out


def _mcg_relations(r, genus, ranges):
    from .arith import context
    from .hkl import check_mcg_relations_hkl
    from .schroedinger import check_mcg_relations_psi

    ctx = context(r)
    out = [check_mcg_relations_psi(g, ctx) for g in range(1, genus + 1)]
    gs, skipped = _hkl_genera(r, genus, "mcg-relations", "hkl_relations")
    return out + [check_mcg_relations_hkl(g, ctx) for g in gs] + skipped


def _appendix(r, genus, ranges):
    from .appendix import run_appendix_suite
    from .schroedinger import check_floor_inequalities

    return run_appendix_suite(r, ranges) + [check_floor_inequalities(r)]


def _grading(r, genus, ranges):
    from .arith import context
    from .hkl import check_idempotent_grading, check_phi_lattice

    ctx = context(r)
    gs, out = _hkl_genera(r, genus, "grading", "phi", GRADING_MAX_DIM)
    for g in gs:
        out += [check_idempotent_grading(g, ctx), check_phi_lattice(g, ctx)]
    return out


RUNNERS = {
    "qcomb": _qcomb,
    "hopf": _qg_suite("hopf", _axioms("run_hopf_suite")),
    "ribbon": _qg_suite("ribbon", _axioms("run_ribbon_suite")),
    "integral": _qg_suite("integral", _axioms("run_integral_suite")),
    "factorizability": _qg_suite("factorizability", _axioms("run_factorizability_suite")),
    "schroedinger-triangularity": _triangularity,
    "schroedinger-integrality": _schroedinger_integrality,
    "hkl-integrality": _hkl_integrality,
    "hkl-equivariance": _hkl_equivariance,
    "mcg-relations": _mcg_relations,
    "appendix": _appendix,
    "grading": _grading,
}


def _run_one(name: str, r: int, genus: int, ranges: dict) -> list:
    return [rep.to_dict() for rep in RUNNERS[name](r, genus, ranges)]


def run(config: SuiteConfig) -> tuple:
    """Run the selected suites; return (exit code, report document)."""
    args = [(s, config.r, config.genus, dict(config.ranges)) for s in config.suites]
    if config.workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(_run_one, *zip(*args)))
    else:
        chunks = [_run_one(*a) for a in args]
    reports = sorted((CheckReport.from_dict(d) for chunk in chunks for d in chunk),
                     key=CheckReport.sort_key)
    counts = {s: sum(rep.status == s for rep in reports) for s in ("pass", "fail", "warn")}
    code = 1 if counts["fail"] else 0
    doc = {
        "tool": "qlattice",
        "version": __version__,
        "backend": BACKEND,
        "config": {"r": config.r, "genus": config.genus, "suites": list(config.suites),
                   "ranges": config.ranges},
        "summary": {**counts, "status": "fail" if code else "pass"},
        "reports": [rep.to_dict() for rep in reports],
    }
    return code, doc


def load_report(path_or_text) -> tuple:
    """Re-parse a report document; returns (document, list of CheckReport)."""
    text = Path(path_or_text).read_text() if isinstance(path_or_text, Path) else path_or_text
    doc = json.loads(text)
    return doc, [CheckReport.from_dict(d) for d in doc["reports"]]


# ---------------------------------------------------------------------------
# Argument parsing


def _parse_range(text: str) -> tuple:
    from .appendix import default_ranges

    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected FAMILY=N, got {text!r}")
    try:
        n = int(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range bound must be an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("range bound must be non-negative")
    known = default_ranges(3)
    keys = [key] if key in known else [k for k in known if k.startswith(key + "_")]
    if not keys:
        raise argparse.ArgumentTypeError(f"unknown range family {key!r}; known: {', '.join(known)}")
    return tuple((k, n) for k in keys)


def _parse_dump(text: str) -> tuple:
    from .dump import REPS

    parts = text.split(":")
    if len(parts) != 3 or parts[0] not in REPS:
        raise argparse.ArgumentTypeError(f"expected REP:GEN:BASIS with REP in {', '.join(REPS)}, got {text!r}")
    return tuple(parts)


def _prime(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if r < 3 or not _is_prime(r):
        raise argparse.ArgumentTypeError(f"r must be an odd prime, got {r}")
    return r


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlattice", description=__doc__)
    p.add_argument("--version", action="version", version=f"qlattice {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=_prime, required=True, help="odd prime order of zeta")
    common.add_argument("--genus", type=_positive, default=1)
    common.add_argument("--out", help="output path (default: standard output)")

    v = sub.add_parser("verify", parents=[common], help="run verification suites and write a JSON report")
    v.add_argument("--suite", action="append", choices=SUITES + ("all",), default=None,
                   help="suite to run; repeatable; default all")
    v.add_argument("--range", action="append", type=_parse_range, default=[], metavar="FAMILY=N",
                   help="override a parameter bound, e.g. A=10 or C_div_m=14")
    v.add_argument("--workers", type=_positive, default=1, help="suites run in parallel")
    v.add_argument("--dump", action="append", type=_parse_dump, default=[], metavar="REP:GEN:BASIS",
                   help="also write a matrix dump next to the report")

    d = sub.add_parser("dump", parents=[common], help="write one exact matrix")
    d.add_argument("selection", type=_parse_dump, metavar="REP:GEN:BASIS",
                   help="e.g. psi:tau_alpha1:v, heisenberg:beta1:v, hkl:tau_gamma1^-1:E1F")
    return p


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump_doc(selection, r, genus):
    from .dump import build_matrix, dump_matrix

    rep, gen, basis = selection
    return dump_matrix(build_matrix(rep, gen, basis, r, genus), rep, gen, basis, r, genus)


def _dump_name(selection, r, genus) -> str:
    rep, gen, basis = selection
    safe = gen.replace("^", "").replace(" ", "_").replace("*", "_")
    return f"dump_{rep}_{safe}_{basis}_r{r}_g{genus}.json"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dump":
            doc = _dump_doc(args.selection, args.r, args.genus)
            _write(json.dumps(doc, indent=1) + "\n", args.out)
            return 0

        suites = args.suite or ["all"]
        suites = SUITES if "all" in suites else tuple(dict.fromkeys(suites))
        ranges = dict(kv for group in args.range for kv in group)
        config = SuiteConfig(args.r, args.genus, suites, ranges, args.out, args.workers)
        dumps = [(selection, _dump_doc(selection, args.r, args.genus)) for selection in args.dump]
    except (ValueError, IndexError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qlattice: error: {exc}", file=sys.stderr)
        return 2

    code, doc = run(config)
    _write(json.dumps(doc, indent=1, default=str) + "\n", config.out)
    folder = Path(config.out).parent if config.out else Path(".")
    for selection, ddoc in dumps:
        (folder / _dump_name(selection, args.r, args.genus)).write_text(json.dumps(ddoc, indent=1) + "\n")
    s = doc["summary"]
    print(f"qlattice: r={config.r} genus={config.genus}: {s['pass']} pass, {s['warn']} warn, "
          f"{s['fail']} fail", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
