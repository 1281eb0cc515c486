"""Command line front end.

Subcommands:

    verify   run verification suites and report pass/fail
    sl2z     emit the two torus twist matrices on symmetric forms
    wilson   emit the Wilson loop operator of a loop word on SLF
    skein    emit the skein representation data of the torus
    export   write the multiplication table and basis data to files

All output is deterministic: reports carry a schema version and no
timestamps, matrices are exact (integer coefficient vectors over the
power basis of the cyclotomic field plus a denominator), and repeated
runs produce byte-identical files.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on usage errors.  Unknown suite names are rejected before any
computation starts.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .uq_algebra import algebra
from .suites import SUITES, SUITE_NAMES

SCHEMA = "uqsl2-report/1"

P_RANGE = (2, 5)


@dataclass(frozen=True)
class RunConfig:
    """Validated configuration of a verification run."""

    p: int
    suites: tuple = ()
    genus: int = 1
    export: str | None = None
    tol: float = 1e-9

    def __post_init__(self):
        if not P_RANGE[0] <= self.p <= P_RANGE[1]:
            raise ValueError(f"p must lie in {P_RANGE[0]}..{P_RANGE[1]}")
        if self.genus not in (1, 2):
            raise ValueError("genus must be 1 or 2")
        if not self.suites:
            raise ValueError("at least one suite is required")
        bad = [s for s in self.suites if s not in SUITE_NAMES]
        if bad:
            raise ValueError(f"unknown suites: {', '.join(bad)}")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")


def run(config: RunConfig):
    """Run the configured suites.  Returns (exit_code, report)."""
    alg = algebra(config.p)
    report = {"schema": SCHEMA, "p": config.p, "genus": config.genus,
              "suites": {}}
    failed = False
    for name in config.suites:
        result = SUITES[name](alg, config.tol)
        report["suites"][name] = result
        for check, ok in result["checks"].items():
            if not ok:
                failed = True
    return (1 if failed else 0), report


def _dump(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True, default=_json_default)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def _json_default(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"not serializable: {type(obj).__name__}")


# -- exports ---------------------------------------------------------------

def _cyc_str(c) -> str:
    """Deterministic plain-text form of an exact scalar, suitable for a
    CSV cell (the power-basis polynomial over a common denominator)."""
    return repr(c).replace(" ", "")


def export_gta_csv(p: int, path: str):
    """The full multiplication table of the symmetric-form basis.  The
    header row fixes the basis order; each data row holds the two
    factors followed by the exact coordinates of their product."""
    from .center_slf import gta_basis
    alg = algebra(p)
    gta = gta_basis(alg)
    table = gta.product_table()
    lines = ["left,right," + ",".join(gta.labels)]
    for i, li in enumerate(gta.labels):
        for j, lj in enumerate(gta.labels):
            cells = [_cyc_str(c) for c in table[i][j].coords]
            lines.append(f"{li},{lj}," + ",".join(cells))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def export_center_json(p: int, path: str):
    """The canonical central basis in PBW coordinates."""
    from .center_slf import center_basis
    alg = algebra(p)
    Z = center_basis(alg)
    data = {"schema": SCHEMA, "p": p,
            "pbw_basis": [list(mon) for mon in alg.basis],
            "elements": {lab: [c.to_json() for c in Z[lab].pbw_vector()]
                         for lab in Z.labels}}
    _dump(data, path)


def export_sl2z_json(p: int, path: str):
    """The torus twist matrices on symmetric forms, in the GTA basis."""
    _dump(_sl2z_payload(p), path)


def export_skein_json(p: int, path: str):
    """The skein representation of the torus and the intertwiner."""
    _dump(_skein_payload(p), path)


def export_tables(p: int, outdir: str):
    """Write all export files for one p into a directory; re-export is
    byte-identical.  Returns the list of paths written."""
    import os
    paths = []
    for fn, name in ((export_gta_csv, f"gta_table_p{p}.csv"),
                     (export_center_json, f"center_basis_p{p}.json"),
                     (export_sl2z_json, f"sl2z_p{p}.json"),
                     (export_skein_json, f"skein_p{p}.json")):
        path = os.path.join(outdir, name)
        fn(p, path)
        paths.append(path)
    return paths


# -- subcommand payloads ---------------------------------------------------

def _sl2z_payload(p: int) -> dict:
    from .center_slf import gta_basis
    from .mcg_sl2z import sl2z_relations, theta1, xi_value
    alg = algebra(p)
    rel = sl2z_relations(alg)
    return {"schema": SCHEMA, "p": p,
            "basis": list(gta_basis(alg).labels),
            "tau_a": theta1(alg, "a").matrix,
            "tau_b": theta1(alg, "b").matrix,
            "xi": xi_value(alg),
            "braid_exact": rel["braid_exact"],
            "st_cubed_scalar": rel["st_cubed_scalar"]}


def _skein_payload(p: int) -> dict:
    from .center_slf import gta_basis
    from .skein import iso_F, rho_torus, slf_skein_ops
    alg = algebra(p)
    wa, wb = slf_skein_ops(alg)
    iso = iso_F(alg)
    return {"schema": SCHEMA, "p": p,
            "skein_basis": [f"cl(f{k})" for k in range(p - 1)],
            "slf_basis": list(gta_basis(alg).labels),
            "rho_a": rho_torus(alg, "a"),
            "rho_b": rho_torus(alg, "b"),
            "w_a": wa, "w_b": wb,
            "intertwiner": iso["matrix"],
            "intertwiner_exact": iso["residual_a"] and iso["residual_b"]}


def _wilson_payload(p: int, genus: int, word: str) -> dict:
    from .center_slf import gta_basis
    from .handle_rep import restrict_to_slf
    from .loop_wilson import parse_loop, wilson_op
    alg = algebra(p)
    w = parse_loop(word, genus)
    mat = restrict_to_slf(wilson_op(alg, w))
    return {"schema": SCHEMA, "p": p, "genus": genus, "word": str(w),
            "basis": list(gta_basis(alg).labels), "matrix": mat}


# -- argument parsing ------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="uqsl2",
        description="exact verification of the restricted quantum group "
                    "tower: Hopf/ribbon structure, symmetric-form bases, "
                    "handle algebras, modular action and skein modules")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_p(sp):
        sp.add_argument("--p", type=int, required=True,
                        choices=range(P_RANGE[0], P_RANGE[1] + 1),
                        help="order parameter (root of unity exponent 2p)")

    sp = sub.add_parser("verify", help="run verification suites")
    add_p(sp)
    sp.add_argument("--suite", action="append", required=True,
                    choices=SUITE_NAMES, metavar="NAME",
                    help=f"suite to run, repeatable; one of "
                         f"{', '.join(SUITE_NAMES)}")
    sp.add_argument("--genus", type=int, default=1, choices=(1, 2))
    sp.add_argument("--export", metavar="PATH",
                    help="also write the JSON report to this path")

    sp = sub.add_parser("sl2z", help="emit the torus twist matrices")
    add_p(sp)
    sp.add_argument("--export", metavar="PATH")

    sp = sub.add_parser("wilson", help="emit a Wilson loop operator")
    add_p(sp)
    sp.add_argument("--word", required=True,
                    help='loop word, e.g. "b1^-1 a1"')
    sp.add_argument("--genus", type=int, default=1, choices=(1, 2))
    sp.add_argument("--export", metavar="PATH")

    sp = sub.add_parser("skein", help="emit the torus skein data")
    add_p(sp)
    sp.add_argument("--export", metavar="PATH")

    sp = sub.add_parser("export", help="write all tables to a directory")
    add_p(sp)
    sp.add_argument("--export", metavar="DIR", default=".",
                    help="output directory (default: current)")
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            config = RunConfig(p=args.p, suites=tuple(dict.fromkeys(args.suite)),
                               genus=args.genus, export=args.export)
            code, report = run(config)
            for name in config.suites:
                for check, ok in report["suites"][name]["checks"].items():
                    print(f"{'PASS' if ok else 'FAIL'}  {name}.{check}")
            if args.export:
                _dump(report, args.export)
            else:
                print(_dump(report))
            return code
        if args.command == "sl2z":
            payload = _sl2z_payload(args.p)
        elif args.command == "wilson":
            payload = _wilson_payload(args.p, args.genus, args.word)
        elif args.command == "skein":
            payload = _skein_payload(args.p)
        else:  # export
            paths = export_tables(args.p, args.export)
            for path in paths:
                print(path)
            return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.export:
        _dump(payload, args.export)
        print(args.export)
    else:
        print(_dump(payload))
    return 0


if __name__ == "__main__":
    sys.exit(main())
