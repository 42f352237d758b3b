"""Command-line entry point: decompose, verify, semisimple, tables."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import bimodule as bm
from . import grothendieck as gr
from . import semisimple as ss
from .errors import CycsoergelError, InvalidParameter, Report, VerificationFailure

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_IO = 0, 1, 2, 3

SUITES = ("presentation", "soergel", "ses", "hom", "tensor", "categorification", "umodule", "spectral")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    d: int
    fmt: str = "text"
    degree_bound: int | None = None
    precision: int | None = None
    jobs: int = 1
    out: str | None = None

    def __post_init__(self):
        if self.d < 2:
            raise UsageError(f"--d must be >= 2, got {self.d}")
        if self.degree_bound is not None and (self.degree_bound <= 0 or self.degree_bound % 2):
            raise UsageError(f"--degree-bound must be even and positive, got {self.degree_bound}")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


# verification tasks -------------------------------------------------------
# Each task is a picklable (suite, d, arg, bound) tuple run by _run_task.

def _tasks(suite: str, cfg: RunConfig) -> list[tuple]:
    d, bound = cfg.d, cfg.degree_bound
    if suite == "presentation":
        return [("presentation", d, None, None), ("agree", d, None, None), ("hecke", d, None, None)]
    if suite == "soergel":
        return [("soergel", d, i, bound) for i in range(1, d - 1)]
    if suite == "ses":
        return [("ses", d, i, bound) for i in range(1, d)]
    if suite == "hom":
        return [("hom", d, k, bound) for k in range(d * (d - 1) + 1)]
    if suite == "tensor":
        return [("tensor", d, k, None) for k in range(d * (d - 1) + 1)]
    if suite == "categorification":
        return [("categorification", d, None, None)]
    if suite == "umodule":
        return [("umodule", d, None, None)]
    if suite == "spectral":
        return [("spectral", d, m, None) for m in range(d)]
    raise UsageError(f"unknown suite {suite!r}")


def _hom_report(d: int, k: int, bound: int | None):
    objs = bm.enumerate_indecomposables(d)
    a = objs[k]
    bound = 4 * d if bound is None else bound
    rep = Report(f"hom d={d} A={a}")
    for b in objs:
        desc = bm.hom_describe(a, b)
        rep.record(f"B={b}: rank {desc.rank}", desc.dims(bound) == bm.hom_oracle(a, b, bound), str(b))
    return rep


def _tensor_report(d: int, k: int):
    objs = bm.enumerate_indecomposables(d)
    a = objs[k]
    rep = Report(f"tensor d={d} a={a}")
    for b in objs:
        dl = bm.tensor_decompose(a, b)
        rep.record(f"b={b}", bm.decomposition_rank(dl) == bm.tensor_rank_oracle(a, b), str(dl))
    return rep


def _spectral_report(d: int, m: int):
    rep = ss.verify_block_against_ring(d, m)
    rep.record("closed-form characteristic polynomial", ss.charpoly_expand(ss.eigen_block(d, m)) == ss.char_poly_block(d, m))
    rep.record("Q_(d-1)(lambda, eta) has simple roots", ss.distinct_roots_check(d - 1, d, m))
    return rep


def _run_task(task: tuple) -> tuple[str, int, str | None]:
    kind, d, arg, bound = task
    try:
        if kind == "presentation":
            rep = gr.verify_binomial_claims(d)
        elif kind == "agree":
            rep = gr.verify_presentations_agree(d)
        elif kind == "hecke":
            rep = gr.hecke_annihilation_check(d)
        elif kind == "soergel":
            rep = bm.verify_soergel_splitting(d, arg, bound)
        elif kind == "ses":
            rep = bm.verify_ses(d, arg, bound)
        elif kind == "hom":
            rep = _hom_report(d, arg, bound)
        elif kind == "tensor":
            rep = _tensor_report(d, arg)
        elif kind == "categorification":
            rep = gr.categorification_check(d)
        elif kind == "umodule":
            rep = gr.verify_u_module(d)
        else:
            rep = _spectral_report(d, arg)
    except VerificationFailure as exc:
        return (f"{kind} d={d} arg={arg}", 0, f"{exc} witness={exc.witness}")
    return (rep.name, len(rep.checks), None)


def cmd_verify(cfg: RunConfig, suite: str, out) -> int:
    suites = SUITES if suite == "all" else (suite,)
    tasks = [t for s in suites for t in _tasks(s, cfg)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    failed = None
    for name, n, err in results:
        if err is None:
            print(f"PASS {name} ({n} checks)", file=out)
        else:
            print(f"FAIL {err}", file=out)
            failed = failed or err
    if failed:
        print(f"first counterexample: {failed}", file=out)
        return EXIT_FAIL
    print(f"all {len(results)} reports passed", file=out)
    return EXIT_OK


# other commands -------------------------------------------------------------

def cmd_decompose(cfg: RunConfig, a_text: str, b_text: str, check: bool, out) -> int:
    try:
        a, b = bm.parse_indec(a_text, cfg.d), bm.parse_indec(b_text, cfg.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    dl = bm.tensor_decompose(a, b)
    ok = True
    if check:
        lhs, rhs = bm.decomposition_rank(dl), bm.tensor_rank_oracle(a, b)
        ok = lhs == rhs
    if cfg.fmt == "json":
        payload = {"a": str(a), "b": str(b), "decomposition": dl.to_json()}
        if check:
            payload["rank"] = str(lhs)
            payload["oracle_rank"] = str(rhs)
            payload["agree"] = ok
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(str(dl), file=out)
        if check:
            print(f"rank {lhs} | oracle {rhs} | {'agree' if ok else 'MISMATCH'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(s)
    except ValueError as exc:
        raise UsageError(f"malformed complex number {text!r}") from exc


def parse_grid(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    try:
        a, b, h = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"malformed grid {text!r}") from exc
    if h <= 0 or b < a:
        raise UsageError(f"empty grid {text!r}")
    return a, b, h


def cmd_semisimple(cfg: RunConfig, v: str | None, grid: str | None, mode: str, out) -> int:
    if (v is None) == (grid is None):
        raise UsageError("give exactly one of --v and --v-grid")
    if v is not None:
        value = parse_complex(v)
        if value == 0:
            raise UsageError("v must be nonzero")
        rep = ss.semisimple_check(cfg.d, value, precision=cfg.precision)
        if cfg.fmt == "json":
            print(json.dumps(rep.to_json(), indent=2), file=out)
        else:
            print(f"d={rep.d} v={rep.v} margin={rep.margin:.3e} verdict: {rep.verdict}", file=out)
            for b in rep.blocks:
                vals = ", ".join(f"{z.real:.6f}{z.imag:+.6f}i" for z in b.eigenvalues)
                print(f"  eta=zeta^{b.eta_exp} dim={b.dim} distinct={b.distinct}: {vals}", file=out)
        return EXIT_OK
    a, b, h = parse_grid(grid)
    if mode == "real" and a <= 0:
        raise UsageError("real grids must stay in v > 0")
    points = ss.sweep(cfg.d, a, b, h, mode)
    bands = ss.flagged_bands(points)
    if cfg.fmt == "json":
        payload = {
            "d": cfg.d,
            "mode": mode,
            "step": h,
            "points": [ss.grid_point_json(p) for p in points],
            "bands": [list(x) for x in bands],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        for p in points:
            flag = "  <- criterion violated nearby" if p.flagged else ""
            print(f"{p.param:.6g}\tmargin={p.margin:.4e}{flag}", file=out)
        print(f"{len(bands)} flagged band(s): " + ", ".join(f"[{x:.6g}, {y:.6g}]" for x, y in bands), file=out)
    return EXIT_OK


def _tables(d: int) -> dict[str, tuple[list[str], list[list[str]]]]:
    """name -> (header, rows), every cell a string."""
    basis = gr.sigma_basis(d)
    labels = [gr.basis_label(b) for b in basis]
    consts = gr.structure_constants(d)
    products = []
    for x in basis:
        for y in basis:
            prod = consts[(x, y)]
            products.append([gr.basis_label(x), gr.basis_label(y)] + [str(prod.coeffs.get(b, 0)) for b in basis])
    objs = bm.enumerate_indecomposables(d)
    census = [[str(k), str(a), str(a.start), str(a.length), str(bm.graded_rank(a))] for k, a in enumerate(objs)]
    homs = [[str(a)] + [str(bm.hom_describe(a, b).rank) for b in objs] for a in objs]
    hecke = [[f"a_{k}", str(c)] for k, c in enumerate(gr.hecke_quotient_poly(d))]
    return {
        "products": (["left", "right"] + labels, products),
        "census": (["index", "object", "start", "len", "graded_rank"], census),
        "hom_ranks": (["A\\B"] + [str(b) for b in objs], homs),
        "hecke": (["coefficient", "value"], hecke),
    }


def _sparse_products(d: int) -> list[dict]:
    consts = gr.structure_constants(d)
    basis = gr.sigma_basis(d)
    return [
        {"left": gr.basis_label(x), "right": gr.basis_label(y), "product": consts[(x, y)].to_json()}
        for x in basis for y in basis
    ]


def _render(fmt: str, header: list[str], rows: list[list[str]]) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(header)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header] + rows]
    return "\n".join(lines) + "\n"


def cmd_tables(cfg: RunConfig, out) -> int:
    outdir = Path(cfg.out or ".")
    ext = {"csv": "csv", "json": "json", "text": "txt"}[cfg.fmt]
    tables = _tables(cfg.d)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        for name, (header, rows) in tables.items():
            path = outdir / f"{name}_d{cfg.d}.{ext}"
            if cfg.fmt == "json" and name == "products":
                text = json.dumps(_sparse_products(cfg.d), indent=2) + "\n"
            else:
                text = _render(cfg.fmt, header, rows)
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path} ({len(rows)} rows)", file=out)
    except OSError as exc:
        print(f"error: cannot write tables: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cycsoergel", description="Bimodules and Grothendieck rings for cyclic reflection groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--d", type=int, required=True, help="order of the cyclic group")
        sp.add_argument("--format", choices=formats, default=formats[0])

    sp = sub.add_parser("decompose", help="decompose a tensor product of two shifted indecomposables")
    common(sp)
    sp.add_argument("a", help='object literal, e.g. "s[0..1]{1}", "e", "W{-2}"')
    sp.add_argument("b")
    sp.add_argument("--check", action="store_true", help="compare graded ranks with the quotient-ring oracle")

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("semisimple", help="semisimplicity criterion and spectra at v")
    common(sp)
    sp.add_argument("--v", default=None, help='complex value, e.g. "2", "0.5+0.8660254i"')
    sp.add_argument("--v-grid", default=None, help="start:stop:step")
    sp.add_argument("--grid-mode", choices=("angle", "real"), default="angle",
                    help="angle: v = exp(i*theta) over the grid; real: v over the grid")
    sp.add_argument("--precision", type=int, default=None, help="decimal digits for eigenvalues (mpmath)")

    sp = sub.add_parser("tables", help="export structure constants, census, Hom ranks, Hecke coefficients")
    common(sp, ("csv", "json", "text"))
    sp.add_argument("--out", default=".")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            d=args.d,
            fmt=args.format,
            degree_bound=getattr(args, "degree_bound", None),
            precision=getattr(args, "precision", None),
            jobs=getattr(args, "jobs", 1),
            out=getattr(args, "out", None),
        )
        if args.command == "decompose":
            return cmd_decompose(cfg, args.a, args.b, args.check, out)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite, out)
        if args.command == "semisimple":
            return cmd_semisimple(cfg, args.v, args.v_grid, args.grid_mode, out)
        return cmd_tables(cfg, out)
    except (UsageError, InvalidParameter) as exc:
        print(f"cycsoergel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycsoergelError as exc:
        print(f"cycsoergel: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
