"""``leflab`` command line.

Exit codes: 0 property holds / success, 1 property fails, 2 parse error,
3 gin did not stabilize, 4 theorem violation (a reproducer file is written),
5 dimension guard.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import gmpy2

from . import __version__
from .arrangement import (
    Arrangement,
    analyze,
    derived_seed,
    parse_arrangement,
    random_corpus,
)
from .gin import DEFAULT_BOUND, DEFAULT_RETRIES, DEFAULT_SEED, GinError, is_saturated, regularity, rgin
from .groebner import Ideal, MonomialIdeal
from .hilbert import hilbert_function
from .lefschetz import (
    DimensionError,
    LefschetzInconsistency,
    TheoremViolation,
    aci_analyze,
    has_slp,
    has_wlp,
)
from .polyring import ParseError, Polynomial, format_monomial, parse_polynomial, parse_polynomials

SCHEMA = "leflab-report/1"

EXIT_HOLDS, EXIT_FAILS, EXIT_PARSE, EXIT_GIN, EXIT_THEOREM, EXIT_GUARD = range(6)


@dataclasses.dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    coefficient_bound: int = DEFAULT_BOUND
    max_retries: int = DEFAULT_RETRIES
    output_format: str = "text"
    cache_dir: Path | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.coefficient_bound <= 0 or self.max_retries <= 0 or self.jobs <= 0:
            raise ValueError("bound, retries and jobs must be positive")

    @property
    def gin_options(self):
        return {"bound": self.coefficient_bound, "max_retries": self.max_retries}

    def public(self):
        return {"seed": self.seed, "coefficient_bound": self.coefficient_bound,
                "max_retries": self.max_retries}


class CommandError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Polynomial):
        return str(obj)
    if isinstance(obj, MonomialIdeal):
        return [format_monomial(g) for g in obj.by_degree()]
    if isinstance(obj, type(gmpy2.mpq())) or isinstance(obj, type(gmpy2.mpz())):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, Path):
        return str(obj)
    return obj


def emit(cfg: RunConfig, command: str, result, text_lines, out=None):
    out = out or sys.stdout
    if cfg.output_format == "json":
        doc = {"schema": SCHEMA, "version": __version__, "command": command,
               "config": cfg.public(), "result": jsonable(result)}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def yes(flag):
    return "yes" if flag else "no"


def read_ideal(path: str, nvars: int | None) -> Ideal:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    polys, n = parse_polynomials(text, nvars)
    bad = next((p for p in polys if not p.is_homogeneous()), None)
    if bad is not None:
        raise ParseError(f"generator {bad} is not homogeneous", 1, 1)
    return Ideal(polys, n)


# --- gin --------------------------------------------------------------------------------


def cmd_gin(args, cfg: RunConfig) -> int:
    I = read_ideal(args.file, args.nvars)
    cert = rgin(I, cfg.seed, **cfg.gin_options)
    M = cert.result
    r = regularity(M)
    sat = is_saturated(I, cfg.seed, **cfg.gin_options)
    hf = [hilbert_function(M, d) for d in range(r + 3)]
    result = {"generators": M, "regularity": r, "saturated": sat, "hilbert_function": hf,
              "trials": cert.trials, "trials_agreeing": cert.trials_agreeing,
              "coefficient_bound": cert.coefficient_bound, "strongly_stable": cert.strongly_stable}
    lines = ["rgin: " + ", ".join(format_monomial(g) for g in M.by_degree()),
             f"regularity: {r}", f"saturated: {yes(sat)}",
             "HF: " + " ".join(f"{d}:{h}" for d, h in enumerate(hf)),
             f"trials: {cert.trials} (agreeing {cert.trials_agreeing}, bound {cert.coefficient_bound})"]
    emit(cfg, "gin", result, lines)
    return EXIT_HOLDS


# --- lefschetz --------------------------------------------------------------------------


def cmd_lefschetz(args, cfg: RunConfig) -> int:
    I = read_ideal(args.file, args.nvars)
    decide = has_wlp if args.property == "wlp" else has_slp
    route = "linear-algebra-oracle" if args.route == "oracle" else "gin-fast-path"
    report = decide(I, cfg.seed, route=route, cross_validate=args.cross_validate,
                    **cfg.gin_options)
    lines = [f"{report.property}: {'holds' if report.holds else 'fails'}",
             f"route: {report.route}", f"regularity: {report.reg}"]
    for f in report.failures:
        lines.append(f"  failure at (i={f.i}, s={f.s}): rank {f.rank} of "
                     f"{f.dim_source}->{f.dim_target}, {f.witness_kind} witness {f.witness}")
    if report.oracle_holds is not None:
        lines.append(f"oracle agrees: {yes(report.oracle_holds == report.holds)}")
    lines.extend(f"note: {n}" for n in report.notes)
    emit(cfg, "lefschetz", report, lines)
    return EXIT_HOLDS if report.holds else EXIT_FAILS


# --- arrangements -----------------------------------------------------------------------


def arrangement_key(A: Arrangement, cfg: RunConfig, seed: int) -> str:
    blob = json.dumps({"arrangement": A.to_text(), "seed": seed, "bound": cfg.coefficient_bound,
                       "retries": cfg.max_retries, "version": __version__}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def write_reproducer(A: Arrangement, seed: int, message: str, where: Path | None) -> Path:
    where = where or Path.cwd()
    where.mkdir(parents=True, exist_ok=True)
    digest = hashlib.sha256(A.to_text().encode()).hexdigest()[:12]
    path = where / f"leflab-reproducer-{digest}.txt"
    path.write_text(f"# {message}\n# seed {seed}\n{A.to_text()}")
    return path


def _analyze_job(job):
    A, seed, gin_options = job
    report = analyze(A, seed, strict=False, **gin_options)
    return jsonable(report)


def _report_lines(rep: dict):
    lines = [f"arrangement: {rep['name'] or ''} {''.join(f'({f})' for f in rep['forms'])}".rstrip(),
             f"d={rep['d']} nvars={rep['nvars']} essential={yes(rep['essential'])} rank={rep['rank']}",
             f"free: {yes(rep['free'])}" + (f" exponents {tuple(rep['exponents'])}" if rep['free'] else ""),
             f"D(A) generator degrees: {tuple(rep['derivation_pdegrees'])}, relations: "
             f"{tuple(rep['relation_degrees'])}",
             f"plus-one generated: {yes(rep['plus_one'])}"
             + (f" POexp {tuple(rep['po_exp'])} level {rep['level']}" if rep['plus_one'] else ""),
             "rgin(J): " + ", ".join(rep["gin_generators"]),
             f"gin staircase free: {yes(rep['gin_free'])} lambda {tuple(rep['lambdas'])}",
             f"p0: {rep['p0']}  conjecture: {'PASS' if rep['conjecture_holds'] else 'FAIL'}"
             + (f" (offender {rep['conjecture_offender']})" if rep['conjecture_offender'] else ""),
             f"WLP: {yes(rep['wlp'])}  SLP: {yes(rep['slp'])}"]
    if rep["wlp_failures"]:
        lines.append(f"WLP failures (i,s): {rep['wlp_failures']}")
    if rep["slp_failures"]:
        lines.append(f"SLP failures (i,s): {rep['slp_failures']}")
    checks = ", ".join(f"{k}={'ok' if v else 'VIOLATED'}" for k, v in rep["checks"].items()
                       if v is not None)
    lines.append(f"theorem checks: {checks}")
    return lines


def _violations(rep: dict):
    return [k for k, v in rep["checks"].items() if v is False]


def cmd_arr_analyze(args, cfg: RunConfig) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    A = parse_arrangement(text, name=None if args.file == "-" else Path(args.file).stem)
    rep = _analyze_job((A, cfg.seed, cfg.gin_options))
    bad = _violations(rep)
    if bad:
        path = write_reproducer(A, cfg.seed, "violated " + ", ".join(bad), cfg.cache_dir)
        raise CommandError(EXIT_THEOREM, f"theorem violation ({', '.join(bad)}); reproducer {path}")
    emit(cfg, "arr analyze", rep, _report_lines(rep))
    return EXIT_HOLDS


def _cache_get(cfg, key):
    if cfg.cache_dir is None:
        return None
    p = cfg.cache_dir / f"{key}.json"
    if p.exists():
        return json.loads(p.read_text())
    return None


def _cache_put(cfg, key, rep):
    if cfg.cache_dir is None:
        return
    cfg.cache_dir.mkdir(parents=True, exist_ok=True)
    tmp = cfg.cache_dir / f"{key}.json.tmp"
    tmp.write_text(json.dumps(rep, sort_keys=True))
    tmp.replace(cfg.cache_dir / f"{key}.json")


def scan(cfg: RunConfig, count: int, nvars: int, max_d: int, min_d: int | None = None):
    """Analyze a seeded random corpus; returns (reports, cache hits)."""
    corpus = random_corpus(count, nvars, max_d, cfg.seed, min_d)
    seeds = [derived_seed(cfg.seed, i) for i in range(count)]
    keys = [arrangement_key(A, cfg, s) for A, s in zip(corpus, seeds)]
    reports = [_cache_get(cfg, k) for k in keys]
    todo = [i for i, r in enumerate(reports) if r is None]
    jobs = [(corpus[i], seeds[i], cfg.gin_options) for i in todo]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            fresh = list(pool.map(_analyze_job, jobs))
    else:
        fresh = [_analyze_job(j) for j in jobs]
    for i, rep in zip(todo, fresh):
        reports[i] = rep
        _cache_put(cfg, keys[i], rep)
    return corpus, seeds, reports, count - len(todo)


def cmd_arr_scan(args, cfg: RunConfig) -> int:
    corpus, seeds, reports, hits = scan(cfg, args.count, args.nvars, args.max_d, args.min_d)
    for A, s, rep in zip(corpus, seeds, reports):
        bad = _violations(rep)
        if bad:
            path = write_reproducer(A, s, "violated " + ", ".join(bad), cfg.cache_dir)
            raise CommandError(EXIT_THEOREM,
                               f"theorem violation on {A.name} ({', '.join(bad)}); reproducer {path}")
    header = f"{'#':>3} {'d':>2} {'free':>4} {'+1':>3} {'WLP':>3} {'SLP':>3} {'conj':>4} {'p0':>3}  exponents"
    lines = [header]
    for i, rep in enumerate(reports):
        ex = rep["exponents"] if rep["free"] else rep["po_exp"]
        lines.append(f"{i:>3} {rep['d']:>2} {yes(rep['free']):>4} {yes(rep['plus_one']):>3} "
                     f"{yes(rep['wlp']):>3} {yes(rep['slp']):>3} "
                     f"{'PASS' if rep['conjecture_holds'] else 'FAIL':>4} {rep['p0']!s:>3}  "
                     f"{tuple(ex) if ex else '-'}")
    summary = {k: sum(1 for r in reports if r[k]) for k in ("free", "plus_one", "wlp", "slp",
                                                            "conjecture_holds")}
    lines.append("totals: " + ", ".join(f"{k} {v}/{len(reports)}" for k, v in summary.items()))
    emit(cfg, "arr scan", {"count": args.count, "nvars": args.nvars, "max_d": args.max_d,
                           "reports": reports, "totals": summary}, lines)
    return EXIT_HOLDS


# --- aci ----------------------------------------------------------------------------------


def cmd_aci(args, cfg: RunConfig) -> int:
    if args.file:
        text = Path(args.file).read_text()
        forms, n = parse_polynomials(text, 3)
    else:
        forms = [parse_polynomial(t, 3, line=k + 1) for k, t in enumerate(args.forms)]
    if len(forms) != 3:
        raise CommandError(EXIT_PARSE, f"expected three forms, got {len(forms)}")
    report = aci_analyze(*forms, seed=cfg.seed, **cfg.gin_options)
    lines = [f"degrees: {report.degrees}", f"m(I): {report.m}",
             f"deg F: {report.deg_f}  (d0+d1+d2-m-2 = {sum(report.degrees) - report.m - 2}, "
             f"{'verified' if report.identity_holds else 'does not hold'})",
             f"F(1): {report.f_at_one}", f"stability: {report.stability}",
             f"saturated: {yes(report.saturated)}",
             f"thresholds (injective i<={report.deg_f - 1}, surjective i>={report.deg_f}): "
             f"{'verified' if report.thresholds_verified else 'FAILED'}"
             + (f" (surjectivity fails at {report.surjective_failures})"
                if report.surjective_failures else ""),
             f"stability bounds: {'verified' if report.proposition_bounds_verified else 'FAILED'}",
             f"WLP: {yes(report.wlp)}"]
    if report.unstable_sharp_failure is not None:
        lines.append(f"first non-injective degree on I^sat/I: {report.unstable_sharp_failure}")
    emit(cfg, "aci", report, lines)
    return EXIT_HOLDS if report.wlp else EXIT_FAILS


# --- entry point --------------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they never clobber flags given earlier
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=dflt(None),
                        help="randomization seed (default $LEFLAB_SEED or 0xC0FFEE)")
    common.add_argument("--bound", type=int, default=dflt(DEFAULT_BOUND), help="coefficient bound B")
    common.add_argument("--retries", type=int, default=dflt(DEFAULT_RETRIES), help="max gin trials")
    common.add_argument("--jobs", type=int, default=dflt(1), help="parallel workers for scans")
    common.add_argument("--format", choices=["text", "json"], default=dflt("text"))
    common.add_argument("--cache-dir", type=Path, default=dflt(None))
    common.add_argument("--nvars", type=int, default=dflt(None), help="number of variables")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    p = argparse.ArgumentParser(prog="leflab", parents=[_common(suppress=False)],
                                description="Lefschetz properties via generic initial ideals")
    p.add_argument("--version", action="version", version=f"leflab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gin", parents=[common], help="generic initial ideal of an ideal file")
    g.add_argument("file")
    g.set_defaults(func=cmd_gin)

    lf = sub.add_parser("lefschetz", parents=[common], help="decide WLP/SLP of S/I")
    lf.add_argument("file")
    lf.add_argument("--property", choices=["wlp", "slp"], required=True)
    lf.add_argument("--route", choices=["fast", "oracle"], default="fast")
    lf.add_argument("--cross-validate", action="store_true")
    lf.set_defaults(func=cmd_lefschetz)

    arr = sub.add_parser("arr", parents=[common], help="hyperplane arrangements")
    arr_sub = arr.add_subparsers(dest="arr_command", required=True)
    an = arr_sub.add_parser("analyze", parents=[common])
    an.add_argument("file")
    an.set_defaults(func=cmd_arr_analyze)
    sc = arr_sub.add_parser("scan", parents=[common])
    sc.add_argument("--count", type=int, default=10)
    sc.add_argument("--max-d", type=int, default=6)
    sc.add_argument("--min-d", type=int, default=None)
    sc.set_defaults(func=cmd_arr_scan)

    ac = sub.add_parser("aci", parents=[common], help="dimension one almost complete intersection")
    ac.add_argument("forms", nargs="*", help="three forms in x,y,z")
    ac.add_argument("--file", default=None)
    ac.set_defaults(func=cmd_aci)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None:
        env = os.environ.get("LEFLAB_SEED")
        seed = int(env, 0) if env else DEFAULT_SEED
    try:
        cfg = RunConfig(seed, args.bound, args.retries, args.format, args.cache_dir, args.jobs)
    except ValueError as e:
        parser.error(str(e))
    if args.command == "arr" and args.arr_command == "scan" and args.nvars is None:
        args.nvars = 3
    try:
        return args.func(args, cfg)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GinError as e:
        print(f"gin failure: {e}", file=sys.stderr)
        return EXIT_GIN
    except DimensionError as e:
        print(f"dimension guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (TheoremViolation, LefschetzInconsistency) as e:
        path = Path(cfg.cache_dir or Path.cwd()) / "leflab-reproducer.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(f"# {e}\n# seed {cfg.seed}\n# argv {argv if argv is not None else sys.argv[1:]}\n")
        print(f"theorem violation: {e}; reproducer {path}", file=sys.stderr)
        return EXIT_THEOREM
    except CommandError as e:
        print(str(e), file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
