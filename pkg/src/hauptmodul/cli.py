"""Command line: ``hauptmodul expand|run|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import identities as ids
from .forms import (
    EtaProduct,
    LevelError,
    classical_eisenstein,
    eisenstein_plus,
    kronecker_limit,
)
from .jst import JstError, Monomial, NonTermination, InsufficientTruncation, run_jst
from .serialize import (
    ResultCache,
    canonical_dumps,
    printed_formulas,
    result_to_json,
    result_to_latex,
    result_to_text,
    run_cached,
    write_atomic,
)
from .tables import GENUS_ZERO_LEVELS, TABLE1, TABLE2_WEIGHTS

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

DESK_LEVELS = (1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21, 22, 26, 30, 33, 34, 35, 39, 55, 66, 70, 78, 105, 110, 119)
LARGE_EQUATIONS = 250


class UsageError(Exception):
    pass


class GuardError(Exception):
    pass


@dataclass
class RunConfig:
    levels: list[int]
    variant: str = "jst3"
    trunc: int | None = None  # overrides kappa_N as the last matrix column
    fmt: str = "text"
    cache_dir: str | None = None
    use_cache: bool = True
    jobs: int = 1
    allow_large: bool = False
    out: str | None = None

    def validate(self) -> None:
        if self.variant not in ("jst2", "jst3"):
            raise UsageError(f"unknown variant {self.variant!r}")
        for N in self.levels:
            if N not in GENUS_ZERO_LEVELS:
                raise UsageError(f"level {N} is not a supported genus-zero level")
            if not self.allow_large:
                eqs = getattr(TABLE1[N], self.variant).equations
                if eqs > LARGE_EQUATIONS:
                    raise GuardError(
                        f"N={N} {self.variant} needs {eqs} equations (> {LARGE_EQUATIONS}); pass --allow-large"
                    )
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


# -- expand -------------------------------------------------------------------


def _parse_eta(spec: str) -> EtaProduct:
    """'1:24,2:-24' -> eta(z)^24 eta(2z)^-24."""
    try:
        factors = tuple(tuple(int(x) for x in part.split(":")) for part in spec.split(","))
    except ValueError:
        raise UsageError(f"bad eta spec {spec!r}; expected v:e[,v:e...]") from None
    if any(len(f) != 2 for f in factors):
        raise UsageError(f"bad eta spec {spec!r}; expected v:e[,v:e...]")
    return EtaProduct(factors)


def cmd_expand(args) -> tuple[int, str]:
    t = args.trunc
    obj = args.object
    p = args.params
    try:
        if obj == "eisenstein":
            _need(p, 1, "eisenstein K")
            s = classical_eisenstein(int(p[0]), t)
        elif obj == "eisenstein-plus":
            _need(p, 2, "eisenstein-plus N K")
            s = eisenstein_plus(int(p[0]), int(p[1]), t)
        elif obj == "kronecker":
            _need(p, 1, "kronecker N")
            s = kronecker_limit(int(p[0]), t)
        elif obj == "eta-product":
            _need(p, 1, "eta-product v:e[,v:e...]")
            f = ids.eta_frac(_parse_eta(p[0]), t)
            return EXIT_OK, _frac_json(f, t)
        elif obj == "theta":
            _need(p, 3, "theta A B C")
            spec = ids.ThetaSpec(Fraction(p[0]), Fraction(p[1]), Fraction(p[2]), args.parity)
            return EXIT_OK, _frac_json(ids.theta_series(spec, t), t)
        else:  # argparse restricts choices
            raise UsageError(f"unknown object {obj}")
    except (LevelError, ValueError) as e:
        raise UsageError(str(e)) from None
    return EXIT_OK, json.dumps(s.to_json())


def _need(p, n, usage):
    if len(p) != n:
        raise UsageError(f"usage: expand {usage}")


def _frac_json(f: ids.FracSeries, t: int) -> str:
    if f.is_integral():
        return json.dumps(f.to_qseries().truncate(t).to_json())
    doc = f.truncate(t).series.to_json()
    doc["denominator"] = f.d  # exponents are in units of q^(1/denominator)
    return json.dumps(doc)


# -- run ----------------------------------------------------------------------


def _run_one(N: int, cfg: RunConfig):
    cache = ResultCache(cfg.cache_dir) if cfg.use_cache else None
    return run_cached(N, cfg.variant, cfg.trunc, cache)


def cmd_run(cfg: RunConfig) -> tuple[int, str]:
    cfg.validate()
    if cfg.jobs > 1 and len(cfg.levels) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_one, cfg.levels, [cfg] * len(cfg.levels)))
    else:
        results = [_run_one(N, cfg) for N in cfg.levels]
    if cfg.out:
        out = Path(cfg.out)
        for r in results:
            write_atomic(out / f"N{r.level}-{r.variant}.json", canonical_dumps(result_to_json(r)))
            if cfg.fmt == "latex":
                write_atomic(out / f"N{r.level}-{r.variant}.tex", result_to_latex(r))
    if cfg.fmt == "json":
        docs = [result_to_json(r) for r in results]
        return EXIT_OK, canonical_dumps(docs[0] if len(docs) == 1 else {"results": docs}).rstrip("\n")
    if cfg.fmt == "latex":
        return EXIT_OK, "\n".join(result_to_latex(r) for r in results).rstrip("\n")
    lines = [f"{'N':>4} {'M':>3} {'eqs':>6} {'pole':>5}"]
    lines += [f"{r.level:>4} {r.M:>3} {r.equations:>6} {r.pole:>5}" for r in results]
    if len(results) == 1:
        lines.append("")
        lines.append(result_to_text(results[0]).rstrip("\n"))
    return EXIT_OK, "\n".join(lines)


# -- verify -------------------------------------------------------------------


def level_report(N: int) -> ids.Report:
    rep = ids.Report(f"level:{N}")
    printed = printed_formulas()
    for variant in ("jst3", "jst2"):
        if variant == "jst2" and str(N) not in printed["jst2"]:
            continue
        try:
            r = run_jst(N, variant)  # raises on a failed closure check
        except JstError as e:
            rep.add(f"{variant} run and closure", False, error=str(e))
            continue
        row = getattr(TABLE1[N], variant)
        rep.add(f"{variant} (M, eqs, pole)", (r.M, r.equations, r.pole) == tuple(row), got=[r.M, r.equations, r.pole])
        rep.add(f"{variant} identities reproduce their targets", True, through=r.kappa)
        rep.add(
            f"{variant} weighted homogeneity",
            variant == "jst2" or (r.hauptmodul.is_homogeneous() and r.kronecker_power.is_homogeneous()),
        )
        if variant == "jst3":
            gw, t2 = r.generator_weights, TABLE2_WEIGHTS[N]
            rep.add("generator weights within listed set", set(gw) <= set(t2) and max(gw) == max(t2), weights=gw)
        for kind, terms in printed[variant].get(str(N), {}).items():
            ident = r.hauptmodul if kind == "hauptmodul-numerator" else r.kronecker_power
            want = {Monomial.from_json(t["monomial"]): Fraction(t["coeff"]) for t in terms}
            diff = sorted(str(m) for m in set(want) | set(ident.coefficients) if want.get(m) != ident.coefficients.get(m))
            rep.add(f"{variant} {kind} matches printed coefficients", not diff, terms=len(want), differing=diff[:5])
    return rep


def fricke_report() -> ids.Report:
    rep = ids.Report("fricke")
    for N in (5, 6, 17):
        res = ids.fricke_residual(N, 1j, 200)
        rep.add(f"E2,{N}(-1/(Nz)) = mu(N) N z^2 E2,{N}(z) at z=i", res < 1e-8, residual=f"{res:.3e}")
    return rep


def run_suite(name: str) -> list[ids.Report]:
    if name == "classical":
        return [ids.classical_suite(50)]
    if name.startswith("level:"):
        try:
            N = int(name.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad level in {name!r}") from None
        if N not in GENUS_ZERO_LEVELS:
            raise UsageError(f"level {N} is not a supported genus-zero level")
        return [level_report(N)]
    if name == "table3" or name.startswith("table3:"):
        levels = None
        if ":" in name:
            levels = [int(x) for x in name.split(":", 1)[1].split(",")]
            bad = [N for N in levels if N not in ids.TABLE3]
            if bad:
                raise UsageError(f"no direct Table 3 formula for {bad}")
        return [ids.table3_report(levels)]
    if name == "dimensions":
        return [ids.dimension_report(24)]
    if name == "divisor-sums":
        return [ids.divisor_sum_identity_check(200)]
    if name == "fricke":
        return [fricke_report()]
    if name == "all":
        out = []
        for s in ("classical", "dimensions", "divisor-sums", "fricke", "level:2", "level:3", "level:5", "level:17", "table3"):
            out += run_suite(s)
        return out
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(suite: str, fmt: str) -> tuple[int, str]:
    reports = run_suite(suite)
    ok = all(r.ok for r in reports)
    if fmt == "json":
        text = json.dumps({"ok": ok, "reports": [r.to_json() for r in reports]}, indent=1, default=str)
    else:
        text = "\n".join(r.text() for r in reports) + f"\n{'ALL PASS' if ok else 'FAILURES'}"
    return (EXIT_OK if ok else EXIT_FAIL), text


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hauptmodul", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("expand", help="print an exact q-expansion as JSON")
    ex.add_argument("object", choices=["eisenstein", "eisenstein-plus", "eta-product", "kronecker", "theta"])
    ex.add_argument("params", nargs="*")
    ex.add_argument("--trunc", type=int, default=10)
    ex.add_argument("--parity", choices=ids.PARITIES, default="all")

    rn = sub.add_parser("run", help="run JST2/JST3 and print the Table 1 row")
    g = rn.add_mutually_exclusive_group(required=True)
    g.add_argument("--level", type=int, action="append")
    g.add_argument("--all", action="store_true", help="the desk-scale level set")
    rn.add_argument("--variant", choices=["jst2", "jst3"], default="jst3")
    rn.add_argument("--allow-large", action="store_true")
    rn.add_argument("--format", choices=["text", "json", "latex"], default="text")
    rn.add_argument("--trunc", type=int, help="last q-exponent used as a matrix column (default kappa_N)")
    rn.add_argument("--cache-dir")
    rn.add_argument("--no-cache", action="store_true")
    rn.add_argument("--jobs", type=int, default=1)
    rn.add_argument("--out", help="directory for formula files")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", help="classical | level:N | table3[:N,...] | dimensions | divisor-sums | fricke | all")
    vf.add_argument("--format", choices=["text", "json"], default="text")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "expand":
            code, text = cmd_expand(args)
        elif args.command == "run":
            cfg = RunConfig(
                levels=list(DESK_LEVELS) if args.all else args.level,
                variant=args.variant,
                trunc=args.trunc,
                fmt=args.format,
                cache_dir=args.cache_dir,
                use_cache=not args.no_cache,
                jobs=args.jobs,
                allow_large=args.allow_large,
                out=args.out,
            )
            code, text = cmd_run(cfg)
        else:
            code, text = cmd_verify(args.suite, args.format)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardError, NonTermination, InsufficientTruncation) as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except JstError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
