"""JSON and LaTeX renderings of JST results, and an on-disk result cache."""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .exactnum import rational_str
from .forms import level_constants
from .jst import FormulaIdentity, JstResult, Monomial, ONE, run_jst
from .qseries import QSeries

CACHE_ENV = "HAUPTMODUL_CACHE_DIR"
SCHEMA = 1


def identity_to_json(ident: FormulaIdentity) -> dict:
    return {
        "level": ident.level,
        "M": ident.M,
        "kind": ident.kind,
        "terms": [{"monomial": m.to_json(), "coeff": rational_str(c)} for m, c in ident.terms],
        "cleared_denominator": ident.cleared_denominator,
        "cleared_terms": [{"monomial": m.to_json(), "coeff": c} for m, c in ident.cleared_terms],
    }


def identity_from_json(doc: dict) -> FormulaIdentity:
    terms = tuple((Monomial.from_json(t["monomial"]), Fraction(t["coeff"])) for t in doc["terms"])
    return FormulaIdentity(int(doc["level"]), int(doc["M"]), doc["kind"], terms)


def result_to_json(r: JstResult) -> dict:
    return {
        "schema": SCHEMA,
        "code_version": __version__,
        "level": r.level,
        "variant": r.variant,
        "M": r.M,
        "equations": r.equations,
        "pole": r.pole,
        "kappa": r.kappa,
        "trunc": r.trunc,
        "strategy": r.strategy,
        "priority": r.priority,
        "generator_weights": r.generator_weights,
        "rank_profile": [list(t) for t in r.rank_profile],
        "hauptmodul": identity_to_json(r.hauptmodul),
        "kronecker_power": identity_to_json(r.kronecker_power),
        "hauptmodul_series": r.hauptmodul_series.to_json(),
    }


def result_from_json(doc: dict) -> JstResult:
    return JstResult(
        level=doc["level"],
        variant=doc["variant"],
        M=doc["M"],
        equations=doc["equations"],
        pole=doc["pole"],
        kappa=doc["kappa"],
        trunc=doc["trunc"],
        hauptmodul=identity_from_json(doc["hauptmodul"]),
        kronecker_power=identity_from_json(doc["kronecker_power"]),
        hauptmodul_series=QSeries.from_json(doc["hauptmodul_series"]),
        rank_profile=[tuple(t) for t in doc["rank_profile"]],
        strategy=doc["strategy"],
        priority=doc["priority"],
    )


def canonical_dumps(doc: dict) -> str:
    """Byte-stable JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


# -- LaTeX ----------------------------------------------------------------------


def _latex_monomial(N: int, m: Monomial, delta_power: int) -> str:
    parts = []
    for w, b in sorted(m.exponents.items(), reverse=True):
        e = f"E^{{({N})}}_{{{w}}}(z)"
        parts.append(e if b == 1 else f"\\big({e}\\big)^{{{b}}}")
    if delta_power:
        d = f"\\Delta_{{{N}}}(z)"
        parts.append(d if delta_power == 1 else f"\\big({d}\\big)^{{{delta_power}}}")
    return " ".join(parts) if parts else "1"


def _latex_coeff(c: Fraction, first: bool, bare: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if a == 1 and not bare:
        body = ""
    elif a.denominator == 1:
        body = f"{a.numerator}"
    else:
        body = f"\\tfrac{{ {a.numerator} }}{{ {a.denominator} }}"
    return " ".join(x for x in (sign, body) if x)


def identity_to_latex(ident: FormulaIdentity) -> str:
    N, M = ident.level, ident.M
    k = level_constants(N).kN
    d = f"\\Delta_{{{N}}}(z)"
    dm = d if M == 1 else f"\\big({d}\\big)^{{{M}}}"
    lhs = f"j_{{{N}}}(z){dm}" if ident.kind.startswith("haupt") else dm
    out = []
    for i, (m, c) in enumerate(ident.terms):
        mono = _latex_monomial(N, m, M - m.total_weight // k)
        bare = mono == "1"
        coeff = _latex_coeff(c, i == 0, bare)
        out.append(f"{coeff} {mono}".strip() if not bare else coeff)
    return f"{lhs} = " + " ".join(out)


def result_to_latex(r: JstResult) -> str:
    return identity_to_latex(r.hauptmodul) + "\n\n" + identity_to_latex(r.kronecker_power) + "\n"


def result_to_text(r: JstResult) -> str:
    def fmt(ident):
        k = level_constants(r.level).kN
        terms = []
        for m, c in ident.terms:
            dp = r.M - m.total_weight // k
            mono = str(m) if m != ONE or not dp else ""
            if dp:
                mono = (mono + "*" if mono and mono != "1" else "") + (f"D^{dp}" if dp > 1 else "D")
            terms.append(f"  {rational_str(c):>12} * {mono}")
        return "\n".join(terms)

    return (
        f"N={r.level} {r.variant}: M={r.M} eqs={r.equations} pole={r.pole} weights={r.generator_weights}\n"
        f" j*D^{r.M} =\n{fmt(r.hauptmodul)}\n D^{r.M} =\n{fmt(r.kronecker_power)}\n"
    )


# -- cache ------------------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "hauptmodul"


class ResultCache:
    """One JSON file per (level, variant, kappa, code version).

    Writes go to a temporary file that is renamed into place, so concurrent
    writers of the same key (which produce identical bytes) cannot leave a
    torn file behind.
    """

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path(self, N: int, variant: str, kappa: int) -> Path:
        return self.root / f"N{N}-{variant}-k{kappa}-v{__version__}.json"

    def load(self, N: int, variant: str, kappa: int) -> JstResult | None:
        p = self.path(N, variant, kappa)
        try:
            return result_from_json(json.loads(p.read_text()))
        except FileNotFoundError:
            return None
        except (ValueError, KeyError):
            return None  # corrupt or stale entry: recompute

    def store(self, r: JstResult) -> Path:
        p = self.path(r.level, r.variant, r.kappa)
        write_atomic(p, canonical_dumps(result_to_json(r)))
        return p


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_cached(N: int, variant: str, kappa: int | None = None, cache: ResultCache | None = None) -> JstResult:
    kap = level_constants(N).kappaN if kappa is None else kappa
    if cache is not None:
        hit = cache.load(N, variant, kap)
        if hit is not None:
            return hit
    r = run_jst(N, variant, kappa=kap)
    if cache is not None:
        cache.store(r)
    return r


def printed_formulas() -> dict:
    """Coefficients of the published identities, keyed variant -> level -> kind."""
    text = resources.files(__package__).joinpath("data/printed_formulas.json").read_text()
    return json.loads(text)
