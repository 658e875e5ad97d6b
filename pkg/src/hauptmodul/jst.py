"""The JST2/JST3 elimination algorithms.

For a level N and a power M, the candidate functions are

    F_b = prod_w (E_w^{(N)})^{b_w} / Delta_N^M,    sum_w w*b_w = M*k_N,

one per partition of M*k_N/2 into parts >= 2.  Their Laurent expansions are
reduced to echelon form; the run stops at the first M producing both a row
starting q^-1 (the Hauptmodul up to a constant) and a row equal to 1.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .elimination import EchelonResult, ExpansionMatrix, rref_with_provenance
from .exactnum import partitions_ge2
from .forms import eisenstein_plus, kronecker_limit, level_constants
from .qseries import QSeries

log = logging.getLogger(__name__)

VARIANTS = ("jst2", "jst3")
HAUPTMODUL = "hauptmodul-numerator"
KRONECKER = "kronecker-power"


class JstError(RuntimeError):
    pass


class NonTermination(JstError):
    pass


class InsufficientTruncation(JstError):
    pass


@dataclass(frozen=True)
class Monomial:
    """Product of level-N Eisenstein series, stored as weights in descending order."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(sorted((int(w) for w in self.weights), reverse=True))
        for w in ws:
            if w < 4 or w % 2:
                raise ValueError(f"Eisenstein weights must be even and >= 4, got {w}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def from_exponents(cls, exps: dict[int, int]) -> "Monomial":
        return cls(tuple(w for w, b in exps.items() for _ in range(b)))

    @classmethod
    def from_partition(cls, parts: Sequence[int]) -> "Monomial":
        return cls(tuple(2 * p for p in parts))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(sorted(Counter(self.weights).items()))

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def priority_key(self) -> tuple[int, ...]:
        # smallest largest-weight first, then the next largest, ...
        return self.weights

    def __str__(self):
        if not self.weights:
            return "1"
        return "*".join(f"E{w}" if b == 1 else f"E{w}^{b}" for w, b in sorted(self.exponents.items(), reverse=True))

    def to_json(self) -> dict[str, int]:
        return {str(w): b for w, b in self.exponents.items()}

    @classmethod
    def from_json(cls, doc: dict) -> "Monomial":
        return cls.from_exponents({int(w): int(b) for w, b in doc.items()})


ONE = Monomial(())


def priority(m: Monomial) -> tuple[int, ...]:
    return m.priority_key()


def lexasc_priority(m: Monomial) -> tuple[int, ...]:
    """Alternative rule: smallest ascending weight multiset first."""
    return tuple(sorted(m.weights))


PRIORITIES = {"maxweight": priority, "lexasc": lexasc_priority, "input": None}


def enumerate_monomials(N: int, M: int) -> list[Monomial]:
    if M < 0:
        raise ValueError("M must be non-negative")
    k = level_constants(N).kN
    assert (M * k) % 2 == 0
    return [Monomial.from_partition(p) for p in partitions_ge2(M * k // 2)]


def candidate_set(N: int, M: int, variant: str) -> list[Monomial]:
    """Rows of the elimination matrix at step M (JST2 accumulates down to the constant)."""
    if variant == "jst3":
        return enumerate_monomials(N, M)
    if variant == "jst2":
        out = []
        for m in range(M, 0, -1):
            out.extend(enumerate_monomials(N, m))
        out.append(ONE)
        return out
    raise ValueError(f"unknown variant {variant!r}")


def equation_count(N: int, M: int, variant: str) -> int:
    from .exactnum import count_partitions_ge2

    k = level_constants(N).kN
    if variant == "jst3":
        return count_partitions_ge2(M * k // 2)
    return 1 + sum(count_partitions_ge2(m * k // 2) for m in range(1, M + 1))


@lru_cache(maxsize=4096)
def monomial_expansion(N: int, mono: Monomial, trunc: int) -> QSeries:
    if not mono.weights:
        return QSeries.constant(1, trunc)
    head, rest = mono.weights[0], Monomial(mono.weights[1:])
    return eisenstein_plus(N, head, trunc) * monomial_expansion(N, rest, trunc)


@lru_cache(maxsize=256)
def _delta_inverse_power(N: int, M: int, trunc: int) -> QSeries:
    """Delta_N^-M known through q^trunc."""
    v = level_constants(N).vInf
    if M == 0:
        return QSeries.constant(1, trunc)
    return (kronecker_limit(N, trunc + 2 * M * v) ** M).inverse()


def modular_function(N: int, b: Monomial, M: int, trunc: int) -> QSeries:
    """Laurent expansion of b / Delta_N^M through q^trunc."""
    L = level_constants(N)
    if b.total_weight != M * L.kN:
        raise ValueError(f"monomial {b} has weight {b.total_weight}, expected {M * L.kN}")
    pole = M * L.vInf
    num = monomial_expansion(N, b, trunc + pole)
    return (num * _delta_inverse_power(N, M, trunc)).truncate(trunc)


def working_trunc(N: int, M: int, guard: int = 8, kappa: int | None = None) -> int:
    L = level_constants(N)
    kap = L.kappaN if kappa is None else kappa
    return max(kap, M * L.vInf) + guard


# -- identities ---------------------------------------------------------------


@dataclass(frozen=True)
class FormulaIdentity:
    """sum_b c_b * b * Delta_N^(M - weight(b)/k_N) = target.

    ``target`` is j_N * Delta_N^M for the Hauptmodul numerator and Delta_N^M for
    the Kronecker power.  For JST3 every monomial has weight M*k_N, so the left
    side is a weighted-homogeneous polynomial in Eisenstein series.
    """

    level: int
    M: int
    kind: str
    terms: tuple[tuple[Monomial, Fraction], ...]
    cleared_denominator: int = field(init=False)
    cleared_terms: tuple[tuple[Monomial, int], ...] = field(init=False)

    def __post_init__(self):
        terms = tuple((m, Fraction(c)) for m, c in self.terms if c != 0)
        terms = tuple(sorted(terms, key=lambda t: priority(t[0])))
        object.__setattr__(self, "terms", terms)
        d = 1
        for _, c in terms:
            d = lcm(d, c.denominator)
        object.__setattr__(self, "cleared_denominator", d)
        object.__setattr__(self, "cleared_terms", tuple((m, int(c * d)) for m, c in terms))

    @property
    def coefficients(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    @property
    def weights_used(self) -> set[int]:
        return {w for m, _ in self.terms for w in m.weights}

    def is_homogeneous(self) -> bool:
        k = level_constants(self.level).kN
        return all(m.total_weight == k * self.M for m, _ in self.terms)

    def expand(self, trunc: int) -> QSeries:
        """Left-hand side as a q-series through q^trunc."""
        L = level_constants(self.level)
        total = QSeries.zero(trunc)
        for m, c in self.terms:
            dpow, rem = divmod(self.M * L.kN - m.total_weight, L.kN)
            if rem or dpow < 0:
                raise ValueError(f"term {m} does not fit weight {self.M * L.kN}")
            s = monomial_expansion(self.level, m, trunc)
            if dpow:
                s = s * kronecker_limit(self.level, trunc) ** dpow
            total = total + s.truncate(trunc) * c
        return total


@dataclass
class JstResult:
    level: int
    variant: str
    M: int
    equations: int
    pole: int
    kappa: int
    trunc: int
    hauptmodul: FormulaIdentity
    kronecker_power: FormulaIdentity
    hauptmodul_series: QSeries  # j_N through q^kappa
    rank_profile: list[tuple[int, int, int]] = field(default_factory=list)  # (M, rows, rank)
    strategy: str = "column"
    priority: str = "maxweight"

    @property
    def generator_weights(self) -> list[int]:
        return generator_weights(self)

    def table_row(self) -> tuple[int, int, int, int]:
        return (self.level, self.M, self.equations, self.pole)


def generator_weights(r: JstResult) -> list[int]:
    return sorted(r.hauptmodul.weights_used | r.kronecker_power.weights_used)


def build_matrix(N: int, M: int, variant: str, kappa: int, trunc: int) -> ExpansionMatrix:
    L = level_constants(N)
    rows = []
    for b in candidate_set(N, M, variant):
        m = b.total_weight // L.kN
        rows.append((b, modular_function(N, b, m, trunc)))
    return ExpansionMatrix.from_rows(rows, -M * L.vInf, kappa)


def extract_formulas(ech: EchelonResult, N: int, M: int) -> tuple[FormulaIdentity, FormulaIdentity]:
    h = ech.row_with_pivot(-1)
    c = ech.row_with_pivot(0)
    if h is None or c is None:
        raise JstError(f"N={N}, M={M}: elimination has no {'q^-1' if h is None else 'constant'} row")
    # reduced echelon form already zeroes the q^0 entry of the q^-1 row whenever q^0 is a pivot
    const = h.expansion.coeff(0)
    hterms = dict(h.combo)
    if const:
        for lab, x in c.combo:
            hterms[lab] = hterms.get(lab, 0) - const * x
    haupt = FormulaIdentity(N, M, HAUPTMODUL, tuple(hterms.items()))
    kron = FormulaIdentity(N, M, KRONECKER, tuple(c.combo))
    return haupt, kron


def verify_identity(ident: FormulaIdentity, hauptmodul: QSeries | None, trunc: int) -> int | None:
    """Return the first exponent where the identity fails, or None.

    The Kronecker-power identity is compared against the eta-product Delta_N^M
    directly.  The Hauptmodul numerator divided by Delta_N^M must have principal
    part exactly q^-1, zero constant term, and agree with ``hauptmodul``.
    """
    L = level_constants(ident.level)
    pole = ident.M * L.vInf
    lhs = ident.expand(trunc + pole)
    dm = kronecker_limit(ident.level, trunc + pole) ** ident.M
    if ident.kind == KRONECKER:
        return lhs.first_mismatch(dm, trunc + pole)
    j = (lhs * _delta_inverse_power(ident.level, ident.M, trunc)).truncate(trunc)
    ref = QSeries.monomial(-1, 0)
    bad = j.truncate(0).first_mismatch(ref)
    if bad is not None:
        return bad
    if hauptmodul is not None:
        return j.first_mismatch(hauptmodul, min(trunc, hauptmodul.trunc))
    return None


def run_jst(
    N: int,
    variant: str = "jst3",
    m_max: int = 64,
    *,
    kappa: int | None = None,
    guard: int = 8,
    strategy: str = "column",
    priority_rule: str = "maxweight",
    verify: bool = True,
) -> JstResult:
    L = level_constants(N)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if not L.genus_zero:
        raise JstError(f"level {N} is not one of the genus-zero levels")
    kap = L.kappaN if kappa is None else kappa
    if kap < 1:
        raise InsufficientTruncation("kappa must be at least 1 so the constant column exists")
    prio = PRIORITIES[priority_rule]
    profile = []
    for M in range(1, m_max + 1):
        trunc = working_trunc(N, M, guard, kap)
        if trunc < kap:
            raise InsufficientTruncation(f"working truncation {trunc} below kappa {kap}; increase trunc")
        mat = build_matrix(N, M, variant, kap, trunc)
        ech = rref_with_provenance(mat, prio, strategy)
        profile.append((M, mat.shape[0], ech.rank))
        log.debug("N=%d %s M=%d rows=%d rank=%d pivots=%s", N, variant, M, mat.shape[0], ech.rank, ech.pivots[:4])
        piv = set(ech.pivots)
        if -1 in piv and 0 in piv:
            break
    else:
        raise NonTermination(
            f"N={N} {variant}: no Hauptmodul row up to M={m_max}; last (M, rows, rank) = {profile[-1]}"
        )
    haupt, kron = extract_formulas(ech, N, M)
    jrow = ech.row_with_pivot(-1).expansion
    jseries = jrow - jrow.coeff(0) * ech.row_with_pivot(0).expansion if jrow.coeff(0) else jrow
    result = JstResult(
        level=N,
        variant=variant,
        M=M,
        equations=mat.shape[0],
        pole=M * L.vInf,
        kappa=kap,
        trunc=trunc,
        hauptmodul=haupt,
        kronecker_power=kron,
        hauptmodul_series=jseries,
        rank_profile=profile,
        strategy=strategy,
        priority=priority_rule,
    )
    if verify:
        for ident, ref in ((kron, None), (haupt, jseries)):
            bad = verify_identity(ident, ref, trunc)
            if bad is not None:
                raise JstError(f"N={N} {variant}: {ident.kind} identity fails at q^{bad}")
    return result
