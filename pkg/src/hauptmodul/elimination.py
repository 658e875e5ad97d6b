"""Exact Gauss-Jordan elimination over the rationals on matrices whose rows
are q-expansions, keeping track of how every reduced row was assembled from
the input rows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Sequence

from gmpy2 import mpq

from .qseries import QSeries

Label = Hashable


@dataclass(frozen=True)
class ExpansionMatrix:
    labels: tuple[Label, ...]
    expansions: tuple[QSeries, ...]
    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("empty column range")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("row labels must be unique")
        for lab, s in zip(self.labels, self.expansions):
            if s.trunc < self.hi:
                raise ValueError(f"row {lab!r} known only through q^{s.trunc}, need q^{self.hi}")
            if s.offset < self.lo and not s.is_zero():
                raise ValueError(f"row {lab!r} has terms below q^{self.lo}")

    @classmethod
    def from_rows(cls, rows: Sequence[tuple[Label, QSeries]], lo: int, hi: int) -> "ExpansionMatrix":
        return cls(tuple(r[0] for r in rows), tuple(r[1] for r in rows), lo, hi)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.labels), self.hi - self.lo + 1

    def dense(self) -> list[list[Fraction]]:
        return [s.coefficients(self.lo, self.hi) for s in self.expansions]


@dataclass(frozen=True)
class ReducedRow:
    pivot: int  # exponent of q carrying the leading 1
    expansion: QSeries
    combo: tuple[tuple[Label, Fraction], ...]


class EchelonResult:
    """Reduced row echelon form of an ExpansionMatrix.

    Elimination itself only produces the upper-triangular rows.  The fully
    reduced rows (and their input-row combinations) are obtained on demand by
    a triangular solve, so callers that need one or two rows, as the JST loop
    does, never pay for the full back substitution.
    """

    def __init__(self, m: ExpansionMatrix, pivot_rows, upper, fwd_combos, rank_of, dropped):
        self._m = m
        self._cols = sorted(pivot_rows)
        self._pivot_rows = pivot_rows  # column index -> input row index
        self._upper = upper  # input row index -> normalized forward row (mpq)
        self._combos = fwd_combos  # input row index -> {input row index: mpq}
        self._rank_of = rank_of
        self._cache: dict[int, ReducedRow] = {}
        self.lo = m.lo
        self.hi = m.hi
        self.dropped: tuple[Label, ...] = dropped  # rows never used as pivots

    @property
    def rank(self) -> int:
        return len(self._cols)

    @property
    def pivots(self) -> list[int]:
        return [self.lo + c for c in self._cols]

    @property
    def rows(self) -> tuple[ReducedRow, ...]:
        return tuple(self._reduced(c) for c in self._cols)

    def row_with_pivot(self, e: int) -> ReducedRow | None:
        c = e - self.lo
        if c not in self._pivot_rows:
            return None
        return self._reduced(c)

    @property
    def basis_labels(self) -> list[Label]:
        """Input rows that served as pivots, in pivot order."""
        return [self._m.labels[self._pivot_rows[c]] for c in self._cols]

    def _reduced(self, c: int) -> ReducedRow:
        if c in self._cache:
            return self._cache[c]
        # y . U = e_c restricted to the pivot columns; U is unit upper triangular there
        later = [k for k in self._cols if k > c]
        y = {c: mpq(1)}
        for k in later:
            acc = mpq(0)
            for kk, yk in y.items():
                u = self._upper[self._pivot_rows[kk]][k]
                if u:
                    acc += yk * u
            if acc:
                y[k] = -acc
        width = len(self._upper[self._pivot_rows[c]])
        row = [mpq(0)] * width
        combo: dict[int, mpq] = {}
        for k, yk in y.items():
            p = self._pivot_rows[k]
            _axpy(row, -yk, self._upper[p], c)
            _combo_axpy(combo, -yk, self._combos[p])
        m = self._m
        rank_of = self._rank_of
        red = ReducedRow(
            m.lo + c,
            QSeries([_to_fraction(x) for x in row], m.lo, m.hi),
            tuple((m.labels[k], _to_fraction(combo[k])) for k in sorted(combo, key=rank_of.__getitem__)),
        )
        self._cache[c] = red
        return red


def _axpy(dst: list, a, src: list, start: int = 0) -> None:
    """dst -= a * src (in place, from column ``start``)."""
    for j in range(start, len(src)):
        s = src[j]
        if s:
            dst[j] -= a * s


def _combo_axpy(dst: dict, a, src: dict) -> None:
    for k, v in src.items():
        x = dst.get(k, 0) - a * v
        if x:
            dst[k] = x
        else:
            dst.pop(k, None)


def rref_with_provenance(
    m: ExpansionMatrix,
    priority: Callable[[Label], object] | None = None,
    strategy: str = "column",
) -> EchelonResult:
    """Row-reduced echelon form, pivots ordered from the most negative exponent.

    ``priority`` maps a row label to a sort key; smaller keys are preferred as
    pivots.  With ``strategy="column"`` columns are swept left to right and the
    preferred row having a nonzero entry becomes the pivot.  With
    ``strategy="greedy"`` rows are inserted one at a time in priority order and
    kept iff independent of the rows already kept, so the surviving rows are the
    priority-lexicographically first basis.  Ties (or no priority) fall back to
    input order.  Either way the reduced rows are the unique RREF of the row
    space; only the provenance differs.
    """
    n_rows, n_cols = m.shape
    order = list(range(n_rows))
    if priority is not None:
        order.sort(key=lambda i: (priority(m.labels[i]), i))
    rank_of = {i: pos for pos, i in enumerate(order)}

    # gmpy2 rationals are several times faster than Fraction for the row updates
    data = [[mpq(x.numerator, x.denominator) for x in row] for row in m.dense()]
    # Only rows that end up as pivots need provenance, so row operations are
    # logged and replayed into a combination when (if) the row is promoted.
    log: list[list[tuple[int, mpq]]] = [[] for _ in range(n_rows)]
    combos: dict[int, dict[int, mpq]] = {}

    def promote(i: int, col: int) -> None:
        combo = {i: mpq(1)}
        for p, f in log[i]:
            _combo_axpy(combo, f, combos[p])
        log[i] = []
        inv = 1 / data[i][col]
        if inv != 1:
            data[i] = [x * inv if x else x for x in data[i]]
            combo = {k: v * inv for k, v in combo.items()}
        combos[i] = combo

    pivot_rows: dict[int, int] = {}  # column -> row index
    if strategy == "column":
        active = set(range(n_rows))
        for col in range(n_cols):
            cands = [i for i in active if data[i][col] != 0]
            if not cands:
                continue
            p = min(cands, key=rank_of.__getitem__)
            active.discard(p)
            promote(p, col)
            for i in cands:
                if i != p:
                    f = data[i][col]
                    _axpy(data[i], f, data[p], col)
                    log[i].append((p, f))
            pivot_rows[col] = p
    elif strategy == "greedy":
        for i in order:
            row = data[i]
            for col in sorted(pivot_rows):
                f = row[col]
                if f:
                    p = pivot_rows[col]
                    _axpy(row, f, data[p], col)
                    log[i].append((p, f))
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                continue
            promote(i, lead)
            pivot_rows[lead] = i
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    used = set(pivot_rows.values())
    upper = {p: data[p] for p in used}
    dropped = tuple(m.labels[i] for i in order if i not in used)
    return EchelonResult(m, pivot_rows, upper, combos, rank_of, dropped)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def reconstruct(m: ExpansionMatrix, row: ReducedRow) -> QSeries:
    """Recompute sum(combo_i * input_row_i) over the column window."""
    by_label = dict(zip(m.labels, m.expansions))
    total = [Fraction(0)] * (m.hi - m.lo + 1)
    for lab, c in row.combo:
        for j, x in enumerate(by_label[lab].coefficients(m.lo, m.hi)):
            if x:
                total[j] += c * x
    return QSeries(total, m.lo, m.hi)
