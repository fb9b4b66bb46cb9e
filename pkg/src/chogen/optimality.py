"""Certification of universal optimality by exact counting.

A design is certified for a model when its exact information matrix is
diagonal (every off-diagonal effective pair count balances), every
per-set zero count is balanced, the trace reaches the attainable bound,
and, when nuisance effects are present, the cross block vanishes
exactly.  These conditions are sufficient; a design failing them is
reported as not certified, with connectedness decided by an exact
positive-definiteness test.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import contrasts, ratlinalg
from .contrasts import ScaledIntMatrix
from .designs import ChoiceDesign
from .errors import SameEffect
from .models import FactorialEffect, ModelSpec, require_within


class Verdict(str, enum.Enum):
    UNIVERSALLY_OPTIMAL = "UniversallyOptimal"
    CONNECTED_NOT_OPTIMAL = "ConnectedNotOptimal"
    NOT_CONNECTED = "NotConnected"


MAX_LISTED_PAIRS = 64


@dataclass(frozen=True, eq=False)
class OptimalityReport:
    """Everything verify() measured, plus the verdict it implies."""

    model: ModelSpec
    n: int
    m: int
    N: int
    diagonal: bool
    offending_pairs: tuple  # (effect, effect, eta_plus, eta_minus) per bad pair
    offending_count: int  # all unbalanced pairs, even past the listing cap
    balance_ok: bool
    np_table: np.ndarray  # np_table[p, q]: zeros of interest effect q in set p
    trace: Fraction
    trace_bound: Fraction
    cross_block_zero: Optional[bool]  # None when the model has no nuisance
    total_component_pairs: int
    verdict: Optional[Verdict]  # None when classification was skipped

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.UNIVERSALLY_OPTIMAL

    def summary(self) -> str:
        lines = [
            f"model: {self.model.describe()}",
            f"design: N={self.N}, m={self.m}, n={self.n}, "
            f"component pairs N*={self.total_component_pairs}",
            f"diagonal: {self.diagonal}"
            + (f" ({self.offending_count} offending pairs)"
               if self.offending_count else ""),
            f"balance: {self.balance_ok}",
            f"trace: {self.trace} (bound {self.trace_bound})",
        ]
        if self.cross_block_zero is not None:
            lines.append(f"cross block zero: {self.cross_block_zero}")
        for e1, e2, ep, em in self.offending_pairs[:10]:
            lines.append(f"  unbalanced pair {e1},{e2}: eta+={ep}, eta-={em}")
        verdict = "unclassified" if self.verdict is None else self.verdict.value
        lines.append(f"verdict: {verdict}")
        return "\n".join(lines)


def eta_counts(d: ChoiceDesign, e1: FactorialEffect, e2: FactorialEffect) -> tuple:
    """(eta+, eta-): counts of (00,11)- and (01,10)-type component pairs."""
    if e1 == e2:
        raise SameEffect("eta counts need two distinct effects")
    require_within((e1, e2), d.n)
    plus = minus = 0
    for S in d.sets:
        xs = contrasts.effective_choice_set(S, e1)
        ys = contrasts.effective_choice_set(S, e2)
        m = len(S)
        for i in range(m):
            for j in range(i + 1, m):
                dx = xs[i] - xs[j]
                dy = ys[i] - ys[j]
                if dx * dy > 0:
                    plus += 1
                elif dx * dy < 0:
                    minus += 1
    return plus, minus


def np_counts(d: ChoiceDesign, e: FactorialEffect) -> tuple:
    """Zeros of the effective choice set, per set."""
    require_within((e,), d.n)
    return tuple(
        sum(1 for v in contrasts.effective_choice_set(S, e) if v == 0)
        for S in d.sets
    )


def max_trace(Q: int, n: int, m: int) -> Fraction:
    """Largest attainable trace of C over all designs in D_(N,n,m)."""
    if Q < 1 or n < 1 or m < 2:
        raise ValueError("need Q >= 1, n >= 1, m >= 2")
    if m % 2 == 0:
        return Fraction(Q, 1 << n)
    return Fraction(Q * (m * m - 1), (1 << n) * m * m)


def oracle_cstar(d: ChoiceDesign, F) -> ScaledIntMatrix:
    """C* recomputed purely by summing per-pair contributions.

    Independent of the matrix-product route: plain Python loops over all
    N m(m-1)/2 component pairs, including the diagonal where the
    contribution is +4 exactly when the effective positions differ.
    """
    effects = tuple(F)
    require_within(effects, d.n)
    Q = len(effects)
    C = [[0] * Q for _ in range(Q)]
    for S in d.sets:
        m = len(S)
        for i in range(m):
            for j in range(i + 1, m):
                for q1 in range(Q):
                    for q2 in range(q1, Q):
                        v = contrasts.pair_contribution(
                            effects[q1], effects[q2], S[i], S[j])
                        C[q1][q2] += v
                        if q1 != q2:
                            C[q2][q1] += v
    scale = Fraction(1, (1 << d.n) * d.N * d.m * d.m)
    return ScaledIntMatrix(np.array(C, dtype=np.int64), scale)


def _connected(d: ChoiceDesign, model: ModelSpec, Cstar: np.ndarray,
               diagonal: bool, cross_zero: Optional[bool]) -> bool:
    """Exact positive definiteness of the model's information matrix."""
    if diagonal and (cross_zero is None or cross_zero):
        return bool((np.diag(Cstar) > 0).all())
    if cross_zero is None or cross_zero:
        return ratlinalg.is_positive_definite(Cstar.tolist())
    C2 = contrasts.exact_schur_cstar(d, model.interest, model.nuisance)
    return ratlinalg.is_positive_definite(C2)


def _eta_from_signs(x: np.ndarray, y: np.ndarray) -> tuple:
    """eta counts from two (N, m) sign slices of the option matrix.

    Per set, pairs split by the sign quadrants of the two effects: the
    concordant count is (#++)(#--), the discordant one (#+-)(#-+).
    """
    p1 = x > 0
    p2 = y > 0
    pp = (p1 & p2).sum(axis=1)
    pm = (p1 & ~p2).sum(axis=1)
    mp = (~p1 & p2).sum(axis=1)
    mm = (~p1 & ~p2).sum(axis=1)
    return int((pp * mm).sum()), int((pm * mp).sum())


def verify(d: ChoiceDesign, model: ModelSpec,
           classify: bool = True) -> OptimalityReport:
    """Certify a design against a model with exact arithmetic only.

    The verdict is UniversallyOptimal iff the exact C is diagonal, every
    per-set count is balanced, the trace equals max_trace, and (for
    nonempty nuisance) the cross block vanishes; otherwise the exact
    positive definiteness of C decides ConnectedNotOptimal versus
    NotConnected.  Pass classify=False to skip that (possibly costly)
    definiteness test; an uncertified design then gets verdict None.
    """
    effects = model.interest
    require_within(effects, d.n)
    require_within(model.nuisance, d.n)
    n, m, N, Q = d.n, d.m, d.N, model.Q

    X = contrasts.option_sign_matrix(d, effects)
    signs = X.reshape(Q, N, m)
    rowsums = signs.sum(axis=2)  # (Q, N), value m - 2*n_p
    np_table = (m - rowsums) // 2
    if m % 2 == 0:
        balance_ok = bool((rowsums == 0).all())
    else:
        balance_ok = bool((np.abs(rowsums) == 1).all())

    Cstar = (m * contrasts.int_product(X, X.T)
             - contrasts.int_product(rowsums, rowsums.T))
    diag = np.diag(Cstar)
    # same diagonal via the per-set zero counts, as an internal cross-check
    assert np.array_equal(diag, (4 * np_table * (m - np_table)).sum(axis=1))

    off = Cstar.copy()
    np.fill_diagonal(off, 0)
    diagonal = not off.any()
    offending = ()
    offending_count = 0
    if not diagonal:
        bad = np.argwhere(np.triu(off, 1) != 0)
        offending_count = len(bad)
        listed = []
        for q1, q2 in bad[:MAX_LISTED_PAIRS]:
            ep, em = _eta_from_signs(signs[q1], signs[q2])
            assert 4 * (ep - em) == Cstar[q1, q2]
            listed.append((effects[q1], effects[q2], ep, em))
        offending = tuple(listed)

    scale = Fraction(1, (1 << n) * N * m * m)
    trace = int(diag.sum()) * scale
    bound = max_trace(Q, n, m)
    assert trace <= bound, "trace above the attainable bound"

    cross_zero = None
    if model.nuisance:
        cross_zero = not contrasts.cross_block_star(
            d, effects, model.nuisance).any()

    optimal = (diagonal and balance_ok and trace == bound
               and cross_zero in (None, True))
    if optimal:
        verdict = Verdict.UNIVERSALLY_OPTIMAL
    elif not classify:
        verdict = None
    elif _connected(d, model, Cstar, diagonal, cross_zero):
        verdict = Verdict.CONNECTED_NOT_OPTIMAL
    else:
        verdict = Verdict.NOT_CONNECTED

    table = np_table.T.copy()
    table.setflags(write=False)
    return OptimalityReport(
        model=model, n=n, m=m, N=N,
        diagonal=diagonal, offending_pairs=offending,
        offending_count=offending_count,
        balance_ok=balance_ok,
        np_table=table,
        trace=trace, trace_bound=bound,
        cross_block_zero=cross_zero,
        total_component_pairs=N * m * (m - 1) // 2,
        verdict=verdict,
    )
