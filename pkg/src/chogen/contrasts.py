"""Effective positions, contrast vectors, and exact information matrices.

Everything that feeds a certification verdict is computed over the
integers: the information matrix C of a design is held as an integer
matrix C* plus the exact rational scale 1/(2^n N m^2).  Floating point
appears only in the explicitly numeric branch of info_matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import ratlinalg
from .designs import ChoiceDesign, lex_index
from .errors import EffectOutOfRange, SamePair, Unsupported
from .models import FactorialEffect, ModelSpec, require_within

# dense 2^n-column paths are used up to this width; beyond it C* is
# accumulated per choice set (the component-pair route), never densely
DENSE_MAX_N = 12

# relative eigenvalue cutoff of the numeric pseudo-inverse branch
PINV_CUTOFF = 1e-9


@dataclass(frozen=True, eq=False)
class ScaledIntMatrix:
    """An exact matrix: integer entries times a positive rational scale."""

    ints: np.ndarray
    scale: Fraction

    def __post_init__(self):
        arr = np.ascontiguousarray(self.ints, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "ints", arr)
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def shape(self):
        return self.ints.shape

    def trace(self) -> Fraction:
        return int(np.trace(self.ints)) * self.scale

    def entry(self, i: int, j: int) -> Fraction:
        return int(self.ints[i, j]) * self.scale

    def as_fractions(self) -> np.ndarray:
        out = np.empty(self.ints.shape, dtype=object)
        for i in range(self.ints.shape[0]):
            for j in range(self.ints.shape[1]):
                out[i, j] = int(self.ints[i, j]) * self.scale
        return out

    def to_float(self) -> np.ndarray:
        return self.ints.astype(float) * float(self.scale)

    def is_diagonal(self) -> bool:
        off = self.ints.copy()
        np.fill_diagonal(off, 0)
        return not off.any()

    def __eq__(self, other) -> bool:
        """Exact equality of the represented values."""
        if not isinstance(other, ScaledIntMatrix):
            return NotImplemented
        if self.ints.shape != other.ints.shape:
            return False
        a = self.ints.astype(object) * (self.scale.numerator * other.scale.denominator)
        b = other.ints.astype(object) * (other.scale.numerator * self.scale.denominator)
        return bool(np.array_equal(a, b))


def effective_position(T: Sequence, e: FactorialEffect, n: int = None) -> int:
    """The derived binary coordinate (r+1 - sum of levels) mod 2."""
    width = len(T) if n is None else n
    if not e.within(width):
        raise EffectOutOfRange(f"{e} does not fit in {width} factors")
    s = sum(T[h - 1] for h in e.factors)
    return (e.order + 1 - s) % 2


def effective_choice_set(S: Sequence, e: FactorialEffect) -> tuple:
    """Elementwise effective positions of a choice set."""
    return tuple(effective_position(T, e) for T in S)


def _effect_mask(e: FactorialEffect, n: int) -> int:
    # factor j maps to bit n-j, matching the lexicographic treatment index
    if not e.within(n):
        raise EffectOutOfRange(f"{e} does not fit in {n} factors")
    mask = 0
    for j in e.factors:
        mask |= 1 << (n - j)
    return mask


def contrast_vector(e: FactorialEffect, n: int) -> np.ndarray:
    """Signs of the effect over all 2^n treatments in lexicographic order.

    Entry at T is the product over the effect's factors of (2*level - 1);
    equivalently 2*effective_position - 1.
    """
    mask = _effect_mask(e, n)
    idx = np.arange(1 << n, dtype=np.int64)
    ones = np.bitwise_count(idx & mask).astype(np.int64)
    return 1 - 2 * ((e.order - ones) & 1)


def contrast_matrix(effects: Iterable[FactorialEffect], n: int) -> np.ndarray:
    """B: one contrast row per effect, in the given order."""
    return np.vstack([contrast_vector(e, n) for e in effects])


def pair_contribution(e1: FactorialEffect, e2: FactorialEffect,
                      Ti: Sequence, Tj: Sequence) -> int:
    """(x_i - x_j)(y_i - y_j) for one component pair: -4, 0, or +4.

    +4 when the effective pair is of (00,11) type, -4 for (01,10) type.
    """
    if tuple(Ti) == tuple(Tj):
        raise SamePair("component pair needs two distinct treatments")
    xi = 2 * effective_position(Ti, e1) - 1
    xj = 2 * effective_position(Tj, e1) - 1
    yi = 2 * effective_position(Ti, e2) - 1
    yj = 2 * effective_position(Tj, e2) - 1
    return (xi - xj) * (yi - yj)


def option_sign_matrix(d: ChoiceDesign, effects: Sequence[FactorialEffect]) -> np.ndarray:
    """Contrast signs of every effect at every option, shape (Q, N*m).

    Columns run through the design's options in (set, option) order.
    """
    n = d.n
    masks = np.array([_effect_mask(e, n) for e in effects], dtype=np.int64)
    orders = np.array([e.order for e in effects], dtype=np.int64)
    opts = np.array([lex_index(t) for t in d.treatments()], dtype=np.int64)
    ones = np.bitwise_count(masks[:, None] & opts[None, :]).astype(np.int64)
    return 1 - 2 * ((orders[:, None] - ones) & 1)


def lambda_star(d: ChoiceDesign) -> ScaledIntMatrix:
    """The 2^n x 2^n integer matrix Lambda* with scale 1/(N m^2).

    Each choice set contributes m-1 on the diagonal at its members and -1
    between distinct members; multiplicities add for repeated sets.
    """
    n, m = d.n, d.m
    if n > DENSE_MAX_N:
        raise Unsupported(
            f"dense lambda_star is limited to n <= {DENSE_MAX_N}, got {n}"
        )
    size = 1 << n
    Z = np.zeros((size, size), dtype=np.int64)
    for S in d.sets:
        mem = [lex_index(t) for t in S]
        Z[np.ix_(mem, mem)] -= 1
        Z[mem, mem] += m
    return ScaledIntMatrix(Z, Fraction(1, d.N * m * m))


def int_product(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact A @ B for small-integer matrices.

    Large products go through float64 BLAS: every partial sum is an
    integer bounded by inner_dim * max|A| * max|B|, far below 2^53, so
    the float result is exact and the cast back to int64 is lossless.
    """
    ops = A.shape[0] * A.shape[1] * B.shape[-1]
    if ops <= 2_000_000:
        return A @ B
    bound = (A.shape[1] * int(np.abs(A).max(initial=0))
             * int(np.abs(B).max(initial=0)))
    if bound >= (1 << 53):
        return A @ B
    out = A.astype(np.float64) @ B.astype(np.float64)
    return np.rint(out).astype(np.int64)


def _cstar_by_sets(d: ChoiceDesign, effects: Sequence[FactorialEffect]) -> np.ndarray:
    """C* accumulated per choice set: sum_p (m X_p X_p' - s_p s_p')."""
    m = d.m
    X = option_sign_matrix(d, effects)
    S = X.reshape(len(effects), d.N, m).sum(axis=2)
    return m * int_product(X, X.T) - int_product(S, S.T)


def cstar_matrix(d: ChoiceDesign, F: Sequence[FactorialEffect]) -> ScaledIntMatrix:
    """Exact C* = B Lambda* B' with scale 1/(2^n N m^2).

    Dense matrix product for n <= DENSE_MAX_N, per-set accumulation
    beyond; the two paths agree exactly and are cross-checked in tests.
    """
    effects = tuple(F)
    require_within(effects, d.n)
    if not effects:
        raise ValueError("need at least one effect")
    n, m = d.n, d.m
    if n <= DENSE_MAX_N:
        B = contrast_matrix(effects, n)
        C = int_product(int_product(B, lambda_star(d).ints), B.T)
    else:
        C = _cstar_by_sets(d, effects)
    return ScaledIntMatrix(C, Fraction(1, (1 << n) * d.N * m * m))


def cross_block_star(d: ChoiceDesign,
                     interest: Sequence[FactorialEffect],
                     nuisance: Sequence[FactorialEffect]) -> np.ndarray:
    """Exact integer cross block B_(1) Lambda* B_(2)'."""
    require_within(tuple(interest), d.n)
    require_within(tuple(nuisance), d.n)
    m = d.m
    X1 = option_sign_matrix(d, interest)
    X2 = option_sign_matrix(d, nuisance)
    S1 = X1.reshape(len(interest), d.N, m).sum(axis=2)
    S2 = X2.reshape(len(nuisance), d.N, m).sum(axis=2)
    return m * int_product(X1, X2.T) - int_product(S1, S2.T)


def exact_schur_cstar(d: ChoiceDesign,
                      interest: Sequence[FactorialEffect],
                      nuisance: Sequence[FactorialEffect]):
    """Exact rational C2* = C1* - X G^- X' (same scale as cstar_matrix).

    The solve G Y = X' is consistent because the column space of X' lies
    in that of G (both come from the same PSD Lambda*); the Schur
    complement is then invariant to the choice of generalized inverse.
    Returns a list-of-lists Fraction matrix.
    """
    C1 = _cstar_by_sets(d, tuple(interest))
    G = _cstar_by_sets(d, tuple(nuisance))
    X = cross_block_star(d, interest, nuisance)
    Y = ratlinalg.solve_consistent(G.tolist(), X.T.tolist())
    assert Y is not None, "cross-block solve must be consistent"
    q1, q2 = X.shape
    return [
        [Fraction(int(C1[i, j])) - sum(Fraction(int(X[i, k])) * Y[k][j]
                                       for k in range(q2))
         for j in range(q1)]
        for i in range(q1)
    ]


def info_matrix(d: ChoiceDesign, model: ModelSpec, force_numeric: bool = False):
    """The information matrix for the model's effects of interest.

    With no nuisance effects this is the exact C = cstar_matrix over the
    interest effects.  For nonempty nuisance, the exact reduced matrix
    C_(2) equals C_(1) whenever the cross block B_(1) Lambda* B_(2)' is
    exactly zero; otherwise a numeric C_(2) is returned as a plain float
    array (diagnostic only, eigendecomposition pseudo-inverse with
    relative cutoff PINV_CUTOFF), never used for verdicts.  Pass
    force_numeric=True to take the numeric route even when the cross
    block vanishes, e.g. to compare the two paths.
    """
    require_within(model.interest, d.n)
    if not model.nuisance:
        return cstar_matrix(d, model.interest)
    X = cross_block_star(d, model.interest, model.nuisance)
    if not X.any() and not force_numeric:
        return cstar_matrix(d, model.interest)
    scale = 1.0 / float((1 << d.n) * d.N * d.m * d.m)
    C1 = _cstar_by_sets(d, model.interest).astype(float)
    G = _cstar_by_sets(d, model.nuisance).astype(float)
    Ginv = np.linalg.pinv(G, rcond=PINV_CUTOFF, hermitian=True)
    Xf = X.astype(float)
    return (C1 - Xf @ Ginv @ Xf.T) * scale
