"""Design constructions from Hadamard seeds, generators, and direct addition.

Each function emits a ChoiceDesign ready for certification; nothing here
claims optimality by itself.  Column selections are deterministic: the
stated default columns, or the lexicographically first admissible choice
when the default would collide two options.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .designs import (ChoiceDesign, add_generator, complement, direct_add,
                      treatment, truncate_factors)
from .errors import (BadGenerators, BadGroup, DuplicateOption, RangeError,
                     Unsupported, WidthMismatch)
from .hadamard import hadamard, least_hadamard_order, zero_one
from .models import ModelSpec


def default_generators(n: int, alpha: int) -> tuple:
    """The first alpha unit vectors e_1..e_alpha of width n."""
    if alpha > n:
        raise RangeError(f"cannot form {alpha} unit generators on {n} factors")
    return tuple(
        tuple(1 if k == u else 0 for k in range(n)) for u in range(alpha)
    )


def validate_generators(gens: Sequence, n: int) -> tuple:
    """Enforce the generator conditions: distinct, complement-free,
    nonzero, not all-ones, width n."""
    out = []
    for g in gens:
        gt = treatment(g)
        if len(gt) != n:
            raise WidthMismatch(f"generator width {len(gt)}, expected {n}")
        out.append(gt)
    seen = set()
    for g in out:
        if sum(g) == 0:
            raise BadGenerators("zero generator")
        if sum(g) == n:
            raise BadGenerators("all-ones generator")
        if g in seen:
            raise BadGenerators(f"repeated generator {g}")
        comp = tuple(1 - b for b in g)
        if comp in seen:
            raise BadGenerators(f"generators {comp} and {g} are complements")
        seen.add(g)
    return tuple(out)


def independent_columns(n: int) -> tuple:
    """1-based seed columns for width 2^(n-1): the constant column, then
    the columns at unit 0-based indices 1, 2, 4, ..., 2^(n-2).

    Every nonempty subset of factors 2..n has a nonzero XOR of 0-based
    column indices, so no effective contrast column of a generator-shift
    design degenerates to a constant.  Used when the first-n-columns
    default fails certification.
    """
    if n < 2:
        raise RangeError(f"independent columns need n >= 2, got {n}")
    return (1,) + tuple((1 << (i - 2)) + 1 for i in range(2, n + 1))


def even_free_columns(n: int) -> tuple:
    """1-based seed columns for width 2^(n-2): the constant column, then
    0-based indices 3, 3 xor 1, 3 xor 2, 3 xor 4, ...

    The pairwise XORs of the last n-1 indices are distinct units, so no
    even-sized subset of factors 2..n XORs to zero.  That weaker
    condition is all the four-option generator-shift design needs, and it
    fits a seed half the width of independent_columns.
    """
    if n < 4:
        raise RangeError(f"even-free columns need n >= 4, got {n}")
    return (1, 4) + tuple((3 ^ (1 << (i - 3))) + 1 for i in range(3, n + 1))


def _seed_rows(order: int, cols: Sequence[int]) -> tuple:
    """Rows of zero_one(normalized Hadamard) restricted to 1-based columns."""
    A = zero_one(hadamard(order))
    return tuple(
        tuple(int(A[i, c - 1]) for c in cols) for i in range(order)
    )


def _resolve_columns(order: int, n: int, columns: Optional[Sequence[int]],
                     first_column: str) -> tuple:
    """Column indices (1-based) into the seed matrix.

    first_column is "required", "excluded", or "free".  Defaults: the
    first n columns when the first column is allowed, else 2..n+1; if the
    default collides two seed rows, the lexicographically first column
    set with distinct rows is used instead.
    """
    if columns is not None:
        cols = tuple(int(c) for c in columns)
        if len(cols) != n:
            raise RangeError(f"need exactly {n} columns, got {len(cols)}")
        if len(set(cols)) != n or any(not 1 <= c <= order for c in cols):
            raise RangeError(f"columns must be distinct and in 1..{order}")
        if first_column == "required" and 1 not in cols:
            raise RangeError("this seed requires column 1")
        if first_column == "excluded" and 1 in cols:
            raise RangeError("this seed excludes column 1")
        return cols
    if first_column == "excluded":
        pool = range(2, order + 1)
        default = tuple(range(2, n + 2))
    else:
        pool = range(1, order + 1)
        default = tuple(range(1, n + 1))
    if order > (1 << n):
        raise RangeError(
            f"{order} distinct options cannot fit in {n} two-level factors"
        )
    if len(set(_seed_rows(order, default))) == order:
        return default
    for cols in itertools.combinations(pool, n):
        if first_column == "required" and cols[0] != 1:
            continue
        if len(set(_seed_rows(order, cols))) == order:
            return cols
    raise RangeError(
        f"no {n} columns of the order-{order} seed give distinct rows"
    )


def _theorem1_components(n: int, m: int, generators, order, columns) -> list:
    if m < 2:
        raise RangeError(f"set size m must be at least 2, got {m}")
    nu = least_hadamard_order(n) if order is None else order
    if n > nu:
        raise RangeError(f"n={n} exceeds the seed order {nu}")
    alpha_needed = (m - 1) // 2
    if generators is None:
        gens = default_generators(n, alpha_needed)
    else:
        gens = tuple(treatment(g) for g in generators)
        if len(gens) < alpha_needed:
            raise RangeError(
                f"m={m} needs at least {alpha_needed} generators, got {len(gens)}"
            )
    gens = validate_generators(gens, n)
    cols = _resolve_columns(nu, n, columns, "free")
    A1 = _seed_rows(nu, cols)
    A2 = complement(A1)
    comps = [A1, A2]
    for g in gens:
        comps.append(add_generator(A1, g))
        comps.append(add_generator(A2, g))
        if len(comps) >= m:
            break
    return comps[:m]


def theorem1_design(n: int, m: int, generators=None, order: int = None,
                    columns=None) -> ChoiceDesign:
    """Generator-expanded foldover: broader-model design for any m >= 2.

    A_1 holds Hadamard seed rows, A_2 its complement, and each generator
    g contributes the pair (A_1+g, A_2+g).  Even m keeps the first m
    components (N = seed order); odd m appends the full complement design
    (N doubles).
    """
    comps = _theorem1_components(n, m, generators, order, columns)
    d = ChoiceDesign.from_components(comps)
    if m % 2 == 0:
        return d
    return ChoiceDesign(d.sets + complement(d).sets)


def theorem1_main_design(n: int, m: int, generators=None, order: int = None,
                         columns=None) -> ChoiceDesign:
    """The half of theorem1_design (no complement sets), optimal for
    main effects only; N = seed order for every m."""
    comps = _theorem1_components(n, m, generators, order, columns)
    return ChoiceDesign.from_components(comps)


def single_set_design(n: int, order: int = None, columns=None) -> ChoiceDesign:
    """One choice set of seed rows plus all their complements: N=1, m=2*order."""
    nu = least_hadamard_order(n) if order is None else order
    if n > nu:
        raise RangeError(f"n={n} exceeds the seed order {nu}")
    if 2 * nu > (1 << n):
        raise RangeError(
            f"{2 * nu} distinct options cannot fit in {n} two-level factors"
        )
    mode = "free" if n == nu else "excluded"
    cols = _resolve_columns(nu, n, columns, mode)
    rows = _seed_rows(nu, cols)
    return ChoiceDesign.from_sets([rows + complement(rows)])


def hadamard_single_set_design(n: int, order: int = None,
                               columns=None) -> ChoiceDesign:
    """One choice set of the order-many seed rows: N=1, m=order, n < order.

    Optimal for main effects; the foldover pair built on top of it covers
    the broader model.
    """
    nu = least_hadamard_order(n + 1) if order is None else order
    if n > nu - 1:
        raise RangeError(f"single Hadamard set needs n <= order-1, got n={n}")
    cols = _resolve_columns(nu, n, columns, "excluded")
    return ChoiceDesign.from_sets([_seed_rows(nu, cols)])


def foldover_pair_design(n: int, order: int = None, columns=None) -> ChoiceDesign:
    """Seed rows and their complements as two sets: N=2, m=order, n < order."""
    half = hadamard_single_set_design(n, order, columns)
    return ChoiceDesign(half.sets + complement(half).sets)


def _theorem2_half(n: int, nu: int) -> ChoiceDesign:
    if nu < 2:
        raise RangeError(f"set size must be at least 2, got {nu}")
    if n <= nu - 1:
        raise RangeError(
            f"direct-addition designs need n > {nu - 1}; use a single-set "
            f"or foldover construction for n={n}"
        )
    alpha = 1
    while (1 << alpha) * (nu - 1) < n:
        alpha += 1
    base = ChoiceDesign.from_sets([_seed_rows(nu, range(2, nu + 1))])
    d = base
    for _ in range(alpha):
        left = direct_add(d, d)
        right = direct_add(d, complement(d))
        d = ChoiceDesign(left.sets + right.sets)
    return truncate_factors(d, n)


def theorem2_half_design(n: int, m: int) -> ChoiceDesign:
    """Recursive direct-addition design, N = 2^alpha sets of size m.

    m must be a supported Hadamard order; alpha is minimal with
    n <= 2^alpha (m-1).  Optimal for main effects.
    """
    return _theorem2_half(n, m)


def theorem2_design(n: int, m: int) -> ChoiceDesign:
    """The direct-addition design with its complement: N = 2^(alpha+1)."""
    half = _theorem2_half(n, m)
    return ChoiceDesign(half.sets + complement(half).sets)


SPEC_SCOPES = ("all-orders", "two-factor", "group")


def specified_design(n: int, m: int, scope: str, r: int = None,
                     alpha: int = None, columns=None) -> ChoiceDesign:
    """Generator-shift designs for the specified-interaction models.

    scope "all-orders": interactions of factor 1 at every order, Sylvester
    seed of width 2^alpha, generator e_1.  scope "two-factor": F_12..F_1n
    only, seed from the least Hadamard order >= n, generator e_1.  scope
    "group": factor groups {1..r} x {r+1..n}, Sylvester seed, generator
    with r leading ones.  m=4 gives (A_1, comp, A_1+g, comp+g); m=3 keeps
    three components and appends the complement design.
    """
    if m not in (3, 4):
        raise Unsupported(f"specified-interaction constructions cover m in {{3,4}}, got {m}")
    if scope not in SPEC_SCOPES:
        raise ValueError(f"scope must be one of {SPEC_SCOPES}, got {scope!r}")
    if n < 2:
        raise RangeError("specified-interaction designs need n >= 2")

    if scope == "two-factor":
        if alpha is not None:
            raise ValueError("alpha applies only to Sylvester-seeded scopes")
        nu = least_hadamard_order(n)
    else:
        if alpha is None:
            alpha = max(2, (n - 1).bit_length())
        if alpha < 1 or n > (1 << alpha):
            raise RangeError(f"alpha={alpha} does not admit n={n}")
        nu = 1 << alpha

    if scope == "group":
        if r is None or not 1 <= r <= n - 1:
            raise BadGroup(f"group size r must lie in 1..{n - 1}, got {r}")
        g = tuple(1 if k < r else 0 for k in range(n))
    else:
        g = tuple(1 if k == 0 else 0 for k in range(n))

    cols = _resolve_columns(nu, n, columns, "required")
    A1 = _seed_rows(nu, cols)
    A2 = complement(A1)
    comps = [A1, A2, add_generator(A1, g), add_generator(A2, g)]
    if m == 4:
        return ChoiceDesign.from_components(comps)
    d = ChoiceDesign.from_components(comps[:3])
    return ChoiceDesign(d.sets + complement(d).sets)


@dataclass(frozen=True)
class ConstructionRecipe:
    """A fully determined construction call plus the model it claims."""

    id: str
    n: int
    m: int
    model: ModelSpec
    claimed_N: int
    variant: str = "full"  # "half" drops the complement sets where defined
    order: Optional[int] = None
    alpha: Optional[int] = None
    generators: Optional[tuple] = None
    r: Optional[int] = None
    columns: Optional[tuple] = None
    note: str = ""

    def describe(self) -> str:
        bits = [self.id]
        if self.variant != "full":
            bits.append(self.variant)
        if self.order is not None:
            bits.append(f"order={self.order}")
        if self.alpha is not None:
            bits.append(f"alpha={self.alpha}")
        if self.generators:
            bits.append("generators=" + ",".join(
                "".join(str(b) for b in g) for g in self.generators))
        if self.r is not None:
            bits.append(f"r={self.r}")
        return " ".join(bits)


def build(recipe: ConstructionRecipe) -> ChoiceDesign:
    """Materialize a recipe; the result is checked against its claimed N."""
    rid, n, m = recipe.id, recipe.n, recipe.m
    if rid == "T1-generator":
        fn = theorem1_design if recipe.variant == "full" else theorem1_main_design
        d = fn(n, m, recipe.generators, recipe.order, recipe.columns)
    elif rid == "single-set":
        d = single_set_design(n, recipe.order, recipe.columns)
    elif rid == "foldover-pair":
        if recipe.variant == "full":
            d = foldover_pair_design(n, recipe.order, recipe.columns)
        else:
            d = hadamard_single_set_design(n, recipe.order, recipe.columns)
    elif rid == "T2-direct-add":
        fn = theorem2_design if recipe.variant == "full" else theorem2_half_design
        d = fn(n, m)
    elif rid in ("spec-all-m4", "spec-all-m3"):
        d = specified_design(n, m, "all-orders", alpha=recipe.alpha,
                             columns=recipe.columns)
    elif rid in ("spec-2f-m4", "spec-2f-m3"):
        d = specified_design(n, m, "two-factor", columns=recipe.columns)
    elif rid in ("spec-group-m4", "spec-group-m3"):
        d = specified_design(n, m, "group", r=recipe.r, alpha=recipe.alpha,
                             columns=recipe.columns)
    else:
        raise Unsupported(f"unknown construction id {rid!r}")
    if d.N != recipe.claimed_N or d.m != m or d.n != n:
        raise RangeError(
            f"{recipe.describe()} produced N={d.N}, m={d.m}, n={d.n}, "
            f"claimed N={recipe.claimed_N}, m={m}, n={n}"
        )
    return d
