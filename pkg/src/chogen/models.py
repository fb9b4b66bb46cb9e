"""Factorial effects and the model specifications they belong to."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .errors import BadGroup, EffectOutOfRange


@dataclass(frozen=True, order=True)
class FactorialEffect:
    """The order-r interaction contrast among a strictly increasing factor set.

    Factors are 1-based; r = 1 is a main effect.
    """

    factors: tuple

    def __post_init__(self):
        f = tuple(int(x) for x in self.factors)
        object.__setattr__(self, "factors", f)
        if not f:
            raise ValueError("an effect needs at least one factor")
        if any(x < 1 for x in f):
            raise EffectOutOfRange(f"factor indices are 1-based, got {f}")
        if any(a >= b for a, b in zip(f, f[1:])):
            raise ValueError(f"factors must be strictly increasing, got {f}")

    @property
    def order(self) -> int:
        return len(self.factors)

    def within(self, n: int) -> bool:
        return self.factors[-1] <= n

    def __str__(self) -> str:
        return "F" + ".".join(str(x) for x in self.factors)


def effect(*factors: int) -> FactorialEffect:
    """Shorthand: effect(1, 3) is the F_13 interaction."""
    return FactorialEffect(tuple(factors))


def require_within(effects: Iterable[FactorialEffect], n: int) -> None:
    for e in effects:
        if not e.within(n):
            raise EffectOutOfRange(f"{e} does not fit in {n} factors")


def main_effect_list(n: int) -> tuple:
    return tuple(effect(j) for j in range(1, n + 1))


def two_factor_list(n: int) -> tuple:
    return tuple(effect(a, b) for a, b in itertools.combinations(range(1, n + 1), 2))


def _subsets(pool: tuple, min_size: int = 1) -> list:
    out = []
    for size in range(min_size, len(pool) + 1):
        out.extend(itertools.combinations(pool, size))
    return out


class ModelKind(str, Enum):
    MAIN_EFFECTS = "main-effects"
    BROADER_MAIN_EFFECTS = "broader"
    SPECIFIED_ONE_FACTOR = "spec-all"
    SPECIFIED_TWO_FACTOR = "spec-2f"
    SPECIFIED_GROUP = "spec-group"
    CUSTOM = "custom"


@dataclass(frozen=True)
class ModelSpec:
    """Effects of interest plus nuisance effects assumed present.

    All remaining factorial effects are assumed absent.  The nuisance set
    is empty except for the broader main effects model, where it is every
    two-factor interaction.
    """

    kind: ModelKind
    n: int
    interest: tuple
    nuisance: tuple = ()
    r: Optional[int] = None  # group-1 size, SPECIFIED_GROUP only

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.interest:
            raise ValueError("a model needs at least one effect of interest")
        require_within(self.interest, self.n)
        require_within(self.nuisance, self.n)
        if len(set(self.interest)) != len(self.interest):
            raise ValueError("duplicate effects of interest")
        if set(self.interest) & set(self.nuisance):
            raise ValueError("interest and nuisance effects must be disjoint")

    @property
    def Q(self) -> int:
        return len(self.interest)

    def describe(self) -> str:
        tag = self.kind.value
        if self.kind is ModelKind.SPECIFIED_GROUP:
            tag += f"(r={self.r})"
        return f"{tag}, n={self.n}, Q={self.Q}"

    @classmethod
    def main_effects(cls, n: int) -> "ModelSpec":
        return cls(ModelKind.MAIN_EFFECTS, n, main_effect_list(n))

    @classmethod
    def broader_main_effects(cls, n: int) -> "ModelSpec":
        """Main effects of interest, all two-factor interactions as nuisance."""
        if n < 2:
            raise ValueError("broader model needs n >= 2")
        return cls(ModelKind.BROADER_MAIN_EFFECTS, n, main_effect_list(n),
                   nuisance=two_factor_list(n))

    @classmethod
    def specified_one_factor(cls, n: int) -> "ModelSpec":
        """Mains plus every interaction containing factor 1, any order."""
        if n < 2:
            raise ValueError("specified interaction models need n >= 2")
        inter = tuple(effect(1, *k) for k in _subsets(tuple(range(2, n + 1))))
        return cls(ModelKind.SPECIFIED_ONE_FACTOR, n,
                   main_effect_list(n) + _sorted_interactions(inter))

    @classmethod
    def specified_two_factor(cls, n: int) -> "ModelSpec":
        """Mains plus the two-factor interactions of factor 1: F_12..F_1n."""
        if n < 2:
            raise ValueError("specified interaction models need n >= 2")
        inter = tuple(effect(1, j) for j in range(2, n + 1))
        return cls(ModelKind.SPECIFIED_TWO_FACTOR, n, main_effect_list(n) + inter)

    @classmethod
    def specified_group(cls, n: int, r: int) -> "ModelSpec":
        """Mains plus all interactions of one group-1 factor with group 2.

        Group 1 is factors 1..r, group 2 is factors r+1..n; the interest
        interactions are {h} with every nonempty subset of group 2, for
        each h in group 1.
        """
        if n < 2:
            raise ValueError("specified interaction models need n >= 2")
        if not 1 <= (r or 0) <= n - 1:
            raise BadGroup(f"group size r must lie in 1..{n - 1}, got {r}")
        group2 = tuple(range(r + 1, n + 1))
        inter = tuple(
            effect(h, *k) for h in range(1, r + 1) for k in _subsets(group2)
        )
        return cls(ModelKind.SPECIFIED_GROUP, n,
                   main_effect_list(n) + _sorted_interactions(inter), r=r)

    @classmethod
    def custom(cls, n: int, interest: Iterable[FactorialEffect],
               nuisance: Iterable[FactorialEffect] = ()) -> "ModelSpec":
        return cls(ModelKind.CUSTOM, n, tuple(interest), tuple(nuisance))


def _sorted_interactions(effects: tuple) -> tuple:
    return tuple(sorted(set(effects), key=lambda e: (e.order, e.factors)))
