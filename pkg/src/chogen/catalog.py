"""Catalog of minimum-N certified designs over the reference grid.

The reference table lists, for each model block and each (m, n) cell with
2 <= n <= 12, the number of choice sets N of the smallest known
universally optimal design.  catalog_lookup materializes every applicable
construction for a cell, certifies each one, and compares the smallest
certified N against the reference value.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass
from typing import Optional

from .constructions import (ConstructionRecipe, build, default_generators,
                            even_free_columns, independent_columns,
                            validate_generators)
from .errors import BadOrder, ChogenError, Unsupported
from .hadamard import hadamard, least_hadamard_order
from .models import ModelKind, ModelSpec
from .optimality import verify

TABLE_NS = tuple(range(2, 13))

# Reference N per block; one row per m, columns n = 2..12, None = blank.
TABLE1 = {
    ModelKind.MAIN_EFFECTS: {
        2: (2, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        3: (2, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        4: (1, 1, 2, 2, 2, 4, 4, 4, 4, 4, 4),
        5: (None, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        6: (None, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        7: (None, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        8: (None, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2),
    },
    ModelKind.BROADER_MAIN_EFFECTS: {
        2: (2, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        3: (2, 8, 8, 16, 16, 16, 16, 24, 24, 24, 24),
        4: (1, 2, 4, 4, 4, 8, 8, 8, 8, 8, 8),
        5: (None, 8, 8, 16, 16, 16, 16, 24, 24, 24, 24),
        6: (None, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
        7: (None, 8, 8, 16, 16, 16, 16, 24, 24, 24, 24),
        8: (None, 1, 1, 2, 2, 2, 4, 4, 4, 4, 4),
    },
    ModelKind.SPECIFIED_TWO_FACTOR: {
        3: (4, 8, 8, 16, 16, 16, 16, 24, 24, 24, 24),
        4: (None, 4, 4, 8, 8, 8, 8, 12, 12, 12, 12),
    },
    ModelKind.SPECIFIED_ONE_FACTOR: {
        3: (4, 8, 8, 16, 16, 16, 16, 32, 32, 32, 32),
        4: (None, 4, 4, 8, 8, 8, 8, 16, 16, 16, 16),
    },
}

# Cells where the constructions provably certify at a different N than the
# reference lists; reproduction treats exactly these deviations as expected.
# The all-order interaction family needs seed width 2^(n-1) at m=3 and
# 2^(n-2) at m=4: any narrower seed leaves some effect pair unbalanced, so
# the listed smaller N values are unattainable by this construction.
EXPECTED_DEVIATIONS = {
    (ModelKind.BROADER_MAIN_EFFECTS, 3, 2): 4,
    **{(ModelKind.SPECIFIED_ONE_FACTOR, 3, n): 1 << n for n in range(4, 13)},
    **{(ModelKind.SPECIFIED_ONE_FACTOR, 4, n): 1 << (n - 2)
       for n in range(6, 13)},
}


class CellStatus(str, enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NO_CONSTRUCTION = "NoConstruction"
    BLANK_CELL = "BlankCell"


@dataclass(frozen=True)
class CatalogEntry:
    kind: ModelKind
    m: int
    n: int
    table_N: Optional[int]
    achieved_N: Optional[int]
    status: CellStatus
    recipe: Optional[ConstructionRecipe]
    certified: bool
    note: str = ""


def _supported_order(order: int) -> bool:
    try:
        hadamard(order)
    except (BadOrder, Unsupported):
        return False
    return True


def _t1_generators_ok(n: int, m: int) -> bool:
    alpha_needed = (m - 1) // 2
    if alpha_needed > n:
        return False
    try:
        validate_generators(default_generators(n, alpha_needed), n)
    except ChogenError:
        return False
    return True


def _minimal_alpha(n: int, base: int) -> int:
    alpha = 1
    while (1 << alpha) * base < n:
        alpha += 1
    return alpha


def candidate_recipes(kind: ModelKind, m: int, n: int) -> tuple:
    """Every construction recipe whose claim covers the (kind, m, n) cell."""
    if m > (1 << n):
        return ()
    recipes = []
    if kind is ModelKind.MAIN_EFFECTS:
        model = ModelSpec.main_effects(n)
        if _supported_order(m) and n <= m - 1:
            recipes.append(ConstructionRecipe(
                "foldover-pair", n, m, model, 1, variant="half", order=m))
        if m % 2 == 0 and _supported_order(m // 2) and n <= m // 2:
            recipes.append(ConstructionRecipe(
                "single-set", n, m, model, 1, order=m // 2))
        if _supported_order(m) and n > m - 1:
            recipes.append(ConstructionRecipe(
                "T2-direct-add", n, m, model,
                1 << _minimal_alpha(n, m - 1), variant="half"))
        if _t1_generators_ok(n, m):
            recipes.append(ConstructionRecipe(
                "T1-generator", n, m, model, least_hadamard_order(n),
                variant="half"))
    elif kind is ModelKind.BROADER_MAIN_EFFECTS:
        model = ModelSpec.broader_main_effects(n)
        if m % 2 == 0 and _supported_order(m // 2) and n <= m // 2:
            recipes.append(ConstructionRecipe(
                "single-set", n, m, model, 1, order=m // 2))
        if _supported_order(m) and n <= m - 1:
            recipes.append(ConstructionRecipe(
                "foldover-pair", n, m, model, 2, order=m))
        if _supported_order(m) and n > m - 1:
            recipes.append(ConstructionRecipe(
                "T2-direct-add", n, m, model,
                1 << (_minimal_alpha(n, m - 1) + 1)))
        if _t1_generators_ok(n, m):
            nu = least_hadamard_order(n)
            recipes.append(ConstructionRecipe(
                "T1-generator", n, m, model, nu if m % 2 == 0 else 2 * nu))
    elif kind is ModelKind.SPECIFIED_TWO_FACTOR:
        if m not in (3, 4):
            raise Unsupported(
                f"two-factor interaction constructions cover m in {{3,4}}, got {m}")
        model = ModelSpec.specified_two_factor(n)
        nu = least_hadamard_order(n)
        recipes.append(ConstructionRecipe(
            f"spec-2f-m{m}", n, m, model, 2 * nu if m == 3 else nu))
    elif kind is ModelKind.SPECIFIED_ONE_FACTOR:
        if m not in (3, 4):
            raise Unsupported(
                f"all-order interaction constructions cover m in {{3,4}}, got {m}")
        model = ModelSpec.specified_one_factor(n)
        doubling = 2 if m == 3 else 1
        alpha = max(2, (n - 1).bit_length())
        recipes.append(ConstructionRecipe(
            f"spec-all-m{m}", n, m, model, doubling << alpha, alpha=alpha))
        if n <= 2:
            recipes.append(ConstructionRecipe(
                f"spec-all-m{m}", n, m, model, doubling << 1, alpha=1,
                note="seed order 2 sits below the usual seed range"))
        rescue_alpha = n - 1 if m == 3 else n - 2
        if rescue_alpha > alpha:
            cols = independent_columns(n) if m == 3 else even_free_columns(n)
            recipes.append(ConstructionRecipe(
                f"spec-all-m{m}", n, m, model, doubling << rescue_alpha,
                alpha=rescue_alpha, columns=cols,
                note="no seed of the listed width balances every effect "
                     "pair here; certified on a wider seed with "
                     "XOR-independent columns"))
    else:
        raise Unsupported(f"no catalog block for model kind {kind!r}")
    return tuple(recipes)


def catalog_lookup(kind: ModelKind, m: int, n: int) -> CatalogEntry:
    """Certified minimum-N entry for one cell of the reference table."""
    kind = ModelKind(kind)
    if kind not in TABLE1:
        raise Unsupported(f"no catalog block for model kind {kind!r}")
    block = TABLE1[kind]
    if m not in block:
        raise Unsupported(f"the {kind.value} block has no row m={m}")
    if n not in TABLE_NS:
        raise Unsupported(f"the catalog covers n in 2..12, got n={n}")
    table_N = block[m][n - 2]
    if table_N is None:
        return CatalogEntry(kind, m, n, None, None, CellStatus.BLANK_CELL,
                            None, False, "reference table leaves this cell blank")
    best = None
    for recipe in candidate_recipes(kind, m, n):
        if best is not None and recipe.claimed_N >= best[0].claimed_N:
            continue
        try:
            design = build(recipe)
        except ChogenError:
            continue
        report = verify(design, recipe.model, classify=False)
        if report.certified:
            best = (recipe, design.N)
    if best is None:
        return CatalogEntry(kind, m, n, table_N, None,
                            CellStatus.NO_CONSTRUCTION, None, False,
                            "no candidate construction certified")
    recipe, achieved = best
    status = CellStatus.MATCH if achieved == table_N else CellStatus.MISMATCH
    note = recipe.note
    if status is CellStatus.MISMATCH:
        extra = f"constructions certify N={achieved}, reference lists {table_N}"
        note = f"{note}; {extra}" if note else extra
    return CatalogEntry(kind, m, n, table_N, achieved, status, recipe, True, note)


@dataclass(frozen=True)
class Table1Report:
    entries: tuple

    def _by_status(self, status: CellStatus) -> list:
        return [e for e in self.entries if e.status is status]

    @property
    def match_count(self) -> int:
        return len(self._by_status(CellStatus.MATCH))

    @property
    def mismatch_count(self) -> int:
        return len(self._by_status(CellStatus.MISMATCH))

    @property
    def checked_count(self) -> int:
        return sum(1 for e in self.entries
                   if e.status is not CellStatus.BLANK_CELL)

    def deviations(self) -> list:
        """Entries that differ from the reference value."""
        return [e for e in self.entries
                if e.status in (CellStatus.MISMATCH, CellStatus.NO_CONSTRUCTION)]

    def notes(self) -> list:
        return [e for e in self.entries if e.note
                and e.status is not CellStatus.BLANK_CELL]

    @property
    def deviations_expected(self) -> bool:
        """True when the diff against the reference is exactly the known one."""
        got = {(e.kind, e.m, e.n): e.achieved_N for e in self.deviations()}
        return got == EXPECTED_DEVIATIONS

    def summary(self) -> str:
        lines = [
            f"checked {self.checked_count} non-blank cells: "
            f"{self.match_count} match, {self.mismatch_count} differ"
        ]
        for e in self.deviations():
            key = (e.kind, e.m, e.n)
            known = (key in EXPECTED_DEVIATIONS
                     and EXPECTED_DEVIATIONS[key] == e.achieved_N)
            tag = "known deviation" if known else "UNEXPECTED"
            lines.append(
                f"  {tag}: {e.kind.value} m={e.m} n={e.n}: {e.note}")
        for e in self.notes():
            if e.status is CellStatus.MATCH:
                lines.append(
                    f"  note: {e.kind.value} m={e.m} n={e.n}: {e.note}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("model,m,n,table_N,achieved_N,status,certified,recipe,note\n")
        for e in self.entries:
            recipe = e.recipe.describe() if e.recipe else ""
            note = e.note.replace(",", ";")
            table_n = "" if e.table_N is None else e.table_N
            achieved = "" if e.achieved_N is None else e.achieved_N
            out.write(f"{e.kind.value},{e.m},{e.n},{table_n},{achieved},"
                      f"{e.status.value},{e.certified},{recipe},{note}\n")
        return out.getvalue()

    def to_text(self) -> str:
        lines = []
        present = {e.kind for e in self.entries}
        for kind in TABLE1:
            if kind not in present:
                continue
            lines.append(f"{kind.value}")
            header = "  m\\n " + " ".join(f"{n:>3}" for n in TABLE_NS)
            lines.append(header)
            for m in TABLE1[kind]:
                cells = []
                for n in TABLE_NS:
                    e = next(x for x in self.entries
                             if x.kind is kind and x.m == m and x.n == n)
                    if e.status is CellStatus.BLANK_CELL:
                        cells.append("  .")
                    elif e.status is CellStatus.MATCH:
                        cells.append(f"{e.achieved_N:>3}")
                    else:
                        shown = "!" if e.achieved_N is None else f"{e.achieved_N}!"
                        cells.append(f"{shown:>3}")
                lines.append(f"  {m:>3} " + " ".join(cells))
        lines.append("(. blank cell, ! differs from the reference value)")
        return "\n".join(lines)


def reproduce_table1(kinds=None) -> Table1Report:
    """Rebuild and certify every non-blank cell of the reference table."""
    if kinds is None:
        kinds = tuple(TABLE1)
    entries = []
    for kind in kinds:
        kind = ModelKind(kind)
        if kind not in TABLE1:
            raise Unsupported(f"no catalog block for model kind {kind!r}")
        for m in TABLE1[kind]:
            for n in TABLE_NS:
                entries.append(catalog_lookup(kind, m, n))
    return Table1Report(tuple(entries))
