"""Construction routines checked against published reference designs.

The frozen tuples below are optimal designs printed in the discrete
choice design literature; the constructions must reproduce them exactly,
or exactly up to the canonical (order-free) form where the source lists
rows in a different order.
"""

import itertools

import pytest

from chogen.constructions import (build, ConstructionRecipe,
                                  default_generators, even_free_columns,
                                  foldover_pair_design,
                                  hadamard_single_set_design,
                                  independent_columns, single_set_design,
                                  specified_design, theorem1_design,
                                  theorem1_main_design, theorem2_design,
                                  theorem2_half_design, validate_generators)
from chogen.designs import ChoiceDesign, complement, equivalent
from chogen.errors import (BadGenerators, BadGroup, RangeError, Unsupported,
                           WidthMismatch)
from chogen.models import ModelSpec, effect
from chogen.optimality import Verdict, verify

# m=6 generator design on 8 factors, generators 11100000 and 00000011;
# published as optimal for the broader main effects model in D_{8,8,6}
GEN6_SETS = (
    ("11111111", "00000000", "00011111", "11100000", "11111100", "00000011"),
    ("10101010", "01010101", "01001010", "10110101", "10101001", "01010110"),
    ("11001100", "00110011", "00101100", "11010011", "11001111", "00110000"),
    ("10011001", "01100110", "01111001", "10000110", "10011010", "01100101"),
    ("11110000", "00001111", "00010000", "11101111", "11110011", "00001100"),
    ("10100101", "01011010", "01000101", "10111010", "10100110", "01011001"),
    ("11000011", "00111100", "00100011", "11011100", "11000000", "00111111"),
    ("10010110", "01101001", "01110110", "10001001", "10010101", "01101010"),
)

# m=8 single-set design on 4 factors: the order-4 seed rows and their
# complements in one choice set, optimal in D_{1,4,8}
SINGLE_SET = (
    "1111", "1010", "1100", "1001", "0000", "0101", "0011", "0110",
)

# m=4 foldover pair on 3 factors, optimal in D_{2,3,4}
FOLDOVER_SETS = (
    ("111", "100", "010", "001"),
    ("000", "011", "101", "110"),
)

# direct-addition design on 5 factors, optimal in D_{4,5,4}
DIRECT_ADD_SETS = (
    ("11111", "10010", "00100", "01001"),
    ("11100", "10001", "00111", "01010"),
    ("00000", "01101", "11011", "10110"),
    ("00011", "01110", "11000", "10101"),
)

# one-specified-factor design on 4 factors, optimal in D_{4,4,4}
SPEC_ALL_SETS = (
    ("1111", "0000", "0111", "1000"),
    ("1010", "0101", "0010", "1101"),
    ("1100", "0011", "0100", "1011"),
    ("1001", "0110", "0001", "1110"),
)

# group-interaction design (groups {1,2} x {3,4}), optimal in D_{4,4,4}
SPEC_GROUP_SETS = (
    ("1111", "0000", "0011", "1100"),
    ("1010", "0101", "0110", "1001"),
    ("1100", "0011", "0000", "1111"),
    ("1001", "0110", "0101", "1010"),
)

GENERATORS_8 = ("11100000", "00000011")


def test_generator_design_m6_matches_reference_exactly():
    d = theorem1_design(8, 6, generators=GENERATORS_8)
    assert d.sets == ChoiceDesign.from_sets(GEN6_SETS).sets


def test_generator_design_m5_is_reference_plus_complement():
    d = theorem1_design(8, 5, generators=GENERATORS_8)
    d5 = ChoiceDesign.from_sets(s[:5] for s in GEN6_SETS)
    want = ChoiceDesign(d5.sets + complement(d5).sets)
    assert d.sets == want.sets
    assert (d.N, d.m) == (16, 5)


def test_generator_design_main_effects_halves():
    half = theorem1_main_design(8, 5, generators=GENERATORS_8)
    assert half.N == 8
    assert verify(half, ModelSpec.main_effects(8)).certified


def test_generator_design_needs_enough_generators():
    with pytest.raises(RangeError):
        theorem1_design(8, 6, generators=("11100000",))
    with pytest.raises(RangeError):
        theorem1_design(8, 1)


def test_default_generators_certify():
    d = theorem1_design(6, 4)
    assert verify(d, ModelSpec.broader_main_effects(6)).certified


def test_single_set_design_matches_reference():
    d = single_set_design(4, order=4)
    assert d.sets == ChoiceDesign.from_sets([SINGLE_SET]).sets


def test_foldover_pair_matches_reference_canonically():
    d = foldover_pair_design(3, order=4)
    assert equivalent(d, ChoiceDesign.from_sets(FOLDOVER_SETS))


def test_direct_add_design_matches_reference_canonically():
    d = theorem2_design(5, 4)
    assert equivalent(d, ChoiceDesign.from_sets(DIRECT_ADD_SETS))
    half = theorem2_half_design(5, 4)
    assert equivalent(half, ChoiceDesign.from_sets(DIRECT_ADD_SETS[:2]))
    assert verify(half, ModelSpec.main_effects(5)).certified


def test_spec_all_design_matches_reference_canonically():
    d = specified_design(4, 4, "all-orders", alpha=2)
    assert equivalent(d, ChoiceDesign.from_sets(SPEC_ALL_SETS))


def test_spec_group_design_matches_reference_canonically():
    d = specified_design(4, 4, "group", r=2, alpha=2)
    assert equivalent(d, ChoiceDesign.from_sets(SPEC_GROUP_SETS))


def test_single_set_design_range_checks():
    with pytest.raises(RangeError):
        single_set_design(2, order=8)
    with pytest.raises(RangeError):
        single_set_design(3, order=8)  # 16 options cannot be distinct on 3 bits
    d = single_set_design(3, order=4)
    assert (d.N, d.m, d.n) == (1, 8, 3)
    assert len(set(d.sets[0])) == 8
    assert verify(d, ModelSpec.broader_main_effects(3)).certified


def test_hadamard_single_set_needs_room_for_a_constant_column():
    with pytest.raises(RangeError):
        hadamard_single_set_design(4, order=4)
    d = hadamard_single_set_design(3, order=4)
    assert (d.N, d.m) == (1, 4)
    assert verify(d, ModelSpec.main_effects(3)).certified


def test_direct_add_range_checks():
    with pytest.raises(RangeError):
        theorem2_design(3, 4)  # n <= order-1 belongs to the foldover family
    with pytest.raises(RangeError):
        theorem2_design(5, 1)


def test_direct_add_alpha_growth():
    assert theorem2_design(7, 4).N == 8  # alpha=2: 2^2 * 3 >= 7
    assert theorem2_design(12, 4).N == 8
    assert theorem2_design(13, 4).N == 16


def test_validate_generators():
    validate_generators(GENERATORS_8, 8)
    with pytest.raises(BadGenerators):
        validate_generators(("000",), 3)
    with pytest.raises(BadGenerators):
        validate_generators(("111",), 3)
    with pytest.raises(BadGenerators):
        validate_generators(("100", "100"), 3)
    with pytest.raises(BadGenerators):
        validate_generators(("110", "001"), 3)  # complements
    with pytest.raises(WidthMismatch):
        validate_generators(("10",), 3)


def test_specified_design_parameter_checks():
    with pytest.raises(Unsupported):
        specified_design(4, 5, "all-orders")
    with pytest.raises(ValueError):
        specified_design(4, 4, "bogus")
    with pytest.raises(RangeError):
        specified_design(1, 4, "all-orders")
    with pytest.raises(RangeError):
        specified_design(9, 4, "all-orders", alpha=3)
    with pytest.raises(ValueError):
        specified_design(4, 4, "two-factor", alpha=2)
    with pytest.raises(BadGroup):
        specified_design(4, 4, "group", r=0)
    with pytest.raises(BadGroup):
        specified_design(4, 4, "group", r=4)


def test_specified_design_shapes():
    d3 = specified_design(4, 3, "all-orders", alpha=2)
    assert (d3.N, d3.m) == (8, 3)
    d2f = specified_design(5, 4, "two-factor")
    assert (d2f.N, d2f.m) == (8, 4)
    assert verify(d2f, ModelSpec.specified_two_factor(5)).certified


def test_seed_columns_are_validated():
    with pytest.raises(RangeError):
        specified_design(4, 4, "all-orders", alpha=2, columns=(2, 3, 4, 1, 1))
    with pytest.raises(RangeError):
        specified_design(4, 4, "all-orders", alpha=2, columns=(2, 3, 4, 5))
    with pytest.raises(RangeError):
        single_set_design(3, order=8, columns=(1, 2, 3))
    with pytest.raises(RangeError):
        specified_design(4, 4, "all-orders", alpha=2, columns=(1, 2, 3, 9))


def test_independent_columns_property():
    for n in range(2, 9):
        cols = independent_columns(n)
        assert len(cols) == n and cols[0] == 1
        vs = [c - 1 for c in cols[1:]]
        # no nonempty subset of the 0-based indices has XOR zero
        for size in range(1, len(vs) + 1):
            for sub in itertools.combinations(vs, size):
                acc = 0
                for v in sub:
                    acc ^= v
                assert acc != 0
    with pytest.raises(RangeError):
        independent_columns(1)


def test_even_free_columns_property():
    for n in range(4, 10):
        cols = even_free_columns(n)
        assert len(cols) == n and cols[0] == 1
        vs = [c - 1 for c in cols[1:]]
        # no even-size subset of the 0-based indices has XOR zero
        for size in range(2, len(vs) + 1, 2):
            for sub in itertools.combinations(vs, size):
                acc = 0
                for v in sub:
                    acc ^= v
                assert acc != 0
    with pytest.raises(RangeError):
        even_free_columns(3)


def test_rescue_columns_certify_where_defaults_cannot():
    d = specified_design(6, 4, "all-orders", alpha=4,
                         columns=even_free_columns(6))
    report = verify(d, ModelSpec.specified_one_factor(6))
    assert report.certified and d.N == 16
    # the default seed of width 2^3 provably leaves unbalanced pairs
    bad = verify(specified_design(6, 4, "all-orders"),
                 ModelSpec.specified_one_factor(6), classify=False)
    assert not bad.certified and bad.offending_count > 0


def test_group_reference_design_aliasing_and_rescue():
    """The four-factor group reference design confounds four effect pairs.

    Every option it uses has even weight, so the F1.2.3.4 contrast is +1 on
    the whole support and each listed pair differs by exactly that effect.
    A width-8 seed on independent columns restores estimability.
    """
    d = specified_design(4, 4, "group", r=2, alpha=2)
    assert {sum(opt) % 2 for s in d.sets for opt in s} == {0}
    report = verify(d, ModelSpec.specified_group(4, 2))
    assert report.verdict is Verdict.NOT_CONNECTED
    assert report.balance_ok and report.trace == report.trace_bound
    assert report.offending_count == 4
    assert {(e1, e2, ep, em) for e1, e2, ep, em in report.offending_pairs} == {
        (effect(1), effect(2, 3, 4), 16, 0),
        (effect(2), effect(1, 3, 4), 16, 0),
        (effect(1, 3), effect(2, 4), 16, 0),
        (effect(1, 4), effect(2, 3), 16, 0),
    }
    rescued = specified_design(4, 4, "group", r=2, alpha=3,
                               columns=independent_columns(4))
    assert rescued.N == 8
    assert verify(rescued, ModelSpec.specified_group(4, 2)).certified


def test_build_dispatch_round_trip():
    model = ModelSpec.broader_main_effects(4)
    recipe = ConstructionRecipe("foldover-pair", 4, 8, model, 2, order=8)
    d = build(recipe)
    assert (d.N, d.m, d.n) == (2, 8, 4)
    assert verify(d, model).certified
    with pytest.raises(Unsupported):
        build(ConstructionRecipe("bogus-id", 4, 8, model, 2))


def test_build_checks_claimed_sets():
    model = ModelSpec.broader_main_effects(4)
    with pytest.raises(RangeError):
        build(ConstructionRecipe("foldover-pair", 4, 8, model, 7, order=8))


def test_recipe_describe_mentions_parameters():
    model = ModelSpec.specified_group(5, 2)
    recipe = ConstructionRecipe("spec-group-m4", 5, 4, model, 16, alpha=4,
                                r=2, columns=independent_columns(5))
    text = recipe.describe()
    assert "spec-group-m4" in text and "alpha=4" in text and "r=2" in text
