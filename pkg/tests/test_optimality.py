"""The certifier: exact counts, trace bound, verdicts."""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from chogen.designs import ChoiceDesign
from chogen.errors import SameEffect
from chogen.models import ModelSpec, effect, main_effect_list
from chogen.optimality import (MAX_LISTED_PAIRS, Verdict, eta_counts,
                               max_trace, np_counts, oracle_cstar, verify)
from chogen.contrasts import cstar_matrix
from chogen.constructions import specified_design
from conftest import designs, random_design


def test_max_trace_values():
    assert max_trace(2, 2, 2) == Fraction(1, 2)
    assert max_trace(8, 8, 6) == Fraction(1, 32)
    # odd m carries the (m^2 - 1) / m^2 factor
    assert max_trace(3, 3, 3) == Fraction(3 * 8, 8 * 9)
    with pytest.raises(ValueError):
        max_trace(0, 2, 2)
    with pytest.raises(ValueError):
        max_trace(2, 2, 1)


def test_eta_counts():
    d = ChoiceDesign.from_sets([("00", "11"), ("01", "10"), ("00", "01")])
    assert eta_counts(d, effect(1), effect(2)) == (1, 1)
    with pytest.raises(SameEffect):
        eta_counts(d, effect(1), effect(1))


def test_np_counts():
    d = ChoiceDesign.from_sets([("00", "11"), ("00", "01")])
    assert np_counts(d, effect(1)) == (1, 2)
    assert np_counts(d, effect(2)) == (1, 1)


@given(designs())
@settings(max_examples=60)
def test_oracle_matches_matrix_path(d):
    effects = main_effect_list(d.n)
    assert oracle_cstar(d, effects) == cstar_matrix(d, effects)


def test_verify_certifies_optimal_pair():
    d = ChoiceDesign.from_sets([("00", "11"), ("01", "10")])
    report = verify(d, ModelSpec.main_effects(2))
    assert report.verdict is Verdict.UNIVERSALLY_OPTIMAL
    assert report.certified
    assert report.diagonal and report.balance_ok
    assert report.trace == report.trace_bound == Fraction(1, 2)
    assert report.offending_pairs == ()
    assert report.cross_block_zero is None
    assert report.total_component_pairs == 2


def test_verify_flags_unbalanced_single_set():
    # one set (00, 11): trace reaches the bound but C is not diagonal
    d = ChoiceDesign.from_sets([("00", "11")])
    report = verify(d, ModelSpec.main_effects(2))
    assert report.verdict is Verdict.NOT_CONNECTED
    assert not report.diagonal
    assert report.trace == report.trace_bound
    assert report.offending_pairs == ((effect(1), effect(2), 1, 0),)
    assert report.offending_count == 1


def test_verify_connected_not_optimal():
    d = ChoiceDesign.from_sets([("00", "01"), ("00", "11")])
    report = verify(d, ModelSpec.main_effects(2))
    assert report.verdict is Verdict.CONNECTED_NOT_OPTIMAL
    assert not report.balance_ok
    assert report.trace < report.trace_bound


def test_verify_np_table():
    d = ChoiceDesign.from_sets([("00", "11"), ("00", "01")])
    report = verify(d, ModelSpec.main_effects(2))
    assert report.np_table.shape == (2, 2)
    assert report.np_table.tolist() == [[1, 1], [2, 1]]
    with pytest.raises(ValueError):
        report.np_table[0, 0] = 9


def test_verify_broader_cross_block_flag():
    d = ChoiceDesign.from_sets([("00", "11"), ("01", "10")])
    report = verify(d, ModelSpec.broader_main_effects(2))
    assert report.cross_block_zero is True
    assert report.certified
    d_bad = ChoiceDesign.from_sets([("00", "01")])
    report = verify(d_bad, ModelSpec.broader_main_effects(2))
    assert report.cross_block_zero is False
    assert not report.certified


def test_verify_classify_false_skips_the_verdict_only():
    d = ChoiceDesign.from_sets([("00", "01"), ("00", "11")])
    report = verify(d, ModelSpec.main_effects(2), classify=False)
    assert report.verdict is None
    assert not report.certified
    assert "unclassified" in report.summary()
    # optimal designs are still classified: no definiteness test needed
    d_opt = ChoiceDesign.from_sets([("00", "11"), ("01", "10")])
    assert verify(d_opt, ModelSpec.main_effects(2), classify=False).certified


def test_offending_pair_listing_is_capped():
    # a wide unbalanced design produces more bad pairs than the report lists
    d = specified_design(8, 4, "all-orders")
    report = verify(d, ModelSpec.specified_one_factor(8), classify=False)
    assert not report.diagonal
    assert report.offending_count > MAX_LISTED_PAIRS
    assert len(report.offending_pairs) == MAX_LISTED_PAIRS


def test_verify_summary_lines():
    d = ChoiceDesign.from_sets([("00", "11")])
    report = verify(d, ModelSpec.main_effects(2))
    text = report.summary()
    assert "verdict: NotConnected" in text
    assert "eta+=1" in text
    assert "trace: 1/2 (bound 1/2)" in text


def test_eta_and_np_identities_on_random_designs():
    rng = random.Random(20260814)
    for _ in range(25):
        n = rng.randint(1, 3)
        m = rng.randint(2, min(4, 1 << n))
        d = random_design(rng, n, m, rng.randint(1, 5))
        effects = main_effect_list(n)
        C = cstar_matrix(d, effects).ints
        for q1 in range(n):
            for q2 in range(q1 + 1, n):
                ep, em = eta_counts(d, effects[q1], effects[q2])
                assert C[q1, q2] == 4 * (ep - em)
        for q in range(n):
            zeros = np_counts(d, effects[q])
            assert C[q, q] == sum(4 * z * (m - z) for z in zeros)


@given(designs(min_n=2))
@settings(max_examples=40)
def test_trace_never_exceeds_bound(d):
    report = verify(d, ModelSpec.main_effects(d.n), classify=False)
    assert report.trace <= report.trace_bound
