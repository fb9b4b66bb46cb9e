"""Factorial effects and model specifications."""

import pytest

from chogen.errors import BadGroup, EffectOutOfRange
from chogen.models import (FactorialEffect, ModelKind, ModelSpec, effect,
                           main_effect_list, require_within, two_factor_list)


def test_effect_basics():
    e = effect(1, 3)
    assert e.factors == (1, 3)
    assert e.order == 2
    assert str(e) == "F1.3"
    assert e.within(3) and not e.within(2)


def test_effect_validation():
    with pytest.raises(ValueError):
        effect()
    with pytest.raises(ValueError):
        effect(2, 2)
    with pytest.raises(ValueError):
        effect(3, 1)
    with pytest.raises(EffectOutOfRange):
        effect(0)


def test_effects_order_and_hash():
    assert effect(1) < effect(1, 2) < effect(2)  # lexicographic on factors
    assert len({effect(1, 2), FactorialEffect((1, 2))}) == 1


def test_require_within():
    require_within((effect(1), effect(2, 4)), 4)
    with pytest.raises(EffectOutOfRange):
        require_within((effect(5),), 4)


def test_effect_lists():
    assert main_effect_list(3) == (effect(1), effect(2), effect(3))
    assert two_factor_list(3) == (effect(1, 2), effect(1, 3), effect(2, 3))


def test_main_effects_model():
    spec = ModelSpec.main_effects(4)
    assert spec.kind is ModelKind.MAIN_EFFECTS
    assert spec.interest == main_effect_list(4)
    assert spec.nuisance == ()
    assert spec.Q == 4


def test_broader_model_nuisance():
    spec = ModelSpec.broader_main_effects(4)
    assert spec.interest == main_effect_list(4)
    assert spec.nuisance == two_factor_list(4)
    assert spec.Q == 4


def test_specified_one_factor_model():
    spec = ModelSpec.specified_one_factor(3)
    assert spec.interest == (effect(1), effect(2), effect(3),
                             effect(1, 2), effect(1, 3), effect(1, 2, 3))
    assert spec.Q == 3 + 4 - 1


def test_specified_two_factor_model():
    spec = ModelSpec.specified_two_factor(4)
    assert spec.interest[4:] == (effect(1, 2), effect(1, 3), effect(1, 4))
    assert spec.Q == 7


def test_specified_group_model():
    spec = ModelSpec.specified_group(4, 2)
    inter = set(spec.interest) - set(main_effect_list(4))
    assert inter == {effect(1, 3), effect(1, 4), effect(1, 3, 4),
                     effect(2, 3), effect(2, 4), effect(2, 3, 4)}
    assert spec.r == 2
    assert "r=2" in spec.describe()
    with pytest.raises(BadGroup):
        ModelSpec.specified_group(4, 4)
    with pytest.raises(BadGroup):
        ModelSpec.specified_group(4, 0)


def test_group_model_with_r_1_matches_one_factor_model():
    assert (ModelSpec.specified_group(5, 1).interest
            == ModelSpec.specified_one_factor(5).interest)


def test_custom_model_checks():
    spec = ModelSpec.custom(3, [effect(1), effect(2)], [effect(1, 2)])
    assert spec.kind is ModelKind.CUSTOM
    with pytest.raises(ValueError):
        ModelSpec.custom(3, [effect(1)], [effect(1)])
    with pytest.raises(ValueError):
        ModelSpec.custom(3, [effect(1), effect(1)])
    with pytest.raises(EffectOutOfRange):
        ModelSpec.custom(2, [effect(3)])
    with pytest.raises(ValueError):
        ModelSpec.custom(2, [])
