import pytest

from functions.config.calculus_config import (
    DEFAULT_CONFIG,
    CalculusConfig,
    CheckProfile,
    ConfigurationManager,
)
from functions.core.errors import CapacityError


def test_defaults():
    config = CalculusConfig()
    assert config.max_arity == 4
    assert config.arity_bound == 5
    assert config.law_instance_budget == 250_000
    assert CalculusConfig(check_profile=CheckProfile.EXHAUSTIVE).law_instance_budget is None


def test_max_arity_past_bound_is_a_capacity_error():
    with pytest.raises(CapacityError):
        CalculusConfig(max_arity=6)
    with pytest.raises(CapacityError):
        CalculusConfig(arity_bound=7)


def test_environment_and_overrides(monkeypatch):
    monkeypatch.setenv("VECTOID_MAX_ARITY", "3")
    monkeypatch.setenv("VECTOID_CHECK_PROFILE", "quick")
    monkeypatch.setenv("VECTOID_MAX_WITNESSES", "lots")
    config = ConfigurationManager.from_environment()
    assert config.max_arity == 3
    assert config.check_profile is CheckProfile.QUICK
    assert config.max_witnesses == 5

    config = ConfigurationManager.from_environment(max_arity=2, check_profile="exhaustive")
    assert config.max_arity == 2
    assert config.check_profile is CheckProfile.EXHAUSTIVE


def test_unknown_profile_falls_back_to_standard():
    assert ConfigurationManager.profile_from_name("thorough") is CheckProfile.STANDARD


def test_activate_and_with_max_arity():
    assert ConfigurationManager.active() is DEFAULT_CONFIG
    config = ConfigurationManager.activate(ConfigurationManager.with_max_arity(2))
    assert ConfigurationManager.active().max_arity == 2
    assert config.arity_bound == DEFAULT_CONFIG.arity_bound
