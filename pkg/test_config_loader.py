import json

import pytest

import config_loader


def test_shipped_config_is_valid():
    assert config_loader.validate_config() == {}


def test_limits():
    assert config_loader.get_limit('max_enumeration_n') == 10
    assert config_loader.get_limit('max_deck_size') == 500
    with pytest.raises(KeyError):
        config_loader.get_limit('no_such_limit')


def test_system_defaults():
    assert config_loader.get_decimal_digits() == 12
    sim = config_loader.get_simulation_defaults()
    assert set(sim) >= {'trials', 'seed', 'block_size', 'workers'}
    assert config_loader.get_group_digits() is False


def test_validation_reports_bad_values(tmp_path, monkeypatch):
    (tmp_path / "limits.json").write_text(json.dumps({'max_enumeration_n': 0}))
    (tmp_path / "system.json").write_text(json.dumps({
        'decimal_digits': -1,
        'simulation': {'trials': 0, 'seed': 2 ** 64},
    }))
    monkeypatch.setattr(config_loader, 'CONFIG_DIR', tmp_path)
    config_loader.load_limits_config.cache_clear()
    config_loader.load_system_config.cache_clear()
    try:
        errors = config_loader.validate_config()
        assert any("Missing required keys" in e for e in errors['limits.json'])
        assert "max_enumeration_n must be a positive integer" in errors['limits.json']
        assert "decimal_digits must be a non-negative integer" in errors['system.json']
        assert "simulation.trials must be a positive integer" in errors['system.json']
        assert "simulation.seed must be a 64-bit unsigned integer" in errors['system.json']
    finally:
        config_loader.load_limits_config.cache_clear()
        config_loader.load_system_config.cache_clear()


def test_missing_files_fall_back_to_defaults(tmp_path, monkeypatch):
    monkeypatch.setattr(config_loader, 'CONFIG_DIR', tmp_path)
    config_loader.load_limits_config.cache_clear()
    config_loader.load_system_config.cache_clear()
    try:
        assert config_loader.get_limit('max_condition_pairs') == 42
        assert config_loader.get_decimal_digits() == 12
        assert config_loader.get_simulation_defaults()['seed'] == 42
    finally:
        config_loader.load_limits_config.cache_clear()
        config_loader.load_system_config.cache_clear()
