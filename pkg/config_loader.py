#!/usr/bin/env python3
"""
Configuration loader for the perfect-shuffle calculator
Loads guard limits and output/simulation defaults from config/ with validation
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, List

CONFIG_DIR = Path(__file__).parent / "config"

# Used when a key is missing from limits.json, so a trimmed config still works.
DEFAULT_LIMITS = {
    'max_enumeration_n': 10,
    'max_condition_pairs': 42,
    'max_deck_size': 500,
    'max_exact_compare_n': 60,
}

DEFAULT_SIMULATION = {
    'trials': 100_000,
    'seed': 42,
    'block_size': 16_384,
    'workers': 1,
}

@lru_cache(maxsize=None)
def load_limits_config() -> Dict:
    """Load limits configuration (enumeration guards, sanity bounds)."""
    with open(CONFIG_DIR / "limits.json", 'r') as f:
        return json.load(f)

@lru_cache(maxsize=None)
def load_system_config() -> Dict:
    """Load system configuration (decimal precision, simulation and output defaults)."""
    with open(CONFIG_DIR / "system.json", 'r') as f:
        return json.load(f)

def get_limit(name: str) -> int:
    """Get a single guard limit, falling back to the built-in default."""
    try:
        limits = load_limits_config()
    except (FileNotFoundError, json.JSONDecodeError):
        limits = {}
    if name not in limits and name not in DEFAULT_LIMITS:
        raise KeyError(f"Unknown limit: {name}")
    return int(limits.get(name, DEFAULT_LIMITS.get(name)))

def get_simulation_defaults() -> Dict:
    """Get Monte Carlo defaults (trials, seed, block_size, workers)."""
    try:
        configured = load_system_config().get('simulation', {})
    except (FileNotFoundError, json.JSONDecodeError):
        configured = {}
    return {**DEFAULT_SIMULATION, **configured}

def get_decimal_digits() -> int:
    """Get the default number of fractional digits for decimal renderings."""
    try:
        return int(load_system_config().get('decimal_digits', 12))
    except (FileNotFoundError, json.JSONDecodeError):
        return 12

def get_group_digits() -> bool:
    """Whether exact integers are printed with comma separators by default."""
    try:
        return bool(load_system_config().get('output', {}).get('group_digits', False))
    except (FileNotFoundError, json.JSONDecodeError):
        return False

def get_all_config() -> Dict:
    """Load all configuration at once."""
    return {
        'limits': load_limits_config(),
        'system': load_system_config(),
    }

def validate_config() -> Dict[str, List[str]]:
    """
    Validate all configuration files.
    Returns dict with any errors found, empty dict if all valid.
    """
    errors = {}

    try:
        limits = load_limits_config()

        missing = [k for k in DEFAULT_LIMITS if k not in limits]
        if missing:
            errors['limits.json'] = [f"Missing required keys: {', '.join(missing)}"]

        for key, value in limits.items():
            if key not in DEFAULT_LIMITS:
                errors.setdefault('limits.json', []).append(f"Unknown key: {key}")
            elif not isinstance(value, int) or isinstance(value, bool) or value < 1:
                errors.setdefault('limits.json', []).append(f"{key} must be a positive integer")

    except Exception as e:
        errors['limits.json'] = [f"Failed to load: {str(e)}"]

    try:
        system = load_system_config()

        digits = system.get('decimal_digits')
        if not isinstance(digits, int) or digits < 0:
            errors.setdefault('system.json', []).append("decimal_digits must be a non-negative integer")

        simulation = system.get('simulation', {})
        if not isinstance(simulation, dict):
            errors.setdefault('system.json', []).append("simulation must be dict")
        else:
            for key in ('trials', 'block_size', 'workers'):
                value = simulation.get(key, DEFAULT_SIMULATION[key])
                if not isinstance(value, int) or value < 1:
                    errors.setdefault('system.json', []).append(f"simulation.{key} must be a positive integer")
            seed = simulation.get('seed', DEFAULT_SIMULATION['seed'])
            # SeedSequence accepts any non-negative int; the CLI promises 64 bits.
            if not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
                errors.setdefault('system.json', []).append("simulation.seed must be a 64-bit unsigned integer")

        output = system.get('output', {})
        if not isinstance(output, dict):
            errors.setdefault('system.json', []).append("output must be dict")
        elif not isinstance(output.get('group_digits', False), bool):
            errors.setdefault('system.json', []).append("output.group_digits must be true or false")

    except Exception as e:
        errors['system.json'] = [f"Failed to load: {str(e)}"]

    return errors

if __name__ == "__main__":
    # Test the config loader
    print("Testing configuration loader...")
    print("=" * 60)

    try:
        config = get_all_config()

        print(f"\n✅ Limits config loaded:")
        for key, value in config['limits'].items():
            print(f"   {key}: {value}")

        print(f"\n✅ System config loaded:")
        print(f"   Decimal digits: {get_decimal_digits()}")
        print(f"   Simulation: {get_simulation_defaults()}")

        print(f"\n🔍 Running validation...")
        errors = validate_config()

        if errors:
            print("\n❌ Validation errors found:")
            for file, error_list in errors.items():
                print(f"\n  {file}:")
                for error in error_list:
                    print(f"    - {error}")
        else:
            print("\n✅ All configuration files valid!")

        print("\n" + "=" * 60)
        print("Configuration loader test complete!")

    except Exception as e:
        print(f"\n❌ Error during testing: {e}")
        import traceback
        traceback.print_exc()
