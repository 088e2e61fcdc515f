"""Test central configuration system."""

import tempfile
from pathlib import Path

import pytest
import yaml

from rhstool.config import Config, GuardConfig, SearchConfig, get_config


@pytest.mark.unit
class TestConfigMerging:
    """Test configuration merging precedence."""

    def test_default_config(self):
        """Test default configuration values."""
        config = Config()

        assert config.guards.max_brute_size == 24
        assert config.guards.max_sweep_free == 20
        assert config.guards.max_enum_oracle == 20
        assert config.guards.max_rhf_oracle == 12
        assert config.search.jobs == 1
        assert config.search.check_measure is True
        assert config.output.json is False
        assert config.output.stats is True
        assert config.seed is None
        assert config.verbose is False

    def test_from_dict(self):
        """Test creating config from dictionary."""
        data = {
            'guards': {'max_brute_size': 16, 'max_rhf_oracle': 8},
            'search': {'jobs': 3},
            'output': {'json': True},
            'seed': 42,
            'verbose': True,
        }

        config = Config.from_dict(data)

        assert config.guards.max_brute_size == 16
        assert config.guards.max_rhf_oracle == 8
        assert config.guards.max_sweep_free == 20
        assert config.search.jobs == 3
        assert config.output.json is True
        assert config.seed == 42
        assert config.verbose is True

    def test_from_dict_ignores_unknown_keys(self):
        """Test unknown keys are skipped."""
        config = Config.from_dict({'guards': {'max_everything': 1}, 'colour': 'red'})
        assert config.guards == GuardConfig()

    def test_from_yaml(self):
        """Test loading config from the config: section of a YAML file."""
        yaml_content = """
config:
  guards:
    max_brute_size: 18
  search:
    check_measure: false
  seed: 999
"""
        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            f.write(yaml_content)
            yaml_path = Path(f.name)

        try:
            config = Config.from_yaml(yaml_path)
            assert config.guards.max_brute_size == 18
            assert config.search.check_measure is False
            assert config.seed == 999
        finally:
            yaml_path.unlink()

    def test_shipped_solver_yaml(self, instances_dir):
        """Test the example solver file loads and validates."""
        config = Config.from_yaml(instances_dir / 'solver.yaml')
        assert config.guards.max_enum_oracle == 18
        assert config.seed == 7
        assert config.validate() == []

    def test_env_override(self, monkeypatch):
        """Test environment variable overrides."""
        monkeypatch.setenv('RHS_JOBS', '4')
        monkeypatch.setenv('RHS_SEED', '54321')
        monkeypatch.setenv('RHS_MAX_BRUTE_SIZE', '10')
        monkeypatch.setenv('RHS_JSON', '1')

        config = Config.from_env()

        assert config.search.jobs == 4
        assert config.seed == 54321
        assert config.guards.max_brute_size == 10
        assert config.output.json is True

    def test_env_json_zero(self, monkeypatch):
        """Test RHS_JSON=0 leaves JSON output off."""
        monkeypatch.setenv('RHS_JSON', '0')
        assert Config.from_env().output.json is False

    def test_cli_highest_precedence(self):
        """Test that CLI args have highest precedence."""
        config = Config()
        config.search.jobs = 8

        config.merge_cli_args(jobs=2, json=True, stats=False, seed=777, max_sweep_free=5)

        assert config.search.jobs == 2
        assert config.output.json is True
        assert config.output.stats is False
        assert config.seed == 777
        assert config.guards.max_sweep_free == 5

    def test_cli_none_leaves_value(self):
        """Test None means the option was not given."""
        config = Config()
        config.merge_cli_args(jobs=None, json=None, seed=None)
        assert config.search.jobs == 1
        assert config.output.json is False

    def test_config_summary(self):
        """Test config summary string."""
        config = Config()
        config.seed = 42

        summary = config.summary()

        assert 'jobs=1' in summary
        assert 'brute<=24' in summary
        assert 'sweep<=20' in summary
        assert 'seed=42' in summary

    def test_to_dict(self):
        """Test serialization keeps the section layout."""
        data = Config().to_dict()
        assert data['guards']['max_brute_size'] == 24
        assert data['search']['jobs'] == 1


@pytest.mark.unit
class TestGetConfig:
    """Test get_config function with precedence."""

    def test_precedence_order(self, monkeypatch):
        """Test CLI over YAML over environment."""
        monkeypatch.setenv('RHS_JOBS', '6')
        monkeypatch.setenv('RHS_SEED', '1')
        solver_data = {'config': {'search': {'jobs': 3}, 'seed': 2}}

        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            yaml.dump(solver_data, f)
            solver_path = Path(f.name)

        try:
            config = get_config(cli_args={'seed': 5}, config_path=solver_path, use_env=True)
            assert config.seed == 5
            assert config.search.jobs == 3

            config = get_config(config_path=solver_path, use_env=True)
            assert config.seed == 2

            config = get_config(use_env=True)
            assert config.search.jobs == 6
        finally:
            solver_path.unlink()

    def test_partial_configs_merge(self):
        """Test that partial configs merge correctly."""
        config = get_config(cli_args={'seed': 100}, use_env=False)

        assert config.seed == 100
        assert config.guards.max_brute_size == 24
        assert config.output.stats is True

    def test_missing_file_ignored(self, tmp_path):
        """Test a missing solver file falls back to defaults."""
        config = get_config(config_path=tmp_path / 'absent.yaml', use_env=False)
        assert config.search.jobs == 1

    def test_invalid_config_rejected(self):
        """Test validation errors are aggregated into one ValueError."""
        with pytest.raises(ValueError) as exc_info:
            get_config(cli_args={'jobs': 0, 'seed': -1}, use_env=False)
        message = str(exc_info.value)
        assert '2 errors' in message
        assert 'jobs must be at least 1' in message
        assert 'seed must be non-negative' in message


@pytest.mark.unit
class TestGuardConfig:
    """Test guard configuration specifics."""

    def test_guard_metadata(self):
        """Test every guard documents its range."""
        from dataclasses import fields

        for f in fields(GuardConfig):
            assert 'description' in f.metadata
            assert 'range' in f.metadata

    def test_negative_guard_rejected(self):
        """Test a negative guard fails validation."""
        config = Config()
        config.guards.max_enum_oracle = -1
        errors = config.validate()
        assert len(errors) == 1
        assert 'max_enum_oracle' in errors[0]

    def test_search_defaults(self):
        """Test the in-process default."""
        assert SearchConfig().jobs == 1
