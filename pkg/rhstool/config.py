"""Central configuration for rhs-tool.

This module provides a configuration system that merges settings from
multiple sources with clear precedence rules. Configuration can be specified via:

1. CLI arguments (highest precedence)
2. A solver YAML file (its ``config:`` section)
3. Environment variables (``RHS_`` prefix)
4. Code defaults (lowest precedence)

Example usage:
    config = get_config(
        cli_args={'jobs': 4, 'json': True},
        config_path=Path('solver.yaml'),
        use_env=True
    )

    print(f"Jobs: {config.search.jobs}")
    print(f"Brute guard: {config.guards.max_brute_size}")
"""

from dataclasses import dataclass, field, asdict
from typing import Optional, Dict, Any, List
import os
import yaml
from pathlib import Path


@dataclass
class GuardConfig:
    """Size guards for exponential procedures.

    Every brute-force oracle and every exponential solver checks its
    instance size against one of these limits first and refuses (exit
    code 2) rather than running unbounded.

    Attributes:
        max_brute_size: Limit on |X|+|I| (or |V|) for brute minimality checks
        max_sweep_free: Limit on free coordinates of the general ExtRHF sweep
        max_enum_oracle: Limit on |X|+|I| for the brute rhs enumerator
        max_rhf_oracle: Limit on |X| for the brute rhf enumerator
    """
    max_brute_size: int = field(
        default=24,
        metadata={
            'description': 'Largest |X|+|I| (or |V|) accepted by brute minimality checks',
            'range': '1 to 40',
            'example': '24'
        }
    )
    max_sweep_free: int = field(
        default=20,
        metadata={
            'description': 'Largest number of free coordinates for the general ExtRHF sweep',
            'range': '1 to 30',
            'example': '20'
        }
    )
    max_enum_oracle: int = field(
        default=20,
        metadata={
            'description': 'Largest |X|+|I| accepted by the brute rhs enumerator',
            'range': '1 to 30',
            'example': '20'
        }
    )
    max_rhf_oracle: int = field(
        default=12,
        metadata={
            'description': 'Largest |X| accepted by the brute rhf enumerator',
            'range': '1 to 16',
            'example': '12'
        }
    )


@dataclass
class SearchConfig:
    """Search behaviour.

    Attributes:
        jobs: Worker processes for partitioned brute-force sweeps
        check_measure: Assert branching-vector decreases in the enumerator
    """
    jobs: int = field(
        default=1,
        metadata={
            'description': 'Worker processes for brute-force sweeps (1 = in-process)',
            'range': '1 to 64',
            'example': '4'
        }
    )
    check_measure: bool = field(
        default=True,
        metadata={
            'description': 'Assert that each branch lowers the measure by its vector entry',
            'example': 'true'
        }
    )


@dataclass
class OutputConfig:
    """Output formatting.

    Attributes:
        json: Emit one JSON object per solution instead of text lines
        stats: Emit key=value statistics on standard error
    """
    json: bool = field(
        default=False,
        metadata={
            'description': 'Emit one JSON object per solution',
            'example': 'false'
        }
    )
    stats: bool = field(
        default=True,
        metadata={
            'description': 'Emit key=value statistics on standard error',
            'example': 'true'
        }
    )


@dataclass
class Config:
    """Central configuration for rhs-tool.

    Attributes:
        guards: Size guards for exponential procedures
        search: Search behaviour
        output: Output formatting
        verbose: Enable debug logging on standard error
        seed: Random seed for instance generators
    """
    guards: GuardConfig = field(default_factory=GuardConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    verbose: bool = field(
        default=False,
        metadata={
            'description': 'Enable debug logging on standard error',
            'example': 'false'
        }
    )
    seed: Optional[int] = field(
        default=None,
        metadata={
            'description': 'Random seed for instance generators',
            'range': '0 to 2**32-1 or None',
            'example': '7'
        }
    )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        """Create config from dictionary with selective merging.

        Unknown keys are ignored so older files keep loading.

        Example:
            config = Config.from_dict({
                'guards': {'max_brute_size': 16},
                'search': {'jobs': 2},
                'seed': 7
            })
        """
        config = cls()

        for section in ('guards', 'search', 'output'):
            if section in data and data[section]:
                target = getattr(config, section)
                for k, v in data[section].items():
                    if hasattr(target, k):
                        setattr(target, k, v)

        for k in ['verbose', 'seed']:
            if k in data:
                setattr(config, k, data[k])

        return config

    @classmethod
    def from_yaml(cls, path: Path) -> 'Config':
        """Load config from the ``config:`` section of a YAML file.

        Raises:
            FileNotFoundError: If the YAML file doesn't exist
            yaml.YAMLError: If the YAML file is malformed
        """
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        return cls.from_dict(data.get('config', {}) or {})

    @classmethod
    def from_env(cls) -> 'Config':
        """Create config from environment variables.

        Environment Variables:
            RHS_JOBS: Worker processes
            RHS_SEED: Generator seed
            RHS_MAX_BRUTE_SIZE: Brute minimality guard
            RHS_MAX_SWEEP_FREE: General ExtRHF sweep guard
            RHS_JSON: Emit JSON (any non-empty value other than 0)
        """
        config = cls()

        if os.getenv('RHS_JOBS'):
            config.search.jobs = int(os.getenv('RHS_JOBS'))

        if os.getenv('RHS_SEED'):
            config.seed = int(os.getenv('RHS_SEED'))

        if os.getenv('RHS_MAX_BRUTE_SIZE'):
            config.guards.max_brute_size = int(os.getenv('RHS_MAX_BRUTE_SIZE'))

        if os.getenv('RHS_MAX_SWEEP_FREE'):
            config.guards.max_sweep_free = int(os.getenv('RHS_MAX_SWEEP_FREE'))

        if os.getenv('RHS_JSON') and os.getenv('RHS_JSON') != '0':
            config.output.json = True

        return config

    def merge_cli_args(self, **kwargs) -> None:
        """Merge CLI arguments (highest precedence).

        ``None`` values mean "option not given" and leave the field alone.

        Example:
            config.merge_cli_args(jobs=4, json=True, seed=7)
        """
        if kwargs.get('jobs') is not None:
            self.search.jobs = kwargs['jobs']

        if kwargs.get('json') is not None:
            self.output.json = kwargs['json']

        if kwargs.get('stats') is not None:
            self.output.stats = kwargs['stats']

        if kwargs.get('max_brute_size') is not None:
            self.guards.max_brute_size = kwargs['max_brute_size']

        if kwargs.get('max_sweep_free') is not None:
            self.guards.max_sweep_free = kwargs['max_sweep_free']

        if kwargs.get('verbose') is not None:
            self.verbose = kwargs['verbose']

        if kwargs.get('seed') is not None:
            self.seed = kwargs['seed']

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []
        if self.search.jobs < 1:
            errors.append(f"jobs must be at least 1, got {self.search.jobs}")
        for name in ('max_brute_size', 'max_sweep_free', 'max_enum_oracle', 'max_rhf_oracle'):
            value = getattr(self.guards, name)
            if not isinstance(value, int) or value < 0:
                errors.append(f"{name} must be a non-negative integer, got {value!r}")
        if self.seed is not None and self.seed < 0:
            errors.append(f"seed must be non-negative, got {self.seed}")
        return errors

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return asdict(self)

    def summary(self) -> str:
        """Generate one-line summary of resolved configuration.

        Example:
            print(config.summary())
            # Output: "Config[jobs=1, brute<=24, sweep<=20, json=False, seed=None]"
        """
        return (
            f"Config[jobs={self.search.jobs}, "
            f"brute<={self.guards.max_brute_size}, "
            f"sweep<={self.guards.max_sweep_free}, "
            f"json={self.output.json}, "
            f"seed={self.seed}]"
        )


def get_config(cli_args: Optional[Dict] = None,
               config_path: Optional[Path] = None,
               use_env: bool = True) -> Config:
    """Get merged configuration from all sources with proper precedence.

    1. CLI arguments (highest priority)
    2. Solver YAML file
    3. Environment variables
    4. Code defaults (lowest priority)

    Raises:
        ValueError: If the merged configuration is invalid
    """
    config = Config()

    if use_env:
        env_config = Config.from_env()
        defaults = Config()
        if env_config.search.jobs != defaults.search.jobs:
            config.search.jobs = env_config.search.jobs
        if env_config.seed is not None:
            config.seed = env_config.seed
        if env_config.guards.max_brute_size != defaults.guards.max_brute_size:
            config.guards.max_brute_size = env_config.guards.max_brute_size
        if env_config.guards.max_sweep_free != defaults.guards.max_sweep_free:
            config.guards.max_sweep_free = env_config.guards.max_sweep_free
        if env_config.output.json:
            config.output.json = True

    if config_path and Path(config_path).exists():
        with open(config_path) as f:
            data = yaml.safe_load(f) or {}
        section = data.get('config', {}) or {}
        for name in ('guards', 'search', 'output'):
            target = getattr(config, name)
            for k, v in (section.get(name) or {}).items():
                if hasattr(target, k):
                    setattr(target, k, v)
        for k in ('verbose', 'seed'):
            if k in section:
                setattr(config, k, section[k])

    if cli_args:
        config.merge_cli_args(**cli_args)

    errors = config.validate()
    if errors:
        message = f"Configuration validation failed with {len(errors)} errors:\n"
        message += "\n".join(f"  - {error}" for error in errors)
        raise ValueError(message)

    return config
