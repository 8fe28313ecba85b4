"""Configuration management for the ZAMO toolkit."""

from pathlib import Path
from typing import List, Optional, Union
import yaml
from pydantic import BaseModel, ConfigDict, field_validator
from .models.enums import InferenceRule, ReportFormat
from .utils.logger import get_logger

logger = get_logger(__name__)


class Config(BaseModel):
    """System configuration."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    # Paths
    config_file: Path
    fixtures_path: Path = Path("fixtures")

    # System settings
    project_name: str = "ZAMO Knowledge Graph Toolkit"
    version: str = "1.0.0"
    log_level: str = "WARNING"

    # Reasoning
    rules: List[InferenceRule] = list(InferenceRule)

    # SAMOD
    max_workers: int = 1
    report_format: ReportFormat = ReportFormat.TEXT

    # Output
    csv_line_terminator: str = "\n"

    @field_validator('fixtures_path', mode='before')
    @classmethod
    def ensure_path(cls, v):
        """Ensure paths are Path objects."""
        return Path(v) if not isinstance(v, Path) else v

    @field_validator('max_workers')
    @classmethod
    def positive_workers(cls, v):
        """At least one worker."""
        if v < 1:
            raise ValueError('max_workers must be at least 1')
        return v

    @classmethod
    def from_yaml(cls, config_path: Union[str, Path]) -> "Config":
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to config.yaml

        Returns:
            Config instance
        """
        config_path = Path(config_path)

        if not config_path.exists():
            logger.warning(f"Config file not found: {config_path}, using defaults")
            return cls._default_config(config_path)

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                yaml_data = yaml.safe_load(f) or {}

            system = yaml_data.get('system') or {}
            reasoning = yaml_data.get('reasoning') or {}
            samod = yaml_data.get('samod') or {}
            output = yaml_data.get('output') or {}

            config_dict = {
                'config_file': config_path,
                'fixtures_path': (yaml_data.get('data') or {}).get('fixtures_path', 'fixtures'),
                'project_name': system.get('project_name', 'ZAMO Knowledge Graph Toolkit'),
                'version': system.get('version', '1.0.0'),
                'log_level': system.get('log_level', 'WARNING'),
                'rules': reasoning.get('rules', [r.value for r in InferenceRule]),
                'max_workers': samod.get('max_workers', 1),
                'report_format': samod.get('report_format', 'text'),
                'csv_line_terminator': output.get('csv_line_terminator', '\n'),
            }

            logger.info(f"Loaded configuration from {config_path}")
            return cls(**config_dict)

        except Exception as e:
            logger.error(f"Unusable config {config_path}: {e}, using defaults")
            return cls._default_config(config_path)

    @classmethod
    def _default_config(cls, config_path: Path) -> "Config":
        """Create default configuration."""
        return cls(config_file=config_path)


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        # Try to load from default location
        default_path = Path("config/config.yaml")
        _config = Config.from_yaml(default_path)
    return _config


def set_config(config: Config) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config
