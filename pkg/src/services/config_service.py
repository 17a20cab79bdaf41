"""
Configuration Service Implementation
Wraps the configuration store and validates diagnostic settings
"""
import copy
import logging
from typing import Any, Dict, Tuple

from src.infrastructure.config.file_config_store import FileConfigStore

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigurationService:
    """
    Business logic service for settings management.
    Implements the ConfigService and SettingsService Protocols.
    """

    DEFAULT_SETTINGS: Dict[str, Any] = {
        'nabla_eps': 1e-6,
        'alpha_grid': [0.5, 0.25, 0.1, 0.01],
        'midpoint_cap': 12,
        'sweep_max_n': 16,
        'sweep_seed': 2024,
        'sweep_extreme_samples': 16,
        'log_level': 'WARNING',
    }

    def __init__(self, config_store: FileConfigStore):
        """
        Initialize configuration service with a config store dependency.

        Args:
            config_store: FileConfigStore instance for file I/O
        """
        self.store = config_store
        self.settings = self._load_settings()
        logger.info("ConfigurationService initialized")

    def _load_settings(self) -> Dict[str, Any]:
        """Stored settings layered over the defaults; invalid files fall back to defaults."""
        merged = copy.deepcopy(self.DEFAULT_SETTINGS)
        loaded = self.store.load()
        if loaded:
            merged.update({k: v for k, v in loaded.items() if k in self.DEFAULT_SETTINGS})
            is_valid, message = self.validate_settings(merged)
            if not is_valid:
                logger.warning(f"Ignoring stored settings: {message}")
                return copy.deepcopy(self.DEFAULT_SETTINGS)
            logger.info("Loaded settings from configuration store")
        return merged

    def _save_settings(self, settings: Dict[str, Any]) -> None:
        try:
            self.store.save(settings)
        except Exception as e:
            logger.error(f"Failed to save settings: {e}")

    # ConfigService Protocol methods
    def load(self) -> Dict[str, Any]:
        return copy.deepcopy(self.settings)

    def save(self, data: Dict[str, Any]) -> None:
        self.import_settings(data)

    # SettingsService Protocol methods
    def get_setting(self, name: str) -> Any:
        """
        Current value of a setting.

        Raises:
            KeyError: for unknown setting names
        """
        if name not in self.DEFAULT_SETTINGS:
            raise KeyError(f"Unknown setting {name!r}")
        return copy.deepcopy(self.settings[name])

    def get_settings(self) -> Dict[str, Any]:
        return copy.deepcopy(self.settings)

    def set_setting(self, name: str, value: Any) -> None:
        """
        Change one setting and persist.

        Raises:
            ValueError: if the resulting settings are invalid
        """
        candidate = dict(self.settings)
        candidate[name] = value
        is_valid, message = self.validate_settings(candidate)
        if not is_valid:
            raise ValueError(message)
        self.settings = candidate
        self._save_settings(self.settings)
        logger.info(f"Updated setting {name}")

    def validate_settings(self, settings: Dict[str, Any]) -> Tuple[bool, str]:
        """
        Validate a full settings dictionary.

        Returns:
            Tuple of (is_valid, message)
        """
        unknown = sorted(set(settings) - set(self.DEFAULT_SETTINGS))
        if unknown:
            return False, f"Unknown settings: {', '.join(unknown)}"
        eps = settings.get('nabla_eps')
        if not isinstance(eps, (int, float)) or not 0 < eps < 1:
            return False, f"nabla_eps must lie in (0, 1), got {eps!r}"
        alphas = settings.get('alpha_grid')
        if not isinstance(alphas, list) or not alphas or not all(
            isinstance(a, (int, float)) and 0 < a <= 1 for a in alphas
        ):
            return False, "alpha_grid must be a nonempty list of values in (0, 1]"
        for key in ('midpoint_cap', 'sweep_extreme_samples'):
            value = settings.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                return False, f"{key} must be a nonnegative integer, got {value!r}"
        max_n = settings.get('sweep_max_n')
        if not isinstance(max_n, int) or not 2 <= max_n <= 16:
            return False, f"sweep_max_n must lie in 2..16, got {max_n!r}"
        if not isinstance(settings.get('sweep_seed'), int):
            return False, "sweep_seed must be an integer"
        if settings.get('log_level') not in LOG_LEVELS:
            return False, f"log_level must be one of {', '.join(LOG_LEVELS)}"
        return True, "Settings are valid"

    def reset_settings(self) -> None:
        self.settings = copy.deepcopy(self.DEFAULT_SETTINGS)
        self._save_settings(self.settings)
        logger.info("Reset all settings to defaults")

    def export_settings(self) -> Dict[str, Any]:
        return copy.deepcopy(self.settings)

    def import_settings(self, settings_data: Dict[str, Any]) -> None:
        """
        Replace settings with defaults overlaid by the given values.

        Raises:
            ValueError: if the result is invalid
        """
        candidate = copy.deepcopy(self.DEFAULT_SETTINGS)
        candidate.update(settings_data)
        is_valid, message = self.validate_settings(candidate)
        if not is_valid:
            raise ValueError(message)
        self.settings = candidate
        self._save_settings(self.settings)
        logger.info("Imported settings from external source")
