"""
File-based Configuration Store
Handles JSON file I/O for diagnostic settings
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)


class FileConfigStore:
    """
    Low-level JSON settings file storage.
    Responsible only for file I/O operations.
    """

    def __init__(self, config_path: Path):
        """
        Initialize file config store.

        Args:
            config_path: Path to the settings JSON file (e.g. config/dlab.json)
        """
        self.config_path = Path(config_path)
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        logger.info(f"FileConfigStore initialized with path: {self.config_path}")

    def load(self) -> Dict[str, Any]:
        """
        Load settings from the JSON file.

        Returns:
            Settings dictionary, empty if the file is missing or unreadable
        """
        try:
            if not self.config_path.exists():
                logger.info(f"Config file not found, using defaults: {self.config_path}")
                return {}
            with open(self.config_path, 'r') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                logger.warning(f"Ignoring non-object config in {self.config_path}")
                return {}
            logger.info(f"Loaded config from {self.config_path}")
            return data
        except Exception as e:
            logger.error(f"Failed to load config: {e}")
            return {}

    def save(self, data: Dict[str, Any]) -> None:
        """
        Save settings to the JSON file.

        Args:
            data: Settings dictionary
        """
        try:
            with open(self.config_path, 'w') as f:
                json.dump(data, f, indent=2, sort_keys=True)
            logger.info(f"Saved config to {self.config_path}")
        except Exception as e:
            logger.error(f"Failed to save config: {e}")
            raise
