"""
JSON-based Storage Backend
Handles file I/O for saved run records
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class JSONStorageBackend:
    """
    JSON file-based storage backend, one file per run record.
    Responsible only for file I/O operations.
    """

    def __init__(self, storage_path: Path):
        """
        Initialize JSON storage backend.

        Args:
            storage_path: Directory holding <key>.json records (e.g. data/runs)
        """
        self.storage_path = Path(storage_path)
        self.storage_path.mkdir(parents=True, exist_ok=True)
        logger.info(f"JSONStorageBackend initialized with path: {self.storage_path}")

    def _records(self):
        for json_file in sorted(self.storage_path.glob("*.json"), reverse=True):
            try:
                with open(json_file, 'r') as f:
                    yield json.load(f)
            except Exception as e:
                logger.warning(f"Failed to load {json_file.name}: {e}")

    def save(self, key: str, data: Dict[str, Any]) -> bool:
        """
        Save a record to <key>.json.

        Returns:
            True if successful, False otherwise
        """
        try:
            file_path = self.storage_path / f"{key}.json"
            with open(file_path, 'w') as f:
                json.dump(data, f, indent=2)
            logger.info(f"Saved record to {file_path}")
            return True
        except Exception as e:
            logger.error(f"Failed to save record: {e}")
            return False

    def load(self, key: str) -> Dict[str, Any]:
        """
        Load a record by key.

        Returns:
            Record dictionary or empty dict if not found
        """
        try:
            file_path = self.storage_path / f"{key}.json"
            if not file_path.exists():
                logger.warning(f"File not found: {file_path}")
                return {}
            with open(file_path, 'r') as f:
                return json.load(f)
        except Exception as e:
            logger.error(f"Failed to load record: {e}")
            return {}

    def query(self, filters: Optional[Dict[str, Any]] = None, limit: int = 50) -> List[Dict[str, Any]]:
        """
        Records matching every filter item, newest key first.

        Args:
            filters: Field/value pairs (e.g. {'command': 'verify'})
            limit: Maximum number of results to return
        """
        records = []
        for record in self._records():
            if filters and any(record.get(k) != v for k, v in filters.items()):
                continue
            records.append(record)
            if len(records) >= limit:
                break
        logger.info(f"Queried {len(records)} records")
        return records

    def count(self) -> int:
        try:
            return len(list(self.storage_path.glob("*.json")))
        except Exception as e:
            logger.error(f"Failed to count records: {e}")
            return 0

    def list_by_command(self, command: str) -> List[Dict[str, Any]]:
        """All records written by one CLI command."""
        records = [r for r in self._records() if r.get('command') == command]
        logger.info(f"Found {len(records)} records for {command}")
        return records

    def delete(self, key: str) -> bool:
        """
        Delete a record file.

        Returns:
            True if a file was removed
        """
        try:
            file_path = self.storage_path / f"{key}.json"
            if file_path.exists():
                file_path.unlink()
                logger.info(f"Deleted {file_path}")
                return True
            logger.warning(f"File not found: {file_path}")
            return False
        except Exception as e:
            logger.error(f"Failed to delete record: {e}")
            return False
