"""
Report Storage Service
Wraps the storage backend and names, saves and summarizes run records
"""
import logging
from collections import Counter
from datetime import datetime
from typing import Any, Dict, List, Optional

from src.infrastructure.storage.json_storage import JSONStorageBackend

logger = logging.getLogger(__name__)


class ReportStorageService:
    """
    Business logic service for saved verification and diagnostic runs.
    Implements the ReportStorage Protocol.
    """

    def __init__(self, storage_backend: JSONStorageBackend):
        """
        Initialize storage service with a backend dependency.

        Args:
            storage_backend: JSONStorageBackend instance
        """
        self.backend = storage_backend
        logger.info(f"ReportStorageService initialized with {type(storage_backend).__name__}")

    @staticmethod
    def _format_timestamp_for_key(timestamp_str: str) -> str:
        """
        Convert an ISO timestamp to a file-name fragment.

        Args:
            timestamp_str: ISO timestamp (e.g. '2026-03-01T14:30:00.123456')

        Returns:
            e.g. '2026-03-01_14-30-00-123456'
        """
        try:
            dt = datetime.fromisoformat(timestamp_str)
        except (TypeError, ValueError) as e:
            logger.warning(f"Could not parse timestamp {timestamp_str}: {e}")
            dt = datetime.now()
        return dt.strftime("%Y-%m-%d_%H-%M-%S-%f")

    def record_key(self, record: Dict[str, Any]) -> str:
        """<command>_<timestamp> key for a record."""
        command = record.get('command', 'run')
        return f"{command}_{self._format_timestamp_for_key(record.get('timestamp'))}"

    def save_record(self, record: Dict[str, Any]) -> Optional[str]:
        """
        Save a run record.

        Args:
            record: JSON-ready record with 'command' and 'timestamp'

        Returns:
            The storage key, or None when saving failed
        """
        key = self.record_key(record)
        if self.backend.save(key, record):
            return key
        return None

    def load_record(self, key: str) -> Dict[str, Any]:
        return self.backend.load(key)

    def load_all_records(self) -> List[Dict[str, Any]]:
        records = self.backend.query(limit=10000)
        logger.info(f"Loaded {len(records)} records from storage")
        return records

    def get_record_count(self) -> int:
        return self.backend.count()

    def get_records_by_command(self, command: str) -> List[Dict[str, Any]]:
        """
        All saved records of one command, most recent first.

        Args:
            command: 'verify' or 'diag'
        """
        return sorted(self.backend.list_by_command(command), key=lambda r: r.get('timestamp', ''), reverse=True)

    def delete_record(self, key: str) -> bool:
        """
        Delete a saved record.

        Args:
            key: Storage key, with or without the .json suffix
        """
        return self.backend.delete(key[:-5] if key.endswith('.json') else key)

    def get_storage_info(self) -> Dict[str, Any]:
        """
        Storage statistics.

        Returns:
            Totals overall and per command
        """
        try:
            records = self.load_all_records()
            by_command = Counter(r.get('command', 'unknown') for r in records)
            return {
                'total_records': len(records),
                'records_by_command': dict(sorted(by_command.items())),
                'storage_path': str(self.backend.storage_path),
            }
        except Exception as e:
            logger.error(f"Failed to get storage info: {e}")
            return {'error': str(e)}
