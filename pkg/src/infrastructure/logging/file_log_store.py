"""
File-based Run Log Store
Handles per-day JSON files recording diagnostic and verification runs
"""
import json
import logging
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

DATE_FORMAT = "%Y-%m-%d"


class FileLogStore:
    """
    Low-level JSON audit log file storage.
    One file per calendar day, each holding a list of entries in append order.
    """

    def __init__(self, log_path: Path):
        """
        Initialize file log store.

        Args:
            log_path: Directory for the per-day files (e.g. logs/runs)
        """
        self.log_path = Path(log_path)
        self.log_path.mkdir(parents=True, exist_ok=True)
        logger.info(f"FileLogStore initialized with path: {self.log_path}")

    def append(self, log_entry: Dict[str, Any], now: Optional[datetime] = None) -> None:
        """
        Append a log entry to today's file.

        Args:
            log_entry: JSON-ready entry
            now: Clock override for the file date
        """
        try:
            log_date = (now or datetime.now()).strftime(DATE_FORMAT)
            log_file = self.log_path / f"{log_date}.json"

            logs = []
            if log_file.exists():
                with open(log_file, 'r') as f:
                    logs = json.load(f)

            logs.append(log_entry)

            with open(log_file, 'w') as f:
                json.dump(logs, f, indent=2)

            logger.info(f"Appended log entry to {log_file}")
        except Exception as e:
            logger.error(f"Failed to append log entry: {e}")
            raise

    def load_recent(self, days: int = 30, now: Optional[datetime] = None) -> List[Dict[str, Any]]:
        """
        Load entries from the last N days, newest file first, append order within a file.

        Args:
            days: Number of days to look back
            now: Clock override for the cutoff

        Returns:
            List of log entries
        """
        cutoff = ((now or datetime.now()) - timedelta(days=days)).strftime(DATE_FORMAT)
        logs = []
        for log_file in sorted(self.log_path.glob("*.json"), reverse=True):
            if log_file.stem < cutoff:
                continue
            try:
                with open(log_file, 'r') as f:
                    logs.extend(json.load(f))
            except Exception as e:
                logger.warning(f"Failed to load {log_file}: {e}")

        logger.info(f"Loaded {len(logs)} log entries")
        return logs

    def load_command_history(self, command: str, days: int = 30) -> List[Dict[str, Any]]:
        """
        Entries of one CLI command (e.g. 'verify', 'diag').

        Args:
            command: Command name stored in the entry
            days: Number of days to look back
        """
        entries = [log for log in self.load_recent(days) if log.get('command') == command]
        logger.info(f"Loaded {len(entries)} logs for {command}")
        return entries
