"""
Run Log Service
Wraps the log store and keeps the audit trail of saved runs
"""
import logging
from collections import Counter
from datetime import datetime
from typing import Any, Dict, List, Optional

from src.infrastructure.logging.file_log_store import FileLogStore

logger = logging.getLogger(__name__)


class RunLogService:
    """
    Business logic service for the run audit trail.
    Implements the RunLog Protocol.
    """

    def __init__(self, log_store: FileLogStore):
        """
        Initialize run log service with a log store dependency.

        Args:
            log_store: FileLogStore instance for file I/O
        """
        self.store = log_store
        logger.info("RunLogService initialized")

    def append(self, log_entry: Dict[str, Any]) -> None:
        self.store.append(log_entry)

    def load_recent(self, days: int = 30) -> List[Dict[str, Any]]:
        return self.store.load_recent(days=days)

    def log_run(self, command: str, outcome: str, details: Optional[Dict[str, Any]] = None,
                record_key: Optional[str] = None) -> Dict[str, Any]:
        """
        Append one audit entry.

        Args:
            command: CLI command name ('verify', 'diag')
            outcome: Verdict or 'passed'/'failed'
            details: Command-specific summary (space, point, counts)
            record_key: Storage key of the saved record, if any

        Returns:
            The entry written
        """
        entry = {
            'timestamp': datetime.now().isoformat(),
            'command': command,
            'outcome': outcome,
            'details': details or {},
            'record_key': record_key,
        }
        self.store.append(entry)
        logger.info(f"Logged {command} run with outcome {outcome}")
        return entry

    def get_run_history(self, command: Optional[str] = None, days: int = 30) -> List[Dict[str, Any]]:
        """
        Audit entries, newest first.

        Args:
            command: Optional filter by command
            days: Number of days to look back
        """
        if command:
            entries = self.store.load_command_history(command, days=days)
        else:
            entries = self.load_recent(days=days)
        return sorted(entries, key=lambda x: x.get('timestamp', ''), reverse=True)

    def get_latest_run(self, command: Optional[str] = None) -> Optional[Dict[str, Any]]:
        history = self.get_run_history(command=command, days=365)
        return history[0] if history else None

    def get_summary_statistics(self, days: int = 365) -> Dict[str, Any]:
        """Counts of runs per command and per outcome."""
        history = self.get_run_history(days=days)
        if not history:
            return {'total_runs': 0, 'last_run': None, 'runs_by_command': {}, 'runs_by_outcome': {}}
        return {
            'total_runs': len(history),
            'last_run': history[0].get('timestamp'),
            'runs_by_command': dict(sorted(Counter(e.get('command') for e in history).items())),
            'runs_by_outcome': dict(sorted(Counter(e.get('outcome') for e in history).items())),
        }
