"""
Service Layer Protocols (Interfaces)
Defines contracts for the application services using Python Protocols
"""
from typing import Any, Dict, List, Optional, Protocol, Tuple


class ConfigService(Protocol):
    """
    Protocol for configuration persistence.
    """

    def load(self) -> Dict[str, Any]:
        """
        Load configuration data.

        Returns:
            Configuration data dictionary
        """
        ...

    def save(self, data: Dict[str, Any]) -> None:
        """
        Save configuration data.

        Args:
            data: Configuration data to save
        """
        ...


class SettingsService(Protocol):
    """
    Protocol for validated diagnostic settings.
    """

    def get_setting(self, name: str) -> Any:
        ...

    def get_settings(self) -> Dict[str, Any]:
        ...

    def set_setting(self, name: str, value: Any) -> None:
        """
        Raises:
            ValueError: If the new value is invalid
        """
        ...

    def validate_settings(self, settings: Dict[str, Any]) -> Tuple[bool, str]:
        """
        Returns:
            Tuple of (is_valid, message)
        """
        ...

    def reset_settings(self) -> None:
        ...


class RunLog(Protocol):
    """
    Protocol for the run audit trail.
    """

    def append(self, log_entry: Dict[str, Any]) -> None:
        ...

    def load_recent(self, days: int = 30) -> List[Dict[str, Any]]:
        ...

    def log_run(self, command: str, outcome: str, details: Optional[Dict[str, Any]] = None,
                record_key: Optional[str] = None) -> Dict[str, Any]:
        """
        Append one audit entry for a finished run.

        Returns:
            The entry written
        """
        ...

    def get_run_history(self, command: Optional[str] = None, days: int = 30) -> List[Dict[str, Any]]:
        ...


class ReportStorage(Protocol):
    """
    Protocol for saved run records.
    """

    def save_record(self, record: Dict[str, Any]) -> Optional[str]:
        """
        Save a record.

        Returns:
            Storage key, or None on failure
        """
        ...

    def load_all_records(self) -> List[Dict[str, Any]]:
        ...

    def get_record_count(self) -> int:
        ...

    def get_records_by_command(self, command: str) -> List[Dict[str, Any]]:
        ...

    def delete_record(self, key: str) -> bool:
        ...


class DiagnosticsWorkflow(Protocol):
    """
    Protocol for the orchestrator that persists and audits runs.
    """

    def execute_verification_workflow(self, rows: List[Dict[str, Any]]) -> Tuple[bool, str]:
        ...

    def execute_diagnostic_workflow(self, report: Dict[str, Any], space: Dict[str, Any],
                                    point: Dict[str, float]) -> Tuple[bool, str]:
        ...
