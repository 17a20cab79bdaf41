"""
Service Accessor Functions
Convenient functions for the CLI layer to reach services without container knowledge
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from src.di.container import get_container
from src.services.config_service import ConfigurationService
from src.services.interfaces import DiagnosticsWorkflow
from src.services.logging_service import RunLogService
from src.services.storage_service import ReportStorageService

logger = logging.getLogger(__name__)


def get_config_service() -> ConfigurationService:
    return get_container().get_configuration_service()


def get_run_log_service() -> RunLogService:
    return get_container().get_run_log_service()


def get_storage_service() -> ReportStorageService:
    return get_container().get_storage_service()


def get_orchestrator() -> DiagnosticsWorkflow:
    return get_container().get_diagnostics_orchestrator()


def get_setting(name: str) -> Any:
    """
    Current value of a diagnostic setting.

    Args:
        name: Setting name (e.g. 'nabla_eps')
    """
    return get_config_service().get_setting(name)


def get_settings() -> Dict[str, Any]:
    return get_config_service().get_settings()


def save_verification_run(rows: List[Dict[str, Any]]) -> Tuple[bool, str]:
    """
    Persist an identity-suite run and audit it.

    Returns:
        Tuple of (success, message)
    """
    return get_orchestrator().execute_verification_workflow(rows)


def save_diagnostic_run(report: Dict[str, Any], space: Dict[str, Any],
                        point: Dict[str, float]) -> Tuple[bool, str]:
    """
    Persist a diagnostic report and audit it.

    Returns:
        Tuple of (success, message)
    """
    return get_orchestrator().execute_diagnostic_workflow(report, space, point)


def get_run_history(command: Optional[str] = None, days: int = 30) -> List[Dict[str, Any]]:
    """
    Audit entries, newest first.

    Args:
        command: Optional filter by command
        days: Number of days to look back
    """
    return get_run_log_service().get_run_history(command=command, days=days)
