"""
Dependency Injection Container
Manages service instantiation, lifecycle, and dependency resolution
"""
import logging
import os
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TypeVar

from dotenv import load_dotenv

from src.infrastructure.config.file_config_store import FileConfigStore
from src.infrastructure.logging.file_log_store import FileLogStore
from src.infrastructure.storage.json_storage import JSONStorageBackend
from src.services.config_service import ConfigurationService
from src.services.diagnostics_orchestrator import DiagnosticsOrchestrator
from src.services.logging_service import RunLogService
from src.services.storage_service import ReportStorageService

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("config/dlab.json")
DEFAULT_LOG_PATH = Path("logs/runs")
DEFAULT_STORAGE_PATH = Path("data/runs")

T = TypeVar("T")


def _env_path(name: str, default: Path) -> Path:
    value = os.getenv(name)
    return Path(value) if value else default


class DIContainer:
    """
    Lazily built, cached services of one dlab process.

    Explicit paths win over DLAB_CONFIG_PATH, DLAB_LOG_PATH and
    DLAB_STORAGE_PATH, which win over the defaults.
    """

    def __init__(self, config_path: Path = None, log_path: Path = None, storage_path: Path = None):
        self.config_path = Path(config_path) if config_path else _env_path('DLAB_CONFIG_PATH', DEFAULT_CONFIG_PATH)
        self.log_path = Path(log_path) if log_path else _env_path('DLAB_LOG_PATH', DEFAULT_LOG_PATH)
        self.storage_path = Path(storage_path) if storage_path else _env_path('DLAB_STORAGE_PATH', DEFAULT_STORAGE_PATH)
        self._singletons: Dict[str, Any] = {}
        logger.debug(
            f"Container paths: settings {self.config_path}, audit {self.log_path}, records {self.storage_path}"
        )

    def _singleton(self, name: str, build: Callable[[], T]) -> T:
        if name not in self._singletons:
            logger.debug(f"Building {name}")
            self._singletons[name] = build()
        return self._singletons[name]

    def get_file_config_store(self) -> FileConfigStore:
        return self._singleton('settings_store', lambda: FileConfigStore(self.config_path))

    def get_file_log_store(self) -> FileLogStore:
        return self._singleton('audit_store', lambda: FileLogStore(self.log_path))

    def get_storage_backend(self) -> JSONStorageBackend:
        return self._singleton('record_backend', lambda: JSONStorageBackend(self.storage_path))

    def get_configuration_service(self) -> ConfigurationService:
        return self._singleton('settings', lambda: ConfigurationService(self.get_file_config_store()))

    def get_run_log_service(self) -> RunLogService:
        return self._singleton('run_log', lambda: RunLogService(self.get_file_log_store()))

    def get_storage_service(self) -> ReportStorageService:
        return self._singleton('reports', lambda: ReportStorageService(self.get_storage_backend()))

    def get_diagnostics_orchestrator(self) -> DiagnosticsOrchestrator:
        """Workflow over settings, audit log and record storage, sharing their singletons."""
        return self._singleton('workflow', lambda: DiagnosticsOrchestrator(
            self.get_configuration_service(),
            self.get_run_log_service(),
            self.get_storage_service(),
        ))

    def clear(self):
        """Drop every cached service; the next getter call rebuilds it."""
        logger.debug(f"Dropping {len(self._singletons)} cached services")
        self._singletons.clear()


_global_container: Optional[DIContainer] = None


def get_container(config_path: Path = None, log_path: Path = None,
                  storage_path: Path = None) -> DIContainer:
    """
    Process-wide container; paths only apply when it is first built.

    Returns:
        Global DIContainer instance
    """
    global _global_container

    if _global_container is None:
        _global_container = DIContainer(config_path, log_path, storage_path)

    return _global_container


def reset_container():
    """Forget the global container so the next get_container builds a fresh one."""
    global _global_container
    if _global_container:
        _global_container.clear()
    _global_container = None
