"""
Diagnostics Orchestrator Service
High-level service that saves verification and diagnostic runs and audits them
"""
import logging
from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Tuple

from src.services.interfaces import ReportStorage, RunLog, SettingsService

logger = logging.getLogger(__name__)


@dataclass
class RunRecord:
    """A saved CLI run"""
    command: str  # verify, diag
    timestamp: str
    outcome: str
    payload: Dict[str, Any]
    settings: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class DiagnosticsOrchestrator:
    """
    High-level orchestrator for run persistence.
    Coordinates operations across Configuration, RunLog and ReportStorage services.
    """

    def __init__(self, config_service: SettingsService,
                 run_log_service: RunLog,
                 storage_service: ReportStorage):
        """
        Initialize the orchestrator with service dependencies.

        Args:
            config_service: Settings provider (ConfigurationService)
            run_log_service: Audit trail (RunLogService)
            storage_service: Record store (ReportStorageService)
        """
        self.config = config_service
        self.run_log = run_log_service
        self.storage = storage_service
        logger.info("DiagnosticsOrchestrator initialized")

    def _persist(self, record: RunRecord, details: Dict[str, Any]) -> Tuple[bool, str]:
        key = self.storage.save_record(record.to_dict())
        if key is None:
            return False, "Failed to save run record to storage"
        try:
            self.run_log.log_run(record.command, record.outcome, details, record_key=key)
        except Exception as e:
            # Record is already on disk; the audit entry is best effort.
            logger.warning(f"Saved {key} but could not append audit entry: {e}")
        return True, f"Saved {record.command} run as {key}"

    def execute_verification_workflow(self, rows: List[Dict[str, Any]]) -> Tuple[bool, str]:
        """
        Save an identity-suite run:
        1. Validate the rows
        2. Save the record
        3. Append an audit entry

        Args:
            rows: IdentityRow dictionaries

        Returns:
            Tuple of (success, message)
        """
        try:
            if not rows:
                return False, "Invalid verification run: no rows"
            if any('id' not in r or 'passed' not in r for r in rows):
                return False, "Invalid verification run: rows need 'id' and 'passed'"
            failed = [r['id'] for r in rows if not r['passed']]
            outcome = 'passed' if not failed else 'failed'
            record = RunRecord(
                command='verify',
                timestamp=datetime.now().isoformat(),
                outcome=outcome,
                payload={'rows': rows},
                settings=self.config.get_settings(),
            )
            details = {'total': len(rows), 'failed': len(failed), 'failed_ids': failed}
            return self._persist(record, details)
        except Exception as e:
            logger.error(f"Verification workflow failed: {e}")
            return False, f"Verification workflow failed: {e}"

    def execute_diagnostic_workflow(self, report: Dict[str, Any], space: Dict[str, Any],
                                    point: Dict[str, float]) -> Tuple[bool, str]:
        """
        Save a diagnostic report with the space and point it was computed for.

        Args:
            report: DiagnosticReport dictionary
            space: Space JSON object
            point: Point as an index map

        Returns:
            Tuple of (success, message)
        """
        try:
            if not report or 'verdict' not in report or 'property' not in report:
                return False, "Invalid diagnostic report: missing property or verdict"
            if not space or 'type' not in space:
                return False, "Invalid diagnostic run: missing space"
            record = RunRecord(
                command='diag',
                timestamp=datetime.now().isoformat(),
                outcome=report['verdict'],
                payload={'report': report, 'space': space, 'point': point},
                settings=self.config.get_settings(),
            )
            details = {
                'property': report['property'],
                'space_type': space['type'],
                'deficiency': report.get('deficiency'),
            }
            return self._persist(record, details)
        except Exception as e:
            logger.error(f"Diagnostic workflow failed: {e}")
            return False, f"Diagnostic workflow failed: {e}"

    def get_recent_runs(self, command: Optional[str] = None, days: int = 30) -> List[Dict[str, Any]]:
        return self.run_log.get_run_history(command=command, days=days)
