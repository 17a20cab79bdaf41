"""
Unit tests for DiagnosticsOrchestrator
"""
import pytest
import tempfile
from pathlib import Path
from src.infrastructure.config.file_config_store import FileConfigStore
from src.infrastructure.logging.file_log_store import FileLogStore
from src.infrastructure.storage.json_storage import JSONStorageBackend
from src.services.config_service import ConfigurationService
from src.services.diagnostics_orchestrator import DiagnosticsOrchestrator, RunRecord
from src.services.logging_service import RunLogService
from src.services.storage_service import ReportStorageService
from tests.mocks import FailingRunLog, FailingStorage


@pytest.fixture
def services():
    """Real services over temporary paths."""
    with tempfile.TemporaryDirectory() as tmpdir:
        tmpdir_path = Path(tmpdir)
        yield {
            'config': ConfigurationService(FileConfigStore(tmpdir_path / 'dlab.json')),
            'run_log': RunLogService(FileLogStore(tmpdir_path / 'logs')),
            'storage': ReportStorageService(JSONStorageBackend(tmpdir_path / 'runs')),
        }


@pytest.fixture
def orchestrator(services):
    return DiagnosticsOrchestrator(services['config'], services['run_log'], services['storage'])


REPORT = {'property': 'DPoint', 'verdict': 'Fails', 'deficiency': 1.8}
SPACE = {'type': 'lp', 'p': 1, 'dim': 3}


def test_run_record_to_dict():
    """Test the saved record layout."""
    record = RunRecord('diag', '2026-03-01T10:00:00', 'Fails', {'a': 1})
    assert record.to_dict() == {
        'command': 'diag', 'timestamp': '2026-03-01T10:00:00', 'outcome': 'Fails',
        'payload': {'a': 1}, 'settings': {},
    }


def test_verification_workflow_passed(orchestrator, services):
    """Test an all-passing run is saved and audited as passed."""
    success, message = orchestrator.execute_verification_workflow([{'id': 'a', 'passed': True}])
    assert success
    assert 'verify' in message

    entry = services['run_log'].get_latest_run()
    assert entry['outcome'] == 'passed'
    assert entry['details'] == {'total': 1, 'failed': 0, 'failed_ids': []}
    record = services['storage'].load_record(entry['record_key'])
    assert record['settings']['midpoint_cap'] == 12


@pytest.mark.parametrize("rows", [[], [{'id': 'a'}], [{'passed': True}]])
def test_verification_workflow_rejects_bad_rows(orchestrator, services, rows):
    """Test invalid rows are refused without writing anything."""
    success, message = orchestrator.execute_verification_workflow(rows)
    assert not success
    assert 'Invalid' in message
    assert services['storage'].get_record_count() == 0


def test_diagnostic_workflow(orchestrator, services):
    """Test a diagnostic report is saved with the space and point."""
    success, message = orchestrator.execute_diagnostic_workflow(REPORT, SPACE, {'1': 1.0})
    assert success
    assert message.startswith('Saved diag run as diag_')

    entry = orchestrator.get_recent_runs(command='diag')[0]
    assert entry['outcome'] == 'Fails'
    assert entry['details'] == {'property': 'DPoint', 'space_type': 'lp', 'deficiency': 1.8}
    record = services['storage'].get_records_by_command('diag')[0]
    assert record['payload']['point'] == {'1': 1.0}


@pytest.mark.parametrize("report, space", [
    ({}, SPACE),
    ({'property': 'Nabla'}, SPACE),
    (REPORT, {}),
    (REPORT, {'p': 1}),
])
def test_diagnostic_workflow_rejects_bad_input(orchestrator, report, space):
    """Test missing verdicts or space types are refused."""
    success, _ = orchestrator.execute_diagnostic_workflow(report, space, {})
    assert not success


def test_storage_failure(services):
    """Test a failed save is reported and not audited."""
    orchestrator = DiagnosticsOrchestrator(services['config'], services['run_log'], FailingStorage())
    success, message = orchestrator.execute_diagnostic_workflow(REPORT, SPACE, {})
    assert not success
    assert 'Failed to save' in message
    assert services['run_log'].get_latest_run() is None


def test_audit_failure_keeps_record(services):
    """Test a failing audit append still reports the saved record."""
    orchestrator = DiagnosticsOrchestrator(services['config'], FailingRunLog(), services['storage'])
    success, _ = orchestrator.execute_verification_workflow([{'id': 'a', 'passed': False}])
    assert success
    assert services['storage'].get_record_count() == 1
