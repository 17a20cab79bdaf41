"""
Test doubles for the storage and run log services
"""


class FailingStorage:
    """ReportStorage whose saves always fail."""

    def save_record(self, record):
        return None


class FailingRunLog:
    """RunLog whose appends always raise."""

    def log_run(self, command, outcome, details=None, record_key=None):
        raise OSError("disk full")
