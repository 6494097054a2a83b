"""
Report storage module for verification and analysis reports.
"""

import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class ReportStorage:
    """Writes JSON reports and the per-entry verification log."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize report storage with configuration.

        Args:
            config: ``report_dir``, ``log_file`` and ``save_reports``
        """
        self.config = config
        self.logger = logging.getLogger("storage.report")

        self.report_dir = config.get("report_dir", "reports")
        self.log_file = config.get("log_file", os.path.join("logs", "verification.jsonl"))
        self.save_reports = config.get("save_reports", True)

    def _get_timestamp(self) -> str:
        return datetime.now().strftime("%Y-%m-%d %H:%M:%S")

    def save_report(self, report: Any, kind: str, json_path: Optional[str] = None) -> List[str]:
        """
        Save a report under a timestamped name in the report directory and,
        if given, at ``json_path``.

        Args:
            report: JSON-serialisable report
            kind: Report kind used in the file name (``verify``, ``gleason``, ...)
            json_path: Extra destination requested on the command line

        Returns:
            Paths written
        """
        paths = []
        if self.save_reports:
            os.makedirs(self.report_dir, exist_ok=True)
            stamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
            paths.append(os.path.join(self.report_dir, f"{kind}_{stamp}.json"))
        if json_path:
            parent = os.path.dirname(json_path)
            if parent:
                os.makedirs(parent, exist_ok=True)
            paths.append(json_path)

        for path in paths:
            with open(path, "w", encoding="utf-8") as f:
                json.dump(report, f, indent=2)
                f.write("\n")
            self.logger.info(f"Saved {kind} report to {path}")
        return paths

    def load_report(self, path: str) -> Any:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    def list_reports(self, kind: Optional[str] = None) -> List[str]:
        """Saved reports, oldest first."""
        if not os.path.isdir(self.report_dir):
            return []
        prefix = f"{kind}_" if kind else ""
        names = sorted(name for name in os.listdir(self.report_dir) if name.startswith(prefix) and name.endswith(".json"))
        return [os.path.join(self.report_dir, name) for name in names]

    def log_entry(self, result: Dict[str, Any]):
        """
        Append one verification result to the JSON-lines log.

        Args:
            result: Entry result from the validation pipeline
        """
        try:
            log_entry = {
                "id": result.get("id"),
                "timestamp": self._get_timestamp(),
                "passed": result.get("passed"),
                "checks": {check["name"]: check["status"] for check in result.get("checks", [])},
            }
            parent = os.path.dirname(self.log_file)
            if parent:
                os.makedirs(parent, exist_ok=True)
            with open(self.log_file, "a", encoding="utf-8") as f:
                f.write(json.dumps(log_entry) + "\n")
        except Exception as e:
            self.logger.error(f"Error logging verification result: {str(e)}")
