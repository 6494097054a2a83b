"""
Verification processor: runs the validation pipeline over catalog entries in parallel.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

import psutil
from tqdm import tqdm

from catalog.builder import CatalogBuilder
from catalog.catalog_loader import CatalogEntry
from storage.report_storage import ReportStorage
from validators.validation_pipeline import FAIL, PASS, SKIPPED, ValidationPipeline

logger = logging.getLogger(__name__)


class VerificationProcessor:
    """Module for verifying batches of catalog entries."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the verification processor with configuration.

        Args:
            config: ``max_workers``, ``memory_threshold`` (percent), ``resource_wait``,
                ``max_resource_waits`` and ``show_progress``
        """
        self.config = config
        self.logger = logging.getLogger("processor.verify")

        self.max_workers = max(1, int(config.get("max_workers", 1)))
        self.memory_threshold = config.get("memory_threshold", 90)  # percent
        self.resource_wait = config.get("resource_wait", 5.0)
        self.max_resource_waits = config.get("max_resource_waits", 12)
        self.show_progress = config.get("show_progress", True)

        self.validation_pipeline: Optional[ValidationPipeline] = None
        self.report_storage: Optional[ReportStorage] = None
        self._lock = threading.Lock()

    def set_validation_pipeline(self, validation_pipeline: ValidationPipeline):
        """Set the validation pipeline."""
        self.validation_pipeline = validation_pipeline

    def set_report_storage(self, report_storage: ReportStorage):
        """Set the storage that receives one log line per verified entry."""
        self.report_storage = report_storage

    def _check_resources(self) -> bool:
        try:
            memory_percent = psutil.virtual_memory().percent
            if memory_percent > self.memory_threshold:
                self.logger.warning(f"Memory usage too high: {memory_percent}% > {self.memory_threshold}%")
                return False
            return True
        except Exception as e:
            self.logger.error(f"Error checking resources: {str(e)}")
            return True

    def _wait_for_resources(self):
        for _ in range(self.max_resource_waits):
            if self._check_resources():
                return
            time.sleep(self.resource_wait)
        self.logger.warning("Starting entry despite high memory usage")

    def _verify_entry(self, entry: CatalogEntry, builder: CatalogBuilder) -> Dict[str, Any]:
        self._wait_for_resources()
        start = time.time()
        _, result = self.validation_pipeline.validate(entry, builder)
        result["elapsed_seconds"] = round(time.time() - start, 3)
        if self.report_storage is not None:
            with self._lock:
                self.report_storage.log_entry(result)
        return result

    def process(self, entries: List[CatalogEntry], builder: CatalogBuilder) -> Dict[str, Any]:
        """
        Verify entries and assemble the report.

        Args:
            entries: Entries to verify
            builder: Builder over the full catalog, so bases outside ``entries`` resolve

        Returns:
            Report with one result per entry, in the order given, plus a summary
        """
        if not self.validation_pipeline:
            raise RuntimeError("Validation pipeline not set")

        self.logger.info(f"Verifying {len(entries)} entries with {self.max_workers} workers")
        start = time.time()
        results: Dict[str, Dict[str, Any]] = {}
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {executor.submit(self._verify_entry, entry, builder): entry for entry in entries}
            for future in tqdm(as_completed(futures), total=len(futures), desc="verify", disable=not self.show_progress):
                entry = futures[future]
                try:
                    results[entry.id] = future.result()
                except Exception as e:
                    self.logger.error(f"Error verifying {entry.id}: {str(e)}")
                    results[entry.id] = {
                        "id": entry.id,
                        "passed": False,
                        "checks": [{"name": "pipeline", "status": FAIL, "expected": None, "got": None, "reason": str(e)}],
                        "failed_checks": ["pipeline"],
                    }

        ordered = [results[entry.id] for entry in entries]
        elapsed = time.time() - start
        report = {
            "elapsed_seconds": round(elapsed, 3),
            "entries": ordered,
            "summary": summarize(ordered),
        }
        self.logger.info(f"Verified {len(entries)} entries in {elapsed:.1f}s: {report['summary']['failed']} failed")
        return report


def summarize(results: List[Dict[str, Any]]) -> Dict[str, Any]:
    statuses = {PASS: 0, FAIL: 0, SKIPPED: 0}
    skipped_budget = []
    for result in results:
        for check in result["checks"]:
            statuses[check["status"]] = statuses.get(check["status"], 0) + 1
            if check["status"] == SKIPPED and check.get("reason") == "budget" and result["id"] not in skipped_budget:
                skipped_budget.append(result["id"])
    failed = [result["id"] for result in results if not result["passed"]]
    return {
        "entries": len(results),
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "failed_ids": failed,
        "skipped_budget": skipped_budget,
        "checks": statuses,
    }


def format_report(report: Dict[str, Any]) -> str:
    """Human-readable table: one line per check, then the summary."""
    lines = []
    for result in report["entries"]:
        lines.append(f"{result['id']}: {'PASS' if result['passed'] else 'FAIL'}")
        for check in result["checks"]:
            text = f"  {check['name']:<20} {check['status']:<8}"
            if check.get("expected") is not None:
                text += f" expected={check['expected']}"
            if check.get("got") is not None:
                text += f" got={check['got']}"
            if check["status"] != PASS and check.get("reason"):
                text += f" ({check['reason']})"
            if check.get("cite"):
                text += f" [{check['cite']}]"
            lines.append(text)
    summary = report["summary"]
    lines.append(
        f"{summary['entries']} entries: {summary['passed']} passed, {summary['failed']} failed; "
        f"checks {summary['checks'][PASS]} pass, {summary['checks'][FAIL]} fail, {summary['checks'][SKIPPED]} skipped"
    )
    if summary["skipped_budget"]:
        lines.append(f"skipped (budget): {', '.join(summary['skipped_budget'])}")
    return "\n".join(lines)
