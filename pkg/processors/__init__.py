"""
Parallel processing of catalog entries.
"""

from processors.verification_processor import VerificationProcessor, format_report, summarize

__all__ = ["VerificationProcessor", "format_report", "summarize"]
