"""
Per-entry verification pipeline for catalog codes.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from catalog.builder import CatalogBuilder
from catalog.catalog_loader import CatalogEntry
from codes.enumeration import CodewordEnumerator, ScanResult
from codes.linear_code import LinearCode
from codes.low_weight import LowWeightCounter, LowWeightResult
from codes.weight_enumerator import WeightEnumerator
from gleason.constants import ALPHA_MODULUS, WEIGHT_STEP, design_weights
from validators.alpha_validator import AlphaValidator, family_m
from validators.design_validator import DesignValidator
from validators.lemma_validator import LemmaValidator
from validators.self_duality_validator import SelfDualityValidator

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    """One row of a verification report."""

    name: str
    status: str
    expected: Any = None
    got: Any = None
    cite: Optional[str] = None
    reason: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_json(self, detailed: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "status": self.status, "expected": self.expected, "got": self.got}
        if self.cite:
            data["cite"] = self.cite
        if self.reason:
            data["reason"] = self.reason
        if detailed and self.details:
            data["details"] = self.details
        return data


@dataclass
class Counts:
    """What the counting stage learned about a code."""

    method: str
    enumerator: Optional[WeightEnumerator] = None
    scan: Optional[ScanResult] = None
    low_weight: Optional[LowWeightResult] = None
    skip_reason: Optional[str] = None

    def exact(self, weight: int) -> bool:
        if self.enumerator is not None:
            return True
        return self.low_weight is not None and weight < self.low_weight.exact_below

    def count(self, weight: int) -> Optional[int]:
        if self.enumerator is not None:
            return self.enumerator[weight]
        if self.low_weight is not None:
            return self.low_weight.count(weight)
        return None


class ValidationPipeline:
    """Runs every applicable check on one catalog entry."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the validation pipeline with configuration.

        Args:
            config: ``enumeration`` and ``low_weight`` engine settings, plus
                ``include_optional``, ``design_weights`` (``min`` or ``all``),
                ``design_limit`` and ``detailed_logs``
        """
        self.config = config
        self.logger = logging.getLogger("validator.pipeline")

        self.enumeration_config = config.get("enumeration", {})
        self.low_weight_config = config.get("low_weight", {})
        self.include_optional = config.get("include_optional", False)
        self.design_mode = config.get("design_weights", "min")
        self.design_limit = int(config.get("design_limit", 200000))
        self.detailed_logs = config.get("detailed_logs", True)

        self.self_duality_validator = SelfDualityValidator(config.get("self_duality", {}))
        self.alpha_validator = AlphaValidator(config.get("alpha", {}))
        self.lemma_validator = LemmaValidator(config)
        self.design_validator = DesignValidator(config.get("design", {}))

    def validate(self, entry: CatalogEntry, builder: CatalogBuilder) -> Tuple[bool, Dict[str, Any]]:
        """
        Build and check one entry.

        Returns:
            Tuple of (is_valid, results) where results follows the report
            schema ``{"id": .., "checks": [..]}``
        """
        self.logger.info(f"Starting verification of {entry.id}")
        checks: List[CheckResult] = []
        try:
            code = builder.build(entry.id)
            checks.append(CheckResult("construct", PASS, got=code.describe()))
        except Exception as e:
            self.logger.error(f"Error building {entry.id}: {str(e)}")
            checks.append(CheckResult("construct", FAIL, reason=str(e)))
            return self._finish(entry, checks)

        try:
            checks.extend(self.run_checks(entry, code))
        except Exception as e:
            self.logger.error(f"Error in validation pipeline: {str(e)}")
            checks.append(CheckResult("pipeline", FAIL, reason=str(e)))
        return self._finish(entry, checks)

    def run_checks(self, entry: CatalogEntry, code: LinearCode) -> List[CheckResult]:
        checks: List[CheckResult] = []
        tag, n = code.tag, code.n
        m = family_m(tag, n)
        near_weight = WEIGHT_STEP[tag] * m if m is not None else None

        valid, reason, details = self.self_duality_validator.validate(code)
        expected_sd = entry.expected.get("self_dual", True)
        status = PASS if valid == expected_sd else FAIL
        checks.append(CheckResult("self_dual", status, expected_sd, valid, entry.cite if "self_dual" in entry.expected else None, reason, details))

        alpha = entry.expected.get("alpha")
        if alpha is not None:
            checks.extend(self._alpha_structure(entry, alpha, m))

        w_max = self._count_limit(entry, near_weight)
        counts = self._count(code, w_max, m, run=self.include_optional or not entry.optional)

        if alpha is not None:
            if near_weight is None:
                checks.append(CheckResult("alpha", FAIL, alpha, None, entry.cite, f"Length {n} has no near-extremal family"))
            else:
                checks.append(self._compare("alpha", alpha, near_weight, counts, entry.cite, tag))
        if "min_weight" in entry.expected:
            checks.append(self._min_weight(entry, counts))
        for weight, count in sorted(entry.expected_counts().items()):
            checks.append(self._compare(f"a{weight}", count, weight, counts, entry.cite, tag))

        if counts.enumerator is None:
            if counts.skip_reason and m is not None:
                for name in ("enumerator", "lemma"):
                    checks.append(CheckResult(name, SKIPPED, reason=counts.skip_reason))
            return checks

        enumerator = counts.enumerator
        if counts.method == "full":
            bad = enumerator.divisibility_violations()
            status = FAIL if bad else PASS
            checks.append(CheckResult("weight_divisibility", status, got=enumerator.min_weight(), details={"violations": bad}))

        if m is None:
            return checks
        if enumerator.min_weight() != near_weight:
            found = enumerator.min_weight()
            reason = f"minimum weight {found if found is not None else f'above {w_max}'} is not {near_weight}"
            for name in ("enumerator", "lemma", "design"):
                checks.append(CheckResult(name, SKIPPED, reason=f"not near-extremal: {reason}"))
            return checks

        if counts.method == "full":
            valid, reason, details = self.alpha_validator.validate_enumerator(enumerator)
            checks.append(CheckResult("enumerator", PASS if valid else FAIL, got=details.get("alpha"), reason=reason, details=details))
        else:
            checks.append(CheckResult("enumerator", SKIPPED, reason="partial counts"))

        valid, reason, details = self.lemma_validator.validate(code, enumerator)
        checks.append(CheckResult("lemma", PASS if valid else FAIL, got=details.get("replication"), reason=reason, details=details))

        checks.extend(self._designs(code, counts, m))
        return checks

    def _count_limit(self, entry: CatalogEntry, near_weight: Optional[int]) -> int:
        weights = list(entry.expected_counts())
        if near_weight is not None:
            weights.append(near_weight)
        if "min_weight" in entry.expected:
            weights.append(entry.expected["min_weight"])
        return max(weights) if weights else 0

    def _design_targets(self, tag, m: Optional[int]) -> List[int]:
        if m is None:
            return []
        if self.design_mode == "all":
            return design_weights(tag, m)
        return [WEIGHT_STEP[tag] * m]

    def _count(self, code: LinearCode, w_max: int, m: Optional[int], run: bool = True) -> Counts:
        """Full enumeration when it fits the budget, else bounded low-weight counting."""
        engine = CodewordEnumerator(code, self.enumeration_config)
        if engine.fits_budget():
            if not run:
                return Counts("none", skip_reason="optional")
            scan = engine.scan(self._design_targets(code.tag, m), limit=self.design_limit)
            return Counts("full", enumerator=scan.enumerator, scan=scan)

        if w_max == 0:
            return Counts("none", skip_reason="budget")
        counter = LowWeightCounter(code, self.low_weight_config)
        cost, _ = counter.cost(w_max)
        if cost > engine.budget:
            self.logger.info(f"{code.describe()}: {cost} codewords exceed the budget of {engine.budget}")
            return Counts("none", skip_reason="budget")
        if not run:
            return Counts("none", skip_reason="optional")
        result = counter.count(w_max)
        counts = Counts("low_weight", low_weight=result)
        if result.certified:
            counts.enumerator = result.enumerator()
        return counts

    def _compare(self, name: str, expected: int, weight: int, counts: Counts, cite: Optional[str], tag) -> CheckResult:
        got = counts.count(weight)
        if got is None:
            return CheckResult(name, SKIPPED, expected, None, cite, counts.skip_reason)
        details: Dict[str, Any] = {"weight": weight, "method": counts.method}
        if name == "alpha" and got % ALPHA_MODULUS[tag] == 0:
            details["beta"] = got // ALPHA_MODULUS[tag]
        if counts.exact(weight):
            return CheckResult(name, PASS if got == expected else FAIL, expected, got, cite, details=details)
        if got > expected:
            return CheckResult(name, FAIL, expected, got, cite, "lower bound exceeds the expected count", details)
        return CheckResult(name, SKIPPED, expected, got, cite, "lower-bound", details)

    def _min_weight(self, entry: CatalogEntry, counts: Counts) -> CheckResult:
        expected = entry.expected["min_weight"]
        if counts.enumerator is not None:
            got = counts.enumerator.min_weight()
            return CheckResult("min_weight", PASS if got == expected else FAIL, expected, got, entry.cite)
        result = counts.low_weight
        if result is None:
            return CheckResult("min_weight", SKIPPED, expected, None, entry.cite, counts.skip_reason)
        if result.min_weight_certified:
            got = result.min_weight
            return CheckResult("min_weight", PASS if got == expected else FAIL, expected, got, entry.cite)
        bound = result.min_weight_lower_bound
        if bound > expected:
            return CheckResult("min_weight", FAIL, expected, bound, entry.cite, "lower bound exceeds the expected weight")
        return CheckResult("min_weight", SKIPPED, expected, bound, entry.cite, "lower-bound")

    def _alpha_structure(self, entry: CatalogEntry, alpha: int, m: Optional[int]) -> List[CheckResult]:
        modulus = ALPHA_MODULUS[entry.field]
        ok = alpha % modulus == 0
        checks = [
            CheckResult(
                "alpha_modulus",
                PASS if ok else FAIL,
                expected=f"0 mod {modulus}",
                got=alpha,
                cite=entry.cite,
                reason=None if ok else f"alpha={alpha} is not divisible by {modulus}",
            )
        ]
        if m is not None:
            valid, reason, details = self.alpha_validator.validate(entry.field, entry.length, alpha)
            checks.append(CheckResult("alpha_range", PASS if valid else FAIL, details.get("beta_range"), details.get("beta"), entry.cite, reason))
        return checks

    def _designs(self, code: LinearCode, counts: Counts, m: int) -> List[CheckResult]:
        checks = []
        min_weight = counts.enumerator.min_weight() if counts.enumerator is not None else None
        for weight in self._design_targets(code.tag, m):
            name = f"design_w{weight}"
            if counts.scan is None:
                checks.append(CheckResult(name, SKIPPED, reason="partial counts"))
                continue
            if weight in counts.scan.overflow:
                checks.append(CheckResult(name, SKIPPED, reason=f"more than {self.design_limit} words"))
                continue
            words = counts.scan.words.get(weight)
            if words is None or not len(words):
                checks.append(CheckResult(name, SKIPPED, reason=f"no words of weight {weight}"))
                continue
            # minimum-weight words in distinct scalar classes never share a support
            valid, reason, details = self.design_validator.validate(
                code, weight, words, require_distinct=weight == min_weight
            )
            checks.append(CheckResult(name, PASS if valid else FAIL, got=details.get("r"), reason=reason, details=details))
        return checks

    def _finish(self, entry: CatalogEntry, checks: List[CheckResult]) -> Tuple[bool, Dict[str, Any]]:
        overall_valid = all(check.status != FAIL for check in checks)
        results = {
            "id": entry.id,
            "family": entry.family,
            "field": entry.field.value,
            "length": entry.length,
            "optional": entry.optional,
            "passed": overall_valid,
            "checks": [check.to_json(self.detailed_logs) for check in checks],
            "failed_checks": [check.name for check in checks if check.status == FAIL],
        }
        self.logger.info(f"Verification complete for {entry.id}: {'PASS' if overall_valid else 'FAIL'}")
        return overall_valid, results
