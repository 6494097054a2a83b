"""
Test suite for the validators and the verification pipeline.
"""

import unittest
from unittest.mock import patch

from tests.base_test import BaseTestCase, ENUMERATION
from catalog.builder import CatalogBuilder
from catalog.catalog_loader import load_catalog_text
from codes.linear_code import LinearCode
from codes.weight_enumerator import WeightEnumerator
from fields.galois_fields import FieldTag, parse_row
from fields.vectors import FieldVector
from validators import (
    AlphaValidator,
    DesignValidator,
    LemmaValidator,
    SelfDualityValidator,
    ValidationPipeline,
    lemma_check,
    one_design_check,
    scalar_classes,
)
from validators.lemma_validator import NotNearExtremalError

SMALL_CATALOG = """\
T4 mu_circ F3 4 mu=2 rA=1,1 expect min_weight=3 a3=8 self_dual=true cite=tetracode
E2 mu_circ F4 2 mu=1 rA=1 expect min_weight=2 self_dual=true cite=repetition-pair
T4x3 direct_sum F3 12 parts=T4,T4,T4 expect alpha=24 self_dual=true cite=classified-length12
E2x3 direct_sum F4 6 parts=E2,E2,E2 expect alpha=9 self_dual=true cite=classified-length6
"""


def tetracode_cube():
    block = [parse_row(FieldTag.F3, "1,0,1,1"), parse_row(FieldTag.F3, "0,1,1,2")]
    rows = []
    for i in range(3):
        for row in block:
            rows.append([0] * (4 * i) + row + [0] * (8 - 4 * i))
    return LinearCode(FieldTag.F3, rows)


def hexacode():
    rows = [parse_row(FieldTag.F4, r) for r in ("1,0,0,1,w2,w", "0,1,0,1,w,w2", "0,0,1,1,1,1")]
    return LinearCode(FieldTag.F4, rows)


def statuses(result):
    return {check["name"]: check["status"] for check in result["checks"]}


class TestSelfDualityValidator(BaseTestCase):
    """Dimension, length and orthogonality."""

    def setUp(self):
        super().setUp()
        self.validator = SelfDualityValidator({})

    def test_self_dual_codes(self):
        for code in (tetracode_cube(), hexacode()):
            valid, reason, details = self.validator.validate(code)
            self.assertTrue(valid, reason)
            self.assertEqual(details["nonorthogonal_pairs"], 0)

    def test_wrong_dimension(self):
        valid, reason, _ = self.validator.validate(LinearCode(FieldTag.F3, [[1, 1, 1, 0]]))
        self.assertFalse(valid)
        self.assertIn("Dimension", reason)

    def test_inadmissible_length(self):
        valid, _, details = self.validator.validate(LinearCode(FieldTag.F3, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]))
        self.assertFalse(valid)
        self.assertFalse(details["admissible_length"])

    def test_not_orthogonal(self):
        valid, _, details = self.validator.validate(LinearCode(FieldTag.F3, [[1, 0, 1, 0], [0, 1, 0, 1]]))
        self.assertFalse(valid)
        self.assertGreater(details["nonorthogonal_pairs"], 0)


class TestAlphaValidator(BaseTestCase):
    """Modulus, range and family membership."""

    def setUp(self):
        super().setUp()
        self.validator = AlphaValidator({})

    def test_modulus(self):
        valid, _, details = self.validator.validate(FieldTag.F3, 36, 76)
        self.assertFalse(valid)
        self.assertEqual(details["modulus"], 8)
        self.assertTrue(self.validator.validate(FieldTag.F4, 30, 3249)[0])

    def test_range(self):
        valid, _, details = self.validator.validate(FieldTag.F3, 36, 72)
        self.assertTrue(valid)
        self.assertEqual(details["beta_range"], [1, 111])
        self.assertFalse(self.validator.validate(FieldTag.F3, 36, 8 * 112)[0])

    def test_lengths_without_family(self):
        valid, _, details = self.validator.validate(FieldTag.F3, 4, 8)
        self.assertTrue(valid)
        self.assertNotIn("beta_range", details)

    def test_enumerator_membership(self):
        valid, _, details = self.validator.validate_enumerator(WeightEnumerator(FieldTag.F3, 12, {0: 1, 3: 24, 6: 192, 9: 512}))
        self.assertTrue(valid)
        self.assertEqual(details["alpha"], 24)
        valid, _, details = self.validator.validate_enumerator(WeightEnumerator(FieldTag.F3, 12, {0: 1, 3: 24, 6: 190, 9: 514}))
        self.assertFalse(valid)
        self.assertEqual(details["mismatched_weights"], [6, 9])
        self.assertFalse(self.validator.validate_enumerator(WeightEnumerator(FieldTag.F3, 8, {0: 1}))[0])


class TestLemma(BaseTestCase):
    """Minimum-weight counts and replication numbers."""

    def test_tetracode_cube(self):
        report = lemma_check(tetracode_cube(), config={"enumeration": ENUMERATION})
        self.assertEqual((report.weight, report.count, report.replication), (3, 24, 3))
        self.assertTrue(report.passed)
        self.assertEqual(report.to_json()["beta"], 3)

    def test_quaternary(self):
        enumerator = WeightEnumerator(FieldTag.F4, 6, {0: 1, 2: 9, 4: 27, 6: 27})
        report = lemma_check(LinearCode(FieldTag.F4, [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]]), enumerator)
        self.assertEqual((report.count, report.class_size, report.replication), (9, 3, 1))
        self.assertTrue(report.passed)

    def test_extremal_code_is_rejected(self):
        with self.assertRaises(NotNearExtremalError):
            lemma_check(hexacode(), config={"enumeration": ENUMERATION})
        valid, reason, details = LemmaValidator({"enumeration": ENUMERATION}).validate(hexacode())
        self.assertFalse(valid)
        self.assertEqual(details, {})
        self.assertIn("minimum weight", reason)

    def test_bad_length(self):
        with self.assertRaises(NotNearExtremalError):
            lemma_check(LinearCode(FieldTag.F3, [[1, 0, 1, 1], [0, 1, 1, 2]]))

    def test_indivisible_count(self):
        # a made-up enumerator; only the arithmetic is exercised
        enumerator = WeightEnumerator(FieldTag.F3, 12, {0: 1, 3: 20})
        valid, reason, _ = LemmaValidator({}).validate(tetracode_cube(), enumerator)
        self.assertFalse(valid)
        self.assertIn("not divisible by 8", reason)


class TestDesigns(BaseTestCase):
    """Scalar classes and 1-designs."""

    def test_scalar_classes(self):
        words = [FieldVector.parse(FieldTag.F4, t) for t in ("w,w2,0", "1,w,0", "w2,1,0", "0,1,1")]
        classes = scalar_classes(words)
        self.assertEqual([str(c) for c in classes], ["(0,1,1)", "(1,w,0)"])
        self.assertEqual(scalar_classes([]), [])

    def test_tetracode_cube_design(self):
        design = one_design_check(tetracode_cube(), 3, ENUMERATION)
        self.assertEqual((design.v, design.k, design.b, design.r), (12, 3, 12, 3))
        self.assertTrue(design.is_1_design)
        self.assertTrue(design.distinct_supports)
        self.assertIn([1, 2, 3], design.blocks)
        self.assertTrue(all(len(block) == 3 for block in design.blocks))

    def test_hexacode_design(self):
        valid, reason, details = DesignValidator({"enumeration": ENUMERATION}).validate(hexacode(), 4)
        self.assertTrue(valid, reason)
        self.assertEqual((details["b"], details["r"]), (15, 10))

    def test_not_a_design(self):
        code = LinearCode(FieldTag.F3, [[1, 1, 1, 0]])
        valid, reason, details = DesignValidator({"enumeration": ENUMERATION}).validate(code, 3)
        self.assertFalse(valid)
        self.assertIsNone(details["r"])
        valid, reason, _ = DesignValidator({"enumeration": ENUMERATION}).validate(code, 2)
        self.assertFalse(valid)
        self.assertIn("No codewords", reason)

    def test_shared_supports_fail_when_required(self):
        code = LinearCode(FieldTag.F3, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        words = [[1, 1, 0, 0], [1, 2, 0, 0], [0, 0, 1, 1], [0, 0, 1, 2]]
        validator = DesignValidator({})
        valid, reason, details = validator.validate(code, 2, words)
        self.assertTrue(valid, reason)
        self.assertFalse(details["distinct_supports"])
        valid, reason, _ = validator.validate(code, 2, words, require_distinct=True)
        self.assertFalse(valid)
        self.assertIn("share supports", reason)
        valid, _, _ = DesignValidator({"require_distinct_supports": True}).validate(code, 2, words)
        self.assertFalse(valid)


class TestValidationPipeline(BaseTestCase):
    """Per-entry checks on a small catalog."""

    def setUp(self):
        super().setUp()
        self.entries = load_catalog_text(SMALL_CATALOG)
        self.builder = CatalogBuilder(self.entries)
        self.config = {"enumeration": ENUMERATION, "low_weight": {}, "design_weights": "min"}

    def entry(self, entry_id):
        return self.builder.entry(entry_id)

    def test_tetracode_cube(self):
        valid, result = ValidationPipeline(self.config).validate(self.entry("T4x3"), self.builder)
        self.assertTrue(valid, result)
        self.assertEqual(
            statuses(result),
            {
                "construct": "pass",
                "self_dual": "pass",
                "alpha_modulus": "pass",
                "alpha_range": "pass",
                "alpha": "pass",
                "weight_divisibility": "pass",
                "enumerator": "pass",
                "lemma": "pass",
                "design_w3": "pass",
            },
        )
        self.assertEqual(result["failed_checks"], [])
        alpha = next(c for c in result["checks"] if c["name"] == "alpha")
        self.assertEqual((alpha["expected"], alpha["got"], alpha["cite"]), (24, 24, "classified-length12"))

    def test_minimum_weight_design_requires_distinct_supports(self):
        pipeline = ValidationPipeline(self.config)
        validate = pipeline.design_validator.validate
        with patch.object(pipeline.design_validator, "validate", wraps=validate) as spy:
            valid, result = pipeline.validate(self.entry("T4x3"), self.builder)
        self.assertTrue(valid, result)
        spy.assert_called_once()
        self.assertTrue(spy.call_args.kwargs["require_distinct"])
        design = next(c for c in result["checks"] if c["name"] == "design_w3")
        self.assertTrue(design["details"]["distinct_supports"])

    def test_quaternary_cube(self):
        valid, result = ValidationPipeline(self.config).validate(self.entry("E2x3"), self.builder)
        self.assertTrue(valid, result)
        self.assertEqual(statuses(result)["design_w2"], "pass")

    def test_entry_without_family(self):
        valid, result = ValidationPipeline(self.config).validate(self.entry("T4"), self.builder)
        self.assertTrue(valid)
        self.assertEqual(statuses(result)["a3"], "pass")
        self.assertEqual(statuses(result)["min_weight"], "pass")
        self.assertNotIn("lemma", statuses(result))

    def test_wrong_alpha_fails(self):
        entries = load_catalog_text(SMALL_CATALOG.replace("alpha=24", "alpha=32"))
        builder = CatalogBuilder(entries)
        valid, result = ValidationPipeline(self.config).validate(builder.entry("T4x3"), builder)
        self.assertFalse(valid)
        self.assertEqual(result["failed_checks"], ["alpha_range", "alpha"])

    def test_zero_budget_skips_counting(self):
        config = dict(self.config, enumeration={"budget": 0, "threads": 1, "show_progress": False})
        valid, result = ValidationPipeline(config).validate(self.entry("T4x3"), self.builder)
        self.assertTrue(valid)
        checks = {c["name"]: c for c in result["checks"]}
        self.assertEqual(checks["alpha"]["status"], "skipped")
        self.assertEqual(checks["alpha"]["reason"], "budget")
        self.assertEqual(checks["lemma"]["reason"], "budget")
        self.assertEqual(checks["self_dual"]["status"], "pass")

    def test_optional_entries(self):
        entries = load_catalog_text(SMALL_CATALOG.replace("cite=classified-length12", "check=optional cite=classified-length12"))
        builder = CatalogBuilder(entries)
        valid, result = ValidationPipeline(self.config).validate(builder.entry("T4x3"), builder)
        self.assertTrue(valid)
        self.assertTrue(result["optional"])
        alpha = next(c for c in result["checks"] if c["name"] == "alpha")
        self.assertEqual((alpha["status"], alpha["reason"]), ("skipped", "optional"))

        valid, result = ValidationPipeline(dict(self.config, include_optional=True)).validate(builder.entry("T4x3"), builder)
        self.assertEqual(statuses(result)["alpha"], "pass")

    def test_construction_failure(self):
        text = SMALL_CATALOG + "N12 neighbor F3 12 base=T4x3 x=0,0,1,0,1,1\n"
        entries = load_catalog_text(text)
        builder = CatalogBuilder(entries)
        valid, result = ValidationPipeline(self.config).validate(builder.entry("N12"), builder)
        self.assertFalse(valid)
        self.assertEqual(result["failed_checks"], ["construct"])

    def test_unexpected_error_is_reported(self):
        pipeline = ValidationPipeline(self.config)
        with patch.object(pipeline.self_duality_validator, "validate", side_effect=RuntimeError("boom")):
            valid, result = pipeline.validate(self.entry("T4x3"), self.builder)
        self.assertFalse(valid)
        self.assertEqual(result["failed_checks"], ["pipeline"])

    def test_all_design_weights(self):
        config = dict(self.config, design_weights="all")
        _, result = ValidationPipeline(config).validate(self.entry("T4x3"), self.builder)
        # 3m..6m-3 is just {3} for m = 1
        self.assertEqual([c["name"] for c in result["checks"] if c["name"].startswith("design")], ["design_w3"])


if __name__ == '__main__':
    unittest.main()
