"""
Test suite for the Gleason-type parametric enumerators and the checks built on them.
"""

import unittest
from dataclasses import FrozenInstanceError

from tests.base_test import BaseTestCase, load_parametric_tables
from codes.weight_enumerator import WeightEnumerator
from fields.galois_fields import FieldTag
from gleason.parametric import divide_series
from gleason import (
    BigPoly,
    GleasonRangeError,
    alpha_range,
    divisibility_check,
    extremal_enumerator,
    gleason_basis,
    known_alpha_report,
    parametric_near_extremal,
    sweep,
)
from gleason.constants import ALPHA_MODULUS, LENGTH_UNIT, NEAR_EXTREMAL_MAX_M, classify, design_weights, extremal_bound, m_for

GOLAY = {0: 1, 6: 264, 9: 440, 12: 24}
TETRACODE_CUBE = {0: 1, 3: 24, 6: 192, 9: 512}
HEXACODE = {0: 1, 4: 45, 6: 18}
E2_CUBE = {0: 1, 2: 9, 4: 27, 6: 27}


class TestBigPoly(BaseTestCase):
    """Exact sparse polynomial arithmetic."""

    def test_binomial_power(self):
        self.assertEqual((BigPoly({0: 1, 1: 1}) ** 3).to_dense(), [1, 3, 3, 1])
        self.assertEqual(BigPoly({0: 2}) ** 0, 1)

    def test_cancellation_drops_terms(self):
        p = BigPoly({0: 1, 2: 5})
        self.assertEqual(p - p, BigPoly())
        self.assertFalse(p - p)
        self.assertEqual((p - p).degree(), -1)
        self.assertEqual(len(p + BigPoly({2: -5})), 1)

    def test_big_coefficients(self):
        p = BigPoly({0: 1, 3: 8}) ** 40
        self.assertEqual(p[120], 8 ** 40)
        self.assertEqual(p.evaluate(1), 9 ** 40)

    def test_from_dense_with_stride(self):
        p = BigPoly.from_dense([1, 0, 3], stride=2)
        self.assertEqual(p.items(), [(0, 1), (4, 3)])
        self.assertEqual(p.lowest_degree(), 0)
        self.assertEqual(p.to_dense(3), [1, 0, 0])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            BigPoly({-1: 1})
        with self.assertRaises(ValueError):
            BigPoly({1: 1}) ** -1


class TestGleasonBasis(BaseTestCase):
    """Basis polynomials."""

    def test_ternary_basis(self):
        self.assertEqual(gleason_basis(FieldTag.F3, 12, 0), BigPoly({0: 1, 3: 8}) ** 3)
        self.assertEqual(gleason_basis(FieldTag.F3, 12, 1), BigPoly({3: 1}) * BigPoly({0: 1, 3: -1}) ** 3)
        self.assertEqual(gleason_basis(FieldTag.F3, 4, 0), BigPoly({0: 1, 3: 8}))

    def test_quaternary_basis(self):
        self.assertEqual(gleason_basis(FieldTag.F4, 2, 0), BigPoly({0: 1, 2: 3}))
        self.assertEqual(gleason_basis(FieldTag.F4, 6, 1), BigPoly({2: 1}) * BigPoly({0: 1, 2: -1}) ** 2)

    def test_out_of_range(self):
        with self.assertRaises(GleasonRangeError):
            gleason_basis(FieldTag.F3, 6, 0)
        with self.assertRaises(GleasonRangeError):
            gleason_basis(FieldTag.F3, 12, 2)
        with self.assertRaises(GleasonRangeError):
            gleason_basis(FieldTag.F4, 3, 0)

    def test_basis_is_unitriangular(self):
        for tag in FieldTag:
            step = {FieldTag.F3: 3, FieldTag.F4: 2}[tag]
            for n in range(LENGTH_UNIT[tag], 5 * LENGTH_UNIT[tag] + 1, LENGTH_UNIT[tag]):
                for j in range(n // LENGTH_UNIT[tag] + 1):
                    basis = gleason_basis(tag, n, j)
                    self.assertEqual(basis.lowest_degree(), step * j, f"{tag.value} n={n} j={j}")
                    self.assertEqual(basis[step * j], 1)

    def test_series_division(self):
        self.assertEqual(divide_series([1, 0, 0, 0], [1, -1]), [1, 1, 1, 1])
        self.assertEqual(divide_series([1, -2, 1], [1, -1]), [1, -1, 0])
        with self.assertRaises(ArithmeticError):
            divide_series([1, 0], [2, 1])


class TestParametricEnumerator(BaseTestCase):
    """A_w = s_w + t_w * alpha."""

    def test_length_twelve_family(self):
        family = parametric_near_extremal(FieldTag.F3, 1)
        self.assertEqual(family.n, 12)
        self.assertEqual(family.min_weight, 3)
        self.assertEqual(family.at(0).nonzero(), GOLAY)
        self.assertEqual(family.at(24).nonzero(), TETRACODE_CUBE)

    def test_length_six_family(self):
        family = parametric_near_extremal(FieldTag.F4, 1)
        self.assertEqual(family.at(0).nonzero(), HEXACODE)
        self.assertEqual(family.at(9).nonzero(), E2_CUBE)

    def test_matches_reference_tables(self):
        tables = load_parametric_tables()
        self.assertTrue(tables)
        for (tag, n), rows in tables.items():
            family = parametric_near_extremal(tag, m_for(tag, n))
            for weight, (s, t) in rows.items():
                self.assertEqual((family.s(weight), family.t(weight)), (s, t), f"{tag} n={n} weight {weight}")

    def test_short_lengths_are_in_the_tables(self):
        tables = load_parametric_tables()
        for key in (("F3", 12), ("F3", 24), ("F4", 6), ("F4", 12), ("F4", 18)):
            self.assertIn(key, tables)
        self.assertEqual(tables[("F3", 24)][9], (4048, -6))
        self.assertEqual(tables[("F4", 18)][8], (2754, -6))

    def test_family_matches_basis_expansion(self):
        for tag in FieldTag:
            step = {FieldTag.F3: 3, FieldTag.F4: 2}[tag]
            for m in (1, 2, 3):
                family = parametric_near_extremal(tag, m)
                for coefficients, column in ((family.a_s, 0), (family.a_t, 1)):
                    rebuilt = BigPoly()
                    for j, a_j in enumerate(coefficients):
                        rebuilt = rebuilt + gleason_basis(tag, family.n, j) * a_j
                    expected = BigPoly({w: pair[column] for w, pair in family.terms.items()})
                    self.assertEqual(rebuilt, expected, f"{tag.value} m={m}")
                    self.assertEqual(rebuilt.lowest_degree() % step, 0)

    def test_family_is_read_only(self):
        family = parametric_near_extremal(FieldTag.F3, 2)
        with self.assertRaises(TypeError):
            family.terms[6] = (0, 0)
        with self.assertRaises(FrozenInstanceError):
            family.m = 3
        self.assertIsInstance(family.a_s, tuple)
        self.assertIs(parametric_near_extremal(FieldTag.F3, 2), family)
        self.assertEqual(family.s(9), 4048)

    def test_sum_rule(self):
        for tag, m in ((FieldTag.F3, 5), (FieldTag.F4, 7)):
            family = parametric_near_extremal(tag, m)
            self.assertEqual(family.totals(), (tag.order ** (family.n // 2), 0))

    def test_m_outside_range(self):
        with self.assertRaises(GleasonRangeError):
            parametric_near_extremal(FieldTag.F3, 147)
        with self.assertRaises(GleasonRangeError):
            parametric_near_extremal(FieldTag.F4, 38)
        with self.assertRaises(GleasonRangeError):
            parametric_near_extremal(FieldTag.F3, 0)

    def test_alpha_of(self):
        family = parametric_near_extremal(FieldTag.F3, 1)
        self.assertEqual(family.alpha_of(WeightEnumerator(FieldTag.F3, 12, TETRACODE_CUBE)), 24)
        self.assertEqual(family.alpha_of(WeightEnumerator(FieldTag.F3, 12, GOLAY)), 0)
        with self.assertRaises(ValueError):
            family.alpha_of(WeightEnumerator(FieldTag.F3, 12, {0: 1, 3: 24, 6: 200, 9: 504}))
        with self.assertRaises(ValueError):
            family.alpha_of(WeightEnumerator(FieldTag.F3, 24, {0: 1}))
        with self.assertRaises(ValueError):
            family.alpha_of(WeightEnumerator(FieldTag.F4, 12, {0: 1}))

    def test_mismatches(self):
        family = parametric_near_extremal(FieldTag.F4, 1)
        self.assertEqual(family.mismatches(WeightEnumerator(FieldTag.F4, 6, E2_CUBE)), [])
        self.assertEqual(family.mismatches(WeightEnumerator(FieldTag.F4, 6, {0: 1, 2: 9, 4: 27, 6: 26})), [6])

    def test_json(self):
        rows = parametric_near_extremal(FieldTag.F3, 3).to_json()
        self.assertEqual(rows[0], [0, "1", "0"])
        self.assertEqual(rows[1], [9, "0", "1"])
        self.assertEqual(rows[2], [12, "42840", "-9"])


class TestTheorems(BaseTestCase):
    """Divisibility, alpha ranges, extremal specialisation and literature values."""

    def test_divisibility_small(self):
        report = divisibility_check(FieldTag.F3, 3)
        self.assertTrue(report.passed)
        self.assertEqual(report.modulus, 8)
        self.assertEqual(report.to_json()["status"], "pass")

    def test_sweep_every_length(self):
        for tag in FieldTag:
            reports = sweep(tag, workers=2)
            self.assertEqual(len(reports), {FieldTag.F3: 146, FieldTag.F4: 37}[tag])
            failed = [r.m for r in reports if not r.passed]
            self.assertEqual(failed, [], f"{tag.value} divisibility failed at m={failed}")

    def test_sweep_rejects_bad_m(self):
        with self.assertRaises(GleasonRangeError):
            sweep(FieldTag.F4, [1, 40])

    def test_alpha_ranges(self):
        expected = {
            (FieldTag.F3, 3): (1, 111),
            (FieldTag.F3, 4): (1, 4324),
            (FieldTag.F3, 5): (1, 5148),
            (FieldTag.F3, 6): (14466, 251482),
            (FieldTag.F4, 4): (1, 253),
            (FieldTag.F4, 5): (1, 1319),
            (FieldTag.F4, 6): (1, 7140),
        }
        for (tag, m), (beta_min, beta_max) in expected.items():
            window = alpha_range(tag, m)
            self.assertEqual((window.beta_min, window.beta_max), (beta_min, beta_max), f"{tag.value} m={m}")
            self.assertFalse(window.empty)

    def test_range_membership(self):
        window = alpha_range(FieldTag.F3, 3)
        self.assertTrue(window.contains(72))
        self.assertFalse(window.contains(76))
        self.assertFalse(window.contains(8 * 112))
        self.assertEqual(window.upper_weight, 36)

    def test_known_alphas(self):
        rows = known_alpha_report()
        self.assertTrue(rows)
        self.assertEqual([r for r in rows if r["status"] != "pass"], [])
        quaternary = known_alpha_report(FieldTag.F4)
        self.assertTrue(all(r["tag"] == "F4" for r in quaternary))
        for row in rows:
            self.assertEqual(row["alpha"] % ALPHA_MODULUS[FieldTag.parse(row["tag"])], 0)

    def test_extremal_specialisation(self):
        report = extremal_enumerator(FieldTag.F3, 1)
        self.assertTrue(report.nonnegative)
        self.assertTrue(report.passed)
        self.assertEqual(report.enumerator.nonzero(), GOLAY)
        self.assertFalse(report.beyond_extremal_limit)
        self.assertEqual(extremal_enumerator(FieldTag.F4, 1).enumerator.nonzero(), HEXACODE)
        self.assertTrue(extremal_enumerator(FieldTag.F3, 70).beyond_extremal_limit)

    def test_extremal_sweep(self):
        for tag in FieldTag:
            nonnegative = []
            for m in range(1, NEAR_EXTREMAL_MAX_M[tag] + 1):
                report = extremal_enumerator(tag, m)
                self.assertTrue(report.passed, f"{tag.value} m={m}: {report.violations}")
                if report.nonnegative:
                    nonnegative.append(m)
                    self.assertEqual(report.violations, [])
            self.assertEqual(nonnegative[:3], [1, 2, 3])
        self.assertEqual(extremal_enumerator(FieldTag.F3, 2).coefficients[9], 4048)
        self.assertEqual(extremal_enumerator(FieldTag.F3, 3).coefficients[12], 42840)
        self.assertEqual(extremal_enumerator(FieldTag.F4, 3).coefficients[8], 2754)

    def test_weight_bounds(self):
        self.assertEqual(extremal_bound(FieldTag.F3, 36), 12)
        self.assertEqual(extremal_bound(FieldTag.F4, 30), 12)
        self.assertEqual(classify(FieldTag.F3, 36, 9), "near-extremal")
        self.assertEqual(classify(FieldTag.F4, 6, 4), "extremal")
        self.assertEqual(classify(FieldTag.F3, 36, 6), "other")
        self.assertEqual(design_weights(FieldTag.F3, 3), [9, 12, 15])
        self.assertEqual(design_weights(FieldTag.F4, 4), [8, 10])
        self.assertEqual(LENGTH_UNIT[FieldTag.F4] * 5, 30)
        with self.assertRaises(ValueError):
            m_for(FieldTag.F3, 30)


if __name__ == '__main__':
    unittest.main()
