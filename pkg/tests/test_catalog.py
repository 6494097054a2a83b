"""
Test suite for the catalog format, loader and builder.
"""

import unittest

from tests.base_test import BaseTestCase
from catalog import (
    CatalogBuilder,
    CatalogError,
    catalog_load,
    dump_catalog,
    load_catalog_text,
    parse_line,
    select_entries,
)
from codes.linear_code import is_self_dual
from fields.galois_fields import FieldTag
from gleason.constants import ALPHA_MODULUS

BASES = """\
T4 mu_circ F3 4 mu=2 rA=1,1 expect min_weight=3 a3=8 self_dual=true cite=tetracode
T4x3 direct_sum F3 12 parts=T4,T4,T4 expect alpha=24 self_dual=true cite=classified-length12
"""


class TestCatalogFormat(BaseTestCase):
    """Line parsing and canonical serialisation."""

    def test_parse_line(self):
        entry = parse_line("C36.1 four_negacirc F3 36 rA=0,1,2,0,0,0,0,1,2 rB=1,2,2,1,1,1,1,0,0 expect alpha=72 cite=x", 7)
        self.assertEqual((entry.id, entry.family, entry.field, entry.length), ("C36.1", "four_negacirc", FieldTag.F3, 36))
        self.assertEqual(entry.expected, {"alpha": 72})
        self.assertEqual(entry.params["rB"], "1,2,2,1,1,1,1,0,0")
        self.assertEqual(entry.line, 7)
        self.assertFalse(entry.optional)

    def test_comments_and_blank_lines(self):
        self.assertIsNone(parse_line("   # only a comment"))
        self.assertIsNone(parse_line(""))
        self.assertEqual(load_catalog_text(""), [])
        entry = parse_line("E2 mu_circ F4 2 mu=1 rA=1  # trailing")
        self.assertEqual(entry.params, {"mu": "1", "rA": "1"})

    def test_canonical_order(self):
        entry = parse_line("X mu_circ F3 4 mu=2 rA=1,1 expect cite=c a3=8 check=optional self_dual=true min_weight=3")
        self.assertEqual(entry.serialize(), "X mu_circ F3 4 mu=2 rA=1,1 expect min_weight=3 a3=8 self_dual=true check=optional cite=c")

    def test_dump_is_stable(self):
        text = dump_catalog(catalog_load())
        self.assertEqual(dump_catalog(load_catalog_text(text)), text)

    def test_errors_carry_line_numbers(self):
        cases = {
            "X mu_circ F3": "Expected",
            "X quadratic F3 4 rA=1,1": "Unknown family",
            "X mu_circ F5 4 mu=1 rA=1,1": "F5",
            "X mu_circ F3 4 mu=1 rA=1,3 expect cite=c": "X",
            "X mu_circ F3 4 mu=1 rA=1,1,1": "length",
            "X mu_circ F3 4 mu=0 rA=1,1": "mu must be nonzero",
            "X mu_circ F3 4 mu=1 rA=1,1 expect alpha=8": "cite",
            "X mu_circ F3 4 mu=1 rA=1,1 expect alpha=x cite=c": "nonnegative integer",
            "X mu_circ F3 4 mu=1 rA=1,1 expect colour=red cite=c": "Unknown expected key",
            "X mu_circ F3 4 mu=1 rA": "key=value",
            "X four_circ F3 6 rA=1 rB=1": "multiple of 4",
            "X ito F4 72 rA=1 rB=1 rC=1 rD=1": "ternary",
        }
        for text, fragment in cases.items():
            with self.assertRaises(CatalogError, msg=text) as ctx:
                load_catalog_text("# header\n" + text + "\n")
            self.assertEqual(ctx.exception.line, 2, text)
            self.assertIn(fragment, str(ctx.exception), text)
            self.assertTrue(str(ctx.exception).startswith("line 2:"), text)

    def test_duplicate_id(self):
        with self.assertRaises(CatalogError) as ctx:
            load_catalog_text(BASES + "T4 mu_circ F3 4 mu=2 rA=1,1\n")
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn("Duplicate id", str(ctx.exception))

    def test_unknown_base(self):
        with self.assertRaises(CatalogError) as ctx:
            load_catalog_text(BASES + "N neighbor F3 12 base=Q x=1,1,1,0,0,0\n")
        self.assertIn("unknown base", str(ctx.exception))

    def test_base_over_other_field(self):
        text = BASES + "E2 mu_circ F4 2 mu=1 rA=1\nM direct_sum F3 6 parts=T4,E2\n"
        with self.assertRaises(CatalogError):
            load_catalog_text(text)


class TestShippedCatalog(BaseTestCase):
    """The default catalog."""

    @classmethod
    def setUpClass(cls):
        cls.entries = catalog_load()

    def test_size(self):
        self.assertEqual(len(self.entries), 295)
        self.assertEqual(sum(entry.optional for entry in self.entries), 188)
        self.assertEqual(len({entry.id for entry in self.entries}), 295)

    def test_expected_alphas_respect_modulus(self):
        for entry in self.entries:
            alpha = entry.expected.get("alpha")
            if alpha is not None:
                self.assertEqual(alpha % ALPHA_MODULUS[entry.field], 0, entry.id)

    def test_every_claim_is_cited(self):
        for entry in self.entries:
            if entry.expected:
                self.assertTrue(entry.cite, entry.id)

    def test_known_entries(self):
        by_id = {entry.id: entry for entry in self.entries}
        self.assertEqual(by_id["C36.1"].expected["alpha"], 72)
        self.assertEqual(by_id["N24.1"].expected["alpha"], 864)
        self.assertEqual(by_id["D30.1"].expected["alpha"], 3249)
        self.assertEqual(by_id["N24.1"].base_ids, ["C24.4"])
        self.assertEqual(by_id["T4x3"].base_ids, ["T4", "T4", "T4"])

    def test_select_entries(self):
        self.assertEqual(len(select_entries(self.entries)), 295)
        self.assertEqual(len(select_entries(self.entries, ["all"])), 295)
        chosen = select_entries(self.entries, ["C36.1..C36.3", "T4"])
        self.assertEqual([e.id for e in chosen], ["C36.1", "C36.2", "C36.3", "T4"])
        with self.assertRaises(KeyError):
            select_entries(self.entries, ["C99"])
        with self.assertRaises(KeyError):
            select_entries(self.entries, ["C36.1..C99"])

    def test_ternary_length_36_entries_are_self_dual(self):
        builder = CatalogBuilder(self.entries)
        for entry in self.entries:
            if entry.field is FieldTag.F3 and entry.length == 36 and entry.family != "neighbor":
                code = builder.build(entry.id)
                self.assertEqual((code.n, code.k), (36, 18), entry.id)
                self.assertTrue(is_self_dual(code), entry.id)

    def test_every_entry_builds_self_dual(self):
        builder = CatalogBuilder(self.entries)
        for entry in self.entries:
            code = builder.build(entry.id)
            self.assertEqual(code.n, entry.length, entry.id)
            self.assertTrue(is_self_dual(code), entry.id)


class TestCatalogBuilder(BaseTestCase):
    """Building entries through their bases."""

    def test_memoised(self):
        builder = CatalogBuilder(load_catalog_text(BASES))
        code = builder.build("T4x3")
        self.assertIs(builder.build("T4x3"), code)
        self.assertEqual((code.n, code.k), (12, 6))
        self.assertEqual(code.name, "T4x3")

    def test_cycle_detection(self):
        text = (
            "A neighbor F3 12 base=B x=1,1,1,0,0,0\n"
            "B neighbor F3 12 base=A x=1,1,1,0,0,0\n"
        )
        builder = CatalogBuilder(load_catalog_text(text))
        with self.assertRaises(CatalogError) as ctx:
            builder.build("A")
        self.assertIn("Base cycle: A -> B -> A", str(ctx.exception))

    def test_unknown_id(self):
        with self.assertRaises(CatalogError):
            CatalogBuilder(load_catalog_text(BASES)).build("nope")

    def test_construction_errors_become_catalog_errors(self):
        text = BASES + "N neighbor F3 12 base=T4x3 x=1,0,0,0,0,0\n"
        with self.assertRaises(CatalogError) as ctx:
            CatalogBuilder(load_catalog_text(text)).build("N")
        self.assertEqual(ctx.exception.line, 3)

    def test_length_mismatch(self):
        text = "T mu_circ F3 6 mu=2 rA=1,1,1\n"
        builder = CatalogBuilder(load_catalog_text(text))
        code = builder.build("T")
        self.assertEqual(code.n, 6)
        text = BASES + "S direct_sum F3 16 parts=T4x3\n"
        with self.assertRaises(CatalogError):
            CatalogBuilder(load_catalog_text(text)).build("S")


if __name__ == '__main__':
    unittest.main()
