"""Tests for series files and output writers"""

import unittest
import sys
import os
import json
import tempfile

import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

try:
    import pandas as pd
    from ordchange.errors import SeriesFileError
    from ordchange.statistics import StatProfile
    from ordchange.services import (
        PROFILE_SCHEMA,
        read_json,
        read_series,
        write_json,
        write_profile,
        write_series,
        write_table,
    )
    SERVICES_AVAILABLE = True
except ImportError:
    SERVICES_AVAILABLE = False


@unittest.skipIf(not SERVICES_AVAILABLE, "service modules not available")
class TestReadSeries(unittest.TestCase):
    """Test series file parsing"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_one_value_per_line(self):
        """Test the plain layout with a blank line"""
        path = self.write("x.txt", "1.5\n-2\n\n3e2\n")
        np.testing.assert_array_equal(read_series(path), [1.5, -2.0, 300.0])

    def test_header_and_columns(self):
        """Test header detection and column selection"""
        path = self.write("x.csv", "time,value\n0,10\n1,20\n2,30\n")
        np.testing.assert_array_equal(read_series(path), [0.0, 1.0, 2.0])
        np.testing.assert_array_equal(read_series(path, column="value"), [10.0, 20.0, 30.0])
        np.testing.assert_array_equal(read_series(path, column=1), [10.0, 20.0, 30.0])

    def test_forced_header(self):
        """Test skipping a numeric first line"""
        path = self.write("x.txt", "7\n8\n9\n")
        np.testing.assert_array_equal(read_series(path, header=True), [8.0, 9.0])
        np.testing.assert_array_equal(read_series(path, header=False), [7.0, 8.0, 9.0])

    def test_bad_value_cites_line(self):
        """Test the 1-based line number of a non-numeric value"""
        path = self.write("x.txt", "1\n2\nabc\n4\n")
        with self.assertRaises(SeriesFileError) as ctx:
            read_series(path)
        self.assertEqual(ctx.exception.line_number, 3)
        self.assertIn(f"{path}:3", str(ctx.exception))

    def test_non_finite_value(self):
        """Test rejection of inf and nan"""
        for text in ("1\ninf\n", "1\nnan\n"):
            with self.assertRaises(SeriesFileError) as ctx:
                read_series(self.write("x.txt", text))
            self.assertEqual(ctx.exception.line_number, 2)

    def test_missing_and_empty_files(self):
        """Test unreadable inputs"""
        with self.assertRaises(SeriesFileError):
            read_series(os.path.join(self.tmp.name, "missing.txt"))
        with self.assertRaises(SeriesFileError):
            read_series(self.write("empty.txt", ""))
        with self.assertRaises(SeriesFileError):
            read_series(self.write("x.csv", "a,b\n1,2\n"), column="c")

    def test_series_written_can_be_read(self):
        """Test write_series output as input"""
        path = os.path.join(self.tmp.name, "out.txt")
        values = np.random.default_rng(0).standard_normal(20)
        write_series(values, path)
        np.testing.assert_array_equal(read_series(path), values)


@unittest.skipIf(not SERVICES_AVAILABLE, "service modules not available")
class TestWriters(unittest.TestCase):
    """Test JSON and CSV writers"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def test_json_sorted_keys(self):
        """Test deterministic JSON"""
        path = os.path.join(self.tmp.name, "out.json")
        write_json({"b": 1, "a": [1, 2]}, path)
        with open(path, encoding="utf-8") as f:
            text = f.read()
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertTrue(text.endswith("\n"))
        self.assertEqual(read_json(path), {"a": [1, 2], "b": 1})

    def test_invalid_json_cites_line(self):
        """Test JSON syntax errors"""
        path = os.path.join(self.tmp.name, "bad.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write('{\n  "a": 1,\n  oops\n}\n')
        with self.assertRaises(SeriesFileError) as ctx:
            read_json(path)
        self.assertEqual(ctx.exception.line_number, 3)

    def test_profile_csv(self):
        """Test the (t, S(t)) table"""
        path = os.path.join(self.tmp.name, "profile.csv")
        write_profile(StatProfile("ceofop", [4, 5, 6], [0.5, 1.5, 1.0]), path)
        frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["schema", "statistic", "t", "s"])
        self.assertEqual(frame["schema"].unique().tolist(), [PROFILE_SCHEMA])
        self.assertEqual(frame["t"].tolist(), [4, 5, 6])
        self.assertEqual(frame["s"].tolist(), [0.5, 1.5, 1.0])

    def test_table_csv(self):
        """Test the leading schema column"""
        path = os.path.join(self.tmp.name, "table.csv")
        write_table(pd.DataFrame({"x": [1, 2]}), "ordchange.test/1", path)
        frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["schema", "x"])
        self.assertEqual(frame["x"].tolist(), [1, 2])


if __name__ == '__main__':
    unittest.main()
