"""Tests for ordinal pattern encoding, extraction and pair counts"""

import unittest
import sys
import os
from math import factorial

import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

try:
    from ordchange.errors import InvalidInputError
    from ordchange.ordinal import (
        OrdinalPattern,
        PairCounts,
        PatternSequence,
        count_range,
        decode_pattern,
        encode_pattern,
        extract_sequence,
        extract_sequence_naive,
        n_patterns,
        pattern_table,
    )
    ORDINAL_AVAILABLE = True
except ImportError:
    ORDINAL_AVAILABLE = False


@unittest.skipIf(not ORDINAL_AVAILABLE, "ordinal modules not available")
class TestEncodePattern(unittest.TestCase):
    """Test single-window encoding"""

    def test_increasing_pair(self):
        """Test that an increasing pair is coded 0"""
        pattern = encode_pattern([1, 2])
        self.assertEqual(pattern.permutation, (1, 0))
        self.assertEqual(pattern.code, 0)

    def test_decreasing_pair(self):
        """Test that a decreasing pair is coded 1"""
        pattern = encode_pattern([2, 1])
        self.assertEqual(pattern.permutation, (0, 1))
        self.assertEqual(pattern.code, 1)

    def test_tie_orders_by_decreasing_index(self):
        """Test the tie rule on equal values"""
        self.assertEqual(encode_pattern([5, 5]).permutation, (1, 0))
        self.assertEqual(encode_pattern([5, 5]).code, 0)
        self.assertEqual(encode_pattern([2, 1, 2]).permutation, (2, 0, 1))

    def test_monotone_increasing_is_code_zero(self):
        """Test the increasing window at every order"""
        for order in range(1, 6):
            pattern = encode_pattern(np.arange(order + 1))
            self.assertEqual(pattern.code, 0)
            self.assertEqual(pattern.permutation, tuple(range(order, -1, -1)))

    def test_codes_cover_all_permutations(self):
        """Test that decoding inverts encoding over every code of an order"""
        for order in range(1, 5):
            table = pattern_table(order)
            self.assertEqual(table.shape, (factorial(order + 1), order + 1))
            for code, perm in enumerate(table):
                window = np.empty(order + 1)
                for rank, index in enumerate(perm):
                    window[index] = order - rank
                self.assertEqual(encode_pattern(window).code, code)
                self.assertEqual(decode_pattern(code, order), tuple(perm))

    def test_invalid_windows(self):
        """Test rejection of bad windows and orders"""
        with self.assertRaises(InvalidInputError):
            encode_pattern([1.0])
        with self.assertRaises(InvalidInputError):
            encode_pattern([1.0, np.nan])
        with self.assertRaises(InvalidInputError):
            encode_pattern(np.arange(7))
        with self.assertRaises(InvalidInputError):
            OrdinalPattern(order=2, code=6)
        with self.assertRaises(InvalidInputError):
            n_patterns(0)

    def test_pattern_count(self):
        """Test (d+1)! patterns per order"""
        self.assertEqual(n_patterns(1), 2)
        self.assertEqual(n_patterns(3), 24)
        self.assertEqual(n_patterns(5), 720)


@unittest.skipIf(not ORDINAL_AVAILABLE, "ordinal modules not available")
class TestExtractSequence(unittest.TestCase):
    """Test pattern-sequence extraction"""

    def setUp(self):
        self.rng = np.random.default_rng(20240611)

    def test_order_one_example(self):
        """Test down/up coding of a short series"""
        seq = extract_sequence([3, 1, 2, 4, 1, 3, 2, 4], 1)
        self.assertEqual(seq.codes.tolist(), [1, 0, 0, 1, 0, 1, 0])
        self.assertEqual(seq.start_time, 1)
        self.assertEqual(seq.end_time, 7)
        self.assertEqual(seq.length, 7)

    def test_single_window(self):
        """Test that d+1 values give one pattern"""
        seq = extract_sequence([0.3, 0.1, 0.2, 0.5], 3)
        self.assertEqual(len(seq), 1)
        self.assertEqual(seq.start_time, 3)

    def test_constant_series(self):
        """Test that a constant series has one repeated code"""
        seq = extract_sequence(np.full(40, 2.5), 3)
        self.assertEqual(set(seq.codes.tolist()), {0})

    def test_matches_naive_extraction(self):
        """Test vectorized extraction against per-window sorting"""
        for order in range(1, 6):
            continuous = self.rng.standard_normal(300)
            tied = self.rng.integers(0, 3, size=300).astype(float)
            for x in (continuous, tied):
                fast = extract_sequence(x, order)
                naive = extract_sequence_naive(x, order)
                np.testing.assert_array_equal(fast.codes, naive.codes)
                self.assertEqual(fast.start_time, naive.start_time)

    def test_ties_rank_later_value_higher(self):
        """Test that equal values behave as if the later one were slightly larger"""
        self.assertEqual(extract_sequence([1, 2, 2], 2).codes.tolist(), [0])
        self.assertEqual(extract_sequence([4, 4, 4, 4], 1).codes.tolist(), [0, 0, 0])
        self.assertEqual(
            extract_sequence([2, 2, 1], 2).codes.tolist(),
            extract_sequence([2, 3, 1], 2).codes.tolist(),
        )
        for order in (1, 2, 3):
            tied = self.rng.integers(0, 4, size=400).astype(float)
            nudged = tied + 1e-3 * np.arange(tied.size) / tied.size
            np.testing.assert_array_equal(
                extract_sequence(tied, order).codes, extract_sequence(nudged, order).codes
            )

    def test_iid_patterns_are_uniform(self):
        """Test pattern frequencies of white noise against 1/(d+1)!"""
        for order in (1, 2, 3):
            x = self.rng.standard_normal(200000)
            # windows that share no values are independent
            codes = extract_sequence(x, order).codes[::order + 1]
            p = 1.0 / factorial(order + 1)
            se = np.sqrt(p * (1.0 - p) / codes.size)
            freq = np.bincount(codes, minlength=n_patterns(order)) / codes.size
            self.assertEqual(freq.size, factorial(order + 1))
            self.assertLess(np.max(np.abs(freq - p)), 5 * se)

    def test_monotone_transform_invariance(self):
        """Test that strictly monotone maps leave codes unchanged"""
        x = self.rng.standard_normal(500)
        np.testing.assert_array_equal(
            extract_sequence(x, 3).codes, extract_sequence(np.exp(2 * x) - 7, 3).codes
        )

    def test_invalid_series(self):
        """Test rejection of short and non-finite series"""
        with self.assertRaises(InvalidInputError):
            extract_sequence([1, 2], 3)
        with self.assertRaises(InvalidInputError):
            extract_sequence([1, 2, np.inf, 4, 5], 1)
        with self.assertRaises(InvalidInputError):
            extract_sequence(np.zeros((4, 4)), 1)

    def test_windows_and_sub_sequences(self):
        """Test time indexing of a sequence"""
        seq = extract_sequence([3, 1, 2, 4, 1, 3, 2, 4], 1)
        self.assertEqual(seq.code_at(1), 1)
        self.assertEqual(seq.window(2, 4).tolist(), [0, 0, 1])
        sub = seq.sub_sequence(3, 6)
        self.assertEqual(sub.start_time, 3)
        self.assertEqual(sub.end_time, 6)
        with self.assertRaises(InvalidInputError):
            seq.code_at(0)
        with self.assertRaises(InvalidInputError):
            seq.window(5, 9)


@unittest.skipIf(not ORDINAL_AVAILABLE, "ordinal modules not available")
class TestPairCounts(unittest.TestCase):
    """Test pattern and pair counting"""

    def setUp(self):
        self.alternating = PatternSequence(order=1, start_time=1, codes=np.array([0, 1, 0, 1, 0]))

    def test_alternating_counts(self):
        """Test hand-counted pairs of an alternating sequence"""
        counts = count_range(self.alternating, 1, 5)
        self.assertEqual(counts.total_pairs, 4)
        self.assertEqual(counts.n_single.tolist(), [2, 2])
        self.assertEqual(counts.n_pair.tolist(), [[0, 2], [2, 0]])

    def test_single_pair(self):
        """Test a range holding exactly one pair"""
        counts = count_range(self.alternating, 2, 3)
        self.assertEqual(counts.total_pairs, 1)
        self.assertEqual(counts.n_pair.tolist(), [[0, 0], [1, 0]])

    def test_adjacent_ranges_add_up(self):
        """Test that counts over [a, b] and [b, c] merge into [a, c]"""
        rng = np.random.default_rng(5)
        seq = extract_sequence(rng.standard_normal(400), 2)
        a, c = seq.start_time, seq.end_time
        for b in (a + 1, 100, 250, c - 1):
            self.assertEqual(count_range(seq, a, b) + count_range(seq, b, c), count_range(seq, a, c))

    def test_invalid_ranges(self):
        """Test rejection of empty and out-of-range windows"""
        with self.assertRaises(InvalidInputError):
            count_range(self.alternating, 3, 3)
        with self.assertRaises(InvalidInputError):
            count_range(self.alternating, 0, 4)
        with self.assertRaises(InvalidInputError):
            count_range(self.alternating, 1, 6)

    def test_inconsistent_counts_rejected(self):
        """Test that pair rows must sum to single counts"""
        with self.assertRaises(InvalidInputError):
            PairCounts(order=1, n_single=[1, 1], n_pair=[[1, 1], [0, 0]], total_pairs=2)


if __name__ == '__main__':
    unittest.main()
