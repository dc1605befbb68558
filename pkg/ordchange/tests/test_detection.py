"""Tests for bootstrap thresholds and single/multiple change-point detection"""

import unittest
import sys
import os

import numpy as np

# Add repository root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

try:
    from ordchange.errors import ConfigError, SeriesTooShortError
    from ordchange.ordinal import extract_sequence
    from ordchange.detection import (
        ChangePointDetector,
        DetectionConfig,
        DetectionReport,
        SegmentStep,
        StatisticKind,
        binary_segmentation,
        block_shuffle,
        bootstrap_maxima,
        detect_multiple,
        detect_series,
        detect_single,
        map_to_series_time,
        minimal_segment_length,
        n_bootstrap,
        threshold_decision,
        threshold_rank,
    )
    from ordchange.detection.bootstrap import check_alpha
    DETECTION_AVAILABLE = True
except ImportError:
    DETECTION_AVAILABLE = False


def noise_then_alternation(seed, length, noise=0.1):
    """White noise up to L/2, then a noisy sign alternation"""
    rng = np.random.default_rng(seed)
    half = length // 2
    x = np.empty(length + 1)
    x[:half + 1] = rng.standard_normal(half + 1)
    t = np.arange(half + 1, length + 1)
    x[half + 1:] = 2.0 * np.where(t % 2, 1.0, -1.0) + noise * rng.standard_normal(t.size)
    return x


@unittest.skipIf(not DETECTION_AVAILABLE, "detection modules not available")
class TestBootstrap(unittest.TestCase):
    """Test bootstrap sizes, ranks and block shuffling"""

    def test_replicate_count(self):
        """Test floor(5 / alpha) replicates"""
        self.assertEqual(n_bootstrap(0.05), 100)
        self.assertEqual(n_bootstrap(0.1), 50)
        self.assertEqual(n_bootstrap(0.01), 500)
        self.assertEqual(n_bootstrap(0.3), 16)
        self.assertEqual(n_bootstrap(0.05, override=7), 7)

    def test_threshold_rank(self):
        """Test floor(alpha N) clamped to [1, N]"""
        self.assertEqual(threshold_rank(0.05, 100), 5)
        self.assertEqual(threshold_rank(0.1, 50), 5)
        self.assertEqual(threshold_rank(0.001, 10), 1)

    def test_alpha_range(self):
        """Test rejection of alpha outside (0, 1)"""
        for alpha in (0.0, 1.0, -0.2, 1.5):
            with self.assertRaises(ConfigError):
                check_alpha(alpha)

    def test_threshold_decision(self):
        """Test the k-th largest maximum as threshold, ties detected"""
        maxima = np.arange(1.0, 101.0)
        threshold, rank, detected = threshold_decision(96.0, maxima, 0.05)
        self.assertEqual((threshold, rank, detected), (96.0, 5, True))
        self.assertFalse(threshold_decision(95.9, maxima, 0.05)[2])

    def test_block_shuffle_keeps_blocks(self):
        """Test that blocks of d+1 values move as units"""
        values = np.arange(10)
        shuffled = block_shuffle(values, 3, np.random.default_rng(0))
        np.testing.assert_array_equal(np.sort(shuffled), values)
        starts = [i for i, v in enumerate(shuffled) if v % 3 == 0]
        for i in starts:
            block = shuffled[i:i + 3]
            expected = np.arange(shuffled[i], min(shuffled[i] + 3, 10))
            np.testing.assert_array_equal(block[:expected.size], expected)

    def test_block_shuffle_is_seeded(self):
        """Test reproducible surrogates"""
        values = np.arange(50)
        first = block_shuffle(values, 4, np.random.default_rng(12))
        second = block_shuffle(values, 4, np.random.default_rng(12))
        np.testing.assert_array_equal(first, second)

    def test_maxima_do_not_depend_on_threads(self):
        """Test counter-based replicate streams"""
        def draw(rng):
            return float(rng.standard_normal(5).max())

        serial = bootstrap_maxima(draw, 40, 123, (3, 500), threads=1)
        parallel = bootstrap_maxima(draw, 40, 123, (3, 500), threads=4)
        np.testing.assert_array_equal(serial, parallel)
        other_segment = bootstrap_maxima(draw, 40, 123, (3, 501), threads=1)
        self.assertFalse(np.array_equal(serial, other_segment))

    def test_threshold_gate_is_monotone(self):
        """Test decisions below, between and above the replicate maxima"""
        rng = np.random.default_rng(5)
        for alpha in (0.01, 0.05, 0.2, 0.45):
            maxima = rng.gamma(2.0, size=n_bootstrap(alpha))
            self.assertFalse(threshold_decision(maxima.min() - 1e-9, maxima, alpha)[2])
            self.assertTrue(threshold_decision(maxima.max() + 1e-9, maxima, alpha)[2])
            statistics = np.linspace(maxima.min() - 1.0, maxima.max() + 1.0, 200)
            decisions = [threshold_decision(s, maxima, alpha)[2] for s in statistics]
            self.assertEqual(decisions, sorted(decisions))


@unittest.skipIf(not DETECTION_AVAILABLE, "detection modules not available")
class TestDetectionConfig(unittest.TestCase):
    """Test detection settings"""

    def test_minimal_segment_length(self):
        """Test T_min = (d+1)!(d+1)"""
        self.assertEqual(minimal_segment_length(1), 4)
        self.assertEqual(minimal_segment_length(2), 18)
        self.assertEqual(minimal_segment_length(3), 96)

    def test_defaults(self):
        """Test derived defaults"""
        config = DetectionConfig()
        self.assertEqual(config.t_min, 96)
        self.assertEqual(config.minimum_series_length, 193)
        self.assertIs(config.statistic, StatisticKind.CEOFOP)

    def test_statistic_spellings(self):
        """Test statistic names as typed on the command line"""
        self.assertIs(DetectionConfig(statistic="bdexp").statistic, StatisticKind.BD_EXP)
        self.assertIs(DetectionConfig(statistic="BD-corr").statistic, StatisticKind.BD_CORR)
        with self.assertRaises(ConfigError):
            DetectionConfig(statistic="cmmd")

    def test_invalid_settings(self):
        """Test config errors"""
        for kwargs in ({"order": 0}, {"order": 6}, {"alpha": 1.5}, {"t_min": 0},
                       {"n_boot_override": 0}, {"master_seed": -1}, {"threads": 0},
                       {"delta": 2.0}):
            with self.assertRaises(ConfigError):
                DetectionConfig(**kwargs)


@unittest.skipIf(not DETECTION_AVAILABLE, "detection modules not available")
class TestSingleDetection(unittest.TestCase):
    """Test detection of at most one change-point"""

    def test_too_short_sequence(self):
        """Test that a sequence shorter than 2 T_min yields nothing"""
        x = np.random.default_rng(0).standard_normal(192)
        seq = extract_sequence(x, 3)
        self.assertEqual(seq.end_time - seq.start_time, 2 * 96 - 4)
        self.assertIsNone(detect_single(seq, alpha=0.05, seed=1))

        detector = ChangePointDetector.for_sequence(seq)
        test = detector.test_segment(seq.start_time, seq.end_time)
        self.assertTrue(test.too_short)
        self.assertFalse(test.detected)
        self.assertIn("too short", test.describe())

    def test_strong_change_is_found(self):
        """Test detection of a switch from noise to alternation"""
        config = DetectionConfig(order=1, master_seed=99)
        seq = extract_sequence(noise_then_alternation(3, 400), 1)
        estimate = detect_single(seq, alpha=0.05, config=config)
        self.assertIsNotNone(estimate)
        self.assertLessEqual(abs(estimate - 200), 5)

    def test_segment_test_records_threshold(self):
        """Test the bookkeeping of one bootstrap test"""
        seq = extract_sequence(noise_then_alternation(4, 400), 1)
        detector = ChangePointDetector.for_sequence(seq, DetectionConfig(order=1, master_seed=5))
        test = detector.test_segment(seq.start_time, seq.end_time, 0.05)
        self.assertEqual(test.n_boot, 100)
        self.assertEqual(test.threshold_rank, 5)
        self.assertEqual(test.step, SegmentStep.SINGLE)
        self.assertGreaterEqual(test.statistic_value, test.threshold)
        self.assertEqual(test.change_point, test.candidate)
        self.assertGreaterEqual(test.candidate, seq.start_time + 4)
        self.assertLessEqual(test.candidate, seq.end_time - 4)

    def test_results_do_not_depend_on_threads(self):
        """Test identical reports for any worker count"""
        x = noise_then_alternation(6, 600, noise=0.8)
        serial = detect_series(x, DetectionConfig(order=2, master_seed=77, threads=1), multi=True)
        parallel = detect_series(x, DetectionConfig(order=2, master_seed=77, threads=3), multi=True)
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_bd_statistic_detects_mean_step(self):
        """Test BD^exp thresholded by the same bootstrap"""
        rng = np.random.default_rng(21)
        x = np.r_[np.zeros(150), np.full(150, 5.0)] + 0.1 * rng.standard_normal(300)
        config = DetectionConfig(order=3, statistic="bd_exp", master_seed=1)
        report = detect_series(x, config, multi=False)
        self.assertEqual(report.statistic, "bd_exp")
        self.assertEqual(len(report.change_points), 1)
        self.assertLessEqual(abs(report.change_points[0] - 149), 2)

    def test_series_too_short(self):
        """Test the length bound for raw series"""
        with self.assertRaises(SeriesTooShortError) as ctx:
            detect_series(np.zeros(192), DetectionConfig(order=3))
        self.assertIn("2(d+1)!(d+1)", str(ctx.exception))

    def test_minimal_length_below_order(self):
        """Test a segment long enough for t_min but without an admissible split"""
        x = np.random.default_rng(0).standard_normal(8)
        seq = extract_sequence(x, 3)
        config = DetectionConfig(order=3, t_min=1, master_seed=1)
        self.assertIsNone(detect_single(seq, config=config))

        test = ChangePointDetector.for_sequence(seq, config).test_segment(seq.start_time, seq.end_time)
        self.assertTrue(test.too_short)
        self.assertFalse(test.detected)
        self.assertIsNone(test.profile)
        self.assertEqual(test.n_boot, 0)

        for multi in (False, True):
            report = detect_series(x, config, multi=multi)
            self.assertEqual(report.change_points, [])


@unittest.skipIf(not DETECTION_AVAILABLE, "detection modules not available")
class TestMultipleDetection(unittest.TestCase):
    """Test binary segmentation with verification"""

    def test_change_survives_verification(self):
        """Test that the strong change is among the verified boundaries"""
        x = noise_then_alternation(8, 800, noise=0.8)
        seq = extract_sequence(x, 1)
        report = detect_multiple(seq, alpha=0.05, seed=2024, config=DetectionConfig(order=1))
        self.assertTrue(any(abs(t - 400) <= 10 for t in report.change_points))
        self.assertEqual(report.n_segments, len(report.change_points) + 1)
        steps = {test.step for test in report.tests}
        self.assertIn(SegmentStep.PRELIMINARY, steps)
        self.assertIn(SegmentStep.VERIFICATION, steps)

    def test_change_points_keep_minimal_distance(self):
        """Test that every accepted candidate is t_min inside its segment"""
        cases = [
            (noise_then_alternation(8, 800, noise=0.8), DetectionConfig(order=1, master_seed=2024)),
            (np.random.default_rng(12).standard_normal(80), DetectionConfig(order=2, t_min=1, master_seed=4)),
        ]
        for x, config in cases:
            report = detect_series(x, config)
            for test in report.tests:
                if test.too_short:
                    continue
                self.assertFalse(test.profile.is_empty)
                self.assertGreaterEqual(test.candidate - test.t_start, config.t_min)
                self.assertGreaterEqual(test.t_end - test.candidate, config.t_min)

    def test_verification_never_adds_boundaries(self):
        """Test that the second step only moves or deletes boundaries"""
        for seed in (8, 10, 11):
            seq = extract_sequence(noise_then_alternation(seed, 800, noise=0.8), 1)
            report = detect_multiple(seq, alpha=0.05, seed=seed, config=DetectionConfig(order=1))
            preliminary = sum(
                1 for test in report.tests
                if test.step is SegmentStep.PRELIMINARY and test.detected
            )
            verification = [test for test in report.tests if test.step is SegmentStep.VERIFICATION]
            self.assertLessEqual(len(report.change_points), preliminary)
            self.assertEqual(len(report.change_points), sum(test.detected for test in verification))

    def test_report_layout(self):
        """Test the JSON layout of a report"""
        x = noise_then_alternation(9, 800, noise=0.8)
        report = detect_series(x, DetectionConfig(order=1, master_seed=3))
        data = report.to_dict()
        self.assertEqual(data["schema"], "ordchange.report/1")
        self.assertEqual(data["change_points"], report.change_points)
        self.assertEqual(data["config"]["master_seed"], 3)
        self.assertEqual(len(data["tests"]), len(report.tests))
        self.assertEqual(len(data["decisions"]), len(report.tests))

    def test_alpha_must_allow_doubling(self):
        """Test that the preliminary level 2 alpha stays below 1"""
        seq = extract_sequence(np.random.default_rng(1).standard_normal(300), 1)
        detector = ChangePointDetector.for_sequence(seq, DetectionConfig(order=1, alpha=0.6))
        with self.assertRaises(ConfigError):
            binary_segmentation(detector)

    def test_report_rejects_unordered_change_points(self):
        """Test the increasing change-point invariant"""
        with self.assertRaises(ValueError):
            DetectionReport("ceofop", DetectionConfig(), change_points=[50, 20])

    def test_series_time_mapping(self):
        """Test that pattern times are reported as series times"""
        self.assertEqual(map_to_series_time(5000, 3), 5000)
        self.assertEqual(map_to_series_time(17, 1), 17)


if __name__ == '__main__':
    unittest.main()
