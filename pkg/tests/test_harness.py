"""
Unit tests for the timing harness, CSV output and summaries
"""

import io
import math
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from src.bench.generators import SuiteSpec, gen_eta
from src.bench.harness import (
    ACCEPT, CSV_HEADER, REJECT, BenchConfig, BenchRecord, Summary,
    format_summary, read_csv, run_bench, run_suite, summarize, time_check,
    write_csv,
)
from src.conv.base import ConvOptions
from src.data.program_parser import parse_program
from src.elab.backend import Backend
from src.utils.errors import BenchError


def record(backend, trial, ms, unfolds=0, suite="eta", size=1):
    return BenchRecord(suite, size, backend, trial, int(ms * 1_000_000), unfolds, ACCEPT)


class TestBenchConfig(unittest.TestCase):

    def test_defaults(self):
        config = BenchConfig()
        self.assertEqual(config.trials, 10)
        self.assertEqual(config.backends, (Backend.SYNTACTIC, Backend.TYPED))

    def test_validation(self):
        with self.assertRaises(BenchError):
            BenchConfig(trials=0)
        with self.assertRaises(BenchError):
            BenchConfig(warmup=-1)
        with self.assertRaises(BenchError):
            BenchConfig(backends=())

    def test_options_per_backend(self):
        config = BenchConfig(speculate=False, force_first=True, sigma_unit_eta=False)
        self.assertEqual(config.options_for(Backend.SYNTACTIC), ConvOptions(speculate=False))
        self.assertEqual(config.options_for(Backend.TYPED),
                         ConvOptions(speculate=False, sigma_unit_eta=False))
        self.assertEqual(BenchConfig().options_for(Backend.SYNTACTIC), ConvOptions())


class TestTimeCheck(unittest.TestCase):

    def test_verdicts(self):
        program = parse_program(gen_eta(1))
        wall_ns, unfolds, verdict = time_check(program, Backend.TYPED, ConvOptions())
        self.assertGreaterEqual(wall_ns, 1)
        self.assertGreaterEqual(unfolds, 1)
        self.assertEqual(verdict, ACCEPT)
        self.assertEqual(time_check(program, Backend.SYNTACTIC, ConvOptions())[2], REJECT)

    def test_empty_program(self):
        wall_ns, unfolds, verdict = time_check(parse_program(""), Backend.SYNTACTIC, ConvOptions())
        self.assertGreaterEqual(wall_ns, 1)
        self.assertEqual((unfolds, verdict), (0, ACCEPT))


class TestRunBench(unittest.TestCase):

    def test_rows_per_trial_and_backend(self):
        records = run_bench("eta", 1, gen_eta(1), BenchConfig(trials=3))
        self.assertEqual(len(records), 6)
        self.assertEqual([(r.trial, r.backend) for r in records[:2]],
                         [(1, "syntactic"), (1, "typed")])
        self.assertEqual({r.verdict for r in records if r.backend == "typed"}, {ACCEPT})
        self.assertEqual({r.verdict for r in records if r.backend == "syntactic"}, {REJECT})
        self.assertTrue(all(r.wall_ns >= 1 for r in records))

    def test_unfolds_are_deterministic(self):
        records = run_bench("eta", 2, gen_eta(2), BenchConfig(trials=2, backends=(Backend.TYPED,)))
        self.assertEqual(records[0].unfolds, records[1].unfolds)

    @patch('src.bench.harness.parse_program', wraps=parse_program)
    def test_parses_once(self, mock_parse):
        run_bench("eta", 1, gen_eta(1), BenchConfig(trials=2, warmup=1))
        self.assertEqual(mock_parse.call_count, 1)

    @patch('src.bench.harness.time_check')
    def test_changed_verdict_aborts(self, mock_time_check):
        mock_time_check.side_effect = [(10, 0, ACCEPT), (12, 0, REJECT)]
        config = BenchConfig(trials=2, backends=(Backend.SYNTACTIC,))
        with self.assertLogs('src.bench.harness', level='WARNING') as logs:
            with self.assertRaises(BenchError):
                run_bench("eta", 1, gen_eta(1), config)
        self.assertIn("verdict changed", logs.output[0])

    @patch('src.bench.harness.time_check')
    def test_warmup_is_not_recorded(self, mock_time_check):
        mock_time_check.return_value = (5, 0, ACCEPT)
        records = run_bench("eta", 1, gen_eta(1), BenchConfig(trials=1, warmup=2))
        self.assertEqual(mock_time_check.call_count, 2 * 2 + 2)
        self.assertEqual(len(records), 2)

    def test_run_suite(self):
        records = run_suite(SuiteSpec("eta", 1), BenchConfig(trials=1))
        self.assertEqual(len(records), 2)
        self.assertEqual({(r.suite, r.size) for r in records}, {("eta", 1)})


class TestCsv(unittest.TestCase):

    def setUp(self):
        self.test_dir = Path(tempfile.mkdtemp())
        self.records = [record("syntactic", 1, 1.5, 3), record("typed", 1, 2.0, 4)]

    def tearDown(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)

    def test_header_and_line_endings(self):
        out = io.StringIO()
        write_csv(self.records, out)
        text = out.getvalue()
        self.assertTrue(text.startswith("suite,size,backend,trial,wall_ns,unfolds,verdict\n"))
        self.assertNotIn("\r", text)
        self.assertEqual(text.splitlines()[1], "eta,1,syntactic,1,1500000,3,accept")
        self.assertEqual(len(text.splitlines()), 3)

    def test_file_round_trip(self):
        path = self.test_dir / "bench.csv"
        write_csv(self.records, path)
        self.assertEqual(read_csv(path), self.records)
        self.assertNotIn(b"\r", path.read_bytes())

    def test_unexpected_header(self):
        path = self.test_dir / "other.csv"
        path.write_text("a,b\n1,2\n", encoding="utf-8")
        with self.assertRaises(BenchError):
            read_csv(path)

    def test_header_constant(self):
        self.assertEqual(",".join(CSV_HEADER), "suite,size,backend,trial,wall_ns,unfolds,verdict")


class TestSummary(unittest.TestCase):

    def test_means_and_normalization(self):
        records = [record("syntactic", 1, 1.0, 2), record("syntactic", 2, 3.0, 2),
                   record("typed", 1, 4.0, 6), record("typed", 2, 4.0, 8)]
        [summary] = summarize(records)
        self.assertAlmostEqual(summary.syntactic_mean_ms, 2.0)
        self.assertAlmostEqual(summary.syntactic_sd_ms, math.sqrt(2))
        self.assertAlmostEqual(summary.typed_mean_ms, 4.0)
        self.assertAlmostEqual(summary.typed_sd_ms, 0.0)
        self.assertAlmostEqual(summary.normalized_syntactic_mean, 1.0)
        self.assertAlmostEqual(summary.normalized_typed_mean, 2.0)
        self.assertAlmostEqual(summary.typed_unfolds_mean, 7.0)

    def test_single_trial_has_zero_sd(self):
        [summary] = summarize([record("typed", 1, 2.0)])
        self.assertEqual(summary.typed_sd_ms, 0.0)
        self.assertIsNone(summary.syntactic_mean_ms)
        self.assertIsNone(summary.normalized_typed_mean)

    def test_groups_by_suite_and_size(self):
        records = [record("typed", 1, 1.0, size=1), record("typed", 1, 1.0, size=2),
                   record("typed", 1, 1.0, suite="stlc", size=1)]
        keys = [(s.suite, s.size) for s in summarize(records)]
        self.assertEqual(keys, [("eta", 1), ("eta", 2), ("stlc", 1)])

    def test_format_missing_cells(self):
        text = format_summary([Summary("eta", 1, typed_mean_ms=2.0, typed_sd_ms=0.0,
                                       typed_unfolds_mean=3.0)])
        header, row = text.splitlines()
        self.assertTrue(header.startswith("suite"))
        self.assertIn("typed/syn", header)
        self.assertIn("-", row.split())
        self.assertIn("2.000", row)

    def test_format_normalized_column(self):
        text = format_summary([Summary("eta", 1, 1.0, 0.0, 3.0, 0.0, 1.0, 2.0)])
        self.assertIn("3.000", text.splitlines()[1].split())


if __name__ == '__main__':
    unittest.main()
