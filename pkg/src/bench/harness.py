"""
Timing harness: runs program checks per backend and trial, writes CSV, summarizes
"""

import csv
import logging
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from src.bench.generators import SuiteSpec, generate
from src.conv.base import ConvOptions
from src.core.raw import RawProgram
from src.data.program_parser import parse_program
from src.elab.backend import Backend
from src.elab.elaborator import Elaborator
from src.elab.errors import TypeCheckError
from src.nbe.values import UnfoldCounter
from src.utils.config import ensure_recursion_limit
from src.utils.errors import BenchError

logger = logging.getLogger(__name__)

ACCEPT = "accept"
REJECT = "reject"

CSV_HEADER = ("suite", "size", "backend", "trial", "wall_ns", "unfolds", "verdict")


@dataclass(frozen=True)
class BenchRecord:
    """One timed check of one program by one backend"""
    suite: str
    size: int
    backend: str
    trial: int
    wall_ns: int
    unfolds: int
    verdict: str

    def as_row(self) -> List:
        return [getattr(self, f.name) for f in fields(self)]


@dataclass(frozen=True)
class BenchConfig:
    trials: int = 10
    backends: Tuple[Backend, ...] = (Backend.SYNTACTIC, Backend.TYPED)
    warmup: int = 0
    speculate: bool = True
    force_first: bool = False
    sigma_unit_eta: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise BenchError(f"trials must be at least 1, got {self.trials}")
        if self.warmup < 0:
            raise BenchError(f"warmup must not be negative, got {self.warmup}")
        if not self.backends:
            raise BenchError("no backend selected")

    def options_for(self, backend: Backend) -> ConvOptions:
        if backend is Backend.SYNTACTIC:
            return ConvOptions(speculate=not self.force_first)
        return ConvOptions(speculate=self.speculate, sigma_unit_eta=self.sigma_unit_eta)


def time_check(program: RawProgram, backend: Backend, options: ConvOptions) -> Tuple[int, int, str]:
    """Check a parsed program once; returns (wall time in ns, unfold count, verdict)"""
    counter = UnfoldCounter()
    elaborator = Elaborator(backend, options, counter)
    start = time.perf_counter_ns()
    try:
        elaborator.check_program(program)
        verdict = ACCEPT
    except TypeCheckError:
        verdict = REJECT
    elapsed = time.perf_counter_ns() - start
    return max(elapsed, 1), counter.count, verdict


def run_bench(suite: str, size: int, source: str, config: BenchConfig = BenchConfig()) -> List[BenchRecord]:
    """Parse once, then time every (trial, backend) pair in sequence"""
    ensure_recursion_limit()
    program = parse_program(source)
    logger.info(f"Benchmarking {suite} size {size}: {len(program)} definitions, "
                f"{config.trials} trials, backends {', '.join(b.value for b in config.backends)}")

    for i in range(config.warmup):
        for backend in config.backends:
            time_check(program, backend, config.options_for(backend))
        logger.debug(f"Warm-up round {i + 1} done")

    records: List[BenchRecord] = []
    verdicts: Dict[Backend, str] = {}
    for trial in range(1, config.trials + 1):
        for backend in config.backends:
            wall_ns, unfolds, verdict = time_check(program, backend, config.options_for(backend))
            first = verdicts.setdefault(backend, verdict)
            if verdict != first:
                logger.warning(f"{backend.value} verdict changed in trial {trial}: {first} -> {verdict}")
                raise BenchError(f"nondeterministic verdict for {suite} size {size} "
                                 f"with the {backend.value} backend")
            logger.debug(f"{suite}-{size} {backend.value} trial {trial}: "
                         f"{wall_ns / 1e6:.3f} ms, {unfolds} unfolds, {verdict}")
            records.append(BenchRecord(suite, size, backend.value, trial, wall_ns, unfolds, verdict))
    return records


def run_suite(spec: SuiteSpec, config: BenchConfig = BenchConfig()) -> List[BenchRecord]:
    return run_bench(spec.family, spec.size, generate(spec), config)


def write_csv(records: Iterable[BenchRecord], out: Union[str, Path, TextIO]) -> None:
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_csv(records, f)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.as_row())


def read_csv(path: Union[str, Path]) -> List[BenchRecord]:
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise BenchError(f"{path}: unexpected CSV header {reader.fieldnames}")
        return [BenchRecord(row["suite"], int(row["size"]), row["backend"], int(row["trial"]),
                            int(row["wall_ns"]), int(row["unfolds"]), row["verdict"])
                for row in reader]


@dataclass(frozen=True)
class Summary:
    """Per (suite, size) statistics; times in milliseconds"""
    suite: str
    size: int
    syntactic_mean_ms: Optional[float] = None
    syntactic_sd_ms: Optional[float] = None
    typed_mean_ms: Optional[float] = None
    typed_sd_ms: Optional[float] = None
    syntactic_unfolds_mean: Optional[float] = None
    typed_unfolds_mean: Optional[float] = None

    @property
    def normalized_syntactic_mean(self) -> Optional[float]:
        return None if self.syntactic_mean_ms is None else 1.0

    @property
    def normalized_typed_mean(self) -> Optional[float]:
        if self.syntactic_mean_ms is None or self.typed_mean_ms is None:
            return None
        return self.typed_mean_ms / self.syntactic_mean_ms


def _stats(values: Sequence[float]) -> Tuple[float, float]:
    arr = np.asarray(values, dtype=np.float64)
    sd = float(np.std(arr, ddof=1)) if arr.size > 1 else 0.0
    return float(np.mean(arr)), sd


def summarize(records: Iterable[BenchRecord]) -> List[Summary]:
    groups: Dict[Tuple[str, int], Dict[str, List[BenchRecord]]] = {}
    for record in records:
        groups.setdefault((record.suite, record.size), {}).setdefault(record.backend, []).append(record)

    summaries = []
    for (suite, size), by_backend in groups.items():
        values = {}
        for backend in Backend:
            rows = by_backend.get(backend.value)
            if not rows:
                continue
            mean, sd = _stats([r.wall_ns / 1e6 for r in rows])
            unfolds, _ = _stats([r.unfolds for r in rows])
            values[f"{backend.value}_mean_ms"] = mean
            values[f"{backend.value}_sd_ms"] = sd
            values[f"{backend.value}_unfolds_mean"] = unfolds
        summaries.append(Summary(suite, size, **values))
    return summaries


SUMMARY_COLUMNS = ("suite", "size", "syn ms", "syn sd", "typed ms", "typed sd",
                   "typed/syn", "syn unfolds", "typed unfolds")


def _cell(value: Optional[float], digits: int = 3) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def format_summary(summaries: Iterable[Summary]) -> str:
    rows = [SUMMARY_COLUMNS]
    for s in summaries:
        rows.append((s.suite, str(s.size),
                     _cell(s.syntactic_mean_ms), _cell(s.syntactic_sd_ms),
                     _cell(s.typed_mean_ms), _cell(s.typed_sd_ms),
                     _cell(s.normalized_typed_mean),
                     _cell(s.syntactic_unfolds_mean, 1), _cell(s.typed_unfolds_mean, 1)))
    widths = [max(len(row[i]) for row in rows) for i in range(len(SUMMARY_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) if i < 2 else cell.rjust(w)
                       for i, (cell, w) in enumerate(zip(row, widths))).rstrip()
             for row in rows]
    return "\n".join(lines)
