import csv
import logging
import os
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import TextIO

from qaoa_dla.classify.pipeline import AnalysisOptions, analyze
from qaoa_dla.config import get_settings
from qaoa_dla.errors import DlaError
from qaoa_dla.instances.records import InstanceFormat, load_instance
from qaoa_dla.schemas import BatchErrorOut, BatchSummary, DlaReportOut

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "instance_id",
    "n",
    "m",
    "weighted",
    "freeness",
    "ma_class",
    "ma_dim_log2",
    "lower_bound_log2",
    "lower_bound_bits",
    "prng_id",
)

BatchRow = DlaReportOut | BatchErrorOut


@dataclass
class BatchResult:
    rows: list[BatchRow] = field(default_factory=list)
    summary: BatchSummary = field(default_factory=BatchSummary)

    @property
    def has_errors(self) -> bool:
        return self.summary.errors > 0


def expand_paths(paths: Iterable[str | Path]) -> list[Path]:
    out: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            out.extend(sorted(p for p in path.iterdir() if p.is_file() and not p.name.startswith(".")))
        else:
            out.append(path)
    return out


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = get_settings().batch_threads
    if threads <= 0:
        return os.cpu_count() or 1
    return threads


def batch_options(opts: AnalysisOptions | None = None) -> AnalysisOptions:
    if opts is not None:
        return opts
    return AnalysisOptions(brute_force=get_settings().batch_brute_force)


def _analyze_path(
    path: Path, opts: AnalysisOptions, fmt: InstanceFormat, ignore_weights: bool, include_timings: bool
) -> BatchRow:
    try:
        record = load_instance(path, fmt, ignore_weights=ignore_weights)
        report = analyze(record.graph, opts, instance_id=record.id)
    except DlaError as exc:
        logger.warning("instance failed", extra={"instance_id": path.stem, "code": exc.code, "error": exc.message})
        return BatchErrorOut(instance_id=path.stem, source_path=str(path), code=exc.code, message=exc.message)
    except OSError as exc:
        logger.warning("instance unreadable", extra={"instance_id": path.stem, "error": str(exc)})
        return BatchErrorOut(instance_id=path.stem, source_path=str(path), code="IO_ERROR", message=str(exc))
    return DlaReportOut.from_report(report, prng_id=record.prng_id, include_timings=include_timings)


def run_batch(
    paths: Iterable[str | Path],
    opts: AnalysisOptions | None = None,
    *,
    threads: int | None = None,
    fmt: InstanceFormat = "mqlib",
    ignore_weights: bool = False,
    include_timings: bool = False,
) -> BatchResult:
    """Analyze every instance; rows come back in input order whatever the completion order.

    `threads` is the number of worker processes. Timings are left out unless asked for, so
    repeated runs write identical rows.
    """
    files = expand_paths(paths)
    opts = batch_options(opts)
    workers = resolve_threads(threads)
    if not files:
        return BatchResult()
    job = partial(_analyze_path, opts=opts, fmt=fmt, ignore_weights=ignore_weights, include_timings=include_timings)
    if workers == 1 or len(files) == 1:
        rows = [job(path) for path in files]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(files))) as pool:
            rows = list(pool.map(job, files))
    summary = BatchSummary.from_rows(rows)
    logger.info(
        "batch complete",
        extra={"total": summary.total, "free": summary.free, "errors": summary.errors, "threads": workers},
    )
    return BatchResult(rows, summary)


def write_jsonl(rows: Iterable[BatchRow], stream: TextIO) -> None:
    for row in rows:
        stream.write(row.model_dump_json())
        stream.write("\n")


def write_csv(rows: Iterable[BatchRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        if isinstance(row, DlaReportOut):
            writer.writerow(row.model_dump(include=set(CSV_COLUMNS)))
