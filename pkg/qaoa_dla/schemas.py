from typing import Literal

from pydantic import BaseModel, Field

from qaoa_dla.classify.multiangle import DlaDimension
from qaoa_dla.classify.pipeline import DlaReport, Freeness

TOOL_VERSION = "0.1.0"
BOUND_BITS = (32, 64, 128, 256, 512)


def _log2(dim: DlaDimension | None) -> float | None:
    if dim is None or dim.exact <= 0:
        return None
    return round(dim.log2, 6)


class DlaReportOut(BaseModel):
    instance_id: str
    n: int
    m: int
    weighted: bool
    freeness: Freeness
    is_free: bool
    partition_block_sizes: list[int] = Field(default_factory=list)
    ma_class: str
    ma_component_count: int | None = None
    ma_dim_log2: float | None = None
    ma_dim_exact: str | None = None
    dimension_exact: str | None = None
    lower_bound_log2: float | None = None
    lower_bound_bits: int = 0
    timings_ms: dict[str, float] = Field(default_factory=dict)
    method_trail: list[str] = Field(default_factory=list)
    prng_id: str | None = None
    tool_version: str = TOOL_VERSION

    @classmethod
    def from_report(cls, report: DlaReport, *, prng_id: str | None = None, include_exact: bool = True, include_timings: bool = True) -> "DlaReportOut":
        # exact values go out as decimal strings; at MQLib scale they have thousands of digits
        return cls(
            instance_id=report.instance_id,
            n=report.n,
            m=report.m,
            weighted=report.weighted,
            freeness=report.freeness,
            is_free=report.is_free,
            partition_block_sizes=report.partition.block_sizes(),
            ma_class=report.ma_class.label,
            ma_component_count=report.ma_class.component_count,
            ma_dim_log2=_log2(report.ma_dimension),
            ma_dim_exact=str(report.ma_dimension.exact) if include_exact else None,
            dimension_exact=str(report.dimension.exact) if include_exact and report.dimension is not None else None,
            lower_bound_log2=_log2(report.lower_bound),
            lower_bound_bits=max(report.lower_bound.exact.bit_length() - 1, 0),
            timings_ms=dict(report.timings_ms) if include_timings else {},
            method_trail=list(report.method_trail),
            prng_id=prng_id,
        )


class BatchErrorOut(BaseModel):
    instance_id: str
    source_path: str
    status: Literal["error"] = "error"
    code: str
    message: str


class BatchSummary(BaseModel):
    total: int = 0
    analyzed: int = 0
    errors: int = 0
    free: int = 0
    free_fraction: float = 0.0
    lower_bound_at_least: dict[str, int] = Field(default_factory=lambda: {f"2^{b}": 0 for b in BOUND_BITS})

    @classmethod
    def from_rows(cls, rows: list["DlaReportOut | BatchErrorOut"]) -> "BatchSummary":
        reports = [row for row in rows if isinstance(row, DlaReportOut)]
        free = sum(1 for row in reports if row.is_free)
        bounds = {f"2^{b}": sum(1 for row in reports if row.lower_bound_bits >= b) for b in BOUND_BITS}
        return cls(
            total=len(rows),
            analyzed=len(reports),
            errors=len(rows) - len(reports),
            free=free,
            free_fraction=free / len(reports) if reports else 0.0,
            lower_bound_at_least=bounds,
        )

    def fraction_at_least(self, bits: int) -> float:
        if not self.analyzed:
            return 0.0
        return self.lower_bound_at_least[f"2^{bits}"] / self.analyzed

