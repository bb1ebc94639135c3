import logging
import time
from dataclasses import dataclass, field
from typing import Literal

from qaoa_dla.classify.multiangle import DlaClass, DlaDimension, classify_multiangle, dimension_lower_bound
from qaoa_dla.classify.weighted import weighted_freeness_check
from qaoa_dla.config import get_settings
from qaoa_dla.errors import CertificateError, ClosureOverflow, NotASubdivisionError, UnsupportedSizeError
from qaoa_dla.graphs.base import CERTIFIED_FREE, Graph, VertexPartition
from qaoa_dla.pauli.closure import lie_closure
from qaoa_dla.splitting.certificate import Certificate, certify_asym_subdivision
from qaoa_dla.splitting.partition import bfs_splitting, split_generators

logger = logging.getLogger(__name__)

Freeness = Literal[
    "Splittable",
    "CertifiedSubdivision",
    "CertifiedExtension",
    "CertifiedWeighted",
    "BruteForcedFree",
    "BruteForcedNotFree",
    "Undetermined",
]
FREE_VERDICTS = frozenset(
    {"Splittable", "CertifiedSubdivision", "CertifiedExtension", "CertifiedWeighted", "BruteForcedFree"}
)


@dataclass(frozen=True)
class AnalysisOptions:
    brute_force: bool = True
    certify: bool = True
    max_closure_qubits: int | None = None
    closure_max_dim: int | None = None


@dataclass
class DlaReport:
    instance_id: str
    n: int
    m: int
    weighted: bool
    freeness: Freeness
    partition: VertexPartition
    ma_class: DlaClass
    ma_dimension: DlaDimension
    lower_bound: DlaDimension
    dimension: DlaDimension | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)
    method_trail: list[str] = field(default_factory=list)
    certificate: Certificate | None = None

    @property
    def is_free(self) -> bool:
        return self.freeness in FREE_VERDICTS


class _Stopwatch:
    def __init__(self, timings: dict[str, float]) -> None:
        self.timings = timings

    def run(self, stage: str, fn, *args):
        started = time.perf_counter()
        try:
            return fn(*args)
        finally:
            self.timings[stage] = round((time.perf_counter() - started) * 1000, 3)


def analyze(g: Graph, opts: AnalysisOptions | None = None, *, instance_id: str = "") -> DlaReport:
    """Run the verdict pipeline on the whole graph; expected failures end up in the report.

    The graph is analyzed as a whole, not component by component. The QAOA generators couple all
    components, so per-component verdicts do not combine (two copies of a free graph are not free);
    splitting and classification both handle several components directly.
    """
    opts = opts or AnalysisOptions()
    settings = get_settings()
    cap = opts.max_closure_qubits or settings.max_closure_qubits
    timings: dict[str, float] = {}
    trail: list[str] = []
    clock = _Stopwatch(timings)

    plain = g.without_uniform_weights()
    if plain is not g:
        trail.append("uniform_weights")
        g = plain

    ma_class, ma_dim = clock.run("classify", classify_multiangle, g.unweighted())

    def report(freeness: Freeness, partition: VertexPartition, **extra) -> DlaReport:
        free = freeness in FREE_VERDICTS
        dimension = extra.pop("dimension", ma_dim if free else None)
        lower = ma_dim if free else extra.pop("lower_bound", None) or dimension_lower_bound(g, partition)
        out = DlaReport(
            instance_id=instance_id,
            n=g.n,
            m=g.m,
            weighted=g.weighted,
            freeness=freeness,
            partition=partition,
            ma_class=ma_class,
            ma_dimension=ma_dim,
            lower_bound=lower,
            dimension=dimension,
            timings_ms=timings,
            method_trail=trail,
            **extra,
        )
        logger.info(
            "analysis complete",
            extra={"instance_id": instance_id, "stage": trail[-1] if trail else "none", "n": g.n, "m": g.m, "freeness": freeness},
        )
        return out

    if g.weighted:
        partition = VertexPartition.trivial(g.n)
        trail.append("weighted_check")
        try:
            passed = clock.run("weighted_check", weighted_freeness_check, g)
        except UnsupportedSizeError:
            passed = False
            trail.append("weighted_check:degree_guard")
        if passed:
            return report("CertifiedWeighted", VertexPartition.of([u] for u in range(g.n)))
    else:
        trail.append("bfs_splitting")
        partition = clock.run("bfs_splitting", bfs_splitting, g)
        if partition.is_discrete:
            return report("Splittable", partition)
        if CERTIFIED_FREE in g.tags:
            trail.append("extension_tag")
            return report("CertifiedExtension", partition)
        if opts.certify:
            trail.append("certify_subdivision")
            try:
                cert = clock.run("certify_subdivision", certify_asym_subdivision, g)
            except NotASubdivisionError as exc:
                trail.append(f"certify_subdivision:{exc.property}")
            except CertificateError as exc:
                logger.warning(
                    "certificate construction failed",
                    extra={"instance_id": instance_id, "stage": "certify_subdivision", "error": exc.message},
                )
                trail.append("certify_subdivision:construction")
            else:
                return report("CertifiedSubdivision", partition, certificate=cert)

    if opts.brute_force and g.n <= cap:
        trail.append("brute_force")
        generators = split_generators(g, partition)
        maxdim = opts.closure_max_dim or max(ma_dim.exact, 1)
        try:
            basis = clock.run("brute_force", lambda: lie_closure(generators, maxdim, max_qubits=cap))
        except ClosureOverflow:
            trail.append("brute_force:overflow")
        else:
            found = DlaDimension(basis.dimension)
            if found == ma_dim:
                return report("BruteForcedFree", partition)
            return report("BruteForcedNotFree", partition, dimension=found, lower_bound=found)

    trail.append("lower_bound")
    return report("Undetermined", partition)
