from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from qaoa_dla.errors import ParameterError
from qaoa_dla.graphs.base import Graph
from qaoa_dla.instances.formats import parse_edgelist, parse_mqlib

InstanceFormat = Literal["mqlib", "edgelist"]


@dataclass(frozen=True)
class InstanceRecord:
    id: str
    graph: Graph
    source_path: str
    ignored_weights: bool = False
    prng_id: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ParameterError("instance id must be non-empty")


def parse_instance(text: str | bytes, fmt: InstanceFormat = "mqlib", *, ignore_weights: bool = False, exact: bool = False) -> Graph:
    if fmt == "mqlib":
        return parse_mqlib(text, ignore_weights=ignore_weights, exact=exact)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ParameterError(f"unknown instance format {fmt!r}")


def provenance(text: str | bytes) -> str | None:
    """PRNG id from a leading ``# prng=<id> seed=<s>`` comment, as written by sample-er."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if not line.startswith("#"):
            return None
        fields = dict(token.split("=", 1) for token in line[1:].split() if "=" in token)
        if "prng" in fields:
            seed = fields.get("seed")
            return f"{fields['prng']}@{seed}" if seed else fields["prng"]
    return None


def load_instance(
    path: str | Path,
    fmt: InstanceFormat = "mqlib",
    *,
    ignore_weights: bool = False,
    exact: bool = False,
    instance_id: str | None = None,
) -> InstanceRecord:
    source = Path(path)
    raw = source.read_bytes()
    graph = parse_instance(raw, fmt, ignore_weights=ignore_weights, exact=exact)
    return InstanceRecord(
        instance_id or source.stem,
        graph,
        str(source),
        ignore_weights and fmt == "mqlib",
        provenance(raw),
    )
