from typing import Any

from celery import Celery

from qaoa_dla.classify.pipeline import AnalysisOptions, analyze
from qaoa_dla.config import get_settings
from qaoa_dla.instances.formats import parse_mqlib
from qaoa_dla.schemas import DlaReportOut


settings = get_settings()
celery_app = Celery("qaoa_dla", broker=settings.redis_url, backend=settings.redis_url)


@celery_app.task
def analyze_instance_task(text: str, instance_id: str, options: dict[str, Any] | None = None) -> dict[str, Any]:
    options = dict(options or {})
    ignore_weights = bool(options.pop("ignore_weights", False))
    graph = parse_mqlib(text, ignore_weights=ignore_weights)
    report = analyze(graph, AnalysisOptions(**options), instance_id=instance_id)
    return DlaReportOut.from_report(report).model_dump(mode="json")
