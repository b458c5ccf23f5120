"""
Celery tasks for the analysis app.

Batch files are analyzed one map per task; with ``CELERY_TASK_ALWAYS_EAGER``
the tasks run in-process.
"""

import logging

from celery import shared_task

from planarize.exceptions import MapParseError

logger = logging.getLogger(__name__)


@shared_task(bind=True)
def analyze_map_task(self, text, seed=None, dmax=None, field=None):
    """Parse and analyze one map; parse failures come back as an error report."""
    from .services.parser import parse_map
    from .services.report import analyze

    try:
        phi = parse_map(text)
    except MapParseError as e:
        logger.error(f"Could not parse {text!r}: {e}")
        return {'input': text, **e.as_dict()}
    return analyze(phi, seed=seed, dmax=dmax, field=field, source=text)
