import json
import logging

from django.http import JsonResponse
from django.shortcuts import get_object_or_404
from django.views.decorators.csrf import csrf_exempt
from django.views.decorators.http import require_GET, require_POST

from catalog.models import CatalogEntry
from planarize.exceptions import MapParseError

from .services.parser import parse_map
from .services.report import analyze

logger = logging.getLogger(__name__)

SORTED = {'sort_keys': True}


@require_GET
def catalog_list(request):
    """Formas normales con sus invariantes esperados"""
    entries = CatalogEntry.objects.all()
    return JsonResponse({
        'count': entries.count(),
        'entries': [entry.as_dict() for entry in entries],
    }, json_dumps_params=SORTED)


@require_GET
def catalog_detail(request, label):
    """Una forma normal por etiqueta"""
    entry = get_object_or_404(CatalogEntry, label=label)
    return JsonResponse(entry.as_dict(), json_dumps_params=SORTED)


@csrf_exempt
@require_POST
def analyze_view(request):
    """Analiza el mapa recibido en {"map": "...", "seed": 0}"""
    try:
        data = json.loads(request.body)
    except json.JSONDecodeError:
        return JsonResponse({'error': 'INVALID_JSON', 'message': 'Invalid JSON body'}, status=400)

    text = data.get('map') if isinstance(data, dict) else None
    if not text:
        return JsonResponse({'error': 'MISSING_MAP', 'message': 'Missing "map" field'}, status=400)

    seed, dmax = data.get('seed'), data.get('dmax')
    for name, value in (('seed', seed), ('dmax', dmax)):
        if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
            return JsonResponse({'error': 'INVALID_OPTION', 'message': f"{name} must be an integer"}, status=400)

    try:
        phi = parse_map(text)
    except MapParseError as e:
        return JsonResponse(e.as_dict(), status=400)

    logger.info(f"API analysis of {text}")
    report = analyze(phi, seed=seed, dmax=dmax, field=data.get('field'), source=text)
    return JsonResponse(report, json_dumps_params=SORTED)
