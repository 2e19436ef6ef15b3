import json
import logging
import time

from django.http import JsonResponse
from django.views.decorators.csrf import csrf_exempt
from django.views.decorators.http import require_http_methods

from diagrams.exceptions import WarpingError

from .search import resolve_pair_max, run_property_suite, save_report_to_db

logger = logging.getLogger(__name__)


@csrf_exempt
@require_http_methods(["POST"])
def verify(request):
    """
    Uruchamia wyczerpującą weryfikację do max_crossings i zapisuje wynik.
    """
    try:
        data = json.loads(request.body or b'{}')
        max_crossings = int(data.get('max_crossings', 3))
        pair_max = data.get('pair_max_crossings')
        pair_max = resolve_pair_max(max_crossings, int(pair_max) if pair_max is not None else None)
    except (ValueError, TypeError, AttributeError) as e:
        return JsonResponse({'status': 'error', 'message': f'Bad request body: {e}'}, status=400)

    started = time.monotonic()
    try:
        report = run_property_suite(max_crossings, pair_maxc=pair_max)
    except WarpingError as e:
        return JsonResponse({'status': 'error', 'code': e.code, 'message': e.message}, status=400)
    duration = time.monotonic() - started

    run = save_report_to_db(report, duration, max_crossings, pair_max)
    logger.info(f"Verify request c <= {max_crossings}: {len(report.violations)} violations")
    return JsonResponse({
        'status': 'success' if report.ok else 'violations',
        'run_id': run.id if run else None,
        'report': report.to_dict(),
    })
