from django.http import JsonResponse
from django.shortcuts import get_object_or_404
from django.views.decorators.http import require_http_methods

from .models import VerificationRun


@require_http_methods(["GET"])
def run_list(request):
    """Ostatnie uruchomienia weryfikacji, najnowsze pierwsze."""
    try:
        limit = int(request.GET.get('limit', 20))
    except ValueError:
        return JsonResponse({'status': 'error', 'message': 'limit must be an integer'}, status=400)

    runs = VerificationRun.objects.all()[:max(limit, 0)]
    return JsonResponse({
        'status': 'success',
        'total_runs': VerificationRun.objects.count(),
        'failed_runs': VerificationRun.objects.filter(status=VerificationRun.Status.FAILED).count(),
        'runs': [run.to_dict() for run in runs],
    })


@require_http_methods(["GET"])
def run_detail(request, run_id):
    """Szczegóły uruchomienia razem z pełnym raportem."""
    run = get_object_or_404(VerificationRun, id=run_id)
    payload = run.to_dict()
    payload['report'] = run.report
    return JsonResponse(payload)
