from django.http import JsonResponse
from django.views.decorators.http import require_http_methods

from .characterize import CharForm, recognize
from .diagram_core import bridge_count, evenness_lint, is_alternating, is_one_bridge
from .exceptions import WarpingError
from .notation import braid_closure, format_gauss, format_poly, parse_braid, parse_gauss, parse_poly
from .warping import labeling


def error_response(error, status=400):
    return JsonResponse({
        'status': 'error',
        'code': error.code,
        'message': error.message,
    }, status=status)


def diagram_from_request(request):
    """Kod Gaussa z parametru ``code`` albo domknięcie warkocza z ``braid``/``strands``."""
    braid = request.GET.get('braid')
    if braid is not None:
        strands = request.GET.get('strands')
        return braid_closure(parse_braid(braid, int(strands) if strands else None))
    return parse_gauss(request.GET.get('code', ''))


def summary_payload(diagram):
    labels = labeling(diagram)
    w = labels.polynomial()
    c = diagram.crossing_count
    return {
        'code': format_gauss(diagram),
        'canonical': format_gauss(diagram, canonical=True),
        'crossings': c,
        'labels': list(labels.labels),
        'polynomial': str(w),
        'warping_degree': labels.minimum,
        'max_degree': labels.maximum,
        'span': labels.span,
        'monotone': labels.minimum == 0,
        'alternating': is_alternating(diagram),
        'one_bridge': is_one_bridge(diagram) if c else False,
        'bridges': bridge_count(diagram),
        'even': evenness_lint(diagram),
    }


def recognition_payload(poly):
    result = recognize(poly)
    payload = {'polynomial': str(poly), 'compact': format_poly(poly, compact=True)}
    if isinstance(result, CharForm):
        payload.update({'accepted': True, 'k': result.k, 'l': result.l, 'm': list(result.m)})
    else:
        payload.update({'accepted': False, 'reason': result.reason.value, 'detail': result.detail})
    return payload


@require_http_methods(["GET"])
def diagram_summary(request):
    """Niezmienniki diagramu podanego kodem Gaussa lub warkoczem."""
    try:
        diagram = diagram_from_request(request)
    except WarpingError as e:
        return error_response(e)
    except ValueError:
        return JsonResponse({'status': 'error', 'message': 'strands must be an integer'}, status=400)
    return JsonResponse({'status': 'success', **summary_payload(diagram)})


@require_http_methods(["GET"])
def check_polynomial(request):
    """Rozpoznanie wielomianu: Accept z (k, l, m) albo Reject z powodem."""
    try:
        poly = parse_poly(request.GET.get('poly', ''))
    except WarpingError as e:
        return error_response(e)
    return JsonResponse({'status': 'success', **recognition_payload(poly)})
