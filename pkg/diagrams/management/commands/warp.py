"""
Komenda ``warp``: niezmienniki, transformacje i rozpoznawanie wielomianów.

USAGE:
    python manage.py warp poly "O1 U2 O3 U1 O2 U3"
    python manage.py warp span --braid "1 1 1" --strands 2
    python manage.py warp checkpoly "t+t^2"
    python manage.py warp verify --max-crossings 4 --json

Exit codes: 0 ok, 1 bad input or usage, 2 property violations (verify),
3 witness asked for a rejected polynomial.
"""
import argparse
import json
import logging
import sys
import time

from django.core.management.base import BaseCommand, CommandError, handle_default_options
from django.db import connections

from diagrams.characterize import CharForm, recognize, witness
from diagrams.diagram_core import crossing_change, is_alternating, is_one_bridge, mirror, reverse
from diagrams.exceptions import WarpingError
from diagrams.notation import braid_closure, format_gauss, format_poly, parse_braid, parse_gauss, parse_poly
from diagrams.transform import KINKS, balanced_connected_sum, connected_sum
from diagrams.views import recognition_payload, summary_payload
from diagrams.warping import fg_decomposition, labeling, predict_crossing_change

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_VIOLATIONS = 2
EXIT_REJECTED = 3

QUERIES = ('poly', 'label', 'span', 'degree', 'monotone', 'alternating', 'onebridge')


def as_text(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


class Command(BaseCommand):
    help = 'Warping polynomials of knot diagrams given as Gauss codes or braid words'
    requires_system_checks = []

    def add_arguments(self, parser):
        # błędy składni mają kończyć się kodem 1, nie 2
        parser.called_from_command_line = False

        output = argparse.ArgumentParser(add_help=False)
        output.add_argument('--json', dest='json_output', action='store_true', help='Machine-readable output')
        output.add_argument('--canonical', action='store_true', help='Render Gauss codes canonically')

        diagram = argparse.ArgumentParser(add_help=False, parents=[output])
        diagram.add_argument('code', nargs='?', help='Gauss code, e.g. "O1 U2 O3 U1 O2 U3"')
        diagram.add_argument('--braid', help='Braid word instead of a Gauss code, e.g. "1 -2 1 -2"')
        diagram.add_argument('--strands', type=int, help='Number of braid strands')

        actions = parser.add_subparsers(dest='action', required=True)
        for name in QUERIES:
            actions.add_parser(name, parents=[diagram], help=f'{name} of a diagram')
        actions.add_parser('summary', parents=[diagram], help='Every invariant at once')
        actions.add_parser('mirror', parents=[diagram], help='Mirror image')
        actions.add_parser('reverse', parents=[diagram], help='Reverse the orientation')
        actions.add_parser('dalt', parents=[diagram], help='Dealternating number by subset search')

        cc = actions.add_parser('cc', parents=[diagram], help='Crossing change')
        cc.add_argument('--crossing', type=int, required=True)

        fg = actions.add_parser('fg', parents=[diagram], help='f/g split at a crossing')
        fg.add_argument('--crossing', type=int, required=True)

        kink = actions.add_parser('kink', parents=[diagram], help='Insert a kink')
        kink.add_argument('--type', dest='kink_type', choices=sorted(KINKS), required=True)
        kink.add_argument('--edge', type=int, required=True)

        connect = actions.add_parser('connect', parents=[output], help='Connected sum')
        connect.add_argument('code_d')
        connect.add_argument('code_e')
        connect.add_argument('--edge', type=int, help='Splice edge in the first diagram')
        connect.add_argument('--edge2', type=int, help='Splice edge in the second diagram')

        for name in ('checkpoly', 'witness'):
            sub = actions.add_parser(name, parents=[output], help=f'{name} for a polynomial')
            sub.add_argument('poly', help='e.g. "3t+3t^2" or "1:3,3"')

        verify = actions.add_parser('verify', parents=[output], help='Exhaustive property suite')
        verify.add_argument('--max-crossings', type=int, required=True)
        verify.add_argument('--pair-max-crossings', type=int)
        verify.add_argument('--workers', type=int)
        verify.add_argument('--almost-alternating', action='store_true',
                            help='Also scan crossing changes of alternating codes')
        verify.add_argument('--save', action='store_true', help='Store the report as a VerificationRun')

    def run_from_argv(self, argv):
        self._called_from_command_line = True
        try:
            parser = self.create_parser(argv[0], argv[1])
            options = parser.parse_args(argv[2:])
            cmd_options = vars(options)
            cmd_options.pop('args', ())
            handle_default_options(options)
            self.execute(**cmd_options)
        except CommandError as e:
            self.stderr.write(str(e))
            sys.exit(e.returncode)
        finally:
            connections.close_all()

    def handle(self, *args, **options):
        action = options['action']
        try:
            handler = getattr(self, f"do_{action}", None) or self.do_query
            result = handler(options)
        except WarpingError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE) from e
        if result is not None:
            self.emit(result, options)

    def emit(self, result, options):
        payload, text = result
        if options['json_output']:
            self.stdout.write(json.dumps(payload, sort_keys=True))
        else:
            self.stdout.write(text)

    # Wejście

    def load_diagram(self, options):
        if options.get('braid') is not None:
            if options.get('code'):
                raise CommandError('Give either a Gauss code or --braid, not both', returncode=EXIT_USAGE)
            return braid_closure(parse_braid(options['braid'], options.get('strands')))
        if options.get('code') is None:
            raise CommandError('A Gauss code or --braid is required', returncode=EXIT_USAGE)
        return parse_gauss(options['code'])

    def render(self, diagram, options):
        return format_gauss(diagram, canonical=options['canonical'])

    def diagram_result(self, diagram, options):
        """Kod wynikowy i jego wielomian, po jednym w linii."""
        code, poly = self.render(diagram, options), str(labeling(diagram).polynomial())
        return {'code': code, 'polynomial': poly}, f"{code}\n{poly}"

    # Zapytania

    def do_query(self, options):
        diagram = self.load_diagram(options)
        labels = labeling(diagram)
        value = {
            'poly': lambda: str(labels.polynomial()),
            'label': lambda: list(labels.labels),
            'span': lambda: labels.span,
            'degree': lambda: labels.minimum,
            'monotone': lambda: labels.minimum == 0,
            'alternating': lambda: is_alternating(diagram),
            'onebridge': lambda: is_one_bridge(diagram),
        }[options['action']]()
        text = ' '.join(str(v) for v in value) if isinstance(value, list) else as_text(value)
        return {'code': self.render(diagram, options), options['action']: value}, text

    def do_summary(self, options):
        payload = summary_payload(self.load_diagram(options))
        if options['canonical']:
            payload['code'] = payload['canonical']
        lines = [f"{key}: {as_text(value)}" for key, value in sorted(payload.items())
                 if not isinstance(value, list)]
        lines.append(f"labels: {' '.join(str(v) for v in payload['labels'])}")
        return payload, '\n'.join(lines)

    def do_dalt(self, options):
        from analysis.search import dealternating_number

        diagram = self.load_diagram(options)
        value = dealternating_number(diagram)
        return {'code': self.render(diagram, options), 'dalt': value}, str(value)

    # Transformacje

    def do_mirror(self, options):
        return self.diagram_result(mirror(self.load_diagram(options)), options)

    def do_reverse(self, options):
        return self.diagram_result(reverse(self.load_diagram(options)), options)

    def do_cc(self, options):
        return self.diagram_result(crossing_change(self.load_diagram(options), options['crossing']), options)

    def do_kink(self, options):
        insert = KINKS[options['kink_type']]
        return self.diagram_result(insert(self.load_diagram(options), options['edge']), options)

    def do_connect(self, options):
        d, e = parse_gauss(options['code_d']), parse_gauss(options['code_e'])
        jd, je = options['edge'], options['edge2']
        if jd is None and je is None:
            diagram, jd, je = balanced_connected_sum(d, e)
        elif jd is None or je is None:
            raise CommandError('--edge and --edge2 go together', returncode=EXIT_USAGE)
        else:
            diagram = connected_sum(d, jd, e, je)
        payload, text = self.diagram_result(diagram, options)
        payload.update({'edge': jd, 'edge2': je})
        return payload, text

    def do_fg(self, options):
        diagram = self.load_diagram(options)
        x = options['crossing']
        f, g = fg_decomposition(diagram, x)
        predicted = predict_crossing_change(diagram, x)
        payload = {'crossing': x, 'f': str(f), 'g': str(g), 'predicted': str(predicted)}
        return payload, f"f: {f}\ng: {g}\npredicted: {predicted}"

    # Wielomiany

    def do_checkpoly(self, options):
        payload = recognition_payload(parse_poly(options['poly']))
        if payload['accepted']:
            m = ','.join(str(mi) for mi in payload['m'])
            text = f"Accept: k={payload['k']} l={payload['l']} m={m}"
        else:
            text = f"Reject: {payload['reason']}"
        return payload, text

    def do_witness(self, options):
        poly = parse_poly(options['poly'])
        form = recognize(poly)
        if not isinstance(form, CharForm):
            raise CommandError(f"Reject: {form.reason.value} ({form.detail or poly})", returncode=EXIT_REJECTED)
        diagram = witness(form)
        code = self.render(diagram, options)
        payload = {
            'code': code,
            'polynomial': str(poly),
            'compact': format_poly(poly, compact=True),
            'k': form.k,
            'l': form.l,
            'm': list(form.m),
        }
        return payload, code

    # Weryfikacja

    def do_verify(self, options):
        from analysis.search import (
            almost_alternating_scan,
            resolve_pair_max,
            run_property_suite,
            save_report_to_db,
        )

        maxc = options['max_crossings']
        started = time.monotonic()
        report = run_property_suite(maxc, workers=options['workers'], pair_maxc=options['pair_max_crossings'])
        if options['almost_alternating'] and maxc >= 2:
            report = report.merge(almost_alternating_scan(maxc))
        duration = time.monotonic() - started

        if options['save']:
            save_report_to_db(report, duration, maxc, resolve_pair_max(maxc, options['pair_max_crossings']))

        if options['json_output']:
            self.stdout.write(report.to_json())
        else:
            self.stdout.write(
                f"checked {report.diagrams_checked} diagrams and {report.pairs_checked} pairs "
                f"up to c={maxc}: {len(report.violations)} violations"
            )
            if options['almost_alternating']:
                self.stdout.write(f"scanned {report.alternating_scanned} alternating diagrams")
            for v in report.violations:
                self.stdout.write(f"{v.property_id} [{v.code}] {v.detail}")
        if not report.ok:
            raise CommandError(f"{len(report.violations)} property violations", returncode=EXIT_VIOLATIONS)
        return None
