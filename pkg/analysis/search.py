"""
Exhaustive oracles over small Gauss codes.

Every universally quantified statement about warping polynomials is checked
here by brute force: all double-occurrence codes up to a crossing bound, every
Over/Under assignment, every edge and every crossing.

USAGE:
    from analysis.search import run_property_suite

    report = run_property_suite(4)
    if not report.ok:
        print(report.to_json())
"""
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations, product

from django.conf import settings

from diagrams.characterize import CharForm, f_l, one_bridge_diagram, recognize
from diagrams.diagram_core import (
    GaussDiagram,
    Pass,
    Strand,
    crossing_change,
    evenness_lint,
    is_alternating,
    is_one_bridge,
    mirror,
    reverse,
)
from diagrams.exceptions import (
    BoundExceeded,
    NoAlternatingTarget,
    NotConstructible,
    TooLarge,
    ZeroCrossings,
)
from diagrams.laurent import WarpPoly
from diagrams.notation import format_gauss
from diagrams.transform import (
    connected_sum,
    find_edge_with_label,
    insert_kink_over_first,
    insert_kink_under_first,
    span_equality_criterion,
)
from diagrams.warping import (
    brute_labeling,
    crossing_form,
    diagram_span,
    fg_decomposition,
    labeling,
    predict_crossing_change,
    reversed_edge,
)

logger = logging.getLogger(__name__)

DEFAULTS = {
    'WARP_ENUMERATION_BOUND': 6,
    'WARP_DALT_MAX_CROSSINGS': 20,
    'WARP_PAIR_MAX_CROSSINGS': 3,
    'WARP_VERIFY_WORKERS': 1,
}


def get_setting(name):
    if settings.configured:
        return getattr(settings, name, DEFAULTS[name])
    return DEFAULTS[name]


def resolve_pair_max(maxc, pair_maxc=None):
    """Largest summand size for the pair checks, never above maxc."""
    if pair_maxc is None:
        pair_maxc = get_setting('WARP_PAIR_MAX_CROSSINGS')
    return max(0, min(pair_maxc, maxc))


def _check_bound(c, bound=None):
    bound = get_setting('WARP_ENUMERATION_BOUND') if bound is None else bound
    if c < 0 or c > bound:
        raise BoundExceeded(f"{c} crossings is outside the enumeration bound 0..{bound}")


@dataclass(frozen=True)
class Violation:
    property_id: str
    code: str
    detail: str = ''

    def to_dict(self):
        return {'property_id': self.property_id, 'code': self.code, 'detail': self.detail}


@dataclass
class PropertyReport:
    crossings_checked: tuple[int, int]
    diagrams_checked: int = 0
    pairs_checked: int = 0
    alternating_scanned: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def merge(self, other):
        low = min(self.crossings_checked[0], other.crossings_checked[0])
        high = max(self.crossings_checked[1], other.crossings_checked[1])
        return PropertyReport(
            crossings_checked=(low, high),
            diagrams_checked=self.diagrams_checked + other.diagrams_checked,
            pairs_checked=self.pairs_checked + other.pairs_checked,
            alternating_scanned=self.alternating_scanned + other.alternating_scanned,
            violations=self.violations + other.violations,
        )

    def to_dict(self):
        return {
            'crossings_checked': list(self.crossings_checked),
            'diagrams_checked': self.diagrams_checked,
            'pairs_checked': self.pairs_checked,
            'alternating_scanned': self.alternating_scanned,
            'ok': self.ok,
            'violation_count': len(self.violations),
            'violations': [v.to_dict() for v in self.violations],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


# Enumeracja kodów

def _words(c, first_partner=None):
    """Double-occurrence words on 1..c with ids in first-appearance order."""
    slots = [0] * (2 * c)

    def fill(next_id):
        if next_id > c:
            yield tuple(slots)
            return
        i = slots.index(0)
        slots[i] = next_id
        for j in range(i + 1, 2 * c):
            if slots[j]:
                continue
            if next_id == 1 and first_partner is not None and j != first_partner:
                continue
            slots[j] = next_id
            yield from fill(next_id + 1)
            slots[j] = 0
        slots[i] = 0

    yield from fill(1)


def enumerate_diagrams(c, first_partner=None, bound=None):
    """
    Every Gauss code with c crossings: all double-occurrence words with
    canonical ids times all Over/Under assignments, no rotation quotient.

    first_partner restricts crossing 1 to positions (0, first_partner); the
    search uses it to split the work.
    """
    _check_bound(c, bound)
    over_under = (Strand.OVER, Strand.UNDER)
    for word in _words(c, first_partner):
        for assignment in product(over_under, repeat=c):
            seen = set()
            passes = []
            for x in word:
                first = assignment[x - 1]
                strand = first if x not in seen else first.opposite
                seen.add(x)
                passes.append(Pass(x, strand))
            yield GaussDiagram(tuple(passes))


def canonical_count(c):
    """Number of distinct codes with c crossings up to rotation and renumbering."""
    return len({format_gauss(d, canonical=True) for d in enumerate_diagrams(c)})


# Liczba dealternująca

def dealternating_number(diagram):
    """
    Fewest crossing changes that make the code alternate, by breadth-first
    search over crossing subsets of growing size.
    """
    c = diagram.crossing_count
    if c == 0:
        raise ZeroCrossings("the dealternating number needs at least one crossing")
    cap = get_setting('WARP_DALT_MAX_CROSSINGS')
    if c > cap:
        raise TooLarge(f"{c} crossings exceeds the subset-search cap {cap}")
    if not evenness_lint(diagram):
        raise NoAlternatingTarget(f"no crossing changes make {diagram} alternate")

    n = 2 * c
    pattern = sum(1 << j for j, p in enumerate(diagram.passes) if p.is_over)
    even_positions = sum(1 << j for j in range(0, n, 2))
    targets = {even_positions, even_positions << 1}
    flips = [(1 << over) | (1 << under) for over, under in diagram.positions.values()]
    for size in range(c + 1):
        for subset in combinations(flips, size):
            changed = pattern
            for flip in subset:
                changed ^= flip
            if changed in targets:
                return size
    raise NoAlternatingTarget(f"no crossing changes make {diagram} alternate")


def is_almost_alternating(diagram):
    return dealternating_number(diagram) == 1


def span_witness(c, s):
    """
    A diagram with c crossings and span s: the nested one-bridge diagram with
    s crossings plus c - s over-first kinks at an edge labeled 0.
    """
    if c == s == 0:
        return GaussDiagram()
    if s < 1 or c < s:
        raise NotConstructible(f"no recipe for c = {c}, span = {s}")
    diagram = one_bridge_diagram(s, nested=True)
    for _ in range(c - s):
        diagram = insert_kink_over_first(diagram, find_edge_with_label(diagram, 0))
    return diagram


def almost_alternating_scan(maxc):
    """
    Change each crossing of each alternating code with 2..maxc crossings. The
    result has span 2 or 3, and span 2 exactly when f or g (at that crossing)
    has span 0.
    """
    _check_bound(maxc)
    report = PropertyReport(crossings_checked=(min(2, maxc), maxc))
    for c in range(2, maxc + 1):
        for diagram in enumerate_diagrams(c):
            if not is_alternating(diagram):
                continue
            report.alternating_scanned += 1
            labels = labeling(diagram)
            for x in diagram.crossings:
                changed_span = diagram_span(crossing_change(diagram, x))
                f, g = fg_decomposition(diagram, x, labels)
                code = str(diagram)
                if changed_span not in (2, 3):
                    report.violations.append(
                        Violation('almost_alternating_span', code, f"crossing {x}: span {changed_span}")
                    )
                if (changed_span == 2) != (f.span == 0 or g.span == 0):
                    report.violations.append(
                        Violation('almost_alternating_fg', code,
                                  f"crossing {x}: span {changed_span}, f = {f}, g = {g}")
                    )
    logger.info(f"Almost-alternating scan up to c={maxc}: {report.alternating_scanned} diagrams, "
                f"{len(report.violations)} violations")
    return report


# Zestaw własności

class PropertySuite:
    """
    Per-diagram and per-pair checks. Every polynomial, degree and span the
    suite compares comes from ``labeler``, so a broken labeler shows up as
    violations.
    """

    def __init__(self, labeler=labeling, dalt_cap=None):
        self.labeler = labeler
        self.dalt_cap = get_setting('WARP_DALT_MAX_CROSSINGS') if dalt_cap is None else dalt_cap
        self.violations = []

    def record(self, property_id, diagram, detail=''):
        code = str(diagram)
        logger.warning(f"Violation {property_id} on [{code}]: {detail}")
        self.violations.append(Violation(property_id, code, detail))

    def expect(self, condition, property_id, diagram, detail=''):
        """``detail`` may be a callable; it is only rendered for a failed check."""
        if not condition:
            self.record(property_id, diagram, detail() if callable(detail) else detail)

    @contextmanager
    def guard(self, property_id, diagram):
        try:
            yield
        except Exception as e:
            self.record(property_id, diagram, f"raised {e!r}")

    def check_diagram(self, d):
        c = d.crossing_count
        lab = self.labeler(d)
        w = lab.polynomial()
        scan = brute_labeling(d)
        rev_lab = self.labeler(reverse(d))
        mir_lab = self.labeler(mirror(d))
        show_w = w.__str__

        self.expect(tuple(lab.labels) == scan.labels, 'labeling_matches_scan', d,
                    lambda: f"{list(lab.labels)} vs {list(scan.labels)}")
        with self.guard('reverse_reflects', d):
            self.expect(rev_lab.polynomial() == w.reflect(c), 'reverse_reflects', d, show_w)
        with self.guard('mirror_reflects', d):
            self.expect(mir_lab.polynomial() == w.reflect(c), 'mirror_reflects', d, show_w)
        with self.guard('gap_free', d):
            self.expect(w.is_gap_free(), 'gap_free', d, show_w)
        with self.guard('ldeg_is_warping_degree', d):
            self.expect(w.ldeg == scan.minimum, 'ldeg_is_warping_degree', d, show_w)
        self.expect((w.evaluate(0) != 0) == (scan.minimum == 0), 'monotone_iff_constant_term', d, show_w)
        self.expect((c == 0) == (lab.span == 0), 'span_zero_iff_no_crossings', d,
                    lambda: f"span {lab.span}")
        self.expect(lab.span == c - (lab.minimum + rev_lab.minimum), 'span_formula', d,
                    lambda: f"span {lab.span}, d(D) {lab.minimum}, d(-D) {rev_lab.minimum}")
        self.expect(lab.span == rev_lab.span == mir_lab.span, 'span_orientation_invariant', d,
                    lambda: f"{lab.span}, {rev_lab.span}, {mir_lab.span}")

        if c >= 1:
            self.check_crossings(d, lab, w, rev_lab)
        self.check_kinks(d, lab, w)
        if c >= 1 and c <= self.dalt_cap and evenness_lint(d):
            with self.guard('span_dalt_bound', d):
                dalt = dealternating_number(d)
                self.expect(lab.span - 1 <= 2 * dalt, 'span_dalt_bound', d,
                            lambda: f"span {lab.span}, dalt {dalt}")
                self.expect(dalt <= c // 2, 'dalt_half_crossings', d, lambda: f"dalt {dalt}")

    def check_crossings(self, d, lab, w, rev_lab):
        c = d.crossing_count
        alternating = is_alternating(d)
        show_w = w.__str__
        self.expect(w.evaluate(-1) == 0, 'eval_minus_one', d, show_w)
        self.expect(w.evaluate(1) == 2 * c, 'eval_one', d, show_w)
        self.expect(w.odd_sum() == w.even_sum() == c, 'odd_even_sums', d, show_w)
        self.expect(alternating == (lab.span == 1), 'alternating_iff_span_one', d,
                    lambda: f"span {lab.span}")
        if alternating:
            expected = WarpPoly.from_dict({lab.minimum: c, lab.minimum + 1: c})
            self.expect(w == expected, 'alternating_polynomial', d, show_w)
        bound = lab.minimum + rev_lab.minimum + 1
        self.expect(bound <= c, 'warping_degree_bound', d, lambda: f"d(D) + d(-D) + 1 = {bound}")
        self.expect((bound == c) == alternating, 'warping_degree_equality', d,
                    lambda: f"d(D) + d(-D) + 1 = {bound}")
        self.expect(is_one_bridge(d) == (w == f_l(c)), 'one_bridge_iff_fl', d, show_w)
        with self.guard('base_point_duality', d):
            for j in range(d.edge_count):
                if lab[j] + rev_lab[reversed_edge(d, j)] != c:
                    self.record('base_point_duality', d, f"edge {j}")
                    break

        form = recognize(w)
        self.expect(isinstance(form, CharForm), 'recognize_sound', d, lambda: f"{w}: {form}")
        if isinstance(form, CharForm):
            with self.guard('crossing_form_matches', d):
                read_off = crossing_form(d, lab)
                self.expect(read_off == (form.k, form.l, form.m), 'crossing_form_matches', d,
                            lambda: f"{read_off} vs {form}")

        for x in d.crossings:
            changed_lab = self.labeler(crossing_change(d, x))
            changed_w = changed_lab.polynomial()
            with self.guard('crossing_change_prediction', d):
                f, g = fg_decomposition(d, x, lab)
                self.expect(f + g == w, 'fg_partition', d, lambda: f"crossing {x}")
                predicted = predict_crossing_change(d, x, lab)
                self.expect(predicted == changed_w, 'crossing_change_prediction', d,
                            lambda: f"crossing {x}: predicted {predicted}, got {changed_w}")
            self.expect(abs(changed_lab.span - lab.span) <= 2, 'crossing_change_span_jump', d,
                        lambda: f"crossing {x}: {lab.span} -> {changed_lab.span}")

    def check_kinks(self, d, lab, w):
        even = evenness_lint(d)
        for j in range(d.edge_count):
            over = insert_kink_over_first(d, j)
            under = insert_kink_under_first(d, j)
            self.expect(evenness_lint(over) == even and evenness_lint(under) == even,
                        'kink_keeps_evenness', d, lambda: f"edge {j}")
            # na okręgu bez skrzyżowań pętla daje dwie krawędzie, nie trzy: W = 1 + t
            if not d.crossing_count:
                continue
            bump = WarpPoly.monomial(lab[j]) + WarpPoly.monomial(lab[j] + 1)
            self.expect(self.labeler(over).polynomial() == w + bump, 'kink_over_first', d,
                        lambda: f"edge {j}")
            self.expect(self.labeler(under).polynomial() == w.shift(1) + bump, 'kink_under_first', d,
                        lambda: f"edge {j}")

    def check_pair(self, d, e, d_lab=None, e_lab=None):
        d_lab = d_lab or self.labeler(d)
        e_lab = e_lab or self.labeler(e)
        wd, we = d_lab.polynomial(), e_lab.polynomial()
        wider = max(d_lab.span, e_lab.span)
        pair = GaussDiagram(d.passes + e.passes)
        for jd in range(d.edge_count):
            for je in range(e.edge_count):
                i, j = d_lab[jd], e_lab[je]
                sum_lab = self.labeler(connected_sum(d, jd, e, je))
                self.expect(sum_lab.polynomial() == wd.shift(j) + we.shift(i),
                            'connected_sum_identity', pair, lambda: pair_detail(d, e, jd, je))
                with_span = lambda: pair_detail(d, e, jd, je, f"span {sum_lab.span}")
                self.expect(wider <= sum_lab.span <= d_lab.span + e_lab.span,
                            'connected_sum_span_bounds', pair, with_span)
                self.expect((sum_lab.span == wider) == span_equality_criterion(d_lab, i, e_lab, j),
                            'connected_sum_span_equality', pair, with_span)


def pair_detail(d, e, jd, je, extra=''):
    text = f"[{d}] # [{e}] at edges {jd}, {je}"
    return f"{text}: {extra}" if extra else text


def _diagram_unit(unit):
    c, first_partner, labeler, dalt_cap, bound = unit
    suite = PropertySuite(labeler, dalt_cap)
    count = 0
    for diagram in enumerate_diagrams(c, first_partner, bound=bound):
        suite.check_diagram(diagram)
        count += 1
    logger.debug(f"Unit c={c} partner={first_partner}: {count} diagrams")
    return PropertyReport((c, c), diagrams_checked=count, violations=suite.violations)


def _pair_unit(unit):
    c, pair_maxc, labeler, dalt_cap, bound = unit
    suite = PropertySuite(labeler, dalt_cap)
    right = [
        (e, labeler(e))
        for ce in range(1, pair_maxc + 1)
        for e in enumerate_diagrams(ce, bound=bound)
    ]
    count = 0
    for d in enumerate_diagrams(c, bound=bound):
        d_lab = labeler(d)
        for e, e_lab in right:
            suite.check_pair(d, e, d_lab, e_lab)
            count += 1
    logger.debug(f"Pair unit c(D)={c}: {count} pairs")
    return PropertyReport((c, c), pairs_checked=count, violations=suite.violations)


def work_units(maxc, pair_maxc, labeler=labeling, dalt_cap=None, bound=None):
    """Deterministic work split: (c, partner of crossing 1) for single codes, c(D) for pairs."""
    dalt_cap = get_setting('WARP_DALT_MAX_CROSSINGS') if dalt_cap is None else dalt_cap
    bound = get_setting('WARP_ENUMERATION_BOUND') if bound is None else bound
    singles = [(0, None, labeler, dalt_cap, bound)]
    for c in range(1, maxc + 1):
        singles.extend((c, partner, labeler, dalt_cap, bound) for partner in range(1, 2 * c))
    pairs = [(c, pair_maxc, labeler, dalt_cap, bound) for c in range(1, pair_maxc + 1)]
    return singles, pairs


def run_property_suite(maxc, workers=None, labeler=labeling, pair_maxc=None):
    """
    Run every check on all codes with at most maxc crossings and on all
    connected sums of codes with at most pair_maxc crossings each.

    The report does not depend on the number of workers.
    """
    _check_bound(maxc)
    workers = get_setting('WARP_VERIFY_WORKERS') if workers is None else workers
    pair_maxc = resolve_pair_max(maxc, pair_maxc)

    started = time.monotonic()
    singles, pairs = work_units(maxc, pair_maxc, labeler)
    logger.info(f"Property suite up to c={maxc} (pairs up to {pair_maxc}), {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(_diagram_unit, singles)) + list(executor.map(_pair_unit, pairs))
    else:
        parts = [_diagram_unit(u) for u in singles] + [_pair_unit(u) for u in pairs]

    report = PropertyReport((0, maxc))
    for part in parts:
        report = report.merge(part)
    logger.info(f"Property suite done in {time.monotonic() - started:.1f}s: "
                f"{report.diagrams_checked} diagrams, {report.pairs_checked} pairs, "
                f"{len(report.violations)} violations")
    return report


def save_report_to_db(report, duration_seconds, max_crossings, pair_max_crossings):
    """
    Zapisuje raport weryfikacji do bazy danych Django.
    """
    from warping_lab.models import VerificationRun

    try:
        run = VerificationRun.objects.create(
            max_crossings=max_crossings,
            pair_max_crossings=pair_max_crossings,
            diagrams_checked=report.diagrams_checked,
            pairs_checked=report.pairs_checked,
            violation_count=len(report.violations),
            status=VerificationRun.Status.PASSED if report.ok else VerificationRun.Status.FAILED,
            duration_seconds=duration_seconds,
            report=report.to_dict(),
        )
        logger.info(f"Verification run saved to DB: ID={run.id}")
        return run
    except Exception as e:
        logger.error(f"Error saving verification run to DB: {e}")
        return None
