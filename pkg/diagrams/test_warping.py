"""
Testy etykietowania stopniami skręcenia i wielomianu W.
"""
from django.test import SimpleTestCase
from hypothesis import given, settings

from .characterize import CharForm, f_l, one_bridge_diagram, recognize
from .diagram_core import GaussDiagram, Pass, Strand, crossing_change, is_alternating, mirror, reverse
from .exceptions import EdgeOutOfRange, InconsistentClosure, UnknownCrossing
from .laurent import WarpPoly
from .notation import parse_gauss, parse_poly
from .testing import ONE_BRIDGE_3, TREFOIL, gauss_codes
from .warping import (
    brute_labeling,
    crossing_form,
    degree_at_base,
    diagram_span,
    fg_decomposition,
    is_monotone,
    labeling,
    max_degree,
    polynomial,
    predict_crossing_change,
    reversed_edge,
    warping_degree,
)


class LabelingTests(SimpleTestCase):
    """Testy etykietowania krawędzi."""

    def setUp(self):
        self.trefoil = parse_gauss(TREFOIL)

    def test_trefoil_labels(self):
        """Test etykiet trójlistnika."""
        labels = labeling(self.trefoil)
        self.assertEqual(labels.labels, (2, 1, 2, 1, 2, 1))
        self.assertEqual((labels.minimum, labels.maximum, labels.span), (1, 2, 1))
        self.assertEqual(len(labels), 6)
        self.assertEqual(labels[0], 2)

    def test_trefoil_polynomial(self):
        """Test W trójlistnika = 3t + 3t^2."""
        self.assertEqual(str(polynomial(self.trefoil)), '3t+3t^2')
        self.assertEqual(warping_degree(self.trefoil), 1)
        self.assertEqual(max_degree(self.trefoil), 2)
        self.assertEqual(diagram_span(self.trefoil), 1)
        self.assertFalse(is_monotone(self.trefoil))

    def test_empty_diagram(self):
        """Test diagramu bez skrzyżowań: W = 1."""
        empty = GaussDiagram()
        self.assertEqual(labeling(empty).labels, (0,))
        self.assertEqual(polynomial(empty), WarpPoly.one())
        self.assertEqual(diagram_span(empty), 0)
        self.assertTrue(is_monotone(empty))

    def test_one_bridge_labels(self):
        """Test etykiet diagramu jednomostowego."""
        self.assertEqual(labeling(parse_gauss(ONE_BRIDGE_3)).labels, (1, 2, 3, 2, 1, 0))
        self.assertTrue(is_monotone(parse_gauss(ONE_BRIDGE_3)))

    def test_one_bridge_polynomials(self):
        """Test W = F^l dla diagramów jednomostowych, l = 1..10."""
        for l in range(1, 11):
            with self.subTest(l=l):
                self.assertEqual(polynomial(one_bridge_diagram(l)), f_l(l))
                self.assertEqual(polynomial(one_bridge_diagram(l, nested=True)), f_l(l))

    def test_degree_at_base(self):
        """Test stopnia skręcenia z jednego punktu bazowego."""
        self.assertEqual(degree_at_base(self.trefoil, 0), 2)
        self.assertEqual(degree_at_base(self.trefoil, 5), 1)

    def test_edge_out_of_range(self):
        """Test krawędzi spoza zakresu."""
        for j in (-1, 6):
            with self.assertRaises(EdgeOutOfRange):
                degree_at_base(self.trefoil, j)

    def test_brute_labeling_agrees(self):
        """Test zgodności z pełnym skanowaniem."""
        for code in (TREFOIL, ONE_BRIDGE_3, 'U1 U2 O3 O1 O2 U3', 'O1 U2 U1 O2', ''):
            with self.subTest(code=code):
                diagram = parse_gauss(code)
                self.assertEqual(labeling(diagram), brute_labeling(diagram))

    def test_inconsistent_closure(self):
        """Test kodu z pominięciem walidacji, którego etykiety się nie domykają."""
        broken = GaussDiagram((Pass(1, Strand.OVER), Pass(2, Strand.OVER)))
        with self.assertRaises(InconsistentClosure):
            labeling(broken)

    def test_base_point_duality(self):
        """Test d(D_b) + d(-D_b) = c dla każdej krawędzi."""
        reversed_labels = labeling(reverse(self.trefoil))
        labels = labeling(self.trefoil)
        for j in range(6):
            self.assertEqual(labels[j] + reversed_labels[reversed_edge(self.trefoil, j)], 3)


class CrossingChangeTests(SimpleTestCase):
    """Testy rozkładu W = f + g przy zmianie skrzyżowania."""

    def setUp(self):
        self.trefoil = parse_gauss(TREFOIL)

    def test_fg_at_trefoil_crossing(self):
        """Test f = t + 2t^2, g = 2t + t^2 w skrzyżowaniu 1."""
        f, g = fg_decomposition(self.trefoil, 1)
        self.assertEqual(f, parse_poly('t+2t^2'))
        self.assertEqual(g, parse_poly('2t+t^2'))

    def test_changed_trefoil(self):
        """
        Test zmiany skrzyżowania trójlistnika: przewidywane i przeliczone W
        to 1 + 2t + 2t^2 + t^3, a rozpiętość rośnie z 1 do 3. Rozwinięcie
        z niezerowym W(-1) spotykane w literaturze jest błędne.
        """
        expected = parse_poly('1+2t+2t^2+t^3')
        changed = crossing_change(self.trefoil, 1)
        self.assertEqual(predict_crossing_change(self.trefoil, 1), expected)
        self.assertEqual(polynomial(changed), expected)
        self.assertEqual(expected.evaluate(-1), 0)
        self.assertEqual(diagram_span(changed) - diagram_span(self.trefoil), 2)

    def test_unknown_crossing(self):
        """Test f/g dla nieistniejącego skrzyżowania."""
        with self.assertRaises(UnknownCrossing):
            fg_decomposition(self.trefoil, 4)

    def test_crossing_form(self):
        """Test odczytu (k, l, m) z diagramu."""
        self.assertEqual(crossing_form(self.trefoil), (1, 1, (3,)))
        self.assertEqual(crossing_form(parse_gauss(ONE_BRIDGE_3)), (0, 3, (1, 1, 1)))


class WarpingPropertyTests(SimpleTestCase):
    """Testy własności na losowych kodach (hypothesis)."""

    @given(gauss_codes())
    @settings(max_examples=200, deadline=None)
    def test_labeling_matches_scan(self, diagram):
        self.assertEqual(labeling(diagram), brute_labeling(diagram))

    @given(gauss_codes())
    @settings(max_examples=200, deadline=None)
    def test_evaluations(self, diagram):
        c = diagram.crossing_count
        w = polynomial(diagram)
        self.assertEqual(w.evaluate(-1), 0)
        self.assertEqual(w.evaluate(1), 2 * c)
        self.assertEqual(w.odd_sum(), c)
        self.assertEqual(w.even_sum(), c)
        self.assertTrue(w.is_gap_free())
        self.assertEqual(w.ldeg, warping_degree(diagram))

    @given(gauss_codes())
    @settings(max_examples=200, deadline=None)
    def test_reverse_and_mirror_reflect(self, diagram):
        c = diagram.crossing_count
        w = polynomial(diagram)
        self.assertEqual(polynomial(reverse(diagram)), w.reflect(c))
        self.assertEqual(polynomial(mirror(diagram)), w.reflect(c))
        self.assertEqual(diagram_span(diagram), c - warping_degree(diagram) - warping_degree(reverse(diagram)))

    @given(gauss_codes())
    @settings(max_examples=200, deadline=None)
    def test_alternating_iff_span_one(self, diagram):
        self.assertEqual(is_alternating(diagram), diagram_span(diagram) == 1)

    @given(gauss_codes())
    @settings(max_examples=200, deadline=None)
    def test_recognized_with_matching_form(self, diagram):
        form = recognize(polynomial(diagram))
        self.assertIsInstance(form, CharForm)
        self.assertEqual((form.k, form.l, form.m), crossing_form(diagram))

    @given(gauss_codes())
    @settings(max_examples=100, deadline=None)
    def test_crossing_change_prediction(self, diagram):
        labels = labeling(diagram)
        for x in diagram.crossings:
            f, g = fg_decomposition(diagram, x, labels)
            changed = crossing_change(diagram, x)
            self.assertEqual(f + g, labels.polynomial())
            self.assertEqual(predict_crossing_change(diagram, x, labels), polynomial(changed))
            self.assertLessEqual(abs(diagram_span(changed) - labels.span), 2)
