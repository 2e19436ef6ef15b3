"""
Testy pętli (Reidemeister I) i sumy spójnej.
"""
from django.test import SimpleTestCase
from hypothesis import given, settings

from .characterize import one_bridge_diagram
from .diagram_core import GaussDiagram, evenness_lint
from .exceptions import EdgeOutOfRange, EmptySummand, NoSuchLabel
from .laurent import WarpPoly
from .notation import parse_gauss, parse_poly
from .testing import ONE_BRIDGE_3, TREFOIL, coded_edges, gauss_codes
from .transform import (
    KINKS,
    balanced_connected_sum,
    connected_sum,
    connected_sum_span_equal,
    find_edge_with_label,
    insert_kink_over_first,
    insert_kink_under_first,
)
from .warping import diagram_span, labeling, polynomial


class KinkTests(SimpleTestCase):
    """Testy wstawiania pętli."""

    def setUp(self):
        self.trefoil = parse_gauss(TREFOIL)

    def test_over_first_at_label_one(self):
        """Test pętli nad-pod na krawędzi z etykietą 1: W = 4t + 4t^2."""
        kinked = insert_kink_over_first(self.trefoil, find_edge_with_label(self.trefoil, 1))
        self.assertEqual(str(kinked), 'O1 U2 O4 U4 O3 U1 O2 U3')
        self.assertEqual(str(polynomial(kinked)), '4t+4t^2')

    def test_over_first_at_label_two(self):
        """Test pętli nad-pod na krawędzi z etykietą 2: W = 3t + 4t^2 + t^3."""
        kinked = insert_kink_over_first(self.trefoil, find_edge_with_label(self.trefoil, 2))
        self.assertEqual(str(polynomial(kinked)), '3t+4t^2+t^3')

    def test_under_first_at_label_one(self):
        """Test pętli pod-nad na krawędzi z etykietą 1: W = t + 4t^2 + 3t^3."""
        kinked = insert_kink_under_first(self.trefoil, 1)
        self.assertEqual(str(kinked), 'O1 U2 U4 O4 O3 U1 O2 U3')
        self.assertEqual(str(polynomial(kinked)), 't+4t^2+3t^3')

    def test_kinks_on_the_unknot(self):
        """Test pętli na diagramie bez skrzyżowań."""
        self.assertEqual(str(insert_kink_over_first(GaussDiagram(), 0)), 'O1 U1')
        self.assertEqual(str(insert_kink_under_first(GaussDiagram(), 0)), 'U1 O1')
        self.assertEqual(str(polynomial(insert_kink_over_first(GaussDiagram(), 0))), '1+t')
        self.assertEqual(str(polynomial(insert_kink_under_first(GaussDiagram(), 0))), '1+t')

    def test_under_first_on_a_kink(self):
        """Test pętli pod-nad na "O1 U1": W = 2t + 2t^2."""
        kinked = insert_kink_under_first(parse_gauss('O1 U1'), 0)
        self.assertEqual(str(kinked), 'O1 U2 O2 U1')
        self.assertEqual(labeling(kinked).labels, (2, 1, 2, 1))

    def test_edge_out_of_range(self):
        """Test pętli na nieistniejącej krawędzi."""
        with self.assertRaises(EdgeOutOfRange):
            insert_kink_over_first(self.trefoil, 6)
        with self.assertRaises(EdgeOutOfRange):
            KINKS['1b'](GaussDiagram(), 1)

    @given(coded_edges())
    @settings(max_examples=200, deadline=None)
    def test_kink_identities(self, coded):
        diagram, j = coded
        w = polynomial(diagram)
        i = labeling(diagram)[j]
        bump = WarpPoly.monomial(i) + WarpPoly.monomial(i + 1)
        over, under = insert_kink_over_first(diagram, j), insert_kink_under_first(diagram, j)
        self.assertEqual(polynomial(over), w + bump)
        self.assertEqual(polynomial(under), w.shift(1) + bump)
        self.assertEqual(evenness_lint(over), evenness_lint(diagram))


class FindEdgeTests(SimpleTestCase):
    """Testy wyszukiwania krawędzi po etykiecie."""

    def test_lowest_edge(self):
        """Test najniższego indeksu z daną etykietą."""
        self.assertEqual(find_edge_with_label(parse_gauss(TREFOIL), 1), 1)
        self.assertEqual(find_edge_with_label(parse_gauss(ONE_BRIDGE_3), 0), 5)

    def test_missing_label(self):
        """Test braku krawędzi z etykietą."""
        with self.assertRaises(NoSuchLabel):
            find_edge_with_label(parse_gauss(TREFOIL), 0)


class ConnectedSumTests(SimpleTestCase):
    """Testy sumy spójnej."""

    def setUp(self):
        self.trefoil = parse_gauss(TREFOIL)
        self.kink = parse_gauss('O1 U1')

    def test_trefoil_plus_kink(self):
        """Test trójlistnik # pętla: W = 4t + 4t^2."""
        result = connected_sum(self.trefoil, 5, self.kink, 1)
        self.assertEqual(str(result), 'O1 U2 O3 U1 O2 U3 O4 U4')
        self.assertEqual(polynomial(result), parse_poly('4t+4t^2'))

    def test_identity(self):
        """Test W(D # E) = t^j W_D + t^i W_E dla wszystkich par krawędzi."""
        e = parse_gauss(ONE_BRIDGE_3)
        ld, le = labeling(self.trefoil), labeling(e)
        for jd in range(6):
            for je in range(6):
                with self.subTest(jd=jd, je=je):
                    result = polynomial(connected_sum(self.trefoil, jd, e, je))
                    self.assertEqual(result, ld.polynomial().shift(le[je]) + le.polynomial().shift(ld[jd]))

    def test_fresh_ids(self):
        """Test świeżych identyfikatorów skrzyżowań drugiego składnika."""
        result = connected_sum(self.kink, 0, self.trefoil, 5)
        self.assertEqual(str(result), 'O1 O2 U3 O4 U2 O3 U4 U1')

    def test_empty_summand(self):
        """Test pustego składnika."""
        with self.assertRaises(EmptySummand):
            connected_sum(GaussDiagram(), 0, self.trefoil, 0)
        with self.assertRaises(EmptySummand):
            balanced_connected_sum(self.trefoil, GaussDiagram())

    def test_edge_out_of_range(self):
        """Test krawędzi spoza zakresu."""
        with self.assertRaises(EdgeOutOfRange):
            connected_sum(self.trefoil, 6, self.kink, 0)
        with self.assertRaises(EdgeOutOfRange):
            connected_sum_span_equal(self.trefoil, 0, self.kink, 2)

    def test_balanced_sum(self):
        """Test sumy spójnej z rozpiętością max(spn D, spn E)."""
        result, jd, je = balanced_connected_sum(self.trefoil, self.kink)
        self.assertEqual((jd, je), (0, 0))
        self.assertEqual(diagram_span(result), 1)
        self.assertTrue(connected_sum_span_equal(self.trefoil, jd, self.kink, je))

    def test_unbalanced_splice(self):
        """Test sklejenia, przy którym rozpiętość rośnie."""
        self.assertFalse(connected_sum_span_equal(self.trefoil, 1, self.kink, 0))
        self.assertEqual(diagram_span(connected_sum(self.trefoil, 1, self.kink, 0)), 2)

    @given(coded_edges(max_crossings=5), coded_edges(max_crossings=5))
    @settings(max_examples=150, deadline=None)
    def test_span_bounds_and_criterion(self, left, right):
        (d, jd), (e, je) = left, right
        sd, se = diagram_span(d), diagram_span(e)
        span = diagram_span(connected_sum(d, jd, e, je))
        self.assertLessEqual(max(sd, se), span)
        self.assertLessEqual(span, sd + se)
        self.assertEqual(span == max(sd, se), connected_sum_span_equal(d, jd, e, je))

    @given(gauss_codes(max_crossings=5), gauss_codes(max_crossings=5))
    @settings(max_examples=50, deadline=None)
    def test_balanced_always_exists(self, d, e):
        result, _, _ = balanced_connected_sum(d, e)
        self.assertEqual(diagram_span(result), max(diagram_span(d), diagram_span(e)))

    def test_nested_one_bridge_sum(self):
        """Test sumy dwóch diagramów jednomostowych."""
        d = one_bridge_diagram(2, nested=True)
        span = diagram_span(connected_sum(d, 0, d, 0))
        self.assertTrue(2 <= span <= 4)
