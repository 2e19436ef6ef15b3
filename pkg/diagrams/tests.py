"""
Testy widoków JSON aplikacji diagrams.
"""
from django.test import Client, SimpleTestCase
from django.urls import reverse

from .testing import FIGURE_EIGHT_BRAID, TREFOIL


class DiagramSummaryViewTests(SimpleTestCase):
    """Testy dla widoku summary."""

    def setUp(self):
        self.client = Client()
        self.url = reverse('diagrams:summary')

    def test_trefoil_summary(self):
        """Test niezmienników trójlistnika."""
        response = self.client.get(self.url, {'code': TREFOIL})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['status'], 'success')
        self.assertEqual(data['polynomial'], '3t+3t^2')
        self.assertEqual(data['labels'], [2, 1, 2, 1, 2, 1])
        self.assertEqual(data['warping_degree'], 1)
        self.assertEqual(data['span'], 1)
        self.assertTrue(data['alternating'])
        self.assertFalse(data['one_bridge'])

    def test_braid_summary(self):
        """Test warkocza zamiast kodu Gaussa."""
        response = self.client.get(self.url, {'braid': FIGURE_EIGHT_BRAID})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['crossings'], 4)
        self.assertEqual(response.json()['span'], 1)

    def test_empty_code(self):
        """Test diagramu bez skrzyżowań."""
        data = self.client.get(self.url).json()
        self.assertEqual(data['polynomial'], '1')
        self.assertFalse(data['one_bridge'])

    def test_invalid_code(self):
        """Test błędnego kodu: 400 z kodem błędu."""
        response = self.client.get(self.url, {'code': 'O1'})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['code'], 'OddLength')

    def test_bad_strands(self):
        """Test nieliczbowej liczby pasm."""
        response = self.client.get(self.url, {'braid': '1 1 1', 'strands': 'two'})
        self.assertEqual(response.status_code, 400)

    def test_post_not_allowed(self):
        """Test metody POST."""
        self.assertEqual(self.client.post(self.url).status_code, 405)


class CheckPolynomialViewTests(SimpleTestCase):
    """Testy dla widoku checkpoly."""

    def setUp(self):
        self.client = Client()
        self.url = reverse('diagrams:checkpoly')

    def test_accept(self):
        """Test akceptacji."""
        data = self.client.get(self.url, {'poly': '3t+3t^2'}).json()
        self.assertTrue(data['accepted'])
        self.assertEqual((data['k'], data['l'], data['m']), (1, 1, [3]))
        self.assertEqual(data['compact'], '1:3,3')

    def test_reject(self):
        """Test odrzucenia."""
        data = self.client.get(self.url, {'poly': 't+t^2'}).json()
        self.assertFalse(data['accepted'])
        self.assertEqual(data['reason'], 'SumTooSmall')

    def test_syntax_error(self):
        """Test błędnej składni."""
        response = self.client.get(self.url, {'poly': '3x'})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['code'], 'SyntaxError')
