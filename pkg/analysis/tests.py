"""
Testy widoku weryfikacji i zapisu raportów.
"""
import json

from django.test import Client, TestCase
from django.urls import reverse

from warping_lab.models import VerificationRun

from .search import PropertyReport, Violation, save_report_to_db


class VerifyViewTests(TestCase):
    """Testy dla widoku verify."""

    def setUp(self):
        self.client = Client()
        self.url = reverse('analysis:verify')

    def post(self, body):
        return self.client.post(self.url, data=json.dumps(body), content_type='application/json')

    def test_verify_stores_run(self):
        """Test uruchomienia weryfikacji i zapisu do bazy."""
        response = self.post({'max_crossings': 2, 'pair_max_crossings': 1})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['status'], 'success')
        self.assertEqual(data['report']['violation_count'], 0)
        run = VerificationRun.objects.get(id=data['run_id'])
        self.assertEqual(run.max_crossings, 2)
        self.assertEqual(run.pair_max_crossings, 1)
        self.assertEqual(run.diagrams_checked, 15)
        self.assertEqual(run.pairs_checked, 4)
        self.assertEqual(run.status, VerificationRun.Status.PASSED)

    def test_bound_exceeded(self):
        """Test przekroczenia limitu enumeracji."""
        response = self.post({'max_crossings': 9})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['code'], 'BoundExceeded')
        self.assertFalse(VerificationRun.objects.exists())

    def test_bad_body(self):
        """Test niepoprawnego ciała żądania."""
        response = self.client.post(self.url, data='not json', content_type='application/json')
        self.assertEqual(response.status_code, 400)
        response = self.post({'max_crossings': 'many'})
        self.assertEqual(response.status_code, 400)

    def test_get_not_allowed(self):
        """Test metody GET."""
        self.assertEqual(self.client.get(self.url).status_code, 405)


class SaveReportTests(TestCase):
    """Testy zapisu raportu do bazy."""

    def test_failed_report(self):
        """Test zapisu raportu z naruszeniami."""
        report = PropertyReport((0, 1), diagrams_checked=3,
                                violations=[Violation('gap_free', 'O1 U1', 'detail')])
        run = save_report_to_db(report, 0.5, 1, 1)
        self.assertEqual(run.status, VerificationRun.Status.FAILED)
        self.assertEqual(run.violation_count, 1)
        self.assertEqual(run.report['violations'][0]['code'], 'O1 U1')
