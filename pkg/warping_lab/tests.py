"""
Testy jednostkowe dla aplikacji warping_lab.
"""
from django.test import Client, TestCase
from django.urls import reverse

from .models import VerificationRun


def make_run(**kwargs):
    fields = {
        'max_crossings': 3,
        'pair_max_crossings': 1,
        'diagrams_checked': 135,
        'pairs_checked': 4,
        'duration_seconds': 1.5,
        'report': {'violation_count': 0, 'violations': []},
    }
    fields.update(kwargs)
    return VerificationRun.objects.create(**fields)


class VerificationRunModelTests(TestCase):
    """Testy dla modelu VerificationRun."""

    def setUp(self):
        self.run = make_run()

    def test_run_creation(self):
        """Test tworzenia uruchomienia."""
        self.assertEqual(self.run.max_crossings, 3)
        self.assertEqual(self.run.diagrams_checked, 135)
        self.assertEqual(self.run.report['violation_count'], 0)

    def test_default_status(self):
        """Test domyślnego statusu."""
        self.assertEqual(self.run.status, VerificationRun.Status.PASSED)
        self.assertEqual(self.run.get_status_display(), 'Passed')

    def test_str_representation(self):
        """Test reprezentacji tekstowej."""
        self.assertEqual(str(self.run), f"Run {self.run.id}: c <= 3, 0 violations (Passed)")

    def test_ordering(self):
        """Test sortowania (od najnowszych)."""
        newer = make_run(max_crossings=4)
        self.assertEqual(VerificationRun.objects.all()[0], newer)


class RunViewTests(TestCase):
    """Testy widoków listy i szczegółów uruchomień."""

    def setUp(self):
        self.client = Client()
        self.passed = make_run()
        self.failed = make_run(status=VerificationRun.Status.FAILED, violation_count=2)

    def test_run_list(self):
        """Test listy uruchomień."""
        response = self.client.get(reverse('run_list'))
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['total_runs'], 2)
        self.assertEqual(data['failed_runs'], 1)
        self.assertEqual(data['runs'][0]['id'], self.failed.id)

    def test_run_list_limit(self):
        """Test parametru limit."""
        data = self.client.get(reverse('run_list'), {'limit': 1}).json()
        self.assertEqual(len(data['runs']), 1)
        response = self.client.get(reverse('run_list'), {'limit': 'x'})
        self.assertEqual(response.status_code, 400)

    def test_run_detail(self):
        """Test szczegółów uruchomienia."""
        response = self.client.get(reverse('run_detail', args=[self.failed.id]))
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['status_display'], 'Failed')
        self.assertEqual(data['violation_count'], 2)
        self.assertIn('report', data)

    def test_run_detail_404(self):
        """Test nieistniejącego uruchomienia."""
        response = self.client.get(reverse('run_detail', args=[9999]))
        self.assertEqual(response.status_code, 404)
