"""
Testy wielomianów WarpPoly.
"""
from django.test import SimpleTestCase

from .exceptions import DegreeExceedsC, NegativeCoefficient, NegativeDegree, ZeroPolynomial
from .laurent import WarpPoly, eval_at, gap_free


def poly(coeffs):
    return WarpPoly.from_dict(coeffs)


class WarpPolyTests(SimpleTestCase):
    """Testy dla WarpPoly."""

    def test_rendering(self):
        """Test kanonicznego zapisu."""
        self.assertEqual(str(poly({1: 3, 2: 3})), '3t+3t^2')
        self.assertEqual(str(poly({0: 1, 1: 2, 2: 2, 3: 1})), '1+2t+2t^2+t^3')
        self.assertEqual(str(WarpPoly.monomial(3, 2)), '2t^3')
        self.assertEqual(str(WarpPoly.one()), '1')
        self.assertEqual(str(WarpPoly()), '0')

    def test_zero_coefficients_dropped(self):
        """Test pomijania zerowych współczynników."""
        self.assertEqual(poly({0: 1, 1: 2, 2: 0}), poly({0: 1, 1: 2}))
        self.assertTrue(poly({4: 0}).is_zero)

    def test_invalid_terms(self):
        """Test ujemnych stopni i współczynników."""
        with self.assertRaises(NegativeDegree):
            poly({-1: 1})
        with self.assertRaises(NegativeCoefficient):
            poly({0: -1})

    def test_from_degrees(self):
        """Test budowania z etykiet krawędzi."""
        self.assertEqual(WarpPoly.from_degrees([2, 1, 2, 1]), poly({1: 2, 2: 2}))

    def test_degrees_and_span(self):
        """Test stopni i rozpiętości."""
        p = poly({1: 3, 2: 4, 3: 1})
        self.assertEqual((p.ldeg, p.udeg, p.span), (1, 3, 2))
        self.assertEqual(p.coefficient(2), 4)
        self.assertEqual(p.coefficient(7), 0)

    def test_zero_has_no_degree(self):
        """Test stopnia wielomianu zerowego."""
        with self.assertRaises(ZeroPolynomial):
            WarpPoly().ldeg
        with self.assertRaises(ZeroPolynomial):
            WarpPoly().span

    def test_sum(self):
        """Test dodawania."""
        self.assertEqual(poly({0: 1, 1: 1}) + WarpPoly.monomial(1), poly({0: 1, 1: 2}))

    def test_shifts(self):
        """Test mnożenia przez t^k i t^-k."""
        self.assertEqual(poly({0: 1, 1: 1}).shift(2), poly({2: 1, 3: 1}))
        self.assertEqual(poly({1: 1, 2: 1}).shift_down(1), poly({0: 1, 1: 1}))
        with self.assertRaises(NegativeDegree):
            poly({0: 1}).shift(-1)
        with self.assertRaises(NegativeDegree):
            poly({0: 1, 1: 1}).shift_down(1)

    def test_reflect(self):
        """Test odbicia t^c p(1/t)."""
        self.assertEqual(poly({0: 1, 1: 2}).reflect(2), poly({1: 2, 2: 1}))
        self.assertEqual(poly({1: 3, 2: 3}).reflect(3), poly({1: 3, 2: 3}))
        with self.assertRaises(DegreeExceedsC):
            WarpPoly.monomial(3).reflect(1)

    def test_evaluation(self):
        """Test wartości w -1, 0 i 1."""
        p = poly({1: 3, 2: 3})
        self.assertEqual(p.evaluate(-1), 0)
        self.assertEqual(p.evaluate(1), 6)
        self.assertEqual(p.evaluate(0), 0)
        self.assertEqual(eval_at(WarpPoly.one(), 0), 1)

    def test_gap_free(self):
        """Test braku luk."""
        self.assertTrue(poly({1: 3, 2: 3}).is_gap_free())
        self.assertFalse(gap_free(poly({0: 1, 2: 1})))
        self.assertEqual(poly({0: 1, 2: 1}).coefficient_list(), [1, 0, 1])

    def test_odd_even_sums(self):
        """Test sum współczynników przy potęgach nieparzystych i parzystych."""
        p = poly({0: 1, 1: 2, 2: 2, 3: 1})
        self.assertEqual((p.odd_sum(), p.even_sum()), (3, 3))
