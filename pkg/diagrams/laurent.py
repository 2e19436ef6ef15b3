"""
Polynomials with non-negative degrees and positive coefficients.

WarpPoly is the value type of every warping polynomial. It only implements
what the warping computations need: evaluation, degree bookkeeping, sums,
shifts by t^k and the t^c * p(1/t) reflection.
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .exceptions import DegreeExceedsC, NegativeCoefficient, NegativeDegree, ZeroPolynomial


@dataclass(frozen=True)
class WarpPoly:
    """Sorted ``(degree, coefficient)`` pairs; zero coefficients are never stored."""
    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs):
        for degree, coefficient in coeffs.items():
            if degree < 0:
                raise NegativeDegree(f"degree {degree} is negative")
            if coefficient < 0:
                raise NegativeCoefficient(f"coefficient {coefficient} at degree {degree} is negative")
        return cls(tuple(sorted((d, c) for d, c in coeffs.items() if c)))

    @classmethod
    def from_degrees(cls, degrees):
        """One term t^d for every d in ``degrees`` (the labels of a diagram)."""
        return cls.from_dict(Counter(degrees))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls.from_dict({degree: coefficient})

    @classmethod
    def one(cls):
        return cls.monomial(0)

    @cached_property
    def coeffs(self):
        return dict(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, degree):
        return self.coeffs.get(degree, 0)

    def evaluate(self, x):
        return sum(c * x ** d for d, c in self.terms)

    def _require_nonzero(self):
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no degree")

    @property
    def ldeg(self):
        self._require_nonzero()
        return self.terms[0][0]

    @property
    def udeg(self):
        self._require_nonzero()
        return self.terms[-1][0]

    @property
    def span(self):
        return self.udeg - self.ldeg

    def __add__(self, other):
        total = Counter(self.coeffs)
        total.update(other.coeffs)
        return WarpPoly.from_dict(total)

    def shift(self, k):
        """Multiply by t^k, k >= 0."""
        if k < 0:
            raise NegativeDegree(f"shift by {k}; use shift_down")
        return WarpPoly(tuple((d + k, c) for d, c in self.terms))

    def shift_down(self, k):
        """Multiply by t^-k; legal only when every degree stays >= 0."""
        if not self.is_zero and self.ldeg < k:
            raise NegativeDegree(f"t^-{k} * p leaves negative degrees (ldeg {self.ldeg})")
        return WarpPoly(tuple((d - k, c) for d, c in self.terms))

    def reflect(self, c):
        """t^c * p(1/t)."""
        if not self.is_zero and self.udeg > c:
            raise DegreeExceedsC(f"upper degree {self.udeg} exceeds c = {c}")
        return WarpPoly(tuple(sorted((c - d, coef) for d, coef in self.terms)))

    def is_gap_free(self):
        self._require_nonzero()
        return len(self.terms) == self.span + 1

    def odd_sum(self):
        return sum(c for d, c in self.terms if d % 2)

    def even_sum(self):
        return sum(c for d, c in self.terms if not d % 2)

    def coefficient_list(self):
        """Coefficients from ldeg to udeg, zeros included."""
        self._require_nonzero()
        return [self.coefficient(d) for d in range(self.ldeg, self.udeg + 1)]

    def __str__(self):
        if self.is_zero:
            return '0'
        return '+'.join(_render_term(d, c) for d, c in self.terms)


def _render_term(degree, coefficient):
    if degree == 0:
        return str(coefficient)
    prefix = '' if coefficient == 1 else str(coefficient)
    power = '' if degree == 1 else f"^{degree}"
    return f"{prefix}t{power}"


def eval_at(p, x):
    return p.evaluate(x)


def gap_free(p):
    return p.is_gap_free()
