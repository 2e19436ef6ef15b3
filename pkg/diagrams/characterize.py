"""
Which polynomials are warping polynomials, and diagrams realizing them.

A polynomial f is the warping polynomial of a knot diagram iff

    f = m_0 t^k + (m_0 + m_1) t^(k+1) + ... + (m_(l-2) + m_(l-1)) t^(k+l-1) + m_(l-1) t^(k+l)

with k, l >= 0, every m_i >= 1 and m_0 + ... + m_(l-1) >= k + l. For l = 0 the
sum is vacuous and the constraint forces f = 1.

recognize() reads (k, l, m) off a polynomial; witness() builds a diagram for
an accepted form from a one-bridge diagram plus kinks and re-checks the result.
"""
import logging
from dataclasses import dataclass
from functools import cache

from django.db import models

from .diagram_core import GaussDiagram, Pass, Strand
from .exceptions import InvalidCharForm, NonPositiveL, VerificationFailed
from .laurent import WarpPoly
from .transform import find_edge_with_label, insert_kink_over_first, insert_kink_under_first
from .warping import polynomial

logger = logging.getLogger(__name__)


class RejectReason(models.TextChoices):
    ZERO_POLYNOMIAL = 'ZeroPolynomial', 'Zero polynomial'
    GAP_IN_COEFFICIENTS = 'GapInCoefficients', 'Gap in coefficients'
    BAD_ENDS = 'BadEnds', 'Coefficients do not split into m_i >= 1'
    SUM_TOO_SMALL = 'SumTooSmall', 'm_0 + ... + m_(l-1) < k + l'
    NON_UNIT_SPAN_ZERO = 'NonUnitSpanZero', 'Span 0 but not equal to 1'


@dataclass(frozen=True)
class CharForm:
    k: int
    l: int
    m: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise InvalidCharForm(f"k = {self.k} and l = {self.l} must be non-negative")
        if len(self.m) != self.l:
            raise InvalidCharForm(f"expected {self.l} values m_i, got {len(self.m)}")
        if any(mi < 1 for mi in self.m):
            raise InvalidCharForm(f"every m_i must be >= 1: {self.m}")
        if sum(self.m) < self.k + self.l:
            raise InvalidCharForm(f"sum of m_i = {sum(self.m)} is below k + l = {self.k + self.l}")
        if self.l == 0 and self.k != 0:
            raise InvalidCharForm("a span-0 form must have k = 0")

    def encode(self):
        """The polynomial this form describes."""
        if self.l == 0:
            return WarpPoly.one()
        coeffs = {}
        for i, mi in enumerate(self.m):
            coeffs[self.k + i] = coeffs.get(self.k + i, 0) + mi
            coeffs[self.k + i + 1] = coeffs.get(self.k + i + 1, 0) + mi
        return WarpPoly.from_dict(coeffs)

    def __str__(self):
        return f"k={self.k} l={self.l} m={','.join(str(mi) for mi in self.m)}"


@dataclass(frozen=True)
class Rejection:
    reason: RejectReason
    detail: str = ''

    def __str__(self):
        return self.reason.value


@cache
def f_l(l):
    """F^l(t) = 1 + 2t + 2t^2 + ... + 2t^(l-1) + t^l; F^0 = 1."""
    if l == 0:
        return WarpPoly.one()
    coeffs = {d: 2 for d in range(1, l)}
    coeffs[0] = coeffs[l] = 1
    return WarpPoly.from_dict(coeffs)


def one_bridge_diagram(l, nested=False):
    """
    "O1 O2 ... Ol U1 U2 ... Ul", or with nested=True "O1 ... Ol Ul ... U1",
    which passes evenness_lint for every l.
    """
    if l < 1:
        raise NonPositiveL(f"a one-bridge diagram needs l >= 1, got {l}")
    overs = [Pass(x, Strand.OVER) for x in range(1, l + 1)]
    unders = [Pass(x, Strand.UNDER) for x in range(1, l + 1)]
    if nested:
        unders.reverse()
    return GaussDiagram(tuple(overs + unders))


def recognize(f):
    """CharForm when f is a warping polynomial, otherwise the first failed condition."""
    if f.is_zero:
        return Rejection(RejectReason.ZERO_POLYNOMIAL)
    if not f.is_gap_free():
        return Rejection(RejectReason.GAP_IN_COEFFICIENTS, f"{f} skips a degree")

    k, l = f.ldeg, f.span
    m = []
    for j in range(l):
        mj = f.coefficient(k + j) - (m[-1] if m else 0)
        if mj < 1:
            return Rejection(RejectReason.BAD_ENDS, f"m_{j} would be {mj}")
        m.append(mj)
    if l and f.coefficient(k + l) != m[-1]:
        return Rejection(
            RejectReason.BAD_ENDS,
            f"top coefficient {f.coefficient(k + l)} differs from m_{l - 1} = {m[-1]}",
        )
    if sum(m) < k + l:
        return Rejection(RejectReason.SUM_TOO_SMALL, f"sum of m_i = {sum(m)} < k + l = {k + l}")
    if l == 0 and f.coefficient(k) != 1:
        return Rejection(RejectReason.NON_UNIT_SPAN_ZERO, f"{f} has span 0")
    return CharForm(k, l, tuple(m))


def split_multiplicities(form):
    """
    Split every m_i into m_i' + m_i'' + 1 with sum of m_i' equal to k, greedily
    in ascending i.
    """
    remaining = form.k
    primes, double_primes = [], []
    for mi in form.m:
        taken = min(mi - 1, remaining)
        remaining -= taken
        primes.append(taken)
        double_primes.append(mi - 1 - taken)
    return primes, double_primes


def witness(form):
    """
    A diagram whose warping polynomial is form.encode(), verified.

    Starting from the one-bridge diagram with l crossings, k under-first kinks
    go in first: the a-th one (a kinks already done) for group i targets an
    edge labeled a + i + 1, so that the k - a - 1 later ones lift its
    contribution to t^(k+i)(1 + t). Then the over-first kinks of group i go to
    edges labeled k + i.
    """
    if form.l == 0:
        return GaussDiagram()

    primes, double_primes = split_multiplicities(form)
    diagram = one_bridge_diagram(form.l)
    done = 0
    for i, count in enumerate(primes):
        for _ in range(count):
            diagram = insert_kink_under_first(diagram, find_edge_with_label(diagram, done + i + 1))
            done += 1
    for i, count in enumerate(double_primes):
        for _ in range(count):
            diagram = insert_kink_over_first(diagram, find_edge_with_label(diagram, form.k + i))

    expected, actual = form.encode(), polynomial(diagram)
    if actual != expected:
        logger.error(f"Witness for {form} has W = {actual}, expected {expected}")
        raise VerificationFailed(f"witness for {form} has W = {actual}, expected {expected}")
    logger.info(f"Witness for {form}: {diagram.crossing_count} crossings")
    return diagram

