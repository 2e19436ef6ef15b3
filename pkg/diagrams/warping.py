"""
Warping degrees, the warping degree labeling and the warping polynomial.

The warping degree of a base point counts the crossings first met as an
under-crossing while walking from it. Crossing an Over pass raises the degree
of the next edge by one, an Under pass lowers it by one, so the whole labeling
follows from one scan plus propagation.
"""
import logging
from dataclasses import dataclass

from .diagram_core import Strand
from .exceptions import EdgeOutOfRange, InconsistentClosure
from .laurent import WarpPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WarpLabeling:
    labels: tuple[int, ...]

    @property
    def minimum(self):
        return min(self.labels)

    @property
    def maximum(self):
        return max(self.labels)

    @property
    def span(self):
        return self.maximum - self.minimum

    def polynomial(self):
        return WarpPoly.from_degrees(self.labels)

    def __getitem__(self, j):
        return self.labels[j]

    def __len__(self):
        return len(self.labels)


def check_edge(diagram, j):
    if not 0 <= j < diagram.edge_count:
        raise EdgeOutOfRange(f"edge {j} is outside [0, {diagram.edge_count})")


def degree_at_base(diagram, j):
    """Brute scan from a base point on edge j: passes j+1, j+2, ..., j."""
    check_edge(diagram, j)
    passes = diagram.passes
    n = len(passes)
    seen = set()
    degree = 0
    for step in range(1, n + 1):
        p = passes[(j + step) % n]
        if p.crossing not in seen:
            seen.add(p.crossing)
            if p.strand is Strand.UNDER:
                degree += 1
    return degree


def labeling(diagram):
    """Warping degree of every edge."""
    passes = diagram.passes
    n = len(passes)
    if not n:
        return WarpLabeling((0,))

    start = degree_at_base(diagram, n - 1)
    labels = [0] * n
    current = start
    for j, p in enumerate(passes):
        current += 1 if p.is_over else -1
        labels[j] = current
    if labels[-1] != start:
        logger.error(f"Labeling closure failed for {diagram}")
        raise InconsistentClosure(
            f"labeling does not close up: {labels[-1]} != {start} for {diagram}"
        )
    return WarpLabeling(tuple(labels))


def brute_labeling(diagram):
    """O(c^2) labeling by scanning from every edge; test oracle for labeling()."""
    return WarpLabeling(tuple(degree_at_base(diagram, j) for j in range(diagram.edge_count)))


def polynomial(diagram):
    return labeling(diagram).polynomial()


def warping_degree(diagram):
    return labeling(diagram).minimum


def max_degree(diagram):
    return labeling(diagram).maximum


def diagram_span(diagram):
    return labeling(diagram).span


def is_monotone(diagram):
    return warping_degree(diagram) == 0


def fg_decomposition(diagram, x, labels=None):
    """
    Split W_D at crossing x: f sums the edges walked from the Over pass of x
    to its Under pass, g the rest.
    """
    over, under = diagram.crossing_positions(x)
    if labels is None:
        labels = labeling(diagram)
    n = len(diagram.passes)
    f_length = (under - over) % n
    # krawędzie od przejścia nad x do przejścia pod x
    walk = [labels[(over + step) % n] for step in range(n)]
    f_degrees, g_degrees = walk[:f_length], walk[f_length:]
    return WarpPoly.from_degrees(f_degrees), WarpPoly.from_degrees(g_degrees)


def predict_crossing_change(diagram, x, labels=None):
    """W of the diagram after a crossing change at x: t*g + t^-1*f."""
    f, g = fg_decomposition(diagram, x, labels)
    return g.shift(1) + f.shift_down(1)


def crossing_form(diagram, labels=None):
    """
    The (k, l, m) decomposition read off the diagram: k = d(D), l = spn(D) and
    m_i counts the Over passes entered from an edge labeled d(D) + i.
    """
    if labels is None:
        labels = labeling(diagram)
    k = labels.minimum
    m = [0] * labels.span
    for j, p in enumerate(diagram.passes):
        if p.is_over:
            m[labels[j - 1] - k] += 1
    return k, labels.span, tuple(m)


def reversed_edge(diagram, j):
    """Index of edge j of D inside the reversed diagram."""
    n = diagram.edge_count
    return (n - 2 - j) % n
