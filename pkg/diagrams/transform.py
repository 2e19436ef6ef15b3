"""
Kink insertions (oriented Reidemeister I) and connected sums.

Both operations have exact effects on the warping polynomial:

    over-first kink at an edge labeled i:   W + t^i (1 + t)
    under-first kink at an edge labeled i:  t W + t^i (1 + t)
    D # E at edges labeled i (in D), j (in E):  t^j W_D + t^i W_E

Fresh crossing ids are max existing id + 1, + 2, ... so outputs are
deterministic.
"""
from dataclasses import replace

from .diagram_core import GaussDiagram, Pass, Strand
from .exceptions import EmptySummand, NoSuchLabel
from .warping import check_edge, labeling


def _insert_after_pass(diagram, j, new_passes):
    passes = diagram.passes
    cut = j + 1 if passes else 0
    return GaussDiagram(passes[:cut] + tuple(new_passes) + passes[cut:])


def insert_kink_over_first(diagram, j):
    """Omega 1a+: insert [Over x, Under x] right after pass j."""
    check_edge(diagram, j)
    x = diagram.next_crossing_id()
    return _insert_after_pass(diagram, j, (Pass(x, Strand.OVER), Pass(x, Strand.UNDER)))


def insert_kink_under_first(diagram, j):
    """Omega 1b+: insert [Under x, Over x] right after pass j."""
    check_edge(diagram, j)
    x = diagram.next_crossing_id()
    return _insert_after_pass(diagram, j, (Pass(x, Strand.UNDER), Pass(x, Strand.OVER)))


KINKS = {
    '1a': insert_kink_over_first,
    '1b': insert_kink_under_first,
}


def connected_sum(d, jd, e, je):
    """
    Splice E into D: passes of D up to pass jd, then E read from pass je + 1
    with fresh crossing ids, then the rest of D.
    """
    if not d.crossing_count or not e.crossing_count:
        raise EmptySummand("both summands need at least one crossing")
    check_edge(d, jd)
    check_edge(e, je)

    n = len(e.passes)
    rotated = [e.passes[(je + 1 + step) % n] for step in range(n)]
    offset = d.next_crossing_id()
    fresh = {}
    for p in rotated:
        fresh.setdefault(p.crossing, offset + len(fresh))
    block = tuple(replace(p, crossing=fresh[p.crossing]) for p in rotated)
    return GaussDiagram(d.passes[:jd + 1] + block + d.passes[jd + 1:])


def find_edge_with_label(diagram, target, labels=None):
    """Lowest edge index whose warping degree equals target."""
    if labels is None:
        labels = labeling(diagram)
    for j, label in enumerate(labels.labels):
        if label == target:
            return j
    raise NoSuchLabel(f"no edge of {diagram or 'the empty diagram'} is labeled {target}")


def connected_sum_span_equal(d, jd, e, je):
    """
    Whether spn(D # E) = max(spn D, spn E) for this splice; with spn D >= spn E
    that happens iff min d(D_b) - min d(E_b) <= i - j <= max d(D_b) - max d(E_b).
    """
    check_edge(d, jd)
    check_edge(e, je)
    ld, le = labeling(d), labeling(e)
    return span_equality_criterion(ld, ld[jd], le, le[je])


def span_equality_criterion(ld, i, le, j):
    """The criterion on two labelings and the labels i (in D), j (in E) of the splice edges."""
    if ld.span < le.span:
        ld, le, i, j = le, ld, j, i
    return ld.minimum - le.minimum <= i - j <= ld.maximum - le.maximum


def balanced_connected_sum(d, e):
    """
    Connected sum whose span is max(spn D, spn E).

    Returns (diagram, jd, je) for the lowest edge pair meeting the
    span-equality criterion.
    """
    if not d.crossing_count or not e.crossing_count:
        raise EmptySummand("both summands need at least one crossing")
    ld, le = labeling(d), labeling(e)
    for jd in range(d.edge_count):
        for je in range(e.edge_count):
            if span_equality_criterion(ld, ld[jd], le, le[je]):
                return connected_sum(d, jd, e, je), jd, je
    # unreachable: the edges labeled min d(D_b) and min d(E_b) always qualify
    raise NoSuchLabel("no balanced splice found")
